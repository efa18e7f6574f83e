//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! I/O failure, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::matrix::{fmt_complex, random_unimodular, Complex};
use crate::modular::{ComponentId, KnotType};
use crate::reps::{
    classify_reducibility, double_ratio, semisimplify, IrredParam, ReducibilityVerdict,
};
use crate::tool::json::emit_json;
use crate::tool::suite::{run_suite, sample_pair, SuiteTolerances};
use crate::tool::svg::{emit_svg, FigureSpec};
use crate::variety::{
    classify_point, enumerate_variety, psi_irr, psi_of_pair, psi_red, CharPoint, ComponentEntry,
};
use crate::{Error, Tolerances};

#[derive(Debug, Parser)]
#[command(
    name = "torus-charvar",
    version,
    about = "SL(2,C) character varieties of torus knot groups <x, y | x^m = y^n>"
)]
struct Cli {
    /// Tolerance override: membership for `classify`, agreement checks for `verify`
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Knot {
    m: i64,
    n: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the components and where the irreducible lines meet the reducible one
    Components {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        json: bool,
    },
    /// Trace coordinates of a point on the reducible line or an irreducible line
    Psi {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, num_args = 2, value_names = ["T_RE", "T_IM"], allow_negative_numbers = true,
              conflicts_with = "irr", required_unless_present = "irr")]
        red: Option<Vec<f64>>,
        #[arg(long, num_args = 4, value_names = ["K", "KP", "R_RE", "R_IM"], allow_negative_numbers = true)]
        irr: Option<Vec<f64>>,
    },
    /// Components containing the point (A, B, C) of C^3
    Classify {
        #[command(flatten)]
        knot: Knot,
        #[arg(allow_negative_numbers = true, num_args = 6, value_names = ["A_RE", "A_IM", "B_RE", "B_IM", "C_RE", "C_IM"])]
        coords: Vec<f64>,
    },
    /// Run the randomized verification suite
    Verify {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, default_value_t = 100)]
        samples: u64,
    },
    /// Write the incidence diagram as SVG
    Figure {
        #[command(flatten)]
        knot: Knot,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print a random conjugated representation and what the library recovers from it
    Sample {
        #[command(flatten)]
        knot: Knot,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Entry point used by the binary.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`cli_main`] with explicit output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn knot(k: &Knot) -> Result<KnotType, Failure> {
    Ok(KnotType::new(k.m, k.n)?)
}

fn io(e: std::io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let mut tol = Tolerances::default();
    match &cli.command {
        Command::Components { knot: k, json } => {
            let v = enumerate_variety(knot(k)?)?;
            if *json {
                writeln!(out, "{}", emit_json(&v)).map_err(io)?;
            } else {
                write_components(out, &v).map_err(io)?;
            }
        }
        Command::Psi { knot: k, red, irr } => {
            let kt = knot(k)?;
            let point = match (red, irr) {
                (Some(t), _) => psi_red(kt, c(t[0], t[1]))?,
                (None, Some(v)) => {
                    let (k, kp) = (as_int(v[0])?, as_int(v[1])?);
                    let comp = kt.irr(k, kp)?;
                    psi_irr(&IrredParam::new(kt, comp, c(v[2], v[3])))
                }
                (None, None) => {
                    return Err(Failure::Usage("one of --red or --irr is required".into()))
                }
            };
            writeln!(out, "{point}").map_err(io)?;
        }
        Command::Classify { knot: k, coords } => {
            let kt = knot(k)?;
            if let Some(t) = cli.tol {
                tol.membership = t;
            }
            let q = CharPoint::new(
                c(coords[0], coords[1]),
                c(coords[2], coords[3]),
                c(coords[4], coords[5]),
            );
            let matches = classify_point(kt, &q, &tol);
            if matches.is_empty() {
                writeln!(out, "no component contains {q}").map_err(io)?;
            }
            for m in matches {
                let name = match m.component {
                    ComponentId::Red => "s",
                    ComponentId::Irr(_) => "r",
                };
                writeln!(out, "{} {name}={}", m.component, fmt_complex(m.param)).map_err(io)?;
            }
        }
        Command::Verify { knot: k, samples } => {
            let kt = knot(k)?;
            if *samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let tols = cli.tol.map(SuiteTolerances::uniform).unwrap_or_default();
            let report = run_suite(kt, *samples, cli.seed, &tols)?;
            writeln!(out, "{report}").map_err(io)?;
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Figure { knot: k, output } => {
            let v = enumerate_variety(knot(k)?)?;
            let svg = emit_svg(&v, &FigureSpec::default())?;
            fs::write(output, svg).map_err(io)?;
            writeln!(out, "wrote {}", output.display()).map_err(io)?;
        }
        Command::Sample { knot: k } => {
            let kt = knot(k)?;
            if let Some(t) = cli.tol {
                tol.membership = t;
            }
            write_sample(out, kt, cli.seed, &tol)?;
        }
    }
    Ok(())
}

fn as_int(x: f64) -> Result<i64, Failure> {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        Ok(x as i64)
    } else {
        Err(Failure::Usage(format!("expected an integer, got {x}")))
    }
}

fn write_components(
    out: &mut dyn Write,
    v: &crate::variety::VarietyDescription,
) -> std::io::Result<()> {
    writeln!(
        out,
        "knot {}: {} irreducible line(s), {} intersection point(s)",
        v.kt, v.counts.irr_lines, v.counts.intersection_points
    )?;
    for entry in &v.components {
        match entry {
            ComponentEntry::Red => writeln!(out, "Red")?,
            ComponentEntry::Irr(line) => {
                writeln!(
                    out,
                    "Irr{}  lambda={}  mu={}",
                    line.component,
                    fmt_complex(line.lambda),
                    fmt_complex(line.mu)
                )?;
                for r in &line.intersections {
                    writeln!(
                        out,
                        "  {}: l={} (folded {})  s={:.12}  psi={}",
                        r.endpoint.name(),
                        r.index.raw(),
                        r.index.folded(),
                        r.s,
                        r.point
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn write_sample(
    out: &mut dyn Write,
    kt: KnotType,
    seed: u64,
    tol: &Tolerances,
) -> Result<(), Failure> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let pair = sample_pair(kt, &mut rng)?;
    let p = random_unimodular(&mut rng)?;
    let pair = pair.conjugate(&p);
    let verdict = classify_reducibility(&pair, tol)?;
    let psi = psi_of_pair(&pair);
    let mut lines = vec![format!("knot {kt} seed {seed}"), pair.to_string()];
    match verdict {
        ReducibilityVerdict::Irreducible => {
            let d = double_ratio(&pair, tol)?;
            lines.push(format!(
                "irreducible: component Irr{} r={}",
                d.component,
                fmt_complex(d.r)
            ));
        }
        ReducibilityVerdict::Reducible { reason, .. } => {
            let s = semisimplify(&pair, tol)?;
            lines.push(format!("reducible ({reason:?}): s={}", fmt_complex(s)));
        }
    }
    lines.push(format!("psi = {psi}"));
    for m in classify_point(kt, &psi, tol) {
        lines.push(format!("on {} param={}", m.component, fmt_complex(m.param)));
    }
    for l in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["torus-charvar"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn components_listing() {
        let (code, out, _) = run_str(&["components", "2", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("Red"));
        assert!(out.contains("Irr(1,1)"));
        assert!(out.contains("s=1.732050807569"));
        assert!(out.contains("s=-1.732050807569"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["components", "4", "6"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["psi", "2", "3"]).0, 2);
        assert_eq!(
            run_str(&["psi", "2", "3", "--irr", "1", "2", "0", "0"]).0,
            2
        );
        assert_eq!(run_str(&["verify", "2", "3", "--samples", "0"]).0, 2);
    }

    #[test]
    fn psi_subcommand() {
        let (code, out, _) = run_str(&["psi", "2", "3", "--irr", "1", "1", "2", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("-5.196152422707"), "{out}");
        let (code, out, _) = run_str(&["psi", "2", "3", "--red", "-1", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("-2.0"), "{out}");
    }

    #[test]
    fn classify_nodal_point() {
        let (code, out, _) = run_str(&[
            "classify",
            "2",
            "3",
            "0",
            "0",
            "1",
            "0",
            "1.7320508",
            "0",
            "--tol",
            "1e-6",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 2, "{out}");
        assert!(lines[0].starts_with("Red s=-1.7320508"));
        assert!(lines[1].starts_with("Irr(1,1) r="));
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_str(&["verify", "2", "3", "--samples", "20"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["verify", "2", "3", "--samples", "5", "--tol", "0"]);
        assert_eq!(code, 1, "{out}");
        assert!(out.contains("FAIL"));
    }

    #[test]
    fn sample_is_deterministic() {
        let a = run_str(&["sample", "3", "5", "--seed", "4"]);
        let b = run_str(&["sample", "3", "5", "--seed", "4"]);
        assert_eq!(a.0, 0, "{}", a.2);
        assert_eq!(a, b);
    }
}
