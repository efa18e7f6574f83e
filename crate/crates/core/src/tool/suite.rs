//! Randomized verification of the library's invariants for one knot type.
//!
//! Each sample of each check draws from its own ChaCha stream, fixed by the
//! seed, the check number and the sample index, so samples are independent
//! and can run in parallel without changing the report.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::matrix::{complex_gaussian, random_conjugator, random_unimodular, Complex, UniMat, ONE};
use crate::modular::{enumerate_components, ComponentId, IrrComponent, KnotType};
use crate::reps::{
    build_irreducible, build_reducible, character_eval, double_ratio, relation_defect,
    semisimplify, IrredParam, Letter, RepPair, Word,
};
use crate::variety::{
    classify_point, enumerate_variety, psi_irr, psi_of_pair, psi_red, tangent_red,
    VarietyDescription,
};
use crate::{Result, Tolerances};

/// Pass thresholds for each check's worst defect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteTolerances {
    pub constructor: f64,
    pub conjugation: f64,
    pub double_ratio: f64,
    pub endpoint: f64,
    pub classification: f64,
    /// Bound on `1 / min(|∂a/∂s|, |∂b/∂s|)` at intersection points.
    pub nodal: f64,
}

impl Default for SuiteTolerances {
    fn default() -> Self {
        SuiteTolerances {
            constructor: 1e-10,
            conjugation: 1e-8,
            double_ratio: 1e-8,
            endpoint: 1e-9,
            classification: 1e-8,
            nodal: 1e6,
        }
    }
}

impl SuiteTolerances {
    /// Replaces every agreement tolerance by `tol`; the nodal bound is a
    /// magnitude threshold and stays as it is.
    pub fn uniform(tol: f64) -> Self {
        SuiteTolerances {
            constructor: tol,
            conjugation: tol,
            double_ratio: tol,
            endpoint: tol,
            classification: tol,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub samples: u64,
    pub worst_defect: f64,
    pub tolerance: f64,
}

impl CheckResult {
    fn new(name: &'static str, samples: u64, worst_defect: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            passed: worst_defect <= tolerance,
            samples,
            worst_defect,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub knot: KnotType,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot {} seed {}", self.knot, self.seed)?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {:<28} samples={:<7} worst={:.3e} tol={:.1e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.samples,
                c.worst_defect,
                c.tolerance
            )?;
        }
        write!(
            f,
            "{}",
            if self.all_passed() {
                "all checks passed"
            } else {
                "FAILED"
            }
        )
    }
}

/// Entry bound for the conjugators of the character-invariance check.
///
/// Characters of words are products of up to eight conjugated generators, whose
/// rounding error grows like a power of `‖P‖`; an absolute tolerance needs `P`
/// of moderate size.
pub const CONJUGATOR_MAX_ENTRY: f64 = 10.0;

/// Random conjugator with entries bounded by [`CONJUGATOR_MAX_ENTRY`].
pub fn sample_conjugator<R: Rng + ?Sized>(rng: &mut R) -> Result<UniMat> {
    random_conjugator(rng, CONJUGATOR_MAX_ENTRY)
}

/// Generator for sample `index` of check number `check`: the ChaCha key holds
/// `seed` and `check`, the stream is `index`.
pub fn sample_rng(seed: u64, index: u64, check: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&check.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

/// `t = ρe^{iθ}` with `ρ ∈ [0.9, 1.1]`, keeping `|tᵐⁿ|` moderate.
pub fn sample_t<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    Complex::from_polar(rng.gen_range(0.9..1.1), rng.gen_range(0.0..2.0 * PI))
}

/// `r = 1/2 + 3/2·g` for a standard complex Gaussian `g`, redrawn while
/// within `exclusion` of 0 or 1.
pub fn sample_r<R: Rng + ?Sized>(rng: &mut R, exclusion: f64) -> Complex {
    loop {
        let r = Complex::new(0.5, 0.0) + complex_gaussian(rng) * 1.5;
        if r.norm() > exclusion && (r - ONE).norm() > exclusion {
            return r;
        }
    }
}

pub fn sample_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = [Letter::X, Letter::XInv, Letter::Y, Letter::YInv];
    Word((0..len).map(|_| letters[rng.gen_range(0..4)]).collect())
}

fn irr_components(kt: KnotType) -> Vec<IrrComponent> {
    enumerate_components(kt)
        .into_iter()
        .filter_map(|c| match c {
            ComponentId::Irr(c) => Some(c),
            ComponentId::Red => None,
        })
        .collect()
}

/// A random representation on a uniformly chosen component.
pub fn sample_pair<R: Rng + ?Sized>(kt: KnotType, rng: &mut R) -> Result<RepPair> {
    let comps = enumerate_components(kt);
    match comps[rng.gen_range(0..comps.len())] {
        ComponentId::Red => build_reducible(kt, sample_t(rng)),
        ComponentId::Irr(c) => build_irreducible(kt, &IrredParam::new(kt, c, sample_r(rng, 1e-6))),
    }
}

fn nan_to_inf(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x
    }
}

/// Max of `defect(index)` over `0..samples`, evaluated in parallel.
fn worst_over<F>(samples: u64, defect: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    (0..samples)
        .into_par_iter()
        .map(|i| nan_to_inf(defect(i)))
        .reduce(|| 0.0, f64::max)
}

/// Runs, in order: constructor soundness, conjugation invariance,
/// double-ratio round trip, endpoint consistency, classification round trip,
/// nodal transversality and the count formulas.
pub fn run_suite(
    kt: KnotType,
    samples: u64,
    seed: u64,
    tols: &SuiteTolerances,
) -> Result<SuiteReport> {
    let variety = enumerate_variety(kt)?;
    let irr = irr_components(kt);
    let lib_tol = Tolerances::default();
    let mut checks = Vec::with_capacity(7);

    // 1
    let worst = worst_over(samples, |i| {
        let mut rng = sample_rng(seed, i, 1);
        let mut worst = relation_defect_or_inf(build_reducible(kt, sample_t(&mut rng)));
        for &c in &irr {
            let p = IrredParam::new(kt, c, sample_r(&mut rng, 1e-6));
            worst = worst.max(relation_defect_or_inf(build_irreducible(kt, &p)));
        }
        worst
    });
    checks.push(CheckResult::new(
        "constructor_soundness",
        samples * (1 + irr.len() as u64),
        worst,
        tols.constructor,
    ));

    // 2
    let worst = worst_over(samples, |i| {
        let mut rng = sample_rng(seed, i, 2);
        let (Ok(p), Ok(q)) = (sample_pair(kt, &mut rng), sample_conjugator(&mut rng)) else {
            return f64::INFINITY;
        };
        let w = sample_word(&mut rng, 8);
        let conj = p.conjugate(&q);
        let chi = (character_eval(&conj, &w) - character_eval(&p, &w)).norm();
        chi.max(psi_of_pair(&conj).dist(&psi_of_pair(&p)))
    });
    checks.push(CheckResult::new(
        "conjugation_invariance",
        samples,
        worst,
        tols.conjugation,
    ));

    // 3
    let worst = worst_over(samples, |i| {
        let mut rng = sample_rng(seed, i, 3);
        irr.iter()
            .map(|&c| {
                let r = sample_r(&mut rng, 1e-3);
                let Ok(q) = random_unimodular(&mut rng) else {
                    return f64::INFINITY;
                };
                let got = build_irreducible(kt, &IrredParam::new(kt, c, r))
                    .and_then(|p| double_ratio(&p.conjugate(&q), &lib_tol));
                match got {
                    Ok(g) if g.component == c => (g.r - r).norm(),
                    _ => f64::INFINITY,
                }
            })
            .fold(0.0, f64::max)
    });
    checks.push(CheckResult::new(
        "double_ratio_round_trip",
        samples * irr.len() as u64,
        worst,
        tols.double_ratio,
    ));

    // 4
    let (count, worst) = endpoint_defect(&variety, &lib_tol);
    checks.push(CheckResult::new(
        "endpoint_consistency",
        count,
        worst,
        tols.endpoint,
    ));

    // 5
    let worst = worst_over(samples, |i| {
        let mut rng = sample_rng(seed, i, 5);
        let t = sample_t(&mut rng);
        let mut worst = match psi_red(kt, t) {
            Ok(q) => classify_point(kt, &q, &lib_tol)
                .iter()
                .filter(|m| m.component == ComponentId::Red)
                .map(|m| (m.param - (t + t.inv())).norm())
                .fold(f64::INFINITY, f64::min),
            Err(_) => f64::INFINITY,
        };
        for &c in &irr {
            let r = sample_r(&mut rng, 0.05);
            let q = psi_irr(&IrredParam::new(kt, c, r));
            let hits: Vec<_> = classify_point(kt, &q, &lib_tol)
                .into_iter()
                .filter(|m| m.component == ComponentId::Irr(c))
                .collect();
            let err = match hits.as_slice() {
                [one] => (one.param - r).norm(),
                _ => f64::INFINITY,
            };
            worst = worst.max(err);
        }
        worst
    });
    checks.push(CheckResult::new(
        "classification_round_trip",
        samples * (1 + irr.len() as u64),
        worst,
        tols.classification,
    ));

    // 6
    let worst = variety
        .intersections()
        .map(|rec| match tangent_red(kt, rec.index.t(kt)) {
            Ok([x, y, _]) => 1.0 / x.norm().min(y.norm()),
            Err(_) => f64::INFINITY,
        })
        .fold(0.0, f64::max);
    checks.push(CheckResult::new(
        "nodal_transversality",
        variety.counts.intersection_points,
        nan_to_inf(worst),
        tols.nodal,
    ));

    // 7
    checks.push(CheckResult::new("counts", 2, count_defect(&variety), 0.0));

    Ok(SuiteReport {
        knot: kt,
        seed,
        checks,
    })
}

fn relation_defect_or_inf(p: Result<RepPair>) -> f64 {
    p.map(|p| relation_defect(&p)).unwrap_or(f64::INFINITY)
}

/// Gluing of each irreducible line to the reducible one, checked both in
/// trace coordinates and through semisimplification.
fn endpoint_defect(v: &VarietyDescription, tol: &Tolerances) -> (u64, f64) {
    let kt = v.kt;
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for rec in v.intersections() {
        count += 1;
        let p = IrredParam::new(kt, rec.component, rec.endpoint.r());
        let on_line = psi_irr(&p);
        let on_red = psi_red(kt, rec.index.t(kt)).map(|q| q.dist(&on_line));
        let semi = build_irreducible(kt, &p)
            .and_then(|pair| semisimplify(&pair, tol))
            .map(|s| (s - Complex::new(rec.s, 0.0)).norm());
        let record = rec.point.dist(&on_line);
        for d in [on_red, semi, Ok(record)] {
            worst = worst.max(nan_to_inf(d.unwrap_or(f64::INFINITY)));
        }
    }
    (count, worst)
}

fn count_defect(v: &VarietyDescription) -> f64 {
    let kt = v.kt;
    let mut folded: Vec<u64> = v.intersections().map(|r| r.index.folded()).collect();
    folded.sort_unstable();
    folded.dedup();
    let lines = v.counts.irr_lines.abs_diff(kt.irreducible_count());
    let points = v
        .counts
        .intersection_points
        .abs_diff(kt.intersection_count());
    let placement = u64::from(folded != kt.admissible_indices());
    (lines + points + placement) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_suite_passes() {
        let kt = KnotType::new(2, 3).unwrap();
        let report = run_suite(kt, 100, 7, &SuiteTolerances::default()).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 7);
        let names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(
            names,
            [
                "constructor_soundness",
                "conjugation_invariance",
                "double_ratio_round_trip",
                "endpoint_consistency",
                "classification_round_trip",
                "nodal_transversality",
                "counts"
            ]
        );
    }

    #[test]
    fn unknot_like_suite_passes() {
        let kt = KnotType::new(1, 7).unwrap();
        let report = run_suite(kt, 20, 0, &SuiteTolerances::default()).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.check("double_ratio_round_trip").unwrap().samples, 0);
    }

    #[test]
    fn suite_is_deterministic() {
        let kt = KnotType::new(3, 5).unwrap();
        let a = run_suite(kt, 50, 1, &SuiteTolerances::default()).unwrap();
        let b = run_suite(kt, 50, 1, &SuiteTolerances::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn seeds_draw_different_samples() {
        use rand::RngCore;
        let draw = |seed| {
            (0..64)
                .map(|i| sample_rng(seed, i, 3).next_u64())
                .collect::<Vec<_>>()
        };
        let (mut a, mut b) = (draw(1), draw(2));
        a.sort_unstable();
        b.sort_unstable();
        assert_ne!(a, b);
        assert_ne!(
            sample_rng(1, 0, 2).next_u64(),
            sample_rng(1, 0, 3).next_u64()
        );
    }

    #[test]
    fn impossible_tolerance_fails_and_says_so() {
        let kt = KnotType::new(2, 5).unwrap();
        let report = run_suite(kt, 10, 3, &SuiteTolerances::uniform(0.0)).unwrap();
        assert!(!report.all_passed());
        for c in &report.checks {
            assert_eq!(c.passed, c.worst_defect <= c.tolerance);
        }
    }
}
