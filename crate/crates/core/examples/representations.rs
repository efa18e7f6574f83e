//! Explicit representations, the reducibility classifier and semisimplification.
//!
//! ```text
//! cargo run --example representations
//! ```

use torus_charvar::matrix::fmt_complex;
use torus_charvar::modular::KnotType;
use torus_charvar::reps::{
    build_irreducible, build_reducible, character_eval, classify_reducibility, relation_defect,
    semisimplify, IrredParam, Word,
};
use torus_charvar::{Complex, Tolerances};

fn main() -> torus_charvar::Result<()> {
    let tol = Tolerances::default();
    let kt = KnotType::new(2, 3)?;
    let comp = kt.irr(1, 1)?;

    let red = build_reducible(kt, Complex::from_polar(1.0, 0.4))?;
    println!("reducible pair\n{red}");
    println!("verdict {:?}", classify_reducibility(&red, &tol)?);
    println!("s = {}\n", fmt_complex(semisimplify(&red, &tol)?));

    for r in [0.0, 0.5, 1.0, 2.0] {
        let p = build_irreducible(kt, &IrredParam::new(kt, comp, Complex::new(r, 0.0)))?;
        let verdict = classify_reducibility(&p, &tol)?;
        print!("r = {r}: defect {:.1e}, {verdict:?}", relation_defect(&p));
        if verdict.is_reducible() {
            print!(", s = {:.6}", semisimplify(&p, &tol)?.re);
        }
        println!();
    }

    let p = build_irreducible(kt, &IrredParam::new(kt, comp, Complex::new(2.0, 0.0)))?;
    for w in ["x", "y", "xy", "xYXy"] {
        let word: Word = w.parse()?;
        println!("tr rho({w}) = {}", fmt_complex(character_eval(&p, &word)));
    }
    Ok(())
}
