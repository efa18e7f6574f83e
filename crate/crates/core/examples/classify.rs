//! Locating points of ℂ³ on the variety.
//!
//! ```text
//! cargo run --example classify
//! ```

use torus_charvar::matrix::fmt_complex;
use torus_charvar::modular::KnotType;
use torus_charvar::reps::IrredParam;
use torus_charvar::variety::{classify_point, psi_irr, CharPoint};
use torus_charvar::{Complex, Tolerances};

fn main() -> torus_charvar::Result<()> {
    let tol = Tolerances::default();
    let kt = KnotType::new(2, 3)?;
    let on_line = psi_irr(&IrredParam::new(kt, kt.irr(1, 1)?, Complex::new(0.25, 0.5)));
    let points = [
        ("node", CharPoint::real(0.0, 1.0, 3f64.sqrt())),
        ("reducible", CharPoint::real(2.0, 2.0, 2.0)),
        ("irreducible", on_line),
        ("off the curve", CharPoint::real(1.0, 1.0, 1.0)),
    ];
    for (name, q) in points {
        println!("{name} {q}");
        let hits = classify_point(kt, &q, &tol);
        if hits.is_empty() {
            println!("  no component");
        }
        for h in hits {
            println!("  {} param {}", h.component, fmt_complex(h.param));
        }
    }
    Ok(())
}
