//! Recovering `(k, k′, r)` from a conjugated irreducible representation.
//!
//! ```text
//! cargo run --example double_ratio
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_charvar::matrix::{fmt_complex, random_unimodular};
use torus_charvar::modular::KnotType;
use torus_charvar::reps::{build_irreducible, double_ratio, IrredParam};
use torus_charvar::{Complex, Tolerances};

fn main() -> torus_charvar::Result<()> {
    let tol = Tolerances::default();
    let kt = KnotType::new(3, 5)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (k, kp, r) in [
        (1, 1, Complex::new(0.3, -1.2)),
        (2, 4, Complex::new(-2.0, 0.5)),
    ] {
        let p = build_irreducible(kt, &IrredParam::new(kt, kt.irr(k, kp)?, r))?;
        let q = random_unimodular(&mut rng)?;
        let hidden = p.conjugate(&q);
        println!("conjugated pair\n{hidden}");
        let got = double_ratio(&hidden, &tol)?;
        println!(
            "recovered Irr{} r = {} (error {:.1e})\n",
            got.component,
            fmt_complex(got.r),
            (got.r - r).norm()
        );
    }
    Ok(())
}
