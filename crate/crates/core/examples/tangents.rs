//! Tangents of the reducible line and the transversality of every crossing.
//!
//! ```text
//! cargo run --example tangents -- 4 7
//! ```

use std::env;

use torus_charvar::modular::KnotType;
use torus_charvar::variety::{enumerate_variety, nodal_check, tangent_red, trace_poly};
use torus_charvar::Complex;

fn main() -> torus_charvar::Result<()> {
    let args: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (4, 7),
    };
    let kt = KnotType::new(m, n)?;
    let one = Complex::new(1.0, 0.0);
    println!("tangent at t=1: {:?}", tangent_red(kt, one)?.map(|z| z.re));
    println!("p_{n}(s) at s=1: {}", trace_poly(n as u64, one));

    let v = enumerate_variety(kt)?;
    for rec in v.intersections() {
        let [a, b, c] = tangent_red(kt, rec.index.t(kt))?;
        println!(
            "Irr{} {} s={:+.4} |da|={:.3} |db|={:.3} |dc|={:.3} nodal={}",
            rec.component,
            rec.endpoint.name(),
            rec.s,
            a.norm(),
            b.norm(),
            c.norm(),
            nodal_check(kt, rec, 1e-6)
        );
    }
    Ok(())
}
