//! The character variety of the trefoil, G(2,3) = ⟨x, y | x² = y³⟩.
//!
//! ```text
//! cargo run --example trefoil
//! ```

use torus_charvar::modular::KnotType;
use torus_charvar::variety::enumerate_variety;

fn main() -> torus_charvar::Result<()> {
    let kt = KnotType::new(2, 3)?;
    let v = enumerate_variety(kt)?;
    println!(
        "{kt}: {} irreducible line(s), {} intersection point(s)",
        v.counts.irr_lines, v.counts.intersection_points
    );
    for line in v.irr_lines() {
        println!(
            "Irr{}  base {}  direction {}",
            line.component, line.psi_base, line.psi_dir
        );
        for rec in &line.intersections {
            println!(
                "  {} meets X_red at l={} (folded {}), s={:+.6}, psi={}",
                rec.endpoint.name(),
                rec.index.raw(),
                rec.index.folded(),
                rec.s,
                rec.point
            );
        }
    }
    Ok(())
}
