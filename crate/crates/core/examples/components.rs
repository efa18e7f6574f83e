//! Components of `X(G(m,n))` and their JSON form.
//!
//! ```text
//! cargo run --example components -- 3 5
//! ```

use std::env;

use torus_charvar::modular::KnotType;
use torus_charvar::tool::{emit_json, parse_json};
use torus_charvar::variety::{enumerate_variety, ComponentEntry};

fn main() -> torus_charvar::Result<()> {
    let args: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (3, 5),
    };
    let kt = KnotType::new(m, n)?;
    let v = enumerate_variety(kt)?;
    for c in &v.components {
        match c {
            ComponentEntry::Red => println!("Red"),
            ComponentEntry::Irr(line) => {
                let s: Vec<String> = line
                    .intersections
                    .iter()
                    .map(|r| format!("{:+.4}", r.s))
                    .collect();
                println!("Irr{}  s in {{{}}}", line.component, s.join(", "));
            }
        }
    }

    let json = emit_json(&v);
    println!("{json}");
    assert_eq!(parse_json(&json)?, v);
    Ok(())
}
