//! Incidence diagram as SVG.
//!
//! ```text
//! cargo run --example figure -- 3 5 figure.svg
//! ```

use std::env;
use std::fs;

use torus_charvar::modular::KnotType;
use torus_charvar::tool::{emit_svg, FigureSpec};
use torus_charvar::variety::enumerate_variety;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().skip(1).collect();
    let (m, n, path) = match &args[..] {
        [m, n, path] => (m.parse()?, n.parse()?, path.clone()),
        _ => (3, 5, "figure.svg".to_string()),
    };
    let v = enumerate_variety(KnotType::new(m, n)?)?;
    let svg = emit_svg(&v, &FigureSpec::default())?;
    fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
