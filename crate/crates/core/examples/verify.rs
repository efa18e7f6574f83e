//! The randomized verification suite.
//!
//! ```text
//! cargo run --release --example verify -- 4 7 1000
//! ```

use std::env;
use std::process::ExitCode;

use torus_charvar::modular::KnotType;
use torus_charvar::tool::{run_suite, SuiteTolerances};

fn main() -> torus_charvar::Result<ExitCode> {
    let args: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n, samples) = match args[..] {
        [m, n, s] => (m, n, s as u64),
        [m, n] => (m, n, 200),
        _ => (4, 7, 200),
    };
    let report = run_suite(
        KnotType::new(m, n)?,
        samples,
        0,
        &SuiteTolerances::default(),
    )?;
    println!("{report}");
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
