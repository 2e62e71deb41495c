//! The worked examples as structured reports, one line per checked fact.

use exq::cli::report::{run_example_gln, run_example_lowest_cell, run_example_sl4};
use exq::fingrp::DEFAULT_BOUND;
use exq::weyl::{InertialDatum, RootDatum, WsMode};

fn main() -> exq::Result<()> {
    let g2 = RootDatum::builtin("G2")?;
    let reports = [
        run_example_sl4(DEFAULT_BOUND)?,
        run_example_gln(4, DEFAULT_BOUND)?,
        run_example_lowest_cell(g2, InertialDatum::trivial(2), WsMode::Roots, DEFAULT_BOUND)?,
    ];
    for r in &reports {
        println!("== {} (exit code {})", r.example, r.exit_code());
        for line in r.summary_lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
