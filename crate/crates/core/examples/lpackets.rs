//! L-packets: points with the same cell and a common element of `W^s`
//! carrying both the torus point and the correcting cocharacter.

use exq::cli::report::{sl4_points, sl4_series};
use exq::fingrp::DEFAULT_BOUND;

fn main() -> exq::Result<()> {
    let ps = sl4_series(DEFAULT_BOUND)?;
    for (name, t) in sl4_points() {
        let fiber = ps.springer_fiber(&t)?;
        let packets = ps.lpackets(&fiber)?;
        let sizes: Vec<usize> = packets.iter().map(Vec::len).collect();
        println!("SL4 {name} point: {} points in packets of sizes {sizes:?}", fiber.len());
    }
    Ok(())
}
