//! Extended quotients of the first and second kind, fibers over points, and
//! base change.

use exq::cli::report::{sl4_points, sl4_series};
use exq::exquo::{base_change, extended_quotient_first, fiber_cardinality, piece_count};
use exq::fingrp::DEFAULT_BOUND;
use exq::weyl::{weyl_group, RootDatum};

fn main() -> exq::Result<()> {
    // GL(4): one piece per conjugacy class of S_4, each T^w connected.
    let rd = RootDatum::general_linear(4)?;
    let w = weyl_group(&rd, DEFAULT_BOUND)?;
    let eq = extended_quotient_first(&w)?;
    for c in &eq {
        println!(
            "GL4 class {} (size {}): T^w of dimension {}, {} component(s)",
            c.class_index, c.class_size, c.fixed_locus.dimension, c.fixed_locus.component_count
        );
    }
    println!("GL4 pieces: {}", piece_count(&eq));
    for f in 1..=3 {
        println!("base change f = {f}: well defined {}", base_change(&w, &eq, f)?.well_defined);
    }

    // SL(4) with the Klein four-group: six extra pieces and fibers 1, 2, 4.
    let ps = sl4_series(DEFAULT_BOUND)?;
    let eq = extended_quotient_first(ps.group())?;
    println!("SL4 pieces: {}", piece_count(&eq));
    for (name, t) in sl4_points() {
        let f = fiber_cardinality(ps.group(), &t)?;
        println!("SL4 {name} point: |W_t| = {}, classes {}, irreducibles {}", f.stabilizer_order, f.class_count, f.irr_count);
    }
    Ok(())
}
