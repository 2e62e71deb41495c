//! The group `W^s` of an inertial datum, and the root subsystem on which
//! the datum is trivial.

use exq::cli::report::sl4_inertial;
use exq::fingrp::DEFAULT_BOUND;
use exq::torus::TorusPoint;
use exq::weyl::{compute_ws, weyl_group, InertialDatum, RootDatum, WsMode};

fn describe(name: &str, inert: &InertialDatum, mode: WsMode) -> exq::Result<()> {
    let rd = RootDatum::builtin(name)?;
    let w = weyl_group(&rd, DEFAULT_BOUND)?;
    let ws = compute_ws(&rd, &w, inert, mode, DEFAULT_BOUND)?;
    let types: Vec<_> = rd.subsystem(&ws.roots).components.iter().map(|c| c.cartan_type.clone()).collect();
    println!("{name} ({mode:?}): |W| = {}, |W^s| = {}, R^s = {types:?}", w.order(), ws.group.order());
    Ok(())
}

fn main() -> exq::Result<()> {
    describe("G2", &InertialDatum::trivial(2), WsMode::Roots)?;
    // A quadratic character on both coordinates: R^s is A1 x A1.
    describe("G2", &InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (1, 2)])])?, WsMode::Roots)?;
    // No root is trivial on the SL(4) datum, yet W^s is a Klein four-group.
    describe("PGL4", &sl4_inertial(), WsMode::Roots)?;
    describe("PGL4", &sl4_inertial(), WsMode::Stabilizer)?;
    Ok(())
}
