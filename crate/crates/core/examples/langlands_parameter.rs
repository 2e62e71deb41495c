//! Building a parameter `Phi(u varpi^n, Y_alpha) = chi_hat(u) t^n h(alpha)`
//! and checking that assembling then evaluating agrees with the cell map.

use exq::fingrp::DEFAULT_BOUND;
use exq::langlands::{build_phi, eval_phi, Partition, PrincipalSeries};
use exq::torus::{Scalar, TorusPoint};
use exq::weyl::{InertialDatum, RootDatum, WsMode};

fn main() -> exq::Result<()> {
    let q = Scalar::positive(5, 1);
    let z = Scalar::from_parts((3, 1), (1, 4))?;
    let t = TorusPoint::new(vec![z.clone(), z.clone(), Scalar::one()]);
    let phi = build_phi(&InertialDatum::trivial(3), &t, &Partition::new(vec![2, 1]))?;
    println!("h = {:?}", phi.h.exponents);
    println!("Phi(varpi, Y_sqrt q) = {:?}", eval_phi(&phi, &[], 1, &q)?.coords());

    let rd = RootDatum::builtin("GL3")?;
    let ps = PrincipalSeries::new(rd, InertialDatum::trivial(3), WsMode::Stabilizer, DEFAULT_BOUND)?;
    for p in ps.springer_fiber(&t)? {
        let d = p.springer.as_ref().unwrap();
        let rp = ps.mu_assemble(&t, &d.orbits(), &d.rhos(), d.psi)?;
        let same = ps.i_alpha(&rp, &q)? == ps.pi_alpha(&p, &q)?;
        println!("{:?}: i_alpha o mu = pi_alpha: {same}", d.orbits());
    }
    Ok(())
}
