//! Second-kind points over a torus point, labelled by Springer data and
//! sorted into cells.

use exq::fingrp::DEFAULT_BOUND;
use exq::torus::TorusPoint;
use exq::langlands::PrincipalSeries;
use exq::weyl::{InertialDatum, RootDatum, WsMode};

fn show(name: &str, t: &TorusPoint) -> exq::Result<()> {
    let rd = RootDatum::builtin(name)?;
    let ps = PrincipalSeries::new(rd.clone(), InertialDatum::trivial(rd.rank), WsMode::Stabilizer, DEFAULT_BOUND)?;
    println!("{name} at {:?}", t.coords());
    for p in ps.springer_fiber(t)? {
        let d = p.springer.as_ref().unwrap();
        let cell = ps.cell_of(&p)?;
        println!("  tau {}: orbits {:?}, local systems {:?}, psi {}, cell h {:?}{}", p.tau, d.orbits(), d.rhos(), d.psi, cell.h, if cell.is_lowest { " (lowest)" } else { "" });
    }
    Ok(())
}

fn main() -> exq::Result<()> {
    show("GL4", &TorusPoint::identity(4))?;
    show("B2", &TorusPoint::identity(2))?;
    show("G2", &TorusPoint::identity(2))?;
    // Disconnected stabilizers: Z/3 in PGL3, (A1 x A1) x| Z/2 in B2.
    show("PGL3", &TorusPoint::from_angles(&[(1, 3), (1, 3)]))?;
    show("B2", &TorusPoint::from_angles(&[(0, 1), (1, 2)]))?;
    Ok(())
}
