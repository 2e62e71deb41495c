//! Irreducibles of `S_4 = (Z/2)^2 x| S_3` from orbits on the dual of the
//! normal subgroup and irreducibles of the stabilizers.

use exq::clifford::SemidirectDatum;
use exq::fingrp::{close_group, GroupElement, Perm, DEFAULT_BOUND};

fn main() -> exq::Result<()> {
    // Klein four inside S_4, and S_3 on {1, 2, 3} acting by conjugation.
    let v4 = close_group(&[Perm::from_cycles(4, &[&[0, 1], &[2, 3]])?, Perm::from_cycles(4, &[&[0, 2], &[1, 3]])?], DEFAULT_BOUND)?;
    let s = [Perm::from_cycles(4, &[&[1, 2]])?, Perm::from_cycles(4, &[&[1, 2, 3]])?];
    let s3 = close_group(&s, DEFAULT_BOUND)?;
    let datum = SemidirectDatum::new(v4, s3, |g, x| g.compose(x).compose(&g.inverse()), DEFAULT_BOUND)?;

    for orbit in datum.orbits_on_irr() {
        println!("orbit of size {} with stabilizer of order {}", orbit.members.len(), orbit.stabilizer.order());
    }
    let (labels, status) = datum.labels_with_status()?;
    for l in &labels {
        println!("orbit {} stabilizer {} psi {:?}: dimension {}", l.orbit_rep, l.stabilizer_order, l.psi, l.dim);
    }
    let sum: u64 = labels.iter().map(|l| l.dim * l.dim).sum();
    println!("sum of squares {sum} = |G| = {}", datum.product.order());
    println!("cocycle status: {:?}", status.per_orbit);
    Ok(())
}
