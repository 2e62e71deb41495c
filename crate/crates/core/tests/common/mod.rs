#![allow(dead_code)]

use exq::clifford::SemidirectDatum;
use exq::fingrp::{close_group, FinGroup, Perm, DEFAULT_BOUND};

pub fn perm(n: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

pub fn group(gens: &[Perm]) -> FinGroup<Perm> {
    close_group(gens, DEFAULT_BOUND).unwrap()
}

/// `(Z/2)^k` on `2k` points, generated by the disjoint transpositions.
pub fn elementary_two(k: usize) -> (FinGroup<Perm>, Vec<Perm>) {
    let gens: Vec<Perm> = (0..k as u32).map(|i| perm(2 * k, &[&[2 * i, 2 * i + 1]])).collect();
    (group(&gens), gens)
}

pub fn symmetric3() -> FinGroup<Perm> {
    group(&[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])])
}

/// `Z/3 x| Z/2` with inversion.
pub fn s3() -> SemidirectDatum<Perm, Perm> {
    let r = perm(3, &[&[0, 1, 2]]);
    let z3 = group(std::slice::from_ref(&r));
    let z2 = group(&[perm(2, &[&[0, 1]])]);
    let inv = exq::fingrp::GroupElement::inverse(&r);
    SemidirectDatum::from_generator_images(z3, z2, &[vec![inv]], DEFAULT_BOUND).unwrap()
}

/// `(Z/2)^2 x| S_2` swapping the factors.
pub fn d4() -> SemidirectDatum<Perm, Perm> {
    let (v, g) = elementary_two(2);
    let z2 = group(&[perm(2, &[&[0, 1]])]);
    SemidirectDatum::from_generator_images(v, z2, &[vec![g[1].clone(), g[0].clone()]], DEFAULT_BOUND).unwrap()
}

/// `(Z/2)^2 x| S_3`, the symmetric group on four letters: `S_3` permutes the
/// three nonzero vectors `a`, `b`, `ab`.
pub fn s4() -> SemidirectDatum<Perm, Perm> {
    let (v, g) = elementary_two(2);
    let (a, b) = (g[0].clone(), g[1].clone());
    let ab = exq::fingrp::GroupElement::compose(&a, &b);
    SemidirectDatum::from_generator_images(v, symmetric3(), &[vec![b.clone(), a.clone()], vec![b, ab]], DEFAULT_BOUND).unwrap()
}

/// Hyperoctahedral group `(Z/2)^3 x| S_3` permuting coordinates.
pub fn hyperoctahedral3() -> SemidirectDatum<Perm, Perm> {
    let (v, g) = elementary_two(3);
    let swap = vec![g[1].clone(), g[0].clone(), g[2].clone()];
    let cycle = vec![g[1].clone(), g[2].clone(), g[0].clone()];
    SemidirectDatum::from_generator_images(v, symmetric3(), &[swap, cycle], DEFAULT_BOUND).unwrap()
}
