//! Springer pairs `(x, rho)` for the irreducible components of a root
//! subsystem, with the convention that the zero orbit carries the trivial
//! character and the regular orbit the sign character.
//!
//! Type A is handled for every rank through partitions. Rank-two components
//! of type `B2` and `G2` use fixed tables.

use serde::{Deserialize, Serialize};

use super::partition::{murnaghan_nakayama, partitions, springer_a, Partition};
use crate::error::{Error, Result};
use crate::exquo::LetterMap;
use crate::torus::MonomialAction;
use crate::weyl::{solve_combination, CartanType, Component, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum B2Orbit {
    Zero,
    LongRoot,
    ShortRoot,
    Regular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum G2Orbit {
    Zero,
    A1,
    TildeA1,
    G2A1,
    Regular,
}

/// Nilpotent orbit of one irreducible component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitLabel {
    Partition(Partition),
    B2(B2Orbit),
    G2(G2Orbit),
}

impl OrbitLabel {
    pub fn is_zero(&self) -> bool {
        match self {
            OrbitLabel::Partition(p) => p.parts().iter().all(|&x| x == 1),
            OrbitLabel::B2(o) => *o == B2Orbit::Zero,
            OrbitLabel::G2(o) => *o == G2Orbit::Zero,
        }
    }
}

/// Irreducible of the component group of the centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalSystem {
    Trivial,
    Sign,
    /// Two-dimensional irreducible of `S_3`.
    Reflection,
}

/// Character of a component Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharKind {
    Specht(Partition),
    Trivial,
    Sign,
    /// `-1` on reflections in long roots, `1` on short ones.
    EpsLong,
    /// `-1` on reflections in short roots, `1` on long ones.
    EpsShort,
    Reflection,
    /// Symmetric square of the reflection representation minus the trivial one.
    Phi22,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpringerPair {
    pub orbit: OrbitLabel,
    pub rho: LocalSystem,
    pub character: CharKind,
    /// Jacobson-Morozov cocharacter in `X_*` coordinates.
    pub h: Vec<i64>,
}

/// Springer data attached to a second-kind point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpringerData {
    pub components: Vec<ComponentSpringer>,
    /// Row of the character table of the reflection part of the stabilizer.
    pub m0_row: usize,
    /// Row of the character table of the stabilizer, inside the component
    /// group, of the Springer character.
    pub psi: usize,
    pub h: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentSpringer {
    pub cartan_type: CartanType,
    pub orbit: OrbitLabel,
    pub rho: LocalSystem,
}

impl SpringerData {
    pub fn orbits(&self) -> Vec<OrbitLabel> {
        self.components.iter().map(|c| c.orbit.clone()).collect()
    }

    pub fn rhos(&self) -> Vec<LocalSystem> {
        self.components.iter().map(|c| c.rho).collect()
    }
}

fn add_coroot(h: &mut [i64], rd: &RootDatum, k: usize) {
    for (x, y) in h.iter_mut().zip(&rd.coroots[k]) {
        *x += y;
    }
}

fn coroot_sum<'a>(rd: &RootDatum, roots: impl IntoIterator<Item = &'a usize>) -> Vec<i64> {
    let mut h = vec![0; rd.rank];
    for &k in roots {
        add_coroot(&mut h, rd, k);
    }
    h
}

/// All Springer pairs of a component, in a fixed order.
pub fn component_pairs(rd: &RootDatum, comp: &Component) -> Result<Vec<SpringerPair>> {
    match comp.cartan_type {
        CartanType::A(k) => {
            let letters = LetterMap::new(rd, &comp.simple);
            Ok(partitions(k + 1)
                .into_iter()
                .map(|lambda| {
                    let mut h = vec![0; rd.rank];
                    let mut start = 0;
                    for &m in lambda.parts() {
                        for a in start..start + m {
                            for b in a + 1..start + m {
                                add_coroot(&mut h, rd, letters.roots[&(a, b)]);
                            }
                        }
                        start += m;
                    }
                    SpringerPair { character: CharKind::Specht(springer_a(&lambda)), orbit: OrbitLabel::Partition(lambda), rho: LocalSystem::Trivial, h }
                })
                .collect())
        }
        CartanType::B2 => {
            let long = rd.highest_root(comp, true);
            let short = rd.highest_root(comp, false);
            let regular = coroot_sum(rd, &comp.positive);
            let b = |o, rho, character, h| SpringerPair { orbit: OrbitLabel::B2(o), rho, character, h };
            Ok(vec![
                b(B2Orbit::Zero, LocalSystem::Trivial, CharKind::Trivial, vec![0; rd.rank]),
                b(B2Orbit::LongRoot, LocalSystem::Trivial, CharKind::EpsLong, rd.coroots[long].clone()),
                b(B2Orbit::ShortRoot, LocalSystem::Trivial, CharKind::Reflection, rd.coroots[short].clone()),
                b(B2Orbit::ShortRoot, LocalSystem::Sign, CharKind::EpsShort, rd.coroots[short].clone()),
                b(B2Orbit::Regular, LocalSystem::Trivial, CharKind::Sign, regular),
            ])
        }
        CartanType::G2 => {
            let long = rd.highest_root(comp, true);
            let short = rd.highest_root(comp, false);
            let regular = coroot_sum(rd, &comp.positive);
            let long_positive: Vec<usize> = comp.positive.iter().copied().filter(|&k| rd.is_long_in(comp, k)).collect();
            let subregular = coroot_sum(rd, &long_positive);
            let g = |o, rho, character, h| SpringerPair { orbit: OrbitLabel::G2(o), rho, character, h };
            Ok(vec![
                g(G2Orbit::Zero, LocalSystem::Trivial, CharKind::Trivial, vec![0; rd.rank]),
                g(G2Orbit::A1, LocalSystem::Trivial, CharKind::EpsLong, rd.coroots[long].clone()),
                g(G2Orbit::TildeA1, LocalSystem::Trivial, CharKind::Phi22, rd.coroots[short].clone()),
                g(G2Orbit::G2A1, LocalSystem::Trivial, CharKind::Reflection, subregular.clone()),
                g(G2Orbit::G2A1, LocalSystem::Reflection, CharKind::EpsShort, subregular),
                g(G2Orbit::Regular, LocalSystem::Trivial, CharKind::Sign, regular),
            ])
        }
        CartanType::Other(n) => Err(Error::UnsupportedType(format!("Springer data for a rank-{n} component outside types A, B2, G2"))),
    }
}

/// Evaluates component characters on elements normalising the component.
pub struct ComponentCharacters<'a> {
    rd: &'a RootDatum,
    comp: &'a Component,
    letters: Option<LetterMap>,
}

impl<'a> ComponentCharacters<'a> {
    pub fn new(rd: &'a RootDatum, comp: &'a Component) -> Self {
        let letters = matches!(comp.cartan_type, CartanType::A(_)).then(|| LetterMap::new(rd, &comp.simple));
        Self { rd, comp, letters }
    }

    fn inversions(&self, w: &MonomialAction, long: Option<bool>) -> usize {
        self.comp
            .positive
            .iter()
            .filter(|&&k| long.is_none_or(|l| self.rd.is_long_in(self.comp, k) == l))
            .filter(|&&k| !self.rd.is_positive(self.rd.act_on_root(w, k)))
            .count()
    }

    fn trace(&self, w: &MonomialAction) -> i64 {
        let basis: Vec<Vec<i64>> = self.comp.simple.iter().map(|&s| self.rd.roots[s].clone()).collect();
        self.comp
            .simple
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let image = &self.rd.roots[self.rd.act_on_root(w, s)];
                let c = solve_combination(&basis, image).expect("component is stable");
                num_traits::ToPrimitive::to_i64(&c[i].to_integer()).unwrap()
            })
            .sum()
    }

    pub fn value(&self, kind: &CharKind, w: &MonomialAction) -> i64 {
        let parity = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
        match kind {
            CharKind::Specht(mu) => {
                let sigma = self.letters.as_ref().expect("type A component").permutation(self.rd, w);
                murnaghan_nakayama(mu, &Partition::new(sigma.cycle_type()))
            }
            CharKind::Trivial => 1,
            CharKind::Sign => parity(self.inversions(w, None)),
            CharKind::EpsLong => parity(self.inversions(w, Some(true))),
            CharKind::EpsShort => parity(self.inversions(w, Some(false))),
            CharKind::Reflection => self.trace(w),
            CharKind::Phi22 => {
                let t = self.trace(w);
                let t2 = self.trace(&crate::fingrp::GroupElement::compose(w, w));
                (t * t + t2) / 2 - 1
            }
        }
    }
}
