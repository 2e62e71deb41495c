use serde::Serialize;

use super::datum::RootDatum;
use crate::error::Result;
use crate::fingrp::{FinGroup, GroupElement};
use crate::torus::{act, MonomialAction, TorusPoint};

/// `W_t = W_M0 x| pi0`, with every element of `W_t` factored as `m * s`.
#[derive(Clone, Debug)]
pub struct StabilizerDecomposition {
    pub w_t: FinGroup<MonomialAction>,
    pub w_m0: FinGroup<MonomialAction>,
    pub pi0: FinGroup<MonomialAction>,
    /// Roots whose reflection lies in the ambient group and which are trivial at `t`.
    pub vanishing_roots: Vec<usize>,
    /// `(w, m, s)` as indices into `w_t`, `w_m0`, `pi0`, sorted by `w`.
    pub witness: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSummary {
    pub order_w_t: usize,
    pub order_w_m0: usize,
    pub order_pi0: usize,
    pub vanishing_roots: Vec<usize>,
    pub normal: bool,
    pub trivial_intersection: bool,
    pub product_matches: bool,
}

impl StabilizerDecomposition {
    pub fn is_normal(&self) -> bool {
        self.w_m0.is_normal_in(&self.w_t)
    }

    pub fn trivial_intersection(&self) -> bool {
        self.pi0.elements().iter().filter(|e| self.w_m0.contains(e)).count() == 1
    }

    pub fn product_matches(&self) -> bool {
        self.w_t.order() == self.w_m0.order() * self.pi0.order() && self.witness.len() == self.w_t.order()
    }

    pub fn verify(&self) -> bool {
        self.is_normal() && self.trivial_intersection() && self.product_matches()
    }

    pub fn summary(&self) -> DecompositionSummary {
        DecompositionSummary {
            order_w_t: self.w_t.order(),
            order_w_m0: self.w_m0.order(),
            order_pi0: self.pi0.order(),
            vanishing_roots: self.vanishing_roots.clone(),
            normal: self.is_normal(),
            trivial_intersection: self.trivial_intersection(),
            product_matches: self.product_matches(),
        }
    }
}

/// `{w in W : w t = t}`
pub fn stabilizer_of_point(w: &FinGroup<MonomialAction>, t: &TorusPoint) -> Result<FinGroup<MonomialAction>> {
    let n = w.identity().dim();
    if t.rank() != n {
        return Err(crate::Error::DimensionMismatch { expected: n, found: t.rank() });
    }
    Ok(w.subgroup_where(|x| act(x, t).map(|y| y == *t).unwrap_or(false)))
}

/// Splits the stabilizer of `t` in `w` into the reflection subgroup of the
/// roots trivial at `t` and the stabilizer of their positive system.
pub fn levi_decompose(rd: &RootDatum, w: &FinGroup<MonomialAction>, t: &TorusPoint) -> Result<StabilizerDecomposition> {
    let w_t = stabilizer_of_point(w, t)?;
    let mut vanishing = Vec::new();
    for k in 0..rd.num_roots() {
        if t.eval_character(&rd.roots[k])?.is_one() && w.contains(&rd.reflection(k)) {
            vanishing.push(k);
        }
    }
    let gens: Vec<MonomialAction> = vanishing.iter().map(|&k| rd.reflection(k)).collect();
    let w_m0 = if gens.is_empty() {
        FinGroup::trivial(MonomialAction::identity(rd.rank))
    } else {
        w_t.subgroup_generated(&gens)
    };

    let positive: Vec<usize> = vanishing.iter().copied().filter(|&k| rd.is_positive(k)).collect();
    let pi0 = w_t.subgroup_where(|x| positive.iter().all(|&k| rd.is_positive(rd.act_on_root(x, k))));

    let mut witness = Vec::with_capacity(w_t.order());
    for (si, s) in pi0.elements().iter().enumerate() {
        for (mi, m) in w_m0.elements().iter().enumerate() {
            if let Some(wi) = w_t.index_of(&m.compose(s)) {
                witness.push((wi, mi, si));
            }
        }
    }
    witness.sort_unstable();
    witness.dedup_by_key(|x| x.0);
    Ok(StabilizerDecomposition { w_t, w_m0, pi0, vanishing_roots: vanishing, witness })
}
