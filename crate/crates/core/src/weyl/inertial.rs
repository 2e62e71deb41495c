use serde::{Deserialize, Serialize};

use super::datum::RootDatum;
use crate::error::{Error, Result};
use crate::fingrp::FinGroup;
use crate::torus::{act, MonomialAction, TorusPoint};

/// Generators of the image of the restriction of a character to the units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertialDatum {
    pub generators: Vec<TorusPoint>,
}

impl InertialDatum {
    /// Every generator must have finite order.
    pub fn new(generators: Vec<TorusPoint>) -> Result<Self> {
        for g in &generators {
            if g.coords().iter().any(|c| c.order().is_none()) {
                return Err(Error::InvalidPoint(format!("{g:?} does not have finite order")));
            }
        }
        Ok(Self { generators })
    }

    pub fn trivial(rank: usize) -> Self {
        Self { generators: vec![TorusPoint::identity(rank)] }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let d: Self = serde_json::from_str(s)?;
        Self::new(d.generators)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WsMode {
    /// Generated by reflections in the roots trivial on every generator.
    Roots,
    /// All `w` fixing every generator.
    Stabilizer,
}

impl std::str::FromStr for WsMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roots" => Ok(WsMode::Roots),
            "stabilizer" => Ok(WsMode::Stabilizer),
            _ => Err(Error::InvalidInput(format!("unknown mode {s:?}; expected roots or stabilizer"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WsResult {
    /// Roots trivial on every generator.
    pub roots: Vec<usize>,
    pub group: FinGroup<MonomialAction>,
    pub mode: WsMode,
}

/// Roots `alpha` with `alpha(g) = 1` for every generator `g`.
pub fn vanishing_roots(rd: &RootDatum, inert: &InertialDatum) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (k, a) in rd.roots.iter().enumerate() {
        let mut all = true;
        for g in &inert.generators {
            if !g.eval_character(a)?.is_one() {
                all = false;
                break;
            }
        }
        if all {
            out.push(k);
        }
    }
    Ok(out)
}

pub fn compute_ws(rd: &RootDatum, w: &FinGroup<MonomialAction>, inert: &InertialDatum, mode: WsMode, bound: usize) -> Result<WsResult> {
    for g in &inert.generators {
        if g.rank() != rd.rank {
            return Err(Error::DimensionMismatch { expected: rd.rank, found: g.rank() });
        }
    }
    let roots = vanishing_roots(rd, inert)?;
    let group = match mode {
        // Simple reflections of the vanishing subsystem generate its Weyl group.
        WsMode::Roots => rd.reflection_group(&rd.subsystem(&roots).simple, bound)?,
        WsMode::Stabilizer => {
            w.subgroup_where(|x| inert.generators.iter().all(|g| act(x, g).map(|y| y == *g).unwrap_or(false)))
        }
    };
    Ok(WsResult { roots, group, mode })
}
