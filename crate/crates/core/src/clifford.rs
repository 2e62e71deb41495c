//! Irreducibles of a semidirect product `Gamma_1 x| Gamma` from orbits of
//! `Gamma` on `Irr(Gamma_1)` and irreducibles of the stabilizers.
//!
//! Labels are enumerated assuming every orbit carries a trivial cocycle. The
//! assumption is then checked per orbit against the product group itself: an
//! orbit is trivial exactly when `Ind chi` has as many distinct constituents
//! as its stabilizer has irreducibles.

use std::collections::HashSet;

use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fingrp::{close_group, conjugacy_classes, FinGroup, GroupElement, Perm, TabulatedGroup};

/// `Gamma_1 x| Gamma` with `action[g][x]` the index of `g . x` in `gamma1`.
#[derive(Clone, Debug)]
pub struct SemidirectDatum<E1: GroupElement, E2: GroupElement> {
    pub gamma1: TabulatedGroup<E1>,
    pub gamma: FinGroup<E2>,
    pub action: Vec<Vec<usize>>,
    pub product: FinGroup<Perm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitStatus {
    ProvedTrivial,
    NontrivialDetected,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleStatus {
    pub per_orbit: Vec<OrbitStatus>,
    pub label_count: usize,
    pub class_count: usize,
    pub dim_square_sum: u64,
    pub product_order: usize,
    pub discrepancy: Option<String>,
}

impl CocycleStatus {
    pub fn all_trivial(&self) -> bool {
        self.per_orbit.iter().all(|s| *s == OrbitStatus::ProvedTrivial)
    }
}

#[derive(Clone, Debug)]
pub struct IrrOrbit<E2: GroupElement> {
    /// Rows of the character table of `Gamma_1`, least first.
    pub members: Vec<usize>,
    pub stabilizer: FinGroup<E2>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliffordLabel {
    pub orbit_rep: usize,
    pub stabilizer_order: usize,
    /// Row of the stabilizer's character table; `None` when the orbit carries
    /// a projective label whose multiplicity is unresolved.
    pub psi: Option<usize>,
    pub dim: u64,
}

impl<E1: GroupElement, E2: GroupElement> SemidirectDatum<E1, E2> {
    /// `act(g, x)` must define an action of `gamma` on `gamma1` by automorphisms.
    pub fn new(gamma1: FinGroup<E1>, gamma: FinGroup<E2>, act: impl Fn(&E2, &E1) -> E1, bound: usize) -> Result<Self> {
        let mut action = Vec::with_capacity(gamma.order());
        for g in gamma.elements() {
            let perm = gamma1
                .elements()
                .iter()
                .map(|x| gamma1.index_of(&act(g, x)).ok_or(Error::NotInGroup))
                .collect::<Result<Vec<_>>>()?;
            action.push(perm);
        }
        Self::from_action(gamma1, gamma, action, bound)
    }

    /// Action given by images of the generators of `gamma1` under each
    /// generator of `gamma`, extended multiplicatively.
    pub fn from_generator_images(gamma1: FinGroup<E1>, gamma: FinGroup<E2>, images: &[Vec<E1>], bound: usize) -> Result<Self> {
        let g1_gens = gamma1.generators().to_vec();
        if images.len() != gamma.generators().len() || images.iter().any(|v| v.len() != g1_gens.len()) {
            return Err(Error::InvalidInput("action must list one image per generator pair".into()));
        }
        let gen_perms = images
            .iter()
            .map(|imgs| extend_hom(&gamma1, &g1_gens, imgs))
            .collect::<Result<Vec<_>>>()?;
        // Extend over gamma along its generators.
        let n = gamma.order();
        let mut action: Vec<Option<Vec<usize>>> = vec![None; n];
        action[0] = Some((0..gamma1.order()).collect());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (j, &g) in gamma.generators().iter().enumerate() {
                let y = gamma.mul(i, g);
                let cur = action[i].as_ref().unwrap();
                let p: Vec<usize> = gen_perms[j].iter().map(|&x| cur[x]).collect();
                match &action[y] {
                    None => {
                        action[y] = Some(p);
                        queue.push_back(y);
                    }
                    Some(q) if *q != p => return Err(Error::InvalidInput("action is not a homomorphism".into())),
                    _ => {}
                }
            }
        }
        let action = action.into_iter().map(|p| p.expect("gamma is generated by its generators")).collect();
        Self::from_action(gamma1, gamma, action, bound)
    }

    fn from_action(gamma1: FinGroup<E1>, gamma: FinGroup<E2>, action: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        for (gi, p) in action.iter().enumerate() {
            let seen: HashSet<&usize> = p.iter().collect();
            if seen.len() != gamma1.order() || p[0] != 0 {
                return Err(Error::InvalidInput("action is not by bijections fixing the identity".into()));
            }
            for &a in gamma1.generators() {
                for b in 0..gamma1.order() {
                    if p[gamma1.mul(a, b)] != gamma1.mul(p[a], p[b]) {
                        return Err(Error::InvalidInput("action is not by automorphisms".into()));
                    }
                }
            }
            for &h in gamma.generators() {
                let gh = gamma.mul(gi, h);
                if (0..gamma1.order()).any(|x| action[gh][x] != p[action[h][x]]) {
                    return Err(Error::InvalidInput("action is not a homomorphism".into()));
                }
            }
        }
        let product = regular_product(&gamma1, &gamma, &action, bound)?;
        Ok(Self { gamma1: TabulatedGroup::new(gamma1)?, gamma, action, product })
    }

    /// `(g . chi)(x) = chi(g^{-1} . x)` as a class function.
    fn twist(&self, g: usize, chi: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let g1 = &self.gamma1;
        let ginv = self.gamma.inv(g);
        g1.classes
            .representatives
            .iter()
            .map(|&x| chi[g1.classes.class_of(self.action[ginv][x])].clone())
            .collect()
    }

    fn row_permutation(&self, g: usize) -> Vec<usize> {
        let t = &self.gamma1.table;
        (0..t.len())
            .map(|r| t.find_row(&self.twist(g, t.row(r))).expect("twisted irreducible is irreducible"))
            .collect()
    }

    pub fn orbits_on_irr(&self) -> Vec<IrrOrbit<E2>> {
        let perms: Vec<Vec<usize>> = (0..self.gamma.order()).map(|g| self.row_permutation(g)).collect();
        let rows = self.gamma1.table.len();
        let mut assigned = vec![false; rows];
        let mut out = Vec::new();
        for r in 0..rows {
            if assigned[r] {
                continue;
            }
            let mut members: Vec<usize> = perms.iter().map(|p| p[r]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            let stab: Vec<E2> =
                (0..self.gamma.order()).filter(|&g| perms[g][r] == r).map(|g| self.gamma.element(g).clone()).collect();
            out.push(IrrOrbit { members, stabilizer: FinGroup::from_closed_elements(stab) });
        }
        out
    }

    pub fn clifford_irr_list(&self) -> Result<Vec<CliffordLabel>> {
        let mut labels = Vec::new();
        for orbit in self.orbits_on_irr() {
            let chi = orbit.members[0];
            let stab = TabulatedGroup::new(orbit.stabilizer.clone())?;
            let index = (self.gamma.order() / orbit.stabilizer.order()) as u64;
            for (psi, &d) in stab.table.degrees().iter().enumerate() {
                labels.push(CliffordLabel {
                    orbit_rep: chi,
                    stabilizer_order: orbit.stabilizer.order(),
                    psi: Some(psi),
                    dim: index * self.gamma1.table.degrees()[chi] * d,
                });
            }
        }
        Ok(labels)
    }

    pub fn validate_clifford(&self) -> Result<CocycleStatus> {
        let labels = self.clifford_irr_list()?;
        let orbits = self.orbits_on_irr();
        let label_count = labels.len();
        let dim_square_sum = labels.iter().map(|l| l.dim * l.dim).sum();
        let product_order = self.product.order();
        let class_count = conjugacy_classes(&self.product).len();

        let per_orbit = match self.per_orbit_counts(&orbits) {
            Ok(counts) => orbits
                .iter()
                .zip(counts)
                .map(|(o, c)| {
                    let stab_classes = conjugacy_classes(&o.stabilizer).len();
                    if c == stab_classes {
                        OrbitStatus::ProvedTrivial
                    } else {
                        OrbitStatus::NontrivialDetected
                    }
                })
                .collect(),
            Err(_) => vec![OrbitStatus::Undetermined; orbits.len()],
        };
        let discrepancy = (label_count != class_count || dim_square_sum != product_order as u64).then(|| {
            format!("{label_count} labels against {class_count} classes; sum of squared dimensions {dim_square_sum} against order {product_order}")
        });
        let mut status = CocycleStatus { per_orbit, label_count, class_count, dim_square_sum, product_order, discrepancy };
        if status.discrepancy.is_none() && status.per_orbit.contains(&OrbitStatus::Undetermined) {
            status.per_orbit = vec![OrbitStatus::ProvedTrivial; orbits.len()];
        }
        Ok(status)
    }

    /// Number of distinct irreducible constituents of `Ind chi` to the
    /// product, for each orbit representative `chi`.
    fn per_orbit_counts(&self, orbits: &[IrrOrbit<E2>]) -> Result<Vec<usize>> {
        let n1 = self.gamma1.group.order();
        let n = self.gamma.order();
        let embedded: HashSet<Perm> = (0..n1).map(|x| left_translation(&self.gamma1.group, &self.action, n, x, 0)).collect();
        let product = TabulatedGroup::new(self.product.clone())?;
        let sub = TabulatedGroup::new(self.product.subgroup_where(|p| embedded.contains(p)))?;
        orbits
            .iter()
            .map(|o| {
                // Pull chi back along the embedding, class by class.
                let chi = self.gamma1.table.row(o.members[0]);
                let values: Vec<Cyclotomic> = sub
                    .classes
                    .representatives
                    .iter()
                    .map(|&i| {
                        let p = sub.group.element(i);
                        let x = p.image(0) / n;
                        chi[self.gamma1.classes.class_of(x)].clone()
                    })
                    .collect();
                let ind = product.induce(&values, &sub)?;
                let mult = product.table.decompose(&ind).ok_or_else(|| Error::InvalidInput("non-integral multiplicity".into()))?;
                Ok(mult.iter().filter(|&&m| m != 0).count())
            })
            .collect()
    }

    /// Fallback labels for orbits with a detected nontrivial cocycle.
    pub fn labels_with_status(&self) -> Result<(Vec<CliffordLabel>, CocycleStatus)> {
        let status = self.validate_clifford()?;
        let orbits = self.orbits_on_irr();
        let mut labels = self.clifford_irr_list()?;
        for (o, s) in orbits.iter().zip(&status.per_orbit) {
            if *s == OrbitStatus::NontrivialDetected {
                for l in labels.iter_mut().filter(|l| l.orbit_rep == o.members[0]) {
                    l.psi = None;
                }
            }
        }
        Ok((labels, status))
    }
}

/// Permutation of `(y, d)` pairs, indexed `y * |Gamma| + d`, given by left
/// multiplication with `(x, g)`.
fn left_translation<E1: GroupElement>(g1: &FinGroup<E1>, action: &[Vec<usize>], n: usize, x: usize, g: usize) -> Perm {
    left_translation_in(g1, action, n, x, g, None)
}

fn left_translation_in<E1: GroupElement>(
    g1: &FinGroup<E1>,
    action: &[Vec<usize>],
    n: usize,
    x: usize,
    g: usize,
    gamma_mul: Option<&dyn Fn(usize, usize) -> usize>,
) -> Perm {
    let n1 = g1.order();
    let images = (0..n1 * n)
        .map(|p| {
            let (y, d) = (p / n, p % n);
            let gd = gamma_mul.map_or(d, |m| m(g, d));
            (g1.mul(x, action[g][y]) * n + gd) as u32
        })
        .collect();
    Perm::new(images).expect("left translation is a bijection")
}

fn regular_product<E1: GroupElement, E2: GroupElement>(
    g1: &FinGroup<E1>,
    g: &FinGroup<E2>,
    action: &[Vec<usize>],
    bound: usize,
) -> Result<FinGroup<Perm>> {
    let n = g.order();
    let mul = |a: usize, b: usize| g.mul(a, b);
    let mut gens: Vec<Perm> = g1.generators().iter().map(|&x| left_translation(g1, action, n, x, 0)).collect();
    gens.extend(g.generators().iter().map(|&h| left_translation_in(g1, action, n, 0, h, Some(&mul))));
    if gens.is_empty() {
        gens.push(Perm::identity(g1.order() * n));
    }
    close_group(&gens, bound)
}

/// Permutation of `g1` induced by the homomorphism sending `gens[i]` to `images[i]`.
fn extend_hom<E1: GroupElement>(g1: &FinGroup<E1>, gens: &[usize], images: &[E1]) -> Result<Vec<usize>> {
    let imgs = images.iter().map(|e| g1.index_of(e).ok_or(Error::NotInGroup)).collect::<Result<Vec<_>>>()?;
    let mut map: Vec<Option<usize>> = vec![None; g1.order()];
    map[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(&imgs) {
            let y = g1.mul(x, s);
            let fy = g1.mul(map[x].unwrap(), t);
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(v) if v != fy => return Err(Error::InvalidInput("generator images do not define a homomorphism".into())),
                _ => {}
            }
        }
    }
    map.into_iter().map(|v| v.ok_or(Error::InvalidInput("generators do not generate".into()))).collect()
}
