//! Extended quotients of a torus by a finite group of monomial actions.
//!
//! The first kind replaces the orbit of `t` by the conjugacy classes of its
//! stabilizer; it is computed piecewise as `T^w / Z(w)` over class
//! representatives `w`. The second kind replaces the orbit by the
//! irreducible characters of the stabilizer.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fingrp::{centralizer, conjugacy_classes, FinGroup, GroupElement, TabulatedGroup};
use crate::langlands::{murnaghan_nakayama, Partition};
use crate::torus::{act, common_fixed_locus, fixed_locus, FixedLocus, MonomialAction, TorusPoint};
use crate::weyl::{stabilizer_of_point, CartanType, RootDatum};

/// The piece `T^w / Z(w)` for one conjugacy class.
#[derive(Clone, Debug, Serialize)]
pub struct EQComponentFirst {
    pub class_index: usize,
    pub class_size: usize,
    pub class_rep: MonomialAction,
    pub fixed_locus: FixedLocus,
    pub centralizer_order: usize,
    /// For each centralizer generator, its permutation of the components of `T^w`.
    pub centralizer_component_action: Vec<Vec<usize>>,
    /// Orbit of each component under the centralizer, numbered by least member.
    pub component_orbit: Vec<usize>,
    pub quotient_component_count: usize,
}

pub fn extended_quotient_first(w: &FinGroup<MonomialAction>) -> Result<Vec<EQComponentFirst>> {
    let classes = conjugacy_classes(w);
    let mut out = Vec::with_capacity(classes.len());
    for (ci, &rep) in classes.representatives.iter().enumerate() {
        let x = w.element(rep);
        let locus = fixed_locus(x);
        let z = centralizer(w, x)?;
        let action = z
            .generators()
            .iter()
            .map(|&g| {
                locus
                    .sample_points
                    .iter()
                    .map(|p| {
                        let moved = act(z.element(g), p)?;
                        locus.component_of(&moved).ok_or_else(|| Error::InvalidInput("centralizer leaves the fixed locus".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let component_orbit = orbit_labels(locus.component_count, &action);
        let quotient_component_count = component_orbit.iter().collect::<BTreeSet<_>>().len();
        out.push(EQComponentFirst {
            class_index: ci,
            class_size: classes.classes[ci].len(),
            class_rep: x.clone(),
            fixed_locus: locus,
            centralizer_order: z.order(),
            centralizer_component_action: action,
            component_orbit,
            quotient_component_count,
        });
    }
    Ok(out)
}

/// Label each point by the least point of its orbit under the given permutations.
fn orbit_labels(n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for p in perms {
                if label[p[x]] == usize::MAX {
                    label[p[x]] = s;
                    stack.push(p[x]);
                }
            }
        }
    }
    label
}

/// Total number of pieces of the first-kind quotient.
pub fn piece_count(components: &[EQComponentFirst]) -> usize {
    components.iter().map(|c| c.quotient_component_count).sum()
}

/// Least point of the orbit `W t`, and an element carrying `t` to it.
pub fn canonical_point(w: &FinGroup<MonomialAction>, t: &TorusPoint) -> Result<(TorusPoint, MonomialAction)> {
    let mut best: Option<(TorusPoint, &MonomialAction)> = None;
    for x in w.elements() {
        let y = act(x, t)?;
        if best.as_ref().is_none_or(|(b, _)| y < *b) {
            best = Some((y, x));
        }
    }
    let (p, x) = best.expect("groups are nonempty");
    Ok((p, x.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub point: TorusPoint,
    pub stabilizer_order: usize,
    pub class_count: usize,
    pub irr_count: usize,
    pub predicted_constituents: usize,
}

pub fn fiber_cardinality(w: &FinGroup<MonomialAction>, t: &TorusPoint) -> Result<FiberReport> {
    let stab = stabilizer_of_point(w, t)?;
    let class_count = conjugacy_classes(&stab).len();
    let irr_count = TabulatedGroup::new(stab.clone())?.table.len();
    if class_count != irr_count {
        return Err(Error::InvalidInput(format!("{class_count} classes against {irr_count} irreducibles")));
    }
    Ok(FiberReport { point: t.clone(), stabilizer_order: stab.order(), class_count, irr_count, predicted_constituents: class_count })
}

/// First-kind points over the orbit of `t`, as `(class index, component index)`
/// of the piece containing `(w, t)` for each class of the stabilizer.
pub fn first_kind_fiber(w: &FinGroup<MonomialAction>, components: &[EQComponentFirst], t: &TorusPoint) -> Result<Vec<(usize, usize)>> {
    let classes = conjugacy_classes(w);
    let stab = stabilizer_of_point(w, t)?;
    let stab_classes = conjugacy_classes(&stab);
    let mut out = Vec::with_capacity(stab_classes.len());
    for &r in &stab_classes.representatives {
        let x = stab.element(r);
        let ci = classes.class_of(w.index_of(x).ok_or(Error::NotInGroup)?);
        let rep = w.element(classes.representatives[ci]);
        // g x g^{-1} = rep, so g t is fixed by rep.
        let g = w
            .elements()
            .iter()
            .find(|g| g.compose(x).compose(&g.inverse()) == *rep)
            .expect("class representative is conjugate to its members");
        let moved = act(g, t)?;
        let comp = components[ci].fixed_locus.component_of(&moved).ok_or_else(|| Error::InvalidInput("point off the fixed locus".into()))?;
        out.push((ci, components[ci].component_orbit[comp]));
    }
    Ok(out)
}

/// A pair `(t, tau)` with `tau` a row of the character table of the
/// stabilizer of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondKindPoint {
    pub t: TorusPoint,
    pub tau: usize,
    pub springer: Option<crate::langlands::SpringerData>,
}

/// One point per irreducible of the stabilizer of the canonical representative.
pub fn second_kind_fiber(w: &FinGroup<MonomialAction>, t: &TorusPoint) -> Result<Vec<SecondKindPoint>> {
    let (t0, _) = canonical_point(w, t)?;
    let stab = TabulatedGroup::new(stabilizer_of_point(w, &t0)?)?;
    Ok((0..stab.table.len()).map(|tau| SecondKindPoint { t: t0.clone(), tau, springer: None }).collect())
}

/// Bijection between classes and irreducibles of one isotropy group.
#[derive(Clone, Debug, Serialize)]
pub struct CIrrEntry {
    /// Elements of the isotropy group, as indices into the ambient group.
    pub members: Vec<usize>,
    pub order: usize,
    /// `(class, row)` pairs in class order.
    pub pairing: Vec<(usize, usize)>,
    pub canonical: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CIrrSystem {
    pub entries: Vec<CIrrEntry>,
}

/// Isotropy groups up to conjugacy: stabilizers of generic points of the
/// components of `T^K`, starting from the stabilizer of a generic point of
/// `T` and enlarging by one element at a time.
pub fn isotropy_groups(w: &FinGroup<MonomialAction>) -> Result<Vec<FinGroup<MonomialAction>>> {
    let n = w.identity().dim();
    let mut found: Vec<FinGroup<MonomialAction>> = Vec::new();
    let mut keys: HashSet<Vec<usize>> = HashSet::new();
    let mut tried: HashSet<Vec<usize>> = HashSet::new();
    let mut pending: Vec<Vec<MonomialAction>> = vec![vec![]];
    while let Some(gens) = pending.pop() {
        let key = index_key(w, w.subgroup_generated(&gens).elements());
        if !tried.insert(key) {
            continue;
        }
        let locus = common_fixed_locus(&gens, n);
        for c in 0..locus.component_count {
            let h = stabilizer_of_point(w, &locus.generic_point(c))?;
            let ck = conjugacy_key(w, &h);
            if keys.insert(ck) {
                for x in w.elements() {
                    if !h.contains(x) {
                        let mut g: Vec<MonomialAction> = h.generators().iter().map(|&i| h.element(i).clone()).collect();
                        g.push(x.clone());
                        pending.push(g);
                    }
                }
                found.push(h);
            }
        }
    }
    found.sort_by_key(|h| (h.order(), conjugacy_key(w, h)));
    Ok(found)
}

fn index_key(w: &FinGroup<MonomialAction>, elems: &[MonomialAction]) -> Vec<usize> {
    let mut k: Vec<usize> = elems.iter().map(|e| w.index_of(e).expect("subgroup element")).collect();
    k.sort_unstable();
    k
}

/// Least sorted index set over all conjugates of `h`.
fn conjugacy_key(w: &FinGroup<MonomialAction>, h: &FinGroup<MonomialAction>) -> Vec<usize> {
    let members: Vec<usize> = h.elements().iter().map(|e| w.index_of(e).unwrap()).collect();
    (0..w.order())
        .map(|g| {
            let mut k: Vec<usize> = members.iter().map(|&m| w.conjugate(g, m)).collect();
            k.sort_unstable();
            k
        })
        .min()
        .unwrap()
}

/// c-Irr system over the isotropy groups of `w`. Isotropy groups generated by
/// reflections in type-A root subsystems pair the class of cycle type
/// `(mu_i)` with the product of Specht characters `chi^{mu_i}`, partition
/// `(n)` being the trivial character; any other group falls back to pairing
/// class-size order with degree order and is flagged non-canonical.
pub fn build_c_irr_system(rd: &RootDatum, w: &FinGroup<MonomialAction>) -> Result<CIrrSystem> {
    let mut entries = Vec::new();
    for h in isotropy_groups(w)? {
        let members = index_key(w, h.elements());
        let tab = TabulatedGroup::new(h)?;
        let (pairing, canonical) = match symmetric_pairing(rd, &tab)? {
            Some(p) => (p, true),
            None => (fallback_pairing(&tab), false),
        };
        entries.push(CIrrEntry { order: tab.group.order(), members, pairing, canonical });
    }
    Ok(CIrrSystem { entries })
}

fn fallback_pairing(tab: &TabulatedGroup<MonomialAction>) -> Vec<(usize, usize)> {
    let sizes = tab.classes.sizes();
    let mut classes: Vec<usize> = (0..sizes.len()).collect();
    classes.sort_by_key(|&c| sizes[c]);
    let mut rows: Vec<usize> = (0..tab.table.len()).collect();
    rows.sort_by_key(|&r| tab.table.degrees()[r]);
    let mut pairing: Vec<(usize, usize)> = classes.into_iter().zip(rows).collect();
    pairing.sort_unstable();
    pairing
}

/// Canonical pairing when `h` is the reflection group of a type-A subsystem.
fn symmetric_pairing(rd: &RootDatum, tab: &TabulatedGroup<MonomialAction>) -> Result<Option<Vec<(usize, usize)>>> {
    let h = &tab.group;
    let roots: Vec<usize> = (0..rd.num_roots()).filter(|&k| h.contains(&rd.reflection(k))).collect();
    let sub = rd.subsystem(&roots);
    if sub.components.iter().any(|c| !matches!(c.cartan_type, CartanType::A(_))) {
        return Ok(None);
    }
    let expected: usize = sub.components.iter().map(|c| (1..=c.cartan_type.rank() + 1).product::<usize>()).product();
    if expected != h.order() {
        return Ok(None);
    }
    let letters: Vec<LetterMap> = sub.components.iter().map(|c| LetterMap::new(rd, &c.simple)).collect();
    let cycle_types: Vec<Vec<Partition>> = tab
        .classes
        .representatives
        .iter()
        .map(|&r| letters.iter().map(|l| Partition::new(l.permutation(rd, h.element(r)).cycle_type())).collect())
        .collect();
    let mut pairing = Vec::with_capacity(cycle_types.len());
    for (c, mus) in cycle_types.iter().enumerate() {
        let values: Vec<crate::cyclotomic::Cyclotomic> = cycle_types
            .iter()
            .map(|nus| {
                let v: i64 = mus.iter().zip(nus).map(|(lam, nu)| murnaghan_nakayama(lam, nu)).product();
                crate::cyclotomic::Cyclotomic::from_integer(v)
            })
            .collect();
        let row = tab.table.find_row(&values).ok_or_else(|| Error::InvalidInput("Specht character not found".into()))?;
        pairing.push((c, row));
    }
    Ok(Some(pairing))
}

/// Letters `1..=k+1` of a type `A_k` component: the root
/// `beta_i + ... + beta_{j-1}` over the chain-ordered simple roots is
/// `e_i - e_j`.
#[derive(Clone, Debug)]
pub(crate) struct LetterMap {
    pub(crate) size: usize,
    /// Root index to ordered letter pair.
    pub(crate) pairs: HashMap<usize, (usize, usize)>,
    /// Ordered letter pair to root index.
    pub(crate) roots: HashMap<(usize, usize), usize>,
}

impl LetterMap {
    pub(crate) fn new(rd: &RootDatum, chain: &[usize]) -> Self {
        let size = chain.len() + 1;
        let mut pairs = HashMap::new();
        let mut roots = HashMap::new();
        for i in 0..size {
            for j in i + 1..size {
                let mut v = vec![0i64; rd.rank];
                for &s in &chain[i..j] {
                    for (x, y) in v.iter_mut().zip(&rd.roots[s]) {
                        *x += y;
                    }
                }
                let k = rd.root_index(&v).expect("consecutive simple roots sum to a root");
                let nk = rd.negative_of(k);
                pairs.insert(k, (i, j));
                pairs.insert(nk, (j, i));
                roots.insert((i, j), k);
                roots.insert((j, i), nk);
            }
        }
        Self { size, pairs, roots }
    }

    /// Permutation of letters induced by `w`, which must preserve the component.
    pub(crate) fn permutation(&self, rd: &RootDatum, w: &MonomialAction) -> crate::fingrp::Perm {
        if self.size == 1 {
            return crate::fingrp::Perm::identity(1);
        }
        let images = (0..self.size)
            .map(|a| {
                let b = if a + 1 < self.size { a + 1 } else { a - 1 };
                let k = self.roots[&(a, b)];
                self.pairs[&rd.act_on_root(w, k)].0 as u32
            })
            .collect();
        crate::fingrp::Perm::new(images).expect("Weyl elements permute letters")
    }
}

/// Image of a first-kind component list under `(t, w) -> (t^f, w)`.
#[derive(Clone, Debug, Serialize)]
pub struct BaseChange {
    pub f: u32,
    /// `maps[class][component]` is the component of `T^w` receiving the
    /// component under the endomorphism.
    pub maps: Vec<Vec<usize>>,
    /// The same at the level of quotient pieces (labelled by least component).
    pub piece_maps: Vec<Vec<(usize, usize)>>,
    pub well_defined: bool,
}

pub fn base_change(w: &FinGroup<MonomialAction>, components: &[EQComponentFirst], f: u32) -> Result<BaseChange> {
    if f == 0 {
        return Err(Error::InvalidInput("base change degree must be positive".into()));
    }
    let mut maps = Vec::with_capacity(components.len());
    let mut piece_maps = Vec::with_capacity(components.len());
    let mut well_defined = true;
    for comp in components {
        let locus = &comp.fixed_locus;
        let mut map = Vec::with_capacity(locus.component_count);
        for c in 0..locus.component_count {
            let t = locus.generic_point(c);
            let tf = t.pow(f as i64);
            let target = locus.component_of(&tf).ok_or_else(|| Error::InvalidInput("power left the fixed locus".into()))?;
            map.push(target);
            for alpha in w.elements() {
                if act(alpha, &tf)? != act(alpha, &t)?.pow(f as i64) {
                    well_defined = false;
                }
            }
        }
        // Constant on centralizer orbits.
        let mut pieces: HashMap<usize, usize> = HashMap::new();
        for (c, &target) in map.iter().enumerate() {
            let src = comp.component_orbit[c];
            let dst = comp.component_orbit[target];
            if *pieces.entry(src).or_insert(dst) != dst {
                well_defined = false;
            }
        }
        let mut pm: Vec<(usize, usize)> = pieces.into_iter().collect();
        pm.sort_unstable();
        maps.push(map);
        piece_maps.push(pm);
    }
    Ok(BaseChange { f, maps, piece_maps, well_defined })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::{close_group, DEFAULT_BOUND};

    #[test]
    fn trivial_group_single_piece() {
        let w = close_group(&[MonomialAction::identity(2)], DEFAULT_BOUND).unwrap();
        let eq = extended_quotient_first(&w).unwrap();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].fixed_locus.dimension, 2);
        assert_eq!(piece_count(&eq), 1);
    }

    #[test]
    fn orbit_labelling() {
        assert_eq!(orbit_labels(4, &[vec![1, 0, 2, 3]]), vec![0, 0, 2, 3]);
        assert_eq!(orbit_labels(3, &[]), vec![0, 1, 2]);
    }
}
