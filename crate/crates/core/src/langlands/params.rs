use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::partition::Partition;
use super::springer::{component_pairs, ComponentCharacters, ComponentSpringer, LocalSystem, OrbitLabel, SpringerData, SpringerPair};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::exquo::{canonical_point, SecondKindPoint};
use crate::fingrp::{tensor, FinGroup, TabulatedGroup};
use crate::torus::{act, MonomialAction, Scalar, TorusPoint};
use crate::weyl::{compute_ws, levi_decompose, weyl_group, InertialDatum, RootDatum, StabilizerDecomposition, Subsystem, WsMode, WsResult};

/// One-parameter subgroup `alpha -> (alpha^{k_1}, ..., alpha^{k_n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cocharacter {
    pub exponents: Vec<i64>,
}

impl Cocharacter {
    pub fn new(exponents: Vec<i64>) -> Self {
        Self { exponents }
    }

    pub fn trivial(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// Jacobson-Morozov cocharacter of Jordan type `lambda` in `GL_n`.
    pub fn jm(lambda: &Partition) -> Self {
        Self { exponents: lambda.jm_exponents() }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    pub fn eval(&self, alpha: &Scalar) -> TorusPoint {
        TorusPoint::from_cocharacter(&self.exponents, alpha)
    }

    pub fn act(&self, w: &MonomialAction) -> Self {
        Self { exponents: w.on_cocharacter(&self.exponents) }
    }
}

/// `Phi(u varpi^n, Y_alpha) = chi_hat(u) t^n h(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LParameter {
    pub chi_hat: InertialDatum,
    pub t: TorusPoint,
    pub h: Cocharacter,
    /// One orbit per component of the root subsystem trivial at `t`.
    pub nilpotent: Vec<OrbitLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReederParameter {
    pub phi: LParameter,
    pub rho: Vec<LocalSystem>,
    pub psi: usize,
    /// Row of the stabilizer character table that the pair labels.
    pub tau: usize,
}

/// Nilpotent class of the cell, and whether it is the zero class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellLabel {
    /// Least member of the `W^s`-orbit of the correcting cocharacter.
    pub h: Vec<i64>,
    /// Orbit label in the whole of `R^s`, when `R^s` is irreducible.
    pub nilpotent: Option<OrbitLabel>,
    pub is_lowest: bool,
}

/// Parameter for `GL_n` in letter coordinates, with `h` the Jacobson-Morozov
/// cocharacter of `lambda`.
pub fn build_phi(chi_hat: &InertialDatum, t: &TorusPoint, lambda: &Partition) -> Result<LParameter> {
    if t.rank() != lambda.n() {
        return Err(Error::DimensionMismatch { expected: t.rank(), found: lambda.n() });
    }
    for g in &chi_hat.generators {
        if g.rank() != t.rank() {
            return Err(Error::DimensionMismatch { expected: t.rank(), found: g.rank() });
        }
    }
    Ok(LParameter {
        chi_hat: chi_hat.clone(),
        t: t.clone(),
        h: Cocharacter::jm(lambda),
        nilpotent: vec![OrbitLabel::Partition(lambda.clone())],
    })
}

/// `prod g_i^{u_i} * t^n * h(alpha)`, with `u` the exponents of `u` on the
/// generators of the image of `chi_hat`.
pub fn eval_phi(p: &LParameter, u: &[i64], n: i64, alpha: &Scalar) -> Result<TorusPoint> {
    if u.len() > p.chi_hat.generators.len() {
        return Err(Error::DimensionMismatch { expected: p.chi_hat.generators.len(), found: u.len() });
    }
    let mut x = p.t.pow(n);
    for (g, &k) in p.chi_hat.generators.iter().zip(u) {
        x = x.mul(&g.pow(k))?;
    }
    x.mul(&p.h.eval(alpha))
}

/// Principal-series block attached to an inertial datum.
#[derive(Clone, Debug)]
pub struct PrincipalSeries {
    pub rd: RootDatum,
    pub inert: InertialDatum,
    pub ws: WsResult,
    /// Roots of `R^s`.
    pub rs: Subsystem,
}

struct Labelled {
    combo: Vec<usize>,
    values: Vec<Cyclotomic>,
}

impl PrincipalSeries {
    pub fn new(rd: RootDatum, inert: InertialDatum, mode: WsMode, bound: usize) -> Result<Self> {
        let w = weyl_group(&rd, bound)?;
        let ws = compute_ws(&rd, &w, &inert, mode, bound)?;
        let rs = rd.subsystem(&ws.roots);
        Ok(Self { rd, inert, ws, rs })
    }

    pub fn group(&self) -> &FinGroup<MonomialAction> {
        &self.ws.group
    }

    /// Least point of the `W^s`-orbit.
    pub fn canonical(&self, t: &TorusPoint) -> Result<TorusPoint> {
        Ok(canonical_point(self.group(), t)?.0)
    }

    /// Least member of the `W^s`-orbit of a cocharacter.
    pub fn canonical_h(&self, h: &[i64]) -> Vec<i64> {
        self.group().elements().iter().map(|w| w.on_cocharacter(h)).min().unwrap_or_else(|| h.to_vec())
    }

    /// Second-kind points over the orbit of `t`, each labelled by Springer
    /// data through `W_t = W_M0 x| pi0` and Clifford theory. Points sit at
    /// the canonical representative of the orbit.
    pub fn springer_fiber(&self, t: &TorusPoint) -> Result<Vec<SecondKindPoint>> {
        let t0 = self.canonical(t)?;
        let dec = levi_decompose(&self.rd, self.group(), &t0)?;
        let sub = self.rd.subsystem(&dec.vanishing_roots);
        let pairs: Vec<Vec<SpringerPair>> = sub.components.iter().map(|c| component_pairs(&self.rd, c)).collect::<Result<_>>()?;

        let m0 = TabulatedGroup::new(dec.w_m0.clone())?;
        let chars: Vec<ComponentCharacters> = sub.components.iter().map(|c| ComponentCharacters::new(&self.rd, c)).collect();
        let labelled = product_characters(&m0, &pairs, &chars);
        let mut row_of_combo: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut combo_of_row: HashMap<usize, Vec<usize>> = HashMap::new();
        for l in &labelled {
            let row = m0.table.find_row(&l.values).ok_or_else(|| Error::InconsistentLabels("Springer character is not irreducible".into()))?;
            if combo_of_row.insert(row, l.combo.clone()).is_some() {
                return Err(Error::InconsistentLabels("two Springer pairs share a character".into()));
            }
            row_of_combo.insert(l.combo.clone(), row);
        }
        if row_of_combo.len() != m0.table.len() {
            return Err(Error::InconsistentLabels("Springer pairs do not exhaust the irreducibles".into()));
        }

        let h_of = |combo: &[usize]| {
            let mut h = vec![0; self.rd.rank];
            for (c, &i) in combo.iter().enumerate() {
                for (x, y) in h.iter_mut().zip(&pairs[c][i].h) {
                    *x += y;
                }
            }
            h
        };
        let data_of = |combo: &[usize], m0_row: usize, psi: usize| SpringerData {
            components: combo
                .iter()
                .enumerate()
                .map(|(c, &i)| ComponentSpringer {
                    cartan_type: sub.components[c].cartan_type.clone(),
                    orbit: pairs[c][i].orbit.clone(),
                    rho: pairs[c][i].rho,
                })
                .collect(),
            m0_row,
            psi,
            h: h_of(combo),
        };

        let wt = TabulatedGroup::new(dec.w_t.clone())?;
        if dec.pi0.order() == 1 {
            return row_of_combo
                .iter()
                .map(|(combo, &row)| {
                    let values = m0.restrict(m0.table.row(row), &wt)?;
                    let tau = wt.table.find_row(&values).expect("same group");
                    Ok(SecondKindPoint { t: t0.clone(), tau, springer: Some(data_of(combo, row, 0)) })
                })
                .collect();
        }

        let conj = conjugation_action(&m0, &dec.pi0);
        let mut points = Vec::new();
        let mut seen = vec![false; m0.table.len()];
        for (combo, &row) in &row_of_combo {
            if seen[row] {
                continue;
            }
            let orbit: Vec<usize> = (0..dec.pi0.order()).map(|s| conj[s][row]).collect();
            for &r in &orbit {
                seen[r] = true;
            }
            // Orbits are visited from their least combination.
            let stab: Vec<MonomialAction> = (0..dec.pi0.order()).filter(|&s| conj[s][row] == row).map(|s| dec.pi0.element(s).clone()).collect();
            let s_group = FinGroup::from_closed_elements(stab);
            let s_tab = TabulatedGroup::new(s_group)?;
            let k_group = dec.w_t.subgroup_where(|x| s_tab.group.contains(&pi0_part(&dec, x)));
            let k_tab = TabulatedGroup::new(k_group)?;
            let chi = m0.table.row(row);
            let extension = (0..k_tab.table.len())
                .find(|&r| k_tab.restrict(k_tab.table.row(r), &m0).map(|v| v == chi).unwrap_or(false))
                .ok_or_else(|| Error::InconsistentLabels("no extension to the inertia group".into()))?;
            for psi in 0..s_tab.table.len() {
                let inflated: Vec<Cyclotomic> = k_tab
                    .classes
                    .representatives
                    .iter()
                    .map(|&k| {
                        let s = pi0_part(&dec, k_tab.group.element(k));
                        s_tab.table.row(psi)[s_tab.class_of_element(&s).expect("pi0 part in stabilizer")].clone()
                    })
                    .collect();
                let theta = tensor(k_tab.table.row(extension), &inflated);
                let induced = wt.induce(&theta, &k_tab)?;
                let tau = wt.table.find_row(&induced).ok_or_else(|| Error::InconsistentLabels("induced character is reducible".into()))?;
                points.push(SecondKindPoint { t: t0.clone(), tau, springer: Some(data_of(combo, row, psi)) });
            }
        }
        let mut taus: Vec<usize> = points.iter().map(|p| p.tau).collect();
        taus.sort_unstable();
        taus.dedup();
        if taus.len() != points.len() || taus.len() != wt.table.len() {
            return Err(Error::InconsistentLabels(format!("{} labels for {} irreducibles", points.len(), wt.table.len())));
        }
        Ok(points)
    }

    pub fn cell_of(&self, p: &SecondKindPoint) -> Result<CellLabel> {
        let data = springer(p)?;
        let h = self.canonical_h(&data.h);
        let is_lowest = h.iter().all(|&k| k == 0);
        let nilpotent = match self.rs.components.as_slice() {
            [comp] => {
                let pairs = component_pairs(&self.rd, comp)?;
                pairs.into_iter().find(|q| self.canonical_h(&q.h) == h).map(|q| q.orbit)
            }
            _ => None,
        };
        Ok(CellLabel { h, nilpotent, is_lowest })
    }

    /// Orbit of `t h_c(alpha)`, as its canonical representative.
    pub fn pi_alpha(&self, p: &SecondKindPoint, alpha: &Scalar) -> Result<TorusPoint> {
        let data = springer(p)?;
        self.canonical(&p.t.mul(&TorusPoint::from_cocharacter(&data.h, alpha))?)
    }

    /// Orbit of `Phi(varpi, Y_alpha)`, as its canonical representative.
    pub fn i_alpha(&self, rp: &ReederParameter, alpha: &Scalar) -> Result<TorusPoint> {
        self.canonical(&eval_phi(&rp.phi, &[], 1, alpha)?)
    }

    /// Reeder parameter of `(t, x, rho, psi)`; the labels are those produced
    /// by [`PrincipalSeries::springer_fiber`] at the canonical point.
    pub fn mu_assemble(&self, t: &TorusPoint, orbits: &[OrbitLabel], rho: &[LocalSystem], psi: usize) -> Result<ReederParameter> {
        let fiber = self.springer_fiber(t)?;
        let p = fiber
            .iter()
            .find(|p| {
                let d = p.springer.as_ref().unwrap();
                d.orbits() == orbits && d.rhos() == rho && d.psi == psi
            })
            .ok_or_else(|| Error::InconsistentLabels(format!("no point with orbits {orbits:?}, local systems {rho:?}, psi {psi}")))?;
        self.mu_of_point(p)
    }

    pub fn mu_of_point(&self, p: &SecondKindPoint) -> Result<ReederParameter> {
        let data = springer(p)?;
        Ok(ReederParameter {
            phi: LParameter { chi_hat: self.inert.clone(), t: p.t.clone(), h: Cocharacter::new(data.h.clone()), nilpotent: data.orbits() },
            rho: data.rhos(),
            psi: data.psi,
            tau: p.tau,
        })
    }

    /// Same cell, and one `w` in `W^s` carrying `t` to `t'` and `h_c` to `h_c'`.
    pub fn lpacket_equiv(&self, p: &SecondKindPoint, q: &SecondKindPoint) -> Result<bool> {
        if p.t.rank() != self.rd.rank || q.t.rank() != self.rd.rank {
            return Err(Error::MismatchedGroups);
        }
        if self.cell_of(p)? != self.cell_of(q)? {
            return Ok(false);
        }
        let (hp, hq) = (&springer(p)?.h, &springer(q)?.h);
        for w in self.group().elements() {
            if w.on_cocharacter(hp) == *hq && act(w, &p.t)? == q.t {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Classes of [`PrincipalSeries::lpacket_equiv`], as sorted index lists.
    pub fn lpackets(&self, points: &[SecondKindPoint]) -> Result<Vec<Vec<usize>>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for i in 0..points.len() {
            for class in classes.iter_mut() {
                if self.lpacket_equiv(&points[class[0]], &points[i])? {
                    class.push(i);
                    continue 'outer;
                }
            }
            classes.push(vec![i]);
        }
        Ok(classes)
    }
}

fn springer(p: &SecondKindPoint) -> Result<&SpringerData> {
    p.springer.as_ref().ok_or(Error::MissingSpringerData)
}

fn pi0_part(dec: &StabilizerDecomposition, x: &MonomialAction) -> MonomialAction {
    let wi = dec.w_t.index_of(x).expect("element of the stabilizer");
    let k = dec.witness.binary_search_by_key(&wi, |x| x.0).expect("every element is factored");
    dec.pi0.element(dec.witness[k].2).clone()
}

/// Products of component characters on `W_M0`, one per combination of pairs.
fn product_characters(m0: &TabulatedGroup<MonomialAction>, pairs: &[Vec<SpringerPair>], chars: &[ComponentCharacters]) -> Vec<Labelled> {
    let mut combos: Vec<Vec<usize>> = vec![vec![]];
    for list in pairs {
        combos = combos.into_iter().flat_map(|c| (0..list.len()).map(move |i| [c.clone(), vec![i]].concat())).collect();
    }
    combos
        .into_iter()
        .map(|combo| {
            let values = m0
                .classes
                .representatives
                .iter()
                .map(|&r| {
                    let m = m0.group.element(r);
                    let v: i64 = combo.iter().enumerate().map(|(c, &i)| chars[c].value(&pairs[c][i].character, m)).product();
                    Cyclotomic::from_integer(v)
                })
                .collect();
            Labelled { combo, values }
        })
        .collect()
}

/// `conj[s][row]` is the row of `m -> chi(s^-1 m s)`.
fn conjugation_action(m0: &TabulatedGroup<MonomialAction>, pi0: &FinGroup<MonomialAction>) -> Vec<Vec<usize>> {
    use crate::fingrp::GroupElement;
    pi0.elements()
        .iter()
        .map(|s| {
            let class_map: Vec<usize> = m0
                .classes
                .representatives
                .iter()
                .map(|&r| {
                    let m = m0.group.element(r);
                    m0.class_of_element(&s.inverse().compose(m).compose(s)).expect("pi0 normalises W_M0")
                })
                .collect();
            (0..m0.table.len())
                .map(|row| {
                    let values: Vec<Cyclotomic> = class_map.iter().map(|&c| m0.table.row(row)[c].clone()).collect();
                    m0.table.find_row(&values).expect("conjugate of an irreducible")
                })
                .collect()
        })
        .collect()
}
