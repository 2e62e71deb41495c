use std::collections::{HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingrp::{close_group_with_identity, FinGroup};
use crate::torus::MonomialAction;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Root datum with roots in `X` and coroots in `X_*`, both written against
/// fixed dual bases. `roots[k]` pairs with `coroots[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
    #[serde(default)]
    pub name: String,
    #[serde(skip)]
    positive: Vec<bool>,
    #[serde(skip)]
    lookup: HashMap<Vec<i64>, usize>,
}

/// Dynkin type of an irreducible component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B2,
    G2,
    Other(usize),
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match self {
            CartanType::A(n) | CartanType::Other(n) => *n,
            CartanType::B2 | CartanType::G2 => 2,
        }
    }
}

/// Irreducible component of a root subsystem; `simple` lists root indices in
/// Dynkin-chain order for type A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub cartan_type: CartanType,
    pub simple: Vec<usize>,
    pub positive: Vec<usize>,
}

/// Root subsystem with the positive system induced from the ambient one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subsystem {
    pub roots: Vec<usize>,
    pub positive: Vec<usize>,
    pub simple: Vec<usize>,
    pub components: Vec<Component>,
}

impl RootDatum {
    /// Validates and indexes a datum given by its full root list.
    pub fn new(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>, simple: Vec<usize>, name: &str) -> Result<Self> {
        let mut rd = Self {
            rank,
            roots,
            coroots,
            simple,
            name: name.to_string(),
            positive: vec![],
            lookup: HashMap::new(),
        };
        rd.index()?;
        Ok(rd)
    }

    /// Completes the datum from simple roots and coroots by reflecting.
    pub fn from_simple(rank: usize, simple_roots: &[Vec<i64>], simple_coroots: &[Vec<i64>], name: &str) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidRootDatum("roots and coroots differ in number".into()));
        }
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut coroots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for (a, c) in simple_roots.iter().zip(simple_coroots) {
            if a.len() != rank || c.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: a.len().max(c.len()) });
            }
            if !seen.contains_key(a) {
                seen.insert(a.clone(), roots.len());
                roots.push(a.clone());
                coroots.push(c.clone());
                queue.push_back(roots.len() - 1);
            }
        }
        while let Some(k) = queue.pop_front() {
            for (aj, cj) in simple_roots.iter().zip(simple_coroots) {
                let (a, c) = (&roots[k], &coroots[k]);
                let p = dot(a, cj);
                let q = dot(aj, c);
                let a2: Vec<i64> = a.iter().zip(aj).map(|(x, y)| x - p * y).collect();
                let c2: Vec<i64> = c.iter().zip(cj).map(|(x, y)| x - q * y).collect();
                if !seen.contains_key(&a2) {
                    if roots.len() > 10_000 {
                        return Err(Error::InvalidRootDatum("root system is not finite".into()));
                    }
                    seen.insert(a2.clone(), roots.len());
                    roots.push(a2);
                    coroots.push(c2);
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        let simple = (0..simple_roots.len()).collect();
        Self::new(rank, roots, coroots, simple, name)
    }

    /// Datum of the given Cartan matrix `A_ij = <alpha_i, alpha_j^vee>`; the
    /// lattice is the root lattice when `adjoint`, else the weight lattice.
    pub fn from_cartan(cartan: &[Vec<i64>], adjoint: bool, name: &str) -> Result<Self> {
        let n = cartan.len();
        let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
        let (sr, sc): (Vec<_>, Vec<_>) = if adjoint {
            (0..n).map(|i| (unit(i), (0..n).map(|k| cartan[k][i]).collect())).unzip()
        } else {
            (0..n).map(|i| (cartan[i].clone(), unit(i))).unzip()
        };
        Self::from_simple(n, &sr, &sc, name)
    }

    /// Built-in data: `GLn`, `SLn`, `PGLn` (2 <= n <= 7), `B2`, `C2`, `G2`.
    pub fn builtin(name: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedType(name.to_string());
        let upper = name.to_ascii_uppercase();
        let parse_n = |prefix: &str| -> Option<usize> {
            upper.strip_prefix(prefix)?.parse().ok().filter(|n| (2..=7).contains(n))
        };
        if let Some(n) = parse_n("PGL") {
            return Self::from_cartan(&cartan_a(n - 1), true, &format!("PGL{n}"));
        }
        if let Some(n) = parse_n("SL") {
            return Self::from_cartan(&cartan_a(n - 1), false, &format!("SL{n}"));
        }
        if let Some(n) = parse_n("GL") {
            return Self::general_linear(n);
        }
        match upper.as_str() {
            "B2" | "SO5" => Self::from_cartan(&[vec![2, -2], vec![-1, 2]], true, "B2"),
            "C2" | "SP4" => Self::from_cartan(&[vec![2, -1], vec![-2, 2]], false, "C2"),
            "G2" => Self::from_cartan(&[vec![2, -1], vec![-3, 2]], true, "G2"),
            _ => Err(unsupported()),
        }
    }

    /// `GL(n)`: `X = Z^n`, roots and coroots `e_i - e_j`.
    pub fn general_linear(n: usize) -> Result<Self> {
        let simple: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| (0..n).map(|k| if k == i { 1 } else if k == i + 1 { -1 } else { 0 }).collect())
            .collect();
        Self::from_simple(n, &simple, &simple, &format!("GL{n}"))
    }

    fn index(&mut self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidRootDatum(m.to_string()));
        if self.roots.len() != self.coroots.len() {
            return bad("roots and coroots differ in number");
        }
        for (a, c) in self.roots.iter().zip(&self.coroots) {
            if a.len() != self.rank || c.len() != self.rank {
                return Err(Error::DimensionMismatch { expected: self.rank, found: a.len().max(c.len()) });
            }
            if dot(a, c) != 2 {
                return bad("a root pairs with its coroot to a value other than 2");
            }
        }
        self.lookup = self.roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        if self.lookup.len() != self.roots.len() {
            return bad("repeated root");
        }
        let coroot_set: HashMap<&Vec<i64>, usize> = self.coroots.iter().enumerate().map(|(i, c)| (c, i)).collect();
        for &s in &self.simple {
            if s >= self.roots.len() {
                return bad("simple index out of range");
            }
            for k in 0..self.roots.len() {
                let (a, c) = (&self.roots[k], &self.coroots[k]);
                let p = dot(a, &self.coroots[s]);
                let q = dot(&self.roots[s], c);
                let a2: Vec<i64> = a.iter().zip(&self.roots[s]).map(|(x, y)| x - p * y).collect();
                let c2: Vec<i64> = c.iter().zip(&self.coroots[s]).map(|(x, y)| x - q * y).collect();
                match (self.lookup.get(&a2), coroot_set.get(&c2)) {
                    (Some(i), Some(j)) if i == j => {}
                    _ => return bad("root set is not stable under simple reflections"),
                }
            }
        }

        // Positivity through v with <alpha_s, v> = 1 for every simple s.
        let v = solve_heights(&self.simple.iter().map(|&s| self.roots[s].clone()).collect::<Vec<_>>(), self.rank)
            .ok_or_else(|| Error::InvalidRootDatum("simple roots are linearly dependent".into()))?;
        let mut positive = Vec::with_capacity(self.roots.len());
        for a in &self.roots {
            let h: BigRational = a.iter().zip(&v).map(|(x, y)| y * BigRational::from_integer((*x).into())).sum();
            if h.is_zero() {
                return bad("a root is neither positive nor negative");
            }
            positive.push(h.is_positive());
        }
        self.positive = positive;
        Ok(())
    }

    /// Re-derives the private index after deserialisation.
    pub fn validated(mut self) -> Result<Self> {
        self.index()?;
        Ok(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<Self>(s)?.validated()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        self.positive[k]
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&k| self.positive[k]).collect()
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn negative_of(&self, k: usize) -> usize {
        let neg: Vec<i64> = self.roots[k].iter().map(|x| -x).collect();
        self.lookup[&neg]
    }

    /// `<alpha_a, alpha_b^vee>`
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        dot(&self.roots[a], &self.coroots[b])
    }

    /// `s_alpha` on `X_*`: `I - alpha^vee alpha^T`.
    pub fn reflection(&self, k: usize) -> MonomialAction {
        let n = self.rank;
        let (a, c) = (&self.roots[k], &self.coroots[k]);
        let m = (0..n * n).map(|idx| i64::from(idx / n == idx % n) - c[idx / n] * a[idx % n]).collect();
        MonomialAction::from_raw(n, m)
    }

    /// Index of the root `w(alpha_k)`.
    pub fn act_on_root(&self, w: &MonomialAction, k: usize) -> usize {
        self.lookup[&w.on_character(&self.roots[k])]
    }

    pub fn simple_reflections(&self) -> Vec<MonomialAction> {
        self.simple.iter().map(|&s| self.reflection(s)).collect()
    }

    /// Subgroup closure of the reflections in `roots` (trivial when empty).
    pub fn reflection_group(&self, roots: &[usize], bound: usize) -> Result<FinGroup<MonomialAction>> {
        let gens: Vec<MonomialAction> = roots.iter().map(|&k| self.reflection(k)).collect();
        close_group_with_identity(MonomialAction::identity(self.rank), &gens, bound)
    }

    /// Positive system, simple roots and irreducible components of the
    /// subsystem formed by `roots` (closed under negation).
    pub fn subsystem(&self, roots: &[usize]) -> Subsystem {
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        roots.dedup();
        let positive: Vec<usize> = roots.iter().copied().filter(|&k| self.positive[k]).collect();
        let pos_set: std::collections::HashSet<&Vec<i64>> = positive.iter().map(|&k| &self.roots[k]).collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&k| {
                !positive.iter().any(|&j| {
                    let diff: Vec<i64> = self.roots[k].iter().zip(&self.roots[j]).map(|(x, y)| x - y).collect();
                    pos_set.contains(&diff)
                })
            })
            .collect();

        let mut comp_of = vec![usize::MAX; simple.len()];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..simple.len() {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let c = comps.len();
            let mut members = vec![s];
            comp_of[s] = c;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in 0..simple.len() {
                    if comp_of[y] == usize::MAX && self.pairing(simple[x], simple[y]) != 0 {
                        comp_of[y] = c;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            comps.push(members.into_iter().map(|i| simple[i]).collect());
        }
        let components = comps
            .into_iter()
            .map(|c| {
                let ordered = chain_order(self, &c);
                let cartan_type = classify(self, &c, ordered.is_some());
                let sub: std::collections::HashSet<usize> = c.iter().copied().collect();
                let positive = positive
                    .iter()
                    .copied()
                    .filter(|&k| self.support_within(k, &simple, &sub))
                    .collect();
                Component { cartan_type, simple: ordered.unwrap_or(c), positive }
            })
            .collect();
        Subsystem { roots, positive, simple, components }
    }

    /// Whether the expansion of root `k` over `simple` uses only `within`.
    fn support_within(&self, k: usize, simple: &[usize], within: &std::collections::HashSet<usize>) -> bool {
        let basis: Vec<Vec<i64>> = simple.iter().map(|&s| self.roots[s].clone()).collect();
        let coeffs = solve_combination(&basis, &self.roots[k]).expect("root lies in the span of its simple roots");
        simple.iter().zip(&coeffs).all(|(s, c)| c.is_zero() || within.contains(s))
    }

    /// Highest root of a component: the positive root of greatest height.
    pub fn highest_root(&self, component: &Component, long: bool) -> usize {
        let basis: Vec<Vec<i64>> = component.simple.iter().map(|&s| self.roots[s].clone()).collect();
        let max_len = component.positive.iter().map(|&k| self.root_length(k)).max().unwrap_or(0);
        component
            .positive
            .iter()
            .copied()
            .filter(|&k| (self.root_length(k) == max_len) == long || component.simple.len() == 1)
            .max_by_key(|&k| {
                let c = solve_combination(&basis, &self.roots[k]).unwrap();
                c.iter().sum::<BigRational>()
            })
            .expect("component has positive roots")
    }

    /// `sum_beta <alpha_k, beta^vee>^2`, a W-invariant form proportional to
    /// the squared length on each irreducible component.
    pub fn root_length(&self, k: usize) -> i64 {
        self.coroots.iter().map(|c| dot(&self.roots[k], c).pow(2)).sum()
    }

    /// Whether root `k` is long inside its irreducible component.
    pub fn is_long_in(&self, component: &Component, k: usize) -> bool {
        let max_len = component.positive.iter().map(|&j| self.root_length(j)).max().unwrap_or(0);
        self.root_length(k) == max_len
    }
}

fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Simple roots of a simply-laced path in chain order, or `None` when the
/// Dynkin diagram is not a path.
fn chain_order(rd: &RootDatum, comp: &[usize]) -> Option<Vec<usize>> {
    if comp.len() == 1 {
        return Some(comp.to_vec());
    }
    let adj = |a: usize, b: usize| a != b && rd.pairing(a, b) != 0;
    let degree = |a: usize| comp.iter().filter(|&&b| adj(a, b)).count();
    if comp.iter().any(|&a| degree(a) > 2) {
        return None;
    }
    let start = *comp.iter().filter(|&&a| degree(a) == 1).min()?;
    let mut order = vec![start];
    while order.len() < comp.len() {
        let last = *order.last().unwrap();
        let next = comp.iter().copied().find(|&b| adj(last, b) && !order.contains(&b))?;
        order.push(next);
    }
    Some(order)
}

fn classify(rd: &RootDatum, comp: &[usize], is_path: bool) -> CartanType {
    let max_bond = comp
        .iter()
        .flat_map(|&a| comp.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| rd.pairing(a, b) * rd.pairing(b, a))
        .max()
        .unwrap_or(0);
    match (comp.len(), max_bond) {
        (n, 0 | 1) if is_path => CartanType::A(n),
        (2, 2) => CartanType::B2,
        (2, 3) => CartanType::G2,
        (n, _) => CartanType::Other(n),
    }
}

/// Some rational `v` with `<r, v> = 1` for every row `r`.
fn solve_heights(rows: &[Vec<i64>], n: usize) -> Option<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            row.push(BigRational::from_integer(1.into()));
            row
        })
        .collect();
    let pivots = rational_rref(&mut m, n);
    if pivots.len() < rows.len() {
        return None;
    }
    let mut v = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = m[r][n].clone();
    }
    Some(v)
}

/// Coefficients expressing `target` over the independent vectors `basis`.
pub(crate) fn solve_combination(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = target.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(b[i].into())).collect();
            row.push(BigRational::from_integer(target[i].into()));
            row
        })
        .collect();
    let pivots = rational_rref(&mut m, k);
    if m.iter().skip(pivots.len()).any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}

/// Reduced row echelon form over the first `cols` columns; returns pivots.
fn rational_rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(s) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, s);
        let p = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Weyl group as the closure of the simple reflections acting on `X_*`.
pub fn weyl_group(rd: &RootDatum, bound: usize) -> Result<FinGroup<MonomialAction>> {
    close_group_with_identity(MonomialAction::identity(rd.rank), &rd.simple_reflections(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::DEFAULT_BOUND;

    #[test]
    fn builtin_sizes() {
        for (name, roots, order) in [("PGL2", 2, 2), ("PGL4", 12, 24), ("SL4", 12, 24), ("GL3", 6, 6), ("B2", 8, 8), ("G2", 12, 12)] {
            let rd = RootDatum::builtin(name).unwrap();
            assert_eq!(rd.num_roots(), roots, "{name}");
            assert_eq!(weyl_group(&rd, DEFAULT_BOUND).unwrap().order(), order, "{name}");
            assert_eq!(rd.positive_roots().len() * 2, roots);
        }
        assert!(RootDatum::builtin("E8").is_err());
    }

    #[test]
    fn subsystem_types() {
        let g2 = RootDatum::builtin("G2").unwrap();
        let all: Vec<usize> = (0..12).collect();
        let sub = g2.subsystem(&all);
        assert_eq!(sub.components.len(), 1);
        assert_eq!(sub.components[0].cartan_type, CartanType::G2);
        let a3 = RootDatum::builtin("PGL4").unwrap();
        let sub = a3.subsystem(&(0..12).collect::<Vec<_>>());
        assert_eq!(sub.components[0].cartan_type, CartanType::A(3));
        assert_eq!(sub.simple.len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let rd = RootDatum::builtin("G2").unwrap();
        let s = serde_json::to_string(&rd).unwrap();
        let back = RootDatum::from_json(&s).unwrap();
        assert_eq!(back, rd);
        let bad = r#"{"rank":1,"roots":[[1],[-1]],"coroots":[[1],[-1]],"simple":[0]}"#;
        assert!(RootDatum::from_json(bad).is_err());
    }
}
