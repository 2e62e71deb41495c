//! Exact character tables.
//!
//! Class-sum matrices are diagonalised simultaneously over a prime field
//! `F_p` with `p = 1 mod exponent(G)` and `p > 2 sqrt|G|`; each modular
//! character value is then lifted to `Q(zeta_o)` through the eigenvalue
//! multiplicities of `rho(g)`, where `o` is the order of `g`.

use std::cmp::Ordering;

use num_rational::BigRational;
use serde::Serialize;

use super::classes::{conjugacy_classes, ConjClassSet};
use super::group::{FinGroup, GroupElement};
use crate::cyclotomic::{Cyclotomic, CyclotomicRepr};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CharTable {
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    class_sizes: Vec<usize>,
    class_orders: Vec<usize>,
    inverse_classes: Vec<usize>,
    group_order: usize,
    exponent: u32,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_orders(&self) -> &[usize] {
        &self.class_orders
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `<a, b> = |G|^{-1} sum_c |C_c| a(c) conj(b(c))`
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let total: Cyclotomic = (0..self.class_sizes.len())
            .map(|c| (&a[c] * &b[self.inverse_classes[c]]).scale(&rational(self.class_sizes[c] as i64, 1)))
            .sum();
        total.scale(&rational(1, self.group_order as i64))
    }

    /// Multiplicities of each irreducible in `f`, or `None` when some
    /// multiplicity is not an integer.
    pub fn decompose(&self, f: &[Cyclotomic]) -> Option<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let m = self.inner_product(f, row).to_integer()?;
                num_traits::ToPrimitive::to_i64(&m)
            })
            .collect()
    }

    pub fn find_row(&self, f: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == f)
    }

    /// Exact first and second orthogonality relations.
    pub fn check_orthogonality(&self) -> bool {
        let r = self.rows.len();
        for i in 0..r {
            for j in 0..r {
                let want = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if self.inner_product(&self.rows[i], &self.rows[j]) != want {
                    return false;
                }
            }
        }
        for c in 0..r {
            for d in 0..r {
                let s: Cyclotomic = self
                    .rows
                    .iter()
                    .map(|row| &row[c] * &row[self.inverse_classes[d]])
                    .sum();
                let want = if c == d {
                    Cyclotomic::from_integer((self.group_order / self.class_sizes[c]) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if s != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_repr(&self) -> CharTableRepr {
        CharTableRepr {
            group_order: self.group_order,
            root_order: self.exponent,
            class_sizes: self.class_sizes.clone(),
            class_orders: self.class_orders.clone(),
            degrees: self.degrees.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|v| v.repr_over(self.exponent)).collect())
                .collect(),
        }
    }
}

/// JSON form of a [`CharTable`]; values are coefficient vectors over
/// `zeta_{root_order}`.
#[derive(Clone, Debug, Serialize)]
pub struct CharTableRepr {
    pub group_order: usize,
    pub root_order: u32,
    pub class_sizes: Vec<usize>,
    pub class_orders: Vec<usize>,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<CyclotomicRepr>>,
}

impl Serialize for CharTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = 1 mod e` with `p > 2 sqrt(n)`, and a primitive `e`-th
/// root of unity in `F_p`.
fn choose_prime(e: u64, n: u64) -> (u64, u64) {
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * n) {
        p += e;
    }
    let factors = prime_factors(p - 1);
    let g = (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1);
    (p, pow_mod(g, (p - 1) / e, p))
}

/// Row-reduces in place; returns pivot columns.
fn rref(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(s) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, s);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    pivots
}

fn null_space(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Splits `F_p^r` into the common one-dimensional eigenspaces of `mats`.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], r: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![(identity, 0usize)];
    let mut done = Vec::new();
    while let Some((basis, start)) = pending.pop() {
        if basis.len() == 1 {
            done.push(basis.into_iter().next().unwrap());
            continue;
        }
        let mut split = false;
        for (i, a) in mats.iter().enumerate().skip(start) {
            let pieces = eigenspaces(a, &basis, p);
            if pieces.len() > 1 {
                let dim: usize = pieces.iter().map(Vec::len).sum();
                if dim != basis.len() {
                    return Err(Error::InvalidInput("class algebra is not split over the chosen prime".into()));
                }
                pending.extend(pieces.into_iter().map(|b| (b, i + 1)));
                split = true;
                break;
            }
        }
        if !split {
            return Err(Error::InvalidInput("class sums do not separate the characters".into()));
        }
    }
    Ok(done)
}

/// Eigenspaces of `a` restricted to the invariant subspace with RREF basis `basis`.
fn eigenspaces(a: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    let r = a.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
    let mut m = vec![vec![0u64; d]; d];
    for (s, b) in basis.iter().enumerate() {
        for (t, &pc) in pivots.iter().enumerate() {
            m[t][s] = (0..r).fold(0, |acc, k| (acc + a[pc][k] * b[k]) % p);
        }
    }
    let mut out = Vec::new();
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { (m[i][j] + p - lambda) % p } else { m[i][j] }).collect())
            .collect();
        let ns = null_space(&shifted, p);
        if ns.is_empty() {
            continue;
        }
        let mut sub: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| (0..r).map(|k| (0..d).fold(0, |acc, s| (acc + c[s] * basis[s][k]) % p)).collect())
            .collect();
        rref(&mut sub, p);
        let full = ns.len() == d;
        out.push(sub);
        if full || out.iter().map(Vec::len).sum::<usize>() == d {
            break;
        }
    }
    out
}

pub fn character_table<E: GroupElement>(g: &FinGroup<E>, classes: &ConjClassSet) -> Result<CharTable> {
    let n = g.order();
    let r = classes.len();
    let e = g.exponent();
    let (p, z) = choose_prime(e as u64, n as u64);

    // a[i][j][k] = #{x in C_i : x^{-1} g_k in C_j}
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for (i, members) in classes.classes.iter().enumerate() {
        for (k, &gk) in classes.representatives.iter().enumerate() {
            for &x in members {
                let j = classes.class_of(g.mul(g.inv(x), gk));
                mats[i][j][k] += 1;
            }
        }
    }
    for m in mats.iter_mut().flatten().flatten() {
        *m %= p;
    }

    let sizes = classes.sizes();
    let inverse_classes: Vec<usize> = (0..r).map(|c| classes.inverse_class(g, c)).collect();
    let class_orders: Vec<usize> = classes.representatives.iter().map(|&x| g.element_order(x)).collect();
    let power_classes: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let rep = classes.representatives[c];
            let mut x = 0;
            (0..class_orders[c])
                .map(|_| {
                    let cl = classes.class_of(x);
                    x = g.mul(x, rep);
                    cl
                })
                .collect()
        })
        .collect();

    let omegas = common_eigenvectors(&mats[1..], r, p)?;
    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for mut w in omegas {
        let inv0 = inv_mod(w[0], p);
        for x in w.iter_mut() {
            *x = *x * inv0 % p;
        }
        let s = (0..r).fold(0, |acc, i| (acc + w[i] * w[inverse_classes[i]] % p * inv_mod(sizes[i] as u64 % p, p)) % p);
        let d2 = n as u64 % p * inv_mod(s, p) % p;
        let d = (1..)
            .take_while(|d: &u64| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::InvalidInput("no integral degree for a central character".into()))?;
        let modular: Vec<u64> = (0..r).map(|i| d * w[i] % p * inv_mod(sizes[i] as u64 % p, p) % p).collect();

        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let o = class_orders[c];
            let zo = pow_mod(z, (e / o) as u64, p);
            let inv_o = inv_mod(o as u64 % p, p);
            let mut coeffs = Vec::with_capacity(o);
            for k in 0..o {
                let m = (0..o).fold(0, |acc, l| {
                    let twist = pow_mod(zo, ((o - (k * l) % o) % o) as u64, p);
                    (acc + modular[power_classes[c][l]] * twist) % p
                }) * inv_o
                    % p;
                if m > d {
                    return Err(Error::InvalidInput("eigenvalue multiplicity out of range".into()));
                }
                coeffs.push(BigRational::from_integer((m as i64).into()));
            }
            row.push(Cyclotomic::new(o as u32, coeffs));
        }
        rows.push(row);
        degrees.push(d);
    }

    if degrees.iter().map(|d| d * d).sum::<u64>() != n as u64 {
        return Err(Error::InvalidInput("degrees do not account for the group order".into()));
    }

    let mut order: Vec<usize> = (0..rows.len()).collect();
    let trivial = |row: &[Cyclotomic]| row.iter().all(|v| *v == Cyclotomic::one());
    order.sort_by(|&a, &b| {
        trivial(&rows[b])
            .cmp(&trivial(&rows[a]))
            .then(degrees[a].cmp(&degrees[b]))
            .then_with(|| {
                rows[a]
                    .iter()
                    .zip(&rows[b])
                    .map(|(x, y)| x.canonical_cmp(y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
    Ok(CharTable {
        rows: order.iter().map(|&i| rows[i].clone()).collect(),
        degrees: order.iter().map(|&i| degrees[i]).collect(),
        class_sizes: sizes,
        class_orders,
        inverse_classes,
        group_order: n,
        exponent: e as u32,
    })
}

/// A group together with its classes and character table.
#[derive(Clone, Debug)]
pub struct TabulatedGroup<E: GroupElement> {
    pub group: FinGroup<E>,
    pub classes: ConjClassSet,
    pub table: CharTable,
}

impl<E: GroupElement> TabulatedGroup<E> {
    pub fn new(group: FinGroup<E>) -> Result<Self> {
        let classes = conjugacy_classes(&group);
        let table = character_table(&group, &classes)?;
        Ok(Self { group, classes, table })
    }

    pub fn class_of_element(&self, e: &E) -> Option<usize> {
        self.group.index_of(e).map(|i| self.classes.class_of(i))
    }

    /// Restriction of the class function `f` on `self` to the subgroup `sub`.
    pub fn restrict(&self, f: &[Cyclotomic], sub: &TabulatedGroup<E>) -> Result<Vec<Cyclotomic>> {
        sub.classes
            .representatives
            .iter()
            .map(|&h| {
                let c = self.class_of_element(sub.group.element(h)).ok_or(Error::NotInGroup)?;
                Ok(f[c].clone())
            })
            .collect()
    }

    /// Induction of the class function `f` on the subgroup `sub` up to `self`.
    pub fn induce(&self, f: &[Cyclotomic], sub: &TabulatedGroup<E>) -> Result<Vec<Cyclotomic>> {
        let r = self.classes.len();
        let mut acc = vec![Cyclotomic::zero(); r];
        for (i, h) in sub.group.elements().iter().enumerate() {
            let c = self.class_of_element(h).ok_or(Error::NotInGroup)?;
            acc[c] = &acc[c] + &f[sub.classes.class_of(i)];
        }
        let g = self.group.order() as i64;
        let hs = sub.group.order() as i64;
        Ok(acc
            .into_iter()
            .zip(self.classes.sizes())
            .map(|(v, size)| v.scale(&rational(g, hs * size as i64)))
            .collect())
    }

    /// Row of the trivial character restricted to nothing: all ones.
    pub fn trivial_values(&self) -> Vec<Cyclotomic> {
        vec![Cyclotomic::one(); self.classes.len()]
    }
}

/// Product of class functions.
pub fn tensor(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}
