//! Exact points of `(C^x)^n` and monomial actions of integer matrices.
//!
//! A coordinate is `mag * exp(2 pi i angle)` with `mag` a positive rational and
//! `angle` a rational reduced into `[0, 1)`. This subgroup of `C^x` is closed
//! under every integer monomial, so group actions stay exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingrp::GroupElement;
use crate::intlat::{cokernel_structure, smith_normal_form, FinAbGroupStructure, IntMatrix};

fn frac_part(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// A single nonzero complex number `mag * e^{2 pi i angle}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    mag: BigRational,
    angle: BigRational,
}

impl Scalar {
    pub fn new(mag: BigRational, angle: BigRational) -> Result<Self> {
        if !mag.is_positive() {
            return Err(Error::InvalidPoint(format!("magnitude {mag} is not positive")));
        }
        Ok(Self { mag, angle: frac_part(&angle) })
    }

    pub fn from_parts(mag: (i64, i64), angle: (i64, i64)) -> Result<Self> {
        if mag.1 == 0 || angle.1 == 0 {
            return Err(Error::InvalidPoint("zero denominator".into()));
        }
        Self::new(
            BigRational::new(mag.0.into(), mag.1.into()),
            BigRational::new(angle.0.into(), angle.1.into()),
        )
    }

    pub fn one() -> Self {
        Self { mag: BigRational::one(), angle: BigRational::zero() }
    }

    /// `e^{2 pi i num/den}`
    pub fn root_of_unity(num: i64, den: i64) -> Self {
        Self { mag: BigRational::one(), angle: frac_part(&BigRational::new(num.into(), den.into())) }
    }

    /// A positive rational number.
    pub fn positive(num: i64, den: i64) -> Self {
        Self { mag: BigRational::new(num.into(), den.into()), angle: BigRational::zero() }
    }

    pub fn mag(&self) -> &BigRational {
        &self.mag
    }

    pub fn angle(&self) -> &BigRational {
        &self.angle
    }

    pub fn is_one(&self) -> bool {
        self.mag.is_one() && self.angle.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { mag: &self.mag * &other.mag, angle: frac_part(&(&self.angle + &other.angle)) }
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = i32::try_from(k).expect("exponent out of range");
        Self {
            mag: num_traits::Pow::pow(&self.mag, e),
            angle: frac_part(&(&self.angle * BigRational::from_integer(k.into()))),
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Multiplicative order, if finite.
    pub fn order(&self) -> Option<u64> {
        if !self.mag.is_one() {
            return None;
        }
        self.angle.denom().to_u64()
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mag.cmp(&other.mag).then_with(|| self.angle.cmp(&other.angle))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.angle.is_zero() {
            write!(f, "{}", self.mag)
        } else {
            write!(f, "{}e({})", self.mag, self.angle)
        }
    }
}

/// Point of `(C^x)^n`, coordinates taken against a fixed basis of the
/// character lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: Vec<Scalar>,
}

impl TorusPoint {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self { coords }
    }

    pub fn identity(n: usize) -> Self {
        Self { coords: vec![Scalar::one(); n] }
    }

    /// Finite-order point `(e^{2 pi i a_1/d_1}, ...)`.
    pub fn from_angles(angles: &[(i64, i64)]) -> Self {
        Self { coords: angles.iter().map(|&(a, d)| Scalar::root_of_unity(a, d)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        Ok(Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.mul(b)).collect() })
    }

    pub fn pow(&self, k: i64) -> Self {
        Self { coords: self.coords.iter().map(|c| c.pow(k)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(Scalar::is_one)
    }

    /// Value of the character with exponent vector `chi` at this point.
    pub fn eval_character(&self, chi: &[i64]) -> Result<Scalar> {
        check_rank(self.rank(), chi.len())?;
        Ok(self.coords.iter().zip(chi).fold(Scalar::one(), |acc, (c, &k)| acc.mul(&c.pow(k))))
    }

    /// Image of `alpha` under the cocharacter with exponent vector `y`.
    pub fn from_cocharacter(y: &[i64], alpha: &Scalar) -> Self {
        Self { coords: y.iter().map(|&k| alpha.pow(k)).collect() }
    }

    pub fn angles(&self) -> Vec<BigRational> {
        self.coords.iter().map(|c| c.angle.clone()).collect()
    }
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    mag: [serde_json::Value; 2],
    angle: [serde_json::Value; 2],
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    coords: Vec<CoordRepr>,
}

fn int_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => v.into(),
        None => serde_json::Value::String(x.to_string()),
    }
}

fn int_parse(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn ratio_json(x: &BigRational) -> [serde_json::Value; 2] {
    [int_json(x.numer()), int_json(x.denom())]
}

fn ratio_parse(v: &[serde_json::Value; 2]) -> Option<BigRational> {
    let num = int_parse(&v[0])?;
    let den = int_parse(&v[1])?;
    (!den.is_zero()).then(|| BigRational::new(num, den))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoordRepr { mag: ratio_json(&self.mag), angle: ratio_json(&self.angle) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CoordRepr::deserialize(d)?;
        let mag = ratio_parse(&r.mag).ok_or_else(|| de::Error::custom("bad magnitude"))?;
        let angle = ratio_parse(&r.angle).ok_or_else(|| de::Error::custom("bad angle"))?;
        Scalar::new(mag, angle).map_err(de::Error::custom)
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coords = self
            .coords
            .iter()
            .map(|c| CoordRepr { mag: ratio_json(&c.mag), angle: ratio_json(&c.angle) })
            .collect();
        PointRepr { coords }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TorusPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PointRepr::deserialize(d)?;
        let mut coords = Vec::with_capacity(r.coords.len());
        for c in &r.coords {
            let mag = ratio_parse(&c.mag).ok_or_else(|| de::Error::custom("bad magnitude"))?;
            let angle = ratio_parse(&c.angle).ok_or_else(|| de::Error::custom("bad angle"))?;
            coords.push(Scalar::new(mag, angle).map_err(de::Error::custom)?);
        }
        Ok(TorusPoint { coords })
    }
}

/// Invertible integer matrix acting by `(M t)_i = prod_j t_j^{M_ij}`.
///
/// On cocharacters this is ordinary matrix multiplication; on characters it is
/// the contragredient `(M^{-1})^T`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialAction {
    n: usize,
    m: Vec<i64>,
}

impl MonomialAction {
    pub fn new(matrix: &IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidMatrix("monomial action must be square".into()));
        }
        if !matrix.is_unimodular() {
            return Err(Error::InvalidMatrix("monomial action must have determinant +-1".into()));
        }
        let m = matrix.to_i64().ok_or_else(|| Error::InvalidMatrix("entries exceed 64 bits".into()))?;
        Ok(Self { n: matrix.rows(), m })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(&IntMatrix::from_rows(rows))
    }

    pub(crate) fn from_raw(n: usize, m: Vec<i64>) -> Self {
        debug_assert_eq!(m.len(), n * n);
        Self { n, m }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        Self { n, m }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.m[i * self.n + j]
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(self.n, self.n, &self.m).expect("square")
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[j * n + i] = self.m[i * n + j];
            }
        }
        Self { n, m }
    }

    /// `M y` for a cocharacter `y`.
    pub fn on_cocharacter(&self, y: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.m[i * self.n + j] * y[j]).sum()).collect()
    }

    /// `(M^{-1})^T x` for a character `x`.
    pub fn on_character(&self, x: &[i64]) -> Vec<i64> {
        self.inverse().transpose().on_cocharacter(x)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }
}

impl GroupElement for MonomialAction {
    fn compose(&self, other: &Self) -> Self {
        let n = self.n;
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.m[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] += a * other.m[k * n + j];
                }
            }
        }
        Self { n, m }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.n)
    }

    /// `x^{k-1}` when `x^k = 1` for a small `k`, else exact rational
    /// Gauss-Jordan; the determinant is +-1 so the result is integral.
    fn inverse(&self) -> Self {
        let one = Self::identity(self.n);
        let mut prev = one.clone();
        let mut cur = self.clone();
        for _ in 0..SHORT_ORDER {
            if cur == one {
                return prev;
            }
            prev = cur.clone();
            cur = cur.compose(self);
        }
        self.gauss_inverse()
    }
}

/// Orders up to this bound are inverted by taking powers.
const SHORT_ORDER: usize = 32;

impl MonomialAction {
    fn gauss_inverse(&self) -> Self {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            BigRational::from_integer(self.m[i * n + j].into())
                        } else if j - n == i {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular monomial action");
            a.swap(col, p);
            let piv = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &piv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        let m = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i][n + j].to_integer().to_i64().expect("integral inverse"))
            .collect();
        Self { n, m }
    }
}

impl fmt::Debug for MonomialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix())
    }
}

impl Serialize for MonomialAction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialAction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = IntMatrix::deserialize(d)?;
        MonomialAction::new(&m).map_err(de::Error::custom)
    }
}

pub fn act(a: &MonomialAction, t: &TorusPoint) -> Result<TorusPoint> {
    check_rank(a.dim(), t.rank())?;
    let n = a.dim();
    let coords = (0..n)
        .map(|i| {
            let mut terms = (0..n).filter(|&j| a.entry(i, j) != 0).map(|j| match a.entry(i, j) {
                1 => t.coords[j].clone(),
                k => t.coords[j].pow(k),
            });
            let first = terms.next().unwrap_or_else(Scalar::one);
            terms.fold(first, |acc, x| acc.mul(&x))
        })
        .collect();
    Ok(TorusPoint { coords })
}

pub fn is_fixed(a: &MonomialAction, t: &TorusPoint) -> Result<bool> {
    Ok(act(a, t)? == *t)
}

/// Common fixed set `{t : M t = t for every M}` of one or more actions.
#[derive(Clone, Debug, Serialize)]
pub struct FixedLocus {
    pub dimension: usize,
    pub component_count: usize,
    pub structure: FinAbGroupStructure,
    pub sample_points: Vec<TorusPoint>,
    /// Cocharacters spanning the identity component.
    #[serde(skip)]
    pub directions: Vec<Vec<i64>>,
    #[serde(skip)]
    torsion: Vec<(usize, BigInt)>,
    #[serde(skip)]
    v_inverse: IntMatrix,
}

pub fn fixed_locus(a: &MonomialAction) -> FixedLocus {
    common_fixed_locus(std::slice::from_ref(a), a.dim())
}

/// Fixed locus of a family of actions on a rank-`n` torus. With an empty
/// family the whole torus is returned.
pub fn common_fixed_locus(actions: &[MonomialAction], n: usize) -> FixedLocus {
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zeros(0, n);
    for a in actions {
        let block = a.matrix().sub(&id).expect("square actions of equal size");
        stacked = stacked.vstack(&block).expect("equal widths");
    }
    if actions.is_empty() {
        stacked = IntMatrix::zeros(1, n);
    }

    let snf = smith_normal_form(&stacked);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let structure = cokernel_structure(&stacked.transpose());
    let torsion: Vec<(usize, BigInt)> =
        diag.iter().enumerate().filter(|(_, d)| **d > BigInt::one()).map(|(i, d)| (i, d.clone())).collect();

    let count: usize = torsion.iter().map(|(_, d)| d.to_usize().expect("component count fits usize")).product();
    let v = &snf.v;
    let directions = (rank..n)
        .map(|j| (0..n).map(|i| v.get(i, j).to_i64().expect("direction fits i64")).collect())
        .collect();

    let mut sample_points = Vec::with_capacity(count);
    for idx in 0..count {
        let digits = mixed_radix(idx, &torsion);
        let mut y = vec![BigRational::zero(); n];
        for ((i, d), k) in torsion.iter().zip(&digits) {
            y[*i] = BigRational::new(BigInt::from(*k), d.clone());
        }
        let coords = (0..n)
            .map(|r| {
                let angle: BigRational =
                    (0..n).map(|c| BigRational::from_integer(v.get(r, c).clone()) * &y[c]).sum();
                Scalar { mag: BigRational::one(), angle: frac_part(&angle) }
            })
            .collect();
        sample_points.push(TorusPoint { coords });
    }

    let v_inverse = MonomialAction::from_raw(n, v.to_i64().expect("V fits i64")).inverse().matrix();
    FixedLocus { dimension: n - rank, component_count: count, structure, sample_points, directions, torsion, v_inverse }
}

/// Least-significant digit last, so index order matches lexicographic order
/// of the digit tuples.
fn mixed_radix(mut idx: usize, torsion: &[(usize, BigInt)]) -> Vec<usize> {
    let mut digits = vec![0; torsion.len()];
    for (slot, (_, d)) in digits.iter_mut().zip(torsion).rev() {
        let d = d.to_usize().unwrap();
        *slot = idx % d;
        idx /= d;
    }
    digits
}

impl FixedLocus {
    /// Index of the component containing `t`, or `None` if `t` is not in the
    /// locus.
    pub fn component_of(&self, t: &TorusPoint) -> Option<usize> {
        let n = t.rank();
        if self.v_inverse.rows() != n {
            return None;
        }
        let angles = t.angles();
        let mut idx = 0usize;
        for (i, d) in &self.torsion {
            let y: BigRational =
                (0..n).map(|c| BigRational::from_integer(self.v_inverse.get(*i, c).clone()) * &angles[c]).sum();
            let scaled = y * BigRational::from_integer(d.clone());
            if !scaled.is_integer() {
                return None;
            }
            let k = scaled.to_integer().mod_floor(d).to_usize()?;
            idx = idx * d.to_usize()? + k;
        }
        Some(idx)
    }

    /// A point of component `c` whose stabilizer is the pointwise stabilizer of
    /// the whole component: the sample point moved along the identity
    /// component by distinct primes, whose logarithms are linearly independent.
    pub fn generic_point(&self, c: usize) -> TorusPoint {
        const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let mut t = self.sample_points[c].clone();
        for (dir, &p) in self.directions.iter().zip(PRIMES.iter()) {
            let step = TorusPoint::from_cocharacter(dir, &Scalar::positive(p, 1));
            t = t.mul(&step).expect("same rank");
        }
        t
    }
}
