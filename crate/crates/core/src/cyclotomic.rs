//! Exact elements of cyclotomic fields `Q(zeta_n)`.
//!
//! A value stores its own field order `n` and its coefficients in the power
//! basis `1, zeta_n, ..., zeta_n^{phi(n)-1}`, reduced modulo the `n`-th
//! cyclotomic polynomial. Binary operations lift both sides to the lcm order.
//! Rational values are always kept at order 1.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Quotient of `a` by the monic polynomial `b` (coefficients low to high),
/// assuming the division is exact.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                rem[k + i] -= c * bi;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    cyclotomic_poly(n).len() as u32 - 1
}

#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// Builds `sum_k coeffs[k] zeta_order^k`; any number of coefficients is
    /// accepted and reduced.
    pub fn new(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1);
        let mut c = Self { order, coeffs };
        c.reduce();
        c
    }

    pub fn from_integer(x: i64) -> Self {
        Self::from_rational(BigRational::from_integer(x.into()))
    }

    pub fn from_rational(x: BigRational) -> Self {
        Self { order: 1, coeffs: vec![x] }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `zeta_order^k`
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_poly(self.order);
        let d = phi.len() - 1;
        for k in (d..self.coeffs.len()).rev() {
            let c = std::mem::take(&mut self.coeffs[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &pi) in phi.iter().enumerate().take(d) {
                if pi != 0 {
                    let delta = &c * BigRational::from_integer(pi.into());
                    self.coeffs[k - d + i] -= delta;
                }
            }
        }
        self.coeffs.resize(d, BigRational::zero());
        if self.order > 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.order = 1;
            self.coeffs.truncate(1);
        }
    }

    /// Re-expresses the value over `Q(zeta_target)`; `order` must divide
    /// `target`. The result is kept at `target` even when rational.
    pub fn lifted(&self, target: u32) -> Vec<BigRational> {
        assert_eq!(target % self.order, 0, "order {} does not divide {target}", self.order);
        let step = (target / self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        let phi = cyclotomic_poly(target);
        let d = phi.len() - 1;
        for k in (d..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &pi) in phi.iter().enumerate().take(d) {
                if pi != 0 {
                    coeffs[k - d + i] -= &c * BigRational::from_integer(pi.into());
                }
            }
        }
        coeffs.resize(d, BigRational::zero());
        coeffs
    }

    fn common(&self, other: &Self) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let n = self.order.lcm(&other.order);
        (n, self.lifted(n), other.lifted(n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (self.order == 1).then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_algebraic_integer_in_basis(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Complex conjugate: `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(n - k) % n] += c;
        }
        Self::new(self.order, coeffs)
    }

    /// Galois automorphism `zeta -> zeta^j` for `j` coprime to the order.
    pub fn galois(&self, j: u32) -> Self {
        let n = self.order as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(k * j as usize) % n] += c;
        }
        Self::new(self.order, coeffs)
    }

    /// Approximate complex value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let th = std::f64::consts::TAU * k as f64 / n;
            (re + x * th.cos(), im + x * th.sin())
        })
    }
}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        let (n, a, b) = self.common(other);
        Cyclotomic::new(n, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        let (n, a, b) = self.common(other);
        Cyclotomic::new(n, a.into_iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if self.order == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.order == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let (n, a, b) = self.common(other);
        let mut out = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Cyclotomic::new(n, out)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    /// Total order used for deterministic sorting: coefficient vectors compared
    /// lexicographically after lifting to a common field.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (_, a, b) = self.common(other);
        a.cmp(&b)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}^{k}", self.order)?,
                (_, false) => write!(f, "{a}*z{}^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

/// JSON form: coefficient vector over a declared root of unity.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CyclotomicRepr {
    pub root_order: u32,
    pub coeffs: Vec<String>,
}

impl Cyclotomic {
    pub fn repr_over(&self, root_order: u32) -> CyclotomicRepr {
        let coeffs = self.lifted(root_order).iter().map(|c| c.to_string()).collect();
        CyclotomicRepr { root_order, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..13u32 {
            let s: Cyclotomic = (0..n as i64).map(|k| Cyclotomic::root_of_unity(n, k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn cross_order_equality() {
        let w = Cyclotomic::root_of_unity(3, 1);
        let w6 = Cyclotomic::root_of_unity(6, 2);
        assert_eq!(w, w6);
        let minus_one = &w + &(&w * &w);
        assert_eq!(minus_one, Cyclotomic::from_integer(-1));
        assert_eq!(minus_one.order(), 1);
    }

    #[test]
    fn conjugation_and_norm() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i.conj(), Cyclotomic::one());
        let z = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::from_integer(2);
        let n = &z * &z.conj();
        assert_eq!(n.conj(), n);
    }
}
