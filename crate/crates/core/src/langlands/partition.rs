use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// `(1^n)`
    pub fn zero(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// `(n)`
    pub fn regular(n: usize) -> Self {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self((1..=width).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Exponents of the Jacobson-Morozov cocharacter, sorted descending: each
    /// part `m` contributes `m-1, m-3, ..., 1-m`.
    pub fn jm_exponents(&self) -> Vec<i64> {
        let mut e: Vec<i64> = self
            .0
            .iter()
            .flat_map(|&m| (0..m).map(move |j| m as i64 - 1 - 2 * j as i64))
            .collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        e
    }

    /// Inverse of [`Partition::jm_exponents`] on its image.
    pub fn from_jm_exponents(exps: &[i64]) -> Option<Self> {
        let mut pool: Vec<i64> = exps.to_vec();
        pool.sort_unstable();
        let mut parts = Vec::new();
        while let Some(&top) = pool.last() {
            if top < 0 {
                return None;
            }
            let m = top as usize + 1;
            for j in 0..m {
                let e = top - 2 * j as i64;
                let pos = pool.iter().position(|&x| x == e)?;
                pool.remove(pos);
            }
            parts.push(m);
        }
        Some(Self::new(parts))
    }

    /// Parses `"3,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("bad partition {s:?}")));
        }
        Ok(Self::new(parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every partial sum of `a` is at most that of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
    }
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.0.len().max(b.0.len()) {
        sa += a.0.get(i).copied().unwrap_or(0);
        sb += b.0.get(i).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Value of the Specht character `chi^lambda` on cycle type `mu`, with
/// `chi^(n)` trivial.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.n(), mu.n(), "partitions of different sizes");
    let len = lambda.0.len();
    let beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    mn_beta(&beta, mu.parts())
}

/// Rim-hook recursion on a beta-set.
fn mn_beta(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else { return 1 };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.to_vec();
        next[i] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Springer label of the nilpotent orbit of Jordan type `lambda`: the Specht
/// partition of the corresponding irreducible, `lambda` transposed.
pub fn springer_a(lambda: &Partition) -> Partition {
    lambda.transpose()
}
