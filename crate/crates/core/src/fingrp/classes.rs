use serde::Serialize;

use super::group::{FinGroup, GroupElement};
use crate::error::{Error, Result};

/// Conjugacy classes ordered by least element index; each representative is
/// that least index.
#[derive(Clone, Debug, Serialize)]
pub struct ConjClassSet {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class of the `k`-th power of the representative of class `c`.
    pub fn power_class<E: GroupElement>(&self, g: &FinGroup<E>, c: usize, k: usize) -> usize {
        self.class_of[g.power(self.representatives[c], k)]
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class<E: GroupElement>(&self, g: &FinGroup<E>, c: usize) -> usize {
        self.class_of[g.inv(self.representatives[c])]
    }
}

pub fn conjugacy_classes<E: GroupElement>(g: &FinGroup<E>) -> ConjClassSet {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for &s in g.generators() {
                let y = g.conjugate(s, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
        representatives.push(start);
    }
    ConjClassSet { classes, representatives, class_of }
}

pub fn centralizer<E: GroupElement>(g: &FinGroup<E>, x: &E) -> Result<FinGroup<E>> {
    if !g.contains(x) {
        return Err(Error::NotInGroup);
    }
    Ok(g.subgroup_where(|h| h.compose(x) == x.compose(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::group::{close_group, Perm, DEFAULT_BOUND};

    fn sym(n: usize) -> FinGroup<Perm> {
        let s = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
        let c: Vec<u32> = (0..n as u32).collect();
        let c = Perm::from_cycles(n, &[&c]).unwrap();
        close_group(&[s, c], DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn class_counts() {
        let s3 = sym(3);
        let cc = conjugacy_classes(&s3);
        let mut sizes = cc.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(conjugacy_classes(&sym(4)).len(), 5);
        assert_eq!(conjugacy_classes(&sym(5)).len(), 7);
    }

    #[test]
    fn representatives_are_least() {
        let cc = conjugacy_classes(&sym(4));
        for (c, members) in cc.classes.iter().enumerate() {
            assert_eq!(members[0], cc.representatives[c]);
            assert!(members.iter().all(|&m| cc.class_of(m) == c));
        }
        assert_eq!(cc.representatives[0], 0);
    }

    #[test]
    fn centralizers() {
        let s4 = sym(4);
        assert_eq!(centralizer(&s4, s4.identity()).unwrap().order(), 24);
        let dt = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(centralizer(&s4, &dt).unwrap().order(), 8);
        let s3 = sym(3);
        let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(centralizer(&s3, &t).unwrap().order(), 2);
        assert!(centralizer(&s3, &Perm::identity(4)).is_err());
    }
}
