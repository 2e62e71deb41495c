use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of elements produced by [`close_group`].
pub const DEFAULT_BOUND: usize = 1_000_000;

pub trait GroupElement: Clone + Eq + Hash + fmt::Debug + Send + Sync {
    /// `self * other`
    fn compose(&self, other: &Self) -> Self;
    fn identity_like(&self) -> Self;
    fn inverse(&self) -> Self;
}

/// Permutation of `{0, .., n-1}` in image notation; composition applies the
/// right factor first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    /// Builds from disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(Error::InvalidInput(format!("cycle entry out of range for degree {n}")));
                }
                images[a as usize] = b;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Cycle lengths, sorted descending (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl GroupElement for Perm {
    fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.0.len())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self(inv)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// A finite group held as an explicit element list. Index 0 is the identity;
/// the remaining order is breadth-first from the identity when the group was
/// built by [`close_group`], or inherited from the parent for subgroups.
#[derive(Clone)]
pub struct FinGroup<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
}

impl<E: GroupElement> fmt::Debug for FinGroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinGroup").field("order", &self.order()).field("generators", &self.generators).finish()
    }
}

/// Breadth-first closure of `generators`, right-multiplying by generators in
/// the given order.
pub fn close_group<E: GroupElement>(generators: &[E], bound: usize) -> Result<FinGroup<E>> {
    let first = generators.first().ok_or_else(|| Error::InvalidInput("no generators given".into()))?;
    close_group_with_identity(first.identity_like(), generators, bound)
}

pub fn close_group_with_identity<E: GroupElement>(identity: E, generators: &[E], bound: usize) -> Result<FinGroup<E>> {
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let x = elements[i].compose(g);
            if !index.contains_key(&x) {
                if elements.len() >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                index.insert(x.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(x);
            }
        }
    }
    let generators = generators.iter().map(|g| index[g]).collect();
    Ok(FinGroup::assemble(elements, index, generators))
}

impl<E: GroupElement> FinGroup<E> {
    fn assemble(elements: Vec<E>, index: HashMap<E, usize>, generators: Vec<usize>) -> Self {
        // Inverses are filled one cyclic subgroup at a time: (x^j)^{-1} = x^{k-j}.
        let mut inverses = vec![usize::MAX; elements.len()];
        for i in 0..elements.len() {
            if inverses[i] != usize::MAX {
                continue;
            }
            let mut powers = vec![0usize, i];
            let mut x = elements[i].clone();
            while *powers.last().unwrap() != 0 {
                x = x.compose(&elements[i]);
                powers.push(index[&x]);
            }
            powers.pop();
            let k = powers.len();
            for j in 0..k {
                inverses[powers[j]] = powers[(k - j) % k];
            }
        }
        Self { elements, index, generators, inverses }
    }

    pub fn trivial(identity: E) -> Self {
        let index = HashMap::from([(identity.clone(), 0)]);
        Self { elements: vec![identity], index, generators: vec![], inverses: vec![0] }
    }

    /// Wraps an element list already known to be closed under multiplication.
    /// The identity is moved to the front; otherwise order is preserved.
    pub fn from_closed_elements(mut elements: Vec<E>) -> Self {
        assert!(!elements.is_empty(), "a group has at least one element");
        let id = elements[0].identity_like();
        let pos = elements.iter().position(|e| *e == id).expect("subset contains the identity");
        let id = elements.remove(pos);
        elements.insert(0, id);
        let index: HashMap<E, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let generators = greedy_generators(&elements, &index);
        Self::assemble(elements, index, generators)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g a g^{-1}`
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inverses[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup of the elements satisfying `keep`, which must define a subgroup.
    pub fn subgroup_where(&self, mut keep: impl FnMut(&E) -> bool) -> FinGroup<E> {
        FinGroup::from_closed_elements(self.elements.iter().filter(|e| keep(e)).cloned().collect())
    }

    /// Closure of the given elements inside this group.
    pub fn subgroup_generated(&self, gens: &[E]) -> FinGroup<E> {
        let sub = close_group_with_identity(self.identity().clone(), gens, self.order() + 1)
            .expect("subgroup of a finite group");
        // Re-order along the parent for determinism.
        let keep: HashSet<&E> = sub.elements.iter().collect();
        FinGroup::from_closed_elements(self.elements.iter().filter(|e| keep.contains(e)).cloned().collect())
    }

    pub fn is_subgroup_of(&self, other: &FinGroup<E>) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_normal_in(&self, other: &FinGroup<E>) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|&g| {
                let g = other.element(g);
                let gi = g.inverse();
                self.generators.iter().all(|&h| self.contains(&g.compose(self.element(h)).compose(&gi)))
            })
    }

    /// Sorted element set, usable as a hash key for comparing subgroups.
    pub fn element_key(&self) -> Vec<E>
    where
        E: Ord,
    {
        let mut v = self.elements.clone();
        v.sort();
        v
    }
}

fn greedy_generators<E: GroupElement>(elements: &[E], index: &HashMap<E, usize>) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut reached: HashSet<E> = HashSet::from([elements[0].clone()]);
    for (i, e) in elements.iter().enumerate() {
        if reached.contains(e) {
            continue;
        }
        gens.push(i);
        // Re-close under the enlarged generating set.
        let mut frontier: Vec<E> = reached.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = x.compose(&elements[g]);
                if reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    debug_assert!(elements.iter().all(|e| index.contains_key(e)));
    gens
}
