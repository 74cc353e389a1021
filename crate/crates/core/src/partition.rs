//! Union-find and partitions of `0..k`.

use alloc::vec;
use alloc::vec::Vec;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(k: usize) -> Self {
        Self {
            parent: (0..k).collect(),
            size: vec![1; k],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns whether they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// A partition of `0..k` as a class-id array.
///
/// Class ids are contiguous from 0 and numbered in order of first appearance,
/// so equal partitions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Partition {
    class_of: Vec<usize>,
    count: usize,
}

/// A right-compatible partition of the elements of a monoid.
pub type RightCongruence = Partition;

impl Partition {
    /// Normalizes arbitrary labels: elements share a class iff their labels agree.
    pub fn from_labels<L: PartialEq + Copy>(labels: &[L]) -> Self {
        let mut seen: Vec<L> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let id = match seen.iter().position(|&s| s == l) {
                Some(id) => id,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            };
            class_of.push(id);
        }
        Self {
            class_of,
            count: seen.len(),
        }
    }

    /// Like [`Partition::from_labels`] for labels below `bound`, in linear time.
    pub fn from_small_labels(labels: &[usize], bound: usize) -> Self {
        let mut id = vec![usize::MAX; bound];
        let mut count = 0;
        let class_of = labels
            .iter()
            .map(|&l| {
                if id[l] == usize::MAX {
                    id[l] = count;
                    count += 1;
                }
                id[l]
            })
            .collect();
        Self { class_of, count }
    }

    pub fn discrete(k: usize) -> Self {
        Self {
            class_of: (0..k).collect(),
            count: k,
        }
    }

    /// One class holding everything (no classes when `k = 0`).
    pub fn full(k: usize) -> Self {
        Self {
            class_of: vec![0; k],
            count: usize::from(k > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    /// Members of each class, in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (x, &c) in self.class_of.iter().enumerate() {
            classes[c].push(x);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == class)
            .map(|(x, _)| x)
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.count];
        self.class_of.iter().zip(&other.class_of).all(|(&a, &b)| {
            let prev = core::mem::replace(&mut image[a], b);
            prev == usize::MAX || prev == b
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 4));
        assert!(uf.same(0, 4));
        assert!(!uf.same(1, 2));
        let p = uf.into_partition();
        assert_eq!(p.labels(), &[0, 1, 2, 0, 0]);
        assert_eq!(p.count(), 3);
        assert_eq!(p.classes(), vec![vec![0, 3, 4], vec![1], vec![2]]);
    }

    #[test]
    fn empty_carrier() {
        assert_eq!(Partition::full(0).count(), 0);
        assert_eq!(Partition::discrete(0).count(), 0);
        assert_eq!(UnionFind::new(0).into_partition(), Partition::full(0));
    }

    #[test]
    fn refinement() {
        let fine = Partition::discrete(3);
        let coarse = Partition::full(3);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
    }

    proptest! {
        #[test]
        fn union_find_matches_label_propagation(
            k in 1usize..12,
            edges in proptest::collection::vec((0usize..12, 0usize..12), 0..20),
        ) {
            let edges: Vec<(usize, usize)> =
                edges.into_iter().map(|(a, b)| (a % k, b % k)).collect();
            let mut uf = UnionFind::new(k);
            for &(a, b) in &edges {
                uf.union(a, b);
            }
            let p = uf.into_partition();
            // Oracle: relabel to the minimum label until nothing changes.
            let mut label: Vec<usize> = (0..k).collect();
            loop {
                let mut changed = false;
                for &(a, b) in &edges {
                    let m = label[a].min(label[b]);
                    for l in [a, b] {
                        if label[l] != m {
                            let old = label[l];
                            for x in label.iter_mut() {
                                if *x == old {
                                    *x = m;
                                }
                            }
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            prop_assert_eq!(p, Partition::from_labels(&label));
        }
    }
}
