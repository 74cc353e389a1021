//! Left `M`-sets and bisets.
//!
//! A left `M`-set is stored as a right set over the opposite monoid, so every
//! computation on left sets runs through the right-set code.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::MSetError;
use crate::monoid::Monoid;
use crate::mset::{self, same_monoid, RightMSet};
use crate::partition::Partition;

/// A finite left `M`-set on `0..size`; `act(m, x)` is `m·x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftMSet {
    monoid: Arc<Monoid>,
    inner: RightMSet,
}

impl LeftMSet {
    /// Validates a left action given as one row per monoid element:
    /// `rows[m][x] = m·x`.
    pub fn from_rows<R: AsRef<[usize]>>(
        monoid: Arc<Monoid>,
        size: usize,
        rows: &[R],
    ) -> Result<Self, MSetError> {
        let n = monoid.order();
        if rows.len() != n {
            return Err(MSetError::Shape {
                len: rows.len(),
                expected: n,
            });
        }
        let mut action = vec![0; size * n];
        for (m, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != size {
                return Err(MSetError::Shape {
                    len: r.len(),
                    expected: size,
                });
            }
            for (x, &v) in r.iter().enumerate() {
                action[x * n + m] = v;
            }
        }
        let inner = RightMSet::new(Arc::new(monoid.opposite()), size, action)?;
        Ok(Self { monoid, inner })
    }

    /// Views a right set over `opposite(M)` as a left `M`-set.
    pub fn from_opposite(monoid: Arc<Monoid>, inner: RightMSet) -> Result<Self, MSetError> {
        if **inner.monoid() != monoid.opposite() {
            return Err(MSetError::MonoidMismatch);
        }
        Ok(Self { monoid, inner })
    }

    /// `M` acting on itself by left multiplication.
    pub fn regular(monoid: &Arc<Monoid>) -> Self {
        let op = Arc::new(monoid.opposite());
        let inner = RightMSet::regular(&op);
        Self {
            monoid: monoid.clone(),
            inner,
        }
    }

    pub fn trivial_action(monoid: &Arc<Monoid>, k: usize) -> Self {
        let inner = RightMSet::trivial_action(&Arc::new(monoid.opposite()), k);
        Self {
            monoid: monoid.clone(),
            inner,
        }
    }

    pub fn terminal(monoid: &Arc<Monoid>) -> Self {
        Self::trivial_action(monoid, 1)
    }

    /// The left ideal `Me`; element `i` is the `i`-th smallest member.
    pub fn principal(monoid: &Arc<Monoid>, e: usize) -> Self {
        let inner = RightMSet::principal(&Arc::new(monoid.opposite()), e);
        Self {
            monoid: monoid.clone(),
            inner,
        }
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    /// The same set seen as a right set over `opposite(M)`.
    pub fn as_right(&self) -> &RightMSet {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    #[inline]
    pub fn act(&self, m: usize, x: usize) -> usize {
        self.inner.act(x, m)
    }

    /// Rows indexed by monoid element: `rows()[m][x] = m·x`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.monoid
            .elements()
            .map(|m| (0..self.size()).map(|x| self.act(m, x)).collect())
            .collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.inner.fixed_points()
    }

    pub fn connected_components(&self) -> Partition {
        self.inner.connected_components()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.inner.is_indecomposable()
    }

    pub fn decompose(&self) -> Vec<LeftMSet> {
        self.inner
            .decompose()
            .into_iter()
            .map(|inner| Self {
                monoid: self.monoid.clone(),
                inner,
            })
            .collect()
    }

    pub fn coproduct(&self, other: &LeftMSet) -> Result<LeftMSet, MSetError> {
        same_monoid(&self.monoid, &other.monoid)?;
        let inner = mset::coproduct(&self.inner, &other.inner)?.object;
        Ok(Self {
            monoid: self.monoid.clone(),
            inner,
        })
    }

    /// Every component is isomorphic to `Me` for an idempotent `e`.
    pub fn is_projective(&self) -> bool {
        self.inner.is_projective()
    }
}

/// A set with a left `M`-action and a right `N`-action satisfying
/// `(m·b)·n = m·(b·n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSet {
    left: LeftMSet,
    right: RightMSet,
}

impl BiSet {
    pub fn new(left: LeftMSet, right: RightMSet) -> Result<Self, MSetError> {
        if left.size() != right.size() {
            return Err(MSetError::ShapeMismatch(
                "left and right actions have different carriers",
            ));
        }
        for m in left.monoid().elements() {
            for b in 0..left.size() {
                for n in right.monoid().elements() {
                    if right.act(left.act(m, b), n) != left.act(m, right.act(b, n)) {
                        return Err(MSetError::CompatibilityViolation { m, element: b, n });
                    }
                }
            }
        }
        Ok(Self { left, right })
    }

    /// `M` as a left-`M` right-`M` set.
    pub fn regular(monoid: &Arc<Monoid>) -> Self {
        Self {
            left: LeftMSet::regular(monoid),
            right: RightMSet::regular(monoid),
        }
    }

    pub fn left(&self) -> &LeftMSet {
        &self.left
    }

    pub fn right(&self) -> &RightMSet {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.left.size()
    }

    /// The same set as a right set over `opposite(M) × N`, acting by
    /// `b·(m, n) = m·b·n`.
    pub fn as_product_right_set(&self) -> RightMSet {
        let op = self.left.monoid().opposite();
        let monoid = Arc::new(op.product(self.right.monoid()));
        let n2 = self.right.monoid().order();
        let mut action = Vec::with_capacity(self.size() * monoid.order());
        for b in 0..self.size() {
            for mn in monoid.elements() {
                action.push(self.right.act(self.left.act(mn / n2, b), mn % n2));
            }
        }
        RightMSet::new(monoid, self.size(), action)
            .expect("compatible actions give a product action")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn left_regular_sets() {
        let rz3 = Arc::new(named::rz3());
        assert!(LeftMSet::regular(&rz3).is_indecomposable());
        let lz3 = Arc::new(named::lz3());
        assert_eq!(LeftMSet::regular(&lz3).fixed_points(), vec![1, 2]);
    }

    #[test]
    fn delegation_matches_direct_scan() {
        for (_, m) in named::all() {
            let m = Arc::new(m);
            let reg = LeftMSet::regular(&m);
            let direct: Vec<usize> = m
                .elements()
                .filter(|&x| m.elements().all(|a| m.mul(a, x) == x))
                .collect();
            assert_eq!(reg.fixed_points(), direct);
            assert_eq!(reg.fixed_points(), m.left_absorbing());
            for a in m.elements() {
                for x in m.elements() {
                    assert_eq!(reg.act(a, x), m.mul(a, x));
                }
            }
        }
    }

    #[test]
    fn rows_roundtrip() {
        let end2 = Arc::new(named::end2());
        let reg = LeftMSet::regular(&end2);
        let again = LeftMSet::from_rows(end2.clone(), 4, &reg.rows()).unwrap();
        assert_eq!(again, reg);
        assert!(matches!(
            LeftMSet::from_rows(end2, 1, &[[0], [0], [0]]),
            Err(MSetError::Shape { .. })
        ));
    }

    #[test]
    fn bisets() {
        let e2 = Arc::new(named::e2());
        let b = BiSet::regular(&e2);
        let r = b.as_product_right_set();
        assert_eq!(r.monoid().order(), 4);
        let c2 = Arc::new(named::c2());
        // The swap on two points commutes with any left action that treats
        // both points alike.
        let left = LeftMSet::trivial_action(&e2, 2);
        let right = RightMSet::regular(&c2);
        assert!(BiSet::new(left, right.clone()).is_ok());
        // e sends both points to 0, which the swap does not commute with.
        let left = LeftMSet::from_rows(e2, 2, &[[0, 1], [0, 0]]).unwrap();
        assert!(matches!(
            BiSet::new(left, right),
            Err(MSetError::CompatibilityViolation { .. })
        ));
    }
}
