//! Finite monoids given by multiplication tables.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::MonoidError;

/// A finite monoid on the elements `0..order`.
///
/// `mul(a, b)` is the product `a·b`; the identity may sit at any index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Monoid {
    order: usize,
    identity: usize,
    table: Vec<usize>,
}

/// Element-level classification of a monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ElementClasses {
    pub idempotents: Vec<usize>,
    /// `r` with `r·n = r` for all `n`.
    pub right_absorbing: Vec<usize>,
    /// `l` with `n·l = l` for all `n`.
    pub left_absorbing: Vec<usize>,
    pub zero: Option<usize>,
}

impl Monoid {
    /// Validates a row-major table of length `order²` and builds the monoid.
    pub fn new(order: usize, table: Vec<usize>, identity: usize) -> Result<Self, MonoidError> {
        if order == 0 {
            return Err(MonoidError::Empty);
        }
        if table.len() != order * order {
            return Err(MonoidError::NotSquare {
                row: table.len() / order,
                len: table.len() % order,
                order,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(MonoidError::OutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            });
        }
        if identity >= order {
            return Err(MonoidError::IdentityOutOfRange { identity, order });
        }
        let m = Self {
            order,
            identity,
            table,
        };
        for a in 0..order {
            if m.mul(identity, a) != a || m.mul(a, identity) != a {
                return Err(MonoidError::IdentityViolation { element: a });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = m.mul(a, b);
                for c in 0..order {
                    if m.mul(ab, c) != m.mul(a, m.mul(b, c)) {
                        return Err(MonoidError::AssocViolation { a, b, c });
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a monoid from a list of rows; rejects ragged or non-square input.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R], identity: usize) -> Result<Self, MonoidError> {
        let order = rows.len();
        if order == 0 {
            return Err(MonoidError::Empty);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != order {
                return Err(MonoidError::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
            table.extend_from_slice(r);
        }
        Self::new(order, table, identity)
    }

    /// Skips validation. Callers guarantee the monoid laws.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<usize>, identity: usize) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Self {
            order,
            identity,
            table,
        }
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Self::from_table_unchecked(1, vec![0], 0)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// The opposite monoid: `a ·op b = b · a`.
    pub fn opposite(&self) -> Monoid {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        Self::from_table_unchecked(n, table, self.identity)
    }

    /// Direct product; the pair `(a, b)` is encoded as `a * other.order() + b`.
    pub fn product(&self, other: &Monoid) -> Monoid {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (a, b) = (x / n2, x % n2);
            for y in 0..n {
                let (c, d) = (y / n2, y % n2);
                table[x * n + y] = self.mul(a, c) * n2 + other.mul(b, d);
            }
        }
        Self::from_table_unchecked(n, table, self.identity * n2 + other.identity)
    }

    /// Relabels the elements: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Monoid {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length must equal the order");
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Self::from_table_unchecked(n, table, perm[self.identity])
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_right_absorbing(&self, r: usize) -> bool {
        self.row(r).iter().all(|&v| v == r)
    }

    pub fn is_left_absorbing(&self, l: usize) -> bool {
        self.elements().all(|n| self.mul(n, l) == l)
    }

    pub fn right_absorbing(&self) -> Vec<usize> {
        self.elements()
            .filter(|&r| self.is_right_absorbing(r))
            .collect()
    }

    pub fn left_absorbing(&self) -> Vec<usize> {
        self.elements()
            .filter(|&l| self.is_left_absorbing(l))
            .collect()
    }

    pub fn zero(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.is_right_absorbing(z) && self.is_left_absorbing(z))
    }

    pub fn element_classes(&self) -> ElementClasses {
        ElementClasses {
            idempotents: self.idempotents(),
            right_absorbing: self.right_absorbing(),
            left_absorbing: self.left_absorbing(),
            zero: self.zero(),
        }
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity;
        self.elements()
            .find(|&b| self.mul(a, b) == e && self.mul(b, a) == e)
    }

    pub fn is_group(&self) -> bool {
        self.elements().all(|a| self.inverse(a).is_some())
    }

    /// `aM` as a membership vector.
    pub fn principal_right_ideal(&self, a: usize) -> Vec<bool> {
        let mut ideal = vec![false; self.order];
        for &v in self.row(a) {
            ideal[v] = true;
        }
        ideal
    }

    /// `Ma` as a membership vector.
    pub fn principal_left_ideal(&self, a: usize) -> Vec<bool> {
        let mut ideal = vec![false; self.order];
        for n in self.elements() {
            ideal[self.mul(n, a)] = true;
        }
        ideal
    }

    /// A pair `(m1, m2)` with `m1·M ∩ m2·M = ∅`, if the right Ore condition fails.
    pub fn right_ore_failure(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            let ia = self.principal_right_ideal(a);
            for b in a + 1..self.order {
                if !self.row(b).iter().any(|&v| ia[v]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Every pair of principal right ideals intersects.
    pub fn is_right_ore(&self) -> bool {
        self.right_ore_failure().is_none()
    }

    /// Every pair of principal left ideals intersects.
    pub fn is_left_ore(&self) -> bool {
        self.elements().all(|a| {
            let ia = self.principal_left_ideal(a);
            (a + 1..self.order).all(|b| self.elements().any(|n| ia[self.mul(n, b)]))
        })
    }

    /// Some `m` with `m1·m = m2·m`.
    pub fn collapsing_element(&self, m1: usize, m2: usize) -> Option<usize> {
        self.elements()
            .find(|&m| self.mul(m1, m) == self.mul(m2, m))
    }

    /// For all `m1, m2` there is `m` with `m1·m = m2·m`.
    pub fn is_right_collapsible(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.collapsing_element(a, b).is_some()))
    }

    /// `m·a = m·b` implies `a = b`.
    pub fn is_left_cancellative(&self) -> bool {
        self.elements().all(|m| {
            let row = self.row(m);
            let mut seen = vec![false; self.order];
            row.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
        })
    }

    /// `a·m = b·m` implies `a = b`.
    pub fn is_right_cancellative(&self) -> bool {
        self.elements().all(|m| {
            let mut seen = vec![false; self.order];
            self.elements()
                .all(|a| !core::mem::replace(&mut seen[self.mul(a, m)], true))
        })
    }

    /// A generating set, chosen greedily from the elements outside the
    /// submonoid generated so far, preferring elements that generate the most.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = crate::closure::submonoid_membership(self, &gens);
        while generated.iter().any(|&g| !g) {
            let best = self
                .elements()
                .filter(|&a| !generated[a])
                .max_by_key(|&a| {
                    let mut trial = gens.clone();
                    trial.push(a);
                    let reach = crate::closure::submonoid_membership(self, &trial);
                    (reach.iter().filter(|&&b| b).count(), core::cmp::Reverse(a))
                })
                .expect("an ungenerated element exists");
            gens.push(best);
            generated = crate::closure::submonoid_membership(self, &gens);
        }
        gens
    }

    pub(crate) fn check_element(&self, element: usize) -> Result<(), MonoidError> {
        if element < self.order {
            Ok(())
        } else {
            Err(MonoidError::IndexError {
                element,
                order: self.order,
            })
        }
    }
}

/// Re-validates any table; also used by [`Monoid::new`].
pub fn validate_monoid(
    rows: &[alloc::vec::Vec<usize>],
    identity: usize,
) -> Result<Monoid, MonoidError> {
    Monoid::from_rows(rows, identity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use alloc::string::ToString;

    #[test]
    fn trivial_and_c2_validate() {
        let t1 = validate_monoid(&[vec![0]], 0).unwrap();
        assert!(t1.is_trivial());
        let c2 = validate_monoid(&[vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(c2.order(), 2);
    }

    #[test]
    fn malformed_tables_are_range_errors() {
        let err = validate_monoid(&[vec![0, 1], vec![1, 0], vec![0]], 0).unwrap_err();
        assert!(matches!(err, MonoidError::NotSquare { .. }));
        assert!(err.to_string().starts_with("RangeError"));
        let err = validate_monoid(&[vec![0, 2], vec![1, 0]], 0).unwrap_err();
        assert!(matches!(err, MonoidError::OutOfRange { value: 2, .. }));
        assert_eq!(validate_monoid(&[], 0).unwrap_err(), MonoidError::Empty);
    }

    #[test]
    fn identity_and_associativity_violations() {
        // 1 is not a two-sided identity for this table.
        let err = validate_monoid(&[vec![0, 1], vec![1, 0]], 1).unwrap_err();
        assert_eq!(err, MonoidError::IdentityViolation { element: 0 });
        // (1·1)·2 = 2 but 1·(1·2) = 1.
        let err = validate_monoid(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 2, 2]], 0).unwrap_err();
        assert!(matches!(err, MonoidError::AssocViolation { .. }));
        assert_eq!(
            MonoidError::AssocViolation { a: 1, b: 2, c: 1 }.to_string(),
            "AssocViolation a=1 b=2 c=1"
        );
    }

    #[test]
    fn element_classes_of_named_monoids() {
        let rz3 = named::rz3();
        let classes = rz3.element_classes();
        assert_eq!(classes.right_absorbing, vec![1, 2]);
        assert!(classes.left_absorbing.is_empty());
        assert_eq!(classes.zero, None);

        let t1 = named::t1();
        let classes = t1.element_classes();
        assert_eq!(classes.idempotents, vec![0]);
        assert_eq!(classes.zero, Some(0));

        let end2 = named::end2();
        assert_eq!(end2.right_absorbing(), vec![named::END2_C0, named::END2_C1]);
        assert!(end2.left_absorbing().is_empty());
    }

    #[test]
    fn opposite_examples() {
        let lz3 = named::rz3().opposite();
        assert_eq!(lz3, named::lz3());
        assert_eq!(lz3.left_absorbing(), vec![1, 2]);
        assert!(lz3.right_absorbing().is_empty());
        assert_eq!(named::c2().opposite(), named::c2());
        let end2 = named::end2();
        assert_eq!(end2.opposite().opposite(), end2);
    }

    #[test]
    fn group_ore_collapsible_cancellative() {
        let (c2, rz3, e2, max2) = (named::c2(), named::rz3(), named::e2(), named::max2());
        assert!(c2.is_group());
        assert!(!rz3.is_group());
        assert!(!e2.is_group());

        assert!(e2.is_right_ore());
        assert!(c2.is_right_ore());
        assert!(!rz3.is_right_ore());
        assert_eq!(rz3.right_ore_failure(), Some((1, 2)));

        assert!(max2.is_right_collapsible());
        assert!(!c2.is_right_collapsible());
        assert!(named::lz3().is_right_collapsible());

        assert!(c2.is_left_cancellative() && c2.is_right_cancellative());
        assert!(!rz3.is_left_cancellative() && !rz3.is_right_cancellative());
        assert!(!max2.is_left_cancellative() && !max2.is_right_cancellative());
    }

    #[test]
    fn product_and_relabel_stay_monoids() {
        let p = named::e2().product(&named::c2());
        assert!(Monoid::new(p.order(), p.table().to_vec(), p.identity()).is_ok());
        let end2 = named::end2();
        let r = end2.relabel(&[3, 2, 1, 0]);
        assert!(Monoid::new(4, r.table().to_vec(), r.identity()).is_ok());
        assert_eq!(r.identity(), 3);
    }

    #[test]
    fn generators_generate() {
        for m in [
            named::end2(),
            named::rz3(),
            named::c2(),
            named::t1(),
            named::cyclic(4),
        ] {
            let gens = m.generators();
            let all = crate::closure::submonoid_membership(&m, &gens);
            assert!(all.iter().all(|&b| b));
        }
        assert_eq!(named::cyclic(4).generators().len(), 1);
    }
}
