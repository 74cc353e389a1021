//! Finite right `M`-sets, their morphisms, and finite limits and colimits.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::MSetError;
use crate::monoid::Monoid;
use crate::partition::{Partition, UnionFind};

/// A finite right `M`-set on `0..size`; `act(x, m)` is `x·m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RightMSet {
    monoid: Arc<Monoid>,
    size: usize,
    action: Vec<usize>,
}

/// An equivariant map, stored as the array of images.
///
/// Morphisms do not carry their endpoints; operations that need them take the
/// source and target explicitly and check the shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MSetMorphism {
    map: Vec<usize>,
}

/// The object of a limit or colimit with its canonical maps.
///
/// For limits the maps are projections out of `object`; for coproducts they
/// are injections into it; for equalizers the single map is the inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub object: RightMSet,
    pub maps: Vec<MSetMorphism>,
}

pub(crate) fn same_monoid(a: &Arc<Monoid>, b: &Arc<Monoid>) -> Result<(), MSetError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(MSetError::MonoidMismatch)
    }
}

/// Returned by [`RightMSet::invariant`].
pub type SetInvariant = (usize, usize, Vec<(usize, usize, Vec<usize>)>);

impl RightMSet {
    /// Validates an action table (row-major, `size × order`) and builds the set.
    pub fn new(monoid: Arc<Monoid>, size: usize, action: Vec<usize>) -> Result<Self, MSetError> {
        let n = monoid.order();
        if action.len() != size * n {
            return Err(MSetError::Shape {
                len: action.len(),
                expected: size * n,
            });
        }
        if let Some(pos) = action.iter().position(|&v| v >= size) {
            return Err(MSetError::OutOfRange {
                element: pos / n,
                by: pos % n,
                value: action[pos],
                size,
            });
        }
        let x = Self {
            monoid,
            size,
            action,
        };
        x.check_laws()?;
        Ok(x)
    }

    /// Builds a set from one row of images per element.
    pub fn from_rows<R: AsRef<[usize]>>(
        monoid: Arc<Monoid>,
        rows: &[R],
    ) -> Result<Self, MSetError> {
        let n = monoid.order();
        let mut action = Vec::with_capacity(rows.len() * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(MSetError::Shape {
                    len: r.len(),
                    expected: n,
                });
            }
            action.extend_from_slice(r);
        }
        Self::new(monoid, rows.len(), action)
    }

    pub(crate) fn from_action_unchecked(
        monoid: Arc<Monoid>,
        size: usize,
        action: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(action.len(), size * monoid.order());
        let x = Self {
            monoid,
            size,
            action,
        };
        debug_assert!(x.check_laws().is_ok());
        x
    }

    fn check_laws(&self) -> Result<(), MSetError> {
        let m = &*self.monoid;
        for x in 0..self.size {
            if self.act(x, m.identity()) != x {
                return Err(MSetError::UnitViolation { element: x });
            }
            for a in m.elements() {
                let xa = self.act(x, a);
                for b in m.elements() {
                    if self.act(xa, b) != self.act(x, m.mul(a, b)) {
                        return Err(MSetError::AssocViolation {
                            element: x,
                            m: a,
                            n: b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `M` acting on itself by right multiplication.
    pub fn regular(monoid: &Arc<Monoid>) -> Self {
        Self::from_action_unchecked(monoid.clone(), monoid.order(), monoid.table().to_vec())
    }

    /// `Δ(k)`: `k` points, each fixed.
    pub fn trivial_action(monoid: &Arc<Monoid>, k: usize) -> Self {
        let n = monoid.order();
        let action = (0..k * n).map(|i| i / n).collect();
        Self::from_action_unchecked(monoid.clone(), k, action)
    }

    pub fn terminal(monoid: &Arc<Monoid>) -> Self {
        Self::trivial_action(monoid, 1)
    }

    pub fn empty(monoid: &Arc<Monoid>) -> Self {
        Self::trivial_action(monoid, 0)
    }

    /// The right ideal `aM` as an `M`-set; element `i` is the `i`-th smallest
    /// member of `aM`.
    pub fn principal(monoid: &Arc<Monoid>, a: usize) -> Self {
        let ideal = monoid.principal_right_ideal(a);
        let members: Vec<usize> = (0..monoid.order()).filter(|&x| ideal[x]).collect();
        Self::regular(monoid)
            .restrict(&members)
            .expect("principal right ideals are closed")
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, x: usize, m: usize) -> usize {
        self.action[x * self.monoid.order() + m]
    }

    /// Row-major action table.
    pub fn action(&self) -> &[usize] {
        &self.action
    }

    pub fn row(&self, x: usize) -> &[usize] {
        let n = self.monoid.order();
        &self.action[x * n..(x + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|x| self.row(x).to_vec()).collect()
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<(), MSetError> {
        if x < self.size {
            Ok(())
        } else {
            Err(MSetError::IndexError {
                element: x,
                size: self.size,
            })
        }
    }

    /// Membership vector of the orbit `xM`.
    pub fn orbit(&self, x: usize) -> Vec<bool> {
        let mut orbit = vec![false; self.size];
        for &y in self.row(x) {
            orbit[y] = true;
        }
        orbit
    }

    pub fn is_fixed(&self, x: usize) -> bool {
        self.row(x).iter().all(|&y| y == x)
    }

    /// `Γ(X)`: the fixed points, in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_fixed(x)).collect()
    }

    /// `C(X)`: the classes of the equivalence generated by `x ~ x·m`.
    pub fn connected_components(&self) -> Partition {
        let mut uf = UnionFind::new(self.size);
        for x in 0..self.size {
            for &y in self.row(x) {
                uf.union(x, y);
            }
        }
        uf.into_partition()
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().count()
    }

    /// Exactly one component.
    pub fn is_indecomposable(&self) -> bool {
        self.component_count() == 1
    }

    /// The restriction of the action to each component, in component order.
    pub fn decompose(&self) -> Vec<RightMSet> {
        self.connected_components()
            .classes()
            .iter()
            .map(|c| self.restrict(c).expect("components are closed"))
            .collect()
    }

    pub fn is_closed(&self, members: &[bool]) -> bool {
        (0..self.size)
            .filter(|&x| members[x])
            .all(|x| self.row(x).iter().all(|&y| members[y]))
    }

    /// The sub-`M`-set on `members` (given in increasing order), renumbered
    /// so that `members[i]` becomes `i`.
    pub fn restrict(&self, members: &[usize]) -> Result<RightMSet, MSetError> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in members.iter().enumerate() {
            self.check_element(x)?;
            index[x] = i;
        }
        let mut action = Vec::with_capacity(members.len() * self.monoid.order());
        for &x in members {
            for &y in self.row(x) {
                if index[y] == usize::MAX {
                    return Err(MSetError::NotSubMSet);
                }
                action.push(index[y]);
            }
        }
        Ok(Self::from_action_unchecked(
            self.monoid.clone(),
            members.len(),
            action,
        ))
    }

    /// Every sub-`M`-set (each a sorted element list), in lexicographic order.
    /// Fails when there are more than `cap` of them.
    pub fn sub_msets(&self, cap: usize) -> Result<Vec<Vec<usize>>, MSetError> {
        let words = self.size.div_ceil(64);
        let mut orbits: Vec<Vec<u64>> = (0..self.size)
            .map(|x| {
                let mut bits = vec![0u64; words];
                for &y in self.row(x) {
                    bits[y / 64] |= 1 << (y % 64);
                }
                bits
            })
            .collect();
        orbits.sort();
        orbits.dedup();
        let mut family: BTreeSet<Vec<u64>> = BTreeSet::new();
        family.insert(vec![0; words]);
        for orbit in &orbits {
            let extended: Vec<Vec<u64>> = family
                .iter()
                .map(|s| s.iter().zip(orbit).map(|(a, b)| a | b).collect())
                .collect();
            family.extend(extended);
            if family.len() > cap {
                return Err(MSetError::CapExceeded {
                    what: "sub-M-sets",
                    cap,
                });
            }
        }
        let mut subs: Vec<Vec<usize>> = family
            .into_iter()
            .map(|bits| {
                (0..self.size)
                    .filter(|&x| bits[x / 64] >> (x % 64) & 1 == 1)
                    .collect()
            })
            .collect();
        subs.sort();
        Ok(subs)
    }

    /// The quotient by the least action-compatible partition coarser than
    /// `classes`. Returns the quotient and the compatible partition used.
    pub fn quotient(&self, classes: &Partition) -> Result<(RightMSet, Partition), MSetError> {
        if classes.len() != self.size {
            return Err(MSetError::ShapeMismatch(
                "partition does not cover the carrier",
            ));
        }
        let mut uf = UnionFind::new(self.size);
        let mut work: Vec<(usize, usize)> = Vec::new();
        for class in classes.classes() {
            for w in class.windows(2) {
                work.push((w[0], w[1]));
            }
        }
        while let Some((x, y)) = work.pop() {
            if uf.union(x, y) {
                work.extend(self.row(x).iter().zip(self.row(y)).map(|(&a, &b)| (a, b)));
            }
        }
        let closed = uf.into_partition();
        let n = self.monoid.order();
        let mut action = vec![0; closed.count() * n];
        for x in 0..self.size {
            let c = closed.class_of(x);
            for m in 0..n {
                action[c * n + m] = closed.class_of(self.act(x, m));
            }
        }
        let q = Self::from_action_unchecked(self.monoid.clone(), closed.count(), action);
        Ok((q, closed))
    }

    /// Length of the shortest scheme joining `a` and `b`: each step moves
    /// from `c·s` to `c·t`. `None` when they lie in different components.
    pub fn scheme_distance(&self, a: usize, b: usize) -> Result<Option<usize>, MSetError> {
        self.check_element(a)?;
        self.check_element(b)?;
        if a == b {
            return Ok(Some(0));
        }
        // containing[u] lists every c with u ∈ cM.
        let mut containing: Vec<Vec<usize>> = vec![Vec::new(); self.size];
        for c in 0..self.size {
            let orbit = self.orbit(c);
            for (u, &inside) in orbit.iter().enumerate() {
                if inside {
                    containing[u].push(c);
                }
            }
        }
        let mut dist = vec![usize::MAX; self.size];
        let mut orbit_done = vec![false; self.size];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &c in &containing[u] {
                if core::mem::replace(&mut orbit_done[c], true) {
                    continue;
                }
                for &v in self.row(c) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        if v == b {
                            return Ok(Some(dist[v]));
                        }
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(None)
    }

    /// Orbit sizes `|xM|`, one per element.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        (0..self.size)
            .map(|x| self.orbit(x).iter().filter(|&&b| b).count())
            .collect()
    }

    /// Isomorphism-invariant summary: size, fixed-point count, and sorted
    /// per-component (size, fixed points, sorted orbit sizes).
    pub fn invariant(&self) -> SetInvariant {
        let comps = self.connected_components();
        let orbit_sizes = self.orbit_sizes();
        let mut per: Vec<(usize, usize, Vec<usize>)> = vec![(0, 0, Vec::new()); comps.count()];
        for x in 0..self.size {
            let entry = &mut per[comps.class_of(x)];
            entry.0 += 1;
            entry.1 += usize::from(self.is_fixed(x));
            entry.2.push(orbit_sizes[x]);
        }
        for entry in &mut per {
            entry.2.sort_unstable();
        }
        per.sort();
        (self.size, self.fixed_points().len(), per)
    }
}

impl MSetMorphism {
    /// Validates that `map` is an equivariant map `source → target`.
    pub fn new(source: &RightMSet, target: &RightMSet, map: Vec<usize>) -> Result<Self, MSetError> {
        same_monoid(source.monoid(), target.monoid())?;
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(MSetError::EndpointMismatch);
        }
        for x in 0..source.size() {
            for m in source.monoid().elements() {
                if map[source.act(x, m)] != target.act(map[x], m) {
                    return Err(MSetError::NotEquivariant { element: x, by: m });
                }
            }
        }
        Ok(Self { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        Self { map }
    }

    pub fn identity(size: usize) -> Self {
        Self {
            map: (0..size).collect(),
        }
    }

    /// The unique map into the terminal set.
    pub fn to_terminal(size: usize) -> Self {
        Self { map: vec![0; size] }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn source_size(&self) -> usize {
        self.map.len()
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &MSetMorphism) -> MSetMorphism {
        MSetMorphism {
            map: self.map.iter().map(|&y| then.map[y]).collect(),
        }
    }

    pub fn is_injective(&self, target_size: usize) -> bool {
        let mut seen = vec![false; target_size];
        self.map
            .iter()
            .all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self, target_size: usize) -> bool {
        let mut seen = vec![false; target_size];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

fn check_arrow(f: &MSetMorphism, source: &RightMSet, target: &RightMSet) -> Result<(), MSetError> {
    if f.map.len() != source.size() || f.map.iter().any(|&y| y >= target.size()) {
        Err(MSetError::EndpointMismatch)
    } else {
        Ok(())
    }
}

/// `X ⊔ Y`: elements of `X` first, then those of `Y` shifted by `|X|`.
pub fn coproduct(x: &RightMSet, y: &RightMSet) -> Result<Construction, MSetError> {
    same_monoid(x.monoid(), y.monoid())?;
    let shift = x.size();
    let mut action = x.action().to_vec();
    action.extend(y.action().iter().map(|&v| v + shift));
    let object = RightMSet::from_action_unchecked(x.monoid().clone(), shift + y.size(), action);
    let inl = MSetMorphism::identity(shift);
    let inr = MSetMorphism::from_map_unchecked((shift..shift + y.size()).collect());
    Ok(Construction {
        object,
        maps: vec![inl, inr],
    })
}

/// `X × Y` with the diagonal action; `(x, y)` is element `x·|Y| + y`.
pub fn product(x: &RightMSet, y: &RightMSet) -> Result<Construction, MSetError> {
    product_of(&[x, y], usize::MAX)
}

/// The product of any number of factors with the diagonal action. Tuples are
/// numbered in mixed radix with the first factor most significant. The empty
/// product is the terminal set. Fails when the carrier would exceed `cap`.
pub fn product_of(factors: &[&RightMSet], cap: usize) -> Result<Construction, MSetError> {
    let monoid = match factors.first() {
        Some(f) => f.monoid().clone(),
        None => return Err(MSetError::ShapeMismatch("an empty product needs a monoid")),
    };
    for f in factors {
        same_monoid(&monoid, f.monoid())?;
    }
    let mut size: usize = 1;
    for f in factors {
        size = size
            .checked_mul(f.size())
            .filter(|&s| s <= cap)
            .ok_or(MSetError::CapExceeded {
                what: "product elements",
                cap,
            })?;
    }
    let n = monoid.order();
    let mut action = vec![0; size * n];
    let mut digits = vec![0usize; factors.len()];
    for t in 0..size {
        let mut rest = t;
        for (i, f) in factors.iter().enumerate().rev() {
            digits[i] = rest % f.size();
            rest /= f.size();
        }
        for m in 0..n {
            let mut image = 0;
            for (i, f) in factors.iter().enumerate() {
                image = image * f.size() + f.act(digits[i], m);
            }
            action[t * n + m] = image;
        }
    }
    let object = RightMSet::from_action_unchecked(monoid, size, action);
    let mut maps = Vec::with_capacity(factors.len());
    let mut stride = size;
    for f in factors {
        stride /= f.size().max(1);
        let fs = f.size();
        maps.push(MSetMorphism::from_map_unchecked(
            (0..size).map(|t| (t / stride.max(1)) % fs.max(1)).collect(),
        ));
    }
    Ok(Construction { object, maps })
}

/// `X^k` with the diagonal action.
pub fn power(x: &RightMSet, k: usize, cap: usize) -> Result<RightMSet, MSetError> {
    if k == 0 {
        return Ok(RightMSet::terminal(x.monoid()));
    }
    let factors: Vec<&RightMSet> = core::iter::repeat_n(x, k).collect();
    Ok(product_of(&factors, cap)?.object)
}

/// The equalizer of `f, g : X → Y`: the sub-`M`-set where they agree, with
/// its inclusion.
pub fn equalizer(
    x: &RightMSet,
    y: &RightMSet,
    f: &MSetMorphism,
    g: &MSetMorphism,
) -> Result<Construction, MSetError> {
    same_monoid(x.monoid(), y.monoid())?;
    check_arrow(f, x, y)?;
    check_arrow(g, x, y)?;
    let members: Vec<usize> = (0..x.size())
        .filter(|&e| f.apply(e) == g.apply(e))
        .collect();
    let object = x.restrict(&members)?;
    Ok(Construction {
        object,
        maps: vec![MSetMorphism::from_map_unchecked(members)],
    })
}

/// The pullback of `f : X → Z` and `g : Y → Z`: pairs `(x, y)` with
/// `f(x) = g(y)` in lexicographic order, with both projections.
pub fn pullback(
    x: &RightMSet,
    y: &RightMSet,
    z: &RightMSet,
    f: &MSetMorphism,
    g: &MSetMorphism,
) -> Result<Construction, MSetError> {
    same_monoid(x.monoid(), y.monoid())?;
    same_monoid(x.monoid(), z.monoid())?;
    check_arrow(f, x, z)?;
    check_arrow(g, y, z)?;
    let pairs: Vec<(usize, usize)> = (0..x.size())
        .flat_map(|a| (0..y.size()).map(move |b| (a, b)))
        .filter(|&(a, b)| f.apply(a) == g.apply(b))
        .collect();
    let mut index = vec![usize::MAX; x.size() * y.size()];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a * y.size() + b] = i;
    }
    let n = x.monoid().order();
    let mut action = Vec::with_capacity(pairs.len() * n);
    for &(a, b) in &pairs {
        for m in 0..n {
            action.push(index[x.act(a, m) * y.size() + y.act(b, m)]);
        }
    }
    let object = RightMSet::from_action_unchecked(x.monoid().clone(), pairs.len(), action);
    let p1 = MSetMorphism::from_map_unchecked(pairs.iter().map(|p| p.0).collect());
    let p2 = MSetMorphism::from_map_unchecked(pairs.iter().map(|p| p.1).collect());
    Ok(Construction {
        object,
        maps: vec![p1, p2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, END2_C0, END2_C1};

    fn arc(m: Monoid) -> Arc<Monoid> {
        Arc::new(m)
    }

    #[test]
    fn validation_rejects_bad_actions() {
        let c2 = arc(named::c2());
        assert!(matches!(
            RightMSet::from_rows(c2.clone(), &[[1, 1], [1, 1]]),
            Err(MSetError::UnitViolation { element: 0 })
        ));
        assert!(matches!(
            RightMSet::from_rows(c2.clone(), &[[0, 2]]),
            Err(MSetError::OutOfRange { .. })
        ));
        // x·g·g must be x for the group of order two.
        assert!(matches!(
            RightMSet::from_rows(c2.clone(), &[[0, 1], [1, 2], [2, 2]]),
            Err(MSetError::AssocViolation { .. })
        ));
        assert!(RightMSet::from_rows(c2, &[[0, 1], [1, 0]]).is_ok());
    }

    #[test]
    fn fixed_points_examples() {
        let end2 = arc(named::end2());
        assert_eq!(
            RightMSet::regular(&end2).fixed_points(),
            vec![END2_C0, END2_C1]
        );
        let c2 = arc(named::c2());
        assert_eq!(
            RightMSet::trivial_action(&c2, 3).fixed_points(),
            vec![0, 1, 2]
        );
        assert!(RightMSet::regular(&c2).fixed_points().is_empty());
        assert!(RightMSet::empty(&c2).fixed_points().is_empty());
    }

    #[test]
    fn components_examples() {
        for (_, m) in named::all() {
            let m = arc(m);
            assert!(RightMSet::regular(&m).is_indecomposable());
            let d = RightMSet::trivial_action(&m, 4);
            assert_eq!(d.component_count(), 4);
            assert_eq!(RightMSet::empty(&m).component_count(), 0);
            assert!(!RightMSet::empty(&m).is_indecomposable());
        }
        let d2 = RightMSet::trivial_action(&arc(named::c2()), 2);
        let parts = d2.decompose();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.size() == 1));
    }

    #[test]
    fn product_of_rz3_with_itself_is_indecomposable() {
        let rz3 = arc(named::rz3());
        let m = RightMSet::regular(&rz3);
        let p = product(&m, &m).unwrap();
        assert_eq!(p.object.size(), 9);
        assert!(p.object.is_indecomposable());
        for proj in &p.maps {
            assert!(MSetMorphism::new(&p.object, &m, proj.map().to_vec()).is_ok());
        }
    }

    #[test]
    fn coproduct_of_terminals_is_trivial_action() {
        let c2 = arc(named::c2());
        let one = RightMSet::terminal(&c2);
        let s = coproduct(&one, &one).unwrap();
        assert_eq!(s.object, RightMSet::trivial_action(&c2, 2));
    }

    #[test]
    fn equalizer_of_left_multiplications_on_c2_is_empty() {
        let c2 = arc(named::c2());
        let m = RightMSet::regular(&c2);
        let left = |a: usize| MSetMorphism::new(&m, &m, c2.row(a).to_vec()).unwrap();
        let eq = equalizer(&m, &m, &left(0), &left(1)).unwrap();
        assert!(eq.object.is_empty());
    }

    #[test]
    fn pullback_projections_are_equivariant() {
        let end2 = arc(named::end2());
        let m = RightMSet::regular(&end2);
        let one = RightMSet::terminal(&end2);
        let bang = MSetMorphism::to_terminal(m.size());
        let pb = pullback(&m, &m, &one, &bang, &bang).unwrap();
        assert_eq!(pb.object, product(&m, &m).unwrap().object);
        for p in &pb.maps {
            assert!(MSetMorphism::new(&pb.object, &m, p.map().to_vec()).is_ok());
        }
    }

    #[test]
    fn mismatched_monoids_are_rejected() {
        let a = RightMSet::regular(&arc(named::c2()));
        let b = RightMSet::regular(&arc(named::e2()));
        assert_eq!(coproduct(&a, &b).unwrap_err(), MSetError::MonoidMismatch);
        assert_eq!(product(&a, &b).unwrap_err(), MSetError::MonoidMismatch);
    }

    #[test]
    fn quotients() {
        let rz3 = arc(named::rz3());
        let m = RightMSet::regular(&rz3);
        let (q, _) = m.quotient(&Partition::full(3)).unwrap();
        assert_eq!(q, RightMSet::terminal(&rz3));
        // 1 ~ a forces b = 1·b ~ a·b = a, so everything collapses...
        let (q, _) = m.quotient(&Partition::from_labels(&[0, 0, 1])).unwrap();
        assert_eq!(q.size(), 1);
        // ...whereas a ~ b leaves {1} and {a, b}.
        let (q, closed) = m.quotient(&Partition::from_labels(&[0, 1, 1])).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(closed.labels(), &[0, 1, 1]);
        assert_eq!(q.fixed_points(), vec![1]);
    }

    #[test]
    fn sub_msets_of_regular_rz3() {
        let m = RightMSet::regular(&arc(named::rz3()));
        let subs = m.sub_msets(usize::MAX).unwrap();
        assert_eq!(
            subs,
            vec![vec![], vec![0, 1, 2], vec![1], vec![1, 2], vec![2]]
        );
    }

    #[test]
    fn scheme_distances() {
        let rz3 = arc(named::rz3());
        let m = RightMSet::regular(&rz3);
        assert_eq!(m.scheme_distance(1, 1).unwrap(), Some(0));
        assert_eq!(m.scheme_distance(0, 1).unwrap(), Some(1));
        // a and b only meet through the orbit of 1.
        assert_eq!(m.scheme_distance(1, 2).unwrap(), Some(1));
        let d2 = RightMSet::trivial_action(&rz3, 2);
        assert_eq!(d2.scheme_distance(0, 1).unwrap(), None);
        assert!(matches!(
            d2.scheme_distance(0, 7),
            Err(MSetError::IndexError { element: 7, .. })
        ));
    }

    #[test]
    fn principal_ideals() {
        let end2 = arc(named::end2());
        let c0m = RightMSet::principal(&end2, END2_C0);
        assert_eq!(c0m, RightMSet::terminal(&end2));
        assert_eq!(RightMSet::principal(&end2, 0), RightMSet::regular(&end2));
    }

    #[test]
    fn power_and_empty_product() {
        let c2 = arc(named::c2());
        let m = RightMSet::regular(&c2);
        let cube = power(&m, 3, 100).unwrap();
        assert_eq!(cube.size(), 8);
        assert_eq!(cube.component_count(), 4);
        assert_eq!(power(&m, 0, 100).unwrap(), RightMSet::terminal(&c2));
        assert!(matches!(
            power(&m, 10, 100),
            Err(MSetError::CapExceeded { .. })
        ));
    }
}
