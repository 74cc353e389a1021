//! Equivariant maps between finite right `M`-sets by backtracking search.
//!
//! A morphism is fixed by its values on a set of orbit generators: choosing
//! `f(x) = y` forces `f(x·m) = y·m` for every `m`. The search branches on
//! unassigned elements with the largest orbits first and propagates each
//! choice through the orbit, backtracking on conflicts.

use core::ops::ControlFlow;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::MSetError;
use crate::mset::{same_monoid, MSetMorphism, RightMSet};

/// Default limit on search nodes for a single hom-set computation.
pub const DEFAULT_HOM_CAP: usize = 1_000_000;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    x: &'a RightMSet,
    y: &'a RightMSet,
    order: Vec<usize>,
    assign: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    injective: bool,
    nodes: usize,
    cap: usize,
}

impl<'a> Search<'a> {
    fn new(x: &'a RightMSet, y: &'a RightMSet, injective: bool, cap: usize) -> Self {
        let sizes = x.orbit_sizes();
        let mut order: Vec<usize> = (0..x.size()).collect();
        order.sort_by_key(|&e| (core::cmp::Reverse(sizes[e]), e));
        Self {
            x,
            y,
            order,
            assign: vec![UNSET; x.size()],
            used: vec![false; y.size()],
            trail: Vec::new(),
            injective,
            nodes: 0,
            cap,
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().expect("trail is longer than mark");
            self.used[self.assign[a]] = false;
            self.assign[a] = UNSET;
        }
    }

    /// Sets `f(g·m) = v·m` for all `m`; false on a conflict.
    fn propagate(&mut self, g: usize, v: usize) -> bool {
        for m in self.x.monoid().elements() {
            let (a, b) = (self.x.act(g, m), self.y.act(v, m));
            match self.assign[a] {
                UNSET => {
                    if self.injective && self.used[b] {
                        return false;
                    }
                    self.assign[a] = b;
                    self.used[b] = true;
                    self.trail.push(a);
                }
                prev if prev != b => return false,
                _ => {}
            }
        }
        true
    }

    fn run<F>(&mut self, pos: usize, visit: &mut F) -> Result<ControlFlow<()>, MSetError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut pos = pos;
        while pos < self.order.len() && self.assign[self.order[pos]] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            return Ok(visit(&self.assign));
        }
        let g = self.order[pos];
        for v in 0..self.y.size() {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(MSetError::CapExceeded {
                    what: "hom search nodes",
                    cap: self.cap,
                });
            }
            let mark = self.trail.len();
            if self.propagate(g, v) && self.run(pos + 1, visit)?.is_break() {
                self.undo(mark);
                return Ok(ControlFlow::Break(()));
            }
            self.undo(mark);
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Calls `visit` on the image array of every morphism `X → Y` (in search
/// order, not sorted) until it breaks.
pub fn for_each_hom<F>(
    x: &RightMSet,
    y: &RightMSet,
    cap: usize,
    mut visit: F,
) -> Result<(), MSetError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    same_monoid(x.monoid(), y.monoid())?;
    let _ = Search::new(x, y, false, cap).run(0, &mut visit)?;
    Ok(())
}

/// Every morphism `X → Y`, sorted lexicographically by image array.
pub fn hom_set(x: &RightMSet, y: &RightMSet) -> Result<Vec<MSetMorphism>, MSetError> {
    hom_set_capped(x, y, DEFAULT_HOM_CAP)
}

pub fn hom_set_capped(
    x: &RightMSet,
    y: &RightMSet,
    cap: usize,
) -> Result<Vec<MSetMorphism>, MSetError> {
    let mut homs = Vec::new();
    for_each_hom(x, y, cap, |f| {
        homs.push(MSetMorphism::from_map_unchecked(f.to_vec()));
        ControlFlow::Continue(())
    })?;
    homs.sort_unstable();
    Ok(homs)
}

pub fn hom_count(x: &RightMSet, y: &RightMSet, cap: usize) -> Result<usize, MSetError> {
    let mut count = 0;
    for_each_hom(x, y, cap, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Some morphism `X → Y`, if one exists.
pub fn find_hom(
    x: &RightMSet,
    y: &RightMSet,
    cap: usize,
) -> Result<Option<MSetMorphism>, MSetError> {
    let mut found = None;
    for_each_hom(x, y, cap, |f| {
        found = Some(MSetMorphism::from_map_unchecked(f.to_vec()));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// An isomorphism `X → Y`, if one exists.
///
/// Cheap invariants are compared first; the search then looks for an
/// injective morphism, which is bijective because the sizes agree and whose
/// inverse is then automatically equivariant.
pub fn find_isomorphism(x: &RightMSet, y: &RightMSet) -> Option<MSetMorphism> {
    if same_monoid(x.monoid(), y.monoid()).is_err() || x.invariant() != y.invariant() {
        return None;
    }
    let mut found = None;
    let mut search = Search::new(x, y, true, usize::MAX);
    let _ = search
        .run(0, &mut |f: &[usize]| {
            found = Some(MSetMorphism::from_map_unchecked(f.to_vec()));
            ControlFlow::Break(())
        })
        .expect("uncapped search cannot exceed its cap");
    found
}

pub fn is_isomorphic(x: &RightMSet, y: &RightMSet) -> bool {
    find_isomorphism(x, y).is_some()
}

impl RightMSet {
    /// Every component is isomorphic to `eM` for some idempotent `e`.
    pub fn is_projective(&self) -> bool {
        let monoid = self.monoid().clone();
        let principals: Vec<RightMSet> = monoid
            .idempotents()
            .into_iter()
            .map(|e| RightMSet::principal(&monoid, e))
            .collect();
        self.decompose()
            .iter()
            .all(|c| principals.iter().any(|p| is_isomorphic(p, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mset::coproduct;
    use crate::named;
    use alloc::sync::Arc;

    /// All equivariant maps by trying every function.
    fn brute_homs(x: &RightMSet, y: &RightMSet) -> Vec<Vec<usize>> {
        let (k, l) = (x.size(), y.size());
        let mut out = Vec::new();
        if l == 0 {
            if k == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        let total = l.pow(k as u32);
        for code in 0..total {
            let mut f = vec![0; k];
            let mut c = code;
            for slot in f.iter_mut().rev() {
                *slot = c % l;
                c /= l;
            }
            if MSetMorphism::new(x, y, f.clone()).is_ok() {
                out.push(f);
            }
        }
        out
    }

    fn sample_sets(m: &Arc<crate::monoid::Monoid>) -> Vec<RightMSet> {
        let reg = RightMSet::regular(m);
        let mut sets = vec![
            RightMSet::empty(m),
            RightMSet::terminal(m),
            RightMSet::trivial_action(m, 2),
            reg.clone(),
        ];
        for e in m.idempotents() {
            sets.push(RightMSet::principal(m, e));
        }
        sets.push(coproduct(&reg, &RightMSet::terminal(m)).unwrap().object);
        sets
    }

    #[test]
    fn hom_search_matches_brute_force() {
        for (_, m) in named::all() {
            if m.order() > 4 {
                continue;
            }
            let m = Arc::new(m);
            let sets = sample_sets(&m);
            for x in &sets {
                for y in &sets {
                    if y.size().pow(x.size() as u32) > 50_000 {
                        continue;
                    }
                    let fast: Vec<Vec<usize>> = hom_set(x, y)
                        .unwrap()
                        .into_iter()
                        .map(|f| f.into_map())
                        .collect();
                    assert_eq!(fast, brute_homs(x, y));
                }
            }
        }
    }

    #[test]
    fn yoneda_and_global_sections() {
        for (_, m) in named::all() {
            let m = Arc::new(m);
            let one = RightMSet::terminal(&m);
            let reg = RightMSet::regular(&m);
            for x in sample_sets(&m) {
                assert_eq!(
                    hom_count(&one, &x, DEFAULT_HOM_CAP).unwrap(),
                    x.fixed_points().len()
                );
                assert_eq!(hom_count(&reg, &x, DEFAULT_HOM_CAP).unwrap(), x.size());
                for e in m.idempotents() {
                    let xe: alloc::collections::BTreeSet<usize> =
                        (0..x.size()).map(|a| x.act(a, e)).collect();
                    let em = RightMSet::principal(&m, e);
                    assert_eq!(hom_count(&em, &x, DEFAULT_HOM_CAP).unwrap(), xe.len());
                }
            }
        }
    }

    #[test]
    fn cap_is_reported() {
        let m = Arc::new(named::t1());
        let big = RightMSet::trivial_action(&m, 6);
        assert!(matches!(
            hom_count(&big, &big, 100),
            Err(MSetError::CapExceeded { cap: 100, .. })
        ));
        assert_eq!(hom_count(&big, &big, DEFAULT_HOM_CAP).unwrap(), 46_656);
    }

    #[test]
    fn isomorphism() {
        let end2 = Arc::new(named::end2());
        let reg = RightMSet::regular(&end2);
        let relabelled = {
            // Swap elements 0 and 3 of the regular set.
            let perm = [3, 1, 2, 0];
            let mut rows = vec![vec![0; 4]; 4];
            for x in 0..4 {
                for m in 0..4 {
                    rows[perm[x]][m] = perm[reg.act(x, m)];
                }
            }
            RightMSet::from_rows(end2.clone(), &rows).unwrap()
        };
        let iso = find_isomorphism(&reg, &relabelled).unwrap();
        assert!(MSetMorphism::new(&reg, &relabelled, iso.map().to_vec()).is_ok());
        assert!(!is_isomorphic(&reg, &RightMSet::trivial_action(&end2, 4)));
    }

    #[test]
    fn projectivity() {
        let end2 = Arc::new(named::end2());
        assert!(RightMSet::terminal(&end2).is_projective());
        let reg = RightMSet::regular(&end2);
        assert!(coproduct(&reg, &reg).unwrap().object.is_projective());
        let c2 = Arc::new(named::c2());
        assert!(!RightMSet::terminal(&c2).is_projective());
        assert!(RightMSet::empty(&c2).is_projective());
    }
}
