//! Exhaustive enumeration of monoids and right `M`-sets up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{MSetError, MonoidError};
use crate::monoid::Monoid;
use crate::mset::RightMSet;

/// Largest monoid order [`enumerate_monoids`] accepts by default.
pub const DEFAULT_MONOID_ORDER_CAP: usize = 5;
/// Largest `M`-set size [`enumerate_msets`] accepts by default.
pub const DEFAULT_MSET_SIZE_CAP: usize = 6;

/// The lexicographically least relabelling of a monoid table among those
/// putting the identity at 0, with the number of automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub table: Vec<u8>,
    pub automorphisms: usize,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        (0..=self.table.len())
            .find(|n| n * n >= self.table.len())
            .unwrap_or(0)
    }

    pub fn monoid(&self) -> Monoid {
        let n = self.order();
        Monoid::from_table_unchecked(n, self.table.iter().map(|&v| usize::from(v)).collect(), 0)
    }

    /// Lowercase hex of the table bytes, used as a file name.
    pub fn hex(&self) -> String {
        const DIGITS: &[u8; 16] = b"0123456789abcdef";
        let mut s = String::with_capacity(self.table.len() * 2);
        for &b in &self.table {
            s.push(char::from(DIGITS[usize::from(b >> 4)]));
            s.push(char::from(DIGITS[usize::from(b & 15)]));
        }
        s
    }
}

/// Calls `visit` with every permutation of `items` (Heap's algorithm).
fn for_each_permutation(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let k = items.len();
    let mut c = vec![0usize; k];
    visit(items);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Canonical form of a monoid: identity sent to 0, then the least table over
/// all orderings of the other elements. Orders above 255 are not supported.
pub fn canonical_form(m: &Monoid) -> CanonicalForm {
    let n = m.order();
    assert!(n <= 256, "canonical forms store elements as bytes");
    let others: Vec<usize> = m.elements().filter(|&a| a != m.identity()).collect();
    let mut best: Option<Vec<u8>> = None;
    let mut automorphisms = 0;
    let mut perm = vec![0usize; n];
    let mut candidate = vec![0u8; n * n];
    let mut order = others.clone();
    for_each_permutation(&mut order, &mut |arrangement| {
        perm[m.identity()] = 0;
        for (pos, &a) in arrangement.iter().enumerate() {
            perm[a] = pos + 1;
        }
        for a in 0..n {
            for b in 0..n {
                candidate[perm[a] * n + perm[b]] = perm[m.mul(a, b)] as u8;
            }
        }
        match &best {
            Some(b) if candidate.as_slice() > b.as_slice() => {}
            Some(b) if candidate.as_slice() == b.as_slice() => automorphisms += 1,
            _ => {
                best = Some(candidate.clone());
                automorphisms = 1;
            }
        }
    });
    CanonicalForm {
        table: best.expect("at least one arrangement"),
        automorphisms,
    }
}

/// Every monoid of order `n` up to isomorphism, as canonical tables in
/// increasing order.
pub fn enumerate_monoids(n: usize) -> Result<Vec<Monoid>, MonoidError> {
    enumerate_monoids_capped(n, DEFAULT_MONOID_ORDER_CAP)
}

pub fn enumerate_monoids_capped(n: usize, cap: usize) -> Result<Vec<Monoid>, MonoidError> {
    if n == 0 {
        return Err(MonoidError::Empty);
    }
    if n > cap {
        return Err(MonoidError::CapExceeded { requested: n, cap });
    }
    const UNSET: usize = usize::MAX;
    let mut table = vec![UNSET; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    let cells: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();

    fn consistent(table: &[usize], n: usize) -> bool {
        const UNSET: usize = usize::MAX;
        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let yz = table[y * n + z];
                    if yz == UNSET {
                        continue;
                    }
                    let (l, r) = (table[xy * n + z], table[x * n + yz]);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(
        table: &mut Vec<usize>,
        n: usize,
        cells: &[usize],
        i: usize,
        found: &mut BTreeSet<Vec<u8>>,
    ) {
        if i == cells.len() {
            let m = Monoid::from_table_unchecked(n, table.clone(), 0);
            let canon = canonical_form(&m);
            let own: Vec<u8> = table.iter().map(|&v| v as u8).collect();
            if canon.table == own {
                found.insert(own);
            }
            return;
        }
        for v in 0..n {
            table[cells[i]] = v;
            if consistent(table, n) {
                fill(table, n, cells, i + 1, found);
            }
        }
        table[cells[i]] = usize::MAX;
    }

    fill(&mut table, n, &cells, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|t| Monoid::from_table_unchecked(n, t.into_iter().map(usize::from).collect(), 0))
        .collect())
}

/// Every monoid of order at most `max_order`, by order then canonical table.
pub fn enumerate_monoids_up_to(max_order: usize) -> Result<Vec<Monoid>, MonoidError> {
    let mut all = Vec::new();
    for n in 1..=max_order {
        all.extend(enumerate_monoids(n)?);
    }
    Ok(all)
}

/// Isomorphism-invariant key of each element, used to restrict the
/// relabellings considered by [`mset_canonical_table`].
fn element_keys(x: &RightMSet) -> Vec<(usize, usize, usize)> {
    let orbit = x.orbit_sizes();
    let comps = x.connected_components();
    let comp_sizes = comps.class_sizes();
    let mut indegree = vec![0usize; x.size()];
    for &y in x.action() {
        indegree[y] += 1;
    }
    (0..x.size())
        .map(|e| (orbit[e], comp_sizes[comps.class_of(e)], indegree[e]))
        .collect()
}

/// A canonical action table for `X`: elements are first ordered by an
/// isomorphism invariant, then the least table over all relabellings that
/// respect that order is taken. Two sets over the same monoid are isomorphic
/// iff their canonical tables agree.
pub fn mset_canonical_table(x: &RightMSet) -> Vec<usize> {
    let k = x.size();
    let n = x.monoid().order();
    let keys = element_keys(x);
    let mut sorted: Vec<usize> = (0..k).collect();
    sorted.sort_by_key(|&e| keys[e]);
    // Cells of equal key, as ranges into `sorted`.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=k {
        if i == k || keys[sorted[i]] != keys[sorted[start]] {
            cells.push((start, i));
            start = i;
        }
    }
    let mut best: Option<Vec<usize>> = None;
    let mut candidate = vec![0usize; k * n];
    let mut perm = vec![0usize; k];

    fn go(
        cell: usize,
        cells: &[(usize, usize)],
        sorted: &mut Vec<usize>,
        x: &RightMSet,
        perm: &mut Vec<usize>,
        candidate: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) {
        if cell == cells.len() {
            let n = x.monoid().order();
            for (pos, &e) in sorted.iter().enumerate() {
                perm[e] = pos;
            }
            for e in 0..x.size() {
                for m in 0..n {
                    candidate[perm[e] * n + m] = perm[x.act(e, m)];
                }
            }
            if best
                .as_ref()
                .is_none_or(|b| candidate.as_slice() < b.as_slice())
            {
                *best = Some(candidate.clone());
            }
            return;
        }
        let (lo, hi) = cells[cell];
        let mut items: Vec<usize> = sorted[lo..hi].to_vec();
        for_each_permutation(&mut items, &mut |arr| {
            sorted[lo..hi].copy_from_slice(arr);
            go(cell + 1, cells, sorted, x, perm, candidate, best);
        });
    }

    go(
        0,
        &cells,
        &mut sorted,
        x,
        &mut perm,
        &mut candidate,
        &mut best,
    );
    best.unwrap_or_default()
}

/// Every right `M`-set of size `k` up to isomorphism, sorted by canonical
/// action table.
pub fn enumerate_msets(monoid: &Arc<Monoid>, k: usize) -> Result<Vec<RightMSet>, MSetError> {
    enumerate_msets_capped(monoid, k, DEFAULT_MSET_SIZE_CAP)
}

pub fn enumerate_msets_capped(
    monoid: &Arc<Monoid>,
    k: usize,
    cap: usize,
) -> Result<Vec<RightMSet>, MSetError> {
    if k > cap {
        return Err(MSetError::CapExceeded {
            what: "M-set elements",
            cap,
        });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for_each_action(monoid, k, |action| {
        let x = RightMSet::from_action_unchecked(monoid.clone(), k, action.to_vec());
        found.insert(mset_canonical_table(&x));
    });
    Ok(found
        .into_iter()
        .map(|t| RightMSet::from_action_unchecked(monoid.clone(), k, t))
        .collect())
}

/// Every `M`-set of size at most `max_size`, by size then canonical table.
pub fn enumerate_msets_up_to(
    monoid: &Arc<Monoid>,
    max_size: usize,
) -> Result<Vec<RightMSet>, MSetError> {
    let mut all = Vec::new();
    for k in 0..=max_size {
        all.extend(enumerate_msets(monoid, k)?);
    }
    Ok(all)
}

/// Calls `visit` with every valid action table of size `k` (labelled, not
/// up to isomorphism).
///
/// Only the columns of a generating set are searched. Each element `m` has a
/// word `w(m)` found by breadth-first search, and the action is valid exactly
/// when `x·w(m·g) = (x·w(m))·g` for every element `m` and generator `g`;
/// these relations are checked as soon as the cells they read are assigned.
pub fn for_each_action(monoid: &Monoid, k: usize, mut visit: impl FnMut(&[usize])) {
    let n = monoid.order();
    let gens = monoid.generators();
    let g = gens.len();
    // Breadth-first words over the generators.
    let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
    word[monoid.identity()] = Some(Vec::new());
    let mut queue = alloc::collections::VecDeque::from([monoid.identity()]);
    while let Some(m) = queue.pop_front() {
        for (gi, &gen) in gens.iter().enumerate() {
            let next = monoid.mul(m, gen);
            if word[next].is_none() {
                let mut w = word[m].clone().expect("visited elements have words");
                w.push(gi);
                word[next] = Some(w);
                queue.push_back(next);
            }
        }
    }
    let word: Vec<Vec<usize>> = word
        .into_iter()
        .map(|w| w.expect("generators generate"))
        .collect();
    // Relations whose two sides differ as words.
    let mut relations: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for m in 0..n {
        for gi in 0..g {
            let mut lhs = word[m].clone();
            lhs.push(gi);
            let rhs = word[monoid.mul(m, gens[gi])].clone();
            if lhs != rhs {
                relations.push((lhs, rhs));
            }
        }
    }

    const UNSET: usize = usize::MAX;
    let mut cols = vec![UNSET; k * g];

    fn eval(cols: &[usize], g: usize, x: usize, w: &[usize]) -> Option<usize> {
        let mut y = x;
        for &gi in w {
            y = cols[y * g + gi];
            if y == usize::MAX {
                return None;
            }
        }
        Some(y)
    }

    fn ok(cols: &[usize], g: usize, k: usize, relations: &[(Vec<usize>, Vec<usize>)]) -> bool {
        for (l, r) in relations {
            for x in 0..k {
                if let (Some(a), Some(b)) = (eval(cols, g, x, l), eval(cols, g, x, r)) {
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        cell: usize,
        cols: &mut Vec<usize>,
        g: usize,
        k: usize,
        n: usize,
        relations: &[(Vec<usize>, Vec<usize>)],
        word: &[Vec<usize>],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cell == cols.len() {
            let mut action = vec![0; k * n];
            for x in 0..k {
                for (m, w) in word.iter().enumerate() {
                    action[x * n + m] = eval(cols, g, x, w).expect("all cells are assigned");
                }
            }
            visit(&action);
            return;
        }
        for v in 0..k {
            cols[cell] = v;
            if ok(cols, g, k, relations) {
                go(cell + 1, cols, g, k, n, relations, word, visit);
            }
        }
        cols[cell] = usize::MAX;
    }

    if g == 0 {
        // The trivial monoid: only the identity, which acts trivially.
        visit(&(0..k).collect::<Vec<_>>());
        return;
    }
    go(0, &mut cols, g, k, n, &relations, &word, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::is_isomorphic;
    use crate::named;

    #[test]
    fn permutations_are_complete() {
        let mut seen = BTreeSet::new();
        let mut items = vec![0, 1, 2, 3];
        for_each_permutation(&mut items, &mut |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
        let mut none: Vec<usize> = Vec::new();
        let mut count = 0;
        for_each_permutation(&mut none, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant() {
        let end2 = named::end2();
        let canon = canonical_form(&end2);
        assert_eq!(canonical_form(&canon.monoid()), canon);
        let mut others = vec![1, 2, 3];
        for_each_permutation(&mut others, &mut |p| {
            let perm = [0, p[0], p[1], p[2]];
            assert_eq!(canonical_form(&end2.relabel(&perm)).table, canon.table);
        });
        // Identity placed elsewhere is moved to 0.
        assert_eq!(
            canonical_form(&end2.relabel(&[3, 0, 1, 2])).table,
            canon.table
        );
        // The swap of c0 and c1 conjugated by the swap map is an automorphism.
        assert_eq!(canon.automorphisms, 2);
        assert_ne!(canonical_form(&named::c2()), canonical_form(&named::e2()));
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_monoids(1).unwrap().len(), 1);
        let two = enumerate_monoids(2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(enumerate_monoids(0), Err(MonoidError::Empty));
        assert_eq!(
            enumerate_monoids(6),
            Err(MonoidError::CapExceeded {
                requested: 6,
                cap: 5
            })
        );
    }

    #[test]
    fn emitted_monoids_validate() {
        for n in 1..=4 {
            for m in enumerate_monoids(n).unwrap() {
                assert!(Monoid::new(n, m.table().to_vec(), m.identity()).is_ok());
                assert_eq!(m.identity(), 0);
            }
        }
    }

    #[test]
    fn msets_of_small_size() {
        for (_, m) in named::all() {
            let m = Arc::new(m);
            assert_eq!(enumerate_msets(&m, 0).unwrap(), vec![RightMSet::empty(&m)]);
            assert_eq!(
                enumerate_msets(&m, 1).unwrap(),
                vec![RightMSet::terminal(&m)]
            );
        }
        let c2 = Arc::new(named::c2());
        let two = enumerate_msets(&c2, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two
            .iter()
            .any(|x| is_isomorphic(x, &RightMSet::regular(&c2))));
        assert!(two
            .iter()
            .any(|x| is_isomorphic(x, &RightMSet::trivial_action(&c2, 2))));
    }

    #[test]
    fn canonical_table_separates_isomorphism_classes() {
        for (_, m) in named::all() {
            if m.order() > 4 {
                continue;
            }
            let m = Arc::new(m);
            let sets = enumerate_msets(&m, 3).unwrap();
            for (i, a) in sets.iter().enumerate() {
                assert_eq!(mset_canonical_table(a), a.action());
                for b in &sets[i + 1..] {
                    assert!(!is_isomorphic(a, b));
                }
            }
        }
    }
}
