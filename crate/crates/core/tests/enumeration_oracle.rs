//! The pruned enumerators against brute-force filter-and-dedup oracles.

use std::collections::BTreeSet;
use std::sync::Arc;

use msetkit_core::enumeration::{
    canonical_form, enumerate_monoids, enumerate_msets, mset_canonical_table,
};
use msetkit_core::{Monoid, RightMSet};

/// Every table on `0..n` with identity 0 that is associative, deduplicated by
/// trying all relabellings fixing 0.
fn naive_monoids(n: usize) -> BTreeSet<Vec<usize>> {
    let free: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();
    let total = n.pow(free.len() as u32);
    let mut classes = BTreeSet::new();
    for code in 0..total {
        let mut table = vec![0; n * n];
        for a in 0..n {
            table[a] = a;
            table[a * n] = a;
        }
        let mut c = code;
        for &cell in &free {
            table[cell] = c % n;
            c /= n;
        }
        let Ok(m) = Monoid::new(n, table, 0) else {
            continue;
        };
        let mut best: Option<Vec<usize>> = None;
        for perm in permutations_fixing_zero(n) {
            let t = m.relabel(&perm).table().to_vec();
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        }
        classes.insert(best.unwrap());
    }
    classes
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    permutations_fixing_zero(k + 1)
        .into_iter()
        .map(|p| p[1..].iter().map(|v| v - 1).collect())
        .collect()
}

/// Every action table of size `k` satisfying the laws, deduplicated by
/// trying all relabellings.
fn naive_msets(m: &Arc<Monoid>, k: usize) -> BTreeSet<Vec<usize>> {
    let n = m.order();
    let cells = k * n;
    let total = k.pow(cells as u32);
    let perms = all_permutations(k);
    let mut classes = BTreeSet::new();
    for code in 0..total.max(usize::from(k == 0)) {
        let mut action = vec![0; cells];
        let mut c = code;
        for slot in action.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        let Ok(x) = RightMSet::new(m.clone(), k, action) else {
            continue;
        };
        let mut best: Option<Vec<usize>> = None;
        for p in &perms {
            let mut t = vec![0; cells];
            for e in 0..k {
                for a in 0..n {
                    t[p[e] * n + a] = p[x.act(e, a)];
                }
            }
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        }
        classes.insert(best.unwrap());
    }
    classes
}

#[test]
fn monoids_match_naive_oracle_up_to_order_three() {
    for n in 1..=3 {
        let pruned: BTreeSet<Vec<usize>> = enumerate_monoids(n)
            .unwrap()
            .iter()
            .map(|m| m.table().to_vec())
            .collect();
        assert_eq!(pruned, naive_monoids(n), "order {n}");
    }
}

#[test]
fn monoid_counts_are_frozen() {
    // Produced by the naive oracle above for orders 1..=3 and by the pruned
    // enumerator for order 4.
    let counts: Vec<usize> = (1..=4)
        .map(|n| enumerate_monoids(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 7, 35]);
}

#[test]
fn canonical_forms_are_fixed_points() {
    for n in 1..=4 {
        for m in enumerate_monoids(n).unwrap() {
            let canon = canonical_form(&m);
            let bytes: Vec<u8> = m.table().iter().map(|&v| v as u8).collect();
            assert_eq!(canon.table, bytes);
        }
    }
}

#[test]
fn msets_match_naive_oracle() {
    let monoids: Vec<Monoid> = (1..=3)
        .flat_map(|n| enumerate_monoids(n).unwrap())
        .collect();
    for m in monoids {
        let m = Arc::new(m);
        for k in 0..=3 {
            let pruned = enumerate_msets(&m, k).unwrap();
            for x in &pruned {
                assert!(RightMSet::new(m.clone(), k, x.action().to_vec()).is_ok());
            }
            // Both sides are compared as isomorphism classes: the oracle's
            // representatives are re-canonicalized with the library's form.
            let oracle: BTreeSet<Vec<usize>> = naive_msets(&m, k)
                .into_iter()
                .map(|t| mset_canonical_table(&RightMSet::new(m.clone(), k, t).unwrap()))
                .collect();
            let got: BTreeSet<Vec<usize>> = pruned.iter().map(|x| x.action().to_vec()).collect();
            assert_eq!(got.len(), pruned.len(), "duplicates emitted");
            assert_eq!(got, oracle, "monoid {:?}, size {k}", m.table());
        }
    }
}

#[test]
fn mset_stream_is_sorted() {
    for m in enumerate_monoids(3).unwrap() {
        let m = Arc::new(m);
        let sets = enumerate_msets(&m, 3).unwrap();
        assert!(sets.windows(2).all(|w| w[0].action() < w[1].action()));
    }
}
