//! Submonoid closure, right-factorable closure and right congruences.
//!
//! A subset `S ⊆ M` is right-factorable when `x ∈ S` and `x·y ∈ S` imply
//! `y ∈ S`. The right-factorable closure `⟨S⟩⟩` of a nonempty `S` is the least
//! right-factorable submonoid containing it. It is computed by iterating
//! `S ↦ {m | ∃t ∈ ⟨S⟩, t·m ∈ ⟨S⟩}` until nothing changes, and it coincides with
//! the class of the identity in the right congruence generated by the pairs
//! `(s, 1)` for `s ∈ S`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::MonoidError;
use crate::monoid::Monoid;
use crate::partition::{RightCongruence, UnionFind};

/// Membership vector of the submonoid generated by `gens` (just `{1}` when empty).
pub(crate) fn submonoid_membership(m: &Monoid, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; m.order()];
    member[m.identity()] = true;
    let mut frontier = vec![m.identity()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = m.mul(x, g);
            if !member[y] {
                member[y] = true;
                frontier.push(y);
            }
        }
    }
    member
}

fn check_seed(m: &Monoid, seed: &[usize]) -> Result<(), MonoidError> {
    if seed.is_empty() {
        return Err(MonoidError::EmptySeed);
    }
    seed.iter().try_for_each(|&s| m.check_element(s))
}

fn members(flags: &[bool]) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(x, &b)| b.then_some(x))
        .collect()
}

/// `⟨S⟩`, the submonoid generated by `seed`, in increasing order.
pub fn submonoid_closure(m: &Monoid, seed: &[usize]) -> Result<Vec<usize>, MonoidError> {
    check_seed(m, seed)?;
    Ok(members(&submonoid_membership(m, seed)))
}

/// `⟨S⟩⟩`, the least right-factorable submonoid containing `seed`, in
/// increasing order.
pub fn right_factorable_closure(m: &Monoid, seed: &[usize]) -> Result<Vec<usize>, MonoidError> {
    check_seed(m, seed)?;
    let mut current = seed.to_vec();
    current.sort_unstable();
    current.dedup();
    loop {
        let generated = submonoid_membership(m, &current);
        let next: Vec<usize> = m
            .elements()
            .filter(|&x| m.elements().any(|t| generated[t] && generated[m.mul(t, x)]))
            .collect();
        if next == current {
            return Ok(next);
        }
        current = next;
    }
}

/// The least right congruence containing `pairs`: merging `x` and `y` forces
/// merging `x·m` and `y·m` for every `m`.
pub fn congruence_from_pairs(
    m: &Monoid,
    pairs: &[(usize, usize)],
) -> Result<RightCongruence, MonoidError> {
    for &(x, y) in pairs {
        m.check_element(x)?;
        m.check_element(y)?;
    }
    let mut uf = UnionFind::new(m.order());
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        if uf.union(x, y) {
            work.extend(m.elements().map(|n| (m.mul(x, n), m.mul(y, n))));
        }
    }
    Ok(uf.into_partition())
}

/// Whether `set` (a membership vector) is right-factorable.
pub fn is_right_factorable(m: &Monoid, set: &[bool]) -> bool {
    m.elements()
        .filter(|&x| set[x])
        .all(|x| m.elements().all(|y| !set[m.mul(x, y)] || set[y]))
}

/// A smallest set right-factorably generating `M`.
///
/// Sizes are tried in increasing order and, within a size, sorted index tuples
/// in lexicographic order; the first hit is returned.
pub fn minimal_rf_generating_set(m: &Monoid) -> Vec<usize> {
    let n = m.order();
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let closure = right_factorable_closure(m, &combo).expect("seed is nonempty");
            if closure.len() == n {
                return combo;
            }
            // Advance to the next combination in lexicographic order.
            let mut i = size;
            while i > 0 && combo[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole monoid right-factorably generates itself")
}
