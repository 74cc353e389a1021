//! Small monoids that serve as standard examples and test fixtures.

use alloc::vec;
use alloc::vec::Vec;

use crate::monoid::Monoid;

/// Identity of [`end2`].
pub const END2_ID: usize = 0;
/// The swap map of [`end2`].
pub const END2_SWAP: usize = 1;
/// The constant map onto 0 in [`end2`].
pub const END2_C0: usize = 2;
/// The constant map onto 1 in [`end2`].
pub const END2_C1: usize = 3;

/// The one-element monoid.
pub fn t1() -> Monoid {
    Monoid::trivial()
}

/// The cyclic group of order `n` (addition mod `n`, identity 0).
pub fn cyclic(n: usize) -> Monoid {
    assert!(n >= 1, "a cyclic group needs at least one element");
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Monoid::from_table_unchecked(n, table, 0)
}

/// The group of order two.
pub fn c2() -> Monoid {
    cyclic(2)
}

/// `{1, e}` with `e² = e`; element 1 is `e`, which is a zero.
pub fn e2() -> Monoid {
    Monoid::from_table_unchecked(2, vec![0, 1, 1, 1], 0)
}

/// `({0, 1}, max)`; the same table as [`e2`].
pub fn max2() -> Monoid {
    e2()
}

/// `{1, a, b}` with `a` and `b` right absorbing: `x·y = x` for `x ∈ {a, b}`.
/// Elements are `1 = 0`, `a = 1`, `b = 2`.
pub fn rz3() -> Monoid {
    Monoid::from_table_unchecked(3, vec![0, 1, 2, 1, 1, 1, 2, 2, 2], 0)
}

/// The opposite of [`rz3`]: `a` and `b` are left absorbing.
pub fn lz3() -> Monoid {
    Monoid::from_table_unchecked(3, vec![0, 1, 2, 1, 1, 2, 2, 1, 2], 0)
}

/// Maps `{0,1} → {0,1}` under composition, `(f·g)(x) = f(g(x))`.
///
/// Elements are numbered by [`END2_ID`], [`END2_SWAP`], [`END2_C0`], [`END2_C1`].
pub fn end2() -> Monoid {
    transformations(&[vec![0, 1], vec![1, 0], vec![0, 0], vec![1, 1]])
}

/// All self-maps of `{0..k}` under composition `(f·g)(x) = f(g(x))`.
/// The identity map is element 0; the rest follow in lexicographic order.
pub fn full_transformation(k: usize) -> Monoid {
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let total = k
        .checked_pow(k as u32)
        .expect("transformation monoid too large");
    for code in 0..total {
        let mut f = vec![0; k];
        let mut c = code;
        for slot in f.iter_mut().rev() {
            *slot = c % k;
            c /= k;
        }
        maps.push(f);
    }
    let id: Vec<usize> = (0..k).collect();
    let pos = maps.iter().position(|f| *f == id).unwrap_or(0);
    let id_map = maps.remove(pos);
    maps.insert(0, id_map);
    transformations(&maps)
}

/// The monoid of the given maps (which must be closed under composition and
/// contain the identity as element 0), multiplied by `(f·g)(x) = f(g(x))`.
fn transformations(maps: &[Vec<usize>]) -> Monoid {
    let n = maps.len();
    let mut table = vec![0; n * n];
    for (a, f) in maps.iter().enumerate() {
        for (b, g) in maps.iter().enumerate() {
            let fg: Vec<usize> = g.iter().map(|&x| f[x]).collect();
            table[a * n + b] = maps
                .iter()
                .position(|h| *h == fg)
                .expect("maps must be closed under composition");
        }
    }
    Monoid::from_table_unchecked(n, table, 0)
}

/// `{1, a, b, 0}`: the free semilattice on two generators with a unit
/// adjoined, `a·b = b·a = 0`.
pub fn semilattice4() -> Monoid {
    Monoid::from_table_unchecked(
        4,
        vec![
            0, 1, 2, 3, //
            1, 1, 3, 3, //
            2, 3, 2, 3, //
            3, 3, 3, 3,
        ],
        0,
    )
}

/// Every named monoid, with its name.
pub fn all() -> Vec<(&'static str, Monoid)> {
    vec![
        ("T1", t1()),
        ("C2", c2()),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("E2", e2()),
        ("RZ3", rz3()),
        ("LZ3", lz3()),
        ("End(2)", end2()),
        ("SL4", semilattice4()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_tables_are_monoids() {
        for (name, m) in all() {
            assert!(
                Monoid::new(m.order(), m.table().to_vec(), m.identity()).is_ok(),
                "{name} failed validation"
            );
        }
        let t3 = full_transformation(3);
        assert_eq!(t3.order(), 27);
        assert!(Monoid::new(27, t3.table().to_vec(), 0).is_ok());
    }

    #[test]
    fn end2_products() {
        assert_eq!(full_transformation(2).right_absorbing().len(), 2);
        let m = end2();
        assert_eq!(m.mul(END2_SWAP, END2_SWAP), END2_ID);
        assert_eq!(m.mul(END2_SWAP, END2_C0), END2_C1);
        assert_eq!(m.mul(END2_C0, END2_SWAP), END2_C0);
    }
}
