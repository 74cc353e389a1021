//! Finite monoids and the topos of their right actions.
//!
//! A finite monoid `M` is stored as its multiplication table. Everything else in
//! this crate is computed from that table: right and left `M`-sets, their
//! morphisms, limits and colimits, the subobject classifier (the lattice of
//! right ideals), exponentials, tensor products and flatness, the category of
//! points, and the exhaustive enumerations that drive the property checks in
//! [`harness`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closure;
pub mod enumeration;
pub mod error;
pub mod flatness;
pub mod harness;
pub mod hom;
pub mod left;
pub mod monoid;
pub mod mset;
pub mod named;
pub mod partition;
pub mod preservation;
pub mod topos;

pub use error::{MSetError, MonoidError};
pub use left::{BiSet, LeftMSet};
pub use monoid::{ElementClasses, Monoid};
pub use mset::{MSetMorphism, RightMSet};
pub use partition::{Partition, UnionFind};
