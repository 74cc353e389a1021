use thiserror::Error;

/// Reasons a multiplication table is not a monoid, plus closure-seed errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("RangeError: a monoid needs at least one element")]
    Empty,
    #[error("RangeError: row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("RangeError: entry {value} at ({row},{col}) is not below {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("RangeError: identity {identity} is not below {order}")]
    IdentityOutOfRange { identity: usize, order: usize },
    #[error("IdentityViolation a={element}")]
    IdentityViolation { element: usize },
    #[error("AssocViolation a={a} b={b} c={c}")]
    AssocViolation { a: usize, b: usize, c: usize },
    #[error("EmptySeed: closure of the empty set requested")]
    EmptySeed,
    #[error("element {element} is not below the monoid order {order}")]
    IndexError { element: usize, order: usize },
    #[error("CapExceeded: requested {requested}, cap is {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// Errors raised by constructions on `M`-sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MSetError {
    #[error("action table has {len} entries, expected {expected}")]
    Shape { len: usize, expected: usize },
    #[error("RangeError: action entry {value} at ({element},{by}) is not below {size}")]
    OutOfRange {
        element: usize,
        by: usize,
        value: usize,
        size: usize,
    },
    #[error("UnitViolation x={element}")]
    UnitViolation { element: usize },
    #[error("AssocViolation x={element} m={m} n={n}")]
    AssocViolation { element: usize, m: usize, n: usize },
    #[error("CompatibilityViolation m={m} b={element} n={n}")]
    CompatibilityViolation { m: usize, element: usize, n: usize },
    #[error("MonoidMismatch: operands act over different monoids")]
    MonoidMismatch,
    #[error("EndpointMismatch: morphism endpoints do not line up")]
    EndpointMismatch,
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("map is not equivariant at x={element}, m={by}")]
    NotEquivariant { element: usize, by: usize },
    #[error("NotSubMSet: subset is not closed under the action")]
    NotSubMSet,
    #[error("IndexError: element {element} is not below {size}")]
    IndexError { element: usize, size: usize },
    #[error("CapExceeded: more than {cap} {what}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("BoundTooSmall: {0}")]
    BoundTooSmall(&'static str),
}
