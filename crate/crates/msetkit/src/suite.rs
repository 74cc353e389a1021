//! The harness over every monoid up to an order, one monoid per task.

use msetkit_core::enumeration::DEFAULT_MONOID_ORDER_CAP;
use msetkit_core::harness::{check_monoid, SuiteReport};
use msetkit_core::preservation::Bounds;
use msetkit_core::MonoidError;
use rayon::prelude::*;

use crate::cache::monoids_up_to;
use crate::error::Error;

/// Same result as the sequential core `run_suite`, computed in parallel.
pub fn run_suite(max_order: usize, bounds: Bounds) -> Result<SuiteReport, Error> {
    if max_order > DEFAULT_MONOID_ORDER_CAP {
        return Err(MonoidError::CapExceeded {
            requested: max_order,
            cap: DEFAULT_MONOID_ORDER_CAP,
        }
        .into());
    }
    let monoids = monoids_up_to(max_order)?;
    let reports = monoids
        .par_iter()
        .map(|m| check_monoid(m, bounds))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport::from_reports(max_order, bounds, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_the_sequential_run() {
        let bounds = Bounds {
            blind: 3,
            ..Bounds::default()
        };
        let par = run_suite(3, bounds).unwrap();
        assert_eq!(par, msetkit_core::harness::run_suite(3, bounds).unwrap());
        assert_eq!(par.disagreements, 0);
    }

    #[test]
    fn orders_beyond_the_cap_are_refused() {
        let err = run_suite(20, Bounds::default()).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}
