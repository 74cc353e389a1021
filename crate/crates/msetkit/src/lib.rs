//! File formats, JSON reports, caching and parallel suite runs for
//! [`msetkit_core`].

pub mod cache;
pub mod error;
pub mod io;
pub mod report;
pub mod suite;

pub use error::Error;
