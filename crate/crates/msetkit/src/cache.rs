//! On-disk cache of enumerated monoids.
//!
//! When `MSETKIT_CACHE_DIR` is set, the monoids of order `n` are stored in
//! `order-<n>.bin` as consecutive records: one byte holding `n`, then the `n²`
//! bytes of the canonical table (identity at 0).

use std::fs;
use std::path::{Path, PathBuf};

use msetkit_core::enumeration::{canonical_form, enumerate_monoids};
use msetkit_core::Monoid;

use crate::error::Error;

pub const CACHE_DIR_VAR: &str = "MSETKIT_CACHE_DIR";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_VAR)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

pub fn cache_file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("order-{n}.bin"))
}

pub fn encode(monoids: &[Monoid]) -> Vec<u8> {
    let mut out = Vec::new();
    for m in monoids {
        let c = canonical_form(m);
        out.push(u8::try_from(m.order()).expect("cached orders fit in a byte"));
        out.extend_from_slice(&c.table);
    }
    out
}

/// `None` if the bytes are truncated or hold a table that is not a monoid.
pub fn decode(bytes: &[u8]) -> Option<Vec<Monoid>> {
    let mut out = Vec::new();
    let mut rest = bytes;
    while let Some((&n, tail)) = rest.split_first() {
        let n = usize::from(n);
        let table = tail.get(..n * n)?;
        out.push(Monoid::new(n, table.iter().map(|&b| usize::from(b)).collect(), 0).ok()?);
        rest = &tail[n * n..];
    }
    Some(out)
}

/// Monoids of order `n`, from the cache directory when it holds a valid file.
/// A missing or unreadable cache file is regenerated.
pub fn monoids_of_order(n: usize) -> Result<Vec<Monoid>, Error> {
    let Some(dir) = cache_dir() else {
        return Ok(enumerate_monoids(n)?);
    };
    let path = cache_file(&dir, n);
    if let Some(ms) = fs::read(&path).ok().and_then(|b| decode(&b)) {
        if ms.iter().all(|m| m.order() == n) {
            return Ok(ms);
        }
    }
    let ms = enumerate_monoids(n)?;
    fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    fs::write(&path, encode(&ms)).map_err(|e| Error::io(&path, e))?;
    Ok(ms)
}

pub fn monoids_up_to(max_order: usize) -> Result<Vec<Monoid>, Error> {
    let mut all = Vec::new();
    for n in 1..=max_order {
        all.extend(monoids_of_order(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_roundtrip() {
        let ms = enumerate_monoids(3).unwrap();
        let bytes = encode(&ms);
        assert_eq!(bytes.len(), ms.len() * 10);
        assert_eq!(decode(&bytes).unwrap(), ms);
        assert!(decode(&bytes[..bytes.len() - 1]).is_none());
        assert_eq!(decode(&[]).unwrap(), Vec::<Monoid>::new());
        // Order 2 with a table whose identity is not at 0.
        assert!(decode(&[2, 1, 1, 1, 0]).is_none());
    }
}
