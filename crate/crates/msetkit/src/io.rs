//! Text formats for monoids and right `M`-sets.
//!
//! A monoid file holds the order `n`, then the identity index, then `n` rows
//! of `n` indices, row `a` listing the products `a·b`:
//!
//! ```text
//! 2
//! 0
//! 0 1
//! 1 0
//! ```
//!
//! An `M`-set file starts with a `monoid <path>` header (relative paths are
//! resolved against the `M`-set file's directory), then the size `k`, then
//! `k` rows of `n` indices, row `x` listing `x·m` for every `m`.
//!
//! Indices are 0-based. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use msetkit_core::{Monoid, RightMSet};

use crate::error::Error;

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_indices(path: &Path, line: usize, text: &str) -> Result<Vec<usize>, Error> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                path: path.to_path_buf(),
                line,
                message: format!("expected a non-negative integer, found {t:?}"),
            })
        })
        .collect()
}

fn parse_single(path: &Path, line: usize, text: &str, what: &str) -> Result<usize, Error> {
    match parse_indices(path, line, text)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("expected a single integer ({what})"),
        }),
    }
}

fn missing(path: &Path, line: usize, what: &str) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: format!("unexpected end of file, expected {what}"),
    }
}

/// Reads `count` rows, returning them with the last line number seen.
fn parse_rows<'a>(
    path: &Path,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    count: usize,
    mut last: usize,
) -> Result<Vec<Vec<usize>>, Error> {
    let mut rows = Vec::with_capacity(count);
    for r in 0..count {
        let (line, text) = lines
            .next()
            .ok_or_else(|| missing(path, last, &format!("row {r}")))?;
        rows.push(parse_indices(path, line, text)?);
        last = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("trailing data after {count} rows"),
        });
    }
    Ok(rows)
}

/// Parses monoid text; `path` is only used in diagnostics.
pub fn parse_monoid(path: &Path, text: &str) -> Result<Monoid, Error> {
    let mut lines = content_lines(text);
    let (l1, t1) = lines.next().ok_or_else(|| missing(path, 0, "the order"))?;
    let n = parse_single(path, l1, t1, "the order")?;
    let (l2, t2) = lines
        .next()
        .ok_or_else(|| missing(path, l1, "the identity"))?;
    let identity = parse_single(path, l2, t2, "the identity")?;
    let rows = parse_rows(path, &mut lines, n, l2)?;
    Ok(Monoid::from_rows(&rows, identity)?)
}

pub fn read_monoid(path: &Path) -> Result<Monoid, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_monoid(path, &text)
}

pub fn format_monoid(m: &Monoid) -> String {
    let mut out = format!("{}\n{}\n", m.order(), m.identity());
    for a in m.elements() {
        push_row(&mut out, m.row(a));
    }
    out
}

fn push_row(out: &mut String, row: &[usize]) {
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

/// An `M`-set file before its monoid is loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSetFile {
    /// The header path, resolved against the file's directory.
    pub monoid_path: PathBuf,
    pub rows: Vec<Vec<usize>>,
}

pub fn parse_mset(path: &Path, text: &str) -> Result<MSetFile, Error> {
    let mut lines = content_lines(text);
    let (l1, header) = lines
        .next()
        .ok_or_else(|| missing(path, 0, "a `monoid <path>` header"))?;
    let target = header
        .strip_prefix("monoid")
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .ok_or_else(|| Error::Parse {
            path: path.to_path_buf(),
            line: l1,
            message: "expected a `monoid <path>` header".into(),
        })?;
    let base = path.parent().unwrap_or(Path::new(""));
    let monoid_path = base.join(target);
    let (l2, t2) = lines.next().ok_or_else(|| missing(path, l1, "the size"))?;
    let k = parse_single(path, l2, t2, "the size")?;
    let rows = parse_rows(path, &mut lines, k, l2)?;
    Ok(MSetFile { monoid_path, rows })
}

/// Reads an `M`-set file and the monoid its header names.
pub fn read_mset(path: &Path) -> Result<RightMSet, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let file = parse_mset(path, &text)?;
    let monoid = Arc::new(read_monoid(&file.monoid_path)?);
    Ok(RightMSet::from_rows(monoid, &file.rows)?)
}

/// Reads an `M`-set file whose header must name a monoid equal to `monoid`.
pub fn read_mset_over(
    path: &Path,
    monoid: &Arc<Monoid>,
    monoid_path: &Path,
) -> Result<RightMSet, Error> {
    let x = read_mset(path)?;
    if **x.monoid() != **monoid {
        return Err(Error::MonoidMismatch {
            mset: path.to_path_buf(),
            monoid: monoid_path.to_path_buf(),
        });
    }
    Ok(RightMSet::from_rows(monoid.clone(), &x.rows())?)
}

/// `monoid_ref` is written verbatim into the header.
pub fn format_mset(x: &RightMSet, monoid_ref: &str) -> String {
    let mut out = format!("monoid {monoid_ref}\n{}\n", x.size());
    for e in 0..x.size() {
        push_row(&mut out, x.row(e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use msetkit_core::named;

    fn p() -> &'static Path {
        Path::new("t.monoid")
    }

    #[test]
    fn monoid_roundtrip() {
        for (_, m) in named::all() {
            assert_eq!(parse_monoid(p(), &format_monoid(&m)).unwrap(), m);
        }
    }

    #[test]
    fn comments_and_identity_elsewhere() {
        let m = parse_monoid(p(), "# C2 with identity at 1\n2\n1\n\n1 0\n0 1\n").unwrap();
        assert_eq!(m.identity(), 1);
        assert!(m.is_group());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_monoid(p(), "2\n0\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_monoid(p(), "2\n0\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_monoid(p(), "1\n0\n0\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        assert_eq!(parse_monoid(p(), "").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn law_violations_are_validation_errors() {
        // (1·1)·2 = 2 but 1·(1·2) = 1.
        let err = parse_monoid(p(), "3\n0\n0 1 2\n1 2 0\n2 1 2\n").unwrap_err();
        assert!(err.to_string().starts_with("AssocViolation"), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn mset_header_resolves_relative_to_file() {
        let f = parse_mset(Path::new("dir/x.mset"), "monoid c2.monoid\n1\n0 0\n").unwrap();
        assert_eq!(f.monoid_path, Path::new("dir/c2.monoid"));
        assert_eq!(f.rows, vec![vec![0, 0]]);
        assert!(parse_mset(p(), "monoid\n1\n0\n").is_err());
        assert!(parse_mset(p(), "1\n0\n").is_err());
    }
}
