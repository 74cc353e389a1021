//! JSON documents for profiles, per-monoid checks and suite runs.
//!
//! Field order is fixed by the struct definitions and maps are `BTreeMap`s, so
//! identical inputs give byte-identical output.

use std::collections::BTreeMap;

use msetkit_core::harness::{
    ConditionWitness, Evidence, MonoidReport, PropertyProfile, Status, SuiteReport, Theorem,
    TheoremReport,
};
use msetkit_core::preservation::Bounds;
use msetkit_core::Monoid;
use serde::Serialize;

/// Version of the JSON layout, bumped on incompatible changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Versions {
    pub msetkit: &'static str,
    pub format: u32,
}

impl Versions {
    pub fn current() -> Self {
        Self {
            msetkit: env!("CARGO_PKG_VERSION"),
            format: FORMAT_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl From<&Monoid> for MonoidDoc {
    fn from(m: &Monoid) -> Self {
        Self {
            order: m.order(),
            table: m.elements().map(|a| m.row(a).to_vec()).collect(),
            identity: m.identity(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionDoc {
    pub id: &'static str,
    pub verdict: bool,
    pub evidence: Evidence,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConditionWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremDoc {
    pub id: Theorem,
    pub verdict: bool,
    pub conditions: Vec<ConditionDoc>,
    pub agreement: bool,
}

impl From<&TheoremReport> for TheoremDoc {
    fn from(t: &TheoremReport) -> Self {
        Self {
            id: t.theorem,
            verdict: t.verdict,
            conditions: t
                .conditions
                .iter()
                .map(|c| ConditionDoc {
                    id: c.id,
                    verdict: c.holds,
                    evidence: c.evidence,
                    status: c.status,
                    witness: c.witness.clone(),
                })
                .collect(),
            agreement: t.agreement,
        }
    }
}

/// All checks for one monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub monoid: MonoidDoc,
    pub canonical: String,
    pub profile: PropertyProfile,
    pub profile_violations: Vec<&'static str>,
    pub duality: bool,
    pub theorems: Vec<TheoremDoc>,
    pub bounds: Bounds,
    pub versions: Versions,
}

impl ReportDocument {
    /// `monoid` is the table as the user supplied it; `report` was computed from it.
    pub fn new(monoid: &Monoid, report: &MonoidReport, bounds: Bounds) -> Self {
        Self {
            monoid: monoid.into(),
            canonical: report.canonical.clone(),
            profile: report.profile.clone(),
            profile_violations: report.profile_violations.clone(),
            duality: report.duality,
            theorems: report.theorems.iter().map(TheoremDoc::from).collect(),
            bounds,
            versions: Versions::current(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileDocument {
    pub monoid: MonoidDoc,
    pub profile: PropertyProfile,
    pub versions: Versions,
}

impl ProfileDocument {
    pub fn new(monoid: &Monoid, profile: PropertyProfile) -> Self {
        Self {
            monoid: monoid.into(),
            profile,
            versions: Versions::current(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteDocument {
    pub max_order: usize,
    pub bounds: Bounds,
    pub out_of_scope: Vec<&'static str>,
    pub disagreements: usize,
    pub unconfirmed: usize,
    pub counts: BTreeMap<usize, BTreeMap<&'static str, usize>>,
    pub monoids: Vec<ReportDocument>,
    pub versions: Versions,
}

/// Decodes the hex of a canonical table (identity at 0).
pub fn monoid_from_canonical_hex(hex: &str) -> Option<Monoid> {
    let bytes: Vec<usize> = (0..hex.len())
        .step_by(2)
        .map(|i| {
            hex.get(i..i + 2)
                .and_then(|b| u8::from_str_radix(b, 16).ok())
                .map(usize::from)
        })
        .collect::<Option<_>>()?;
    let n = (1..=bytes.len()).find(|n| n * n >= bytes.len())?;
    Monoid::new(n, bytes, 0).ok()
}

impl From<&SuiteReport> for SuiteDocument {
    fn from(s: &SuiteReport) -> Self {
        Self {
            max_order: s.max_order,
            bounds: s.bounds,
            out_of_scope: s.out_of_scope.clone(),
            disagreements: s.disagreements,
            unconfirmed: s.unconfirmed,
            counts: s.counts.clone(),
            monoids: s
                .monoids
                .iter()
                .map(|r| {
                    let m = monoid_from_canonical_hex(&r.canonical)
                        .expect("suite reports carry canonical tables");
                    ReportDocument::new(&m, r, s.bounds)
                })
                .collect(),
            versions: Versions::current(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
