//! Verification of the coprime-commutator lemmas on concrete groups.
//!
//! Each check returns a [`CheckReport`]. An instance that does not satisfy
//! the hypotheses of the statement is reported as skipped with a reason, so
//! suites can show how many instances actually exercised a statement.

mod checks;
mod measure;
mod suite;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;

pub use checks::*;
pub use measure::{conciseness_table, measure_conciseness, ConcisenessRow};
pub use suite::{
    abelian_action_fixtures, run_suite, summarize, AbelianFixture, CheckId, CheckSummary,
    SuiteConfig,
};

/// A group with the identifier it is reported under.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub group: Arc<FiniteGroup>,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, group: Arc<FiniteGroup>) -> Self {
        CorpusEntry { id: id.into(), group }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one check on one instance.
///
/// `witness` holds the skip reason for skipped checks and a concrete
/// counterexample description for failures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub group_id: String,
    pub order: usize,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Option<String>,
    pub metrics: BTreeMap<String, u64>,
}

impl CheckReport {
    pub fn new(check_id: CheckId, entry: &CorpusEntry) -> Self {
        CheckReport {
            check_id: check_id.as_str().to_string(),
            group_id: entry.id.clone(),
            order: entry.group.order(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            metrics: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn metric(mut self, key: &str, value: u64) -> Self {
        self.metrics.insert(key.to_string(), value);
        self
    }

    pub fn set_metric(&mut self, key: &str, value: u64) {
        self.metrics.insert(key.to_string(), value);
    }

    pub fn pass(mut self) -> Self {
        self.status = Status::Pass;
        self.witness = None;
        self
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.witness = Some(reason.into());
        self
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn verdict(self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            self.pass()
        } else {
            self.fail(witness())
        }
    }

    /// `k=v` pairs joined by `;` in key order.
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }

    /// Canonical report order: group, check, then params with numeric
    /// values compared as numbers.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.group_id
            .cmp(&other.group_id)
            .then_with(|| self.check_id.cmp(&other.check_id))
            .then_with(|| cmp_params(&self.params, &other.params))
    }
}

fn cmp_params(a: &BTreeMap<String, String>, b: &BTreeMap<String, String>) -> Ordering {
    for ((ka, va), (kb, vb)) in a.iter().zip(b.iter()) {
        let ord = ka.cmp(kb).then_with(|| match (va.parse::<i64>(), vb.parse::<i64>()) {
            (Ok(x), Ok(y)) => x.cmp(&y),
            _ => va.cmp(vb),
        });
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_sort_numerically() {
        let g = FiniteGroup::trivial(1);
        let e = CorpusEntry::new("t", g);
        let a = CheckReport::new(CheckId::DeltaRecursion, &e).param("k", 2);
        let b = CheckReport::new(CheckId::DeltaRecursion, &e).param("k", 10);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(a.params_string(), "k=2");
    }

    #[test]
    fn skipped_and_failed_reports_carry_text() {
        let e = CorpusEntry::new("t", FiniteGroup::trivial(1));
        let s = CheckReport::new(CheckId::CoprimeOre, &e).skip("not simple");
        assert_eq!(s.status, Status::Skipped);
        assert_eq!(s.witness.as_deref(), Some("not simple"));
        let f = CheckReport::new(CheckId::CoprimeOre, &e).verdict(false, || "x".into());
        assert_eq!(f.status, Status::Fail);
        assert!(f.witness.is_some());
    }
}
