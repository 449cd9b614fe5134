//! Check records and reports shared by every verifier, serialised as one
//! JSON object per line.

use rayon::prelude::*;
use serde::Serialize;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisFailed,
}

/// What a failure means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Structural property the library itself guarantees or requires
    /// (d∘d = 0, bilinearity, equivariance, membership).
    Invariant,
    /// A defining axiom of the structure under test.
    Axiom,
    /// A printed identity or table row compared against the composite
    /// definition; a failure is a finding about the printed formula.
    Audit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    pub kind: CheckKind,
    /// Number of cases evaluated.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub witnesses: Vec<String>,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        kind: CheckKind,
        cases: u64,
        witness: Option<String>,
    ) -> Self {
        let witnesses: Vec<String> = witness.into_iter().collect();
        CheckRecord {
            check: check.into(),
            status: if witnesses.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            kind,
            cases,
            note: None,
            witnesses,
        }
    }

    pub fn hypothesis_failed(
        check: impl Into<String>,
        kind: CheckKind,
        why: impl Into<String>,
    ) -> Self {
        CheckRecord {
            check: check.into(),
            status: Status::HypothesisFailed,
            kind,
            cases: 0,
            note: Some(why.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Ordered list of check records about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub records: Vec<CheckRecord>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport {
            subject: subject.into(),
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    /// Appends another report's records, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut r in other.records {
            r.check = format!("{prefix}{}", r.check);
            self.records.push(r);
        }
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    /// 0 when everything passes, 1 when an invariant or axiom fails,
    /// 2 when only audit rows fail.
    pub fn exit_code(&self) -> i32 {
        let mut code = 0;
        for r in self.failures() {
            match r.kind {
                CheckKind::Audit => code = code.max(2),
                _ => return 1,
            }
        }
        code
    }
}

/// Every index tuple in `[0, d_0) × … × [0, d_{m−1})`, last index fastest.
pub fn index_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Runs `f` on every item in parallel and keeps the first failure in item
/// order, so the result does not depend on scheduling.
pub fn sweep<T: Sync>(
    check: impl Into<String>,
    kind: CheckKind,
    items: &[T],
    f: impl Fn(&T) -> Option<String> + Sync,
) -> CheckRecord {
    let witness = items.par_iter().find_map_first(&f);
    CheckRecord::new(check, kind, items.len() as u64, witness)
}

/// [`sweep`] over all basis index tuples of the given dimensions.
pub fn sweep_basis(
    check: impl Into<String>,
    kind: CheckKind,
    dims: &[usize],
    f: impl Fn(&[usize]) -> Option<String> + Sync,
) -> CheckRecord {
    let tuples = index_tuples(dims);
    sweep(check, kind, &tuples, |t| f(t))
}

/// Witness text for a failed equation.
pub fn mismatch(vars: &str, lhs: &[u32], rhs: &[u32]) -> String {
    format!("{vars}: lhs={lhs:?} rhs={rhs:?}")
}

/// `Some(witness)` when `lhs != rhs`.
pub fn expect_eq(vars: impl FnOnce() -> String, lhs: &[u32], rhs: &[u32]) -> Option<String> {
    (lhs != rhs).then(|| mismatch(&vars(), lhs, rhs))
}
