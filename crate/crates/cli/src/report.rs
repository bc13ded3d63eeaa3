//! Suite reports: one record per check, a summary with totals, and stable
//! byte-for-byte JSON rendering for CI diffing.

use arrowcat_core::verdict::Verdict;
use serde::Serialize;

/// Outcome of one check. `negative` marks a negative control, which is
/// expected to fail; the suite passes only if it does.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub id: String,
    pub negative: bool,
    pub verdict: Verdict,
}

impl CheckRecord {
    pub fn positive(id: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            id: id.into(),
            negative: false,
            verdict,
        }
    }

    pub fn negative(id: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            id: id.into(),
            negative: true,
            verdict,
        }
    }

    /// A check is in its expected state when positive checks pass and
    /// negative controls fail.
    pub fn as_expected(&self) -> bool {
        self.verdict.is_pass() != self.negative
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub citation: String,
    pub seed: u64,
    pub samples: usize,
    pub max_dim: usize,
    pub records: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct CheckLine<'a> {
    record: &'static str,
    suite: &'a str,
    id: &'a str,
    /// The suite seed; together with the check id it pins the fixture.
    seed: u64,
    negative: bool,
    verdict: &'static str,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    law: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right: Option<String>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    record: &'static str,
    suite: &'a str,
    citation: &'a str,
    seed: u64,
    samples: usize,
    max_dim: usize,
    checks: usize,
    passed: usize,
    failed: usize,
    negative_controls: usize,
    unexpected: usize,
    status: &'static str,
}

impl SuiteReport {
    pub fn new(
        suite: impl Into<String>,
        citation: impl Into<String>,
        seed: u64,
        samples: usize,
        max_dim: usize,
        mut records: Vec<CheckRecord>,
    ) -> Self {
        // Deterministic order regardless of how runners produced them.
        records.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteReport {
            suite: suite.into(),
            citation: citation.into(),
            seed,
            samples,
            max_dim,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::as_expected)
    }

    pub fn unexpected(&self) -> Vec<&CheckRecord> {
        self.records.iter().filter(|r| !r.as_expected()).collect()
    }

    /// One JSON object per check, then one summary object, with stable field
    /// order. Identical runs produce identical bytes.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let failure = r.verdict.failure();
            let line = CheckLine {
                record: "check",
                suite: &self.suite,
                id: &r.id,
                seed: self.seed,
                negative: r.negative,
                verdict: if r.verdict.is_pass() { "pass" } else { "fail" },
                ok: r.as_expected(),
                law: failure.map(|f| f.law.as_str()),
                edge: failure.map(|f| f.edge.as_str()),
                left: failure.and_then(|f| f.left.as_ref().map(|w| w.to_string())),
                right: failure.and_then(|f| f.right.as_ref().map(|w| w.to_string())),
            };
            out.push_str(&serde_json::to_string(&line).expect("report serializes"));
            out.push('\n');
        }
        let summary = SummaryLine {
            record: "summary",
            suite: &self.suite,
            citation: &self.citation,
            seed: self.seed,
            samples: self.samples,
            max_dim: self.max_dim,
            checks: self.records.len(),
            passed: self.records.iter().filter(|r| r.verdict.is_pass()).count(),
            failed: self.records.iter().filter(|r| !r.verdict.is_pass()).count(),
            negative_controls: self.records.iter().filter(|r| r.negative).count(),
            unexpected: self.unexpected().len(),
            status: if self.passed() { "pass" } else { "fail" },
        };
        out.push_str(&serde_json::to_string(&summary).expect("report serializes"));
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match (r.negative, r.verdict.is_pass()) {
                (false, true) => "PASS ",
                (false, false) => "FAIL ",
                (true, false) => "XFAIL",
                (true, true) => "UPASS",
            };
            out.push_str(&format!("[{tag}] {}", r.id));
            if let Some(failure) = r.verdict.failure() {
                out.push_str(&format!("  ({} at {})", failure.law, failure.edge));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "suite {suite} [{citation}] seed={seed} samples={samples} max-dim={max_dim}: {total} checks, {passed} passed, {neg} negative controls, {unexpected} unexpected -> {status}\n",
            suite = self.suite,
            citation = self.citation,
            seed = self.seed,
            samples = self.samples,
            max_dim = self.max_dim,
            total = self.records.len(),
            passed = self.records.iter().filter(|r| r.verdict.is_pass()).count(),
            neg = self.records.iter().filter(|r| r.negative).count(),
            unexpected = self.unexpected().len(),
            status = if self.passed() { "PASS" } else { "FAIL" },
        ));
        out
    }
}
