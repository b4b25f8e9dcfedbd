//! Structured verification reports.

use std::collections::BTreeSet;
use std::fmt::{Display, Write};

use serde::Serialize;
use serde_json::Value;

/// Serializes any `Display` value as its string form.
pub fn ser_display<T: Display, S: serde::Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Supporting computation that cannot prove the claim (finite-field scans).
    EvidenceOnly,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok { Self::Pass } else { Self::Fail }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::EvidenceOnly => "evidence-only",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check_id: String,
    pub claim_ref: String,
    pub status: Status,
    pub details: Value,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn new(check_id: impl Into<String>, claim_ref: impl Into<String>, status: Status, details: impl Serialize) -> Self {
        Self {
            check_id: check_id.into(),
            claim_ref: claim_ref.into(),
            status,
            details: serde_json::to_value(details).expect("details serialize"),
            elapsed_ms: 0,
        }
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = ms;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub version: String,
    pub modeling_assumptions: Vec<String>,
    /// Whether `elapsed_ms` carries wall-clock times (otherwise all zero,
    /// keeping reports byte-identical between runs).
    pub timed: bool,
}

impl Header {
    pub fn new(timed: bool) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            modeling_assumptions: vec![
                "D5 lattice model: (sigma, eps) in S5 x <Galois> acts on Z^5 as eps * P_sigma".into(),
                "Sarkisov link arithmetic keeps solutions with a > 0 (H' is the pullback of an ample class)".into(),
                "singular lines are checked with the gradient of F tangent to s1 = 0".into(),
                "finite-field scans are evidence only".into(),
            ],
            timed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub header: Header,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// Sorts checks by id. Panics on duplicate ids, which would be a suite bug.
    pub fn new(header: Header, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let mut seen = BTreeSet::new();
        for c in &checks {
            assert!(seen.insert(c.check_id.clone()), "duplicate check id {}", c.check_id);
        }
        Self { header, checks }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn render_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.check_id.len()).max().unwrap_or(8).max(8);
        let mut out = String::new();
        writeln!(out, "{:<width$}  {:<13}  claim", "check", "status").ok();
        for c in &self.checks {
            writeln!(out, "{:<width$}  {:<13}  {}", c.check_id, c.status.as_str(), c.claim_ref).ok();
            if c.status == Status::Fail {
                if let Some(w) = c.details.get("witness") {
                    writeln!(out, "{:<width$}  {:<13}  witness: {}", "", "", w).ok();
                }
            }
        }
        writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} evidence-only",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::EvidenceOnly)
        )
        .ok();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_sorted_and_stable() {
        let checks = vec![
            Check::new("b.second", "claim b", Status::Pass, json!({"zeta": 1, "alpha": 2})),
            Check::new("a.first", "claim a", Status::EvidenceOnly, json!(null)),
        ];
        let r = VerificationReport::new(Header::new(false), checks);
        let s = r.to_json();
        assert!(s.find("a.first").unwrap() < s.find("b.second").unwrap());
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.contains("\"evidence-only\""));
        assert!(!r.failed());
        assert!(r.render_table().contains("2 checks: 1 pass, 0 fail, 1 evidence-only"));
    }

    #[test]
    #[should_panic(expected = "duplicate check id")]
    fn duplicate_ids_rejected() {
        let c = Check::new("x", "y", Status::Pass, json!(1));
        VerificationReport::new(Header::new(false), vec![c.clone(), c]);
    }
}
