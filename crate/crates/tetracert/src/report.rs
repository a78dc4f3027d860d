//! The verification report: one record per certificate with witnesses,
//! serialized deterministically.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The outcome of one verified claim: an identifier, the claim in prose,
/// pass or fail, and the witnesses the computation produced along the way.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub witnesses: BTreeMap<String, serde_json::Value>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: String,
    pub certificates: Vec<Certificate>,
}

impl Report {
    pub fn new(seed: impl Into<String>, certificates: Vec<Certificate>) -> Self {
        Report { version: "1.0".into(), seed: seed.into(), certificates }
    }

    pub fn all_passed(&self) -> bool {
        self.certificates.iter().all(Certificate::passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Serialization with the timing fields zeroed, so two runs with the
    /// same seed produce byte-identical output.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut copy = self.clone();
        for cert in &mut copy.certificates {
            cert.elapsed_ms = 0;
        }
        copy.to_json().into_bytes()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verification report (seed: {})\n", self.seed));
        for cert in &self.certificates {
            let tag = match cert.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!(
                "  {tag} {id} ({ms} ms)\n      {anchor}\n",
                id = cert.id,
                ms = cert.elapsed_ms,
                anchor = cert.paper_anchor,
            ));
            if cert.status == Status::Fail {
                if let Some(fails) = cert.witnesses.get("failed_checks") {
                    out.push_str(&format!("      failed checks: {fails}\n"));
                }
            }
        }
        let passed = self.certificates.iter().filter(|c| c.passed()).count();
        let failed = self.certificates.len() - passed;
        out.push_str(&format!("summary: {passed} passed, {failed} failed\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut witnesses = BTreeMap::new();
        witnesses.insert("order".to_string(), serde_json::json!(16));
        Report::new(
            "primes-v1",
            vec![Certificate {
                id: "sample".into(),
                paper_anchor: "a sample claim".into(),
                status: Status::Pass,
                witnesses,
                elapsed_ms: 12,
            }],
        )
    }

    #[test]
    fn canonical_bytes_ignore_timing() {
        let a = sample();
        let mut b = sample();
        b.certificates[0].elapsed_ms = 999;
        assert_eq!(a.canonical_bytes(), b.canonical_bytes());
        assert_ne!(a.to_json(), b.to_json());
    }

    #[test]
    fn json_round_trip_keeps_the_schema_fields() {
        let r = sample();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(v.get("version").is_some());
        assert_eq!(v["seed"], "primes-v1");
        let c = &v["certificates"][0];
        for key in ["id", "paper_anchor", "status", "witnesses", "elapsed_ms"] {
            assert!(c.get(key).is_some(), "missing field {key}");
        }
        assert_eq!(c["status"], "pass");
        let back: Report = serde_json::from_value(v).unwrap();
        assert!(back.all_passed());
    }

    #[test]
    fn text_rendering_mentions_every_certificate() {
        let r = sample();
        let text = r.render_text();
        assert!(text.contains("PASS sample"));
        assert!(text.contains("summary: 1 passed, 0 failed"));
    }
}
