//! Machine-readable pass/fail records. Every checker returns one of these;
//! they serialize to a line-oriented `key: value` text block and to a JSON
//! object with the fields
//! `{verdict, degree, rank, target, witnesses, seed, elapsed_ms}`.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub degree: Option<u32>,
    pub rank: Option<usize>,
    pub target: Option<usize>,
    pub witnesses: Vec<String>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(verdict: Verdict) -> Self {
        Certificate {
            verdict,
            degree: None,
            rank: None,
            target: None,
            witnesses: Vec::new(),
            seed: None,
            elapsed_ms: 0,
        }
    }

    pub fn pass() -> Self {
        Certificate::new(Verdict::Pass)
    }

    pub fn fail() -> Self {
        Certificate::new(Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn with_rank(mut self, rank: usize, target: usize) -> Self {
        self.rank = Some(rank);
        self.target = Some(target);
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn with_witnesses(mut self, ws: Vec<String>) -> Self {
        self.witnesses.extend(ws);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn timed(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// The line-oriented text form; one `key: value` pair per line,
    /// witnesses one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verdict: {}\n", self.verdict));
        if let Some(d) = self.degree {
            out.push_str(&format!("degree: {}\n", d));
        }
        if let Some(r) = self.rank {
            out.push_str(&format!("rank: {}\n", r));
        }
        if let Some(t) = self.target {
            out.push_str(&format!("target: {}\n", t));
        }
        for w in &self.witnesses {
            out.push_str(&format!("witness: {}\n", w));
        }
        if let Some(s) = self.seed {
            out.push_str(&format!("seed: {}\n", s));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let c = Certificate::pass()
            .with_degree(4)
            .with_rank(35, 35)
            .with_witness("none")
            .with_seed(7);
        let s = c.to_json();
        assert_eq!(Certificate::from_json(&s).unwrap(), c);
    }

    #[test]
    fn text_block_has_all_keys() {
        let c = Certificate::fail().with_degree(2).with_rank(6, 10);
        let t = c.to_text();
        assert!(t.contains("verdict: fail"));
        assert!(t.contains("rank: 6"));
        assert!(t.contains("target: 10"));
    }
}
