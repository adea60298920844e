//! Per-trial reports: human-readable lines and stable one-line JSON objects.

use serde_json::{json, Value};

/// Outcome of one verification trial.
pub struct Report {
    pub theorem: &'static str,
    pub trial: usize,
    pub seed: u64,
    pub trunc: usize,
    pub holds: bool,
    pub instance: Value,
    pub residual: Value,
}

impl Report {
    /// Serializes the report as a single JSON line. `serde_json` objects keep
    /// their keys sorted, so identical configurations produce byte-identical
    /// output.
    pub fn to_json_line(&self) -> String {
        json!({
            "theorem": self.theorem,
            "instance": self.instance,
            "holds": self.holds,
            "residual": self.residual,
            "trunc": self.trunc,
            "seed": self.seed,
            "trial": self.trial,
        })
        .to_string()
    }

    pub fn to_text_line(&self) -> String {
        format!(
            "trial {:>4}: {} ... {}",
            self.trial,
            self.theorem,
            if self.holds { "PASS" } else { "FAIL" }
        )
    }

    /// Prints the report in the requested mode. Failing trials always emit
    /// the JSON form as well, so a falsifying instance can be replayed.
    pub fn emit(&self, json_mode: bool) {
        if json_mode {
            println!("{}", self.to_json_line());
        } else {
            println!("{}", self.to_text_line());
            if !self.holds {
                println!("{}", self.to_json_line());
            }
        }
    }
}
