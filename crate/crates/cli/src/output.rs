//! The experiment result envelope and its JSON / TSV renderings. JSON output
//! is deterministic byte-for-byte for a fixed seed: objects serialize with
//! sorted keys and no timing data is embedded (timings go to stderr).

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Computed,
}

#[derive(Debug, Serialize)]
pub struct ExperimentResult {
    pub schema: &'static str,
    pub experiment: &'static str,
    pub params: Value,
    /// The mathematical statement this experiment tests or computes.
    pub claim: String,
    pub seed: u64,
    pub status: Status,
    pub outcome: Value,
}

impl ExperimentResult {
    pub fn new(
        experiment: &'static str,
        params: Value,
        claim: impl Into<String>,
        seed: u64,
        status: Status,
        outcome: Value,
    ) -> ExperimentResult {
        ExperimentResult {
            schema: "spechtlab/1",
            experiment,
            params,
            claim: claim.into(),
            seed,
            status,
            outcome,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("result serializes");
        s.push('\n');
        s
    }

    /// Tab-separated rendering: scalar outcome fields as key/value lines,
    /// array-of-object fields as tables with a header row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("experiment\t{}\n", self.experiment));
        out.push_str(&format!("status\t{}\n", status_str(self.status)));
        if let Value::Object(map) = &self.outcome {
            for (key, val) in map {
                match val {
                    Value::Array(rows) if rows.iter().all(|r| r.is_object()) && !rows.is_empty() => {
                        out.push_str(&format!("[{}]\n", key));
                        let mut cols: Vec<String> = Vec::new();
                        for r in rows {
                            if let Value::Object(o) = r {
                                for c in o.keys() {
                                    if !cols.contains(c) {
                                        cols.push(c.clone());
                                    }
                                }
                            }
                        }
                        cols.sort();
                        out.push_str(&cols.join("\t"));
                        out.push('\n');
                        for r in rows {
                            if let Value::Object(o) = r {
                                let cells: Vec<String> = cols
                                    .iter()
                                    .map(|c| o.get(c).map(flat_value).unwrap_or_default())
                                    .collect();
                                out.push_str(&cells.join("\t"));
                                out.push('\n');
                            }
                        }
                    }
                    other => {
                        out.push_str(&format!("{}\t{}\n", key, flat_value(other)));
                    }
                }
            }
        } else {
            out.push_str(&format!("outcome\t{}\n", flat_value(&self.outcome)));
        }
        out
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Computed => "computed",
    }
}

fn flat_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
