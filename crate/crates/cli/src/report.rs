//! Machine-readable report emitted by every subcommand.
//!
//! One self-describing JSON document per invocation in structured mode;
//! the text mode prints the same information as plain lines. Reports
//! are deterministic given inputs, bounds, and seed, except for the
//! timing field.

use serde_json::{json, Map, Value};

use freebraid::invariants::{Certificate, Fingerprint};
use freebraid::normal::BlockWord;
use freebraid::rewrite::Witness;
use freebraid::word::GroupContext;

pub struct Report {
    pub command: &'static str,
    pub context: Option<GroupContext>,
    pub inputs: Vec<String>,
    pub outputs: Value,
    pub verdict: Option<String>,
    /// Human-readable summary lines for text mode.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            context: None,
            inputs: Vec::new(),
            outputs: Value::Null,
            verdict: None,
            lines: Vec::new(),
        }
    }

    pub fn to_json(&self, bounds: &Value, timing_ms: f64) -> Value {
        json!({
            "command": self.command,
            "context": self.context.map(context_json),
            "inputs": self.inputs,
            "bounds": bounds,
            "outputs": self.outputs,
            "verdict": self.verdict,
            "timing_ms": timing_ms,
        })
    }
}

pub fn context_json(context: GroupContext) -> Value {
    json!({ "n": context.n(), "kind": context.kind().name() })
}

pub fn witness_json(witness: &Witness) -> Value {
    Value::Array(
        witness
            .steps()
            .iter()
            .map(|step| {
                json!({
                    "position": step.position(),
                    "tag": step.rule().tag(),
                    "direction": step.rule().direction().name(),
                })
            })
            .collect(),
    )
}

pub fn blocks_json(blocks: &BlockWord) -> Value {
    Value::Array(
        blocks
            .blocks()
            .iter()
            .map(|b| json!([b.i().get(), b.j().get(), b.parity().bit()]))
            .collect(),
    )
}

pub fn fingerprint_json(fp: &Fingerprint) -> Value {
    let mut profiles = Map::new();
    for ((i, j), bits) in fp.pair_profiles() {
        profiles.insert(
            format!("{i},{j}"),
            Value::Array(bits.iter().map(|b| json!(b.bit())).collect()),
        );
    }
    json!({
        "odd_generators": fp
            .odd_generators()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>(),
        "h_membership": fp.even_dot_membership(),
        "pair_profiles": Value::Object(profiles),
    })
}

pub fn certificate_json(certificate: &Certificate) -> Value {
    json!({
        "strand": certificate.strand,
        "dotted_image": certificate.dotted_image.to_string(),
        "parity_image": certificate.parity_image.to_string(),
        "reduced_image": certificate.reduced_image.to_string(),
        "separating": certificate.separating,
    })
}
