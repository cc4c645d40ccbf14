//! Graph file serialization, gate-spec parsing and DOT export.
//!
//! The on-disk format is a single JSON document; edge and loop lists are
//! emitted sorted so identical graphs always serialize to identical bytes.
//! Both parsers here accept untrusted input and must never panic (see the
//! fuzz targets under `fuzz/`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::QGraph;
use crate::operators::{GateOp, OneQubitGate};

/// Errors from parsing graph files or gate specs.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] Error),
    #[error("bad gate spec {spec:?}: {reason}")]
    GateSpec { spec: String, reason: String },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EdgeRecord {
    pub u: u32,
    pub v: u32,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LoopRecord {
    pub v: u32,
    pub weight: f64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// JSON schema of a serialized graph.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphFile {
    pub n_qubits: u8,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub loops: Vec<LoopRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl GraphFile {
    /// Snapshot a graph, with edges sorted by `(u, v)` and loops by `v`.
    pub fn from_graph(g: &QGraph, label: Option<String>) -> Self {
        let edges = g
            .sorted_edges()
            .into_iter()
            .map(|((u, v), w)| EdgeRecord {
                u,
                v,
                re: w.re,
                im: w.im,
            })
            .collect();
        let loops = g
            .sorted_loops()
            .into_iter()
            .map(|(v, weight)| LoopRecord { v, weight })
            .collect();
        Self {
            n_qubits: g.n_qubits(),
            edges,
            loops,
            metadata: label.map(|label| Metadata { label: Some(label) }),
        }
    }

    /// Reconstruct the graph, validating indices and weights.
    pub fn to_graph(&self) -> Result<QGraph, IoError> {
        let mut g = QGraph::empty(self.n_qubits).map_err(IoError::Graph)?;
        for e in &self.edges {
            if !e.re.is_finite() || !e.im.is_finite() {
                return Err(IoError::GateSpec {
                    spec: format!("edge {{{}, {}}}", e.u, e.v),
                    reason: "non-finite weight".into(),
                });
            }
            g.set_edge(e.u, e.v, Complex64::new(e.re, e.im))?;
        }
        for l in &self.loops {
            if !l.weight.is_finite() {
                return Err(IoError::GateSpec {
                    spec: format!("loop at {}", l.v),
                    reason: "non-finite weight".into(),
                });
            }
            g.set_loop(l.v, l.weight)?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schema is serializable")
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Parse a comma-separated gate spec like `H@1,X@2,U(0.3,0,1.57)@2,CNOT`.
///
/// Token grammar: `NAME '@' POSITION` for `NAME` in X/Y/Z/H/I, `CNOT`, or
/// `U(theta,phi1,phi2) '@' POSITION` with angles in radians.
pub fn parse_gate_spec(spec: &str) -> Result<Vec<GateOp>, IoError> {
    let err = |token: &str, reason: &str| IoError::GateSpec {
        spec: token.to_string(),
        reason: reason.to_string(),
    };
    let mut ops = Vec::new();
    for token in split_top_level(spec) {
        let token = token.trim();
        if token.is_empty() {
            return Err(err(spec, "empty gate token"));
        }
        if token.eq_ignore_ascii_case("CNOT") {
            ops.push(GateOp::CNotLastPair);
            continue;
        }
        let (name, pos) = token
            .split_once('@')
            .ok_or_else(|| err(token, "expected NAME@POSITION or CNOT"))?;
        let position: u8 = pos
            .trim()
            .parse()
            .map_err(|_| err(token, "position must be a small positive integer"))?;
        let name = name.trim();
        let gate = match name {
            "X" => OneQubitGate::X,
            "Y" => OneQubitGate::Y,
            "Z" => OneQubitGate::Z,
            "H" => OneQubitGate::H,
            "I" => OneQubitGate::I,
            _ => {
                let args = name
                    .strip_prefix("U(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(|| err(token, "unknown gate name"))?;
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(err(token, "U takes exactly three angles"));
                }
                let mut angles = [0.0f64; 3];
                for (slot, part) in angles.iter_mut().zip(&parts) {
                    *slot = part
                        .trim()
                        .parse()
                        .map_err(|_| err(token, "angles must be decimal radians"))?;
                    if !slot.is_finite() {
                        return Err(err(token, "angles must be finite"));
                    }
                }
                OneQubitGate::General {
                    theta: angles[0],
                    phi1: angles[1],
                    phi2: angles[2],
                }
            }
        };
        ops.push(GateOp::OneQubit { gate, position });
    }
    Ok(ops)
}

/// Split on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Render a gate op back to spec syntax.
pub fn format_gate_op(op: &GateOp) -> String {
    match op {
        GateOp::CNotLastPair => "CNOT".to_string(),
        GateOp::OneQubit { gate, position } => {
            let name = match gate {
                OneQubitGate::I => "I".to_string(),
                OneQubitGate::X => "X".to_string(),
                OneQubitGate::Y => "Y".to_string(),
                OneQubitGate::Z => "Z".to_string(),
                OneQubitGate::H => "H".to_string(),
                OneQubitGate::General { theta, phi1, phi2 } => {
                    format!("U({theta},{phi1},{phi2})")
                }
            };
            format!("{name}@{position}")
        }
    }
}

fn format_weight(w: Complex64) -> String {
    if w.im == 0.0 {
        format!("{}", w.re)
    } else if w.im < 0.0 {
        format!("{}-{}i", w.re, -w.im)
    } else {
        format!("{}+{}i", w.re, w.im)
    }
}

/// Undirected DOT rendering: loops as self-edges, vertices labeled by
/// index and bit string, weights as edge labels.
pub fn to_dot(g: &QGraph) -> String {
    let n = g.n_qubits() as usize;
    let mut out = String::from("graph state {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v} [label=\"{v}|{v:0n$b}\"];\n"));
    }
    for (v, l) in g.sorted_loops() {
        out.push_str(&format!(
            "  {v} -- {v} [label=\"{}\"];\n",
            format_weight(Complex64::new(l, 0.0))
        ));
    }
    for ((u, v), w) in g.sorted_edges() {
        out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", format_weight(w)));
    }
    out.push_str("}\n");
    out
}
