//! Gate sequences over graphs and canonical state constructors.

use crate::error::{Error, Result};
use crate::graph::QGraph;
use crate::operators::{GateOp, OneQubitGate};
use crate::switching::{fast_switch_pauli, switch_at, switch_cnot, PauliGate};

/// An ordered gate sequence over a fixed number of qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: u8,
    ops: Vec<GateOp>,
}

impl Circuit {
    /// Build a circuit, validating every op against the qubit count.
    pub fn new(n_qubits: u8, ops: Vec<GateOp>) -> Result<Self> {
        for op in &ops {
            op.validate(n_qubits)?;
        }
        Ok(Self { n_qubits, ops })
    }

    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }
}

/// Parse a bit string like `"10"` to the vertex index it labels.
pub fn bits_to_vertex(bits: &str) -> Result<u32> {
    let mut v = 0u32;
    for ch in bits.chars() {
        v = (v << 1)
            | match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::InvalidBitString(bits.to_string())),
            };
    }
    Ok(v)
}

/// Graph of the computational basis state `|bits>`: one loop of weight 1/2
/// at the vertex the bit string labels.
pub fn basis_state_graph(n: u8, bits: &str) -> Result<QGraph> {
    if bits.len() != n as usize {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            got: bits.len(),
        });
    }
    let v = bits_to_vertex(bits)?;
    QGraph::empty(n)?.with_loop(v, 0.5)
}

/// Apply one gate op, dispatching to the cheapest switching path:
/// signed permutation for X/Y/Z, blockwise conjugation for the rest.
pub fn apply_op(g: &QGraph, op: GateOp) -> Result<QGraph> {
    match op {
        GateOp::OneQubit { gate, position } => match gate {
            OneQubitGate::X => fast_switch_pauli(g, position, PauliGate::X),
            OneQubitGate::Y => fast_switch_pauli(g, position, PauliGate::Y),
            OneQubitGate::Z => fast_switch_pauli(g, position, PauliGate::Z),
            _ => switch_at(g, position, gate),
        },
        GateOp::CNotLastPair => switch_cnot(g),
    }
}

/// Run a circuit, returning every intermediate graph. The first element is
/// the input, the last the output; length is `ops + 1`.
pub fn run(g: &QGraph, circuit: &Circuit) -> Result<Vec<QGraph>> {
    if g.n_qubits() != circuit.n_qubits {
        return Err(Error::OrderMismatch {
            left: g.n_qubits(),
            right: circuit.n_qubits,
        });
    }
    let mut stages = Vec::with_capacity(circuit.ops.len() + 1);
    stages.push(g.clone());
    for &op in &circuit.ops {
        let next = apply_op(stages.last().expect("nonempty"), op)?;
        stages.push(next);
    }
    Ok(stages)
}

/// The Hadamard-then-CNOT Bell chain on the basis state `|which>`,
/// returning all intermediate graphs.
pub fn bell_demo(which: &str) -> Result<Vec<QGraph>> {
    let start = basis_state_graph(2, which)?;
    let circuit = Circuit::new(
        2,
        vec![
            GateOp::OneQubit {
                gate: OneQubitGate::H,
                position: 1,
            },
            GateOp::CNotLastPair,
        ],
    )?;
    run(&start, &circuit)
}
