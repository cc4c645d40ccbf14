//! Gate actions as sparse graph switchings.
//!
//! The canonical semantics is conjugation of the signless Laplacian:
//! `L(G') = U L(G) U^dagger`, followed by extraction of the canonical
//! graph. For a gate on the last qubit the conjugation factors into
//! independent 2x2 blocks over the module partition `C_j = {2j, 2j+1}`,
//! so the whole switch costs O(edges + loops) and never materializes a
//! dense matrix. Gates at other positions travel by a bit-swap relabeling
//! to the last slot and back. X, Y, Z and CNOT additionally have pure
//! signed-permutation paths with no arithmetic on 2x2 blocks at all.

use std::collections::HashMap;

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{QGraph, PRUNE_TOL};
use crate::operators::{bit_swap, cnot_map, relabel_graph, OneQubitGate};

/// The partition of `{0, ..., 2^n - 1}` into modules `C_j = {2j, 2j+1}`
/// and, for `n >= 2`, supermodules of four consecutive vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModulePartition {
    n_qubits: u8,
}

impl ModulePartition {
    pub fn new(n_qubits: u8) -> Self {
        Self { n_qubits }
    }

    pub fn num_modules(&self) -> u64 {
        1u64 << (self.n_qubits - 1)
    }

    pub fn module_of(&self, v: u32) -> u32 {
        v / 2
    }

    pub fn module_members(&self, j: u32) -> [u32; 2] {
        [2 * j, 2 * j + 1]
    }

    /// Supermodule index; only meaningful for `n >= 2`.
    pub fn supermodule_of(&self, v: u32) -> u32 {
        v / 4
    }

    pub fn num_supermodules(&self) -> u64 {
        1u64 << (self.n_qubits - 2)
    }
}

/// Blue/red coloring of the vertex set by the last bit: blue vertices are
/// even, red are odd, and `v` and `v ^ 1` are conjugate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexColoring {
    n_qubits: u8,
}

impl VertexColoring {
    pub fn new(n_qubits: u8) -> Self {
        Self { n_qubits }
    }

    pub fn is_blue(&self, v: u32) -> bool {
        v.is_multiple_of(2)
    }

    pub fn conjugate(&self, v: u32) -> u32 {
        v ^ 1
    }
}

/// The three Pauli gates that act as signed vertex permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliGate {
    X,
    Y,
    Z,
}

impl From<PauliGate> for OneQubitGate {
    fn from(p: PauliGate) -> Self {
        match p {
            PauliGate::X => OneQubitGate::X,
            PauliGate::Y => OneQubitGate::Y,
            PauliGate::Z => OneQubitGate::Z,
        }
    }
}

/// Switch `g` by a one-qubit gate on the last qubit.
///
/// Each 2x2 module block of the sparse Laplacian is conjugated by the
/// gate matrix, with contributions to the same target entry summed before
/// pruning; the canonical graph is then read back off the blocks.
pub fn switch_last(g: &QGraph, gate: OneQubitGate) -> QGraph {
    let u = gate.matrix();
    let mut blocks: HashMap<(u32, u32), Matrix2<Complex64>> = HashMap::new();
    let mut diag: HashMap<u32, f64> = HashMap::new();

    for ((a, b), w) in g.edges() {
        let (mi, mj) = (a / 2, b / 2);
        if mi == mj {
            let e = blocks.entry((mi, mi)).or_insert_with(Matrix2::zeros);
            e[(0, 1)] += w;
            e[(1, 0)] += w.conj();
        } else {
            let e = blocks.entry((mi, mj)).or_insert_with(Matrix2::zeros);
            e[((a % 2) as usize, (b % 2) as usize)] += w;
        }
        *diag.entry(a).or_default() += w.norm();
        *diag.entry(b).or_default() += w.norm();
    }
    for (v, l) in g.loops() {
        *diag.entry(v).or_default() += 2.0 * l;
    }
    for (&v, &d) in &diag {
        let e = blocks.entry((v / 2, v / 2)).or_insert_with(Matrix2::zeros);
        e[((v % 2) as usize, (v % 2) as usize)] += Complex64::new(d, 0.0);
    }

    let mut out = QGraph::empty(g.n_qubits()).expect("order already validated");
    let mut new_diag: HashMap<u32, f64> = HashMap::new();
    for (&(mi, mj), block) in &blocks {
        let conj = u * block * u.adjoint();
        if mi == mj {
            new_diag.insert(2 * mi, conj[(0, 0)].re);
            new_diag.insert(2 * mi + 1, conj[(1, 1)].re);
            out.set_edge(2 * mi, 2 * mi + 1, conj[(0, 1)])
                .expect("vertices in range");
        } else {
            for r in 0..2u32 {
                for c in 0..2u32 {
                    let w = conj[(r as usize, c as usize)];
                    if w.norm() >= PRUNE_TOL {
                        out.set_edge(2 * mi + r, 2 * mj + c, w)
                            .expect("vertices in range");
                    }
                }
            }
        }
    }

    let mut row_sum: HashMap<u32, f64> = HashMap::new();
    for ((a, b), w) in out.edges() {
        *row_sum.entry(a).or_default() += w.norm();
        *row_sum.entry(b).or_default() += w.norm();
    }
    for (v, d) in new_diag {
        let l = (d - row_sum.get(&v).copied().unwrap_or(0.0)) / 2.0;
        out.set_loop(v, l).expect("vertex in range");
    }
    out
}

/// Switch by a one-qubit gate at position `k`: relabel by the bit swap
/// `(k, n)`, switch the last qubit, relabel back.
pub fn switch_at(g: &QGraph, k: u8, gate: OneQubitGate) -> Result<QGraph> {
    let n = g.n_qubits();
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { k, n });
    }
    if k == n {
        return Ok(switch_last(g, gate));
    }
    let p = bit_swap(n, k)?;
    let swapped = relabel_graph(g, &p)?;
    let switched = switch_last(&swapped, gate);
    relabel_graph(&switched, &p)
}

/// Signed-permutation path for X, Y, Z at position `k`: pure edge
/// relocation and sign flips, no 2x2 arithmetic.
///
/// `X_k` relabels `v -> v XOR bit(k)`; `Z_k` negates every edge whose
/// endpoints differ in bit `k` and fixes all loops; `Y_k` does both.
pub fn fast_switch_pauli(g: &QGraph, k: u8, gate: PauliGate) -> Result<QGraph> {
    let n = g.n_qubits();
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { k, n });
    }
    let mask = 1u32 << (n - k);
    let negate_split = |u: u32, v: u32, w: Complex64| {
        if (u ^ v) & mask != 0 {
            -w
        } else {
            w
        }
    };
    Ok(match gate {
        PauliGate::X => g.relabeled(|v| v ^ mask),
        PauliGate::Z => g.map_edge_weights(negate_split),
        PauliGate::Y => g.relabeled(|v| v ^ mask).map_edge_weights(negate_split),
    })
}

/// Switch by the CNOT on the last two qubits.
///
/// The conjugating matrix is the permutation swapping vertices congruent
/// to 2 and 3 mod 4, so the switch is a single vertex relabeling. This
/// one relabeling reproduces the per-supermodule rewrite rules: loops and
/// edges inside each module `C_{2i}` are untouched, loops `4i+2 <-> 4i+3`
/// swap, and edges into a module `C_{2j+1}` have their odd endpoint
/// toggled.
pub fn switch_cnot(g: &QGraph) -> Result<QGraph> {
    if g.n_qubits() < 2 {
        return Err(Error::NeedsTwoQubits);
    }
    Ok(g.relabeled(cnot_map))
}
