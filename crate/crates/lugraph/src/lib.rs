//! Graph representation of n-qubit quantum states with gate actions as
//! sparse graph switching.
//!
//! A state is a weighted undirected graph of order `2^n` whose signless
//! Laplacian, normalized by its trace, is the density matrix. Local
//! unitary gates (X, Y, Z, H, general U(2)) and the last-pair CNOT act on
//! the graph directly, by relocating edges, flipping signs and conjugating
//! 2x2 module blocks, in time proportional to the number of edges rather
//! than the matrix dimension. A dense conjugation oracle adjudicates every
//! switching path.
//!
//! ```
//! use lugraph::circuit::bell_demo;
//!
//! // |10> -> H on qubit 1 -> CNOT: the (|00> - |11>)/sqrt(2) Bell state
//! let stages = bell_demo("10").unwrap();
//! let bell = stages.last().unwrap();
//! assert!(bell.is_pure().unwrap());
//! assert!(bell.edge_weight(0, 3).unwrap().re < 0.0);
//! ```

pub mod circuit;
pub mod error;
pub mod graph;
pub mod io;
pub mod operators;
pub mod oracle;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{Admissibility, DensityMatrix, QGraph, SignlessLaplacian};
pub use operators::{GateOp, OneQubitGate, QubitPermutation};
