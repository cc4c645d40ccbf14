use thiserror::Error;

/// Errors produced by graph construction, switching and oracle checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid qubit count {n} (must be in 1..={cap})")]
    InvalidOrder { n: usize, cap: usize },
    #[error("vertex {v} out of range for graph of order {order}")]
    InvalidVertex { v: u64, order: u64 },
    #[error("vertex {v}: use set_loop for self-edges")]
    UseSetLoop { v: u64 },
    #[error("graph has zero trace; no density matrix")]
    ZeroTrace,
    #[error("graph orders differ ({left} vs {right} qubits)")]
    OrderMismatch { left: u8, right: u8 },
    #[error("matrix is not Hermitian (max deviation {max_dev:.3e})")]
    NotHermitian { max_dev: f64 },
    #[error("gate position {k} out of range for {n} qubits")]
    PositionOutOfRange { k: u8, n: u8 },
    #[error("CNOT requires at least two qubits")]
    NeedsTwoQubits,
    #[error("{n} qubits exceeds the dense-matrix cap of {cap}")]
    TooLarge { n: u8, cap: u8 },
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix is not unitary (max deviation {max_dev:.3e})")]
    NotUnitary { max_dev: f64 },
    #[error("bit string length {got} does not match {expected} qubits")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid bit string {0:?} (only '0' and '1' allowed)")]
    InvalidBitString(String),
}

pub type Result<T> = std::result::Result<T, Error>;
