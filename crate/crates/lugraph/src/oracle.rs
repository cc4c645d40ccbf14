//! Dense-matrix ground truth for the switching operations.
//!
//! Everything here pays the full 2^n x 2^n cost on purpose: the point is
//! an independent conjugation path that the sparse switchings can be
//! checked against entry by entry.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::circuit::apply_op;
use crate::error::{Error, Result};
use crate::graph::{DensityMatrix, QGraph, DENSE_CAP};
use crate::operators::GateOp;

/// `U rho U^dagger`, checking dimensions and unitarity of `U` first.
pub fn conjugate_density(rho: &DensityMatrix, u: &DMatrix<Complex64>) -> Result<DensityMatrix> {
    let dim = rho.order();
    if u.nrows() != dim || u.ncols() != dim {
        return Err(Error::DimensionMismatch);
    }
    let prod = u * u.adjoint();
    let id = DMatrix::<Complex64>::identity(dim, dim);
    let max_dev = prod
        .iter()
        .zip(id.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if max_dev > 1e-10 {
        return Err(Error::NotUnitary { max_dev });
    }
    let m = u * rho.matrix() * u.adjoint();
    DensityMatrix::from_matrix(m)
}

/// Outcome of an oracle comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    Pass,
    Fail { max_abs_deviation: f64 },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn deviation(&self) -> f64 {
        match *self {
            Verdict::Pass => 0.0,
            Verdict::Fail { max_abs_deviation } => max_abs_deviation,
        }
    }
}

/// Compare the switched graph's density against direct conjugation of the
/// original density by the op's dense matrix.
pub fn verify_switch(g: &QGraph, op: GateOp, tol: f64) -> Result<Verdict> {
    let n = g.n_qubits();
    if n > DENSE_CAP {
        return Err(Error::TooLarge { n, cap: DENSE_CAP });
    }
    op.validate(n)?;
    let switched = apply_op(g, op)?;
    let expected = conjugate_density(&g.density()?, &op.dense_matrix(n)?)?;
    let dev = switched.density()?.max_diff(&expected);
    if dev <= tol {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail {
            max_abs_deviation: dev,
        })
    }
}

/// As [`verify_switch`], over a whole gate sequence.
pub fn verify_circuit(g: &QGraph, ops: &[GateOp], tol: f64) -> Result<Verdict> {
    let n = g.n_qubits();
    if n > DENSE_CAP {
        return Err(Error::TooLarge { n, cap: DENSE_CAP });
    }
    let mut switched = g.clone();
    let mut expected = g.density()?;
    let mut dev = 0.0f64;
    for &op in ops {
        op.validate(n)?;
        switched = apply_op(&switched, op)?;
        expected = conjugate_density(&expected, &op.dense_matrix(n)?)?;
        dev = dev.max(switched.density()?.max_diff(&expected));
    }
    if dev <= tol {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail {
            max_abs_deviation: dev,
        })
    }
}
