//! One-qubit gates, their dense local embeddings, the last-pair CNOT, and
//! the bit-transposition vertex relabelings used to transport a gate from
//! the last qubit to an arbitrary position.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::QGraph;

/// A single-qubit gate.
///
/// `General` is the full one-parameter-family unitary
/// `[[e^{i phi1} cos t, e^{i phi2} sin t], [-e^{-i phi2} sin t, e^{-i phi1} cos t]]`;
/// the named gates are its special cases up to a global phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OneQubitGate {
    I,
    X,
    Y,
    Z,
    H,
    General { theta: f64, phi1: f64, phi2: f64 },
}

impl OneQubitGate {
    /// The 2x2 unitary matrix of the gate.
    pub fn matrix(&self) -> Matrix2<Complex64> {
        let z = |re: f64, im: f64| Complex64::new(re, im);
        match *self {
            OneQubitGate::I => Matrix2::new(z(1.0, 0.0), z(0.0, 0.0), z(0.0, 0.0), z(1.0, 0.0)),
            OneQubitGate::X => Matrix2::new(z(0.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)),
            OneQubitGate::Y => Matrix2::new(z(0.0, 0.0), z(0.0, -1.0), z(0.0, 1.0), z(0.0, 0.0)),
            OneQubitGate::Z => Matrix2::new(z(1.0, 0.0), z(0.0, 0.0), z(0.0, 0.0), z(-1.0, 0.0)),
            OneQubitGate::H => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                Matrix2::new(z(s, 0.0), z(s, 0.0), z(s, 0.0), z(-s, 0.0))
            }
            OneQubitGate::General { theta, phi1, phi2 } => {
                let (ct, st) = (theta.cos(), theta.sin());
                let e1 = Complex64::from_polar(1.0, phi1);
                let e2 = Complex64::from_polar(1.0, phi2);
                Matrix2::new(e1 * ct, e2 * st, -e2.conj() * st, e1.conj() * ct)
            }
        }
    }
}

/// A vertex relabeling of `{0,1}^n` that transposes two bit positions.
///
/// Positions are 1-based with position 1 the most significant bit under
/// the lexicographic vertex labeling. Every such permutation is an
/// involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitPermutation {
    n_qubits: u8,
    shift_a: u32,
    shift_b: u32,
}

impl QubitPermutation {
    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    pub fn is_identity(&self) -> bool {
        self.shift_a == self.shift_b
    }

    /// Image of vertex `v` under the bit transposition.
    pub fn map(&self, v: u32) -> u32 {
        let a = (v >> self.shift_a) & 1;
        let b = (v >> self.shift_b) & 1;
        if a == b {
            v
        } else {
            v ^ (1 << self.shift_a) ^ (1 << self.shift_b)
        }
    }
}

/// Permutation exchanging bit positions `k` and `n`; identity when `k = n`.
pub fn bit_swap(n: u8, k: u8) -> Result<QubitPermutation> {
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { k, n });
    }
    Ok(QubitPermutation {
        n_qubits: n,
        shift_a: (n - k) as u32,
        shift_b: 0,
    })
}

/// Move every edge and loop of `g` along the permutation, conjugating
/// edge weights whose stored orientation flips.
pub fn relabel_graph(g: &QGraph, p: &QubitPermutation) -> Result<QGraph> {
    if g.n_qubits() != p.n_qubits {
        return Err(Error::OrderMismatch {
            left: g.n_qubits(),
            right: p.n_qubits,
        });
    }
    Ok(g.relabeled(|v| p.map(v)))
}

/// Dense `2^n x 2^n` matrix `I x ... x U x ... x I` with `U` in slot `k`.
pub fn embed_at(n: u8, k: u8, gate: OneQubitGate) -> Result<DMatrix<Complex64>> {
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { k, n });
    }
    let u = gate.matrix();
    let dim = 1usize << n;
    let mask = 1usize << (n - k);
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for r in 0..dim {
        let br = usize::from(r & mask != 0);
        m[(r, r & !mask)] = u[(br, 0)];
        m[(r, r | mask)] = u[(br, 1)];
    }
    Ok(m)
}

/// Index image of a basis vector under the last-pair CNOT: vertices
/// congruent to 2 and 3 mod 4 swap, all others are fixed.
pub fn cnot_map(v: u32) -> u32 {
    match v % 4 {
        2 => v + 1,
        3 => v - 1,
        _ => v,
    }
}

/// Dense `I x ... x I x CNOT` on `n >= 2` qubits.
pub fn cnot_full(n: u8) -> Result<DMatrix<Complex64>> {
    if n < 2 {
        return Err(Error::NeedsTwoQubits);
    }
    let dim = 1usize << n;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for v in 0..dim {
        m[(cnot_map(v as u32) as usize, v)] = Complex64::new(1.0, 0.0);
    }
    Ok(m)
}

/// One element of a circuit: a one-qubit gate at a position, or the CNOT
/// acting on the last two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateOp {
    OneQubit { gate: OneQubitGate, position: u8 },
    CNotLastPair,
}

impl GateOp {
    /// Check the op is applicable to an `n`-qubit state.
    pub fn validate(&self, n: u8) -> Result<()> {
        match *self {
            GateOp::OneQubit { position, .. } => {
                if position == 0 || position > n {
                    Err(Error::PositionOutOfRange { k: position, n })
                } else {
                    Ok(())
                }
            }
            GateOp::CNotLastPair => {
                if n < 2 {
                    Err(Error::NeedsTwoQubits)
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Dense matrix of the op on `n` qubits (oracle side).
    pub fn dense_matrix(&self, n: u8) -> Result<DMatrix<Complex64>> {
        match *self {
            GateOp::OneQubit { gate, position } => embed_at(n, position, gate),
            GateOp::CNotLastPair => cnot_full(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn max_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    fn scaled(m: &Matrix2<Complex64>, z: Complex64) -> Matrix2<Complex64> {
        m.map(|e| e * z)
    }

    #[test]
    fn general_gate_special_cases() {
        let i = Complex64::new(0.0, 1.0);
        // theta = pi/2, phi2 = pi/2 gives iX
        let u = OneQubitGate::General {
            theta: FRAC_PI_2,
            phi1: 0.0,
            phi2: FRAC_PI_2,
        }
        .matrix();
        assert!((u - scaled(&OneQubitGate::X.matrix(), i)).norm() < 1e-14);
        // theta = 0, phi1 = pi/2 gives iZ
        let u = OneQubitGate::General {
            theta: 0.0,
            phi1: FRAC_PI_2,
            phi2: 0.0,
        }
        .matrix();
        assert!((u - scaled(&OneQubitGate::Z.matrix(), i)).norm() < 1e-14);
        // theta = pi/2, phi2 = 0 gives iY
        let u = OneQubitGate::General {
            theta: FRAC_PI_2,
            phi1: 0.0,
            phi2: 0.0,
        }
        .matrix();
        assert!((u - scaled(&OneQubitGate::Y.matrix(), i)).norm() < 1e-14);
        // theta = pi/4, phi1 = phi2 = pi/2 gives iH
        let u = OneQubitGate::General {
            theta: PI / 4.0,
            phi1: FRAC_PI_2,
            phi2: FRAC_PI_2,
        }
        .matrix();
        assert!((u - scaled(&OneQubitGate::H.matrix(), i)).norm() < 1e-14);
    }

    #[test]
    fn gate_matrices_are_unitary() {
        let gates = [
            OneQubitGate::I,
            OneQubitGate::X,
            OneQubitGate::Y,
            OneQubitGate::Z,
            OneQubitGate::H,
            OneQubitGate::General {
                theta: 0.7,
                phi1: -1.3,
                phi2: 2.1,
            },
        ];
        for g in gates {
            let u = g.matrix();
            let prod = u * u.adjoint();
            assert!((prod - Matrix2::identity()).norm() < 1e-12, "{g:?}");
        }
    }

    #[test]
    fn embed_structure() {
        let x = embed_at(1, 1, OneQubitGate::X).unwrap();
        assert_eq!(x[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(x[(0, 0)], Complex64::new(0.0, 0.0));

        // slot n: block-diagonal diag(U, U)
        let u = OneQubitGate::General {
            theta: 0.4,
            phi1: 0.2,
            phi2: -0.9,
        };
        let m = embed_at(2, 2, u).unwrap();
        let u2 = u.matrix();
        for b in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(m[(2 * b + i, 2 * b + j)], u2[(i, j)]);
                }
            }
        }

        // slot 1 with X: permutation |0b> <-> |1b>
        let m = embed_at(2, 1, OneQubitGate::X).unwrap();
        for (r, c) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
            assert_eq!(m[(r, c)], Complex64::new(1.0, 0.0));
        }
        assert!(matches!(
            embed_at(2, 3, OneQubitGate::X),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn embedded_gates_are_unitary() {
        for n in 1..=8u8 {
            for k in 1..=n {
                let m = embed_at(n, k, OneQubitGate::H).unwrap();
                let dim = 1usize << n;
                let prod = &m * m.adjoint();
                let id = DMatrix::<Complex64>::identity(dim, dim);
                assert!(max_diff(&prod, &id) < 1e-12);
            }
        }
    }

    #[test]
    fn cnot_matrix() {
        let m = cnot_full(2).unwrap();
        let want = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[(i, j)], Complex64::new(want[i][j], 0.0));
            }
        }
        // n = 3: diag(CNOT, CNOT)
        let m3 = cnot_full(3).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m3[(i, j)], m[(i, j)]);
                assert_eq!(m3[(4 + i, 4 + j)], m[(i, j)]);
                assert_eq!(m3[(i, 4 + j)], Complex64::new(0.0, 0.0));
            }
        }
        // involution
        let sq = &m3 * &m3;
        assert!(max_diff(&sq, &DMatrix::identity(8, 8)) < 1e-15);
        assert!(matches!(cnot_full(1), Err(Error::NeedsTwoQubits)));
    }

    #[test]
    fn bit_swap_enumerations() {
        let p = bit_swap(2, 1).unwrap();
        assert_eq!(
            (0..4).map(|v| p.map(v)).collect::<Vec<_>>(),
            vec![0, 2, 1, 3]
        );

        let p = bit_swap(3, 1).unwrap();
        assert_eq!(
            (0..8).map(|v| p.map(v)).collect::<Vec<_>>(),
            vec![0, 4, 2, 6, 1, 5, 3, 7]
        );

        let p = bit_swap(3, 3).unwrap();
        assert!(p.is_identity());
        assert!((0..8).all(|v| p.map(v) == v));

        // involution
        let p = bit_swap(4, 2).unwrap();
        assert!((0..16).all(|v| p.map(p.map(v)) == v));
        assert!(matches!(
            bit_swap(2, 0),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn relabel_moves_edges_and_loops() {
        let p = bit_swap(2, 1).unwrap();
        let g = QGraph::empty(2).unwrap().with_loop(2, 0.5).unwrap();
        let h = relabel_graph(&g, &p).unwrap();
        assert_eq!(h.loop_weight(1), Some(0.5));

        let g = QGraph::empty(2)
            .unwrap()
            .with_edge(0, 2, Complex64::new(-1.0, 0.0))
            .unwrap();
        let h = relabel_graph(&g, &p).unwrap();
        assert_eq!(h.edge_weight(0, 1), Some(Complex64::new(-1.0, 0.0)));

        let id = bit_swap(2, 2).unwrap();
        assert_eq!(relabel_graph(&g, &id).unwrap(), g);
        // double relabel restores the graph exactly
        assert_eq!(relabel_graph(&h, &p).unwrap(), g);

        let small = QGraph::empty(1).unwrap();
        assert!(matches!(
            relabel_graph(&small, &p),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn transported_embedding_identity() {
        // embed_at(n, k, g) = P_{k,n} embed_at(n, n, g) P_{k,n}
        for n in 1..=6u8 {
            for k in 1..=n {
                let p = bit_swap(n, k).unwrap();
                let dim = 1usize << n;
                let mut pm = DMatrix::<Complex64>::zeros(dim, dim);
                for v in 0..dim {
                    pm[(p.map(v as u32) as usize, v)] = Complex64::new(1.0, 0.0);
                }
                for g in [
                    OneQubitGate::X,
                    OneQubitGate::Y,
                    OneQubitGate::Z,
                    OneQubitGate::H,
                ] {
                    let lhs = embed_at(n, k, g).unwrap();
                    let rhs = &pm * embed_at(n, n, g).unwrap() * &pm;
                    assert!(max_diff(&lhs, &rhs) < 1e-12);
                }
            }
        }
    }
}
