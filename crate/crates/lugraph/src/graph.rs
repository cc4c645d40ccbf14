//! Weighted graphs of order 2^n and their signless Laplacian / density views.
//!
//! A state is carried by a [`QGraph`]: a sparse undirected graph on the
//! vertex set `{0, 1}^n` with Hermitian edge weights and real loop weights.
//! Its signless Laplacian `L = D + A`, normalized by its trace, is the
//! density matrix of the represented n-qubit state.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Weights with modulus below this are dropped from the graph.
pub const PRUNE_TOL: f64 = 1e-12;
/// Default tolerance for numeric comparisons between states.
pub const COMPARE_TOL: f64 = 1e-10;
/// Largest supported qubit count (graph order 2^24).
pub const MAX_QUBITS: u8 = 24;
/// Largest qubit count for which dense 2^n x 2^n matrices are built.
pub const DENSE_CAP: u8 = 10;

/// Which weight class a graph belongs to.
///
/// `PaperReal` is the admissible class: real edge weights, nonnegative
/// loops. Switching by a general unitary can leave it; such results are
/// flagged `HermitianExtended` and remain valid states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    PaperReal,
    HermitianExtended,
}

/// Sparse weighted graph of order `2^n_qubits`.
///
/// Edge weights are stored once per unordered pair in the `(min, max)`
/// orientation; the reverse orientation is the complex conjugate. Loop
/// weights are real. All mutating operations prune weights below
/// [`PRUNE_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct QGraph {
    n_qubits: u8,
    edges: HashMap<(u32, u32), Complex64>,
    loops: HashMap<u32, f64>,
    complex_edges: usize,
    negative_loops: usize,
}

impl QGraph {
    /// Graph with `2^n_qubits` vertices and no edges or loops.
    pub fn empty(n_qubits: u8) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::InvalidOrder {
                n: n_qubits as usize,
                cap: MAX_QUBITS as usize,
            });
        }
        Ok(Self {
            n_qubits,
            edges: HashMap::new(),
            loops: HashMap::new(),
            complex_edges: 0,
            negative_loops: 0,
        })
    }

    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    /// Number of vertices, `2^n_qubits`.
    pub fn order(&self) -> u64 {
        1u64 << self.n_qubits
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_loops(&self) -> usize {
        self.loops.len()
    }

    pub fn admissibility(&self) -> Admissibility {
        if self.complex_edges == 0 && self.negative_loops == 0 {
            Admissibility::PaperReal
        } else {
            Admissibility::HermitianExtended
        }
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as u64) < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                v: v as u64,
                order: self.order(),
            })
        }
    }

    /// Set the weight of edge `{u, v}`. A weight of modulus below
    /// [`PRUNE_TOL`] removes the edge.
    pub fn set_edge(&mut self, u: u32, v: u32, w: Complex64) -> Result<()> {
        if u == v {
            return Err(Error::UseSetLoop { v: u as u64 });
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (a, b, w) = if u < v { (u, v, w) } else { (v, u, w.conj()) };
        if let Some(old) = self.edges.remove(&(a, b)) {
            if old.im.abs() > PRUNE_TOL {
                self.complex_edges -= 1;
            }
        }
        if w.norm() >= PRUNE_TOL {
            if w.im.abs() > PRUNE_TOL {
                self.complex_edges += 1;
            }
            self.edges.insert((a, b), w);
        }
        Ok(())
    }

    /// Set the loop weight at `v`. `|weight| < PRUNE_TOL` removes the loop.
    pub fn set_loop(&mut self, v: u32, weight: f64) -> Result<()> {
        self.check_vertex(v)?;
        if let Some(old) = self.loops.remove(&v) {
            if old < -PRUNE_TOL {
                self.negative_loops -= 1;
            }
        }
        if weight.abs() >= PRUNE_TOL {
            if weight < -PRUNE_TOL {
                self.negative_loops += 1;
            }
            self.loops.insert(v, weight);
        }
        Ok(())
    }

    /// Builder form of [`set_edge`](Self::set_edge).
    pub fn with_edge(mut self, u: u32, v: u32, w: Complex64) -> Result<Self> {
        self.set_edge(u, v, w)?;
        Ok(self)
    }

    /// Builder form of [`set_loop`](Self::set_loop).
    pub fn with_loop(mut self, v: u32, weight: f64) -> Result<Self> {
        self.set_loop(v, weight)?;
        Ok(self)
    }

    /// Weight of edge `{u, v}` as seen from the `(u, v)` orientation.
    pub fn edge_weight(&self, u: u32, v: u32) -> Option<Complex64> {
        if u < v {
            self.edges.get(&(u, v)).copied()
        } else {
            self.edges.get(&(v, u)).map(|w| w.conj())
        }
    }

    pub fn loop_weight(&self, v: u32) -> Option<f64> {
        self.loops.get(&v).copied()
    }

    /// Stored edges in the `(min, max)` orientation, arbitrary order.
    pub fn edges(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.edges.iter().map(|(&k, &w)| (k, w))
    }

    pub fn loops(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.loops.iter().map(|(&v, &w)| (v, w))
    }

    /// Stored edges sorted by `(u, v)`, for deterministic output.
    pub fn sorted_edges(&self) -> Vec<((u32, u32), Complex64)> {
        let mut v: Vec<_> = self.edges().collect();
        v.sort_by_key(|&(k, _)| k);
        v
    }

    /// Loops sorted by vertex.
    pub fn sorted_loops(&self) -> Vec<(u32, f64)> {
        let mut v: Vec<_> = self.loops().collect();
        v.sort_by_key(|&(k, _)| k);
        v
    }

    /// Vertex degree: sum of incident edge-weight moduli, plus the loop
    /// modulus once.
    pub fn degree(&self, v: u32) -> Result<f64> {
        self.check_vertex(v)?;
        let mut d = 0.0;
        for (&(a, b), w) in &self.edges {
            if a == v || b == v {
                d += w.norm();
            }
        }
        d += self.loops.get(&v).map_or(0.0, |l| l.abs());
        Ok(d)
    }

    /// Trace of the signless Laplacian, computed sparsely.
    pub fn laplacian_trace(&self) -> f64 {
        let edge_sum: f64 = self.edges.values().map(|w| w.norm()).sum();
        let loop_sum: f64 = self.loops.values().sum();
        2.0 * edge_sum + 2.0 * loop_sum
    }

    /// Dense signless Laplacian `L = D + A`.
    ///
    /// Diagonal entries are `sum_{u != v} |w_{vu}| + 2 l_v`, which agrees
    /// with the degree-plus-loop convention for nonnegative loops and keeps
    /// [`QGraph::from_laplacian`] a two-sided inverse otherwise.
    pub fn signless_laplacian(&self) -> SignlessLaplacian {
        let dim = self.order() as usize;
        let mut m = DMatrix::<Complex64>::zeros(dim, dim);
        for (&(u, v), &w) in &self.edges {
            let (u, v) = (u as usize, v as usize);
            m[(u, v)] = w;
            m[(v, u)] = w.conj();
            m[(u, u)] += Complex64::new(w.norm(), 0.0);
            m[(v, v)] += Complex64::new(w.norm(), 0.0);
        }
        for (&v, &l) in &self.loops {
            m[(v as usize, v as usize)] += Complex64::new(2.0 * l, 0.0);
        }
        SignlessLaplacian {
            n_qubits: self.n_qubits,
            matrix: m,
        }
    }

    /// Dense adjacency matrix, with loop weights on the diagonal.
    pub fn adjacency(&self) -> DMatrix<Complex64> {
        let dim = self.order() as usize;
        let mut m = DMatrix::<Complex64>::zeros(dim, dim);
        for (&(u, v), &w) in &self.edges {
            m[(u as usize, v as usize)] = w;
            m[(v as usize, u as usize)] = w.conj();
        }
        for (&v, &l) in &self.loops {
            m[(v as usize, v as usize)] = Complex64::new(l, 0.0);
        }
        m
    }

    /// The represented state, `rho = L / tr L`.
    pub fn density(&self) -> Result<DensityMatrix> {
        let tr = self.laplacian_trace();
        if tr <= PRUNE_TOL {
            return Err(Error::ZeroTrace);
        }
        let mut m = self.signless_laplacian().matrix;
        m.unscale_mut(tr);
        Ok(DensityMatrix {
            n_qubits: self.n_qubits,
            matrix: m,
        })
    }

    /// Recover the canonical graph whose signless Laplacian is `m`.
    ///
    /// Off-diagonal entries become edges; the loop at `v` absorbs the
    /// diagonal excess over the incident edge moduli, halved.
    pub fn from_laplacian(m: &DMatrix<Complex64>, tol: f64) -> Result<Self> {
        let dim = m.nrows();
        if m.ncols() != dim {
            return Err(Error::DimensionMismatch);
        }
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidOrder {
                n: dim,
                cap: 1 << MAX_QUBITS,
            });
        }
        let mut max_dev = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                max_dev = max_dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if max_dev > tol {
            return Err(Error::NotHermitian { max_dev });
        }
        let n_qubits = dim.trailing_zeros() as u8;
        let mut g = QGraph::empty(n_qubits)?;
        let mut row_sum = vec![0.0f64; dim];
        for u in 0..dim {
            for v in (u + 1)..dim {
                let w = m[(u, v)];
                if w.norm() >= PRUNE_TOL {
                    g.set_edge(u as u32, v as u32, w)?;
                    row_sum[u] += w.norm();
                    row_sum[v] += w.norm();
                }
            }
        }
        for v in 0..dim {
            let l = (m[(v, v)].re - row_sum[v]) / 2.0;
            g.set_loop(v as u32, l)?;
        }
        Ok(g)
    }

    /// Pure-state test by graph shape: a single edge and no loops, or a
    /// single loop and no edges.
    pub fn is_pure(&self) -> Result<bool> {
        if self.edges.is_empty() && self.loops.is_empty() {
            return Err(Error::ZeroTrace);
        }
        Ok((self.edges.len() == 1 && self.loops.is_empty())
            || (self.edges.is_empty() && self.loops.len() == 1))
    }

    /// True when both graphs represent the same density matrix within
    /// `tol` (max-norm). Graph weights are only defined up to a global
    /// positive scale, so this is the meaningful notion of equality.
    pub fn equivalent(&self, other: &Self, tol: f64) -> Result<bool> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::OrderMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let a = self.density()?;
        let b = other.density()?;
        Ok(a.max_diff(&b) <= tol)
    }

    /// Rebuild the graph with every vertex sent through `map` (a bijection
    /// on the vertex set). Edge weights whose stored orientation flips are
    /// conjugated, so the relabeled Laplacian is the permuted original.
    pub(crate) fn relabeled(&self, map: impl Fn(u32) -> u32) -> Self {
        let mut edges = HashMap::with_capacity(self.edges.len());
        for (&(u, v), &w) in &self.edges {
            let (pu, pv) = (map(u), map(v));
            if pu < pv {
                edges.insert((pu, pv), w);
            } else {
                edges.insert((pv, pu), w.conj());
            }
        }
        let loops = self.loops.iter().map(|(&v, &l)| (map(v), l)).collect();
        Self {
            n_qubits: self.n_qubits,
            edges,
            loops,
            complex_edges: self.complex_edges,
            negative_loops: self.negative_loops,
        }
    }

    /// Rebuild with every edge weight sent through `f` (keyed by the stored
    /// orientation); loops are untouched. Weights falling below the pruning
    /// tolerance are dropped and the admissibility counters are recomputed.
    pub(crate) fn map_edge_weights(&self, f: impl Fn(u32, u32, Complex64) -> Complex64) -> Self {
        let mut edges = HashMap::with_capacity(self.edges.len());
        let mut complex_edges = 0;
        for (&(u, v), &w) in &self.edges {
            let w = f(u, v, w);
            if w.norm() >= PRUNE_TOL {
                if w.im.abs() > PRUNE_TOL {
                    complex_edges += 1;
                }
                edges.insert((u, v), w);
            }
        }
        Self {
            n_qubits: self.n_qubits,
            edges,
            loops: self.loops.clone(),
            complex_edges,
            negative_loops: self.negative_loops,
        }
    }

    fn check_dense_cap(&self) -> Result<()> {
        if self.n_qubits > DENSE_CAP {
            Err(Error::TooLarge {
                n: self.n_qubits,
                cap: DENSE_CAP,
            })
        } else {
            Ok(())
        }
    }

    /// Eigenvalues of the adjacency matrix, ascending.
    pub fn adjacency_spectrum(&self) -> Result<Vec<f64>> {
        self.check_dense_cap()?;
        Ok(hermitian_eigenvalues(&self.adjacency()))
    }

    /// Eigenvalues of the signless Laplacian, ascending.
    pub fn laplacian_spectrum(&self) -> Result<Vec<f64>> {
        self.check_dense_cap()?;
        Ok(hermitian_eigenvalues(&self.signless_laplacian().matrix))
    }
}

/// Dense signless Laplacian `L(G) = D(G) + A(G)` of a [`QGraph`].
#[derive(Debug, Clone, PartialEq)]
pub struct SignlessLaplacian {
    n_qubits: u8,
    matrix: DMatrix<Complex64>,
}

impl SignlessLaplacian {
    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    pub fn order(&self) -> usize {
        1usize << self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }
}

/// Trace-1 Hermitian positive-semidefinite matrix: the state view of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: u8,
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Wrap a dense matrix, checking the trace and Hermiticity invariants.
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        let dim = m.nrows();
        if m.ncols() != dim || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch);
        }
        let tr: Complex64 = m.diagonal().iter().sum();
        if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::ZeroTrace);
        }
        let mut max_dev = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                max_dev = max_dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if max_dev > 1e-12 {
            return Err(Error::NotHermitian { max_dev });
        }
        Ok(Self {
            n_qubits: dim.trailing_zeros() as u8,
            matrix: m,
        })
    }

    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    pub fn order(&self) -> usize {
        1usize << self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// `tr(rho^2)`; equals 1 exactly for pure states.
    pub fn purity(&self) -> f64 {
        // tr(M M) = sum_ij M_ij M_ji = sum_ij |M_ij|^2 for Hermitian M.
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Entrywise max-norm distance to another density matrix.
    pub fn max_diff(&self, other: &Self) -> f64 {
        if self.matrix.nrows() != other.matrix.nrows() {
            return f64::INFINITY;
        }
        self.matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let eig = m.clone().symmetric_eigenvalues();
    let mut vals: Vec<f64> = eig.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}
