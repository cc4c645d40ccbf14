#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lugraph::operators::{GateOp, OneQubitGate};
use lugraph::QGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph in the admissible class: real edge weights (either sign),
/// nonnegative loops, nonzero trace.
pub fn random_paper_real(rng: &mut impl Rng, n: u8, edges: usize, loops: usize) -> QGraph {
    let order = 1u64 << n;
    let mut g = QGraph::empty(n).unwrap();
    for _ in 0..edges {
        let u = rng.gen_range(0..order) as u32;
        let v = rng.gen_range(0..order) as u32;
        if u == v {
            continue;
        }
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let w = sign * rng.gen_range(0.1..1.0);
        g.set_edge(u, v, Complex64::new(w, 0.0)).unwrap();
    }
    for _ in 0..loops {
        let v = rng.gen_range(0..order) as u32;
        g.set_loop(v, rng.gen_range(0.1..1.0)).unwrap();
    }
    if g.num_edges() == 0 && g.num_loops() == 0 {
        g.set_loop(0, 0.5).unwrap();
    }
    g
}

pub fn random_position(rng: &mut impl Rng, n: u8) -> u8 {
    rng.gen_range(1..=n)
}

pub fn random_general_gate(rng: &mut impl Rng) -> OneQubitGate {
    use std::f64::consts::PI;
    OneQubitGate::General {
        theta: rng.gen_range(-PI..PI),
        phi1: rng.gen_range(-PI..PI),
        phi2: rng.gen_range(-PI..PI),
    }
}

/// One random op from the full family: named gates, a random general
/// unitary, or (for n >= 2) the last-pair CNOT.
pub fn random_op(rng: &mut impl Rng, n: u8) -> GateOp {
    let family_count = if n >= 2 { 6 } else { 5 };
    match rng.gen_range(0..family_count) {
        0..=3 => {
            let gate = [
                OneQubitGate::X,
                OneQubitGate::Y,
                OneQubitGate::Z,
                OneQubitGate::H,
            ][rng.gen_range(0..4)];
            GateOp::OneQubit {
                gate,
                position: random_position(rng, n),
            }
        }
        4 => GateOp::OneQubit {
            gate: random_general_gate(rng),
            position: random_position(rng, n),
        },
        _ => GateOp::CNotLastPair,
    }
}

pub fn max_spectrum_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
