//! Structural invariants of the graph representation, mostly as property
//! tests over randomly generated admissible graphs.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;

use lugraph::graph::hermitian_eigenvalues;
use lugraph::io::GraphFile;
use lugraph::QGraph;

/// Strategy: a small admissible graph described by raw edge and loop lists.
fn graph_strategy() -> impl Strategy<Value = QGraph> {
    (1u8..=4)
        .prop_flat_map(|n| {
            let order = 1u32 << n;
            let edge = (0..order, 0..order, -1.0f64..1.0);
            let lp = (0..order, 0.0f64..1.0);
            (
                Just(n),
                prop::collection::vec(edge, 0..12),
                prop::collection::vec(lp, 0..6),
            )
        })
        .prop_map(|(n, edges, loops)| {
            let mut g = QGraph::empty(n).unwrap();
            for (u, v, w) in edges {
                if u != v {
                    g.set_edge(u, v, Complex64::new(w, 0.0)).unwrap();
                }
            }
            for (v, l) in loops {
                g.set_loop(v, l).unwrap();
            }
            g
        })
}

fn graphs_exactly_close(a: &QGraph, b: &QGraph, tol: f64) -> bool {
    if a.num_edges() != b.num_edges() || a.num_loops() != b.num_loops() {
        return false;
    }
    a.edges()
        .all(|((u, v), w)| b.edge_weight(u, v).is_some_and(|x| (x - w).norm() <= tol))
        && a.loops()
            .all(|(v, l)| b.loop_weight(v).is_some_and(|x| (x - l).abs() <= tol))
}

proptest! {
    #[test]
    fn laplacian_extraction_round_trips(g in graph_strategy()) {
        let l = g.signless_laplacian();
        let back = QGraph::from_laplacian(l.matrix(), 1e-10).unwrap();
        prop_assert!(graphs_exactly_close(&g, &back, 1e-12));
    }

    #[test]
    fn admissible_laplacians_are_psd(g in graph_strategy()) {
        let eigs = hermitian_eigenvalues(g.signless_laplacian().matrix());
        prop_assert!(eigs[0] >= -1e-10, "min eigenvalue {}", eigs[0]);
    }

    #[test]
    fn trace_formula(g in graph_strategy()) {
        let edge_sum: f64 = g.edges().map(|(_, w)| w.norm()).sum();
        let loop_sum: f64 = g.loops().map(|(_, l)| l).sum();
        let want = 2.0 * edge_sum + 2.0 * loop_sum;
        prop_assert!((g.signless_laplacian().trace() - want).abs() <= 1e-12);
    }

    #[test]
    fn graph_file_round_trips(g in graph_strategy()) {
        let file = GraphFile::from_graph(&g, None);
        let back = GraphFile::parse(&file.to_json()).unwrap().to_graph().unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn purity_agrees_with_graph_shape() {
    let mut rng = common::rng(0x5eed_0001);
    for case in 0..500 {
        let n = 1 + (case % 4) as u8;
        let g = common::random_paper_real(&mut rng, n, case % 7, case % 3);
        let by_shape = g.is_pure().unwrap();
        let by_trace = (g.density().unwrap().purity() - 1.0).abs() <= 1e-10;
        assert_eq!(by_shape, by_trace, "case {case}: {g:?}");
    }
}
