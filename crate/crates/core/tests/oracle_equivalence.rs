//! Cross-checks of the optimized paths against the brute-force oracles.

use cliquetensor_core::{
    apply, enumerate_cliques, random_graph, spectral_radius, turan_graph, Graph, SolverOptions,
};
use cliquetensor_oracle::{brute_cliques, dense_apply, dense_clique_tensor, matrix_power_radius};

fn test_vectors(n: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    // deterministic, includes zeros and sign-free spread
    (0..count)
        .map(|k| {
            (0..n)
                .map(|i| {
                    let h = (seed            // simple LCG-ish mix, test-only
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(((k * n + i) as u64).wrapping_mul(1442695040888963407)))
                        >> 33;
                    if h.is_multiple_of(7) {
                        0.0
                    } else {
                        (h % 1000) as f64 / 500.0
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn dense_apply_matches_implicit_apply() {
    for n in 2..=8 {
        for r in 2..=4usize.min(n) {
            for seed in [1u64, 2, 3] {
                let g = random_graph(n, 0.6, seed * 100 + n as u64);
                let cs = enumerate_cliques(&g, r);
                let dense = dense_clique_tensor(&g, r);
                for x in test_vectors(n, 20, seed) {
                    let fast = apply(&cs, &x).unwrap();
                    let slow = dense_apply(&dense, &x);
                    for (a, b) in fast.iter().zip(&slow) {
                        assert!(
                            (a - b).abs() < 1e-12,
                            "n={n} r={r} seed={seed}: {a} vs {b}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn dense_apply_matches_on_structured_graphs() {
    for (g, rmax) in [
        (Graph::complete(6), 4usize),
        (turan_graph(8, 4).unwrap(), 4),
        (turan_graph(7, 2).unwrap(), 2),
    ] {
        for r in 2..=rmax {
            let cs = enumerate_cliques(&g, r);
            let dense = dense_clique_tensor(&g, r);
            for x in test_vectors(g.n(), 5, 9) {
                let fast = apply(&cs, &x).unwrap();
                let slow = dense_apply(&dense, &x);
                for (a, b) in fast.iter().zip(&slow) {
                    assert!((a - b).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn brute_cliques_matches_enumeration_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let n = 4 + (seed % 7) as usize; // 4..=10
        let g = random_graph(n, 0.3 + 0.2 * (seed % 3) as f64, seed);
        for r in 2..=5usize.min(n) {
            let fast = enumerate_cliques(&g, r);
            let slow = brute_cliques(&g, r);
            assert_eq!(fast.count(), slow.count(), "seed={seed} r={r}");
            let a: Vec<&[u32]> = fast.iter().collect();
            let b: Vec<&[u32]> = slow.iter().collect();
            assert_eq!(a, b, "seed={seed} r={r}");
            checked += 1;
        }
    }
    assert!(checked >= 200);
}

#[test]
fn brute_cliques_matches_enumeration_exhaustively_n5() {
    // every graph on 5 vertices, all clique sizes of interest
    for mask in 0u32..(1 << 10) {
        let g = graph_from_mask(5, mask as u64);
        for r in 2..=4 {
            let fast = enumerate_cliques(&g, r);
            let slow = brute_cliques(&g, r);
            assert_eq!(
                fast.iter().collect::<Vec<_>>(),
                slow.iter().collect::<Vec<_>>(),
                "mask={mask} r={r}"
            );
        }
    }
}

#[test]
fn matrix_radius_matches_tensor_engine_at_r2() {
    let opts = SolverOptions::default();
    for seed in 0..100u64 {
        let n = 3 + (seed % 10) as usize; // 3..=12
        let g = random_graph(n, 0.4 + 0.1 * (seed % 4) as f64, seed.wrapping_mul(17));
        let tensor = spectral_radius(&g, 2, &opts);
        let matrix = matrix_power_radius(&g);
        assert!(
            (tensor.rho - matrix).abs() < 1e-8,
            "seed={seed} n={n}: tensor {} vs matrix {}",
            tensor.rho,
            matrix
        );
    }
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e),
    )
}
