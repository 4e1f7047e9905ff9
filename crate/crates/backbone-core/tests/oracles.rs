//! Oracle tests: every algorithmic kernel is checked against an
//! independent brute-force recomputation.

mod common;

use std::collections::HashSet;

use backbone_core::graph::Graph;
use backbone_core::metrics::{
    avg_local_clustering, betweenness, louvain_communities, spearman_rho,
};
use backbone_core::scoring::{
    jaccard_scores, quadrangle_counts, score_local_degree, score_local_similarity,
    triangle_counts,
};
use backbone_core::sparsify::filter_by_threshold;

use common::*;

#[test]
fn triangle_counts_match_brute_force() {
    for seed in 0..100 {
        let g = random_graph(seed, 12);
        let got = triangle_counts(&g);
        let want = brute_triangles(&g);
        for (a, b) in got.values().iter().zip(&want) {
            assert_eq!(*a, *b as f64, "seed {seed}");
        }
    }
}

#[test]
fn quadrangle_counts_match_brute_force() {
    for seed in 0..100 {
        let g = random_graph(seed, 12);
        let got = quadrangle_counts(&g);
        let want = brute_quadrangles(&g);
        for (a, b) in got.values().iter().zip(&want) {
            assert_eq!(*a, *b as f64, "seed {seed}");
        }
    }
}

#[test]
fn betweenness_matches_path_enumeration() {
    for seed in 0..60 {
        let g = random_graph(seed, 9);
        let got = betweenness(&g);
        let want = brute_betweenness(&g);
        for (a, b) in got.values.iter().zip(&want) {
            assert!((a - b).abs() < 1e-9, "seed {seed}: {a} vs {b}");
        }
    }
}

#[test]
fn clustering_matches_brute_force() {
    for seed in 0..60 {
        let g = random_graph(seed, 12);
        let got = avg_local_clustering(&g).unwrap();
        let want = brute_avg_clustering(&g);
        assert!((got - want).abs() < 1e-12, "seed {seed}");
    }
}

#[test]
fn louvain_matches_exhaustive_modularity_on_fixtures() {
    // bridged clique pair: all partitions of 8 nodes into at most 4 blocks
    let g = clique_pair_with_bridge();
    let (best_q, argmax) = exhaustive_best_partitions(&g, 4);
    let found = louvain_communities(&g);
    let q = brute_modularity(&g, found.assignment());
    assert!(
        (q - best_q).abs() < 1e-12,
        "louvain modularity {q} below optimum {best_q}"
    );
    assert!(argmax.iter().any(|a| a == found.assignment()));

    // a single clique admits no better split
    let k4 = complete(4);
    let (_, argmax) = exhaustive_best_partitions(&k4, 4);
    let found = louvain_communities(&k4);
    assert_eq!(found.block_count(), 1);
    assert!(argmax.iter().any(|a| a == found.assignment()));

    // disconnected triangles: full enumeration over all block counts
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
    let (best_q, argmax) = exhaustive_best_partitions(&two_triangles, 6);
    let found = louvain_communities(&two_triangles);
    assert_eq!(found.block_count(), 2);
    let q = brute_modularity(&two_triangles, found.assignment());
    assert!((q - best_q).abs() < 1e-12);
    assert!(argmax.iter().any(|a| a == found.assignment()));
}

#[test]
fn spearman_matches_independent_computation() {
    let cases: Vec<(Vec<f64>, Vec<f64>)> = vec![
        (vec![1.0, 2.0, 3.0, 4.0], vec![1.0, 2.0, 3.0, 3.0]),
        (vec![3.0, 1.0, 4.0, 1.0, 5.0], vec![2.0, 7.0, 1.0, 8.0, 2.0]),
        (vec![1.0, 1.0, 2.0, 2.0, 3.0], vec![5.0, 4.0, 4.0, 2.0, 1.0]),
    ];
    for (x, y) in cases {
        let got = spearman_rho(&x, &y).unwrap();
        let want = oracle_spearman(&x, &y);
        assert!((got - want).abs() < 1e-12, "{x:?} vs {y:?}: {got} {want}");
    }
    for seed in 0..20 {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<f64> = (0..40).map(|_| rng.gen_range(0..12) as f64).collect();
        let y: Vec<f64> = (0..40).map(|_| rng.gen_range(0..12) as f64).collect();
        if x.iter().all(|&v| v == x[0]) || y.iter().all(|&v| v == y[0]) {
            continue;
        }
        let got = spearman_rho(&x, &y).unwrap();
        let want = oracle_spearman(&x, &y);
        assert!((got - want).abs() < 1e-12, "seed {seed}");
    }
}

/// The keep rule "top floor(d^alpha) ranked edges per node" must coincide
/// with thresholding the rank scores at 1 - alpha, for both ranking keys.
#[test]
fn local_scores_reproduce_keep_rule_on_fixtures() {
    let fixtures = [
        clique_pair_with_bridge(),
        complete(5),
        path(7),
        Graph::from_edges(9, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8)]),
    ];
    for g in &fixtures {
        let ls = score_local_similarity(g);
        let ld = score_local_degree(g);
        for k in 0..=20u32 {
            let alpha = k as f64 / 20.0;
            let tau = 1.0 - alpha;

            let kept_ls: HashSet<usize> = filter_by_threshold(g, &ls, tau)
                .unwrap()
                .kept_edge_ids
                .into_iter()
                .collect();
            let want_ls = keep_rule_edges(g, k, 20, |u, v| oracle_jaccard(g, u, v));
            assert_eq!(kept_ls, want_ls, "ls alpha {alpha}");

            let kept_ld: HashSet<usize> = filter_by_threshold(g, &ld, tau)
                .unwrap()
                .kept_edge_ids
                .into_iter()
                .collect();
            let want_ld = keep_rule_edges(g, k, 20, |_, v| g.degree(v) as f64);
            assert_eq!(kept_ld, want_ld, "ld alpha {alpha}");
        }
    }
}

#[test]
fn jaccard_equals_triangle_based_formula() {
    for seed in 100..130 {
        let g = random_graph(seed, 12);
        let j = jaccard_scores(&g);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let want = oracle_jaccard(&g, u, v);
            assert!((j.values()[i] - want).abs() < 1e-15, "seed {seed}");
        }
    }
}
