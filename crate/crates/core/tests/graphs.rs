mod common;

use common::strategies::graph;
use common::{component_count, component_labels};
use proptest::prelude::*;
use raag::catalog::{join, random_graph};
use raag::{factor_count, maximal_join_decomposition, parse_graph, SimplicialGraph, VertexSet};
use rand::SeedableRng;

fn same_graph(a: &SimplicialGraph, b: &SimplicialGraph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count() && (0..n).all(|u| (0..n).all(|v| u == v || a.has_edge(u, v) == b.has_edge(u, v)))
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        let c = g.complement();
        prop_assert!(same_graph(&c.complement(), &g));
        let n = g.vertex_count();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn text_round_trip(g in graph(9)) {
        let back = parse_graph(&g.to_text()).unwrap();
        prop_assert!(same_graph(&back, &g));
        let back = parse_graph(&g.complement().to_text()).unwrap();
        prop_assert!(same_graph(&back, &g.complement()));
    }

    #[test]
    fn components_match_bfs(g in graph(9)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.len(), component_count(&g));
        prop_assert_eq!(g.component_count(), comps.len());
        let labels = component_labels(&g);
        for c in &comps {
            let first = labels[c.min().unwrap()];
            prop_assert!(c.iter().all(|v| labels[v] == first));
        }
    }

    #[test]
    fn induced_on_everything_is_the_graph(g in graph(9)) {
        let full = g.induced_subgraph(&VertexSet::full(g.vertex_count())).unwrap();
        prop_assert!(same_graph(&full, &g));
    }

    #[test]
    fn join_decomposition_is_sound(g in graph(9)) {
        let d = maximal_join_decomposition(&g).unwrap();
        prop_assert_eq!(d.len(), factor_count(&g).unwrap());
        prop_assert_eq!(d.len(), component_count(&g.complement()));
        let mut seen = vec![false; g.vertex_count()];
        for (i, f) in d.factors().iter().enumerate() {
            for v in f.iter() {
                prop_assert!(!seen[v]);
                seen[v] = true;
                prop_assert_eq!(d.factor_of(v), Some(i));
            }
            // each factor is connected in the complement, so it does not split further
            let sub = g.induced_subgraph(f).unwrap();
            prop_assert_eq!(component_count(&sub.complement()), 1);
        }
        prop_assert!(seen.iter().all(|&s| s));
        for (i, a) in d.factors().iter().enumerate() {
            for b in &d.factors()[i + 1..] {
                prop_assert!(a.iter().all(|u| b.iter().all(|v| g.has_edge(u, v))));
            }
        }
    }

    #[test]
    fn join_of_two_graphs_adds_factors(a in graph(5), b in graph(5)) {
        let j = join(&a, &b);
        prop_assert_eq!(factor_count(&j).unwrap(), factor_count(&a).unwrap() + factor_count(&b).unwrap());
    }

    #[test]
    fn decomposition_is_relabelling_equivariant(g in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = SimplicialGraph::from_edges(n, &edges).unwrap();
        let mut moved: Vec<VertexSet> = maximal_join_decomposition(&g)
            .unwrap()
            .factors()
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect())
            .collect();
        moved.sort_by_key(|f: &VertexSet| f.min());
        let mut direct = maximal_join_decomposition(&h).unwrap().factors().to_vec();
        direct.sort_by_key(|f| f.min());
        prop_assert_eq!(moved, direct);
    }
}

#[test]
fn empty_graph_has_no_decomposition() {
    let g = SimplicialGraph::from_edges(0, &[]).unwrap();
    assert!(maximal_join_decomposition(&g).is_err());
    assert!(factor_count(&g).is_err());
}

#[test]
fn dense_random_graphs_agree_with_bfs() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for &(n, p) in &[(60, 0.9), (60, 0.97), (200, 0.99), (3000, 0.9995)] {
        let g = random_graph(n, p, &mut rng);
        assert_eq!(factor_count(&g).unwrap(), component_count(&g.complement()), "n={n} p={p}");
    }
}

#[test]
fn parse_errors() {
    for bad in ["v a\nv a\n", "e a b\n", "v a\ne a a\n", "v a\nv b\ne a c\n", "x a\n", "v a^b\n"] {
        assert!(parse_graph(bad).is_err(), "{bad:?}");
    }
    let g = parse_graph("# comment\n\nv a\nv b\ne a b\ne b a\n").unwrap();
    assert_eq!(g.edge_count(), 1);
}
