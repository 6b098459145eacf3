//! Small named graphs and random graph generation.

use rand::Rng;

use crate::graph::SimplicialGraph;

pub fn edgeless(n: usize) -> SimplicialGraph {
    SimplicialGraph::from_edges(n, &[]).expect("valid graph")
}

pub fn complete(n: usize) -> SimplicialGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    SimplicialGraph::from_edges(n, &edges).expect("valid graph")
}

pub fn path(n: usize) -> SimplicialGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    SimplicialGraph::from_edges(n, &edges).expect("valid graph")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> SimplicialGraph {
    assert!(n >= 3, "a simplicial cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    SimplicialGraph::from_edges(n, &edges).expect("valid graph")
}

/// Vertex 0 joined to `leaves` further vertices.
pub fn star(leaves: usize) -> SimplicialGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    SimplicialGraph::from_edges(leaves + 1, &edges).expect("valid graph")
}

/// A six-vertex graph with trivial automorphism group (the smallest order
/// at which such graphs exist).
pub fn asymmetric6() -> SimplicialGraph {
    SimplicialGraph::from_edges(6, &[(0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)]).expect("valid graph")
}

/// Erdős–Rényi graph G(n, p) labelled `a, b, ...`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimplicialGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimplicialGraph::from_edges(n, &edges).expect("valid graph")
}

/// Labelled graph on `n` vertices whose edges are the set bits of `mask`
/// over the pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn from_mask(n: usize, mask: u64) -> SimplicialGraph {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<_> = pairs
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    SimplicialGraph::from_edges(n, &edges).expect("valid graph")
}

/// Every labelled graph on `n` vertices (`n ≤ 8`).
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimplicialGraph> {
    assert!(n <= 8, "2^(n choose 2) labelled graphs is too many beyond 8 vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |m| from_mask(n, m))
}

/// Join of `a` and `b`: disjoint union plus every edge between them.
/// Labels of `b` are suffixed with `'` if they clash with labels of `a`.
pub fn join(a: &SimplicialGraph, b: &SimplicialGraph) -> SimplicialGraph {
    let na = a.vertex_count();
    let mut labels: Vec<String> = a.labels().map(|l| l.into_owned()).collect();
    for l in b.labels() {
        let mut l = l.into_owned();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + na, v + na)));
    for u in 0..na {
        for v in 0..b.vertex_count() {
            edges.push((u, na + v));
        }
    }
    SimplicialGraph::new(labels, &edges).expect("valid graph")
}
