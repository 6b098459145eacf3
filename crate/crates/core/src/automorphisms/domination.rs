//! Domination between vertices, the domination digraph and its height function.

use crate::automorphisms::{AutError, Permutation};
use crate::graph::SimplicialGraph;

/// `w` dominates `v` when lk(v) ⊆ st(w). Distinct vertices only.
pub fn dominates(g: &SimplicialGraph, w: usize, v: usize) -> Result<bool, AutError> {
    g.check_vertex(w)?;
    g.check_vertex(v)?;
    if v == w {
        return Err(AutError::SameVertex(v));
    }
    Ok(dominates_unchecked(g, w, v))
}

pub(crate) fn dominates_unchecked(g: &SimplicialGraph, w: usize, v: usize) -> bool {
    g.neighbors(v).all(|u| u == w || g.has_edge(u, w))
}

/// Arc `v → w` whenever `w` dominates `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationDigraph {
    /// `dominators[v]`: vertices dominating `v`, ascending.
    dominators: Vec<Vec<usize>>,
    /// `dominated[w]`: vertices dominated by `w`, ascending.
    dominated: Vec<Vec<usize>>,
}

impl DominationDigraph {
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dominators
            .iter()
            .enumerate()
            .flat_map(|(v, ws)| ws.iter().map(move |&w| (v, w)))
    }

    pub fn has_arc(&self, v: usize, w: usize) -> bool {
        self.dominators[v].binary_search(&w).is_ok()
    }

    pub fn dominators_of(&self, v: usize) -> &[usize] {
        &self.dominators[v]
    }

    pub fn dominated_by(&self, w: usize) -> &[usize] {
        &self.dominated[w]
    }

    pub fn arc_count(&self) -> usize {
        self.dominators.iter().map(Vec::len).sum()
    }
}

pub fn domination_digraph(g: &SimplicialGraph) -> DominationDigraph {
    let n = g.vertex_count();
    let mut dominators = vec![Vec::new(); n];
    let mut dominated = vec![Vec::new(); n];
    for v in 0..n {
        for w in 0..n {
            if v != w && dominates_unchecked(g, w, v) {
                dominators[v].push(w);
                dominated[w].push(v);
            }
        }
    }
    DominationDigraph {
        dominators,
        dominated,
    }
}

/// A pair of vertices dominating each other, if Λ(Γ) has any cycle.
///
/// Domination is transitive, so any directed cycle collapses to such a pair.
/// The lexicographically least pair is returned.
pub fn find_domination_cycle(g: &SimplicialGraph) -> Option<(usize, usize)> {
    let d = domination_digraph(g);
    mutual_pair(&d)
}

fn mutual_pair(d: &DominationDigraph) -> Option<(usize, usize)> {
    d.arcs().filter(|&(v, w)| v < w).find(|&(v, w)| d.has_arc(w, v))
}

/// The transposition of two mutually dominating vertices, which is always a
/// graph automorphism: every third vertex sees both or neither.
pub fn twin_swap_automorphism(g: &SimplicialGraph, v: usize, w: usize) -> Result<Permutation, AutError> {
    if !(dominates(g, v, w)? && dominates(g, w, v)?) {
        return Err(AutError::NotMutual(v, w));
    }
    let p = Permutation::transposition(g.vertex_count(), v, w);
    debug_assert!(p.is_automorphism_of(g));
    Ok(p)
}

/// λ(v) = 0 if `v` dominates nothing, otherwise one more than the largest
/// height among the vertices `v` dominates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightFunction(Vec<usize>);

impl HeightFunction {
    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Fails with the lexicographically least mutual pair when Λ(Γ) has a cycle.
pub fn heights(g: &SimplicialGraph) -> Result<HeightFunction, AutError> {
    let d = domination_digraph(g);
    if let Some((v, w)) = mutual_pair(&d) {
        return Err(AutError::DominationCycle(v, w));
    }
    // Process vertices once everything they dominate has a height.
    let n = g.vertex_count();
    let mut pending: Vec<usize> = (0..n).map(|v| d.dominated_by(v).len()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| pending[v] == 0).collect();
    let mut height = vec![0usize; n];
    let mut done = 0;
    while let Some(v) = ready.pop() {
        done += 1;
        height[v] = d
            .dominated_by(v)
            .iter()
            .map(|&u| height[u] + 1)
            .max()
            .unwrap_or(0);
        for &w in d.dominators_of(v) {
            pending[w] -= 1;
            if pending[w] == 0 {
                ready.push(w);
            }
        }
    }
    assert_eq!(done, n, "acyclic domination digraph expected after mutual-pair check");
    Ok(HeightFunction(height))
}

/// Vertices by non-increasing height, ties in canonical order.
pub fn height_order(g: &SimplicialGraph) -> Result<Vec<usize>, AutError> {
    let h = heights(g)?;
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.get(v)), v));
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> SimplicialGraph {
        SimplicialGraph::from_edges(n, edges).unwrap()
    }

    fn c5() -> SimplicialGraph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn domination_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(dominates(&p3, 1, 0), Ok(true));
        assert_eq!(dominates(&p3, 2, 0), Ok(true));
        assert_eq!(dominates(&p3, 0, 1), Ok(false));
        assert_eq!(dominates(&p3, 0, 0), Err(AutError::SameVertex(0)));
        let c5 = c5();
        for v in 0..5 {
            for w in (0..5).filter(|&w| w != v) {
                assert_eq!(dominates(&c5, w, v), Ok(false));
            }
        }
    }

    #[test]
    fn digraph_examples() {
        assert_eq!(domination_digraph(&c5()).arc_count(), 0);
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(domination_digraph(&k2).arcs().collect::<Vec<_>>(), [(0, 1), (1, 0)]);
        assert_eq!(domination_digraph(&g(1, &[])).arc_count(), 0);
    }

    #[test]
    fn cycles_and_twins() {
        let k2 = g(2, &[(0, 1)]);
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(find_domination_cycle(&k2), Some((0, 1)));
        assert_eq!(find_domination_cycle(&p3), Some((0, 2)));
        assert_eq!(find_domination_cycle(&c5()), None);
        assert_eq!(twin_swap_automorphism(&p3, 0, 2).unwrap().as_slice(), [2, 1, 0]);
        assert_eq!(twin_swap_automorphism(&k2, 0, 1).unwrap().as_slice(), [1, 0]);
        assert_eq!(twin_swap_automorphism(&p3, 0, 1), Err(AutError::NotMutual(0, 1)));
    }

    #[test]
    fn height_examples() {
        assert_eq!(heights(&c5()).unwrap().as_slice(), [0; 5]);
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(heights(&p3), Err(AutError::DominationCycle(0, 2)));
        assert_eq!(height_order(&c5()).unwrap(), [0, 1, 2, 3, 4]);
        assert_eq!(height_order(&g(1, &[])).unwrap(), [0]);
    }

    #[test]
    fn height_order_puts_dominators_first() {
        // a-b-c-d-e path plus f on c: a is dominated by c; e by c as well.
        // Build a graph where c dominates a and b, with no mutual pairs:
        // a: {x}, b: {y}, c: {x, y, z} and x, y, z attached so nothing else dominates.
        let labels = ["a", "b", "c", "x", "y", "z", "p", "q"];
        let edges = [(0, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 6), (4, 7), (5, 6), (6, 7)];
        let gr = SimplicialGraph::new(labels, &edges).unwrap();
        let d = domination_digraph(&gr);
        assert!(d.has_arc(0, 2) && d.has_arc(1, 2));
        let h = heights(&gr).unwrap();
        assert!(h.get(2) >= 1);
        assert_eq!(h.get(0), 0);
        let order = height_order(&gr).unwrap();
        let pos = |v: usize| order.iter().position(|&u| u == v).unwrap();
        assert!(pos(2) < pos(0) && pos(2) < pos(1));
    }
}
