//! Exact graph automorphism search: colour refinement followed by
//! backtracking over colour-respecting partial maps.

use std::collections::HashMap;
use std::fmt;

use crate::automorphisms::domination::find_domination_cycle;
use crate::graph::SimplicialGraph;

/// A permutation of vertex indices, `v ↦ image[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// Returns `None` unless `image` is a bijection of `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation(image))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] != v).collect()
    }

    pub fn is_automorphism_of(&self, g: &SimplicialGraph) -> bool {
        self.len() == g.vertex_count()
            && g.edges().all(|(u, v)| g.has_edge(self.0[u], self.0[v]))
    }

    pub fn display<'a>(&'a self, g: &'a SimplicialGraph) -> impl fmt::Display + 'a {
        PermDisplay { p: self, g }
    }
}

struct PermDisplay<'a> {
    p: &'a Permutation,
    g: &'a SimplicialGraph,
}

impl fmt::Display for PermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.p.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", self.g.label(i), self.g.label(v))?;
        }
        Ok(())
    }
}

/// Stable colouring by iterated neighbour-colour multisets, starting from
/// degrees. Colour ids are assigned by sorting signatures, so the colouring
/// is invariant under relabelling and every automorphism preserves it.
pub fn refine_colors(g: &SimplicialGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut colors = canonical_ids((0..n).map(|v| vec![neighbors[v].len()]).collect());
    loop {
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut sig: Vec<usize> = neighbors[v].iter().map(|&u| colors[u]).collect();
                sig.sort_unstable();
                sig.insert(0, colors[v]);
                sig
            })
            .collect();
        let next = canonical_ids(signatures);
        let classes = |c: &[usize]| c.iter().copied().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn canonical_ids(signatures: Vec<Vec<usize>>) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = signatures.iter().collect();
    distinct.sort();
    distinct.dedup();
    let ids: HashMap<&Vec<usize>, usize> = distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    signatures.iter().map(|s| ids[s]).collect()
}

/// Backtracking search for automorphisms extending a partial assignment.
pub(crate) struct Searcher<'g> {
    g: &'g SimplicialGraph,
    colors: Vec<usize>,
}

impl<'g> Searcher<'g> {
    pub fn new(g: &'g SimplicialGraph) -> Self {
        Searcher {
            g,
            colors: refine_colors(g),
        }
    }

    pub fn same_color(&self, u: usize, v: usize) -> bool {
        self.colors[u] == self.colors[v]
    }

    pub fn is_discrete(&self) -> bool {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.windows(2).all(|w| w[0] != w[1])
    }

    /// An automorphism sending each `fixed.0` to `fixed.1`, if any.
    pub fn extend(&self, fixed: &[(usize, usize)]) -> Option<Permutation> {
        let n = self.g.vertex_count();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for &(v, u) in fixed {
            if !self.same_color(v, u) || used[u] || (image[v] != usize::MAX && image[v] != u) {
                return None;
            }
            image[v] = u;
            used[u] = true;
        }
        let assigned: Vec<usize> = (0..n).filter(|&v| image[v] != usize::MAX).collect();
        for (i, &a) in assigned.iter().enumerate() {
            for &b in &assigned[..i] {
                if self.g.has_edge(a, b) != self.g.has_edge(image[a], image[b]) {
                    return None;
                }
            }
        }
        let order = self.visit_order(&image);
        let mut placed: Vec<usize> = assigned;
        if self.backtrack(&order, 0, &mut image, &mut used, &mut placed) {
            Some(Permutation(image))
        } else {
            None
        }
    }

    /// Unassigned vertices, adjacent-to-assigned first, small colour classes
    /// first, so constraints bite early.
    fn visit_order(&self, image: &[usize]) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut class_size = HashMap::new();
        for &c in &self.colors {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        let mut in_order: Vec<bool> = image.iter().map(|&x| x != usize::MAX).collect();
        let mut order = Vec::new();
        while in_order.iter().any(|&b| !b) {
            let next = (0..n)
                .filter(|&v| !in_order[v])
                .min_by_key(|&v| {
                    let touching = self.g.neighbors(v).filter(|&u| in_order[u]).count();
                    (std::cmp::Reverse(touching), class_size[&self.colors[v]], v)
                })
                .expect("unplaced vertex remains");
            in_order[next] = true;
            order.push(next);
        }
        order
    }

    fn backtrack(
        &self,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
        placed: &mut Vec<usize>,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        let n = self.g.vertex_count();
        for u in 0..n {
            if used[u] || !self.same_color(v, u) {
                continue;
            }
            if placed
                .iter()
                .any(|&p| self.g.has_edge(v, p) != self.g.has_edge(u, image[p]))
            {
                continue;
            }
            image[v] = u;
            used[u] = true;
            placed.push(v);
            if self.backtrack(order, depth + 1, image, used, placed) {
                return true;
            }
            placed.pop();
            used[u] = false;
            image[v] = usize::MAX;
        }
        false
    }
}

/// Some nontrivial automorphism of `g`, or `None` if `g` is asymmetric.
///
/// Mutually dominating twins give an immediate transposition; otherwise each
/// vertex is tried against every other vertex of its colour class.
pub fn nontrivial_graph_automorphism(g: &SimplicialGraph) -> Option<Permutation> {
    let n = g.vertex_count();
    if let Some((v, w)) = find_domination_cycle(g) {
        return Some(Permutation::transposition(n, v, w));
    }
    let s = Searcher::new(g);
    if s.is_discrete() {
        return None;
    }
    for v in 0..n {
        for u in (0..n).filter(|&u| u != v && s.same_color(u, v)) {
            if let Some(p) = s.extend(&[(v, u)]) {
                return Some(p);
            }
        }
    }
    None
}

/// A generating set of Aut(Γ), built along the stabiliser chain of the
/// base `0, 1, ..., n-1`.
///
/// At level `i` the group fixing `0..i` pointwise is generated by the
/// generators already found for deeper levels together with one
/// automorphism for each image of `i` outside their orbit.
pub fn automorphism_group_generators(g: &SimplicialGraph) -> Vec<Permutation> {
    let n = g.vertex_count();
    let s = Searcher::new(g);
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..n).rev() {
        let fixed: Vec<(usize, usize)> = (0..level).map(|v| (v, v)).collect();
        let mut orbit = orbit_of(level, &gens, n);
        for u in level + 1..n {
            if orbit[u] || !s.same_color(level, u) {
                continue;
            }
            let mut pairs = fixed.clone();
            pairs.push((level, u));
            if let Some(p) = s.extend(&pairs) {
                gens.push(p);
                orbit = orbit_of(level, &gens, n);
            }
        }
    }
    gens.reverse();
    gens
}

fn orbit_of(v: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for p in gens {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}
