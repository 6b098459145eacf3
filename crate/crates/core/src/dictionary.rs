//! Exact solvers for graph problems that read as statements about A(Γ).
//!
//! | graph                       | group                                          |
//! |-----------------------------|------------------------------------------------|
//! | k-clique                    | Z^k spanned by vertex generators               |
//! | independent k-set           | free group F_k on vertex generators            |
//! | vertex cover                | generators meeting every commuting pair        |
//! | proper colouring            | partition into free-group-generating classes   |
//! | induced copy of Γ′          | A(Γ′) as a standard subgroup                   |
//! | adjacency-preserving map    | commuting pairs sent to distinct commuting pairs |
//!
//! Everything is backtracking or branch-and-bound; meant for graphs of a
//! few dozen vertices.

use std::fmt;

use crate::graph::{SimplicialGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Clique,
    Independence,
    VertexCover,
    Chromatic,
    InducedSubgraph,
    Homomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Number(usize),
    Decision(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertices(VertexSet),
    /// Colour of each vertex, colours numbered from 0.
    Coloring(Vec<usize>),
    /// Image of each source vertex.
    Map(Vec<usize>),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryAnswer {
    pub problem: Problem,
    pub answer: Answer,
    pub witness: Witness,
    pub raag_statement: String,
}

impl DictionaryAnswer {
    /// True for numeric answers and affirmative decisions.
    pub fn is_affirmative(&self) -> bool {
        !matches!(self.answer, Answer::Decision(false))
    }
}

impl fmt::Display for DictionaryAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raag_statement)
    }
}

fn set_text(g: &SimplicialGraph, s: &VertexSet) -> String {
    let labels: Vec<_> = s.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn map_text(source: &SimplicialGraph, target: &SimplicialGraph, map: &[usize]) -> String {
    let parts: Vec<String> = map
        .iter()
        .enumerate()
        .map(|(v, &u)| format!("{}->{}", source.label(v), target.label(u)))
        .collect();
    parts.join(" ")
}

pub fn is_clique(g: &SimplicialGraph, s: &VertexSet) -> bool {
    let v = s.as_slice();
    v.iter().enumerate().all(|(i, &a)| v[..i].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_independent(g: &SimplicialGraph, s: &VertexSet) -> bool {
    let v = s.as_slice();
    v.iter().enumerate().all(|(i, &a)| v[..i].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn is_vertex_cover(g: &SimplicialGraph, s: &VertexSet) -> bool {
    g.edges().all(|(u, v)| s.contains(u) || s.contains(v))
}

pub fn is_proper_coloring(g: &SimplicialGraph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// `map` is injective and `u ~ v` in `pattern` iff `map[u] ~ map[v]` in `host`.
pub fn is_induced_embedding(pattern: &SimplicialGraph, host: &SimplicialGraph, map: &[usize]) -> bool {
    let n = pattern.vertex_count();
    if map.len() != n || map.iter().any(|&x| x >= host.vertex_count()) {
        return false;
    }
    (0..n).all(|u| {
        (0..u).all(|v| map[u] != map[v] && pattern.has_edge(u, v) == host.has_edge(map[u], map[v]))
    })
}

/// Every edge of `source` goes to an edge of `target`.
pub fn is_homomorphism(source: &SimplicialGraph, target: &SimplicialGraph, map: &[usize]) -> bool {
    map.len() == source.vertex_count()
        && map.iter().all(|&x| x < target.vertex_count())
        && source.edges().all(|(u, v)| target.has_edge(map[u], map[v]))
}

/// A maximum clique, by branch and bound with a greedy colouring bound.
pub fn maximum_clique(g: &SimplicialGraph) -> VertexSet {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.vertex_count()).collect();
    expand(g, &mut current, candidates, &mut best);
    VertexSet::new(best)
}

fn expand(g: &SimplicialGraph, current: &mut Vec<usize>, candidates: Vec<usize>, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy colouring: a clique uses each colour class at most once.
    let (order, bounds) = color_bound(g, &candidates);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next: Vec<usize> = order[..i].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        expand(g, current, next, best);
        current.pop();
    }
}

/// Candidates in colour order, with the number of colours used up to each.
fn color_bound(g: &SimplicialGraph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes.iter_mut().find(|c| c.iter().all(|&u| !g.has_edge(u, v))) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    for (k, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            bounds.push(k + 1);
        }
    }
    (order, bounds)
}

pub fn clique_number(g: &SimplicialGraph) -> DictionaryAnswer {
    let w = maximum_clique(g);
    let k = w.len();
    let raag_statement = if k == 0 {
        "A(Γ) is trivial; it contains no Z^k with k >= 1".to_string()
    } else {
        format!(
            "A(Γ) contains Z^{k} spanned by {}; no {} vertex generators commute pairwise",
            set_text(g, &w),
            k + 1
        )
    };
    DictionaryAnswer {
        problem: Problem::Clique,
        answer: Answer::Number(k),
        witness: Witness::Vertices(w),
        raag_statement,
    }
}

pub fn independence_number(g: &SimplicialGraph) -> DictionaryAnswer {
    let w = maximum_clique(&g.complement());
    let k = w.len();
    let raag_statement = if k == 0 {
        "A(Γ) is trivial; no vertex generators generate a free group".to_string()
    } else {
        format!(
            "{} generates a free group F_{k}; no {} vertex generators generate a free group",
            set_text(g, &w),
            k + 1
        )
    };
    DictionaryAnswer {
        problem: Problem::Independence,
        answer: Answer::Number(k),
        witness: Witness::Vertices(w),
        raag_statement,
    }
}

/// Complement of a maximum independent set.
pub fn minimum_vertex_cover(g: &SimplicialGraph) -> VertexSet {
    let independent = maximum_clique(&g.complement());
    (0..g.vertex_count()).filter(|&v| !independent.contains(v)).collect()
}

pub fn min_vertex_cover(g: &SimplicialGraph) -> DictionaryAnswer {
    let c = minimum_vertex_cover(g);
    DictionaryAnswer {
        problem: Problem::VertexCover,
        answer: Answer::Number(c.len()),
        raag_statement: format!(
            "every commuting pair of vertex generators meets {}; no {} generators do",
            set_text(g, &c),
            c.len().saturating_sub(1)
        ),
        witness: Witness::Vertices(c),
    }
}

/// A cover with exactly `k` vertices exists iff `min <= k <= |V|`, since
/// supersets of covers are covers.
pub fn vertex_cover_exists(g: &SimplicialGraph, k: usize) -> DictionaryAnswer {
    let min = minimum_vertex_cover(g);
    let n = g.vertex_count();
    if k < min.len() || k > n {
        return DictionaryAnswer {
            problem: Problem::VertexCover,
            answer: Answer::Decision(false),
            witness: Witness::None,
            raag_statement: format!("no {k} vertex generators meet every commuting pair"),
        };
    }
    let mut cover: Vec<usize> = min.as_slice().to_vec();
    cover.extend((0..n).filter(|&v| !min.contains(v)).take(k - min.len()));
    let cover = VertexSet::new(cover);
    DictionaryAnswer {
        problem: Problem::VertexCover,
        answer: Answer::Decision(true),
        raag_statement: format!("every commuting pair of vertex generators meets {}", set_text(g, &cover)),
        witness: Witness::Vertices(cover),
    }
}

/// A proper colouring with the fewest colours.
pub fn minimum_coloring(g: &SimplicialGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = maximum_clique(g).len().max(1);
    for k in lower..=n {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, &order, 0, k, 0, &mut colors) {
            return colors;
        }
    }
    unreachable!("n colours always suffice")
}

fn color_with(g: &SimplicialGraph, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    // Colours beyond the first unused one are interchangeable.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, i + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

pub fn chromatic_number(g: &SimplicialGraph) -> DictionaryAnswer {
    let colors = minimum_coloring(g);
    let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    let classes: Vec<String> = (0..k)
        .map(|c| set_text(g, &(0..colors.len()).filter(|&v| colors[v] == c).collect()))
        .collect();
    let raag_statement = if k == 0 {
        "A(Γ) is trivial; no generators to partition".to_string()
    } else {
        format!(
            "the vertex generators split into {k} classes generating free groups: {}; {} classes do not suffice",
            classes.join(" "),
            k - 1
        )
    };
    DictionaryAnswer {
        problem: Problem::Chromatic,
        answer: Answer::Number(k),
        witness: Witness::Coloring(colors),
        raag_statement,
    }
}

/// Backtracking search for `f: V(source) → V(target)` where `ok(v, x)`
/// checks the newly placed vertex against those placed before it.
fn search_map(
    source: &SimplicialGraph,
    target: &SimplicialGraph,
    injective: bool,
    compatible: &dyn Fn(usize, usize, usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let n = source.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(source.degree(v)), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; target.vertex_count()];
    fn go(
        i: usize,
        order: &[usize],
        target_n: usize,
        injective: bool,
        compatible: &dyn Fn(usize, usize, usize, usize) -> bool,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for x in 0..target_n {
            if injective && used[x] {
                continue;
            }
            if !order[..i].iter().all(|&u| compatible(v, x, u, map[u])) {
                continue;
            }
            map[v] = x;
            used[x] = true;
            if go(i + 1, order, target_n, injective, compatible, map, used) {
                return true;
            }
            used[x] = false;
            map[v] = usize::MAX;
        }
        false
    }
    go(0, &order, target.vertex_count(), injective, compatible, &mut map, &mut used).then_some(map)
}

/// An injection whose image induces a copy of `pattern` in `host`.
pub fn find_induced_embedding(pattern: &SimplicialGraph, host: &SimplicialGraph) -> Option<Vec<usize>> {
    if pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    search_map(pattern, host, true, &|v, x, u, y| pattern.has_edge(v, u) == host.has_edge(x, y))
}

pub fn induced_subgraph_isomorphism(pattern: &SimplicialGraph, host: &SimplicialGraph) -> DictionaryAnswer {
    match find_induced_embedding(pattern, host) {
        Some(map) => {
            let image: VertexSet = map.iter().copied().collect();
            DictionaryAnswer {
                problem: Problem::InducedSubgraph,
                answer: Answer::Decision(true),
                raag_statement: format!(
                    "A(Γ′) is the standard subgroup of A(Γ) on {} via {}",
                    set_text(host, &image),
                    map_text(pattern, host, &map)
                ),
                witness: Witness::Map(map),
            }
        }
        None => DictionaryAnswer {
            problem: Problem::InducedSubgraph,
            answer: Answer::Decision(false),
            witness: Witness::None,
            raag_statement: "no standard subgroup of A(Γ) is A(Γ′) via a vertex injection".to_string(),
        },
    }
}

/// A map sending adjacent vertices to adjacent (hence distinct) vertices.
pub fn find_homomorphism(source: &SimplicialGraph, target: &SimplicialGraph) -> Option<Vec<usize>> {
    search_map(source, target, false, &|v, x, u, y| !source.has_edge(v, u) || target.has_edge(x, y))
}

pub fn graph_homomorphism_exists(source: &SimplicialGraph, target: &SimplicialGraph) -> DictionaryAnswer {
    match find_homomorphism(source, target) {
        Some(map) => DictionaryAnswer {
            problem: Problem::Homomorphism,
            answer: Answer::Decision(true),
            raag_statement: format!(
                "{} sends distinct commuting generators of A(Γ) to distinct commuting generators of A(Δ)",
                map_text(source, target, &map)
            ),
            witness: Witness::Map(map),
        },
        None => DictionaryAnswer {
            problem: Problem::Homomorphism,
            answer: Answer::Decision(false),
            witness: Witness::None,
            raag_statement: "no vertex map sends distinct commuting generators of A(Γ) to distinct commuting generators of A(Δ)"
                .to_string(),
        },
    }
}
