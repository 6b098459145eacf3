//! Brute-force oracles shared by the integration tests. Each one works from
//! definitions only and shares no code with the algorithms it checks.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use raag::catalog::from_mask;
use raag::{Letter, SimplicialGraph, Word};

/// Every word of length exactly `len` over the generators of a rank-`n` group.
pub fn words_of_length(n: usize, len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..n).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(n, l)).collect()
}

pub fn random_word(n: usize, len: usize, rng: &mut impl Rng) -> Word {
    Word::new(
        (0..len)
            .map(|_| {
                let v = rng.gen_range(0..n);
                if rng.gen_bool(0.5) {
                    Letter::pos(v)
                } else {
                    Letter::neg(v)
                }
            })
            .collect(),
    )
}

/// Geodesic lengths by rewriting: a word's commutation class is closed
/// under swapping adjacent letters on adjacent vertices, and from any word
/// in the class a pair `x x⁻¹` may be deleted. The geodesic length is the
/// shortest word reachable. Results are memoised for every word of a class.
pub struct RewritingOracle<'g> {
    g: &'g SimplicialGraph,
    memo: HashMap<Vec<Letter>, usize>,
}

impl<'g> RewritingOracle<'g> {
    pub fn new(g: &'g SimplicialGraph) -> Self {
        RewritingOracle { g, memo: HashMap::new() }
    }

    fn commutation_class(&self, w: &[Letter]) -> Vec<Vec<Letter>> {
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        let mut queue = VecDeque::from([w.to_vec()]);
        seen.insert(w.to_vec());
        while let Some(x) = queue.pop_front() {
            for i in 0..x.len().saturating_sub(1) {
                let (a, b) = (x[i], x[i + 1]);
                if a.vertex != b.vertex && self.g.has_edge(a.vertex, b.vertex) {
                    let mut y = x.clone();
                    y.swap(i, i + 1);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn reduced_length(&mut self, w: &Word) -> usize {
        self.reduce(w.letters())
    }

    fn reduce(&mut self, w: &[Letter]) -> usize {
        if let Some(&l) = self.memo.get(w) {
            return l;
        }
        let class = self.commutation_class(w);
        let mut best = w.len();
        'search: for x in &class {
            for i in 0..x.len().saturating_sub(1) {
                if x[i].vertex == x[i + 1].vertex && x[i].sign != x[i + 1].sign {
                    let mut y = x.clone();
                    y.drain(i..i + 2);
                    best = best.min(self.reduce(&y));
                    if best == 0 {
                        break 'search;
                    }
                }
            }
        }
        for x in class {
            self.memo.insert(x, best);
        }
        best
    }

    pub fn is_trivial(&mut self, w: &Word) -> bool {
        self.reduced_length(w) == 0
    }
}

/// Relabels the edge set `mask` (bit index = pair index in `(0,1), (0,2), …`).
fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let index = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        // pairs before row u, then offset in row
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    };
    let mut out = 0;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                out |= 1 << index(perm[u], perm[v]);
            }
            bit += 1;
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on exactly `n` vertices.
pub fn isomorphism_classes(n: usize) -> Vec<SimplicialGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    (0u64..1 << pairs)
        .filter(|&m| perms.iter().all(|p| permute_mask(n, m, p) >= m))
        .map(|m| from_mask(n, m))
        .collect()
}

/// Whether some non-identity permutation preserves adjacency.
pub fn has_nontrivial_automorphism(g: &SimplicialGraph) -> bool {
    let n = g.vertex_count();
    permutations(n).into_iter().any(|p| {
        p.iter().enumerate().any(|(i, &x)| i != x)
            && (0..n).all(|u| (0..u).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v])))
    })
}

/// Components by breadth-first search over `has_edge`, as a label per vertex.
pub fn component_labels(g: &SimplicialGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if v != u && label[v] == usize::MAX && g.has_edge(u, v) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(g: &SimplicialGraph) -> usize {
    component_labels(g).into_iter().collect::<HashSet<_>>().len()
}

/// Exhaustive subset optimum: the largest subset satisfying `pred`.
fn best_subset(n: usize, pred: impl Fn(&[usize]) -> bool, largest: bool) -> usize {
    let sizes = (0u32..1 << n).filter_map(|m| {
        let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        pred(&s).then_some(s.len())
    });
    if largest {
        sizes.max().unwrap_or(0)
    } else {
        sizes.min().unwrap_or(0)
    }
}

pub fn brute_clique(g: &SimplicialGraph) -> usize {
    best_subset(
        g.vertex_count(),
        |s| s.iter().all(|&a| s.iter().all(|&b| a == b || g.has_edge(a, b))),
        true,
    )
}

pub fn brute_independence(g: &SimplicialGraph) -> usize {
    best_subset(
        g.vertex_count(),
        |s| s.iter().all(|&a| s.iter().all(|&b| !g.has_edge(a, b))),
        true,
    )
}

pub fn brute_vertex_cover(g: &SimplicialGraph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    best_subset(
        g.vertex_count(),
        |s| edges.iter().all(|&(u, v)| s.contains(&u) || s.contains(&v)),
        false,
    )
}

/// Whether a cover of exactly `k` vertices exists, by enumerating k-subsets.
pub fn brute_cover_of_size(g: &SimplicialGraph, k: usize) -> bool {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n).any(|m| {
        m.count_ones() as usize == k && edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
    })
}

/// Fewest classes over all set partitions of V whose classes are independent.
pub fn brute_chromatic(g: &SimplicialGraph) -> usize {
    fn go(g: &SimplicialGraph, v: usize, classes: &mut Vec<Vec<usize>>, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if v == g.vertex_count() {
            *best = classes.len();
            return;
        }
        for i in 0..classes.len() {
            if classes[i].iter().all(|&u| !g.has_edge(u, v)) {
                classes[i].push(v);
                go(g, v + 1, classes, best);
                classes[i].pop();
            }
        }
        classes.push(vec![v]);
        go(g, v + 1, classes, best);
        classes.pop();
    }
    let mut best = g.vertex_count() + 1;
    go(g, 0, &mut Vec::new(), &mut best);
    best.min(g.vertex_count())
}

/// Whether an injection preserving edges and non-edges exists, by trying
/// every ordered selection of host vertices.
pub fn brute_induced(pattern: &SimplicialGraph, host: &SimplicialGraph) -> bool {
    let (p, h) = (pattern.vertex_count(), host.vertex_count());
    fn go(pattern: &SimplicialGraph, host: &SimplicialGraph, map: &mut Vec<usize>) -> bool {
        let v = map.len();
        if v == pattern.vertex_count() {
            return (0..v).all(|a| (0..a).all(|b| pattern.has_edge(a, b) == host.has_edge(map[a], map[b])));
        }
        for x in 0..host.vertex_count() {
            if !map.contains(&x) {
                map.push(x);
                if go(pattern, host, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    p <= h && go(pattern, host, &mut Vec::new())
}

/// Whether some map of all |T|^|S| sends edges to edges.
pub fn brute_homomorphism(source: &SimplicialGraph, target: &SimplicialGraph) -> bool {
    let (s, t) = (source.vertex_count(), target.vertex_count());
    let edges: Vec<(usize, usize)> = source.edges().collect();
    let total = (t as u64).pow(s as u32);
    (0..total).any(|mut code| {
        let mut map = vec![0; s];
        for slot in map.iter_mut() {
            *slot = (code % t as u64) as usize;
            code /= t as u64;
        }
        edges.iter().all(|&(u, v)| target.has_edge(map[u], map[v]))
    })
}

pub fn is_bipartite(g: &SimplicialGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

pub mod strategies {
    use proptest::prelude::*;
    use raag::catalog::from_mask;
    use raag::{Letter, SimplicialGraph, Word};

    /// A labelled graph on 1..=max_n vertices, uniform over edge masks.
    pub fn graph(max_n: usize) -> impl Strategy<Value = SimplicialGraph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), 0u64..1 << pairs).prop_map(|(n, m)| from_mask(n, m))
        })
    }

    pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..n, any::<bool>()), 0..=max_len).prop_map(|ls| {
            Word::new(
                ls.into_iter()
                    .map(|(v, p)| if p { Letter::pos(v) } else { Letter::neg(v) })
                    .collect(),
            )
        })
    }

    pub fn graph_and_words(
        max_n: usize,
        count: usize,
        max_len: usize,
    ) -> impl Strategy<Value = (SimplicialGraph, Vec<Word>)> {
        graph(max_n).prop_flat_map(move |g| {
            let n = g.vertex_count();
            (Just(g), prop::collection::vec(word(n, max_len), count))
        })
    }
}
