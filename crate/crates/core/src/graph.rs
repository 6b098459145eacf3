//! Finite simplicial graphs, the defining data of right-angled Artin groups.
//!
//! A [`SimplicialGraph`] keeps its vertices in a fixed canonical order (the
//! declaration order) and stores one of two relations as sorted adjacency
//! lists: either the edges themselves, or the non-edges. Dense graphs such as
//! large joins are cheap to hold in the second form, and taking a complement
//! only flips which relation is stored. Graphs up to [`DENSE_LIMIT`] vertices
//! also carry a bit matrix for constant-time edge queries.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::urns::Urns;

/// Graphs with at most this many vertices get a bit-matrix adjacency index.
pub const DENSE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: duplicate vertex label `{label}`")]
    DuplicateLabel { label: String, line: usize },
    #[error("line {line}: edge endpoint `{label}` was not declared")]
    UndeclaredVertex { label: String, line: usize },
    #[error("line {line}: self-loop at `{label}`")]
    SelfLoop { label: String, line: usize },
    #[error("line {line}: malformed line `{text}`")]
    Malformed { line: usize, text: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    OutOfRange { index: usize, n: usize },
}

/// A subset of the vertex indices of some graph, kept sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

#[derive(Debug)]
enum Labels {
    Named {
        names: Vec<String>,
        index: HashMap<String, usize>,
    },
    /// `prefix0, prefix1, ...`; used for very large generated graphs.
    Generated { prefix: String, len: usize },
}

impl Labels {
    fn len(&self) -> usize {
        match self {
            Labels::Named { names, .. } => names.len(),
            Labels::Generated { len, .. } => *len,
        }
    }

    fn get(&self, v: usize) -> Cow<'_, str> {
        match self {
            Labels::Named { names, .. } => Cow::Borrowed(&names[v]),
            Labels::Generated { prefix, .. } => Cow::Owned(format!("{prefix}{v}")),
        }
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        match self {
            Labels::Named { index, .. } => index.get(label).copied(),
            Labels::Generated { prefix, len } => {
                let digits = label.strip_prefix(prefix.as_str())?;
                if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
                    return None;
                }
                digits.parse::<usize>().ok().filter(|i| i < len)
            }
        }
    }
}

/// Symmetric relation stored as compressed sorted rows.
#[derive(Debug)]
struct Rows {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Rows {
    fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut both: Vec<(u32, u32)> = Vec::new();
        for (u, v) in pairs {
            both.push((u as u32, v as u32));
            both.push((v as u32, u as u32));
        }
        both.sort_unstable();
        both.dedup();
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &both {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = both.into_iter().map(|(_, v)| v).collect();
        Rows { offsets, targets }
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn contains(&self, u: usize, v: usize) -> bool {
        self.row(u).binary_search(&(v as u32)).is_ok()
    }

    fn pair_count(&self) -> usize {
        self.targets.len() / 2
    }
}

#[derive(Debug, Clone)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }
}

/// A finite simplicial graph with an ordered vertex set.
///
/// Immutable after construction; clones share storage.
#[derive(Clone)]
pub struct SimplicialGraph {
    labels: Arc<Labels>,
    rows: Arc<Rows>,
    /// When set, `rows` holds the non-edges rather than the edges.
    complemented: bool,
    matrix: Option<Arc<BitMatrix>>,
}

impl SimplicialGraph {
    /// Builds a graph from labels in canonical order and edges given by index.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels = named_labels(labels)?;
        let n = labels.len();
        check_pairs(n, edges, &labels)?;
        Ok(Self::assemble(labels, Rows::from_pairs(n, edges.iter().copied()), false))
    }

    /// Builds the graph on `labels` whose non-edges are exactly `non_edges`.
    pub fn from_non_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        non_edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels = named_labels(labels)?;
        let n = labels.len();
        check_pairs(n, non_edges, &labels)?;
        Ok(Self::assemble(labels, Rows::from_pairs(n, non_edges.iter().copied()), true))
    }

    /// Graph on `n` vertices labelled `prefix0 .. prefix{n-1}`. When
    /// `complemented` is set, `pairs` lists the non-edges.
    pub fn generated(
        prefix: &str,
        n: usize,
        pairs: &[(usize, usize)],
        complemented: bool,
    ) -> Result<Self, GraphError> {
        let labels = Labels::Generated {
            prefix: prefix.to_string(),
            len: n,
        };
        check_pairs(n, pairs, &labels)?;
        Ok(Self::assemble(labels, Rows::from_pairs(n, pairs.iter().copied()), complemented))
    }

    /// Graph on `n` vertices labelled `a, b, c, ...` (or `v0, v1, ...` past 26).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(default_labels(n), edges)
    }

    fn assemble(labels: Labels, rows: Rows, complemented: bool) -> Self {
        let n = labels.len();
        let matrix = (n <= DENSE_LIMIT).then(|| {
            let mut m = BitMatrix::new(n);
            if complemented {
                for u in 0..n {
                    let row = rows.row(u);
                    for v in (0..n).filter(|&v| v != u && row.binary_search(&(v as u32)).is_err()) {
                        m.set(u, v);
                    }
                }
            } else {
                for u in 0..n {
                    for &v in rows.row(u) {
                        m.set(u, v as usize);
                    }
                }
            }
            Arc::new(m)
        });
        SimplicialGraph {
            labels: Arc::new(labels),
            rows: Arc::new(rows),
            complemented,
            matrix,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        if self.complemented {
            n * n.saturating_sub(1) / 2 - self.rows.pair_count()
        } else {
            self.rows.pair_count()
        }
    }

    pub fn label(&self, v: usize) -> Cow<'_, str> {
        self.labels.get(v)
    }

    pub fn labels(&self) -> impl Iterator<Item = Cow<'_, str>> + '_ {
        (0..self.vertex_count()).map(|v| self.labels.get(v))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.index_of(label)
    }

    /// Resolves a label, failing with [`GraphError::UnknownVertex`].
    pub fn vertex(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                index: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match &self.matrix {
            Some(m) => m.get(u, v),
            None => self.rows.contains(u, v) != self.complemented,
        }
    }

    /// Vertices `v` and `w` commute in the group: equal or adjacent.
    pub fn commute(&self, u: usize, v: usize) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn neighbors(&self, v: usize) -> RowIter<'_> {
        RowIter::new(self.rows.row(v), v, self.vertex_count(), self.complemented)
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    pub fn non_neighbors(&self, v: usize) -> RowIter<'_> {
        RowIter::new(self.rows.row(v), v, self.vertex_count(), !self.complemented)
    }

    pub fn degree(&self, v: usize) -> usize {
        let stored = self.rows.row(v).len();
        if self.complemented {
            self.vertex_count() - 1 - stored
        } else {
            stored
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn link(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.neighbors(v).collect()))
    }

    pub fn star(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut s = self.link(v)?;
        let pos = s.0.binary_search(&v).unwrap_err();
        s.0.insert(pos, v);
        Ok(s)
    }

    /// Same vertex order; a pair is an edge iff it was not one before.
    pub fn complement(&self) -> SimplicialGraph {
        let matrix = self.matrix.as_ref().map(|m| {
            let n = self.vertex_count();
            let mut flipped = (**m).clone();
            for u in 0..n {
                let row = &mut flipped.bits[u * m.words_per_row..(u + 1) * m.words_per_row];
                for w in row.iter_mut() {
                    *w = !*w;
                }
                if !n.is_multiple_of(64) {
                    row[m.words_per_row - 1] &= (1u64 << (n % 64)) - 1;
                }
                row[u / 64] &= !(1u64 << (u % 64));
            }
            Arc::new(flipped)
        });
        SimplicialGraph {
            labels: Arc::clone(&self.labels),
            rows: Arc::clone(&self.rows),
            complemented: !self.complemented,
            matrix,
        }
    }

    /// Subgraph induced on `s`, with vertices in this graph's order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<SimplicialGraph, GraphError> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let mut position = HashMap::with_capacity(s.len());
        for (i, v) in s.iter().enumerate() {
            position.insert(v, i);
        }
        let mut pairs = Vec::new();
        for (i, u) in s.iter().enumerate() {
            for &w in self.rows.row(u) {
                if let Some(&j) = position.get(&(w as usize)) {
                    if i < j {
                        pairs.push((i, j));
                    }
                }
            }
        }
        let names: Vec<String> = s.iter().map(|v| self.label(v).into_owned()).collect();
        let labels = named_labels(names)?;
        Ok(Self::assemble(labels, Rows::from_pairs(s.len(), pairs), self.complemented))
    }

    /// Connected components, each sorted, ordered by least vertex.
    ///
    /// Every vertex starts in its own urn; urns are merged along each edge.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut urns = Urns::new(n);
        for (u, v) in self.edges() {
            urns.merge(u, v);
        }
        urns.into_groups().into_iter().map(VertexSet).collect()
    }

    /// Number of connected components, without materialising them.
    pub fn component_count(&self) -> usize {
        let mut urns = Urns::new(self.vertex_count());
        let merges = self.edges().filter(|&(u, v)| urns.merge(u, v)).count();
        self.vertex_count() - merges
    }

    /// Text form: `v` lines in canonical order, then `e` lines sorted by index pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out).expect("writing to a String cannot fail");
        out
    }

    ///
    /// A graph held as non-edges with fewer non-edges than edges is written
    /// with a `complement` line instead, after which `e` lines list non-edges.
    pub fn write_text(&self, out: &mut impl fmt::Write) -> fmt::Result {
        for label in self.labels() {
            writeln!(out, "v {label}")?;
        }
        let flipped;
        let source = if self.complemented && self.rows.pair_count() < self.edge_count() {
            writeln!(out, "complement")?;
            flipped = self.complement();
            &flipped
        } else {
            self
        };
        for (u, v) in source.edges() {
            writeln!(out, "e {} {}", self.label(u), self.label(v))?;
        }
        Ok(())
    }
}

impl PartialEq for SimplicialGraph {
    fn eq(&self, other: &Self) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || !self.labels().eq(other.labels()) {
            return false;
        }
        if self.complemented == other.complemented {
            return self.rows.offsets == other.rows.offsets
                && self.rows.targets == other.rows.targets;
        }
        (0..n).all(|v| self.neighbors(v).eq(other.neighbors(v)))
    }
}

impl Eq for SimplicialGraph {}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.vertex_count();
        if n > 64 {
            return write!(f, "SimplicialGraph({n} vertices, {} edges)", self.edge_count());
        }
        let labels: Vec<_> = self.labels().collect();
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", labels[u], labels[v]))
            .collect();
        write!(f, "SimplicialGraph {{ vertices: {labels:?}, edges: {edges:?} }}")
    }
}

impl std::str::FromStr for SimplicialGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Iterates the neighbors (or non-neighbors) of a vertex in ascending order.
pub struct RowIter<'a> {
    stored: std::iter::Peekable<std::slice::Iter<'a, u32>>,
    next: usize,
    n: usize,
    skip: usize,
    flipped: bool,
}

impl<'a> RowIter<'a> {
    fn new(row: &'a [u32], skip: usize, n: usize, flipped: bool) -> Self {
        RowIter {
            stored: row.iter().peekable(),
            next: 0,
            n,
            skip,
            flipped,
        }
    }
}

impl Iterator for RowIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if !self.flipped {
            return self.stored.next().map(|&v| v as usize);
        }
        while self.next < self.n {
            let v = self.next;
            self.next += 1;
            if v == self.skip {
                continue;
            }
            while self.stored.next_if(|&&w| (w as usize) < v).is_some() {}
            if self.stored.next_if(|&&w| w as usize == v).is_some() {
                continue;
            }
            return Some(v);
        }
        None
    }
}

/// Parses the line-oriented graph format (`v <label>`, `e <a> <b>`, `#` comments).
pub fn parse_graph(text: &str) -> Result<SimplicialGraph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut complemented = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || GraphError::Malformed {
            line: line_no,
            text: raw.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["v", label] => {
                if !valid_label(label) {
                    return Err(malformed());
                }
                if index.contains_key(*label) {
                    return Err(GraphError::DuplicateLabel {
                        label: label.to_string(),
                        line: line_no,
                    });
                }
                index.insert(label.to_string(), names.len());
                names.push(label.to_string());
            }
            ["e", a, b] => {
                let lookup = |l: &str| {
                    index.get(l).copied().ok_or_else(|| GraphError::UndeclaredVertex {
                        label: l.to_string(),
                        line: line_no,
                    })
                };
                let (u, v) = (lookup(a)?, lookup(b)?);
                if u == v {
                    return Err(GraphError::SelfLoop {
                        label: a.to_string(),
                        line: line_no,
                    });
                }
                edges.push((u, v));
            }
            ["complement"] => complemented = true,
            _ => return Err(malformed()),
        }
    }
    let n = names.len();
    let labels = Labels::Named { names, index };
    Ok(SimplicialGraph::assemble(labels, Rows::from_pairs(n, edges), complemented))
}

/// Labels may not contain whitespace or `^`, which the word syntax reserves.
fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.contains('^') && !label.chars().any(char::is_whitespace)
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("v{i}")).collect()
    }
}

fn named_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Labels, GraphError> {
    let names: Vec<String> = labels.into_iter().map(Into::into).collect();
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if !valid_label(name) {
            return Err(GraphError::Malformed {
                line: 0,
                text: name.clone(),
            });
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(GraphError::DuplicateLabel {
                label: name.clone(),
                line: 0,
            });
        }
    }
    Ok(Labels::Named { names, index })
}

fn check_pairs(n: usize, pairs: &[(usize, usize)], labels: &Labels) -> Result<(), GraphError> {
    for &(u, v) in pairs {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { index: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop {
                label: labels.get(u).into_owned(),
                line: 0,
            });
        }
    }
    Ok(())
}
