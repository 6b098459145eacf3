//! Subgroup membership.
//!
//! * Fiber subgroups: for a group presented as an extension
//!   `1 → K → G → Z → 1` with the map to Z given by integer weights on the
//!   generators, `g ∈ K` iff the weighted exponent sum of any word for `g`
//!   vanishes. Linear time.
//! * Undistorted subgroups H = ⟨S_H⟩ ≤ A(Γ) with distortion constant C: if
//!   `g` has geodesic length N in A(Γ) and lies in H, it is a product of at
//!   most C·N + C generators from S_H^±. [`bounded_membership`] enumerates
//!   those products breadth-first, deduplicated by normal form. Exponential
//!   in the worst case, and capped by an explicit state budget.
//! * Standard subgroups ⟨S⟩ for S ⊆ V(Γ): `g` lies in ⟨S⟩ iff its normal
//!   form only uses letters from S.
//!
//! Deciding the fiber subgroup of an undistorted π₁(M′) ≤ A(Γ) composes the
//! first two: find an expression for `g` over the generators of π₁(M′), then
//! sum weights along it ([`composite_fiber_membership`]).

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{SimplicialGraph, VertexSet};
use crate::words::{ArtinGroup, Letter, Sign, Word, WordError};

/// Default cap on distinct group elements enumerated by a bounded search.
pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("{labels} generator labels but {weights} weights")]
    LengthMismatch { labels: usize, weights: usize },
    #[error("duplicate generator label `{0}`")]
    DuplicateGenerator(String),
    #[error("distortion constant must be at least 1")]
    InvalidDistortion,
    #[error("a subgroup needs at least one generator")]
    NoGenerators,
    #[error("resource limit: more than {limit} group elements enumerated")]
    ResourceLimit { limit: usize },
}

/// A homomorphism to Z given by one integer weight per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomToZ {
    labels: Vec<String>,
    weights: Vec<i64>,
    index: HashMap<String, usize>,
}

impl HomToZ {
    pub fn new(labels: Vec<String>, weights: Vec<i64>) -> Result<Self, MembershipError> {
        if labels.len() != weights.len() {
            return Err(MembershipError::LengthMismatch {
                labels: labels.len(),
                weights: weights.len(),
            });
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(MembershipError::DuplicateGenerator(l.clone()));
            }
        }
        Ok(HomToZ { labels, weights, index })
    }

    pub fn weight(&self, generator: usize) -> i64 {
        self.weights[generator]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Σ sign · weight over the letters of `w`.
    pub fn evaluate(&self, w: &Word) -> Result<i128, MembershipError> {
        let n = self.weights.len();
        w.letters().iter().try_fold(0i128, |acc, l| {
            let weight = *self
                .weights
                .get(l.vertex)
                .ok_or(WordError::OutOfRange { index: l.vertex, n })?;
            Ok(acc + (weight as i128) * (l.sign.value() as i128))
        })
    }
}

/// A group `⟨g_1, …, g_k⟩` mapping onto Z, whose kernel is the fiber subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberedPresentation {
    hom: HomToZ,
}

impl FiberedPresentation {
    pub fn new(hom: HomToZ) -> Self {
        FiberedPresentation { hom }
    }

    pub fn from_weights<S: Into<String>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Result<Self, MembershipError> {
        let (labels, weights): (Vec<String>, Vec<i64>) = pairs.into_iter().map(|(l, w)| (l.into(), w)).unzip();
        Ok(FiberedPresentation::new(HomToZ::new(labels, weights)?))
    }

    pub fn hom(&self) -> &HomToZ {
        &self.hom
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, MembershipError> {
        Ok(Word::parse_with(text, |l| self.hom.index.get(l).copied())?)
    }
}

/// Kernel membership by exponent sum: one pass over the word.
pub fn exponent_sum_membership(p: &FiberedPresentation, w: &Word) -> Result<bool, MembershipError> {
    Ok(p.hom.evaluate(w)? == 0)
}

/// Subgroup of A(Γ) generated by `generators`, assumed undistorted with
/// constant `distortion`.
#[derive(Debug, Clone)]
pub struct SubgroupSpec {
    graph: SimplicialGraph,
    generators: Vec<Word>,
    distortion: u32,
}

impl SubgroupSpec {
    pub fn new(graph: SimplicialGraph, generators: Vec<Word>, distortion: u32) -> Result<Self, MembershipError> {
        if distortion < 1 {
            return Err(MembershipError::InvalidDistortion);
        }
        if generators.is_empty() {
            return Err(MembershipError::NoGenerators);
        }
        for g in &generators {
            g.check(&graph)?;
        }
        Ok(SubgroupSpec {
            graph,
            generators,
            distortion,
        })
    }

    /// The standard subgroup on `s`, with C = 1.
    pub fn standard(graph: SimplicialGraph, s: &VertexSet) -> Result<Self, MembershipError> {
        let gens = s.iter().map(|v| Word::letter(Letter::pos(v))).collect();
        Self::new(graph, gens, 1)
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn distortion(&self) -> u32 {
        self.distortion
    }
}

/// A product of subgroup generators: `(index into S_H, sign)` per factor.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Expression(Vec<(usize, Sign)>);

impl Expression {
    pub fn factors(&self) -> &[(usize, Sign)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word over V(Γ) this expression stands for.
    pub fn expand(&self, spec: &SubgroupSpec) -> Word {
        let mut out = Word::identity();
        for &(i, sign) in &self.0 {
            let g = &spec.generators[i];
            out = match sign {
                Sign::Pos => out.concat(g),
                Sign::Neg => out.concat(&g.inverse()),
            };
        }
        out
    }

    /// Text like `1 2^-1` with 1-based generator indices.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, s)| match s {
                Sign::Pos => format!("{}", i + 1),
                Sign::Neg => format!("{}^-1", i + 1),
            })
            .collect();
        parts.join(" ")
    }
}

/// Breadth-first ball of H around the identity, grown on demand and shared
/// across queries.
pub struct BoundedSearch<'s> {
    spec: &'s SubgroupSpec,
    group: ArtinGroup<'s>,
    limit: usize,
    known: HashMap<Word, Expression>,
    frontier: Vec<Word>,
    radius: usize,
    lattice: Lattice,
}

impl<'s> BoundedSearch<'s> {
    pub fn new(spec: &'s SubgroupSpec, limit: usize) -> Self {
        let group = ArtinGroup::new(&spec.graph);
        let n = group.rank();
        let lattice = Lattice::new(spec.generators.iter().map(|g| g.abelianization(n)).collect());
        let mut known = HashMap::new();
        known.insert(Word::identity(), Expression::default());
        BoundedSearch {
            spec,
            group,
            limit,
            known,
            frontier: vec![Word::identity()],
            radius: 0,
            lattice,
        }
    }

    /// Number of distinct elements enumerated so far.
    pub fn states(&self) -> usize {
        self.known.len()
    }

    /// Whether the abelianization of `g` lies in the integer span of the
    /// generators' abelianizations (necessary for membership).
    pub fn passes_abelian_filter(&self, g: &Word) -> bool {
        self.lattice.contains(&g.abelianization(self.group.rank()))
    }

    /// A shortest expression for `g` of length at most C·N + C, where N is the
    /// geodesic length of `g`, or `None` if there is none.
    pub fn query(&mut self, g: &Word) -> Result<Option<Expression>, MembershipError> {
        g.check(self.spec.graph())?;
        let target = self.group.normal_form(g);
        let c = self.spec.distortion as usize;
        let bound = c * target.len() + c;
        if !self.passes_abelian_filter(&target) {
            return Ok(None);
        }
        loop {
            if let Some(e) = self.known.get(&target) {
                return Ok((e.len() <= bound).then(|| e.clone()));
            }
            if self.radius >= bound || self.frontier.is_empty() {
                return Ok(None);
            }
            self.grow()?;
        }
    }

    fn grow(&mut self) -> Result<(), MembershipError> {
        let steps: Vec<(usize, Sign, Word)> = self
            .spec
            .generators
            .iter()
            .enumerate()
            .flat_map(|(i, g)| [(i, Sign::Pos, g.clone()), (i, Sign::Neg, g.inverse())])
            .collect();
        let mut next = Vec::new();
        for x in std::mem::take(&mut self.frontier) {
            let base = self.known[&x].clone();
            for (i, sign, step) in &steps {
                let y = self.group.normal_form(&x.concat(step));
                if self.known.contains_key(&y) {
                    continue;
                }
                if self.known.len() >= self.limit {
                    return Err(MembershipError::ResourceLimit { limit: self.limit });
                }
                let mut e = base.clone();
                e.0.push((*i, *sign));
                self.known.insert(y.clone(), e);
                next.push(y);
            }
        }
        self.frontier = next;
        self.radius += 1;
        Ok(())
    }
}

pub fn bounded_membership(spec: &SubgroupSpec, g: &Word) -> Result<Option<Expression>, MembershipError> {
    bounded_membership_with_limit(spec, g, DEFAULT_STATE_LIMIT)
}

pub fn bounded_membership_with_limit(
    spec: &SubgroupSpec,
    g: &Word,
    limit: usize,
) -> Result<Option<Expression>, MembershipError> {
    BoundedSearch::new(spec, limit).query(g)
}

/// `g` lies in ⟨s⟩ iff every letter of its normal form is in `s`.
pub fn standard_subgroup_membership(g: &SimplicialGraph, s: &VertexSet, w: &Word) -> bool {
    ArtinGroup::new(g)
        .normal_form(w)
        .letters()
        .iter()
        .all(|l| s.contains(l.vertex))
}

/// Membership of `g` in the kernel of `weights` restricted to H = ⟨S_H⟩:
/// `None` if `g ∉ H` within the distortion bound, otherwise whether the
/// weighted exponent sum along the found expression vanishes.
pub fn composite_fiber_membership(
    spec: &SubgroupSpec,
    weights: &[i64],
    g: &Word,
) -> Result<Option<bool>, MembershipError> {
    if weights.len() != spec.generators.len() {
        return Err(MembershipError::LengthMismatch {
            labels: spec.generators.len(),
            weights: weights.len(),
        });
    }
    let Some(expr) = bounded_membership(spec, g)? else {
        return Ok(None);
    };
    let sum: i128 = expr
        .factors()
        .iter()
        .map(|&(i, s)| weights[i] as i128 * s.value() as i128)
        .sum();
    Ok(Some(sum == 0))
}

/// Integer lattice spanned by a set of vectors, in row echelon form.
#[derive(Debug, Clone)]
struct Lattice {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Lattice {
    fn new(vectors: Vec<Vec<i64>>) -> Self {
        let mut m: Vec<Vec<i128>> = vectors
            .into_iter()
            .map(|v| v.into_iter().map(i128::from).collect())
            .filter(|v: &Vec<i128>| v.iter().any(|&x| x != 0))
            .collect();
        let width = m.first().map_or(0, Vec::len);
        let mut rows = Vec::new();
        let mut top = 0;
        for col in 0..width {
            loop {
                let nonzero: Vec<usize> = (top..m.len()).filter(|&r| m[r][col] != 0).collect();
                let Some(&pivot) = nonzero.iter().min_by_key(|&&r| m[r][col].abs()) else {
                    break;
                };
                m.swap(top, pivot);
                if nonzero.len() == 1 {
                    rows.push((col, m[top].clone()));
                    top += 1;
                    break;
                }
                for r in top + 1..m.len() {
                    let q = m[r][col] / m[top][col];
                    if q != 0 {
                        for k in 0..width {
                            m[r][k] -= q * m[top][k];
                        }
                    }
                }
            }
        }
        Lattice { rows }
    }

    fn contains(&self, target: &[i64]) -> bool {
        let mut t: Vec<i128> = target.iter().map(|&x| x as i128).collect();
        for (col, row) in &self.rows {
            if t[*col] % row[*col] != 0 {
                return false;
            }
            let q = t[*col] / row[*col];
            for (x, r) in t.iter_mut().zip(row) {
                *x -= q * r;
            }
        }
        t.iter().all(|&x| x == 0)
    }
}
