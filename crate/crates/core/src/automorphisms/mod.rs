//! Automorphisms of Γ and of A(Γ).
//!
//! Γ has a nontrivial automorphism exactly when Out(A(Γ)) contains a finite
//! nonabelian subgroup. This module makes both directions checkable:
//!
//! * a graph automorphism σ moving a vertex `v`, together with the inversion
//!   of `v`, generates a finite nonabelian group of signed permutation
//!   matrices, which [`finite_nonabelian_witness`] certifies by closure;
//! * without graph automorphisms the domination digraph is acyclic, and in a
//!   height-compatible basis every Laurence generator acts on the
//!   abelianization by an upper triangular matrix with ±1 on the diagonal
//!   ([`verify_triangular_form`]). Finite subgroups of that group are abelian.
//!
//! The kernel of the abelianization action is torsion-free, so finite
//! subgroups of Aut(A(Γ)) embed in GL_n(Z); that fact is used, not computed.

mod domination;
mod search;

use std::fmt;

use thiserror::Error;

pub use domination::{
    domination_digraph, dominates, find_domination_cycle, height_order, heights, twin_swap_automorphism,
    DominationDigraph, HeightFunction,
};
pub use search::{automorphism_group_generators, nontrivial_graph_automorphism, refine_colors, Permutation};

use crate::graph::{GraphError, SimplicialGraph, VertexSet};
use crate::matrix::{signed_permutation_closure, IntegerMatrix, SignedPermutation};
use crate::words::{ArtinGroup, Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("domination needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} do not dominate each other")]
    NotMutual(usize, usize),
    #[error("domination cycle through {0} and {1}; swapping them is a graph automorphism")]
    DominationCycle(usize, usize),
    #[error("vertex {dominating} does not dominate vertex {dominated}")]
    NotDominated { dominated: usize, dominating: usize },
    #[error("not a component of the complement of the star of vertex {0}")]
    NotAComponent(usize),
    #[error("permutation does not preserve adjacency")]
    NotAGraphAutomorphism,
    #[error("the graph has a nontrivial automorphism")]
    HasGraphAutomorphism,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `v ↦ v·w`
    Right,
    /// `v ↦ w·v`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismKind {
    Graph(Permutation),
    Inversion(usize),
    Transvection {
        dominated: usize,
        dominating: usize,
        side: Side,
    },
    PartialConjugation {
        vertex: usize,
        component: VertexSet,
    },
}

/// An assignment of a word to every vertex; the induced endomorphism of A(Γ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    images: Vec<Word>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).map(|v| Word::letter(Letter::pos(v))).collect(),
        }
    }

    pub fn from_images(images: Vec<Word>) -> Self {
        VertexMap { images }
    }

    pub fn image(&self, v: usize) -> &Word {
        &self.images[v]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.vertex];
            match l.sign {
                Sign::Pos => out.extend_from_slice(img.letters()),
                Sign::Neg => out.extend(img.inverse().into_letters()),
            }
        }
        Word::new(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        VertexMap {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Column `v` is the exponent vector of the image of `v`.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let n = self.images.len();
        let columns: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianization(n)).collect();
        IntegerMatrix::from_columns(&columns)
    }

    /// Images of adjacent vertices commute, so the map is an endomorphism.
    pub fn respects_relations(&self, g: &SimplicialGraph) -> bool {
        let group = ArtinGroup::new(g);
        g.edges().all(|(u, v)| {
            let (a, b) = (&self.images[u], &self.images[v]);
            group.words_equal(&a.concat(b), &b.concat(a))
        })
    }
}

/// One of the four kinds of generators of Aut(A(Γ)), with its action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagAutomorphism {
    kind: AutomorphismKind,
    map: VertexMap,
}

impl RaagAutomorphism {
    pub fn graph_automorphism(g: &SimplicialGraph, p: Permutation) -> Result<Self, AutError> {
        if !p.is_automorphism_of(g) {
            return Err(AutError::NotAGraphAutomorphism);
        }
        let images = (0..g.vertex_count()).map(|v| Word::letter(Letter::pos(p.apply(v)))).collect();
        Ok(RaagAutomorphism {
            kind: AutomorphismKind::Graph(p),
            map: VertexMap { images },
        })
    }

    pub fn inversion(g: &SimplicialGraph, v: usize) -> Result<Self, AutError> {
        g.check_vertex(v)?;
        let mut map = VertexMap::identity(g.vertex_count());
        map.images[v] = Word::letter(Letter::neg(v));
        Ok(RaagAutomorphism {
            kind: AutomorphismKind::Inversion(v),
            map,
        })
    }

    pub fn transvection(g: &SimplicialGraph, dominated: usize, dominating: usize, side: Side) -> Result<Self, AutError> {
        if !dominates(g, dominating, dominated)? {
            return Err(AutError::NotDominated { dominated, dominating });
        }
        let (v, w) = (Letter::pos(dominated), Letter::pos(dominating));
        let mut map = VertexMap::identity(g.vertex_count());
        map.images[dominated] = match side {
            Side::Right => Word::new(vec![v, w]),
            Side::Left => Word::new(vec![w, v]),
        };
        Ok(RaagAutomorphism {
            kind: AutomorphismKind::Transvection { dominated, dominating, side },
            map,
        })
    }

    /// Conjugates the vertices of `component` by `vertex`; `component` must be
    /// a connected component of Γ ∖ st(vertex).
    pub fn partial_conjugation(g: &SimplicialGraph, vertex: usize, component: VertexSet) -> Result<Self, AutError> {
        if !star_complement_components(g, vertex)?.contains(&component) {
            return Err(AutError::NotAComponent(vertex));
        }
        let mut map = VertexMap::identity(g.vertex_count());
        for u in component.iter() {
            map.images[u] = Word::new(vec![Letter::pos(vertex), Letter::pos(u), Letter::neg(vertex)]);
        }
        Ok(RaagAutomorphism {
            kind: AutomorphismKind::PartialConjugation { vertex, component },
            map,
        })
    }

    pub fn kind(&self) -> &AutomorphismKind {
        &self.kind
    }

    pub fn map(&self) -> &VertexMap {
        &self.map
    }

    pub fn action(&self, v: usize) -> &Word {
        self.map.image(v)
    }

    pub fn describe<'a>(&'a self, g: &'a SimplicialGraph) -> impl fmt::Display + 'a {
        AutDisplay { aut: self, g }
    }
}

struct AutDisplay<'a> {
    aut: &'a RaagAutomorphism,
    g: &'a SimplicialGraph,
}

impl fmt::Display for AutDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.g;
        match &self.aut.kind {
            AutomorphismKind::Graph(p) => write!(f, "graph {}", p.display(g)),
            AutomorphismKind::Inversion(v) => write!(f, "inversion {}", g.label(*v)),
            AutomorphismKind::Transvection { dominated, dominating, side } => {
                let img = self.aut.action(*dominated).to_text(g);
                let side = match side {
                    Side::Right => "right",
                    Side::Left => "left",
                };
                write!(f, "transvection {side} {} -> {img}", g.label(*dominated))?;
                write!(f, " (dominated by {})", g.label(*dominating))
            }
            AutomorphismKind::PartialConjugation { vertex, component } => {
                let labels: Vec<_> = component.iter().map(|u| g.label(u)).collect();
                write!(f, "partial-conjugation {} on {{{}}}", g.label(*vertex), labels.join(","))
            }
        }
    }
}

/// Connected components of Γ ∖ st(v), in the indices of Γ.
pub fn star_complement_components(g: &SimplicialGraph, v: usize) -> Result<Vec<VertexSet>, AutError> {
    let star = g.star(v)?;
    let rest = VertexSet::new((0..g.vertex_count()).filter(|&u| !star.contains(u)));
    let sub = g.induced_subgraph(&rest)?;
    Ok(sub
        .connected_components()
        .into_iter()
        .map(|c| c.iter().map(|i| rest.as_slice()[i]).collect())
        .collect())
}

/// Laurence–Servatius generators: Aut(Γ) generators, all inversions, all
/// dominated transvections on both sides, and the partial conjugations at
/// vertices whose star separates Γ.
///
/// When Γ ∖ st(v) is connected the partial conjugation at `v` is inner and is
/// left out.
pub fn enumerate_laurence_generators(g: &SimplicialGraph) -> Vec<RaagAutomorphism> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for p in automorphism_group_generators(g) {
        out.push(RaagAutomorphism::graph_automorphism(g, p).expect("search returns automorphisms"));
    }
    for v in 0..n {
        out.push(RaagAutomorphism::inversion(g, v).expect("vertex in range"));
    }
    let d = domination_digraph(g);
    for (v, w) in d.arcs() {
        for side in [Side::Right, Side::Left] {
            out.push(RaagAutomorphism::transvection(g, v, w, side).expect("arc means domination"));
        }
    }
    for v in 0..n {
        let comps = star_complement_components(g, v).expect("vertex in range");
        if comps.len() >= 2 {
            for c in comps {
                out.push(RaagAutomorphism::partial_conjugation(g, v, c).expect("component of Γ ∖ st(v)"));
            }
        }
    }
    out
}

/// Image under φ: Aut(A(Γ)) → GL_n(Z); column `v` is the exponent vector of
/// the image of `v`.
pub fn abelianization_matrix(aut: &RaagAutomorphism) -> IntegerMatrix {
    aut.map.abelianization_matrix()
}

/// For an asymmetric Γ: in the height order basis, every transvection acts
/// by an upper unipotent matrix and every inversion by a ±1 diagonal matrix,
/// while partial conjugations act trivially.
pub fn verify_triangular_form(g: &SimplicialGraph) -> Result<bool, AutError> {
    if nontrivial_graph_automorphism(g).is_some() {
        return Err(AutError::HasGraphAutomorphism);
    }
    let order = height_order(g)?;
    Ok(enumerate_laurence_generators(g).iter().all(|aut| {
        let m = abelianization_matrix(aut).reorder(&order);
        match aut.kind() {
            AutomorphismKind::Transvection { .. } => m.is_upper_unipotent() && m.off_diagonal().len() == 1,
            AutomorphismKind::Inversion(_) => m.is_signed_diagonal(),
            AutomorphismKind::PartialConjugation { .. } => m.is_identity(),
            AutomorphismKind::Graph(p) => p.is_identity(),
        }
    }))
}

/// A certified finite nonabelian subgroup of Out(A(Γ)).
#[derive(Debug, Clone)]
pub struct FiniteNonabelianWitness {
    pub graph_automorphism: RaagAutomorphism,
    pub inversion: RaagAutomorphism,
    /// Order of the group generated by the two images under φ.
    pub order: usize,
    /// Orders of the two generators' matrices.
    pub generator_orders: (usize, usize),
    /// The two generator matrices fail to commute.
    pub nonabelian: bool,
}

/// A nontrivial graph automorphism σ and the inversion at a vertex σ moves,
/// together with the size of the signed permutation group their matrices
/// generate. `None` exactly when Γ is asymmetric.
pub fn finite_nonabelian_witness(g: &SimplicialGraph) -> Option<FiniteNonabelianWitness> {
    let sigma = nontrivial_graph_automorphism(g)?;
    let n = g.vertex_count();
    let moved = sigma.support()[0];
    let graph_automorphism = RaagAutomorphism::graph_automorphism(g, sigma).expect("search returns automorphisms");
    let inversion = RaagAutomorphism::inversion(g, moved).expect("vertex in range");
    let a = SignedPermutation::from_matrix(&abelianization_matrix(&graph_automorphism))
        .expect("permutation matrix");
    let b = SignedPermutation::from_matrix(&abelianization_matrix(&inversion)).expect("diagonal ±1 matrix");
    let nonabelian = a.compose(&b) != b.compose(&a);
    let generator_orders = (a.order(), b.order());
    let order = signed_permutation_closure(n, &[a, b]).len();
    Some(FiniteNonabelianWitness {
        graph_automorphism,
        inversion,
        order,
        generator_orders,
        nonabelian,
    })
}

/// Out(A(Γ)) has a finite nonabelian subgroup iff Γ has a nontrivial automorphism.
pub fn out_has_finite_nonabelian(g: &SimplicialGraph) -> bool {
    nontrivial_graph_automorphism(g).is_some()
}
