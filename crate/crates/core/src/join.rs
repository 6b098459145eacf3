//! Maximal join decomposition of Γ, equivalently the finest splitting of
//! A(Γ) as a direct product of standard subgroups.
//!
//! The maximal join factors of Γ are exactly the vertex sets of the
//! connected components of the complement graph.

use thiserror::Error;

use crate::graph::{SimplicialGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinError {
    #[error("the empty graph has no join decomposition")]
    EmptyGraph,
}

/// Factors of the maximal join decomposition, ordered by least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinDecomposition {
    factors: Vec<VertexSet>,
}

impl JoinDecomposition {
    pub fn factors(&self) -> &[VertexSet] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor containing `v`.
    pub fn factor_of(&self, v: usize) -> Option<usize> {
        self.factors.iter().position(|f| f.contains(v))
    }
}

pub fn maximal_join_decomposition(g: &SimplicialGraph) -> Result<JoinDecomposition, JoinError> {
    if g.is_empty() {
        return Err(JoinError::EmptyGraph);
    }
    Ok(JoinDecomposition {
        factors: g.complement().connected_components(),
    })
}

/// Same count as `maximal_join_decomposition(g)?.len()`, in memory linear in
/// the vertex count.
pub fn factor_count(g: &SimplicialGraph) -> Result<usize, JoinError> {
    if g.is_empty() {
        return Err(JoinError::EmptyGraph);
    }
    Ok(g.complement().component_count())
}

/// A(Γ) splits as a nontrivial direct product iff Γ is a nontrivial join.
pub fn is_direct_product(g: &SimplicialGraph) -> Result<bool, JoinError> {
    factor_count(g).map(|m| m >= 2)
}
