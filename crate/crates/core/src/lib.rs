//! Algorithms for right-angled Artin groups A(Γ) and the graphs Γ that
//! define them.
//!
//! * [`graph`]: simplicial graphs, complements, links and stars, components.
//! * [`words`]: piling normal forms; word, word-choice, geodesic-length and
//!   conjugacy problems.
//! * [`join`]: maximal join decomposition (direct product splitting).
//! * [`automorphisms`]: domination, Laurence generators, the abelianization
//!   action, and certificates for the graph-automorphism / finite-subgroup
//!   correspondence.
//! * [`membership`]: fiber (exponent-sum), bounded-search and standard
//!   subgroup membership.
//! * [`sharing`]: secret sharing through join-factor counts.
//! * [`dictionary`]: exact solvers for graph problems with their group
//!   meaning.

pub mod automorphisms;
pub mod catalog;
pub mod dictionary;
pub mod graph;
pub mod join;
pub mod matrix;
pub mod membership;
pub mod sharing;
mod urns;
pub mod words;

pub use automorphisms::{AutError, Permutation, RaagAutomorphism};
pub use graph::{parse_graph, GraphError, SimplicialGraph, VertexSet};
pub use join::{factor_count, maximal_join_decomposition, JoinDecomposition, JoinError};
pub use matrix::IntegerMatrix;
pub use words::{ArtinGroup, Letter, Sign, Word, WordError};
pub use dictionary::DictionaryAnswer;
pub use membership::{MembershipError, SubgroupSpec};
pub use sharing::{SchemeParams, Share, ShareError};
