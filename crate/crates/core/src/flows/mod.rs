//! The s-oruga graph, its routes, coherence, the DKK cliques and integer flows.

mod clique;
mod coherence;
mod count;
mod flow;
mod graph;
mod inequalities;
mod route;

use thiserror::Error;

use crate::combinat::CombinatError;
use crate::composition::CompositionError;

pub use clique::{
    clique_of_permutation, dual_graph, face_clique, is_interior, maximal_interior_cliques, permutation_of_clique,
    prefix_routes, Clique,
};
pub use coherence::{coherent, conflicts, is_clique, resolvents, Conflict};
pub use count::{binomial, count_integer_flows, enumerate_integer_flows};
pub use flow::{
    flow_of_clique, flow_of_permutation, permutation_from_flow, source_total, tree_from_flow, IntegerFlow,
};
pub use graph::{Edge, EdgeKind, OrugaGraph, Vertex};
pub use inequalities::{route_inequalities, RouteInequality};
pub use route::{route_of_prefix, Route};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("invalid flow: {0}")]
    InvalidFlow(String),
    #[error("routes are not pairwise coherent")]
    NotAClique,
    #[error("not a maximal clique of the triangulation")]
    NotMaximalClique,
}

#[cfg(test)]
mod tests;
