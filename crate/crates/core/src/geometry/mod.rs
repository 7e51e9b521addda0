//! Admissible height functions and the tropical realization they induce.

mod conflicts;
mod height;
mod linalg;
mod mixed;
mod realization;
mod tropical;

use thiserror::Error;

use crate::flows::FlowError;

pub use conflicts::{minimal_conflicts, ConflictCase, MinimalConflict};
pub use height::{
    conflict_margin, epsilon_bound, first_violation, height_epsilon, is_admissible, q, AdmissibleHeight,
    HeightFunction, Q,
};
pub use linalg::{determinant, rank};
pub use mixed::{ambient_summands, minkowski_volume, mixed_cell, MixedCell, Summand};
pub use realization::{
    default_orientation, edge_vector, hyperplane_sum, realize, support_facets, support_vertices,
    vertex_coordinates, CheckResult, EdgeVector, RealizedComplex, RealizedEdge, RealizedFace, SupportFacet,
};
pub use tropical::{region_equalities, tropical_polynomials, TropicalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),
    #[error("no height given for route {0}")]
    MissingHeight(String),
    #[error("height given for unknown route {0:?}")]
    UnknownRoute(String),
    #[error("height function is not admissible: minimal conflict {witness} has margin {margin}")]
    Inadmissible { witness: Box<MinimalConflict>, margin: Q },
    #[error("{1} does not cover {0}")]
    NotACover(String, String),
}

#[cfg(test)]
mod tests;
