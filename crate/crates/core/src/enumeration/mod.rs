//! Counting: Eulerian, f- and h-polynomials, Ehrhart h*, shellings, Lidskii formulas
//! and Gale orders.

mod counting;
mod ehrhart;
mod gale;
mod lidskii;
mod polynomial;
mod shelling;

use thiserror::Error;

use crate::composition::CompositionError;
use crate::flows::FlowError;

pub use counting::{ascent_polynomial, eulerian_polynomial, f_polynomial, h_polynomial};
pub use ehrhart::{ehrhart_samples, h_star_via_ehrhart, interpolate};
pub use gale::{gale_leq, gale_order, gale_piece_sizes, GaleOrder, GalePieces};
pub use lidskii::{
    dominating_compositions, generalized_binomial, lidskii_flow_factor, lidskii_flow_factor_dp, lidskii_sum,
    lidskii_terms, multichoose, LidskiiTerm, LidskiiVariant,
};
pub use polynomial::IntPolynomial;
pub use shelling::{random_linear_extension, verify_shelling, ShellingReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error("not a linear extension of the s-weak order: {0}")]
    NotLinearExtension(String),
    #[error("Ehrhart interpolation is inconsistent: {0}")]
    Interpolation(String),
}
