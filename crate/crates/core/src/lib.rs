//! Stirling s-permutations and the DKK triangulation of the s-oruga flow polytope,
//! with a tropical realization of the s-permutahedron.
//!
//! - [`combinat`]: words, inversions, the weak order, faces and s-decreasing trees.
//! - [`flows`]: the oruga graph, routes, coherence, cliques and integer flows.
//! - [`geometry`]: admissible heights and the realization they induce.
//! - [`enumeration`]: polynomials, Ehrhart series, shellings and Lidskii volumes.
//! - [`cli`] and [`verify`] back the `oruga` binary.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod combinat;
pub mod composition;
pub mod enumeration;
pub mod flows;
pub mod geometry;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod verify;
