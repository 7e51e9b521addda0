//! Stirling s-permutations, s-decreasing trees, inversions and the s-weak order.

mod faces;
mod inversions;
mod order;
mod permutation;
mod tree;

use thiserror::Error;

use crate::composition::CompositionError;

pub use faces::{faces, Face};
pub use inversions::{inversion_multiset, permutation_from_inversions, InversionMultiset};
pub use order::{
    add_ascents, bottom, dependent_pairs, interval, leq, meet, meet_is_componentwise, top, Cover, HasseDiagram,
};
pub use permutation::{
    avoids_121, enumerate_permutations, enumerate_permutations_within, format_word, parse_word, Letter,
    LetterPair, StirlingPermutation,
};
pub use tree::{permutation_from_tree, tree_from_permutation, Child, SDecreasingTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("({0},{1}) is not an ascent")]
    NotAnAscent(Letter, Letter),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("inversion count #({c},{a}) exceeds s_{c}")]
    OutOfBounds { c: Letter, a: Letter },
    #[error("inversions are not transitive at {a} < {b} < {c}")]
    NotTransitive { a: Letter, b: Letter, c: Letter },
    #[error("inversion multiset is transitive but realized by no Stirling permutation")]
    NonRealizable,
    #[error("{count} permutations exceed the enumeration budget of {limit}")]
    BudgetExceeded { count: String, limit: u64 },
}
