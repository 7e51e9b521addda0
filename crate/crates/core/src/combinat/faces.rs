use std::fmt;

use super::inversions::inversion_multiset;
use super::order::add_ascents;
use super::permutation::{enumerate_permutations, format_word, LetterPair, StirlingPermutation};
use super::CombinatError;
use crate::composition::Composition;

/// A face `(w, A)` of the s-permutahedron: the interval `[w, w + A]` for `A` a subset of
/// the ascents of `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub w: StirlingPermutation,
    /// Sorted.
    pub ascents: Vec<LetterPair>,
}

impl Face {
    pub fn new(w: StirlingPermutation, mut ascents: Vec<LetterPair>) -> Result<Self, CombinatError> {
        ascents.sort_unstable();
        ascents.dedup();
        let own = w.ascents();
        if let Some(&(a, c)) = ascents.iter().find(|p| !own.contains(p)) {
            return Err(CombinatError::NotAnAscent(a, c));
        }
        Ok(Self { w, ascents })
    }

    pub fn dim(&self) -> usize {
        self.ascents.len()
    }

    /// `w + A`.
    pub fn top(&self) -> StirlingPermutation {
        add_ascents(&self.w, &self.ascents).expect("ascents validated at construction")
    }

    /// Interval containment `[w, w+A] ⊆ [w', w'+A']`.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        inversion_multiset(&other.w).leq(&inversion_multiset(&self.w))
            && inversion_multiset(&self.top()).leq(&inversion_multiset(&other.top()))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.ascents.iter().map(|&(a, c)| format_word(&[a, c])).collect();
        write!(f, "({}, {{{}}})", self.w, a.join(","))
    }
}

/// Every face `(w, A)`, ordered by `w` and then by `A` as a sorted list.
pub fn faces(s: &Composition) -> Result<Vec<Face>, CombinatError> {
    let mut out = Vec::new();
    for w in enumerate_permutations(s)? {
        let asc = w.ascents();
        let mut batch: Vec<Face> = (0u32..1 << asc.len())
            .map(|mask| {
                let a = asc.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                Face { w: w.clone(), ascents: a }
            })
            .collect();
        batch.sort();
        out.extend(batch);
    }
    Ok(out)
}
