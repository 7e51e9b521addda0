use std::fmt;

use super::permutation::{Letter, StirlingPermutation};
use super::CombinatError;
use crate::composition::Composition;

/// Multiplicities `#(c, a)` for `1 <= a < c <= n`, stored as a dense triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InversionMultiset {
    n: usize,
    counts: Vec<u32>,
}

fn index(c: usize, a: usize) -> usize {
    debug_assert!(a >= 1 && a < c);
    (c - 1) * (c - 2) / 2 + (a - 1)
}

impl InversionMultiset {
    pub fn zero(n: usize) -> Self {
        Self { n, counts: vec![0; n * n.saturating_sub(1) / 2] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: usize, a: usize) -> u32 {
        self.counts[index(c, a)]
    }

    pub fn set(&mut self, c: usize, a: usize, value: u32) {
        self.counts[index(c, a)] = value;
    }

    /// `(c, a, #(c, a))` for every pair, `c` ascending then `a` ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (2..=self.n).flat_map(move |c| (1..c).map(move |a| (c, a, self.get(c, a))))
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&x| x as u64).sum()
    }

    /// Componentwise comparison.
    pub fn leq(&self, other: &Self) -> bool {
        self.n == other.n && self.counts.iter().zip(&other.counts).all(|(x, y)| x <= y)
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let counts = self.counts.iter().zip(&other.counts).map(|(x, y)| *x.min(y)).collect();
        Self { n: self.n, counts }
    }

    /// First violated `#(c, a) <= s_c`, if any.
    pub fn bound_violation(&self, s: &Composition) -> Option<(usize, usize)> {
        self.iter().find(|&(c, _, v)| v > s.get(c)).map(|(c, a, _)| (c, a))
    }

    /// First triple `a < b < c` with `#(b, a) > 0` and `#(c, a) < #(c, b)`, if any.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for c in 3..=self.n {
            for b in 2..c {
                for a in 1..b {
                    if self.get(b, a) > 0 && self.get(c, a) < self.get(c, b) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// `#(c, a)` summed over `c > a`: the number of letters larger than `a` before the `a`-block.
    pub fn letters_above_before(&self, a: usize) -> u32 {
        (a + 1..=self.n).map(|c| self.get(c, a)).sum()
    }
}

impl fmt::Display for InversionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(c, a, v)| format!("({c},{a}):{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `#_w(c, a)`: occurrences of `c` before the first `a`.
pub fn inversion_multiset(w: &StirlingPermutation) -> InversionMultiset {
    let n = w.n();
    let mut inv = InversionMultiset::zero(n);
    let mut seen = vec![0u32; n + 1];
    let mut started = vec![false; n + 1];
    for &x in w.word() {
        let a = x as usize;
        if !started[a] {
            started[a] = true;
            for c in a + 1..=n {
                inv.set(c, a, seen[c]);
            }
        }
        seen[a] += 1;
    }
    inv
}

/// The unique permutation with the given inversions.
///
/// Bounded transitive multisets can still fail to be realized; that case gets its own
/// error, separate from the bound and transitivity checks.
pub fn permutation_from_inversions(
    s: &Composition,
    inv: &InversionMultiset,
) -> Result<StirlingPermutation, CombinatError> {
    s.require_strict()?;
    let n = s.n();
    if inv.n() != n {
        return Err(CombinatError::InvalidWord(format!("multiset is over {} letters, s has {n}", inv.n())));
    }
    if let Some((c, a)) = inv.bound_violation(s) {
        return Err(CombinatError::OutOfBounds { c: c as Letter, a: a as Letter });
    }
    if let Some((a, b, c)) = inv.transitivity_violation() {
        return Err(CombinatError::NotTransitive { a: a as Letter, b: b as Letter, c: c as Letter });
    }
    let mut positions = vec![0u32; n + 1];
    for (a, p) in positions.iter_mut().enumerate().take(n).skip(1) {
        *p = inv.letters_above_before(a);
    }
    let w = StirlingPermutation::from_insertion_positions(s, &positions)?;
    if &inversion_multiset(&w) != inv {
        return Err(CombinatError::NonRealizable);
    }
    Ok(w)
}
