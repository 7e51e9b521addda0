use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::CombinatError;
use crate::composition::Composition;

pub type Letter = u8;

/// An ascent `(a, c)` or descent `(c, a)` pair of letters.
pub type LetterPair = (Letter, Letter);

/// A Stirling s-permutation: a word on `1^{s_1} ... n^{s_n}` avoiding the pattern `121`.
///
/// The word determines the (strict) composition, so only the letters are stored.
/// Ordering is lexicographic on the word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingPermutation {
    word: Vec<Letter>,
}

/// Whether no letter `j > i` sits between two copies of `i`.
pub fn avoids_121(word: &[Letter]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut first = vec![usize::MAX; max + 1];
    let mut last = vec![0usize; max + 1];
    for (p, &x) in word.iter().enumerate() {
        let x = x as usize;
        first[x] = first[x].min(p);
        last[x] = p;
    }
    (1..=max).all(|a| first[a] == usize::MAX || word[first[a]..=last[a]].iter().all(|&x| x as usize <= a))
}

impl StirlingPermutation {
    /// Validates `word` against `s`.
    pub fn new(s: &Composition, word: Vec<Letter>) -> Result<Self, CombinatError> {
        s.require_strict()?;
        let n = s.n();
        let mut counts = vec![0u32; n + 1];
        for &x in &word {
            if x == 0 || x as usize > n {
                return Err(CombinatError::InvalidWord(format!("letter {x} outside 1..={n}")));
            }
            counts[x as usize] += 1;
        }
        for i in 1..=n {
            if counts[i] != s.get(i) {
                return Err(CombinatError::InvalidWord(format!(
                    "letter {i} occurs {} times, expected {}",
                    counts[i],
                    s.get(i)
                )));
            }
        }
        if !avoids_121(&word) {
            return Err(CombinatError::InvalidWord("word contains the pattern 121".into()));
        }
        Ok(Self { word })
    }

    /// Validates `word` and infers its composition from the letter counts.
    pub fn from_word(word: Vec<Letter>) -> Result<Self, CombinatError> {
        let s = composition_of_word(&word)?;
        Self::new(&s, word)
    }

    /// Parses `"2123"` or, for `n >= 10`, dot-separated letters like `"10.3.3"`.
    pub fn parse(s: &Composition, text: &str) -> Result<Self, CombinatError> {
        Self::new(s, parse_word(text)?)
    }

    pub(crate) fn from_word_unchecked(word: Vec<Letter>) -> Self {
        debug_assert!(avoids_121(&word));
        Self { word }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The largest letter.
    pub fn n(&self) -> usize {
        self.word.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn composition(&self) -> Composition {
        composition_of_word(&self.word).expect("validated at construction")
    }

    /// The prefix of length `i`.
    pub fn prefix(&self, i: usize) -> &[Letter] {
        &self.word[..i]
    }

    /// `(first, last)` position of every letter, indexed by letter (entry 0 unused).
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut b = vec![(usize::MAX, 0usize); n + 1];
        for (p, &x) in self.word.iter().enumerate() {
            let e = &mut b[x as usize];
            e.0 = e.0.min(p);
            e.1 = p;
        }
        b
    }

    /// Pairs `(a, c)` with `a < c` and `ac` a factor of the word, sorted.
    pub fn ascents(&self) -> Vec<LetterPair> {
        let mut v: Vec<LetterPair> =
            self.word.windows(2).filter(|p| p[0] < p[1]).map(|p| (p[0], p[1])).collect();
        v.sort_unstable();
        v
    }

    /// Pairs `(c, a)` with `a < c` and `ca` a factor of the word, sorted.
    pub fn descents(&self) -> Vec<LetterPair> {
        let mut v: Vec<LetterPair> =
            self.word.windows(2).filter(|p| p[0] > p[1]).map(|p| (p[0], p[1])).collect();
        v.sort_unstable();
        v
    }

    /// Position `i` such that the ascent `(a, c)` sits at `word[i-1], word[i]`,
    /// i.e. the prefix of length `i` is `u_1 B_a`.
    pub fn ascent_position(&self, (a, c): LetterPair) -> Option<usize> {
        self.word.windows(2).position(|p| p[0] == a && p[1] == c).map(|p| p + 1)
    }

    /// Moves the `a`-block past the following `c`: `u_1 B_a c u_2 -> u_1 c B_a u_2`.
    pub fn transpose(&self, (a, c): LetterPair) -> Result<Self, CombinatError> {
        let end = self.ascent_position((a, c)).filter(|_| a < c).ok_or(CombinatError::NotAnAscent(a, c))?;
        let start = self.word.iter().position(|&x| x == a).expect("a occurs");
        let mut word = Vec::with_capacity(self.word.len());
        word.extend_from_slice(&self.word[..start]);
        word.push(c);
        word.extend_from_slice(&self.word[start..end]);
        word.extend_from_slice(&self.word[end + 1..]);
        Ok(Self { word })
    }

    /// The permutation obtained by inserting, for `i = n-1, ..., 1`, the block `i^{s_i}`
    /// after `positions[i]` letters of the word built so far (which contains only letters `> i`).
    ///
    /// `positions` is indexed by letter; entries `0` and `n` are ignored.
    pub fn from_insertion_positions(s: &Composition, positions: &[u32]) -> Result<Self, CombinatError> {
        s.require_strict()?;
        let n = s.n();
        if positions.len() != n + 1 {
            return Err(CombinatError::InvalidWord(format!(
                "expected {} insertion positions, got {}",
                n + 1,
                positions.len()
            )));
        }
        let mut word: Vec<Letter> = vec![n as Letter; s.get(n) as usize];
        for i in (1..n).rev() {
            let p = positions[i] as usize;
            if p > word.len() {
                return Err(CombinatError::InvalidWord(format!(
                    "insertion position {p} for letter {i} exceeds {}",
                    word.len()
                )));
            }
            let block = std::iter::repeat_n(i as Letter, s.get(i) as usize);
            word.splice(p..p, block);
        }
        Ok(Self { word })
    }
}

impl fmt::Display for StirlingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

/// Concatenated digits when every letter is below 10, dot-separated otherwise.
pub fn format_word(word: &[Letter]) -> String {
    if word.iter().all(|&x| x < 10) {
        word.iter().map(|x| char::from(b'0' + x)).collect()
    } else {
        word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")
    }
}

pub fn parse_word(text: &str) -> Result<Vec<Letter>, CombinatError> {
    let text = text.trim();
    let bad = || CombinatError::InvalidWord(format!("cannot parse word {text:?}"));
    if text.contains('.') {
        text.split('.').map(|t| t.parse::<Letter>().map_err(|_| bad())).collect()
    } else {
        text.chars().map(|ch| ch.to_digit(10).map(|d| d as Letter).ok_or_else(bad)).collect()
    }
}

fn composition_of_word(word: &[Letter]) -> Result<Composition, CombinatError> {
    let n = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; n];
    for &x in word {
        if x == 0 {
            return Err(CombinatError::InvalidWord("letter 0".into()));
        }
        counts[x as usize - 1] += 1;
    }
    Ok(Composition::new(counts)?)
}

/// All Stirling s-permutations in lexicographic order.
pub fn enumerate_permutations(s: &Composition) -> Result<Vec<StirlingPermutation>, CombinatError> {
    enumerate_permutations_within(s, u64::MAX)
}

/// As [`enumerate_permutations`], refusing when `|W_s|` exceeds `limit`.
pub fn enumerate_permutations_within(
    s: &Composition,
    limit: u64,
) -> Result<Vec<StirlingPermutation>, CombinatError> {
    s.require_strict()?;
    let count = s.count_formula();
    if count > BigUint::from(limit) {
        return Err(CombinatError::BudgetExceeded { count: count.to_string(), limit });
    }
    let n = s.n();
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut used = vec![0u32; n + 1];
    let mut word = Vec::with_capacity(s.size() as usize);
    extend(s, &mut used, &mut word, &mut out);
    Ok(out)
}

// A letter may be placed iff every started-but-unfinished letter is at least as large.
fn extend(s: &Composition, used: &mut [u32], word: &mut Vec<Letter>, out: &mut Vec<StirlingPermutation>) {
    if word.len() == s.size() as usize {
        out.push(StirlingPermutation { word: word.clone() });
        return;
    }
    let n = s.n();
    let smallest_open = (1..=n).find(|&b| used[b] > 0 && used[b] < s.get(b)).unwrap_or(n);
    for a in 1..=smallest_open {
        if used[a] == s.get(a) {
            continue;
        }
        used[a] += 1;
        word.push(a as Letter);
        extend(s, used, word, out);
        word.pop();
        used[a] -= 1;
    }
}
