use std::collections::{BTreeSet, HashMap, VecDeque};

use super::inversions::{inversion_multiset, permutation_from_inversions};
use super::permutation::{enumerate_permutations, LetterPair, StirlingPermutation};
use super::CombinatError;
use crate::composition::Composition;

/// `w1 <= w2` in the s-weak order.
pub fn leq(w1: &StirlingPermutation, w2: &StirlingPermutation) -> bool {
    inversion_multiset(w1).leq(&inversion_multiset(w2))
}

/// Greatest lower bound in the s-weak order.
///
/// When the componentwise minimum of the two inversion multisets is realizable it is
/// the answer. Otherwise the meet is found by climbing covers from the bottom element
/// while staying below both arguments; the lattice property makes the climb end at the
/// unique maximal common lower bound.
pub fn meet(w1: &StirlingPermutation, w2: &StirlingPermutation) -> Result<StirlingPermutation, CombinatError> {
    let s = w1.composition();
    if w2.composition() != s {
        return Err(CombinatError::InvalidWord(format!("{w1} and {w2} have different compositions")));
    }
    let (i1, i2) = (inversion_multiset(w1), inversion_multiset(w2));
    match permutation_from_inversions(&s, &i1.componentwise_min(&i2)) {
        Ok(w) => return Ok(w),
        Err(CombinatError::NonRealizable) | Err(CombinatError::NotTransitive { .. }) => {}
        Err(e) => return Err(e),
    }
    let mut cur = bottom(&s);
    'climb: loop {
        for asc in cur.ascents() {
            let next = cur.transpose(asc)?;
            let inv = inversion_multiset(&next);
            if inv.leq(&i1) && inv.leq(&i2) {
                cur = next;
                continue 'climb;
            }
        }
        return Ok(cur);
    }
}

/// Whether the componentwise minimum of the inversion multisets is realizable.
pub fn meet_is_componentwise(w1: &StirlingPermutation, w2: &StirlingPermutation) -> bool {
    let s = w1.composition();
    let m = inversion_multiset(w1).componentwise_min(&inversion_multiset(w2));
    permutation_from_inversions(&s, &m).is_ok()
}

/// `1^{s_1} 2^{s_2} ... n^{s_n}`.
pub fn bottom(s: &Composition) -> StirlingPermutation {
    let word = (1..=s.n()).flat_map(|i| std::iter::repeat_n(i as u8, s.get(i) as usize)).collect();
    StirlingPermutation::from_word_unchecked(word)
}

/// `n^{s_n} ... 1^{s_1}`.
pub fn top(s: &Composition) -> StirlingPermutation {
    let word = (1..=s.n()).rev().flat_map(|i| std::iter::repeat_n(i as u8, s.get(i) as usize)).collect();
    StirlingPermutation::from_word_unchecked(word)
}

/// `w + A`: transposes the ascents in `A` together.
///
/// Each A-dependent pair `(a, c)` gains one inversion; the result is rebuilt from the
/// new multiset.
pub fn add_ascents(w: &StirlingPermutation, ascents: &[LetterPair]) -> Result<StirlingPermutation, CombinatError> {
    let own: BTreeSet<LetterPair> = w.ascents().into_iter().collect();
    for &(a, c) in ascents {
        if !own.contains(&(a, c)) {
            return Err(CombinatError::NotAnAscent(a, c));
        }
    }
    if ascents.is_empty() {
        return Ok(w.clone());
    }
    let set: BTreeSet<LetterPair> = ascents.iter().copied().collect();
    let s = w.composition();
    let mut inv = inversion_multiset(w);
    for (a, c) in dependent_pairs(w, &s, &set) {
        let (c, a) = (c as usize, a as usize);
        inv.set(c, a, inv.get(c, a) + 1);
    }
    permutation_from_inversions(&s, &inv)
}

/// The A-dependent pairs `(a, c)`, ascending.
pub fn dependent_pairs(w: &StirlingPermutation, s: &Composition, set: &BTreeSet<LetterPair>) -> Vec<LetterPair> {
    let n = s.n();
    let word = w.word();
    let blocks = w.blocks();
    let inv = inversion_multiset(w);
    let contains = |outer: usize, inner: usize| blocks[outer].0 <= blocks[inner].0 && blocks[inner].1 <= blocks[outer].1;
    let mut out = Vec::new();
    for a in 1..=n {
        for c in a + 1..=n {
            if inv.get(c, a) >= s.get(c) {
                continue;
            }
            let mut b = (a..c).rev().find(|&b| contains(b, a)).expect("the a-block contains itself");
            loop {
                let next = blocks[b].1 + 1;
                let Some(&x) = word.get(next) else { break };
                let x = x as usize;
                if !set.contains(&(b as u8, x as u8)) || x > c {
                    break;
                }
                if x == c {
                    out.push((a as u8, c as u8));
                    break;
                }
                if blocks[x].0 != next {
                    break;
                }
                b = x;
            }
        }
    }
    out
}

/// One arc `from -> to` of the Hasse diagram, labeled by the transposed ascent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub ascent: LetterPair,
}

/// The Hasse diagram of the s-weak order; nodes in lexicographic order.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    pub nodes: Vec<StirlingPermutation>,
    pub covers: Vec<Cover>,
    index: HashMap<StirlingPermutation, usize>,
}

impl HasseDiagram {
    pub fn new(s: &Composition) -> Result<Self, CombinatError> {
        Self::from_nodes(enumerate_permutations(s)?)
    }

    pub fn from_nodes(nodes: Vec<StirlingPermutation>) -> Result<Self, CombinatError> {
        let index: HashMap<_, _> = nodes.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut covers = Vec::new();
        for (i, w) in nodes.iter().enumerate() {
            for asc in w.ascents() {
                let to = index[&w.transpose(asc)?];
                covers.push(Cover { from: i, to, ascent: asc });
            }
        }
        covers.sort_unstable();
        Ok(Self { nodes, covers, index })
    }

    pub fn index_of(&self, w: &StirlingPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Unordered cover pairs `(min, max)` of node indices, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.covers.iter().map(|c| (c.from.min(c.to), c.from.max(c.to))).collect();
        e.sort_unstable();
        e
    }
}

/// The interval `[lo, hi]`, lexicographically sorted. Empty when `lo` is not below `hi`.
pub fn interval(lo: &StirlingPermutation, hi: &StirlingPermutation) -> Vec<StirlingPermutation> {
    let top = inversion_multiset(hi);
    if !inversion_multiset(lo).leq(&top) {
        return Vec::new();
    }
    let mut seen: BTreeSet<StirlingPermutation> = BTreeSet::new();
    let mut queue = VecDeque::from([lo.clone()]);
    seen.insert(lo.clone());
    while let Some(w) = queue.pop_front() {
        for asc in w.ascents() {
            let next = w.transpose(asc).expect("ascent");
            if !seen.contains(&next) && inversion_multiset(&next).leq(&top) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::parse_word;

    fn perm(text: &str) -> StirlingPermutation {
        StirlingPermutation::from_word(parse_word(text).unwrap()).unwrap()
    }

    #[test]
    fn worked_add_ascents() {
        let w = perm("33725455716");
        let set: BTreeSet<LetterPair> = [(2, 5), (5, 7), (1, 6)].into_iter().collect();
        let s = w.composition();
        assert_eq!(dependent_pairs(&w, &s, &set), vec![(1, 6), (2, 5), (2, 7), (4, 7), (5, 7)]);
        assert_eq!(add_ascents(&w, &[(2, 5), (5, 7), (1, 6)]).unwrap().to_string(), "33775245561");
        assert_eq!(add_ascents(&w, &[(7, 2)]), Err(CombinatError::NotAnAscent(7, 2)));
    }

    #[test]
    fn single_ascent_is_transposition() {
        let s = Composition::new(vec![2, 1, 2]).unwrap();
        for w in enumerate_permutations(&s).unwrap() {
            for asc in w.ascents() {
                assert_eq!(add_ascents(&w, &[asc]).unwrap(), w.transpose(asc).unwrap());
            }
        }
    }

    #[test]
    fn hasse_small() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        let h = HasseDiagram::new(&s).unwrap();
        assert_eq!(h.nodes.len(), 8);
        assert_eq!(h.covers.len(), 9);
        let s = Composition::new(vec![2, 2]).unwrap();
        let h = HasseDiagram::new(&s).unwrap();
        let arcs: Vec<_> = h.covers.iter().map(|c| (h.nodes[c.from].to_string(), h.nodes[c.to].to_string())).collect();
        assert_eq!(arcs, [("1122".to_string(), "2112".to_string()), ("2112".to_string(), "2211".to_string())]);
    }

    #[test]
    fn meets() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        let all = enumerate_permutations(&s).unwrap();
        for x in &all {
            for y in &all {
                let m = meet(x, y).unwrap();
                let lower: Vec<_> = all.iter().filter(|z| leq(z, x) && leq(z, y)).collect();
                assert!(lower.contains(&&m));
                assert!(lower.iter().all(|z| leq(z, &m)), "meet({x}, {y}) = {m}");
            }
        }
        // The classical example where the componentwise minimum is not realizable.
        assert!(!meet_is_componentwise(&perm("312"), &perm("231")));
        assert_eq!(meet(&perm("312"), &perm("231")).unwrap().to_string(), "123");
    }

    #[test]
    fn intervals() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        assert_eq!(interval(&bottom(&s), &top(&s)).len(), 8);
        assert_eq!(interval(&perm("3221"), &perm("1223")), Vec::<StirlingPermutation>::new());
    }
}
