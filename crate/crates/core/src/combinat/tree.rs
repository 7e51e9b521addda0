use super::permutation::{Letter, LetterPair, StirlingPermutation};
use super::CombinatError;
use crate::composition::Composition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Child {
    Leaf,
    Node(Letter),
}

/// A planar rooted tree on internal nodes `1..=n`, rooted at `n`, where node `i` has
/// `s_i + 1` children and every descendant of `i` has a smaller label.
///
/// Weak compositions are allowed (a node with `s_i = 0` has one child).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SDecreasingTree {
    s: Composition,
    /// `children[i - 1]` lists the children of node `i` from left to right.
    children: Vec<Vec<Child>>,
}

impl SDecreasingTree {
    pub fn new(s: &Composition, children: Vec<Vec<Child>>) -> Result<Self, CombinatError> {
        let n = s.n();
        let bad = |m: String| Err(CombinatError::MalformedTree(m));
        if children.len() != n {
            return bad(format!("expected {n} child lists, got {}", children.len()));
        }
        let mut parent_seen = vec![false; n + 1];
        for (i, list) in children.iter().enumerate() {
            let label = i + 1;
            if list.len() != s.get(label) as usize + 1 {
                return bad(format!("node {label} has {} children, expected {}", list.len(), s.get(label) + 1));
            }
            for ch in list {
                if let Child::Node(x) = *ch {
                    let x = x as usize;
                    if x == 0 || x >= label {
                        return bad(format!("node {label} has child {x}"));
                    }
                    if parent_seen[x] {
                        return bad(format!("node {x} has two parents"));
                    }
                    parent_seen[x] = true;
                }
            }
        }
        if let Some(x) = (1..n).find(|&x| !parent_seen[x]) {
            return bad(format!("node {x} is detached"));
        }
        Ok(Self { s: s.clone(), children })
    }

    pub fn composition(&self) -> &Composition {
        &self.s
    }

    pub fn children(&self, node: usize) -> &[Child] {
        &self.children[node - 1]
    }

    pub fn root(&self) -> usize {
        self.s.n()
    }

    /// In-order reading: `word(T_0) i word(T_1) i ... i word(T_{s_i})`.
    pub fn word(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.s.size() as usize);
        self.read(self.root(), &mut out);
        out
    }

    fn read(&self, node: usize, out: &mut Vec<Letter>) {
        for (j, ch) in self.children(node).iter().enumerate() {
            if j > 0 {
                out.push(node as Letter);
            }
            if let Child::Node(x) = *ch {
                self.read(x as usize, out);
            }
        }
    }

    /// For every node, the path from the root as `(ancestor, child index)` pairs.
    fn paths(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.s.n();
        let mut paths = vec![Vec::new(); n + 1];
        let mut stack = vec![self.root()];
        while let Some(v) = stack.pop() {
            for (j, ch) in self.children(v).iter().enumerate() {
                if let Child::Node(x) = *ch {
                    let mut p = paths[v].clone();
                    p.push((v, j));
                    paths[x as usize] = p;
                    stack.push(x as usize);
                }
            }
        }
        paths
    }

    /// `#_T(c, a)` computed from the tree shape: 0 if `a` is left of `c`, `i` if `a` lies in
    /// the `i`-th subtree of `c`, `s_c` if `a` is right of `c`.
    pub fn inversion_count(&self, c: usize, a: usize) -> u32 {
        let paths = self.paths();
        self.inversion_count_with(&paths, c, a)
    }

    fn inversion_count_with(&self, paths: &[Vec<(usize, usize)>], c: usize, a: usize) -> u32 {
        let (pa, pc) = (&paths[a], &paths[c]);
        if let Some(&(_, i)) = pa.iter().find(|(anc, _)| *anc == c) {
            return i as u32;
        }
        let split = pa.iter().zip(pc.iter()).position(|(x, y)| x != y);
        match split {
            Some(k) if pa[k].1 < pc[k].1 => 0,
            Some(_) => self.s.get(c),
            // c is an ancestor-free prefix of a's path: c is an ancestor, handled above
            None => unreachable!("a < c so a cannot be an ancestor of c"),
        }
    }

    /// Index of the subtree of `b` containing `a`, if `a` descends from `b`.
    fn subtree_index(paths: &[Vec<(usize, usize)>], b: usize, a: usize) -> Option<usize> {
        paths[a].iter().find(|(anc, _)| *anc == b).map(|&(_, i)| i)
    }

    /// Tree-side ascents `(a, c)`.
    pub fn ascents(&self) -> Vec<LetterPair> {
        let paths = self.paths();
        let n = self.s.n();
        let mut out = Vec::new();
        for a in 1..=n {
            for c in a + 1..=n {
                let Some(i) = Self::subtree_index(&paths, c, a) else { continue };
                if i >= self.s.get(c) as usize {
                    continue;
                }
                let between_ok = (a + 1..c).all(|b| match Self::subtree_index(&paths, b, a) {
                    Some(j) => j == self.s.get(b) as usize,
                    None => true,
                });
                let last_is_leaf = self.s.get(a) == 0 || self.children(a).last() == Some(&Child::Leaf);
                if between_ok && last_is_leaf {
                    out.push((a as Letter, c as Letter));
                }
            }
        }
        out
    }

    /// Tree-side descents `(c, a)`.
    pub fn descents(&self) -> Vec<LetterPair> {
        let paths = self.paths();
        let n = self.s.n();
        let mut out = Vec::new();
        for c in 2..=n {
            for a in 1..c {
                let Some(i) = Self::subtree_index(&paths, c, a) else { continue };
                if i == 0 {
                    continue;
                }
                let between_ok = (a + 1..c).all(|b| match Self::subtree_index(&paths, b, a) {
                    Some(j) => j == 0,
                    None => true,
                });
                let first_is_leaf = self.s.get(a) == 0 || self.children(a).first() == Some(&Child::Leaf);
                if between_ok && first_is_leaf {
                    out.push((c as Letter, a as Letter));
                }
            }
        }
        out
    }

    /// Leaves from left to right, each as `(parent, child index)`.
    pub fn leaves(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.collect_leaves(self.root(), &mut out);
        out
    }

    fn collect_leaves(&self, node: usize, out: &mut Vec<(usize, usize)>) {
        for (j, ch) in self.children(node).iter().enumerate() {
            match *ch {
                Child::Leaf => out.push((node, j)),
                Child::Node(x) => self.collect_leaves(x as usize, out),
            }
        }
    }

    /// Grows a tree by attaching node `label` (with `s_label + 1` leaf children) at leaf
    /// number `leaf` in left-to-right order.
    pub(crate) fn attach(&mut self, label: usize, leaf: usize) -> Result<(), CombinatError> {
        let leaves = self.leaves();
        let &(parent, j) = leaves
            .get(leaf)
            .ok_or_else(|| CombinatError::MalformedTree(format!("leaf {leaf} out of {} leaves", leaves.len())))?;
        self.children[parent - 1][j] = Child::Node(label as Letter);
        self.children[label - 1] = vec![Child::Leaf; self.s.get(label) as usize + 1];
        Ok(())
    }

    /// Node `n` alone, other nodes pending; completed by [`Self::attach`].
    pub(crate) fn root_only(s: &Composition) -> Self {
        let n = s.n();
        let mut children = vec![Vec::new(); n];
        children[n - 1] = vec![Child::Leaf; s.get(n) as usize + 1];
        Self { s: s.clone(), children }
    }
}

/// The s-decreasing tree whose in-order reading is `w`.
pub fn tree_from_permutation(w: &StirlingPermutation) -> SDecreasingTree {
    let s = w.composition();
    let mut children = vec![Vec::new(); s.n()];
    let root = build(w.word(), &mut children);
    debug_assert_eq!(root, s.n());
    SDecreasingTree::new(&s, children).expect("Stirling permutations read off valid trees")
}

fn build(segment: &[Letter], children: &mut [Vec<Child>]) -> usize {
    let m = *segment.iter().max().expect("non-empty segment");
    let list = segment
        .split(|&x| x == m)
        .map(|part| if part.is_empty() { Child::Leaf } else { Child::Node(build(part, children) as Letter) })
        .collect();
    children[m as usize - 1] = list;
    m as usize
}

pub fn permutation_from_tree(t: &SDecreasingTree) -> Result<StirlingPermutation, CombinatError> {
    StirlingPermutation::new(t.composition(), t.word())
}
