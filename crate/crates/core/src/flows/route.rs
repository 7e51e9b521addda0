use std::cmp::Ordering;
use std::fmt;

use super::FlowError;
use crate::combinat::Letter;
use crate::composition::Composition;

/// `R(k, t, δ)`: the route entering at level `k` through `e^k_t`, then taking
/// `e^i_{δ_i s_i}` for `i = k-1, ..., 1`.
///
/// `δ` is stored as a bitmask with bit `i - 1` holding `δ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Route {
    k: u8,
    t: u32,
    delta: u32,
}

impl Route {
    pub fn new(s: &Composition, k: usize, t: u32, delta: &[bool]) -> Result<Self, FlowError> {
        let n = s.n();
        if k == 0 || k > n + 1 {
            return Err(FlowError::InvalidRoute(format!("k = {k} outside 1..={}", n + 1)));
        }
        if t == 0 || t >= s.get(k) {
            return Err(FlowError::InvalidRoute(format!("t = {t} outside 1..={}", s.get(k) as i64 - 1)));
        }
        if delta.len() != k - 1 {
            return Err(FlowError::InvalidRoute(format!("δ has length {}, expected {}", delta.len(), k - 1)));
        }
        let mask = delta.iter().enumerate().fold(0u32, |m, (i, &b)| m | (b as u32) << i);
        Ok(Self::from_mask(k, t, mask))
    }

    pub(crate) fn from_mask(k: usize, t: u32, delta: u32) -> Self {
        debug_assert!(k >= 1 && (k == 1 || delta >> (k - 1) == 0) && (k > 1 || delta == 0));
        Self { k: k as u8, t, delta }
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `δ_i` for `1 <= i < k`.
    pub fn delta(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i < self.k());
        self.delta >> (i - 1) & 1 == 1
    }

    pub fn delta_mask(&self) -> u32 {
        self.delta
    }

    /// `(δ_1, ..., δ_{k-1})`.
    pub fn delta_vec(&self) -> Vec<bool> {
        (1..self.k()).map(|i| self.delta(i)).collect()
    }

    /// `t_c`: `t` for `c = k`, `δ_c s_c` below `k`.
    pub fn t_at(&self, s: &Composition, c: usize) -> u32 {
        if c == self.k() {
            self.t
        } else if self.delta(c) {
            s.get(c)
        } else {
            0
        }
    }

    /// Text key `"k:t:δ_1δ_2..."`.
    pub fn key(&self) -> String {
        let bits: String = (1..self.k()).map(|i| if self.delta(i) { '1' } else { '0' }).collect();
        format!("{}:{}:{}", self.k, self.t, bits)
    }

    pub fn parse_key(s: &Composition, key: &str) -> Result<Self, FlowError> {
        let bad = || FlowError::InvalidRoute(format!("malformed route key {key:?}"));
        let mut parts = key.split(':');
        let (Some(k), Some(t), Some(bits), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let k: usize = k.parse().map_err(|_| bad())?;
        let t: u32 = t.parse().map_err(|_| bad())?;
        let delta: Vec<bool> = bits
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<_, _>>()?;
        Route::new(s, k, t, &delta)
    }

    /// The extreme route `R(n+1, 1, (b)^n)`.
    pub fn extreme(n: usize, all_ones: bool) -> Self {
        let mask = if all_ones { (1u32 << n) - 1 } else { 0 };
        Self::from_mask(n + 1, 1, mask)
    }
}

/// Lexicographic on `(k, t, δ_1, ..., δ_{k-1})`.
impl Ord for Route {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.t)
            .cmp(&(other.k, other.t))
            .then_with(|| self.delta.reverse_bits().cmp(&other.delta.reverse_bits()))
    }
}

impl PartialOrd for Route {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<String> = (1..self.k()).map(|i| (self.delta(i) as u8).to_string()).collect();
        write!(f, "R({},{},({}))", self.k, self.t, bits.join(","))
    }
}

/// The route attached to a prefix `u` of a Stirling s-permutation.
///
/// With `t_a` the number of `a`s in `u`, `c` is the smallest letter with
/// `0 < t_c < s_c` (or `n + 1` with `t = 1`), and `δ_a = [t_a = s_a]` for `a < c`.
pub fn route_of_prefix(s: &Composition, u: &[Letter]) -> Route {
    let n = s.n();
    let mut counts = vec![0u32; n + 2];
    for &x in u {
        counts[x as usize] += 1;
    }
    counts[n + 1] = 1;
    let c = (1..=n).find(|&a| counts[a] > 0 && counts[a] < s.get(a)).unwrap_or(n + 1);
    let mask = (1..c).fold(0u32, |m, a| m | ((counts[a] == s.get(a)) as u32) << (a - 1));
    Route::from_mask(c, counts[c], mask)
}
