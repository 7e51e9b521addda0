//! Compositions `s = (s_1, ..., s_n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

/// Largest supported `n`; letters are stored as `u8` and route signs as `u32` bitmasks.
pub const MAX_PARTS: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("composition must have at least one part")]
    Empty,
    #[error("composition has {0} parts, at most {MAX_PARTS} are supported")]
    TooLong(usize),
    #[error("strict composition required (part {index} is zero)")]
    NotStrict { index: usize },
    #[error("cannot parse composition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A composition; parts are 1-based in every accessor.
///
/// Zero parts are allowed at construction time. Operations that need a strict
/// composition call [`Composition::require_strict`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// A strict composition (every part at least one).
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        let c = Self::weak(parts)?;
        c.require_strict()?;
        Ok(c)
    }

    /// A weak composition (zero parts allowed).
    pub fn weak(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if parts.len() > MAX_PARTS {
            return Err(CompositionError::TooLong(parts.len()));
        }
        Ok(Self { parts })
    }

    pub fn require_strict(&self) -> Result<(), CompositionError> {
        match self.parts.iter().position(|&p| p == 0) {
            Some(i) => Err(CompositionError::NotStrict { index: i + 1 }),
            None => Ok(()),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// `|s|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `s_i` for `i` in `1..=n+1`, with the convention `s_{n+1} = 2`.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.n() + 1, "part index {i} out of range");
        if i == self.n() + 1 {
            2
        } else {
            self.parts[i - 1]
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `s_{i+1} + ... + s_n`.
    pub fn tail_sum(&self, i: usize) -> u32 {
        self.parts[i.min(self.n())..].iter().sum()
    }

    /// Number of Stirling s-permutations, `prod_{i=1}^{n-1} (1 + s_{n-i+1} + ... + s_n)`.
    ///
    /// Valid for weak compositions as well.
    pub fn count_formula(&self) -> BigUint {
        let n = self.n();
        let mut acc = BigUint::from(1u32);
        for i in 1..n {
            acc *= BigUint::from(1 + self.tail_sum(n - i));
        }
        acc
    }

    /// All strict compositions with `n` parts bounded by `max_part`, in lexicographic order.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = vec![1u32; n];
        loop {
            out.push(Composition { parts: cur.clone() });
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < max_part {
                    cur[i] += 1;
                    for p in cur.iter_mut().skip(i + 1) {
                        *p = 1;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Parses `"1,2,1"`, `"1 2 1"` or `"(1,2,1)"`. The result may be weak.
impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')');
        let parse_err = |reason: String| CompositionError::Parse {
            input: input.to_string(),
            reason,
        };
        let mut parts = Vec::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_err(format!("{tok:?} is not a non-negative integer")))?;
            parts.push(v);
        }
        Composition::weak(parts)
    }
}
