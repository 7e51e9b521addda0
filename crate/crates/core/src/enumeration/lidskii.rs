use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::EnumerationError;
use crate::composition::Composition;
use crate::flows::{count_integer_flows, OrugaGraph};

/// Which of the two Lidskii-type formulas to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LidskiiVariant {
    /// Binomials `C(s_{n+1-i} + 1, j_i)`.
    Binomial,
    /// Multichoose `((s_n + 1, j_1)) prod_{i >= 2} ((s_{n+1-i} - 1, j_i))`.
    Multichoose,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LidskiiTerm {
    /// `(j_1, ..., j_{n-1})`.
    pub j: Vec<u32>,
    pub coefficient: BigInt,
    pub flow_factor: BigUint,
}

impl LidskiiTerm {
    pub fn value(&self) -> BigInt {
        &self.coefficient * BigInt::from(self.flow_factor.clone())
    }
}

/// `C(m, b)` for any integer `m`: `m (m-1) ... (m-b+1) / b!`, zero for `b < 0`.
pub fn generalized_binomial(m: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

/// `((a, b)) = C(a + b - 1, b)`, with `((a, 0)) = 1` for every `a`.
pub fn multichoose(a: i64, b: i64) -> BigInt {
    if b == 0 {
        BigInt::one()
    } else {
        generalized_binomial(a + b - 1, b)
    }
}

/// Weak compositions of `n - 1` into `n - 1` parts with `j_1 + ... + j_i >= i`, lexicographic.
pub fn dominating_compositions(n: usize) -> Vec<Vec<u32>> {
    let len = n.saturating_sub(1);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fill(len, 0, &mut cur, &mut out);
    out.sort();
    out
}

fn fill(len: usize, sum: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let i = cur.len();
    if i == len {
        if sum as usize == len {
            out.push(cur.clone());
        }
        return;
    }
    let need = (i + 1) as u32;
    for x in 0..=(len as u32 - sum) {
        if sum + x >= need {
            cur.push(x);
            fill(len, sum + x, cur, out);
            cur.pop();
        }
    }
}

/// `prod_i (j_1 + ... + j_i - i + 1)`, zero unless `j` dominates `(1, ..., 1)`.
pub fn lidskii_flow_factor(j: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut partial = 0i64;
    for (i, &x) in j.iter().enumerate() {
        partial += x as i64;
        let f = partial - i as i64;
        if f <= 0 {
            return BigUint::zero();
        }
        acc *= f as u64;
    }
    acc
}

/// Integer flows on `oru` with netflow `(0, j_1 - 1, ..., j_{n-1} - 1, -sum)`.
pub fn lidskii_flow_factor_dp(j: &[u32]) -> Result<BigUint, EnumerationError> {
    let n = j.len() + 1;
    let g = OrugaGraph::path(&Composition::weak(vec![0; n])?);
    let mut a = vec![0i64];
    a.extend(j.iter().map(|&x| x as i64 - 1));
    a.push(-a.iter().sum::<i64>());
    Ok(count_integer_flows(&g, &a)?)
}

pub fn lidskii_terms(s: &Composition, variant: LidskiiVariant) -> Vec<LidskiiTerm> {
    let n = s.n();
    dominating_compositions(n)
        .into_iter()
        .map(|j| {
            let mut coefficient = BigInt::one();
            for (idx, &ji) in j.iter().enumerate() {
                let i = idx + 1;
                let part = s.get(n + 1 - i) as i64;
                coefficient *= match (variant, i) {
                    (LidskiiVariant::Binomial, _) => generalized_binomial(part + 1, ji as i64),
                    (LidskiiVariant::Multichoose, 1) => multichoose(part + 1, ji as i64),
                    (LidskiiVariant::Multichoose, _) => multichoose(part - 1, ji as i64),
                };
            }
            let flow_factor = lidskii_flow_factor(&j);
            LidskiiTerm { j, coefficient, flow_factor }
        })
        .collect()
}

pub fn lidskii_sum(s: &Composition, variant: LidskiiVariant) -> BigInt {
    lidskii_terms(s, variant).iter().map(LidskiiTerm::value).sum()
}
