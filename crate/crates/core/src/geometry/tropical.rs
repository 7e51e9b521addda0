use super::height::{AdmissibleHeight, Q};
use crate::combinat::StirlingPermutation;
use crate::flows::{clique_of_permutation, OrugaGraph, Route};

/// `F^k_t(x) = min_δ h(R(k,t,δ)) + <δ, x>` over `δ ∈ {0,1}^{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPolynomial {
    pub k: usize,
    pub t: u32,
    /// `(δ as a bitmask, coefficient)` in route order.
    pub terms: Vec<(u32, Q)>,
}

impl TropicalPolynomial {
    fn term_value(&self, coeff: &Q, mask: u32, x: &[Q]) -> Q {
        (1..self.k).filter(|i| mask >> (i - 1) & 1 == 1).fold(coeff.clone(), |acc, i| acc + &x[i - 1])
    }

    pub fn evaluate(&self, x: &[Q]) -> Q {
        self.terms.iter().map(|(m, c)| self.term_value(c, *m, x)).min().expect("at least one term")
    }

    /// Masks of the terms attaining the minimum.
    pub fn argmin(&self, x: &[Q]) -> Vec<u32> {
        let best = self.evaluate(x);
        self.terms.iter().filter(|(m, c)| self.term_value(c, *m, x) == best).map(|(m, _)| *m).collect()
    }
}

/// `F^k_t` for `k ∈ [2, n+1]` and `t ∈ [1, s_k - 1]`.
pub fn tropical_polynomials(g: &OrugaGraph, h: &AdmissibleHeight) -> Vec<TropicalPolynomial> {
    let s = g.composition();
    let mut out = Vec::new();
    for k in 2..=s.n() + 1 {
        for t in 1..s.get(k) {
            let terms = (0..1u32 << (k - 1)).map(|m| (m, h.get(&Route::from_mask(k, t, m)).clone())).collect();
            out.push(TropicalPolynomial { k, t, terms });
        }
    }
    out
}

/// Every route `R(k,t,δ)` of `Δ_w` with `k >= 2` attains the minimum of `F^k_t` at `x`.
pub fn region_equalities(polys: &[TropicalPolynomial], w: &StirlingPermutation, x: &[Q]) -> Result<(), String> {
    for r in clique_of_permutation(w).routes() {
        if r.k() < 2 {
            continue;
        }
        let p = polys.iter().find(|p| p.k == r.k() && p.t == r.t()).expect("polynomial per source edge");
        if !p.argmin(x).contains(&r.delta_mask()) {
            return Err(format!("{r} is not minimal for F^{}_{} at v({w})", p.k, p.t));
        }
    }
    Ok(())
}
