use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::polynomial::IntPolynomial;
use super::EnumerationError;
use crate::flows::{binomial, count_integer_flows, OrugaGraph};

/// Lattice point counts `|tP ∩ Z^E|` of the unit flow polytope for `t = 0..=max_t`.
pub fn ehrhart_samples(g: &OrugaGraph, max_t: i64) -> Result<Vec<BigInt>, EnumerationError> {
    (0..=max_t).map(|t| Ok(BigInt::from(count_integer_flows(g, &g.unit_netflow(t))?))).collect()
}

/// Exact Lagrange interpolation through `(i, ys[i])`; coefficients lowest degree first.
pub fn interpolate(ys: &[BigInt]) -> Vec<BigRational> {
    let m = ys.len();
    let mut out = vec![BigRational::zero(); m];
    for (i, y) in ys.iter().enumerate() {
        // basis = prod_{j != i} (x - j) / (i - j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for j in 0..m {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigInt::from(i as i64 - j as i64);
        }
        let scale = BigRational::new(y.clone(), denom);
        for (d, b) in basis.iter().enumerate() {
            out[d] += b * &scale;
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// `h*` of the unit flow polytope of `G_s`, of dimension `d = |s|`.
///
/// Counts lattice points of `tP` for `t = 0..=d+1`, interpolates exactly, checks the
/// degree is at most `d`, then multiplies the Ehrhart series by `(1 - x)^{d+1}`.
pub fn h_star_via_ehrhart(g: &OrugaGraph) -> Result<IntPolynomial, EnumerationError> {
    let d = g.composition().size() as i64;
    let samples = ehrhart_samples(g, d + 1)?;
    let poly = interpolate(&samples);
    if poly.len() > d as usize + 1 {
        return Err(EnumerationError::Interpolation(format!("Ehrhart polynomial has degree {}", poly.len() - 1)));
    }
    let values: Vec<BigRational> = (0..=d + 1)
        .map(|t| poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * BigRational::from_integer(t.into()) + c))
        .collect();
    let mut coeffs = Vec::new();
    for j in 0..=(d + 1) as usize {
        let mut c = BigRational::zero();
        for i in 0..=j {
            let b = BigRational::from_integer(BigInt::from(binomial(d as u64 + 1, i as u64)));
            let term = b * &values[j - i];
            if i % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        if !c.is_integer() {
            return Err(EnumerationError::Interpolation(format!("h*_{j} = {c} is not an integer")));
        }
        coeffs.push(c.to_integer());
    }
    if !coeffs[(d + 1) as usize].is_zero() {
        return Err(EnumerationError::Interpolation("h* has degree above the dimension".into()));
    }
    Ok(IntPolynomial::new(coeffs))
}
