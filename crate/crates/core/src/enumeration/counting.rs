use super::polynomial::IntPolynomial;
use crate::combinat::{Face, StirlingPermutation};

/// `A_s(x) = sum_w x^{des(w)}`.
pub fn eulerian_polynomial(perms: &[StirlingPermutation]) -> IntPolynomial {
    let mut p = IntPolynomial::default();
    for w in perms {
        p.add_monomial(w.descents().len());
    }
    p
}

/// `sum_w x^{asc(w)}`.
pub fn ascent_polynomial(perms: &[StirlingPermutation]) -> IntPolynomial {
    let mut p = IntPolynomial::default();
    for w in perms {
        p.add_monomial(w.ascents().len());
    }
    p
}

/// `f(x) = sum_F x^{dim F}` over faces of the s-permutahedron.
pub fn f_polynomial(faces: &[Face]) -> IntPolynomial {
    let mut p = IntPolynomial::default();
    for f in faces {
        p.add_monomial(f.dim());
    }
    p
}

/// `h` with `f(x) = h(x + 1)`.
pub fn h_polynomial(faces: &[Face]) -> IntPolynomial {
    f_polynomial(faces).shift(-1)
}
