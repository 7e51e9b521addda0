//! Exact rank and determinant over the rationals.

use num_traits::{One, Zero};

use super::height::Q;

/// Row-reduces in place and returns the rank together with the determinant
/// (meaningful only for square input).
fn eliminate(mut m: Vec<Vec<Q>>) -> (usize, Q) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut det = Q::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            det = Q::zero();
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            det = -det;
        }
        let p = m[rank][col].clone();
        det *= &p;
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..cols {
                let sub = &factor * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
    }
    if rank < rows {
        det = Q::zero();
    }
    (rank, det)
}

pub fn rank(m: Vec<Vec<Q>>) -> usize {
    eliminate(m).0
}

pub fn determinant(m: Vec<Vec<Q>>) -> Q {
    assert!(m.iter().all(|r| r.len() == m.len()), "square matrix");
    eliminate(m).1
}
