use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::conflicts::{minimal_conflicts, MinimalConflict};
use super::GeometryError;
use crate::composition::Composition;
use crate::flows::{OrugaGraph, Route};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `1 / (n (1 + sum_{j=2}^n (2 s_j + 1)))`.
pub fn epsilon_bound(s: &Composition) -> Q {
    let n = s.n() as i64;
    let inner: i64 = 1 + (2..=s.n()).map(|j| 2 * s.get(j) as i64 + 1).sum::<i64>();
    Q::new(BigInt::one(), BigInt::from(n * inner))
}

/// `h_ε(R(k,t,δ)) = -sum_{k >= c > a >= 1} ε^{c-a} (t_c + δ_a)^2`.
pub fn height_epsilon(s: &Composition, r: &Route, eps: &Q) -> Q {
    let mut acc = Q::zero();
    for c in 2..=r.k() {
        let tc = r.t_at(s, c) as i64;
        for a in 1..c {
            let x = tc + r.delta(a) as i64;
            acc += eps.clone().pow((c - a) as i32) * q(x * x);
        }
    }
    -acc
}

/// A height on every route of `G_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightFunction {
    values: BTreeMap<Route, Q>,
    epsilon: Option<Q>,
}

impl HeightFunction {
    /// `h_ε`, any `ε > 0`. Admissibility is checked separately.
    pub fn epsilon(g: &OrugaGraph, eps: Q) -> Result<Self, GeometryError> {
        if !eps.is_positive() {
            return Err(GeometryError::NonPositiveEpsilon(eps.to_string()));
        }
        let s = g.composition();
        let values = g.routes().into_iter().map(|r| (r, height_epsilon(s, &r, &eps))).collect();
        Ok(Self { values, epsilon: Some(eps) })
    }

    /// `h_ε` at half the bound.
    pub fn default_epsilon(g: &OrugaGraph) -> Self {
        let eps = epsilon_bound(g.composition()) / q(2);
        Self::epsilon(g, eps).expect("positive")
    }

    /// A user supplied height, which must cover exactly the routes of `g`.
    pub fn custom(g: &OrugaGraph, values: BTreeMap<Route, Q>) -> Result<Self, GeometryError> {
        let routes = g.routes();
        if let Some(r) = routes.iter().find(|r| !values.contains_key(r)) {
            return Err(GeometryError::MissingHeight(r.key()));
        }
        if values.len() != routes.len() {
            let extra = values.keys().find(|r| !g.contains_route(r)).map(|r| r.key()).unwrap_or_default();
            return Err(GeometryError::UnknownRoute(extra));
        }
        Ok(Self { values, epsilon: None })
    }

    pub fn get(&self, r: &Route) -> &Q {
        self.values.get(r).unwrap_or_else(|| panic!("no height for {r}"))
    }

    pub fn epsilon_value(&self) -> Option<&Q> {
        self.epsilon.as_ref()
    }

    pub fn values(&self) -> &BTreeMap<Route, Q> {
        &self.values
    }

    /// Checks the strict inequality on every minimal conflict.
    pub fn into_admissible(self, g: &OrugaGraph) -> Result<AdmissibleHeight, GeometryError> {
        match first_violation(g, &self) {
            Some((witness, margin)) => Err(GeometryError::Inadmissible { witness: Box::new(witness), margin }),
            None => Ok(AdmissibleHeight(self)),
        }
    }
}

/// `h(P) + h(Q) - h(P') - h(Q')`.
pub fn conflict_margin(h: &HeightFunction, m: &MinimalConflict) -> Q {
    h.get(&m.p) + h.get(&m.q) - h.get(&m.p_resolved) - h.get(&m.q_resolved)
}

/// The first minimal conflict whose margin is not positive.
pub fn first_violation(g: &OrugaGraph, h: &HeightFunction) -> Option<(MinimalConflict, Q)> {
    minimal_conflicts(g).into_iter().map(|m| {
        let margin = conflict_margin(h, &m);
        (m, margin)
    }).find(|(_, margin)| !margin.is_positive())
}

pub fn is_admissible(g: &OrugaGraph, h: &HeightFunction) -> bool {
    first_violation(g, h).is_none()
}

/// A height function known to satisfy every minimal-conflict inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleHeight(HeightFunction);

impl AdmissibleHeight {
    pub fn get(&self, r: &Route) -> &Q {
        self.0.get(r)
    }

    pub fn inner(&self) -> &HeightFunction {
        &self.0
    }
}
