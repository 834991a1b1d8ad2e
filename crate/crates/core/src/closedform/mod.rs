//! Closed-form discriminants of sparse polynomials.
//!
//! Every formula here is expressed through the sum `e1` and product `e2` of
//! the roots of an auxiliary quadratic; the roots themselves are never
//! formed, so all arithmetic stays inside Q(i).

mod dispatch;
mod k2;
mod k3;
mod knm1;
mod low_degree;
mod otake_shaska;
mod pipeline;
mod sums;
mod tr;

use num_bigint::BigInt;

use crate::error::{precondition, Result};
use crate::exact::{sign_pow, GaussianRational as Q};
use crate::poly::{Family, QuadrinomialSpec};
use crate::resultant::{DiscriminantResult, Method};

pub use dispatch::dispatch;
pub use k2::{disc_quad_k2, disc_recip_n2};
pub use k3::{disc_quad_k3, disc_recip_n3};
pub use knm1::disc_quad_k_nm1;
pub use low_degree::{disc_binomial, disc_cubic, disc_quartic_k3, disc_trinomial};
pub use otake_shaska::disc_otake_shaska;
pub use pipeline::{disc_2n_pipeline, pipeline_remainders, PipelineRemainders};
pub use tr::{divisor_polynomial, generalized_remainder, tr_closed, tr_recurrence, TrParams, TrSequence};

/// Sum and product of the roots of the auxiliary quadratic remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaContext {
    pub e1: Q,
    pub e2: Q,
}

impl FormulaContext {
    /// `x^n + a x² + b x + c`.
    pub fn k2(n: i64, a: &Q, b: &Q, c: &Q) -> Self {
        let den = a * int(n - 2);
        Self {
            e1: -(b * int(n - 1)) / &den,
            e2: c * int(n) / den,
        }
    }

    /// `x^n + a x^(n-1) + b x + c`.
    pub fn knm1(n: i64, a: &Q, b: &Q, c: &Q) -> Self {
        Self {
            e1: -(a * b * int(n - 2) + c * int(n)) / (b * int(n - 1)),
            e2: a * c / b,
        }
    }

    /// `x^n + a x^(n-1) + b x^(n-2) + c`, through its reciprocal.
    pub fn recip_n2(n: i64, a: &Q, b: &Q) -> Self {
        let den = b * int(n - 2);
        Self {
            e1: -(a * int(n - 1)) / &den,
            e2: int(n) / den,
        }
    }

    /// `e1 / 2`.
    pub fn half_sum(&self) -> Q {
        &self.e1 * &Q::from_ratio(1.into(), 2.into()).expect("nonzero")
    }

    /// `(e1/2)² - e2`, the square of half the root difference.
    pub fn half_gap_sq(&self) -> Q {
        let h = self.half_sum();
        &h * &h - &self.e2
    }
}

pub(crate) fn int(v: i64) -> Q {
    Q::from(v)
}

pub(crate) fn frac(p: i64, q: i64) -> Q {
    Q::from_ratio(p.into(), q.into()).expect("nonzero denominator")
}

/// `(-1)^e · v`.
pub(crate) fn signed(v: Q, e: i64) -> Q {
    if sign_pow(&e) < 0 {
        -v
    } else {
        v
    }
}

pub(crate) fn finish(value: Q, method: Method, sign_exp: i64) -> DiscriminantResult {
    DiscriminantResult {
        value: signed(value, sign_exp),
        method,
        sign_exponent_audit: BigInt::from(sign_exp),
    }
}

pub(crate) fn expect_family(spec: &QuadrinomialSpec, family: Family) -> Result<()> {
    if spec.family == family {
        Ok(())
    } else {
        Err(precondition(format!("expected a {family} spec, got {}", spec.family)))
    }
}
