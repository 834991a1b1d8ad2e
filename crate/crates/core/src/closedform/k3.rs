//! `x^n + a x³ + b x + c` and its reciprocal `x^n + a x^(n-1) + b x^(n-3) + c`.

use super::tr::{tr_closed, TrParams};
use super::{expect_family, finish, frac, int, FormulaContext};
use crate::error::{Error, Result};
use crate::exact::GaussianRational as Q;
use crate::poly::{Family, QuadrinomialSpec};
use crate::resultant::{DiscriminantResult, Method};

/// `t_(n-1), t_(n-2), t_(n-3)` for the divisor `b3 x³ - b1 x - b0`, each
/// multiplied by `b3` (the normalization the discriminant formulas use).
fn scaled_t(n: i64, params: &TrParams) -> Result<[Q; 3]> {
    let t = |r: i64| -> Result<Q> { Ok(&params.b3 * &tr_closed(params, r as u64)?) };
    Ok([t(n - 1)?, t(n - 2)?, t(n - 3)?])
}

/// `Π_(ξ root of the quadratic) (α ξ³ + β ξ + γ)` in terms of `e1`, `e2`.
fn cubic_norm(ctx: &FormulaContext, alpha: &Q, beta: &Q, gamma: &Q) -> Q {
    let (e1, e2) = (&ctx.e1, &ctx.e2);
    alpha * alpha * e2.pow(3)
        + alpha * beta * (e1 * e1 - int(2) * e2) * e2
        + alpha * gamma * (e1.pow(3) - int(3) * e1 * e2)
        + beta * beta * e2
        + beta * gamma * e1
        + gamma * gamma
}

impl FormulaContext {
    /// `x^n + a x³ + b x + c`; also returns the divisor `3a + n t_(n-2)`.
    pub fn k3(n: i64, a: &Q, b: &Q, c: &Q) -> Result<(Self, Q)> {
        let params = TrParams::new(a * frac(n - 3, n), -(b * frac(n - 1, n)), -c)?;
        let [t1, t2, t3] = scaled_t(n, &params)?;
        let lead = int(3) * a + int(n) * t2;
        if lead.is_zero() {
            return Err(Error::SingularFormula("3a + n t_(n-2) = 0"));
        }
        let ctx = Self {
            e1: -(int(n) * t1) / &lead,
            e2: (a * b * int(n - 3) - c * int(n * n) * t3) / (a * int(n - 3) * &lead),
        };
        Ok((ctx, lead))
    }

    /// `x^n + a x^(n-1) + b x^(n-3) + c`; also returns `3b/c + n t_(n-2)`.
    pub fn recip_n3(n: i64, a: &Q, b: &Q, c: &Q) -> Result<(Self, Q)> {
        let cn = c * int(n);
        let params = TrParams::new(b * int(n - 3) / &cn, -(a * int(n - 1) / &cn), -c.inv()?)?;
        let [t1, t2, t3] = scaled_t(n, &params)?;
        let den = int(3) * b + &cn * &t2;
        if den.is_zero() {
            return Err(Error::SingularFormula("3b + c n t_(n-2) = 0"));
        }
        let ctx = Self {
            e1: -(&cn * t1) / &den,
            e2: (a * b * int(n - 3) - &cn * int(n) * t3) / (b * int(n - 3) * &den),
        };
        Ok((ctx, den / c))
    }
}

pub fn disc_quad_k3(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    expect_family(spec, Family::K3)?;
    let QuadrinomialSpec { n, a, b, c, .. } = spec;
    let n = *n;
    let (ctx, lead) = FormulaContext::k3(n, a, b, c)?;
    let norm = cubic_norm(&ctx, &(a * frac(n - 3, n)), &(b * frac(n - 1, n)), c);
    let value = a.pow(n as u64 - 3) * int(n - 3).pow(n as u64 - 3) * lead.pow(3) * norm;
    Ok(finish(value, Method::ClosedFormK3, (n - 1) * (n + 2) / 2))
}

pub fn disc_recip_n3(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    expect_family(spec, Family::RecipN3)?;
    let QuadrinomialSpec { n, a, b, c, .. } = spec;
    let n = *n;
    let (ctx, lead) = FormulaContext::recip_n3(n, a, b, c)?;
    let cn = c * int(n);
    let norm = cubic_norm(&ctx, &(b * int(n - 3) / &cn), &(a * int(n - 1) / &cn), &c.inv()?);
    let value = b.pow(n as u64 - 3) * c.pow(n as u64 + 1) * int(n - 3).pow(n as u64 - 3) * lead.pow(3) * norm;
    Ok(finish(value, Method::ClosedFormRecipN3, (n - 1) * (n + 2) / 2))
}
