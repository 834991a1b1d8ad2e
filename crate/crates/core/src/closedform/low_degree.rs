//! Binomials, trinomials, and the two low-degree members of the families.

use num_bigint::BigInt;
use num_integer::Integer;

use super::{int, signed};
use crate::error::{precondition, Error, Result};
use crate::exact::GaussianRational as Q;

fn big_pow(base: i64, e: i64) -> Q {
    Q::from(num_traits::pow::pow(BigInt::from(base), e as usize))
}

/// `Δ(x^n + a) = (-1)^(n(n-1)/2) n^n a^(n-1)`; `n = 1` gives 1.
pub fn disc_binomial(n: i64, a: &Q) -> Result<Q> {
    if n < 1 {
        return Err(Error::DegreeTooLow { found: n, min: 1 });
    }
    if a.is_zero() {
        return Err(precondition("binomial: requires a != 0"));
    }
    let v = big_pow(n, n) * a.pow(n as u64 - 1);
    Ok(signed(v, n * (n - 1) / 2))
}

/// `Δ(x^n + a x^k + b)` with `d = gcd(n-k, k)`.
pub fn disc_trinomial(n: i64, k: i64, a: &Q, b: &Q) -> Result<Q> {
    if n < 3 || k <= 0 || k >= n {
        return Err(precondition(format!(
            "trinomial: requires n >= 3 and 0 < k < n, got n = {n}, k = {k}"
        )));
    }
    if a.is_zero() || b.is_zero() {
        return Err(precondition("trinomial: requires ab != 0"));
    }
    let d = (n - k).gcd(&k);
    let (nd, kd, md) = (n / d, k / d, (n - k) / d);
    let first = b.pow(md as u64) * big_pow(n, nd);
    let second = signed(a.pow(nd as u64) * big_pow(k, kd) * big_pow(n - k, md), nd + 1);
    let v = b.pow(k as u64 - 1) * (first + second).pow(d as u64);
    Ok(signed(v, n * (n - 1) / 2))
}

/// `Δ(x³ + a x² + b x + c) = -4a³c + a²b² - 4b³ + 18abc - 27c²`.
pub fn disc_cubic(a: &Q, b: &Q, c: &Q) -> Q {
    let a2 = a * a;
    let b2 = b * b;
    -(int(4) * &a2 * a * c) + &a2 * &b2 - int(4) * &b2 * b + int(18) * a * b * c - int(27) * c * c
}

/// `Δ(x⁴ + a x³ + b x + c)
///  = -4a³b³ - 27a⁴c² - 6a²b²c - 27b⁴ - 192abc² + 256c³`.
pub fn disc_quartic_k3(a: &Q, b: &Q, c: &Q) -> Q {
    let a2 = a * a;
    let b2 = b * b;
    let c2 = c * c;
    -(int(4) * &a2 * a * &b2 * b) - int(27) * &a2 * &a2 * &c2 - int(6) * &a2 * &b2 * c
        - int(27) * &b2 * &b2
        - int(192) * a * b * &c2
        + int(256) * &c2 * c
}
