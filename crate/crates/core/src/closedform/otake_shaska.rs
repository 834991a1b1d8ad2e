//! The Otake–Shaska identity for `x^n + t(x² + a x + b)`.

use super::{frac, int, signed};
use crate::error::{precondition, Result};
use crate::exact::{binom, GaussianRational as Q};

fn binom_q(n: i64, k: i64) -> Q {
    Q::from(binom(n, k))
}

fn s_k(n: i64, k: i64, a: &Q, b: &Q) -> Q {
    let middle = frac(n * (n - 1) * (5 * n * n - (6 * k + 23) * n + 10 * k + 24), n - k - 3) * binom_q(n - k - 3, k);
    int(n - 1).pow(3) * binom_q(n - k - 3, k) * a.pow(4) + int(4 * n * n * (n - 2)) * binom_q(n - k - 4, k) * b * b
        - middle * a * a * b
}

/// `γ_c`, zero when `a = 0` and `n` is odd.
fn gamma(n: i64, a: &Q, b: &Q) -> Result<Q> {
    if a.is_zero() && n % 2 == 1 {
        return Ok(Q::zero());
    }
    let m0 = (n - 3) / 2;
    let mut acc = Q::zero();
    for k in 0..=m0 {
        let e = n - 2 * k - 4;
        let term = int(n).pow(k as u64)
            * int(n - 1).powi(e)?
            * int(n - 2).pow(k as u64)
            * a.powi(e)?
            * b.pow(k as u64)
            * s_k(n, k, a, b);
        acc += signed(term, n + k);
    }
    Ok(acc)
}

/// `Δ(x^n + t(x² + a x + b))
///  = (-1)^m1 t^(n-1) ((n-2)^(n-2)(a² - 4b) t² + γ_c t - n^n b^(n-1))`.
///
/// Valid for `n >= 4`; at `n = 3` the `k = 0` term of `γ_c` has no
/// consistent reading.
pub fn disc_otake_shaska(n: i64, a: &Q, b: &Q, t: &Q) -> Result<Q> {
    if n < 4 {
        return Err(precondition(format!("otake-shaska: requires n >= 4, got n = {n}")));
    }
    if t.is_zero() || b.is_zero() {
        return Err(precondition("otake-shaska: requires t != 0 and b != 0"));
    }
    let m1 = (n - 3 + 1) / 2;
    let inner = int(n - 2).pow(n as u64 - 2) * (a * a - b * int(4)) * t * t + gamma(n, a, b)? * t
        - int(n).pow(n as u64) * b.pow(n as u64 - 1);
    Ok(signed(t.pow(n as u64 - 1) * inner, m1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::disc_quad_k2;
    use crate::poly::{Polynomial, QuadrinomialSpec};
    use crate::resultant::discriminant_oracle;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    fn poly(n: i64, a: &Q, b: &Q, t: &Q) -> Polynomial {
        Polynomial::from_terms([(n as usize, Q::one()), (2, t.clone()), (1, t * a), (0, t * b)])
    }

    #[test]
    fn matches_oracle_including_a_zero() {
        for n in 4..=11 {
            for (a, b, t) in [("1", "1", "1"), ("-2/3+i", "3", "1/2i"), ("0", "5/4", "-2")] {
                let (a, b, t) = (q(a), q(b), q(t));
                let got = disc_otake_shaska(n, &a, &b, &t).unwrap();
                assert_eq!(got, discriminant_oracle(&poly(n, &a, &b, &t)).unwrap().value, "n={n} a={a}");
            }
        }
    }

    #[test]
    fn agrees_with_k2() {
        let (a, b, t) = (q("7/3-i"), q("-1/2"), q("2+3i"));
        for n in 5..=12 {
            let s = QuadrinomialSpec::k2(n, t.clone(), &t * &a, &t * &b).unwrap();
            assert_eq!(disc_otake_shaska(n, &a, &b, &t).unwrap(), disc_quad_k2(&s).unwrap().value);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(disc_otake_shaska(3, &q("1"), &q("1"), &q("1")).is_err());
        assert!(disc_otake_shaska(6, &q("1"), &q("1"), &q("0")).is_err());
    }
}
