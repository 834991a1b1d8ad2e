//! The recurrent sequence `t_r` behind remainders modulo sparse divisors.

use crate::error::{precondition, Result};
use crate::exact::{binom, GaussianRational as Q};
use crate::poly::Polynomial;

/// Divisor `q = b3 x³ - b1 x - b0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrParams {
    pub b3: Q,
    pub b1: Q,
    pub b0: Q,
}

impl TrParams {
    pub fn new(b3: Q, b1: Q, b0: Q) -> Result<Self> {
        if b3.is_zero() {
            return Err(precondition("t_r: requires b3 != 0"));
        }
        Ok(Self { b3, b1, b0 })
    }
}

/// Memoized `t_1, t_2, ...` from `t_1 = 1/b3`, `t_2 = 0`, `t_3 = b1/b3²`,
/// `t_r = (b1 t_(r-2) + b0 t_(r-3)) / b3`.
#[derive(Debug, Clone)]
pub struct TrSequence {
    params: TrParams,
    inv_b3: Q,
    memo: Vec<Q>,
}

impl TrSequence {
    pub fn new(params: TrParams) -> Self {
        let inv_b3 = params.b3.inv().expect("b3 != 0");
        let memo = vec![inv_b3.clone(), Q::zero(), &params.b1 * &inv_b3 * &inv_b3];
        Self { params, inv_b3, memo }
    }

    pub fn params(&self) -> &TrParams {
        &self.params
    }

    /// `t_r`, `r >= 1`.
    pub fn get(&mut self, r: u64) -> Q {
        assert!(r >= 1, "t_r is indexed from 1");
        let r = r as usize;
        while self.memo.len() < r {
            let k = self.memo.len() + 1;
            let next = (&self.params.b1 * &self.memo[k - 3] + &self.params.b0 * &self.memo[k - 4]) * &self.inv_b3;
            self.memo.push(next);
        }
        self.memo[r - 1].clone()
    }
}

/// `t_r` through its closed form: a sum over `k <= ⌊r/6⌋` for odd `r` and
/// over `1 <= k <= ⌊(r+2)/6⌋` for even `r`.
pub fn tr_closed(params: &TrParams, r: u64) -> Result<Q> {
    if r == 0 {
        return Err(precondition("t_r: requires r >= 1"));
    }
    let TrParams { b3, b1, b0 } = params;
    let inv = b3.inv()?;
    let r = r as i64;
    let h = r / 2;
    let mut acc = Q::zero();
    if r % 2 == 1 {
        for k in 0..=r / 6 {
            let c = Q::from(binom(h - k, h - 3 * k));
            acc += c * b0.pow(2 * k as u64) * b1.pow((h - 3 * k) as u64) * b3.pow(k as u64);
        }
        Ok(inv.pow(((r + 1) / 2) as u64) * acc)
    } else {
        for k in 1..=(r + 2) / 6 {
            let c = Q::from(binom(h - k, h - 3 * k + 1));
            acc += c * b0.pow(2 * k as u64 - 1) * b1.pow((h - 3 * k + 1) as u64) * b3.pow(k as u64 - 1);
        }
        Ok(inv.pow(h as u64) * acc)
    }
}

/// `t_r` by running the recurrence.
pub fn tr_recurrence(params: &TrParams, r: u64) -> Result<Q> {
    if r == 0 {
        return Err(precondition("t_r: requires r >= 1"));
    }
    Ok(TrSequence::new(params.clone()).get(r))
}

/// `b_m x^m - b_(m-1) x^(m-1) - ... - b_0` from `(b_m, ..., b_0)`.
pub fn divisor_polynomial(q_params: &[Q]) -> Polynomial {
    let m = q_params.len().saturating_sub(1);
    Polynomial::from_terms(
        q_params
            .iter()
            .enumerate()
            .map(|(j, b)| (m - j, if j == 0 { b.clone() } else { -b })),
    )
}

/// Remainder of `p` modulo `b_m x^m - b_(m-1) x^(m-1) - ... - b_0` read off
/// from the general recurrence
/// `t_1 = 1/b_m`, `t_r = (1/b_m) Σ_{i=1}^{r-1} b_(m-i) t_(r-i)`:
///
/// `r_k = a_k + Σ_{i=0}^{k} b_i Σ_{ν=0}^{N-m-k+i} t_(N-m-k+i+1-ν) a_(N-ν)`.
pub fn generalized_remainder(p: &Polynomial, q_params: &[Q], m: usize) -> Result<Polynomial> {
    if q_params.len() != m + 1 {
        return Err(precondition(format!(
            "divisor of degree {m} needs {} coefficients, got {}",
            m + 1,
            q_params.len()
        )));
    }
    let bm = &q_params[0];
    if bm.is_zero() {
        return Err(precondition("divisor: requires b_m != 0"));
    }
    let big_n = p.degree().ok_or(crate::Error::ZeroPolynomial)?;
    if big_n < m {
        return Err(precondition(format!("requires deg p >= {m}, got {big_n}")));
    }
    // b[i] is b_i in ascending order.
    let b: Vec<&Q> = q_params.iter().rev().collect();
    let inv = bm.inv()?;

    let span = big_n - m + 1;
    let mut t = vec![Q::zero(); span + 1];
    t[1] = inv.clone();
    for r in 2..=span {
        let mut acc = Q::zero();
        for i in 1..r.min(m + 1) {
            acc += b[m - i] * &t[r - i];
        }
        t[r] = acc * &inv;
    }

    let a = p.coeffs();
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let mut rk = a[k].clone();
        for i in 0..=k {
            if b[i].is_zero() || big_n + i < m + k {
                continue;
            }
            let top = big_n + i - m - k;
            let mut inner = Q::zero();
            for nu in 0..=top {
                let coeff = &a[big_n - nu];
                if !coeff.is_zero() {
                    inner += &t[top + 1 - nu] * coeff;
                }
            }
            rk += b[i] * &inner;
        }
        out.push(rk);
    }
    Ok(Polynomial::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    fn params() -> TrParams {
        TrParams::new(q("3/2-i"), q("-2/5"), q("7i")).unwrap()
    }

    #[test]
    fn first_terms() {
        let p = params();
        let inv = p.b3.inv().unwrap();
        assert_eq!(tr_closed(&p, 1).unwrap(), inv);
        assert!(tr_closed(&p, 2).unwrap().is_zero());
        assert_eq!(tr_closed(&p, 3).unwrap(), &p.b1 * &inv * &inv);
        assert_eq!(tr_recurrence(&p, 4).unwrap(), &p.b0 * &inv * &inv);
        assert_eq!(tr_recurrence(&p, 5).unwrap(), &p.b1 * &p.b1 * inv.pow(3));
        assert!(tr_closed(&p, 0).is_err());
    }

    #[test]
    fn closed_form_matches_recurrence() {
        let p = params();
        let mut seq = TrSequence::new(p.clone());
        for r in 1..=60 {
            assert_eq!(tr_closed(&p, r).unwrap(), seq.get(r), "r={r}");
        }
    }

    #[test]
    fn remainder_matches_divmod() {
        let p: Polynomial = "x^9 - 2x^7 + (1+i)x^4 + 3/2x + 5".parse().unwrap();
        for params in [vec![q("2"), q("0"), q("1/3"), q("-i")], vec![q("1"), q("4")], vec![q("-3i")]] {
            let m = params.len() - 1;
            let div = divisor_polynomial(&params);
            let (_, r) = p.divmod(&div).unwrap();
            assert_eq!(generalized_remainder(&p, &params, m).unwrap(), r, "m={m}");
        }
    }

    #[test]
    fn equal_degrees_take_one_step() {
        let p: Polynomial = "3x^2 + x - 1".parse().unwrap();
        let params = [q("2"), q("1"), q("i")];
        let (_, r) = p.divmod(&divisor_polynomial(&params)).unwrap();
        assert_eq!(generalized_remainder(&p, &params, 2).unwrap(), r);
    }
}
