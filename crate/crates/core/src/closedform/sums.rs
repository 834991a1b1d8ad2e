//! The binomial sums shared by the `k = 2` and `k = n-1` formulas.

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{GaussianInteger, GaussianRational};

/// `Σ_{i=0}^{⌊s/2⌋} w_i E^(s-2i) D^i` where consecutive weights have ratio
/// `w_{i+1} / w_i = p_i / q_i` and `w_0 = 1`.
///
/// With `E² = Pe²/qe²` and `D = Pd/qd` the sum is
/// `E^(s-2M) · Σ w_i A^(M-i) B^i / (qe^(2M) qd^M)`, `A = Pe²·qd`,
/// `B = qe²·Pd`. That inner sum is evaluated by Horner on the weight ratios
/// entirely in Z[i], so the only reduction happens once at the end.
fn ratio_sum(
    s: u64,
    e: &GaussianRational,
    d: &GaussianRational,
    ratio: impl Fn(u64) -> (BigInt, BigInt),
) -> GaussianRational {
    let m = s / 2;
    let pe = e.numerator();
    let pd = d.numerator();
    let qe2 = e.den() * e.den();
    let a = (&pe * &pe).scale(d.den());
    let b = pd.scale(&qe2);

    let mut num = GaussianInteger::one();
    let mut dn = GaussianInteger::one();
    let mut q_acc = BigInt::one();
    for i in (0..m).rev() {
        let (p, q) = ratio(i);
        let qa = a.scale(&q);
        let pb = b.scale(&p);
        let next_dn = &qa * &dn;
        num = &next_dn + &(&pb * &num);
        dn = next_dn;
        q_acc *= q;
    }

    let mut den = q_acc;
    den *= num_traits::pow::pow(qe2, m as usize);
    den *= num_traits::pow::pow(d.den().clone(), m as usize);
    if s % 2 == 1 {
        num = &num * &pe;
        den *= e.den();
    }
    GaussianRational::new(num.re, num.im, den).expect("positive denominator")
}

/// `(Σ C(s,2i) E^(s-2i) D^i, Σ (s+1)/(s+1-2i) · C(s,2i) E^(s-2i) D^i)`,
/// both over `0 <= i <= ⌊s/2⌋`.
pub(crate) fn paired_sums(
    s: u64,
    e: &GaussianRational,
    d: &GaussianRational,
) -> (GaussianRational, GaussianRational) {
    let binom_ratio = |i: u64| {
        let p = BigInt::from(s - 2 * i) * BigInt::from(s - 2 * i - 1);
        let q = BigInt::from(2 * i + 1) * BigInt::from(2 * i + 2);
        (p, q)
    };
    let plain = ratio_sum(s, e, d, binom_ratio);
    let weighted = ratio_sum(s, e, d, |i| {
        // (s+1-2i) / (s+1-2(i+1)); the second factor is >= 1 for i < ⌊s/2⌋.
        let lo = s + 1 - 2 * (i + 1);
        assert!(lo > 0, "pole in weighted sum at i = {}", i + 1);
        let (p, q) = binom_ratio(i);
        (p * BigInt::from(s + 1 - 2 * i), q * BigInt::from(lo))
    });
    (plain, weighted)
}
