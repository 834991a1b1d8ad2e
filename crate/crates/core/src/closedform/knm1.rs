//! `x^n + a x^(n-1) + b x + c`.

use super::sums::paired_sums;
use super::{expect_family, finish, frac, int, FormulaContext};
use crate::error::Result;
use crate::poly::{Family, QuadrinomialSpec};
use crate::resultant::{DiscriminantResult, Method};

pub fn disc_quad_k_nm1(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    expect_family(spec, Family::KNMinus1)?;
    let QuadrinomialSpec { n, a, b, c, .. } = spec;
    let n = *n;
    let ctx = FormulaContext::knm1(n, a, b, c);
    let (e1, e2) = (&ctx.e1, &ctx.e2);
    let gap = ctx.half_gap_sq();

    // Coefficients of the scaled remainder: A x^(n-1)... folded into three constants.
    let big_a = a * a * frac(n - 1, n * n);
    let big_b = b * frac(n - 1, n);
    let big_c = c - a * b * frac(1, n * n);

    let mut bracket = &big_a * &big_a * e2.pow(n as u64 - 2) + &big_b * &big_b * e2 + &big_b * &big_c * e1 + &big_c * &big_c;
    if n % 2 == 0 {
        bracket -= int(2) * &big_a * &big_c * gap.pow((n as u64 - 2) / 2);
    }
    let (plain, weighted) = paired_sums(n as u64 - 3, &ctx.half_sum(), &gap);
    bracket -= &big_a * (int(2) * &big_b * e2 * plain + &big_c * e1 * weighted);

    let pre = int(n).pow(4) * int(n - 1).pow(n as u64 - 3) * b.pow(n as u64 - 2) / (a * a);
    Ok(finish(pre * bracket, Method::ClosedFormKNMinus1, (n + 2) * (n - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational as Q;
    use crate::resultant::discriminant_oracle;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    #[test]
    fn matches_oracle() {
        for n in 5..=12 {
            for (a, b, c) in [("1", "1", "1"), ("2/3-i", "5i", "-7/2")] {
                let s = QuadrinomialSpec::knm1(n, q(a), q(b), q(c)).unwrap();
                let got = disc_quad_k_nm1(&s).unwrap().value;
                assert_eq!(got, discriminant_oracle(&s.expand()).unwrap().value, "n={n} {a} {b} {c}");
            }
        }
    }
}
