//! `x^n + a x² + b x + c` and its reciprocal `x^n + a x^(n-1) + b x^(n-2) + c`.

use super::sums::paired_sums;
use super::{expect_family, finish, int, FormulaContext};
use crate::error::Result;
use crate::poly::{Family, QuadrinomialSpec};
use crate::resultant::{DiscriminantResult, Method};

pub fn disc_quad_k2(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    expect_family(spec, Family::K2)?;
    let QuadrinomialSpec { n, a, b, c, .. } = spec;
    let n = *n;
    let ctx = FormulaContext::k2(n, a, b, c);
    let (e1, e2) = (&ctx.e1, &ctx.e2);
    let gap = ctx.half_gap_sq();
    let (plain, weighted) = paired_sums(n as u64 - 2, &ctx.half_sum(), &gap);

    let mut bracket = int(n * n) * e2.pow(n as u64 - 1) + int(4) * a * a * e2 + int(2) * a * b * e1 + b * b;
    if (n - 1) % 2 == 0 {
        bracket += int(2) * b * int(n) * gap.pow((n as u64 - 1) / 2);
    }
    bracket += int(n) * (int(4) * a * e2 * plain + b * e1 * weighted);

    let pre = int(n - 2).pow(n as u64 - 1) * a.pow(n as u64 - 1) / int(n);
    Ok(finish(pre * bracket, Method::ClosedFormK2, n * (n - 1) / 2))
}

pub fn disc_recip_n2(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    expect_family(spec, Family::RecipN2)?;
    let QuadrinomialSpec { n, a, b, c, .. } = spec;
    let n = *n;
    let ctx = FormulaContext::recip_n2(n, a, b);
    let (e1, e2) = (&ctx.e1, &ctx.e2);
    let gap = ctx.half_gap_sq();
    let (plain, weighted) = paired_sums(n as u64 - 2, &ctx.half_sum(), &gap);
    let c2 = c * c;

    let mut bracket =
        int(n * n) * e2.pow(n as u64 - 1) + (int(4) * b * b * e2 + int(2) * a * b * e1 + a * a) / &c2;
    if (n - 1) % 2 == 0 {
        bracket += int(2) * a * int(n) / c * gap.pow((n as u64 - 1) / 2);
    }
    bracket += int(n) / c * (int(4) * b * e2 * plain + a * e1 * weighted);

    let pre = (int(n - 2) * b * c).pow(n as u64 - 1) / int(n);
    Ok(finish(pre * bracket, Method::ClosedFormRecipN2, n * (n - 1) / 2))
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
    fn k2_known_values() {
        let s = QuadrinomialSpec::k2(4, q("1"), q("1"), q("1")).unwrap();
        assert_eq!(disc_quad_k2(&s).unwrap().value, q("257"));
        let s = QuadrinomialSpec::k2(4, q("-1"), q("-2"), q("2")).unwrap();
        assert!(disc_quad_k2(&s).unwrap().value.is_zero());
    }

    #[test]
    fn k2_matches_oracle() {
        for n in 4..=11 {
            let s = QuadrinomialSpec::k2(n, q("3/2-i"), q("-2/7"), q("5+1/3i")).unwrap();
            let got = disc_quad_k2(&s).unwrap();
            assert_eq!(got.value, discriminant_oracle(&s.expand()).unwrap().value, "n={n}");
            assert_eq!(got.method, Method::ClosedFormK2);
        }
    }

    #[test]
    fn recip_n2_matches_oracle_and_k2() {
        for n in 4..=10 {
            let (a, b, c) = (q("1/2+i"), q("-3"), q("2/5-4/3i"));
            let s = QuadrinomialSpec::new(Family::RecipN2, n, 0, a.clone(), b.clone(), c.clone()).unwrap();
            let got = disc_recip_n2(&s).unwrap().value;
            assert_eq!(got, discriminant_oracle(&s.expand()).unwrap().value, "n={n}");
            let swapped = QuadrinomialSpec::k2(n, &b / &c, &a / &c, c.inv().unwrap()).unwrap();
            let via_k2 = disc_quad_k2(&swapped).unwrap().value * c.pow(2 * n as u64 - 2);
            assert_eq!(got, via_k2);
        }
    }

    #[test]
    fn wrong_family_rejected() {
        let s = QuadrinomialSpec::k3(5, q("1"), q("1"), q("1")).unwrap();
        assert!(disc_quad_k2(&s).is_err());
    }
}
