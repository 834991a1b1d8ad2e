//! `x^(2n) + a x^n + b x^l + c` with `n > 2l`: a two-step reduction to a
//! resultant of two small explicit remainders.

use super::{expect_family, finish, frac, int};
use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, QuadrinomialSpec};
use crate::resultant::{resultant_sylvester, DiscriminantResult, Method};

/// The remainder chain of the reduction.
///
/// With `f' = 2n x^(l-1) · g`, `g = x^(2n-l) + (a/2) x^(n-l) + lb/(2n)`:
/// `r0 = f mod g`, `r1 = g mod r0`, and `r2 = (2/a)(r0 mod r1)` when that
/// division takes a single step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineRemainders {
    pub r0: Polynomial,
    pub r1: Polynomial,
    pub r2: Polynomial,
}

pub fn pipeline_remainders(spec: &QuadrinomialSpec) -> Result<PipelineRemainders> {
    expect_family(spec, Family::TwoN)?;
    let QuadrinomialSpec { n, l, a, b, c, .. } = spec;
    let (n, l) = (*n, *l);
    let (nu, lu) = (n as usize, l as usize);
    let disc = a * a - c * int(4);
    if disc.is_zero() {
        return Err(Error::SingularFormula("a^2 = 4c"));
    }
    let m = 2 * n - l;
    let bm_n = b * frac(m, n);

    let r0 = Polynomial::from_terms([(nu, a * frac(1, 2)), (lu, b * frac(m, 2 * n)), (0, c.clone())]);
    let r1 = Polynomial::from_terms([
        (nu - lu, &disc / (a * int(2))),
        (lu, (&bm_n / a).pow(2)),
        (0, b * (a * a * int(l) + c * int(4 * m)) / (a * a * int(2 * n))),
    ]);
    let ad = a * &disc;
    let r2 = Polynomial::from_terms([
        (2 * lu, -(int(2) * bm_n.pow(2)) / &ad),
        (lu, b * (int(m) * (a * a - c * int(8)) - a * a * int(l)) / (&ad * int(n))),
        (0, c * int(2) / a),
    ]);
    Ok(PipelineRemainders { r0, r1, r2 })
}

/// `Δ = (-1)^(n+l) b^(2(n-l)) c^(l-1) (a² - 4c)^l n^(2l) (2n-l)^(2(n-l)) · R(r̄2, r̄1)`,
/// `r̄i` the monic remainders, with the resultant (the product of `r̄1` over
/// the roots of `r̄2`) taken as a Sylvester determinant of size `n + l`.
pub fn disc_2n_pipeline(spec: &QuadrinomialSpec) -> Result<DiscriminantResult> {
    let PipelineRemainders { r1, r2, .. } = pipeline_remainders(spec)?;
    let QuadrinomialSpec { n, l, a, b, c, .. } = spec;
    let (n, l) = (*n, *l);
    let product = resultant_sylvester(&r2.monic()?, &r1.monic()?)?;
    let pre = b.pow(2 * (n - l) as u64)
        * c.pow(l as u64 - 1)
        * (a * a - c * int(4)).pow(l as u64)
        * int(n).pow(2 * l as u64)
        * int(2 * n - l).pow(2 * (n - l) as u64);
    Ok(finish(pre * product, Method::PipelineTwoN, n + l))
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
    fn remainder_chain() {
        for (n, l) in [(4, 1), (7, 2), (10, 3), (5, 2)] {
            let s = QuadrinomialSpec::two_n(n, l, q("2-i"), q("1/3"), q("5/2i")).unwrap();
            let rs = pipeline_remainders(&s).unwrap();
            let f = s.expand();
            let g = Polynomial::from_terms([
                ((2 * n - l) as usize, q("1")),
                ((n - l) as usize, &s.a * &q("1/2")),
                (0, &s.b * &frac(l, 2 * n)),
            ]);
            let df = f.derivative();
            assert_eq!(df, &Polynomial::monomial(int(2 * n), (l - 1) as usize) * &g);
            assert_eq!(f.divmod(&g).unwrap().1, rs.r0);
            assert_eq!(g.divmod(&rs.r0).unwrap().1, rs.r1);
            if 3 * l < n {
                let (_, rem) = rs.r0.divmod(&rs.r1).unwrap();
                assert_eq!(rem.scale(&(int(2) / &s.a)), rs.r2);
            }
        }
    }

    #[test]
    fn derivative_factor_resultant() {
        let s = QuadrinomialSpec::two_n(5, 2, q("3"), q("-1+i"), q("2/7")).unwrap();
        let f1 = Polynomial::monomial(int(10), 1);
        let r = resultant_sylvester(&s.expand(), &f1).unwrap();
        assert_eq!(r, int(10).pow(10) * s.c.pow(1));
    }

    #[test]
    fn matches_oracle() {
        let s = QuadrinomialSpec::two_n(3, 1, q("1"), q("1"), q("1")).unwrap();
        assert_eq!(disc_2n_pipeline(&s).unwrap().value, discriminant_oracle(&s.expand()).unwrap().value);
        for (n, l) in [(5, 2), (4, 1), (9, 4), (8, 3), (7, 1)] {
            let s = QuadrinomialSpec::two_n(n, l, q("2/3+i"), q("-4"), q("1/2-3i")).unwrap();
            let got = disc_2n_pipeline(&s).unwrap();
            assert_eq!(got.value, discriminant_oracle(&s.expand()).unwrap().value, "n={n} l={l}");
            assert_eq!(got.sign_exponent_audit, (n + l).into());
        }
    }
}
