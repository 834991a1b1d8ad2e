use super::{
    disc_2n_pipeline, disc_binomial, disc_cubic, disc_quad_k2, disc_quad_k3, disc_quad_k_nm1, disc_quartic_k3,
    disc_recip_n2, disc_recip_n3, disc_trinomial, finish,
};
use crate::error::{Error, Result};
use crate::exact::GaussianRational as Q;
use crate::poly::{Family, Polynomial, QuadrinomialSpec};
use crate::resultant::{discriminant_oracle, DiscriminantResult, Method};

/// Closed form for a monic polynomial of degree `n` if its shape has one;
/// `Ok(None)` when no family matches.
fn closed_form(f: &Polynomial, n: usize) -> Result<Option<DiscriminantResult>> {
    let support: Vec<usize> = f.support().into_iter().filter(|&k| k != n).collect();
    let c = |k: usize| f.coeff(k);
    let ni = n as i64;
    let tri_sign = ni * (ni - 1) / 2;
    let quad = |family: Family, l: i64, a: Q, b: Q| -> Result<Option<DiscriminantResult>> {
        let spec = QuadrinomialSpec::new(family, ni, l, a, b, c(0))?;
        let r = match family {
            Family::K2 => disc_quad_k2(&spec),
            Family::K3 => disc_quad_k3(&spec),
            Family::KNMinus1 => disc_quad_k_nm1(&spec),
            Family::RecipN2 => disc_recip_n2(&spec),
            Family::RecipN3 => disc_recip_n3(&spec),
            Family::TwoN => unreachable!(),
        };
        r.map(Some)
    };

    let result = match support.as_slice() {
        [0] => Some(finish(disc_binomial(ni, &c(0))?, Method::ClosedFormBinomial, 0)),
        _ if n == 3 => Some(finish(disc_cubic(&c(2), &c(1), &c(0)), Method::ClosedFormCubic, 0)),
        _ if n == 4 && support.iter().all(|&k| k != 2) => {
            Some(finish(disc_quartic_k3(&c(3), &c(1), &c(0)), Method::ClosedFormQuarticK3, 0))
        }
        [0, k] if n >= 3 => Some(finish(disc_trinomial(ni, *k as i64, &c(*k), &c(0))?, Method::ClosedFormTrinomial, 0)),
        [0, 1, 2] => quad(Family::K2, 1, c(2), c(1))?,
        [0, 1, 3] => quad(Family::K3, 1, c(3), c(1))?,
        [0, 1, k] if *k == n - 1 => quad(Family::KNMinus1, 1, c(n - 1), c(1))?,
        [0, l, k] if *k == n - 1 && *l == n - 2 => quad(Family::RecipN2, 0, c(n - 1), c(n - 2))?,
        [0, l, k] if *k == n - 1 && *l == n - 3 => quad(Family::RecipN3, 0, c(n - 1), c(n - 3))?,
        [0, l, k] if n % 2 == 0 && *k == n / 2 => {
            let spec = QuadrinomialSpec::two_n(ni / 2, *l as i64, c(*k), c(*l), c(0))?;
            Some(disc_2n_pipeline(&spec)?)
        }
        _ => None,
    };
    // The direct formulas above carry no sign of their own beyond the one
    // they apply internally; record the oracle's for the low-degree ones.
    Ok(result.map(|mut r| {
        if matches!(
            r.method,
            Method::ClosedFormBinomial | Method::ClosedFormCubic | Method::ClosedFormQuarticK3 | Method::ClosedFormTrinomial
        ) {
            r.sign_exponent_audit = tri_sign.into();
        }
        r
    }))
}

/// `Δ(f)` by the matching closed form, or the Sylvester oracle when no
/// family matches, a precondition fails, or the formula is singular.
///
/// A non-monic `f = a_n g` is handled as `a_n^(2n-2) Δ(g)`.
pub fn dispatch(f: &Polynomial) -> Result<DiscriminantResult> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooLow { found: 0, min: 1 });
    }
    let lead = f.leading().expect("nonzero").clone();
    let g = f.monic()?;
    match closed_form(&g, n) {
        Ok(Some(mut r)) => {
            if !lead.is_one() {
                r.value = r.value * lead.pow(2 * n as u64 - 2);
            }
            Ok(r)
        }
        Ok(None) | Err(Error::Precondition(_)) | Err(Error::SingularFormula(_)) => discriminant_oracle(f),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn check(s: &str, method: Method) {
        let f = p(s);
        let got = dispatch(&f).unwrap();
        assert_eq!(got.method, method, "{s}");
        assert_eq!(got.value, discriminant_oracle(&f).unwrap().value, "{s}");
    }

    #[test]
    fn routes_by_shape() {
        check("x^7 + 2x^2 + 3x + 4", Method::ClosedFormK2);
        check("x^7 + 2x^2 + 3x", Method::OracleSylvester);
        check("x^6 + x^5 + 2x^4 + 3x^3 + x^2 + x + 1", Method::OracleSylvester);
        check("x^3 + x^2 + x + 1", Method::ClosedFormCubic);
        check("x^2 + 1", Method::ClosedFormBinomial);
        check("x + 5", Method::ClosedFormBinomial);
        check("x^4 + 2x^3 - x + 3", Method::ClosedFormQuarticK3);
        check("x^6 + (1+i)x^2 - 3", Method::ClosedFormTrinomial);
        check("x^8 - i*x^3 + i*x + 1", Method::ClosedFormK3);
        check("x^7 + 2x^6 + 3x + 4", Method::ClosedFormKNMinus1);
        check("x^7 + 2x^6 + 3x^5 + 4", Method::ClosedFormRecipN2);
        check("x^7 + 2x^6 + 3x^4 + 4", Method::ClosedFormRecipN3);
        check("x^10 + 3x^5 + 2x^2 - 1", Method::PipelineTwoN);
        check("x^10 + 2x^5 + 2x^2 + 1", Method::OracleSylvester);
    }

    #[test]
    fn non_monic_scales() {
        check("3x^7 + 2x^2 + 3x + 4", Method::ClosedFormK2);
        check("(2-i)x^3 + x - 1/2", Method::ClosedFormCubic);
        check("-2x^5 + 7", Method::ClosedFormBinomial);
    }
}
