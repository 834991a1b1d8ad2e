//! Resultants and discriminants computed from first principles.
//!
//! These are the reference values every closed form in [`crate::closedform`]
//! is checked against: a Sylvester determinant, and an independent
//! Euclidean-reduction route that never builds a matrix.

mod bareiss;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{precondition, Error, Result};
use crate::exact::{sign_pow, GaussianRational};
use crate::poly::Polynomial;

pub use bareiss::determinant;

/// Which code path produced a discriminant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedFormBinomial,
    ClosedFormTrinomial,
    ClosedFormCubic,
    ClosedFormQuarticK3,
    ClosedFormK2,
    ClosedFormK3,
    ClosedFormKNMinus1,
    ClosedFormRecipN2,
    ClosedFormRecipN3,
    ClosedFormOtakeShaska,
    PipelineTwoN,
    OracleSylvester,
    OraclePrs,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedFormBinomial => "CLOSED_FORM_BINOMIAL",
            Method::ClosedFormTrinomial => "CLOSED_FORM_TRINOMIAL",
            Method::ClosedFormCubic => "CLOSED_FORM_CUBIC",
            Method::ClosedFormQuarticK3 => "CLOSED_FORM_QUARTIC_K3",
            Method::ClosedFormK2 => "CLOSED_FORM_K2",
            Method::ClosedFormK3 => "CLOSED_FORM_K3",
            Method::ClosedFormKNMinus1 => "CLOSED_FORM_KNM1",
            Method::ClosedFormRecipN2 => "CLOSED_FORM_RECIP_N2",
            Method::ClosedFormRecipN3 => "CLOSED_FORM_RECIP_N3",
            Method::ClosedFormOtakeShaska => "CLOSED_FORM_OTAKE_SHASKA",
            Method::PipelineTwoN => "PIPELINE_TWO_N",
            Method::OracleSylvester => "ORACLE_SYLVESTER",
            Method::OraclePrs => "ORACLE_PRS",
        }
    }

    pub fn is_oracle(self) -> bool {
        matches!(self, Method::OracleSylvester | Method::OraclePrs)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact discriminant together with the path that computed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantResult {
    pub value: GaussianRational,
    pub method: Method,
    /// The exponent `e` of the global sign `(-1)^e` the path applied, e.g.
    /// `n(n-1)/2` for the oracle.
    pub sign_exponent_audit: BigInt,
}

/// The `(n+m)×(n+m)` Sylvester matrix of `f` (degree n) and `g` (degree m):
/// m shifted rows of f's coefficients followed by n shifted rows of g's,
/// leading coefficient first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    pub n: usize,
    pub m: usize,
    rows: Vec<Vec<GaussianRational>>,
}

impl SylvesterMatrix {
    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussianRational {
        &self.rows[row][col]
    }

    pub fn det(&self) -> GaussianRational {
        determinant(&self.rows)
    }
}

fn degrees(f: &Polynomial, g: &Polynomial) -> Result<(usize, usize)> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n + m == 0 {
        return Err(precondition("resultant of two constants is undefined"));
    }
    Ok((n, m))
}

pub fn sylvester(f: &Polynomial, g: &Polynomial) -> Result<SylvesterMatrix> {
    let (n, m) = degrees(f, g)?;
    let dim = n + m;
    let band = |p: &Polynomial, shifts: usize| {
        let desc: Vec<_> = p.coeffs().iter().rev().cloned().collect();
        (0..shifts).map(move |s| {
            let mut row = vec![GaussianRational::zero(); dim];
            row[s..s + desc.len()].clone_from_slice(&desc);
            row
        })
    };
    let rows = band(f, m).chain(band(g, n)).collect();
    Ok(SylvesterMatrix { n, m, rows })
}

/// `R(f, g) = det Syl(f, g)`.
pub fn resultant_sylvester(f: &Polynomial, g: &Polynomial) -> Result<GaussianRational> {
    Ok(sylvester(f, g)?.det())
}

/// `R(f, g)` by repeated Euclidean reduction.
///
/// With `n >= m`, replacing `f` by its remainder `r` modulo `g`
/// (`deg r = k`) multiplies the resultant by `(-1)^((n-k)m) · lc(g)^(n-k)`;
/// arguments are swapped with the `(-1)^(nm)` antisymmetry factor, and a
/// constant argument ends the recursion: `R(f, c) = c^deg f`.
pub fn resultant_prs(f: &Polynomial, g: &Polynomial) -> Result<GaussianRational> {
    degrees(f, g)?;
    let mut f = f.clone();
    let mut g = g.clone();
    let mut acc = GaussianRational::one();
    loop {
        let n = f.degree().expect("nonzero") as u64;
        let m = g.degree().expect("nonzero") as u64;
        if m == 0 {
            return Ok(acc * g.coeff(0).pow(n));
        }
        if n == 0 {
            return Ok(acc * f.coeff(0).pow(m));
        }
        if n < m {
            if sign_pow(&(n * m)) < 0 {
                acc = -acc;
            }
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let (_, r) = f.divmod(&g)?;
        let Some(k) = r.degree() else {
            return Ok(GaussianRational::zero());
        };
        let k = k as u64;
        acc = acc * g.leading().expect("nonzero").pow(n - k);
        // (n-k)m from the reduction step, km from swapping R(r, g) to R(g, r).
        if sign_pow(&((n - k) * m + k * m)) < 0 {
            acc = -acc;
        }
        f = g;
        g = r;
    }
}

/// Which resultant algorithm backs [`discriminant_oracle_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleKind {
    #[default]
    Sylvester,
    Prs,
}

/// `Δ(f) = (-1)^(n(n-1)/2) · a_n^(-1) · R(f, f')` via the Sylvester determinant.
pub fn discriminant_oracle(f: &Polynomial) -> Result<DiscriminantResult> {
    discriminant_oracle_with(f, OracleKind::Sylvester)
}

pub fn discriminant_oracle_with(f: &Polynomial, kind: OracleKind) -> Result<DiscriminantResult> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooLow { found: 0, min: 1 });
    }
    let df = f.derivative();
    let (res, method) = match kind {
        OracleKind::Sylvester => (resultant_sylvester(f, &df)?, Method::OracleSylvester),
        OracleKind::Prs => (resultant_prs(f, &df)?, Method::OraclePrs),
    };
    let sign_exp = (n as u64) * (n as u64 - 1) / 2;
    let mut value = res.checked_div(f.leading().expect("nonzero"))?;
    if sign_pow(&sign_exp) < 0 {
        value = -value;
    }
    Ok(DiscriminantResult {
        value,
        method,
        sign_exponent_audit: sign_exp.into(),
    })
}
