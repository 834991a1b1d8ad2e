//! Dense univariate polynomials over Q(i).

mod family;
mod text;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;

pub use family::{Family, QuadrinomialSpec};

/// Coefficients in ascending order of power, with no trailing zeros.
///
/// The zero polynomial has no coefficients and degree `None`, which orders
/// below every `Some(d)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Sum of `c·x^k` over the given terms; repeated powers accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, GaussianRational)>,
    {
        let mut coeffs: Vec<GaussianRational> = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, GaussianRational::zero());
            }
            coeffs[k] += &c;
        }
        Self::new(coeffs)
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(GaussianRational::is_one)
    }

    /// Powers carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = lc.inv()?;
        Ok(self.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(k as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `f = q·g + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = g.coeffs[dg].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(df) = self.degree().filter(|&df| df >= dg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![GaussianRational::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let t = top * &lc_inv;
            for (j, gj) in g.coeffs.iter().enumerate() {
                if !gj.is_zero() {
                    rem[k + j] -= &(&t * gj);
                }
            }
            quot[k] = t;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `x^n·f(1/x)` for `n = deg f`: the coefficient sequence reversed.
    /// The degree drops when the constant term is zero.
    pub fn reciprocal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
