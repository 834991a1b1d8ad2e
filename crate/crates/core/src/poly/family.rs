use std::fmt;

use super::Polynomial;
use crate::error::{precondition, Result};
use crate::exact::GaussianRational;

/// The sparse quadrinomial shapes with a dedicated discriminant formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x^n + a x^2 + b x + c`, `n > 3`
    K2,
    /// `x^n + a x^3 + b x + c`, `n > 4`
    K3,
    /// `x^n + a x^(n-1) + b x + c`, `n > 4`
    KNMinus1,
    /// `x^n + a x^(n-1) + b x^(n-2) + c`, `n > 3`
    RecipN2,
    /// `x^n + a x^(n-1) + b x^(n-3) + c`, `n > 5`
    RecipN3,
    /// `x^(2n) + a x^n + b x^l + c`, `n > 2l`, `a² ≠ 4c`
    TwoN,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::K2,
        Family::K3,
        Family::KNMinus1,
        Family::RecipN2,
        Family::RecipN3,
        Family::TwoN,
    ];

    /// Short tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            Family::K2 => "k2",
            Family::K3 => "k3",
            Family::KNMinus1 => "knm1",
            Family::RecipN2 => "recip2",
            Family::RecipN3 => "recip3",
            Family::TwoN => "two_n",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> i64 {
        match self {
            Family::K2 | Family::RecipN2 => 4,
            Family::K3 | Family::KNMinus1 => 5,
            Family::RecipN3 => 6,
            Family::TwoN => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A validated member of one of the quadrinomial families.
///
/// For [`Family::TwoN`], `n` is the half-degree parameter: the polynomial is
/// `x^(2n) + a x^n + b x^l + c`. For every other family `n` is the degree and
/// `l` is implied by the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrinomialSpec {
    pub family: Family,
    pub n: i64,
    pub k: i64,
    pub l: i64,
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub c: GaussianRational,
}

impl QuadrinomialSpec {
    /// Checks the family's preconditions; `l` is only read for [`Family::TwoN`].
    pub fn new(
        family: Family,
        n: i64,
        l: i64,
        a: GaussianRational,
        b: GaussianRational,
        c: GaussianRational,
    ) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(precondition(format!("{family}: requires abc != 0")));
        }
        if n < family.min_n() {
            return Err(precondition(format!(
                "{family}: requires n >= {}, got n = {n}",
                family.min_n()
            )));
        }
        let (k, l) = match family {
            Family::K2 => (2, 1),
            Family::K3 => (3, 1),
            Family::KNMinus1 => (n - 1, 1),
            Family::RecipN2 => (n - 1, n - 2),
            Family::RecipN3 => (n - 1, n - 3),
            Family::TwoN => {
                if l < 1 || n <= 2 * l {
                    return Err(precondition(format!(
                        "two_n: requires 0 < l and n > 2l, got n = {n}, l = {l}"
                    )));
                }
                if &a * &a == c.scale(4) {
                    return Err(precondition("two_n: requires a^2 != 4c"));
                }
                (n, l)
            }
        };
        Ok(Self {
            family,
            n,
            k,
            l,
            a,
            b,
            c,
        })
    }

    pub fn k2(n: i64, a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Result<Self> {
        Self::new(Family::K2, n, 1, a, b, c)
    }

    pub fn k3(n: i64, a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Result<Self> {
        Self::new(Family::K3, n, 1, a, b, c)
    }

    pub fn knm1(n: i64, a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Result<Self> {
        Self::new(Family::KNMinus1, n, 1, a, b, c)
    }

    pub fn two_n(
        n: i64,
        l: i64,
        a: GaussianRational,
        b: GaussianRational,
        c: GaussianRational,
    ) -> Result<Self> {
        Self::new(Family::TwoN, n, l, a, b, c)
    }

    /// Degree of the expanded polynomial.
    pub fn degree(&self) -> i64 {
        match self.family {
            Family::TwoN => 2 * self.n,
            _ => self.n,
        }
    }

    /// The dense polynomial `x^deg + a x^k + b x^l + c`.
    pub fn expand(&self) -> Polynomial {
        Polynomial::from_terms([
            (self.degree() as usize, GaussianRational::one()),
            (self.k as usize, self.a.clone()),
            (self.l as usize, self.b.clone()),
            (0, self.c.clone()),
        ])
    }
}

impl fmt::Display for QuadrinomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} l={} a={} b={} c={}",
            self.family, self.n, self.l, self.a, self.b, self.c
        )
    }
}
