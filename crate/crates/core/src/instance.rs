//! Seeded random members of every family with a closed form.

use std::fmt;

use rand::Rng;

use crate::closedform::{
    disc_2n_pipeline, disc_binomial, disc_otake_shaska, disc_quad_k2, disc_quad_k3, disc_quad_k_nm1,
    disc_recip_n2, disc_recip_n3, disc_trinomial,
};
use crate::error::{precondition, Result};
use crate::exact::{BigInt, GaussianRational as Q};
use crate::poly::{Family, Polynomial, QuadrinomialSpec};
use crate::resultant::{discriminant_oracle, DiscriminantResult, Method};

/// Every formula family, quadrinomial or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Binomial,
    Trinomial,
    Quad(Family),
    OtakeShaska,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::Binomial,
        FamilyKind::Trinomial,
        FamilyKind::Quad(Family::K2),
        FamilyKind::Quad(Family::K3),
        FamilyKind::Quad(Family::KNMinus1),
        FamilyKind::Quad(Family::RecipN2),
        FamilyKind::Quad(Family::RecipN3),
        FamilyKind::Quad(Family::TwoN),
        FamilyKind::OtakeShaska,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Binomial => "binomial",
            FamilyKind::Trinomial => "trinomial",
            FamilyKind::Quad(f) => f.tag(),
            FamilyKind::OtakeShaska => "os",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }

    /// Smallest admissible `n` (the half-degree for `two_n`).
    pub fn min_n(self) -> i64 {
        match self {
            FamilyKind::Binomial => 1,
            FamilyKind::Trinomial => 3,
            FamilyKind::Quad(f) => f.min_n(),
            FamilyKind::OtakeShaska => 4,
        }
    }

    /// Largest `n` whose polynomial has degree at most `deg`.
    pub fn max_n_for_degree(self, deg: i64) -> i64 {
        match self {
            FamilyKind::Quad(Family::TwoN) => deg / 2,
            _ => deg,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One concrete family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Binomial { n: i64, a: Q },
    Trinomial { n: i64, k: i64, a: Q, b: Q },
    Quad(QuadrinomialSpec),
    OtakeShaska { n: i64, a: Q, b: Q, t: Q },
}

impl Instance {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Instance::Binomial { .. } => FamilyKind::Binomial,
            Instance::Trinomial { .. } => FamilyKind::Trinomial,
            Instance::Quad(s) => FamilyKind::Quad(s.family),
            Instance::OtakeShaska { .. } => FamilyKind::OtakeShaska,
        }
    }

    pub fn n(&self) -> i64 {
        match self {
            Instance::Binomial { n, .. } | Instance::Trinomial { n, .. } | Instance::OtakeShaska { n, .. } => *n,
            Instance::Quad(s) => s.n,
        }
    }

    pub fn polynomial(&self) -> Polynomial {
        match self {
            Instance::Binomial { n, a } => Polynomial::from_terms([(*n as usize, Q::one()), (0, a.clone())]),
            Instance::Trinomial { n, k, a, b } => {
                Polynomial::from_terms([(*n as usize, Q::one()), (*k as usize, a.clone()), (0, b.clone())])
            }
            Instance::Quad(s) => s.expand(),
            Instance::OtakeShaska { n, a, b, t } => {
                Polynomial::from_terms([(*n as usize, Q::one()), (2, t.clone()), (1, t * a), (0, t * b)])
            }
        }
    }

    /// The family's own closed form, never the oracle.
    pub fn formula(&self) -> Result<DiscriminantResult> {
        let plain = |value: Q, method: Method, n: i64| DiscriminantResult {
            value,
            method,
            sign_exponent_audit: BigInt::from(n * (n - 1) / 2),
        };
        match self {
            Instance::Binomial { n, a } => Ok(plain(disc_binomial(*n, a)?, Method::ClosedFormBinomial, *n)),
            Instance::Trinomial { n, k, a, b } => {
                Ok(plain(disc_trinomial(*n, *k, a, b)?, Method::ClosedFormTrinomial, *n))
            }
            Instance::Quad(s) => match s.family {
                Family::K2 => disc_quad_k2(s),
                Family::K3 => disc_quad_k3(s),
                Family::KNMinus1 => disc_quad_k_nm1(s),
                Family::RecipN2 => disc_recip_n2(s),
                Family::RecipN3 => disc_recip_n3(s),
                Family::TwoN => disc_2n_pipeline(s),
            },
            Instance::OtakeShaska { n, a, b, t } => {
                let m1 = (n - 2) / 2;
                Ok(DiscriminantResult {
                    value: disc_otake_shaska(*n, a, b, t)?,
                    method: Method::ClosedFormOtakeShaska,
                    sign_exponent_audit: BigInt::from(m1),
                })
            }
        }
    }

    pub fn oracle(&self) -> Result<DiscriminantResult> {
        discriminant_oracle(&self.polynomial())
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Binomial { n, a } => write!(f, "binomial n={n} a={a}"),
            Instance::Trinomial { n, k, a, b } => write!(f, "trinomial n={n} k={k} a={a} b={b}"),
            Instance::Quad(s) => write!(f, "{s}"),
            Instance::OtakeShaska { n, a, b, t } => write!(f, "os n={n} a={a} b={b} t={t}"),
        }
    }
}

/// `p/q + (r/s)i` with `p, r ∈ [-99, 99]`, `q, s ∈ [1, 9]`; never zero.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Q {
    loop {
        let v = Q::from_parts(
            rng.gen_range(-99..=99),
            rng.gen_range(1..=9),
            rng.gen_range(-99..=99),
            rng.gen_range(1..=9),
        )
        .expect("nonzero denominators");
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random member of `kind` with the given `n`, resampling coefficients
/// that violate the family's preconditions.
pub fn random_instance<R: Rng + ?Sized>(kind: FamilyKind, n: i64, rng: &mut R) -> Result<Instance> {
    if n < kind.min_n() {
        return Err(precondition(format!("{kind}: requires n >= {}, got {n}", kind.min_n())));
    }
    Ok(match kind {
        FamilyKind::Binomial => Instance::Binomial { n, a: random_coefficient(rng) },
        FamilyKind::Trinomial => {
            let k = rng.gen_range(1..n);
            let (a, b) = (random_coefficient(rng), random_coefficient(rng));
            Instance::Trinomial { n, k, a, b }
        }
        FamilyKind::Quad(Family::TwoN) => {
            let l = rng.gen_range(1..=(n - 1) / 2);
            loop {
                let (a, b, c) = (random_coefficient(rng), random_coefficient(rng), random_coefficient(rng));
                if let Ok(s) = QuadrinomialSpec::two_n(n, l, a, b, c) {
                    break Instance::Quad(s);
                }
            }
        }
        FamilyKind::Quad(family) => {
            let (a, b, c) = (random_coefficient(rng), random_coefficient(rng), random_coefficient(rng));
            Instance::Quad(QuadrinomialSpec::new(family, n, 0, a, b, c)?)
        }
        FamilyKind::OtakeShaska => {
            // A zero linear coefficient exercises the γ = 0 branch for odd n.
            let a = if rng.gen_bool(0.2) { Q::zero() } else { random_coefficient(rng) };
            let (b, t) = (random_coefficient(rng), random_coefficient(rng));
            Instance::OtakeShaska { n, a, b, t }
        }
    })
}

/// A random member of `kind` with degree at most `max_degree`.
pub fn random_instance_up_to<R: Rng + ?Sized>(kind: FamilyKind, max_degree: i64, rng: &mut R) -> Result<Instance> {
    let hi = kind.max_n_for_degree(max_degree);
    if hi < kind.min_n() {
        return Err(precondition(format!("{kind}: no member of degree <= {max_degree}")));
    }
    let n = rng.gen_range(kind.min_n()..=hi);
    random_instance(kind, n, rng)
}
