use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of Z[i].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn from_int(re: BigInt) -> Self {
        Self {
            re,
            im: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// re² + im²
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if self.im.is_zero() {
            return Self::from_int(&self.re * k);
        }
        Self::new(&self.re * k, &self.im * k)
    }

    /// Division by a rational integer that is known to divide both parts.
    pub fn div_exact_int(&self, k: &BigInt) -> Self {
        debug_assert!((&self.re % k).is_zero() && (&self.im % k).is_zero());
        Self::new(&self.re / k, &self.im / k)
    }

    /// Exact quotient `self / other`; the caller guarantees divisibility in Z[i].
    pub fn div_exact(&self, other: &Self) -> Self {
        if other.im.is_zero() {
            return self.div_exact_int(&other.re);
        }
        let num = self * &other.conj();
        num.div_exact_int(&other.norm())
    }

    /// gcd of the real and imaginary parts (content over Z).
    pub fn content(&self) -> BigInt {
        self.re.gcd(&self.im)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Bit length of the larger part, handy for cost estimates.
    pub fn bits(&self) -> u64 {
        self.re.abs().bits().max(self.im.abs().bits())
    }
}

impl<'a> Add<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        // Real operands dominate the Sylvester workloads.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussianInteger::from_int(&self.re * &rhs.re),
            (true, false) => rhs.scale(&self.re),
            (false, true) => self.scale(&rhs.re),
            (false, false) => GaussianInteger::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger::new(-self.re, -self.im)
    }
}
