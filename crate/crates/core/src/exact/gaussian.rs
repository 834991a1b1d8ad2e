use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::text::Cursor;
use super::GaussianInteger;
use crate::error::{Error, Result};

/// An exact element of Q(i), stored as `(re + im·i) / den`.
///
/// The denominator is shared between the two parts, always positive, and
/// `gcd(re, im, den) = 1`. Every constructor and operation returns a
/// normalized value, so derived `PartialEq`/`Hash` are structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

impl GaussianRational {
    /// `(re + im·i) / den`; fails on a zero denominator.
    pub fn new(re: BigInt, im: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(re, im, den))
    }

    pub fn from_ratio(num: BigInt, den: BigInt) -> Result<Self> {
        Self::new(num, BigInt::zero(), den)
    }

    /// Build from independent real and imaginary fractions `p/q + (r/s)i`.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        let re = Self::from_ratio(p.into(), q.into())?;
        let im = Self::from_ratio(r.into(), s.into())?;
        Ok(re + im * Self::i())
    }

    pub fn from_gaussian_integer(z: GaussianInteger) -> Self {
        Self {
            re: z.re,
            im: z.im,
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from(0i64)
    }

    pub fn one() -> Self {
        Self::from(1i64)
    }

    pub fn i() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::one(),
            den: BigInt::one(),
        }
    }

    fn normalized(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Self {
        if re.is_zero() && im.is_zero() {
            return Self {
                re,
                im,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        if !den.is_one() {
            let mut g = gcd_reduced(&den, &re);
            if !g.is_one() {
                g = gcd_reduced(&g, &im);
            }
            if !g.is_one() {
                re /= &g;
                im /= &g;
                den /= &g;
            }
        }
        Self { re, im, den }
    }

    pub fn re_num(&self) -> &BigInt {
        &self.re
    }

    pub fn im_num(&self) -> &BigInt {
        &self.im
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// The numerator `re + im·i` over the shared denominator.
    pub fn numerator(&self) -> GaussianInteger {
        GaussianInteger::new(self.re.clone(), self.im.clone())
    }

    /// Real part as a reduced fraction `(p, q)`, `q > 0`.
    pub fn re_ratio(&self) -> (BigInt, BigInt) {
        reduce(&self.re, &self.den)
    }

    /// Imaginary part as a reduced fraction `(r, s)`, `s > 0`.
    pub fn im_ratio(&self) -> (BigInt, BigInt) {
        reduce(&self.im, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.den.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // den / (re + im i) = den (re - im i) / (re² + im²)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Self::normalized(
            &self.re * &self.den,
            -(&self.im * &self.den),
            norm,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a/d1) / (c/d2) = a·conj(c)·d2 / (d1·|c|²)
        let a = self.numerator();
        let c = rhs.numerator();
        let num = (&a * &c.conj()).scale(&rhs.den);
        Ok(Self::normalized(num.re, num.im, &self.den * c.norm()))
    }

    /// Binary exponentiation. `0^0` is taken to be 1 so that formula terms
    /// with a vanishing base and exponent need no special casing.
    pub fn pow(&self, e: u64) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.is_zero() {
            return Self::zero();
        }
        let num = self.numerator().pow(e);
        let den = num_traits::pow::pow(self.den.clone(), e as usize);
        if self.im.is_zero() {
            // gcd(p, q) = 1 already implies gcd(p^e, q^e) = 1.
            return Self {
                re: num.re,
                im: num.im,
                den,
            };
        }
        Self::normalized(num.re, num.im, den)
    }

    /// Integer exponent; negative powers invert first.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Exponent given as a big integer (must fit in 64 bits to be computable at all).
    pub fn pow_big(&self, e: &BigInt) -> Result<Self> {
        use num_traits::ToPrimitive;
        match e.to_i64() {
            Some(e) => self.powi(e),
            None if self.is_zero() || self.is_one() => Ok(self.clone()),
            None => Err(crate::error::precondition("exponent too large")),
        }
    }

    /// Multiply by a small integer.
    pub fn scale(&self, k: i64) -> Self {
        Self::normalized(&self.re * k, &self.im * k, self.den.clone())
    }

    /// Decimal length of the longest numerator part, ignoring sign.
    pub fn numerator_digits(&self) -> usize {
        let re = self.re.abs().to_string().len();
        let im = self.im.abs().to_string().len();
        re.max(im)
    }
}

/// gcd that first reduces the larger argument modulo the smaller one;
/// binary gcd on operands of very different sizes is needlessly slow.
fn gcd_reduced(x: &BigInt, y: &BigInt) -> BigInt {
    let (big, small) = if x.bits() >= y.bits() { (x, y) } else { (y, x) };
    if small.is_zero() {
        return big.abs();
    }
    let r = big % small;
    small.gcd(&r)
}

fn reduce(num: &BigInt, den: &BigInt) -> (BigInt, BigInt) {
    if num.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let g = num.gcd(den);
    (num / &g, den / &g)
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self {
            re: v.into(),
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }
}

impl From<BigInt> for GaussianRational {
    fn from(v: BigInt) -> Self {
        Self {
            re: v,
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.den == rhs.den {
            return GaussianRational::normalized(
                &self.re + &rhs.re,
                &self.im + &rhs.im,
                self.den.clone(),
            );
        }
        GaussianRational::normalized(
            &self.re * &rhs.den + &rhs.re * &self.den,
            &self.im * &rhs.den + &rhs.im * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        if self.den == rhs.den {
            return GaussianRational::normalized(
                &self.re - &rhs.re,
                &self.im - &rhs.im,
                self.den.clone(),
            );
        }
        GaussianRational::normalized(
            &self.re * &rhs.den - &rhs.re * &self.den,
            &self.im * &rhs.den - &rhs.im * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        let n = &self.numerator() * &rhs.numerator();
        GaussianRational::normalized(n.re, n.im, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`GaussianRational::checked_div`] to get an error instead.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational { (&self).$m(rhs) }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: GaussianRational) {
        *self = &*self - &rhs;
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: GaussianRational) {
        *self = &*self * &rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
            den: self.den,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, p: &BigInt, q: &BigInt) -> fmt::Result {
    if q.is_one() {
        write!(f, "{p}")
    } else {
        write!(f, "{p}/{q}")
    }
}

/// Canonical `p/q+r/si` form: `3`, `-1/2`, `i`, `2-3/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.re_ratio();
        let (r, s) = self.im_ratio();
        let has_re = !p.is_zero();
        if has_re || r.is_zero() {
            write_ratio(f, &p, &q)?;
        }
        if r.is_zero() {
            return Ok(());
        }
        if r.is_negative() {
            f.write_str("-")?;
        } else if has_re {
            f.write_str("+")?;
        }
        let r = r.abs();
        if !(r.is_one() && s.is_one()) {
            write_ratio(f, &r, &s)?;
        }
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussianRational({self})")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let v = cur.gaussian()?;
        if !cur.at_end() {
            return cur.error("unexpected trailing input");
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_product_is_real() {
        assert_eq!(gr("1+i") * gr("1-i"), gr("2"));
    }

    #[test]
    fn additive_identity_and_inverse() {
        let x = gr("2-3/4i");
        assert_eq!(&x + &GaussianRational::zero(), x);
        assert_eq!(gr("3/4") / gr("3/4"), GaussianRational::one());
        assert_eq!(x.checked_div(&x).unwrap(), GaussianRational::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            gr("5").checked_div(&GaussianRational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
        assert!(GaussianRational::new(1.into(), 0.into(), 0.into()).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(GaussianRational::i().pow(4), GaussianRational::one());
        assert_eq!(gr("1/2").pow(3), gr("1/8"));
        assert_eq!(gr("-7/3+2i").pow(0), GaussianRational::one());
        assert_eq!(GaussianRational::zero().pow(0), GaussianRational::one());
        assert_eq!(GaussianRational::zero().pow(3), GaussianRational::zero());
        assert_eq!(gr("2").powi(-2).unwrap(), gr("1/4"));
        // (1+i)/2 squared reduces: 2i/4 = i/2
        assert_eq!(gr("1/2+1/2i").pow(2), gr("1/2i"));
    }

    #[test]
    fn shared_denominator_is_normalized() {
        let x = GaussianRational::new(6.into(), (-4).into(), (-8).into()).unwrap();
        assert_eq!(x.re_num(), &BigInt::from(-3));
        assert_eq!(x.im_num(), &BigInt::from(2));
        assert_eq!(x.den(), &BigInt::from(4));
        assert_eq!(x.to_string(), "-3/4+1/2i");
    }

    #[test]
    fn canonical_text() {
        for s in ["3", "-1/2", "i", "-i", "2-3/4i", "0", "1/3i", "-5+2i", "7/2+i"] {
            assert_eq!(gr(s).to_string(), s);
        }
        assert_eq!(gr("+4/6").to_string(), "2/3");
        assert_eq!(gr("2i").to_string(), "2i");
    }

    #[test]
    fn rejects_malformed_text() {
        for s in ["", "1/0", "1/", "abc", "1+2", "i+1", "1..2"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }
}
