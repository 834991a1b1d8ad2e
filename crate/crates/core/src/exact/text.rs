//! Shared lexing helpers for the Gaussian rational and polynomial text formats.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub(crate) fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }

    /// `digits ['/' digits]`, unsigned.
    pub(crate) fn ratio(&mut self) -> Result<Option<(BigInt, BigInt)>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let Some(den) = self.digits() else {
                return self.error("expected denominator after '/'");
            };
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Some((num, den)));
        }
        Ok(Some((num, BigInt::one())))
    }

    /// An unsigned atom: `ratio`, `ratio i`, or `i`.
    pub(crate) fn atom(&mut self) -> Result<Option<GaussianRational>> {
        let r = self.ratio()?;
        let imag = self.eat(b'i');
        let value = match (r, imag) {
            (None, false) => return Ok(None),
            (None, true) => GaussianRational::i(),
            (Some((p, q)), false) => GaussianRational::from_ratio(p, q)?,
            (Some((p, q)), true) => GaussianRational::from_ratio(p, q)? * GaussianRational::i(),
        };
        Ok(Some(value))
    }

    /// The canonical `p/q+r/si` grammar: one or two signed atoms.
    pub(crate) fn gaussian(&mut self) -> Result<GaussianRational> {
        let neg = self.signed_prefix();
        let Some(first) = self.atom()? else {
            return self.error("expected a number or 'i'");
        };
        let mut value = if neg { -first } else { first };
        if value.im_num().is_zero() && matches!(self.peek(), Some(b'+' | b'-')) {
            let save = self.pos;
            let neg = self.signed_prefix();
            match self.atom()? {
                Some(second) if second.re_num().is_zero() && !second.im_num().is_zero() => {
                    value = if neg { value - second } else { value + second };
                }
                _ => self.pos = save,
            }
        }
        Ok(value)
    }

    fn signed_prefix(&mut self) -> bool {
        if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        }
    }
}
