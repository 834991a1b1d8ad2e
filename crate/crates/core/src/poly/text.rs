//! `x^7 + (2-3i)*x^2 - 1/2` style text.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exact::text::Cursor;
use crate::exact::GaussianRational;

/// Negative real, or purely imaginary with negative imaginary part.
fn leads_negative(c: &GaussianRational) -> bool {
    if c.re_num().is_zero() {
        c.im_num().is_negative()
    } else {
        c.re_num().is_negative() && c.im_num().is_zero()
    }
}

fn needs_parens(c: &GaussianRational) -> bool {
    !c.re_num().is_zero() && !c.im_num().is_zero()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = leads_negative(c);
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let m = if neg { -c } else { c.clone() };
            let coeff = if needs_parens(&m) {
                format!("({m})")
            } else {
                m.to_string()
            };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<(usize, GaussianRational)> {
    let coeff = if cur.eat(b'(') {
        cur.skip_ws();
        let v = cur.gaussian()?;
        cur.skip_ws();
        if !cur.eat(b')') {
            return cur.error("expected ')'");
        }
        Some(v)
    } else {
        cur.atom()?
    };
    cur.skip_ws();
    let star = cur.eat(b'*');
    if star {
        cur.skip_ws();
    }
    if cur.peek() == Some(b'x') {
        cur.bump();
        cur.skip_ws();
        let power = if cur.eat(b'^') {
            cur.skip_ws();
            let at = cur.pos();
            let Some(d) = cur.digits() else {
                return cur.error("expected exponent after '^'");
            };
            usize::try_from(&d).map_err(|_| Error::Parse {
                pos: at,
                msg: "exponent out of range".into(),
            })?
        } else {
            1
        };
        Ok((power, coeff.unwrap_or_else(GaussianRational::one)))
    } else if star {
        cur.error("expected 'x' after '*'")
    } else {
        match coeff {
            Some(c) => Ok((0, c)),
            None => cur.error("expected a term"),
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut terms = Vec::new();
        cur.skip_ws();
        let mut neg = if cur.eat(b'-') {
            true
        } else {
            cur.eat(b'+');
            false
        };
        loop {
            cur.skip_ws();
            let (k, c) = term(&mut cur)?;
            terms.push((k, if neg { -c } else { c }));
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            neg = match cur.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return cur.error("expected '+', '-' or end of input"),
            };
            cur.bump();
        }
        Ok(Polynomial::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_rendering() {
        let f = p("x^7 + (2-3i)*x^2 - 1/2");
        assert_eq!(f.to_string(), "x^7 + (2-3i)*x^2 - 1/2");
        assert_eq!(p("x^8 - i*x^3 + i*x + 1").to_string(), "x^8 - i*x^3 + i*x + 1");
        assert_eq!(p("-x^2 + 3/4i*x").to_string(), "-x^2 + 3/4i*x");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-(1+i)").to_string(), "(-1-i)");
    }

    #[test]
    fn terms_in_any_order_and_merged() {
        assert_eq!(p("1 + x + x^3 + x^2"), p("x^3+x^2+x+1"));
        assert_eq!(p("x + x - 2*x + 5"), p("5"));
        assert_eq!(p("2x^2"), p("2*x^2"));
        assert_eq!(p("(1+i) * x"), p("(1+i)x"));
    }

    #[test]
    fn errors_report_position() {
        let cases = [
            ("x^", 2),
            ("x^3 +", 5),
            ("x^3 ++ 1", 5),
            ("3*", 2),
            ("(1+i", 4),
            ("x^2 y", 4),
            ("1/0 x", 2),
        ];
        for (s, pos) in cases {
            match s.parse::<Polynomial>() {
                Err(Error::Parse { pos: got, .. }) => assert_eq!(got, pos, "{s}"),
                other => panic!("{s}: {other:?}"),
            }
        }
    }
}
