//! Turning command-line flags into a polynomial or a family member.

use quadisc::instance::{FamilyKind, Instance};
use quadisc::{Error, GaussianRational, Polynomial, QuadrinomialSpec};

use crate::args::{FamilyArgs, InputArgs};
use crate::CliError;

pub enum Input {
    Poly { text: String, poly: Polynomial },
    Member(Instance),
}

impl Input {
    pub fn polynomial(&self) -> Polynomial {
        match self {
            Input::Poly { poly, .. } => poly.clone(),
            Input::Member(inst) => inst.polynomial(),
        }
    }

    /// How the input is echoed back: the user's text, or the expanded polynomial.
    pub fn label(&self) -> String {
        match self {
            Input::Poly { text, .. } => text.clone(),
            Input::Member(inst) => inst.polynomial().to_string(),
        }
    }
}

fn parse_error(what: &str, text: &str, err: Error) -> CliError {
    match err {
        Error::Parse { pos, msg } => CliError::Usage(format!("{what} {text:?}: {msg} at offset {pos}")),
        other => CliError::Usage(format!("{what} {text:?}: {other}")),
    }
}

fn coeff(name: &str, value: &Option<String>) -> Result<GaussianRational, CliError> {
    let text = value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))?;
    text.trim().parse().map_err(|e| parse_error(&format!("--{name}"), text, e))
}

fn int(name: &str, value: Option<i64>) -> Result<i64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
}

pub fn family_kind(tag: &str) -> Result<FamilyKind, CliError> {
    FamilyKind::from_tag(tag).ok_or_else(|| {
        let known: Vec<_> = FamilyKind::ALL.iter().map(|k| k.tag()).collect();
        CliError::Usage(format!("unknown family {tag:?}; expected one of {}", known.join(", ")))
    })
}

fn member(tag: &str, f: &FamilyArgs) -> Result<Instance, CliError> {
    let kind = family_kind(tag)?;
    let n = int("n", f.n)?;
    let usage = |e: Error| CliError::Usage(e.to_string());
    let inst = match kind {
        FamilyKind::Binomial => Instance::Binomial { n, a: coeff("a", &f.a)? },
        FamilyKind::Trinomial => Instance::Trinomial {
            n,
            k: int("k", f.k)?,
            a: coeff("a", &f.a)?,
            b: coeff("b", &f.b)?,
        },
        FamilyKind::OtakeShaska => Instance::OtakeShaska {
            n,
            a: coeff("a", &f.a)?,
            b: coeff("b", &f.b)?,
            t: coeff("t", &f.t)?,
        },
        FamilyKind::Quad(family) => {
            let l = if family == quadisc::Family::TwoN { int("l", f.l)? } else { 0 };
            Instance::Quad(
                QuadrinomialSpec::new(family, n, l, coeff("a", &f.a)?, coeff("b", &f.b)?, coeff("c", &f.c)?)
                    .map_err(usage)?,
            )
        }
    };
    // Validate the remaining preconditions up front so they surface as usage errors.
    if let Err(e @ (Error::Precondition(_) | Error::DegreeTooLow { .. })) = inst.formula() {
        return Err(usage(e));
    }
    Ok(inst)
}

pub fn resolve(args: &InputArgs) -> Result<Input, CliError> {
    match (&args.poly, &args.family.family) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either a polynomial or --family, not both".into())),
        (None, None) => Err(CliError::Usage("expected a polynomial or --family".into())),
        (Some(text), None) => {
            let poly: Polynomial = text.parse().map_err(|e| parse_error("polynomial", text, e))?;
            match poly.degree() {
                Some(d) if d >= 1 => Ok(Input::Poly { text: text.clone(), poly }),
                _ => Err(CliError::Usage(format!("polynomial {text:?} has degree < 1"))),
            }
        }
        (None, Some(tag)) => Ok(Input::Member(member(tag, &args.family)?)),
    }
}
