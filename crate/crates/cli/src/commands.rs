use std::io::Write;
use std::time::Instant;

use quadisc::instance::{random_instance, random_instance_up_to, FamilyKind, Instance};
use quadisc::resultant::discriminant_oracle;
use quadisc::{dispatch, DiscriminantResult, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{BenchArgs, Format, FuzzArgs, InputArgs, MethodArg};
use crate::input::{family_kind, resolve, Input};
use crate::CliError;

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> CliError {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return CliError::Closed;
    }
    CliError::Usage(format!("writing output: {e}"))
}

fn lib(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn audit(r: &DiscriminantResult) -> Value {
    let s = r.sign_exponent_audit.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn record(input: &str, r: &DiscriminantResult) -> Value {
    json!({
        "input": input,
        "method": r.method.as_str(),
        "value": r.value.to_string(),
        "sign_exponent_audit": audit(r),
    })
}

fn text_only(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--format {format:?} is not supported here").to_lowercase()))
    }
}

/// The closed form for this input; `Ok(None)` when only the oracle applies.
fn formula(input: &Input) -> Result<Option<DiscriminantResult>, CliError> {
    match input {
        Input::Member(inst) => match inst.formula() {
            Ok(r) => Ok(Some(r)),
            Err(Error::SingularFormula(_)) => Ok(None),
            Err(e) => Err(lib(e)),
        },
        Input::Poly { poly, .. } => {
            let r = dispatch(poly).map_err(lib)?;
            Ok((!r.method.is_oracle()).then_some(r))
        }
    }
}

fn oracle(input: &Input) -> Result<DiscriminantResult, CliError> {
    discriminant_oracle(&input.polynomial()).map_err(lib)
}

fn write_text(out: Out, input: &str, r: &DiscriminantResult) -> Result<(), CliError> {
    writeln!(out, "input: {input}").map_err(io)?;
    writeln!(out, "method: {}", r.method).map_err(io)?;
    writeln!(out, "value: {}", r.value).map_err(io)?;
    writeln!(out, "sign_exponent_audit: {}", r.sign_exponent_audit).map_err(io)
}

pub fn disc(args: &InputArgs, out: Out) -> Result<(), CliError> {
    text_only(args.format, &[Format::Text, Format::Json])?;
    let input = resolve(args)?;
    let label = input.label();
    let results = match args.method {
        MethodArg::Auto => vec![match formula(&input)? {
            Some(r) => r,
            None => oracle(&input)?,
        }],
        MethodArg::Formula => vec![formula(&input)?
            .ok_or_else(|| CliError::Usage("no closed form applies to this input".into()))?],
        MethodArg::Oracle => vec![oracle(&input)?],
        MethodArg::Both => {
            let f = formula(&input)?.ok_or_else(|| CliError::Usage("no closed form applies to this input".into()))?;
            vec![f, oracle(&input)?]
        }
    };
    match args.format {
        Format::Json => {
            let v = if results.len() == 1 {
                record(&label, &results[0])
            } else {
                Value::Array(results.iter().map(|r| record(&label, r)).collect())
            };
            writeln!(out, "{v}").map_err(io)?;
        }
        _ => {
            for (i, r) in results.iter().enumerate() {
                if i > 0 {
                    writeln!(out).map_err(io)?;
                }
                write_text(out, &label, r)?;
            }
        }
    }
    if results.len() == 2 && results[0].value != results[1].value {
        return Err(CliError::Mismatch(format!(
            "{label}: {} gives {}, {} gives {}",
            results[0].method, results[0].value, results[1].method, results[1].value
        )));
    }
    Ok(())
}

pub fn compare(args: &InputArgs, out: Out) -> Result<(), CliError> {
    text_only(args.format, &[Format::Text, Format::Json])?;
    let input = resolve(args)?;
    let label = input.label();
    let f = formula(&input)?.ok_or_else(|| CliError::Usage(format!("no closed form applies to {label}")))?;
    let o = oracle(&input)?;
    let equal = f.value == o.value;
    match args.format {
        Format::Json => {
            let v = json!({
                "input": label,
                "formula": record(&label, &f),
                "oracle": record(&label, &o),
                "equal": equal,
            });
            writeln!(out, "{v}").map_err(io)?;
        }
        _ => {
            writeln!(out, "input: {label}").map_err(io)?;
            writeln!(out, "formula: {}", f.method).map_err(io)?;
            writeln!(out, "oracle: {}", o.method).map_err(io)?;
            writeln!(out, "equal: {equal}").map_err(io)?;
            if equal {
                writeln!(out, "value: {}", f.value).map_err(io)?;
            } else {
                writeln!(out, "formula_value: {}", f.value).map_err(io)?;
                writeln!(out, "oracle_value: {}", o.value).map_err(io)?;
            }
        }
    }
    if equal {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{label}: formula and oracle differ")))
    }
}

struct Trial {
    index: u64,
    instance: Instance,
    outcome: Result<(), String>,
}

pub fn fuzz(args: &FuzzArgs, out: Out) -> Result<(), CliError> {
    text_only(args.format, &[Format::Text, Format::Json])?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let kinds: Vec<FamilyKind> = match &args.family {
        Some(tag) => vec![family_kind(tag)?],
        None => FamilyKind::ALL.to_vec(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut instances = Vec::with_capacity(args.trials as usize);
    for i in 0..args.trials {
        let kind = kinds[(i % kinds.len() as u64) as usize];
        instances.push(random_instance_up_to(kind, args.max_degree, &mut rng).map_err(lib)?);
    }
    let trials: Vec<Trial> = instances
        .into_par_iter()
        .enumerate()
        .map(|(i, instance)| {
            let outcome = match (instance.formula(), instance.oracle()) {
                (Ok(f), Ok(o)) if f.value == o.value => Ok(()),
                (Ok(f), Ok(o)) => Err(format!("formula {} oracle {}", f.value, o.value)),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            };
            Trial { index: i as u64, instance, outcome }
        })
        .collect();

    let failures: Vec<&Trial> = trials.iter().filter(|t| t.outcome.is_err()).collect();
    let passed = trials.len() - failures.len();
    match args.format {
        Format::Json => {
            let v = json!({
                "seed": args.seed,
                "trials": args.trials,
                "passed": passed,
                "failed": failures.len(),
                "failures": failures.iter().map(|t| json!({
                    "trial": t.index,
                    "instance": t.instance.to_string(),
                    "detail": t.outcome.as_ref().unwrap_err(),
                })).collect::<Vec<_>>(),
            });
            writeln!(out, "{v}").map_err(io)?;
        }
        _ => {
            for t in &failures {
                writeln!(
                    out,
                    "FAIL seed={} trial={} {}: {}",
                    args.seed,
                    t.index,
                    t.instance,
                    t.outcome.as_ref().unwrap_err()
                )
                .map_err(io)?;
            }
            writeln!(
                out,
                "fuzz seed={} trials={}: {passed}/{} passed",
                args.seed,
                args.trials,
                trials.len()
            )
            .map_err(io)?;
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{} of {} trials failed", failures.len(), trials.len())))
    }
}

fn ladder(max_n: i64, min_n: i64) -> Vec<i64> {
    let mut rungs = Vec::new();
    let mut n = 8;
    while n < max_n {
        if n >= min_n {
            rungs.push(n);
        }
        n *= 2;
    }
    if max_n >= min_n {
        rungs.push(max_n);
    }
    rungs
}

fn fastest<T>(trials: u64, mut f: impl FnMut() -> T) -> (T, u128) {
    let mut best = u128::MAX;
    let mut value = None;
    for _ in 0..trials {
        let start = Instant::now();
        let v = f();
        best = best.min(start.elapsed().as_nanos());
        value = Some(v);
    }
    (value.expect("trials >= 1"), best)
}

pub fn bench(args: &BenchArgs, out: Out) -> Result<(), CliError> {
    text_only(args.format, &[Format::Csv, Format::Json])?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let kind = family_kind(&args.family)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let csv = args.format == Format::Csv;
    if csv {
        writeln!(out, "family,n,method,nanos,digits").map_err(io)?;
    }
    let mut rows = Vec::new();
    let mut emit = |out: Out, row: Value, line: String| -> Result<(), CliError> {
        if csv {
            writeln!(out, "{line}").map_err(io)?;
            out.flush().map_err(io)
        } else {
            rows.push(row);
            Ok(())
        }
    };
    for n in ladder(args.max_n, kind.min_n()) {
        let inst = random_instance(kind, n, &mut rng).map_err(lib)?;
        let (f, nanos) = fastest(args.trials, || inst.formula());
        let f = f.map_err(lib)?;
        let digits = f.value.numerator_digits();
        let tag = kind.tag();
        emit(
            out,
            json!({"family": tag, "n": n, "method": f.method.as_str(), "nanos": nanos as u64, "digits": digits}),
            format!("{tag},{n},{},{nanos},{digits}", f.method),
        )?;
        let degree = inst.polynomial().degree().unwrap_or(0) as i64;
        if degree > args.oracle_cutoff {
            emit(
                out,
                json!({"family": tag, "n": n, "method": "ORACLE_SYLVESTER", "nanos": "skipped", "digits": Value::Null}),
                format!("{tag},{n},ORACLE_SYLVESTER,skipped,"),
            )?;
            continue;
        }
        let (o, nanos) = fastest(args.trials, || inst.oracle());
        let o = o.map_err(lib)?;
        if o.value != f.value {
            return Err(CliError::Mismatch(format!("{inst}: formula and oracle differ")));
        }
        emit(
            out,
            json!({"family": tag, "n": n, "method": o.method.as_str(), "nanos": nanos as u64, "digits": digits}),
            format!("{tag},{n},{},{nanos},{digits}", o.method),
        )?;
    }
    if !csv {
        writeln!(out, "{}", Value::Array(rows)).map_err(io)?;
    }
    Ok(())
}
