use std::time::{Duration, Instant};

use hankel_core::{
    catalan_prefix, cigler_matrix, det, det_bareiss, eval_general, hankel_matrix, hankel_transform,
    sweep_with_source, BigInt, DetMethod, Error, HankelSpec, SequenceSource,
};
use serde::Serialize;

use crate::output::{format_sig3, json, sig3, OutputFormat, Table};
use crate::{Failure, Method};

const BENCH_RUNS: usize = 3;

fn emit(text: String) {
    print!("{text}");
}

#[derive(Serialize)]
struct SequenceOutput<'a> {
    sequence: &'a str,
    values: Vec<String>,
}

pub fn catalan(count: usize, format: OutputFormat) -> Result<(), Failure> {
    let values: Vec<String> = catalan_prefix(count)
        .iter()
        .map(ToString::to_string)
        .collect();
    if format == OutputFormat::Json {
        emit(json(&SequenceOutput {
            sequence: "catalan",
            values,
        }));
        return Ok(());
    }
    if format == OutputFormat::Plain {
        emit(values.iter().map(|v| format!("{v}\n")).collect());
        return Ok(());
    }
    let mut table = Table::new(vec!["k", "value"]);
    for (k, v) in values.into_iter().enumerate() {
        table.push(vec![k.to_string(), v]);
    }
    emit(table.render(format));
    Ok(())
}

#[derive(Serialize)]
struct DetOutput<'a> {
    sequence: &'a str,
    n: usize,
    r: usize,
    method: &'a str,
    value: String,
    elapsed_ms: f64,
}

fn evaluate(n: usize, r: usize, source: &SequenceSource, method: Method) -> Result<BigInt, Error> {
    let elimination =
        |m: DetMethod| det(&hankel_matrix(&HankelSpec::new(source.clone(), n, r))?, m);
    match method {
        Method::Auto => elimination(DetMethod::Auto),
        Method::Laplace => elimination(DetMethod::Laplace),
        Method::Bareiss => elimination(DetMethod::Bareiss),
        Method::Cigler | Method::ClosedForm if !source.is_catalan() => {
            Err(Error::MethodUnavailable {
                method: method.name().to_owned(),
            })
        }
        Method::Cigler => det_bareiss(&cigler_matrix(n, r)),
        Method::ClosedForm => eval_general(n, r),
    }
}

pub fn hankel_det(
    n: usize,
    r: usize,
    source: &SequenceSource,
    method: Method,
    format: OutputFormat,
) -> Result<(), Failure> {
    let start = Instant::now();
    let value = evaluate(n, r, source, method)?;
    let elapsed_ms = sig3(millis(start.elapsed()));
    let out = DetOutput {
        sequence: source.name(),
        n,
        r,
        method: method.name(),
        value: value.to_string(),
        elapsed_ms,
    };
    match format {
        OutputFormat::Json => emit(json(&out)),
        OutputFormat::Plain => {
            emit(format!("{}\n", out.value));
            eprintln!(
                "sequence={} n={} r={} method={} elapsed_ms={}",
                out.sequence,
                n,
                r,
                out.method,
                format_sig3(elapsed_ms)
            );
        }
        _ => {
            let mut table = Table::new(vec!["sequence", "n", "r", "method", "value", "elapsed_ms"]);
            table.push(vec![
                out.sequence.to_owned(),
                n.to_string(),
                r.to_string(),
                out.method.to_owned(),
                out.value,
                format_sig3(elapsed_ms),
            ]);
            emit(table.render(format));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TransformOutput<'a> {
    sequence: &'a str,
    r: usize,
    values: Vec<String>,
}

pub fn transform(
    r: usize,
    max_n: usize,
    source: &SequenceSource,
    format: OutputFormat,
) -> Result<(), Failure> {
    let values: Vec<String> = hankel_transform(source, r, max_n)?
        .iter()
        .map(ToString::to_string)
        .collect();
    match format {
        OutputFormat::Json => emit(json(&TransformOutput {
            sequence: source.name(),
            r,
            values,
        })),
        OutputFormat::Plain => emit(values.iter().map(|v| format!("{v}\n")).collect()),
        _ => {
            let mut table = Table::new(vec!["n", "value"]);
            for (n, v) in values.into_iter().enumerate() {
                table.push(vec![n.to_string(), v]);
            }
            emit(table.render(format));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RecordOutput {
    n: usize,
    r: usize,
    direct: String,
    cigler: String,
    closed_form: String,
    agree: bool,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    sequence: &'a str,
    max_n: usize,
    max_r: usize,
    all_agree: bool,
    records: Vec<RecordOutput>,
}

pub fn verify(
    max_n: usize,
    max_r: usize,
    source: &SequenceSource,
    format: OutputFormat,
) -> Result<(), Failure> {
    let records: Vec<RecordOutput> = sweep_with_source(source, max_n, max_r)?
        .into_iter()
        .map(|rec| RecordOutput {
            n: rec.order_n,
            r: rec.shift_r,
            direct: rec.direct_value.to_string(),
            cigler: rec.cigler_value.to_string(),
            closed_form: rec.closed_form_value.to_string(),
            agree: rec.agree,
        })
        .collect();
    let failures: Vec<(usize, usize)> = records
        .iter()
        .filter(|r| !r.agree)
        .map(|r| (r.n, r.r))
        .collect();

    if format == OutputFormat::Json {
        emit(json(&VerifyOutput {
            sequence: source.name(),
            max_n,
            max_r,
            all_agree: failures.is_empty(),
            records,
        }));
    } else {
        let mut table = Table::new(vec!["n", "r", "direct", "cigler", "closed_form", "agree"]);
        for rec in records {
            table.push(vec![
                rec.n.to_string(),
                rec.r.to_string(),
                rec.direct,
                rec.cigler,
                rec.closed_form,
                rec.agree.to_string(),
            ]);
        }
        emit(table.render(format));
    }

    if failures.is_empty() {
        return Ok(());
    }
    for (n, r) in &failures {
        eprintln!("disagreement at n={n} r={r}");
    }
    Err(Failure::Data(format!(
        "{} of {} points disagree",
        failures.len(),
        (max_n + 1) * (max_r + 1)
    )))
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Best wall-clock time over [`BENCH_RUNS`] runs.
fn best_of<T>(mut f: impl FnMut() -> T) -> Duration {
    (0..BENCH_RUNS)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .min()
        .expect("BENCH_RUNS > 0")
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    r: usize,
    bareiss_value: String,
    closed_form_value: String,
    bareiss_ms: f64,
    closed_form_ms: f64,
    /// `None` when the formula ran below clock resolution.
    speedup: Option<f64>,
}

#[derive(Serialize)]
struct BenchOutput {
    runs: usize,
    rows: Vec<BenchRow>,
}

pub fn bench(ns: &[usize], rs: &[usize], format: OutputFormat) -> Result<(), Failure> {
    let mut rows = Vec::with_capacity(ns.len() * rs.len());
    for &r in rs {
        for &n in ns {
            let matrix = hankel_matrix(&HankelSpec::catalan(n, r))?;
            let direct = det_bareiss(&matrix)?;
            let closed = eval_general(n, r)?;
            if direct != closed {
                return Err(Failure::Data(format!(
                    "values differ at n={n} r={r}: bareiss={direct} closed_form={closed}"
                )));
            }
            let bareiss_time = best_of(|| det_bareiss(&matrix));
            let closed_time = best_of(|| eval_general(n, r));
            let speedup = (!closed_time.is_zero())
                .then(|| sig3(bareiss_time.as_secs_f64() / closed_time.as_secs_f64()));
            rows.push(BenchRow {
                n,
                r,
                bareiss_value: direct.to_string(),
                closed_form_value: closed.to_string(),
                bareiss_ms: sig3(millis(bareiss_time)),
                closed_form_ms: sig3(millis(closed_time)),
                speedup,
            });
        }
    }

    if format == OutputFormat::Json {
        emit(json(&BenchOutput {
            runs: BENCH_RUNS,
            rows,
        }));
        return Ok(());
    }
    let mut table = Table::new(vec![
        "n",
        "r",
        "value",
        "bareiss_ms",
        "closed_form_ms",
        "speedup",
    ]);
    for row in rows {
        table.push(vec![
            row.n.to_string(),
            row.r.to_string(),
            row.bareiss_value,
            format_sig3(row.bareiss_ms),
            format_sig3(row.closed_form_ms),
            row.speedup.map_or_else(|| "inf".to_owned(), format_sig3),
        ]);
    }
    emit(table.render(format));
    Ok(())
}
