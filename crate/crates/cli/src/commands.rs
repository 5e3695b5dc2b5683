use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use spinpacket::corpus::generate;
use spinpacket::lpacket::analyze as analyze_class;
use spinpacket::polycore::BigIntRepr;
use spinpacket::weil::{base_change, base_change_index, invariants as class_invariants};
use spinpacket::{InputRecord, PacketReport, WeilError, WeilPolynomial};

use crate::render;
use crate::Failure;

const BUNDLED_CORPUS: &str = include_str!("../corpus/examples.jsonl");

/// Errors that describe the input pair `(P, q)` rather than a fault here.
fn is_input_error(e: &WeilError) -> bool {
    matches!(
        e,
        WeilError::NotPrimePower(_)
            | WeilError::BadDegree
            | WeilError::NotMonic
            | WeilError::FunctionalEquationFailed { .. }
            | WeilError::RootsOffWeilCircle { .. }
    )
}

fn failure(e: WeilError) -> Failure {
    match e {
        WeilError::Overflow => Failure::Usage(e.to_string()),
        e if is_input_error(&e) => Failure::Invalid(format!("invalid: {}", render::check_name(&e))),
        e => Failure::Internal(e.to_string()),
    }
}

fn record(q: u64, coeffs: &[BigInt]) -> InputRecord {
    InputRecord {
        label: "cli".into(),
        q,
        coeffs: coeffs.iter().cloned().map(BigIntRepr).collect(),
        expected: None,
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{s}");
    Ok(())
}

pub fn validate(q: u64, coeffs: &[BigInt], json: bool) -> Result<(), Failure> {
    match record(q, coeffs).validate() {
        Ok(w) => {
            if json {
                print_json(&json!({ "valid": true, "q": w.q(), "p": w.p(), "g": w.g() }))?;
            } else {
                println!("valid, g={}", w.g());
            }
            Ok(())
        }
        Err(e) if is_input_error(&e) => {
            if json {
                print_json(&render::invalid_json(&e))?;
            } else {
                println!("{}", render::check_name(&e));
            }
            Err(Failure::Invalid(String::new()))
        }
        Err(e) => Err(failure(e)),
    }
}

fn validated(q: u64, coeffs: &[BigInt]) -> Result<WeilPolynomial, Failure> {
    record(q, coeffs).validate().map_err(failure)
}

pub fn analyze(q: u64, coeffs: &[BigInt], tol: f64, json: bool) -> Result<(), Failure> {
    let w = validated(q, coeffs)?;
    let report = analyze_class(&w, tol).map_err(failure)?;
    if json {
        print_json(&report)
    } else {
        print!("{}", render::report(&report));
        Ok(())
    }
}

fn read_records(path: &Path) -> Result<Vec<InputRecord>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_records(&text, &path.display().to_string())
}

fn parse_records(text: &str, source: &str) -> Result<Vec<InputRecord>, Failure> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Failure::Usage(format!("{source}:{}: {e}", i + 1)))
        })
        .collect()
}

fn analyze_record(rec: &InputRecord, tol: f64) -> Result<PacketReport, WeilError> {
    analyze_class(&rec.validate()?, tol)
}

#[derive(Serialize)]
struct BatchLine<'a> {
    label: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a PacketReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// One report per record in input order, JSONL with `--json`. Exits 2 if
/// any record is invalid, after every report has been written.
pub fn analyze_file(path: &Path, tol: f64, json: bool) -> Result<(), Failure> {
    let records = read_records(path)?;
    let results: Vec<_> = records.par_iter().map(|r| analyze_record(r, tol)).collect();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut invalid = 0;
    let mut internal = None;
    for (rec, res) in records.iter().zip(&results) {
        if let Err(e) = res {
            if is_input_error(e) {
                invalid += 1;
            } else {
                internal.get_or_insert_with(|| format!("{}: {e}", rec.label));
            }
        }
        let line = if json {
            let line = BatchLine {
                label: &rec.label,
                report: res.as_ref().ok(),
                error: res.as_ref().err().map(|e| e.to_string()),
            };
            let s = serde_json::to_string(&line).map_err(|e| Failure::Internal(e.to_string()))?;
            s + "\n"
        } else {
            match res {
                Ok(r) => format!("== {}\n{}", rec.label, render::report(r)),
                Err(e) => format!("== {}\nerror: {e}\n", rec.label),
            }
        };
        out.write_all(line.as_bytes())
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Internal(e.to_string()))?;
    if let Some(m) = internal {
        return Err(Failure::Internal(m));
    }
    if invalid > 0 {
        return Err(Failure::Invalid(format!(
            "{invalid} of {} records invalid",
            records.len()
        )));
    }
    Ok(())
}

pub fn basechange(q: u64, coeffs: &[BigInt], r: u32, json: bool) -> Result<(), Failure> {
    let w = validated(q, coeffs)?;
    let b = base_change(&w, r).map_err(failure)?;
    let inv = class_invariants(&w).map_err(failure)?;
    let index = if inv.is_isotypic {
        Some(base_change_index(&w, r).map_err(failure)?)
    } else {
        None
    };
    if json {
        let rec = InputRecord::new(format!("basechange-r{r}"), b.q(), b.poly());
        print_json(&json!({ "record": rec, "g": b.g(), "index": index }))
    } else {
        print!("{}", render::basechange(&b, r, index));
        Ok(())
    }
}

pub fn invariants(q: u64, coeffs: &[BigInt], json: bool) -> Result<(), Failure> {
    let w = validated(q, coeffs)?;
    let inv = class_invariants(&w).map_err(failure)?;
    if json {
        print_json(&inv)
    } else {
        print!("{}", render::invariants(&inv));
        Ok(())
    }
}

pub fn gen(q: u64, g: usize, count: usize, seed: u64) -> Result<(), Failure> {
    let records = generate(q, g, count, seed).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    for rec in &records {
        let line = serde_json::to_string(rec).map_err(|e| Failure::Internal(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Failure::Internal(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Internal(e.to_string()))
}

/// Differences between a record's expected fields and its report.
fn mismatches(rec: &InputRecord, res: &Result<PacketReport, WeilError>) -> Vec<String> {
    let r = match res {
        Ok(r) => r,
        Err(e) => return vec![format!("invalid: {e}")],
    };
    let mut out = Vec::new();
    if !r.notes.agreement {
        out.push(format!(
            "routes: {}",
            r.notes.diagnostic.as_deref().unwrap_or("disagreement")
        ));
    }
    let Some(ex) = &rec.expected else {
        return out;
    };
    let inv = &r.invariants;
    let mut check = |name: &str, want: Option<String>, got: String| {
        if let Some(want) = want {
            if want != got {
                out.push(format!("{name}: expected {want}, got {got}"));
            }
        }
    };
    check(
        "even",
        ex.even.map(|v| v.to_string()),
        inv.is_even.to_string(),
    );
    check(
        "spin_packet_size",
        ex.spin_packet_size.map(|v| v.to_string()),
        r.packet_size_spin.to_string(),
    );
    check(
        "is_isotypic",
        ex.is_isotypic.map(|v| v.to_string()),
        inv.is_isotypic.to_string(),
    );
    check(
        "center_dim",
        ex.center_dim.map(|v| v.to_string()),
        inv.center_dim.to_string(),
    );
    check(
        "center_dim_quadratic",
        ex.center_dim_quadratic.map(|v| v.to_string()),
        inv.center_dim_quadratic.to_string(),
    );
    out
}

pub fn corpus(file: Option<&Path>, tol: f64, json: bool) -> Result<(), Failure> {
    let records = match file {
        Some(path) => read_records(path)?,
        None => parse_records(BUNDLED_CORPUS, "bundled corpus")?,
    };
    let results: Vec<_> = records.par_iter().map(|r| analyze_record(r, tol)).collect();
    let rows: Vec<render::CorpusRow> = records
        .iter()
        .zip(&results)
        .map(|(rec, res)| render::CorpusRow {
            label: rec.label.clone(),
            q: rec.q,
            g: rec.coeffs.len() / 2,
            even: res.as_ref().ok().map(|r| r.invariants.is_even),
            spin: res.as_ref().ok().map(|r| r.packet_size_spin),
            mismatches: mismatches(rec, res),
        })
        .collect();
    if json {
        for row in &rows {
            print_json(row)?;
        }
    } else {
        print!("{}", render::corpus_table(&rows));
    }
    let failed = rows.iter().filter(|r| !r.mismatches.is_empty()).count();
    if failed > 0 {
        return Err(Failure::Mismatch(format!(
            "{failed} of {} records failed",
            rows.len()
        )));
    }
    Ok(())
}
