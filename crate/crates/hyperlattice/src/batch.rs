//! JSON-lines batch ingestion: one curve per input line, one result line
//! out, then a trailing summary. Bad lines produce an `{"error": ...}` line
//! and processing continues; line order is preserved.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::model::{
    CountPrediction, CurveClass, CurveParams, IntegralPoint, Sign, SpecialFormKind,
};

#[derive(Debug, Deserialize)]
struct InputLine {
    a: i128,
    b: i128,
    c: i128,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum OutputLine {
    Error {
        error: String,
    },
    Degenerate {
        a: i128,
        b: i128,
        c: i128,
        #[serde(rename = "D")]
        d: i128,
        class: &'static str,
        count: &'static str,
        family: String,
    },
    Hyperbola {
        a: i128,
        b: i128,
        c: i128,
        #[serde(rename = "D")]
        d: i128,
        class: &'static str,
        count: u64,
        points: Vec<IntegralPoint>,
        #[serde(skip_serializing_if = "Option::is_none")]
        special_form: Option<SpecialFormOut>,
    },
}

#[derive(Debug, Serialize)]
pub(crate) struct SpecialFormOut {
    pub form: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p2: Option<i128>,
    pub sign: &'static str,
    pub expected_count: u64,
}

impl SpecialFormOut {
    pub(crate) fn from_model(sf: &crate::model::SpecialForm) -> Self {
        let (form, p, p1, p2) = match sf.kind {
            SpecialFormKind::Unit => ("unit", None, None, None),
            SpecialFormKind::Prime { p } => ("prime", Some(p), None, None),
            SpecialFormKind::PrimeSquare { p } => ("prime_square", Some(p), None, None),
            SpecialFormKind::SemiPrime { p1, p2 } => ("semiprime", None, Some(p1), Some(p2)),
        };
        SpecialFormOut {
            form,
            p,
            p1,
            p2,
            sign: sign_str(sf.sign_of_d),
            expected_count: sf.expected_count,
        }
    }
}

pub(crate) fn sign_str(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "positive",
        Sign::Negative => "negative",
    }
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    total: u64,
    errors: u64,
    degenerate_line: u64,
    hyperbola: u64,
    unit: u64,
    prime: u64,
    prime_square: u64,
    semiprime: u64,
}

#[derive(Debug, Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

fn process_line(line: &str, bound: i128) -> Result<OutputLine> {
    let input: InputLine =
        serde_json::from_str(line).map_err(|_| Error::parse("parse".to_string()))?;
    let curve = CurveParams::with_bound(input.a, input.b, input.c, bound)
        .map_err(|_| Error::parse("bound".to_string()))?;
    let fp = enumerate::fingerprint(&curve)?;
    match enumerate::classify(&curve)? {
        CurveClass::DegenerateLine => {
            let family = enumerate::degenerate_family(&curve)?;
            Ok(OutputLine::Degenerate {
                a: input.a,
                b: input.b,
                c: input.c,
                d: fp.value,
                class: "degenerate_line",
                count: "infinite",
                family: family.family_compact(),
            })
        }
        CurveClass::Hyperbola { .. } => {
            let points = enumerate::enumerate_points(&curve)?;
            let CountPrediction::Finite { total, .. } = enumerate::predicted_count(&curve)? else {
                unreachable!("non-degenerate curve has a finite count");
            };
            let special = enumerate::special_form(&curve)?;
            Ok(OutputLine::Hyperbola {
                a: input.a,
                b: input.b,
                c: input.c,
                d: fp.value,
                class: "hyperbola",
                count: total,
                points: points.points().to_vec(),
                special_form: special.as_ref().map(SpecialFormOut::from_model),
            })
        }
    }
}

/// Streams curves through the classifier. Each input line must be a JSON
/// object `{"a":..,"b":..,"c":..}`; blank lines are skipped. Emits one JSON
/// line per input line plus a final `{"summary": ...}` line.
pub fn batch_process(input: impl BufRead, mut output: impl Write, bound: i128) -> Result<()> {
    let mut summary = Summary::default();
    for line in input.lines() {
        let line = line.map_err(|e| Error::parse(format!("unreadable input: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        summary.total += 1;
        let out = match process_line(&line, bound) {
            Ok(out) => out,
            Err(Error::Parse(reason)) => OutputLine::Error { error: reason },
            Err(other) => OutputLine::Error {
                error: other.to_string(),
            },
        };
        match &out {
            OutputLine::Error { .. } => summary.errors += 1,
            OutputLine::Degenerate { .. } => summary.degenerate_line += 1,
            OutputLine::Hyperbola { special_form, .. } => {
                summary.hyperbola += 1;
                if let Some(sf) = special_form {
                    match sf.form {
                        "unit" => summary.unit += 1,
                        "prime" => summary.prime += 1,
                        "prime_square" => summary.prime_square += 1,
                        _ => summary.semiprime += 1,
                    }
                }
            }
        }
        let encoded = serde_json::to_string(&out).expect("output lines always serialize");
        writeln!(output, "{encoded}").map_err(|e| Error::parse(format!("write failed: {e}")))?;
    }
    let tail = serde_json::to_string(&SummaryLine { summary: &summary })
        .expect("summary always serializes");
    writeln!(output, "{tail}").map_err(|e| Error::parse(format!("write failed: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DEFAULT_BOUND;

    fn run(input: &str) -> String {
        let mut out = Vec::new();
        batch_process(input.as_bytes(), &mut out, DEFAULT_BOUND).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn prime_square_line() {
        let out = run(r#"{"a":0,"b":0,"c":-4}"#);
        let first = out.lines().next().unwrap();
        assert_eq!(
            first,
            r#"{"a":0,"b":0,"c":-4,"D":-4,"class":"hyperbola","count":6,"points":[{"x":-4,"y":-3},{"x":-2,"y":0},{"x":-1,"y":3},{"x":1,"y":-3},{"x":2,"y":0},{"x":4,"y":3}],"special_form":{"form":"prime_square","p":2,"sign":"negative","expected_count":6}}"#
        );
    }

    #[test]
    fn degenerate_line_output() {
        let out = run(r#"{"a":1,"b":2,"c":1}"#);
        let first = out.lines().next().unwrap();
        assert_eq!(
            first,
            r#"{"a":1,"b":2,"c":1,"D":0,"class":"degenerate_line","count":"infinite","family":"y=x+1, x!=-1"}"#
        );
    }

    #[test]
    fn malformed_line_continues_processing() {
        let out = run("not json\n{\"a\":0,\"b\":0,\"c\":1}\n");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], r#"{"error":"parse"}"#);
        // |D| = 1: the two-point configuration
        assert!(lines[1].contains(r#""count":2"#));
        assert!(lines[2].starts_with(r#"{"summary":"#));
    }

    #[test]
    fn bound_violation_is_reported_per_line() {
        let out = run(r#"{"a":2000000001,"b":0,"c":1}"#);
        assert_eq!(out.lines().next().unwrap(), r#"{"error":"bound"}"#);
    }

    #[test]
    fn summary_aggregates_by_class_and_form() {
        let input = [
            r#"{"a":0,"b":0,"c":-4}"#, // prime_square
            r#"{"a":1,"b":2,"c":1}"#,  // degenerate
            r#"{"a":0,"b":0,"c":6}"#,  // semiprime
            r#"{"a":0,"b":0,"c":8}"#,  // no special form
            "garbage",
        ]
        .join("\n");
        let out = run(&input);
        let last = out.lines().last().unwrap();
        assert_eq!(
            last,
            r#"{"summary":{"total":5,"errors":1,"degenerate_line":1,"hyperbola":3,"unit":0,"prime":0,"prime_square":1,"semiprime":1}}"#
        );
    }
}
