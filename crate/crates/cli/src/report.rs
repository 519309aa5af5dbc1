//! Deterministic JSON reports.
//!
//! Keys come out sorted (serde_json's default map is ordered), rationals are
//! `"num/den"` strings and polynomials list their terms largest first.

use assoform_core::{Error, MatrixQ, Monomial, Poly, Rational, Space};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Invalid or degenerate input.
    Invalid,
    /// The input text did not parse.
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Invalid => 2,
            Status::ParseError => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Invalid | Status::ParseError => "error",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub fn error_status(err: &Error) -> Status {
    match err {
        Error::Syntax { .. } | Error::VariableOutOfRange { .. } | Error::WrongSpace { .. } => {
            Status::ParseError
        }
        _ => Status::Invalid,
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, status: Status) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            status,
            timing_ms: None,
        }
    }

    pub fn from_error(command: &str, inputs: Value, err: &Error) -> Self {
        let mut results = Map::new();
        results.insert("error".into(), Value::String(err.to_string()));
        match err {
            Error::Degenerate { degree } | Error::NotFiniteColength { degree } => {
                results.insert("degree".into(), json!(degree));
            }
            Error::Syntax { position, .. } | Error::WrongSpace { position } => {
                results.insert("position".into(), json!(position));
            }
            _ => {}
        }
        Report::new(command, inputs, Value::Object(results), error_status(err))
    }

    pub fn exit_code(&self) -> u8 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), Value::String(self.command.clone()));
        out.insert("inputs".into(), self.inputs.clone());
        out.insert("results".into(), self.results.clone());
        out.insert("status".into(), Value::String(self.status.label().into()));
        if let Some(ms) = self.timing_ms {
            out.insert("timing_ms".into(), json!(ms as u64));
        }
        Value::Object(out)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn monomial(m: &Monomial) -> Value {
    json!(m.exponents())
}

pub fn poly(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "coeff": rational(c), "exponents": monomial(m) }))
        .collect();
    json!({
        "nvars": p.nvars(),
        "space": match p.space() { Space::Z => "z", Space::E => "e" },
        "terms": terms,
        "text": p.to_string(),
    })
}

pub fn polys<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Value {
    Value::Array(ps.into_iter().map(poly).collect())
}

/// Graded-lex order, largest first, to match the term lists.
pub fn mu_table(mu: &BTreeMap<Monomial, Rational>) -> Value {
    Value::Array(
        mu.iter()
            .rev()
            .map(|(m, v)| json!({ "exponents": monomial(m), "value": rational(v) }))
            .collect(),
    )
}

pub fn matrix(m: &MatrixQ) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
            .collect(),
    )
}
