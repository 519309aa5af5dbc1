//! One function per subcommand. Each returns a finished [`Report`]; `main`
//! only prints it and exits with its code.

use assoform_core::apolarity::{apolar_tuple, in_image, inverse_system_check, ApolarTuple};
use assoform_core::duality::{
    family_form, involution_check, j_transform, mobius, Family, FamilyPoint, InvolutionStatus,
    ProjectiveValue,
};
use assoform_core::invariants::{
    a6_family, aronhold_a4, catalecticant, delta_cubic_family, delta_quartic, i2_quartic,
    j_cubic_family, j_quartic, k_cubic, k_quartic, pippian, quippian, TernaryCubicFamily,
};
use assoform_core::milnor::{
    associated_form, associated_form_tuple, hilbert_function, is_nondegenerate, PolyTuple,
};
use assoform_core::parse::{detect_space, max_variable_index};
use assoform_core::{parse_poly, Error, Poly, Rational, Space};
use serde_json::{json, Value};

use crate::report::{self, Report, Status};
use crate::suites::{self, Suite};

fn parse(text: &str, nvars: Option<usize>, space: Space) -> assoform_core::Result<Poly> {
    let n = nvars.unwrap_or_else(|| max_variable_index(text).max(1));
    parse_poly(text, n, space)
}

fn check_degree(f: &Poly, d: Option<usize>) -> assoform_core::Result<()> {
    let found = f.form_degree()?;
    match d {
        Some(expected) if expected != found => Err(Error::DegreeMismatch { expected, found }),
        _ => Ok(()),
    }
}

/// `assoc`: the associated form and its μ table.
pub fn assoc(text: &str, n: Option<usize>, d: Option<usize>) -> Report {
    let inputs = json!({ "poly": text, "n": n, "d": d });
    let run = || -> assoform_core::Result<Value> {
        let f = parse(text, n, Space::Z)?;
        check_degree(&f, d)?;
        let a = associated_form(&f)?;
        Ok(json!({
            "degree": a.form.form_degree().ok(),
            "form": report::poly(&a.form),
            "mu": report::mu_table(&a.mu),
        }))
    };
    match run() {
        Ok(results) => Report::new("assoc", inputs, results, Status::Pass),
        Err(e) => Report::from_error("assoc", inputs, &e),
    }
}

/// `verify`: one randomized suite.
pub fn verify(suite: Suite, seed: u64, count: usize) -> Report {
    let inputs = json!({ "suite": suite.name(), "seed": seed, "count": count });
    let outcome = suites::run(suite, seed, count);
    Report::new(
        "verify",
        inputs,
        outcome.to_json(),
        Status::from_bool(outcome.passed()),
    )
}

/// `inverse-system`: the degree `d-1` annihilator of a dual form and, when it is
/// a tuple, the round trip back to the form.
pub fn inverse_system(text: &str, n: Option<usize>, d: usize) -> Report {
    let inputs = json!({ "form": text, "n": n, "d": d });
    let run = || -> assoform_core::Result<(Value, Status)> {
        let big = parse(text, n, Space::E)?;
        let member = in_image(&big, d)?;
        match apolar_tuple(&big, d)? {
            ApolarTuple::NotApplicable { dim } => Ok((
                json!({ "applicable": false, "in_image": member, "slice_dim": dim }),
                Status::Pass,
            )),
            ApolarTuple::Tuple(t) => {
                let mut results = json!({
                    "applicable": true,
                    "in_image": member,
                    "slice_dim": t.nvars(),
                    "tuple": report::polys(t.forms()),
                });
                if !member {
                    return Ok((results, Status::Pass));
                }
                let annihilates = inverse_system_check(&t, &big)?;
                let back = associated_form_tuple(&t)?.form;
                let proportional = back.ratio_to(&big);
                results["annihilates"] = json!(annihilates);
                results["psi"] = report::poly(&back);
                results["ratio"] = proportional.as_ref().map_or(Value::Null, report::rational);
                Ok((
                    results,
                    Status::from_bool(annihilates && proportional.is_some()),
                ))
            }
        }
    };
    match run() {
        Ok((results, status)) => Report::new("inverse-system", inputs, results, status),
        Err(e) => Report::from_error("inverse-system", inputs, &e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InvariantName {
    Cat,
    I2,
    DeltaQuartic,
    JQuartic,
    KQuartic,
    A4,
    A6,
    DeltaCubic,
    JCubic,
    KCubic,
    Pippian,
    Quippian,
}

impl InvariantName {
    fn label(self) -> &'static str {
        match self {
            InvariantName::Cat => "cat",
            InvariantName::I2 => "i2",
            InvariantName::DeltaQuartic => "delta-quartic",
            InvariantName::JQuartic => "j-quartic",
            InvariantName::KQuartic => "k-quartic",
            InvariantName::A4 => "a4",
            InvariantName::A6 => "a6",
            InvariantName::DeltaCubic => "delta-cubic",
            InvariantName::JCubic => "j-cubic",
            InvariantName::KCubic => "k-cubic",
            InvariantName::Pippian => "pippian",
            InvariantName::Quippian => "quippian",
        }
    }

    fn nvars(self) -> Option<usize> {
        use InvariantName::*;
        match self {
            Cat => None,
            I2 | DeltaQuartic | JQuartic | KQuartic => Some(2),
            _ => Some(3),
        }
    }
}

/// `invariant`: one named invariant or contravariant. The variable space is
/// read off the text.
pub fn invariant(name: InvariantName, text: &str) -> Report {
    use InvariantName::*;
    let inputs = json!({ "name": name.label(), "poly": text });
    let run = || -> assoform_core::Result<Value> {
        let f = parse(text, name.nvars().or(Some(2)), detect_space(text))?;
        let family = || TernaryCubicFamily::from_poly(&f);
        let value = match name {
            Cat => report::rational(&catalecticant(&f)?),
            I2 => report::rational(&i2_quartic(&f)?),
            DeltaQuartic => report::rational(&delta_quartic(&f)?),
            JQuartic => report::rational(&j_quartic(&f)?),
            KQuartic => report::rational(&k_quartic(&f)?),
            A4 => report::rational(&aronhold_a4(&f)?),
            A6 => report::rational(&a6_family(&family()?)),
            DeltaCubic => report::rational(&delta_cubic_family(&family()?)),
            JCubic => report::rational(&j_cubic_family(&family()?)?),
            KCubic => report::rational(&k_cubic(&f)?),
            Pippian => report::poly(&pippian(&family()?)),
            Quippian => report::poly(&quippian(&family()?)),
        };
        Ok(json!({ "value": value }))
    };
    match run() {
        Ok(results) => Report::new("invariant", inputs, results, Status::Pass),
        Err(e) => Report::from_error("invariant", inputs, &e),
    }
}

/// `hilbert`: Hilbert function of the quotient by a tuple, compared with the
/// complete-intersection series.
pub fn hilbert(texts: &[String]) -> Report {
    let inputs = json!({ "forms": texts });
    let run = || -> assoform_core::Result<(Value, Status)> {
        let n = texts.len();
        let forms = texts
            .iter()
            .map(|t| parse_poly(t, n, Space::Z))
            .collect::<assoform_core::Result<Vec<_>>>()?;
        let tuple = PolyTuple::new(forms)?;
        let h = hilbert_function(&tuple)?;
        let expected = suites::complete_intersection_series(n, tuple.form_degree() + 1);
        let ok = h == expected;
        Ok((
            json!({ "expected": expected, "hilbert": h }),
            Status::from_bool(ok),
        ))
    };
    match run() {
        Ok((results, status)) => Report::new("hilbert", inputs, results, status),
        Err(e) => Report::from_error("hilbert", inputs, &e),
    }
}

fn projective(v: &ProjectiveValue) -> Value {
    match v {
        ProjectiveValue::Finite(r) => report::rational(r),
        ProjectiveValue::Infinity => Value::String("infinity".into()),
    }
}

fn involution_label(s: InvolutionStatus) -> &'static str {
    match s {
        InvolutionStatus::Fixed => "Fixed",
        InvolutionStatus::ImageDegenerate => "ImageDegenerate",
        InvolutionStatus::NotFixed => "NotFixed",
    }
}

fn scan_point(family: Family, t: &Rational) -> (Value, bool) {
    let p = match FamilyPoint::new(family, t.clone()) {
        Ok(p) => p,
        Err(e) => {
            return (
                json!({ "t": report::rational(t), "excluded": e.to_string() }),
                true,
            )
        }
    };
    let f = family_form(&p);
    let status = match involution_check(&f) {
        Ok(s) => s,
        Err(e) => {
            return (
                json!({ "t": report::rational(t), "error": e.to_string() }),
                false,
            )
        }
    };
    let mut entry = json!({
        "t": report::rational(t),
        "form": report::poly(&f),
        "involution": involution_label(status),
    });
    let mut ok = status != InvolutionStatus::NotFixed;
    match j_transform(&p) {
        Ok(jt) => {
            entry["j"] = report::rational(&jt.j_source);
            entry["j_image"] = report::rational(&jt.j_image);
            entry["mobius"] = projective(&jt.predicted);
            entry["j_transform_holds"] = json!(jt.holds());
            ok &= jt.holds();
        }
        Err(Error::ExcludedParameter(why)) => {
            let j = match family {
                Family::BinaryQuartic => j_quartic(&f),
                Family::TernaryCubic => {
                    TernaryCubicFamily::from_poly(&f).and_then(|q| j_cubic_family(&q))
                }
            };
            if let Ok(j) = j {
                entry["mobius"] = projective(&mobius(family, &ProjectiveValue::Finite(j.clone())));
                entry["j"] = report::rational(&j);
            }
            entry["j_transform"] = Value::String(why.into());
        }
        Err(e) => {
            entry["error"] = Value::String(e.to_string());
            ok = false;
        }
    }
    (entry, ok)
}

/// `duality-scan`: J values, Möbius images and involution status along a family.
pub fn duality_scan(family: Family, ts: &[String]) -> Report {
    let label = match family {
        Family::BinaryQuartic => "quartic",
        Family::TernaryCubic => "cubic",
    };
    let inputs = json!({ "family": label, "t": ts });
    let mut params = Vec::with_capacity(ts.len());
    for (i, text) in ts.iter().enumerate() {
        match text.trim().parse::<Rational>() {
            Ok(t) => params.push(t),
            Err(_) => {
                let e = Error::Syntax {
                    position: i,
                    message: "parameter is not a rational number",
                };
                return Report::from_error("duality-scan", inputs, &e);
            }
        }
    }
    let mut ok = true;
    let points: Vec<Value> = params
        .iter()
        .map(|t| {
            let (v, good) = scan_point(family, t);
            ok &= good;
            v
        })
        .collect();
    Report::new(
        "duality-scan",
        inputs,
        json!({ "points": points }),
        Status::from_bool(ok),
    )
}

/// `iterate`: apply `Φ` repeatedly, reading each image back as a source form,
/// until it degenerates, grows past `max_dim` monomials, or `steps` is reached.
pub fn iterate(text: &str, n: Option<usize>, steps: usize) -> Report {
    const MAX_DIM: usize = 200;
    let inputs = json!({ "poly": text, "n": n, "steps": steps });
    let run = || -> assoform_core::Result<Value> {
        let mut f = parse(text, n, Space::Z)?;
        let nvars = f.nvars();
        let mut trail = Vec::new();
        let mut stop = "steps";
        for _ in 0..steps {
            let d = f.form_degree()?;
            if d < 3 || !is_nondegenerate(&f) {
                stop = "degenerate";
                break;
            }
            let top = nvars * (d - 2);
            if assoform_core::monomial::basis_len(nvars, top + 1) > MAX_DIM {
                stop = "too large";
                break;
            }
            f = associated_form(&f)?.form.with_space(Space::Z);
            trail.push(json!({
                "degree": top,
                "form": report::poly(&f),
                "nondegenerate": is_nondegenerate(&f),
            }));
        }
        Ok(json!({ "iterates": trail, "stopped": stop }))
    };
    match run() {
        Ok(results) => Report::new("iterate", inputs, results, Status::Pass),
        Err(e) => Report::from_error("iterate", inputs, &e),
    }
}
