//! Randomized verification suites.
//!
//! Cases are drawn sequentially from a [`Sampler`], checked in parallel, and
//! reported in index order, so the outcome depends only on the seed.

use assoform_core::action::{act, act_on_tuple, ActionKind};
use assoform_core::apolarity::{apolar_tuple, in_image, inverse_system_check, ApolarTuple};
use assoform_core::differential::{diamond, gradient, hessian};
use assoform_core::duality::{involution_check, InvolutionStatus};
use assoform_core::invariants::{
    catalecticant, covariant_relation_holds, quintic_covariants, verify_cubic_identity,
    verify_quartic_identity, verify_quintic_identity,
};
use assoform_core::milnor::{
    associated_form, associated_form_tuple, hilbert_function, same_span, PolyTuple,
};
use assoform_core::rational::int;
use assoform_core::Space;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report;
use crate::sample::Sampler;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Δ·Φ of binary quartics through I2, Cat and the Hessian.
    Quartic,
    /// Δ·Φ of binary quintics in Sylvester form, plus the covariant relation.
    Quintic,
    /// Δ·Φ of ternary cubics through the Pippian and Quippian.
    Cubic,
    /// Φ applied twice to binary quartics and ternary cubics.
    Involution,
    /// Equivariance of Φ and Ψ under random invertible matrices.
    Equivariance,
    /// Inverse systems and the annihilator round trips.
    Apolarity,
    /// Hilbert functions of complete intersections.
    Hilbert,
    /// Image membership of binary forms against the catalecticant.
    Catalecticant,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quartic => "quartic",
            Suite::Quintic => "quintic",
            Suite::Cubic => "cubic",
            Suite::Involution => "involution",
            Suite::Equivariance => "equivariance",
            Suite::Apolarity => "apolarity",
            Suite::Hilbert => "hilbert",
            Suite::Catalecticant => "catalecticant",
        }
    }
}

type Check = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

struct Case {
    index: usize,
    input: Value,
    check: Check,
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub index: usize,
    pub input: Value,
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub seed: u64,
    pub cases: Vec<CaseResult>,
    pub rejected: usize,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.error.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.error.is_some())
    }

    pub fn to_json(&self) -> Value {
        let failed: Vec<Value> = self
            .failures()
            .map(|c| json!({ "index": c.index, "input": c.input, "detail": c.error }))
            .collect();
        json!({
            "cases": self.cases.len(),
            "failed": failed,
            "passed": self.cases.len() - failed.len(),
            "rejected": self.rejected,
        })
    }
}

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn core<T>(r: assoform_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn tuple_json(t: &PolyTuple) -> Value {
    report::polys(t.forms())
}

fn quartic_case(s: &mut Sampler) -> (Value, Check) {
    let f = s.nondegenerate_form(2, 4);
    let input = json!({ "f": report::poly(&f) });
    let check = move || ensure(core(verify_quartic_identity(&f))?, "identity fails");
    (input, Box::new(check))
}

fn quintic_case(s: &mut Sampler) -> (Value, Check) {
    let q = s.sylvester_quintic();
    let input = json!({
        "a": report::rational(&q.a),
        "b": report::rational(&q.b),
        "c": report::rational(&q.c),
        "x": report::poly(q.x()),
        "y": report::poly(q.y()),
    });
    let check = move || {
        let k = quintic_covariants(&q);
        ensure(
            hessian(&k.c15) == k.c26.scale(&int(400)),
            "400·C26 differs from the Hessian",
        )?;
        ensure(covariant_relation_holds(&k), "covariant relation fails")?;
        ensure(core(verify_quintic_identity(&q))?, "identity fails")
    };
    (input, Box::new(check))
}

fn cubic_case(s: &mut Sampler) -> (Value, Check) {
    let p = s.family_member();
    let input = json!({ "f": report::poly(&p.to_poly(Space::Z)) });
    let check = move || ensure(core(verify_cubic_identity(&p))?, "identity fails");
    (input, Box::new(check))
}

fn involution_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let f = if index % 2 == 0 {
        s.nondegenerate_form(2, 4)
    } else {
        s.nondegenerate_form(3, 3)
    };
    let input = json!({ "f": report::poly(&f) });
    let check = move || match core(involution_check(&f))? {
        InvolutionStatus::Fixed | InvolutionStatus::ImageDegenerate => Ok(()),
        InvolutionStatus::NotFixed => Err("Φ(Φ(f)) is not proportional to f".into()),
    };
    (input, Box::new(check))
}

const SHAPES: [(usize, usize); 4] = [(2, 3), (2, 4), (3, 3), (3, 4)];

fn phi_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let (n, d) = SHAPES[index % SHAPES.len()];
    let f = s.nondegenerate_form(n, d);
    let c = s.invertible_matrix(n);
    let input = json!({ "map": "phi", "f": report::poly(&f), "c": report::matrix(&c) });
    let check = move || {
        let det = core(c.det())?;
        let moved = core(act(&c, &f, ActionKind::OnForms))?;
        let lhs = core(associated_form(&moved))?.form;
        let phi = core(associated_form(&f))?.form;
        let rhs = core(act(&c, &phi, ActionKind::OnDualForms))?.scale(&(&det * &det));
        ensure(lhs == rhs, "Φ(Cf) differs from det(C)^2·C·Φ(f)")
    };
    (input, Box::new(check))
}

fn psi_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let (n, d) = SHAPES[(index / 2) % SHAPES.len()];
    let t = s.finite_colength_tuple(n, d);
    let c1 = s.invertible_matrix(n);
    let c2 = s.invertible_matrix(n);
    let input = json!({
        "map": "psi",
        "tuple": tuple_json(&t),
        "c1": report::matrix(&c1),
        "c2": report::matrix(&c2),
    });
    let check = move || {
        let moved = core(act_on_tuple(&c1, &c2, &t))?;
        let lhs = core(associated_form_tuple(&moved))?.form;
        let factor = core(c1.det())? * core(c2.det())?;
        let psi = core(associated_form_tuple(&t))?.form;
        let rhs = core(act(&c1, &psi, ActionKind::OnDualForms))?.scale(&factor);
        ensure(lhs == rhs, "Ψ((C1,C2)f) differs from det(C1C2)·C1·Ψ(f)")
    };
    (input, Box::new(check))
}

/// Inverse system, `χ∘Ψ` and `Ψ∘χ` for one tuple.
pub fn round_trips(t: &PolyTuple, d: usize) -> Result<(), String> {
    let big = core(associated_form_tuple(t))?.form;
    ensure(
        core(inverse_system_check(t, &big))?,
        "a generator does not annihilate Ψ",
    )?;
    match core(apolar_tuple(&big, d))? {
        ApolarTuple::Tuple(back) => {
            ensure(
                core(same_span(back.forms(), t.forms()))?,
                "annihilator slice differs from the tuple span",
            )?;
            let again = core(associated_form_tuple(&back))?.form;
            ensure(
                again.is_nonzero_multiple_of(&big),
                "Ψ of the recovered tuple is not proportional",
            )
        }
        ApolarTuple::NotApplicable { dim } => Err(format!("annihilator slice has dimension {dim}")),
    }
}

fn apolarity_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let (n, d) = SHAPES[(index / 2) % SHAPES.len()];
    if index % 2 == 0 {
        let f = s.nondegenerate_form(n, d);
        let input = json!({ "f": report::poly(&f) });
        let check = move || {
            let phi = core(associated_form(&f))?.form;
            let grad = core(gradient(&f))?;
            for fj in grad.forms() {
                ensure(
                    core(diamond(fj, &phi))?.is_zero(),
                    "a partial does not annihilate Φ(f)",
                )?;
            }
            round_trips(&grad, d)
        };
        (input, Box::new(check))
    } else {
        let t = s.finite_colength_tuple(n, d);
        let input = json!({ "tuple": tuple_json(&t) });
        (input, Box::new(move || round_trips(&t, d)))
    }
}

/// Coefficients of `(1 + t + ... + t^(d-2))^n`.
pub fn complete_intersection_series(n: usize, d: usize) -> Vec<usize> {
    let mut acc = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0; acc.len() + d - 2];
        for (i, a) in acc.iter().enumerate() {
            for slot in &mut next[i..=i + d - 2] {
                *slot += a;
            }
        }
        acc = next;
    }
    acc
}

fn hilbert_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let (n, d) = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)][index % 5];
    let t = s.finite_colength_tuple(n, d);
    let input = json!({ "tuple": tuple_json(&t) });
    let check = move || {
        let h = core(hilbert_function(&t))?;
        ensure(
            h == complete_intersection_series(n, d),
            "Hilbert function differs from the complete-intersection series",
        )
    };
    (input, Box::new(check))
}

fn catalecticant_case(s: &mut Sampler, index: usize) -> (Value, Check) {
    let d = 4 + index % 3;
    let big = loop {
        let f = s.sparse_form(2, 2 * (d - 2), Space::E);
        if !f.is_zero() {
            break f;
        }
    };
    let input = json!({ "d": d, "form": report::poly(&big) });
    let check = move || {
        let member = core(in_image(&big, d))?;
        let cat = core(catalecticant(&big))?;
        ensure(
            member == !cat.is_zero(),
            "image membership disagrees with Cat ≠ 0",
        )
    };
    (input, Box::new(check))
}

fn draw(suite: Suite, s: &mut Sampler, count: usize) -> Vec<Case> {
    let mut cases = Vec::with_capacity(count);
    let mut push = |input: Value, check: Check| {
        let index = cases.len();
        cases.push(Case {
            index,
            input,
            check,
        });
    };
    for i in 0..count {
        match suite {
            Suite::Quartic => {
                let (v, c) = quartic_case(s);
                push(v, c)
            }
            Suite::Quintic => {
                let (v, c) = quintic_case(s);
                push(v, c)
            }
            Suite::Cubic => {
                let (v, c) = cubic_case(s);
                push(v, c)
            }
            Suite::Involution => {
                let (v, c) = involution_case(s, i);
                push(v, c)
            }
            Suite::Equivariance => {
                let (v, c) = phi_case(s, i);
                push(v, c);
                if i % 2 == 0 {
                    let (v, c) = psi_case(s, i);
                    push(v, c)
                }
            }
            Suite::Apolarity => {
                let (v, c) = apolarity_case(s, i);
                push(v, c)
            }
            Suite::Hilbert => {
                let (v, c) = hilbert_case(s, i);
                push(v, c)
            }
            Suite::Catalecticant => {
                let (v, c) = catalecticant_case(s, i);
                push(v, c)
            }
        }
    }
    cases
}

fn evaluate(cases: Vec<Case>) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|c| CaseResult {
            index: c.index,
            error: (c.check)().err(),
            input: c.input,
        })
        .collect();
    out.sort_by_key(|c| c.index);
    out
}

/// Runs `count` cases of a suite. `ASSOFORM_THREADS` caps the worker count.
pub fn run(suite: Suite, seed: u64, count: usize) -> SuiteOutcome {
    let mut sampler = Sampler::new(seed);
    let cases = draw(suite, &mut sampler, count);
    let threads = std::env::var("ASSOFORM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0);
    let results = match threads.map(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build()) {
        Some(Ok(pool)) => pool.install(|| evaluate(cases)),
        _ => evaluate(cases),
    };
    SuiteOutcome {
        suite,
        seed,
        cases: results,
        rejected: sampler.rejected(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series() {
        assert_eq!(complete_intersection_series(2, 4), vec![1, 2, 3, 2, 1]);
        assert_eq!(complete_intersection_series(3, 3), vec![1, 3, 3, 1]);
        assert_eq!(complete_intersection_series(2, 2), vec![1]);
    }

    #[test]
    fn small_runs_pass() {
        for suite in [
            Suite::Quartic,
            Suite::Cubic,
            Suite::Hilbert,
            Suite::Catalecticant,
        ] {
            let out = run(suite, 11, 4);
            assert!(out.passed(), "{}: {:?}", suite.name(), out.to_json());
        }
    }
}
