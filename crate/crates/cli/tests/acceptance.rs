//! Acceptance criteria. Runs without the libtest harness so that each criterion
//! prints exactly one line; the process fails if any criterion does.

use std::time::{Duration, Instant};

use assoform::suites::{self, complete_intersection_series, Suite};
use assoform::Sampler;
use assoform_core::apolarity::in_image;
use assoform_core::duality::{
    family_form, involution_check, j_transform, mobius, orbit_duality_check, Family, FamilyPoint,
    InvolutionStatus, ProjectiveValue,
};
use assoform_core::invariants::{
    catalecticant, j_cubic_family, j_quartic, k_cubic, k_quartic, TernaryCubicFamily,
};
use assoform_core::milnor::{associated_form, hilbert_function};
use assoform_core::monomial::Monomial;
use assoform_core::rational::{factorial, int, pow, rat};
use assoform_core::{parse_poly, Poly, Rational, Space};
use num_traits::Zero;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: assoform_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn e(text: &str, n: usize) -> Poly {
    parse_poly(text, n, Space::E).unwrap()
}

fn quartic_point(t: &Rational) -> FamilyPoint {
    FamilyPoint::new(Family::BinaryQuartic, t.clone()).unwrap()
}

fn cubic_point(t: &Rational) -> FamilyPoint {
    FamilyPoint::new(Family::TernaryCubic, t.clone()).unwrap()
}

/// 23 random admissible parameters plus the exceptional values 0 and 6.
fn parameters(family: Family, seed: u64) -> Vec<Rational> {
    let mut s = Sampler::new(seed);
    let mut ts: Vec<Rational> = (0..23).map(|_| s.parameter(family)).collect();
    ts.push(int(0));
    ts.push(int(6));
    ts
}

fn example_one() -> Result<String, String> {
    let mut s = Sampler::new(101);
    let mut cases = 0;
    for (n, d) in [(2, 4), (2, 5), (3, 3), (3, 4), (4, 3)] {
        for _ in 0..3 {
            let a: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
            let f = a
                .iter()
                .enumerate()
                .fold(Poly::zero(n, Space::Z), |acc, (i, ai)| {
                    acc + Poly::var(n, Space::Z, i).pow(d as u32).scale(ai)
                });
            let prod = a.iter().fold(int(1), |acc, x| acc * x);
            let c = Rational::from_integer(factorial(n * (d - 2)))
                / (prod * pow(&Rational::from_integer(factorial(d)), n as u32));
            let expected = Poly::monomial(Space::E, Monomial::new(vec![(d - 2) as u32; n]), c);
            let got = core(associated_form(&f))?.form;
            ensure(got == expected, || {
                format!("n={n} d={d}: {got} != {expected}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} power sums"))
}

fn canonical_families() -> Result<String, String> {
    for t in parameters(Family::BinaryQuartic, 202) {
        let c = int(1) / (int(72) * (&t * &t - int(4)));
        let expected = (e("e1^4 + e2^4", 2).scale(&t) + e("-12*e1^2*e2^2", 2)).scale(&c);
        let got = core(associated_form(&family_form(&quartic_point(&t))))?.form;
        ensure(got == expected, || format!("q_{t}: {got}"))?;
    }
    for t in parameters(Family::TernaryCubic, 203) {
        let c = -int(1) / (int(24) * (pow(&t, 3) + int(27)));
        let expected = (e("e1^3 + e2^3 + e3^3", 3).scale(&t) + e("-18*e1*e2*e3", 3)).scale(&c);
        let got = core(associated_form(&family_form(&cubic_point(&t))))?.form;
        ensure(got == expected, || format!("c_{t}: {got}"))?;
    }
    Ok("25 quartic and 25 cubic parameters".into())
}

fn j_formulas() -> Result<String, String> {
    for t in parameters(Family::BinaryQuartic, 304) {
        let t2 = &t * &t;
        let expected = pow(&(&t2 + int(12)), 3) / (int(108) * pow(&(&t2 - int(4)), 2));
        let got = core(j_quartic(&family_form(&quartic_point(&t))))?;
        ensure(got == expected, || format!("J(q_{t}) = {got}"))?;
    }
    for t in parameters(Family::TernaryCubic, 305) {
        let t3 = pow(&t, 3);
        let expected = -&t3 * pow(&(&t3 - int(216)), 3) / (int(1728) * pow(&(&t3 + int(27)), 3));
        let p = core(TernaryCubicFamily::from_poly(&family_form(&cubic_point(
            &t,
        ))))?;
        let got = core(j_cubic_family(&p))?;
        ensure(got == expected, || format!("J(c_{t}) = {got}"))?;
    }
    let j_q0 = core(j_quartic(&family_form(&quartic_point(&int(0)))))?;
    ensure(j_q0 == int(1), || format!("J(q_0) = {j_q0}"))?;
    let c0 = core(TernaryCubicFamily::from_poly(&family_form(&cubic_point(
        &int(0),
    ))))?;
    let j_c0 = core(j_cubic_family(&c0))?;
    ensure(j_c0.is_zero(), || format!("J(c_0) = {j_c0}"))?;
    Ok("25 + 25 parameters, J(q_0) = 1, J(c_0) = 0".into())
}

fn k_equals_j() -> Result<String, String> {
    for t in parameters(Family::BinaryQuartic, 406) {
        let f = family_form(&quartic_point(&t));
        let k = core(k_quartic(&core(associated_form(&f))?.form))?;
        let j = core(j_quartic(&f))?;
        ensure(k == j, || format!("t={t}: K = {k}, J = {j}"))?;
    }
    for t in parameters(Family::TernaryCubic, 407) {
        let f = family_form(&cubic_point(&t));
        let k = core(k_cubic(&core(associated_form(&f))?.form))?;
        let j = core(j_cubic_family(&core(TernaryCubicFamily::from_poly(&f))?))?;
        ensure(k == j, || format!("t={t}: K = {k}, J = {j}"))?;
    }
    Ok("25 quartic and 25 cubic parameters".into())
}

fn suite(suite: Suite, seed: u64, count: usize) -> Result<usize, String> {
    let out = suites::run(suite, seed, count);
    let first = out.failures().next().cloned();
    match first {
        None => Ok(out.cases.len()),
        Some(f) => Err(format!(
            "{} case {}: {} on {}",
            suite.name(),
            f.index,
            f.error.as_deref().unwrap_or(""),
            f.input
        )),
    }
}

fn contravariants() -> Result<String, String> {
    let q = suite(Suite::Quartic, 505, 50)?;
    let c = suite(Suite::Cubic, 506, 50)?;
    let v = suite(Suite::Quintic, 507, 20)?;
    Ok(format!("{q} quartics, {c} cubics, {v} quintics"))
}

fn equivariance() -> Result<String, String> {
    let n = suite(Suite::Equivariance, 606, 100)?;
    Ok(format!("{n} cases (100 for Φ, 50 for Ψ)"))
}

fn inverse_systems() -> Result<String, String> {
    let n = suite(Suite::Apolarity, 707, 50)?;
    Ok(format!("{n} inputs"))
}

fn catalecticant_criterion() -> Result<String, String> {
    let mut s = Sampler::new(808);
    let (mut inside, mut outside) = (0, 0);
    for i in 0..50 {
        let d = 4 + i % 3;
        let big = loop {
            let f = s.sparse_form(2, 2 * (d - 2), Space::E);
            if !f.is_zero() {
                break f;
            }
        };
        let member = core(in_image(&big, d))?;
        let cat_nonzero = !core(catalecticant(&big))?.is_zero();
        ensure(member == cat_nonzero, || format!("d={d}: {big}"))?;
        if member {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    Ok(format!("{inside} with Cat != 0, {outside} with Cat = 0"))
}

fn involution_and_duality() -> Result<String, String> {
    let grid = |k: i64| rat(k, 2);
    let mut checked = 0;
    for k in -20..=20 {
        let t = grid(k);
        let Ok(p) = FamilyPoint::new(Family::BinaryQuartic, t.clone()) else {
            continue;
        };
        let status = core(involution_check(&family_form(&p)))?;
        let exceptional = t.is_zero() || &t * &t == int(36);
        let expected = if exceptional {
            InvolutionStatus::ImageDegenerate
        } else {
            InvolutionStatus::Fixed
        };
        ensure(status == expected, || format!("q_{t}: {status:?}"))?;
        checked += 1;
    }
    for k in -20..=20 {
        let t = grid(k);
        let Ok(p) = FamilyPoint::new(Family::TernaryCubic, t.clone()) else {
            continue;
        };
        let status = core(involution_check(&family_form(&p)))?;
        let exceptional = t.is_zero() || pow(&t, 3) == int(216);
        let expected = if exceptional {
            InvolutionStatus::ImageDegenerate
        } else {
            InvolutionStatus::Fixed
        };
        ensure(status == expected, || format!("c_{t}: {status:?}"))?;
        checked += 1;
    }

    let mut s = Sampler::new(909);
    for family in [Family::BinaryQuartic, Family::TernaryCubic] {
        for _ in 0..5 {
            let p = FamilyPoint::new(family, s.parameter(family)).unwrap();
            let c = s.unimodular_matrix(family.nvars());
            ensure(core(orbit_duality_check(&p, &c))?, || {
                format!("orbit duality fails at t = {}", p.t())
            })?;
            let jt = core(j_transform(&p))?;
            ensure(jt.holds(), || format!("J transform fails at t = {}", p.t()))?;
        }
    }

    use ProjectiveValue::{Finite, Infinity};
    let specials = [
        (Family::BinaryQuartic, Finite(int(1)), Infinity),
        (Family::BinaryQuartic, Infinity, Finite(int(1))),
        (Family::TernaryCubic, Finite(int(0)), Infinity),
        (Family::TernaryCubic, Infinity, Finite(int(0))),
    ];
    for (family, from, to) in specials {
        ensure(mobius(family, &from) == to, || {
            format!("{family:?}: {from:?}")
        })?;
    }
    for family in [Family::BinaryQuartic, Family::TernaryCubic] {
        let mut points = vec![Infinity, Finite(int(0)), Finite(int(1))];
        points.extend((0..97).map(|_| Finite(s.rational())));
        for z in points {
            ensure(mobius(family, &mobius(family, &z)) == z, || {
                format!("{z:?}")
            })?;
        }
    }
    Ok(format!(
        "{checked} grid parameters, 10 orbit dualities, 200 Möbius points"
    ))
}

fn hilbert_functions() -> Result<String, String> {
    let mut s = Sampler::new(1010);
    let shapes = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)];
    for i in 0..20 {
        let (n, d) = shapes[i % shapes.len()];
        let t = s.finite_colength_tuple(n, d);
        let h = core(hilbert_function(&t))?;
        ensure(h == complete_intersection_series(n, d), || {
            format!("n={n} d={d}: {h:?}")
        })?;
    }
    Ok("20 tuples".into())
}

fn main() {
    let criteria: [(&str, Check, u64); 10] = [
        ("power sums reproduce the closed form", example_one, 5),
        (
            "canonical families match closed forms",
            canonical_families,
            5,
        ),
        ("J formulas on both families", j_formulas, 2),
        ("K of the associated form equals J", k_equals_j, 2),
        ("contravariant identities", contravariants, 60),
        ("equivariance of Φ and Ψ", equivariance, 60),
        ("inverse systems and round trips", inverse_systems, 60),
        (
            "binary image membership is Cat != 0",
            catalecticant_criterion,
            30,
        ),
        (
            "involution, duality and Möbius maps",
            involution_and_duality,
            10,
        ),
        (
            "Hilbert functions of complete intersections",
            hilbert_functions,
            30,
        ),
    ];

    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let line = match (&outcome, in_time) {
            (Ok(detail), true) => format!("PASS  {detail}"),
            (Ok(detail), false) => format!("FAIL  over time limit; {detail}"),
            (Err(why), _) => format!("FAIL  {why}"),
        };
        if outcome.is_err() || !in_time {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{name}] {:.3}s / {limit}s: {line}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
