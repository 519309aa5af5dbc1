mod common;

use assoform_core::differential::gradient;
use assoform_core::milnor::{associated_form, hilbert_function, mu_coefficients, PolyTuple};
use assoform_core::monomial::Monomial;
use assoform_core::rational::{factorial, int, pow, rat};
use assoform_core::{Poly, Rational, Space};
use common::z;

fn power_sum(coeffs: &[Rational], d: usize) -> Poly {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .fold(Poly::zero(n, Space::Z), |acc, (i, a)| {
            acc + Poly::var(n, Space::Z, i).pow(d as u32).scale(a)
        })
}

/// `(1/Πa)·(n(d-2))!/(d!)^n·(e1⋯en)^(d-2)`.
fn power_sum_oracle(coeffs: &[Rational], d: usize) -> Poly {
    let n = coeffs.len();
    let prod = coeffs.iter().fold(int(1), |acc, a| acc * a);
    let c = Rational::from_integer(factorial(n * (d - 2)))
        / (prod * pow(&Rational::from_integer(factorial(d)), n as u32));
    Poly::monomial(Space::E, Monomial::new(vec![(d - 2) as u32; n]), c)
}

#[test]
fn power_sums() {
    let samples = [
        (vec![int(1), int(1)], 4),
        (vec![rat(2, 3), int(-5)], 5),
        (vec![int(3), rat(1, 2), int(-1)], 3),
        (vec![int(1), int(2), int(3)], 4),
        (vec![int(1), rat(-1, 4), int(2), rat(5, 3)], 3),
    ];
    for (coeffs, d) in samples {
        let phi = associated_form(&power_sum(&coeffs, d)).unwrap().form;
        assert_eq!(phi, power_sum_oracle(&coeffs, d));
    }
}

fn q_oracle(t: &Rational) -> Poly {
    let e = |s| assoform_core::parse_poly(s, 2, Space::E).unwrap();
    let c = int(1) / (int(72) * (t * t - int(4)));
    (e("e1^4 + e2^4").scale(t) + e("-12*e1^2*e2^2")).scale(&c)
}

fn c_oracle(t: &Rational) -> Poly {
    let e = |s| assoform_core::parse_poly(s, 3, Space::E).unwrap();
    let c = -int(1) / (int(24) * (pow(t, 3) + int(27)));
    (e("e1^3 + e2^3 + e3^3").scale(t) + e("-18*e1*e2*e3")).scale(&c)
}

#[test]
fn quartic_family() {
    for t in [
        int(0),
        int(1),
        int(-1),
        int(3),
        rat(1, 2),
        rat(-7, 3),
        int(6),
        int(10),
    ] {
        let f = z("z1^4 + z2^4", 2) + z("z1^2*z2^2", 2).scale(&t);
        assert_eq!(associated_form(&f).unwrap().form, q_oracle(&t), "t = {t}");
    }
}

#[test]
fn cubic_family() {
    for t in [int(0), int(1), int(-2), rat(3, 2), int(6), rat(-5, 4)] {
        let f = z("z1^3 + z2^3 + z3^3", 3) + z("z1*z2*z3", 3).scale(&t);
        assert_eq!(associated_form(&f).unwrap().form, c_oracle(&t), "t = {t}");
    }
}

#[test]
fn mu_of_fermat_quartic() {
    let mu = mu_coefficients(&gradient(&z("z1^4 + z2^4", 2)).unwrap()).unwrap();
    assert_eq!(mu.len(), 1);
    assert_eq!(mu[&Monomial::new(vec![2, 2])], rat(1, 144));
}

/// Coefficients of `(1 + t + ... + t^(d-2))^n`.
fn ci_series(n: usize, d: usize) -> Vec<usize> {
    let mut acc = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0; acc.len() + d - 2];
        for (i, a) in acc.iter().enumerate() {
            for j in 0..=(d - 2) {
                next[i + j] += a;
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn hilbert_functions() {
    let cases = [
        (vec!["z1^3", "z2^3"], 2, 4),
        (vec!["z1^2 + z2^2", "z1*z2"], 2, 3),
        (vec!["z1^2", "z2^2", "z3^2"], 3, 3),
        (vec!["z1^3 - z2*z3^2", "z2^3 + z1^2*z3", "z3^3"], 3, 4),
    ];
    for (forms, n, d) in cases {
        let t = PolyTuple::new(forms.iter().map(|s| z(s, n)).collect()).unwrap();
        assert_eq!(hilbert_function(&t).unwrap(), ci_series(n, d));
    }
    assert_eq!(ci_series(2, 4), vec![1, 2, 3, 2, 1]);
}
