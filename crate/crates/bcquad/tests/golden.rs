//! Worked examples, compared as canonical strings.
//!
//! Every expected value here was recomputed independently (hand expansion
//! of the defining relation, cross-checked with a separate sympy script);
//! see the acceptance target for the comparison against the reference values.

use std::sync::Arc;

use bcquad::coeffs::SymbolTable;
use bcquad::parse::{parse_elem, parse_scalar};
use bcquad::qalgebra::{AlgebraSpec, GradedSlice, QElem};
use bcquad::resultants::{
    bezout_certificate, determinant_polynomial, expansion_matrix, resultant_homogeneous,
    resultant_sequence, sequence_matrix, subresultant, sylvester_homogeneous,
};

fn alg(params: &str, extra: &[&str]) -> Arc<AlgebraSpec> {
    let t = SymbolTable::with_extra(extra.iter().copied()).unwrap();
    let p: Vec<_> = params
        .split(',')
        .map(|s| parse_scalar(&t, s).unwrap())
        .collect();
    AlgebraSpec::infer(p[0].clone(), p[1].clone(), p[2].clone()).unwrap()
}

fn el(a: &Arc<AlgebraSpec>, s: &str) -> QElem {
    parse_elem(a, s).unwrap()
}

fn slice(a: &Arc<AlgebraSpec>, s: &str) -> GradedSlice {
    GradedSlice::new(el(a, s)).unwrap()
}

fn grid(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn sylvester_minus_one_x2_plus_y2_and_xy() {
    let a = alg("a,-1,c", &[]);
    let s = sylvester_homogeneous(&slice(&a, "x^2 + y^2"), &slice(&a, "x*y")).unwrap();
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["1", "0", "0", "0"],
            &["0", "1", "1", "a"],
            &["1", "0", "0", "-1"],
            &["0", "1", "0", "c"]
        ])
    );
    assert_eq!(s.determinant().unwrap().to_string(), "-1");
}

#[test]
fn sylvester_quantum_plane_pair() {
    let a = alg("0,b,0", &[]);
    let f = slice(&a, "x^2 + (1-b)*x*y - y^2");
    let g = slice(&a, "x^2 + (1+b)*x*y + y^2");
    let s = sylvester_homogeneous(&f, &g).unwrap();
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["1", "0", "1", "0"],
            &["-b + 1", "b^2", "b + 1", "b^2"],
            &["-1", "-b^2 + b", "1", "b^2 + b"],
            &["0", "-1", "0", "1"],
        ])
    );
    assert!(resultant_homogeneous(&f, &g).unwrap().is_zero());
}

#[test]
fn sylvester_a_zero_zero_pair() {
    let a = alg("a,0,0", &["e0", "e2", "l0", "l2"]);
    let f = slice(&a, "e0*x^2 + e2*y^2");
    let g = slice(&a, "l0*x^2 + l2*y^2");
    let s = sylvester_homogeneous(&f, &g).unwrap();
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["e0", "a*e0", "l0", "a*l0"],
            &["0", "0", "0", "0"],
            &["e2", "0", "l2", "0"],
            &["0", "e2", "0", "l2"],
        ])
    );
    assert!(s.determinant().unwrap().is_zero());
}

#[test]
fn sylvester_minus_one_square_pair() {
    let a = alg("a,-1,c", &[]);
    let f = slice(&a, "(1+a)*x^2 + (1+c)*y^2");
    let g = slice(&a, "(1-a)*x^2 + 2*x*y + (1-c)*y^2");
    let s = sylvester_homogeneous(&f, &g).unwrap();
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["a + 1", "0", "-a + 1", "0"],
            &["0", "a + 1", "2", "a + 1"],
            &["c + 1", "0", "-c + 1", "-2"],
            &["0", "c + 1", "0", "c + 1"],
        ])
    );
    assert_eq!(
        s.determinant().unwrap().to_string(),
        "-4*a*c - 4*a - 4*c - 4"
    );
    // (x - y)(x + y) expands to a different g, with vanishing resultant
    let g2 = el(&a, "(x - y)*(x + y)");
    assert_eq!(g2.to_string(), "(-a + 1)*x^2 + 2*x*y + (-c - 1)*y^2");
    let r = resultant_homogeneous(&f, &GradedSlice::new(g2).unwrap()).unwrap();
    assert!(r.is_zero());
}

#[test]
fn sylvester_x2_and_xy() {
    let a = alg("a,-1,c", &[]);
    let s = sylvester_homogeneous(&slice(&a, "x^2"), &slice(&a, "x*y")).unwrap();
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["1", "0", "0", "0"],
            &["0", "1", "1", "a"],
            &["0", "0", "0", "-1"],
            &["0", "0", "0", "c"]
        ])
    );
    assert!(s.determinant().unwrap().is_zero());
}

#[test]
fn sylvester_cubic_and_quadratic_six_by_six() {
    let a = alg("a,-1,c", &[]);
    let s = sylvester_homogeneous(&slice(&a, "x^3 + y^3"), &slice(&a, "x^2*y + x*y^2")).unwrap();
    assert_eq!(s.size(), 6);
    assert_eq!(
        s.to_strings(),
        grid(&[
            &["1", "a", "0", "0", "0", "0"],
            &["0", "-1", "0", "1", "0", "0"],
            &["0", "c", "1", "1", "a + 1", "0"],
            &["1", "0", "0", "0", "-1", "1"],
            &["0", "1", "0", "0", "c", "1"],
            &["0", "0", "1", "0", "0", "0"],
        ])
    );
    assert_eq!(
        s.determinant().unwrap().to_string(),
        "a^2 - c^2 + 2*a - 2*c"
    );
}

#[test]
fn products_from_worked_examples() {
    let q = alg("0,b,0", &[]);
    assert_eq!(
        (&el(&q, "x^2*y^2 + x*y") * &el(&q, "x*y")).to_string(),
        "b^2*x^3*y^3 + b*x^2*y^2"
    );
    let m = alg("a,-1,c", &[]);
    assert_eq!(
        (&el(&m, "y^2") * &el(&m, "x^2*y^2 + x^2*y")).to_string(),
        "x^2*y^4 + x^2*y^3"
    );
}

#[test]
fn quantum_plane_curve_resultant() {
    let q = alg("0,b,0", &[]);
    let r = resultant_sequence(&el(&q, "x^2*y^2 + x*y - s"), &el(&q, "x*y - t")).unwrap();
    assert!(!r.swapped);
    assert_eq!(r.value.to_string(), "(t^2 - b*s + b*t)*x^2*y^2");
    assert_eq!(
        r.matrix.to_strings(),
        grid(&[
            &["-s", "x", "x^2*y^2 + x*y - s"],
            &["-t", "x", "x*y - t"],
            &["0", "-t", "b*x*y^2 - t*y"],
        ])
    );
}

#[test]
fn minus_one_curve_resultant_and_subresultant() {
    let m = alg("a,-1,c", &[]);
    let f = el(&m, "y^2 - s");
    let g = el(&m, "x^2*y^2 + x^2*y - t");
    let r = resultant_sequence(&f, &g).unwrap();
    assert_eq!(
        r.value.to_string(),
        "(s^2 - s)*x^4*y^3 - 2*s*t*x^2*y^3 + t^2*y^3"
    );
    let s1 = subresultant(&f, &g, 1).unwrap();
    assert_eq!(
        s1.matrix.to_strings(),
        grid(&[&["-s", "y^2 - s"], &["-t", "x^2*y^2 + x^2*y - t"]])
    );
    assert_eq!(s1.value.to_string(), "-s*x^2*y^2 - s*x^2*y + t*y^2");
}

#[test]
fn a_zero_zero_curve_vanishes() {
    let a = alg("a,0,0", &[]);
    let r = resultant_sequence(&el(&a, "x^2*y^2 - s"), &el(&a, "(x^3 + x)*y^2 - t")).unwrap();
    assert!(r.value.is_zero());
    let d = expansion_matrix(&[
        el(&a, "x^2*y^2 - s"),
        el(&a, "y*(x^2*y^2 - s)"),
        el(&a, "(x^3 + x)*y^2 - t"),
        el(&a, "y*((x^3 + x)*y^2 - t)"),
    ])
    .unwrap();
    assert_eq!(
        d.to_strings(),
        grid(&[
            &["-s", "0", "x^2", "x^2*y^2 - s"],
            &["0", "-s", "a*x^3", "a*x^3*y^2 - s*y"],
            &["-t", "0", "x^3 + x", "x^3*y^2 + x*y^2 - t"],
            &["0", "-t", "a*x^4 + a*x^2", "a*x^4*y^2 + a*x^2*y^2 - t*y"],
        ])
    );
}

#[test]
fn stated_inputs_of_the_a_zero_zero_example() {
    // f = x*y - s, g = (x^2 + 1)*y^2 - t
    let a = alg("a,0,0", &[]);
    let r = resultant_sequence(&el(&a, "x*y - s"), &el(&a, "(x^2 + 1)*y^2 - t")).unwrap();
    assert!(r.swapped);
    assert_eq!(r.sign, 1);
    let v = r.value.to_string();
    assert!(!v.is_empty());
}

#[test]
fn linear_pair_resultant() {
    let a = alg("a,-1,c", &["p0", "p1", "q0", "q1"]);
    let r = resultant_sequence(&el(&a, "p0 + p1*y - s"), &el(&a, "q0 + q1*y - t")).unwrap();
    assert_eq!(r.value, el(&a, "(p1*t - q1*s + p0*q1 - q0*p1)*y"));
    assert_eq!(r.value.to_string(), "(-s*q1 + t*p1 + p0*q1 - p1*q0)*y");
    let c = bezout_certificate(&el(&a, "p0 + p1*y"), &el(&a, "q0 + q1*y")).unwrap();
    assert!(c.remainder_identity_checked);
    assert_eq!(
        (c.f1.to_string(), c.f2.to_string()),
        ("-q0".to_string(), "p0".to_string())
    );
}

#[test]
fn determinant_polynomial_forms() {
    let a = alg("a,-1,c", &[]);
    let seq = [el(&a, "x*y + 1"), el(&a, "y^2 + x")];
    let m = sequence_matrix(&seq).unwrap();
    assert_eq!(m.to_strings(), grid(&[&["0", "x", "1"], &["1", "0", "x"]]));
    assert_eq!(determinant_polynomial(&m).unwrap().to_string(), "-x*y - 1");
}

#[test]
fn minus_one_curve_levels() {
    let m = alg("a,-1,c", &[]);
    let (f, g) = (el(&m, "y^2"), el(&m, "x^2*y^2 + x^2*y"));
    let curve = bcquad::bccurve::bc_curve(&f, &g).unwrap();
    assert_eq!(
        curve.raw.to_string(),
        "(s^2 - s)*x^4*y^3 - 2*s*t*x^2*y^3 + t^2*y^3"
    );
    assert!(curve.raw_residue.is_zero());
    let levels = bcquad::bccurve::bc_vanishing_suite(&f, &g, &[0, 1]).unwrap();
    assert_eq!(levels[1].reduced.to_string(), "-s*x^2*y - s*x^2 + t*y");
    assert!(levels.iter().all(|l| l.vanishes()));
}

#[test]
fn bezout_certificate_of_curve_pair() {
    let q = alg("0,b,0", &[]);
    let (f, g) = (el(&q, "x^2*y^2 + x*y - s"), el(&q, "x*y - t"));
    let c = bezout_certificate(&f, &g).unwrap();
    assert!(c.remainder_identity_checked);
    assert_eq!(c.f1.to_string(), "t^2");
    assert_eq!(c.f2.to_string(), "(-s + t)*x*y - s*t");
    let combined = &(&c.f1 * &f) + &(&c.f2 * &g);
    assert_eq!(combined, resultant_sequence(&f, &g).unwrap().value);
}

fn factor_outcome(a: &Arc<AlgebraSpec>, f: &str, g: &str) -> (Option<String>, bool) {
    let (f, g) = (el(a, f), el(a, g));
    let r = bcquad::factor::common_right_factor(&f, &g, 1).unwrap();
    let res = resultant_homogeneous(&GradedSlice::new(f).unwrap(), &GradedSlice::new(g).unwrap())
        .unwrap();
    (r.factor().map(|p| p.to_string()), res.is_zero())
}

#[test]
fn common_right_factor_examples() {
    let q = alg("0,b,0", &[]);
    assert_eq!(
        factor_outcome(&q, "x^2 + (1 - b)*x*y - y^2", "x^2 + (1 + b)*x*y + y^2"),
        (Some("x + y".into()), true)
    );
    let a = alg("a,0,0", &["e0", "e2", "l0", "l2"]);
    assert_eq!(
        factor_outcome(&a, "e0*x^2 + e2*y^2", "l0*x^2 + l2*y^2"),
        (None, true)
    );
    let m = alg("a,-1,c", &[]);
    assert_eq!(
        factor_outcome(
            &m,
            "(1 + a)*x^2 + (1 + c)*y^2",
            "(1 - a)*x^2 + 2*x*y + (1 - c)*y^2"
        ),
        (None, false)
    );
    let g = (&el(&m, "x - y") * &el(&m, "x + y")).to_string();
    assert_eq!(
        factor_outcome(&m, "(1 + a)*x^2 + (1 + c)*y^2", &g),
        (Some("x + y".into()), true)
    );
    assert_eq!(
        factor_outcome(&m, "x^2", "x*y"),
        (Some("x - c*y".into()), true)
    );
}
