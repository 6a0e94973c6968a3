//! Random inputs shared by the property and acceptance targets.
#![allow(dead_code)]

use std::sync::Arc;

use bcquad::coeffs::{ParamScalar, SymbolTable};
use bcquad::qalgebra::{AlgebraSpec, QElem};
use proptest::prelude::*;

/// The three kernels with symbolic parameters, then numeric instances.
pub fn symbolic_algebras() -> Vec<Arc<AlgebraSpec>> {
    vec![
        AlgebraSpec::minus_one_symbolic(),
        AlgebraSpec::a_zero_zero_symbolic(),
        AlgebraSpec::quantum_plane_symbolic(),
    ]
}

pub fn numeric(a: i64, b: i64, c: i64) -> Arc<AlgebraSpec> {
    let t = SymbolTable::standard();
    AlgebraSpec::infer(
        ParamScalar::from_int(&t, a),
        ParamScalar::from_int(&t, b),
        ParamScalar::from_int(&t, c),
    )
    .unwrap()
}

pub fn numeric_algebras() -> Vec<Arc<AlgebraSpec>> {
    vec![numeric(2, -1, 3), numeric(3, 0, 0), numeric(0, 2, 0)]
}

/// Index into `symbolic_algebras() ++ numeric_algebras()`.
pub fn any_algebra() -> impl Strategy<Value = Arc<AlgebraSpec>> {
    (0usize..6).prop_map(|k| {
        if k < 3 {
            symbolic_algebras()[k].clone()
        } else {
            numeric_algebras()[k - 3].clone()
        }
    })
}

pub fn elem(alg: &Arc<AlgebraSpec>, terms: &[(u32, u32, i64)]) -> QElem {
    let t = alg.table();
    QElem::from_terms(
        alg,
        terms
            .iter()
            .map(|&(i, j, c)| (i, j, ParamScalar::from_int(t, c))),
    )
}

/// Sparse terms `c·xⁱyʲ` with `i + j <= deg`.
pub fn terms(deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec(
        (0..=deg).prop_flat_map(move |i| (Just(i), 0..=deg - i, -3i64..=3)),
        1..=max_terms,
    )
}

/// Coefficients of a homogeneous element of degree `n`, not all zero.
pub fn homogeneous(n: u32) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, (n + 1) as usize)
        .prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
}

/// `Σ v[i] x^{n-i} yⁱ`.
pub fn homogeneous_elem(alg: &Arc<AlgebraSpec>, v: &[i64]) -> QElem {
    let n = (v.len() - 1) as u32;
    let terms: Vec<(u32, u32, i64)> = v
        .iter()
        .enumerate()
        .map(|(i, &c)| (n - i as u32, i as u32, c))
        .collect();
    elem(alg, &terms)
}

/// Random scalar in the symbols `a, b, c`.
pub fn scalar_terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec((prop::array::uniform3(0u32..3), -4i64..=4), 0..5)
}

pub fn scalar(table: &Arc<SymbolTable>, terms: &[([u32; 3], i64)]) -> ParamScalar {
    let mut out = ParamScalar::zero(table);
    for (e, c) in terms {
        let mut m = ParamScalar::from_int(table, *c);
        for (k, &p) in e.iter().enumerate() {
            m = &m * &ParamScalar::var(table, k).pow(p);
        }
        out = &out + &m;
    }
    out
}

/// Terms of `e` with `y`-exponent below `n`.
pub fn below(e: &QElem, n: u32) -> QElem {
    QElem::from_terms(
        e.algebra(),
        e.terms().into_iter().filter(|&(_, j, _)| j < n),
    )
}
