use std::sync::Arc;

use crate::coeffs::ParamScalar;
use crate::qalgebra::{AlgebraError, AlgebraSpec, GradedSlice, QElem};

use super::det::determinant;
use super::matrix::render_grid;
use super::ResultantError;

/// Matrix of `(u, v) ↦ u·f + v·g` from `H_{n-1} ⊕ H_{m-1}` to `H_{m+n-1}`.
///
/// Column `k < n` holds `x^{n-1-k}yᵏ·f`, column `n + k` holds
/// `x^{m-1-k}yᵏ·g`; row `i` reads the coefficient of `x^{m+n-1-i}yⁱ`.
#[derive(Clone, Debug)]
pub struct SylvesterMatrix {
    pub algebra: Arc<AlgebraSpec>,
    pub f_degree: u32,
    pub g_degree: u32,
    pub entries: Vec<Vec<ParamScalar>>,
}

impl SylvesterMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    pub fn render(&self) -> String {
        render_grid(&self.to_strings())
    }

    pub fn determinant(&self) -> Result<ParamScalar, ResultantError> {
        Ok(determinant(
            &self.entries,
            &ParamScalar::one(self.algebra.table()),
        )?)
    }
}

pub fn sylvester_homogeneous(
    f: &GradedSlice,
    g: &GradedSlice,
) -> Result<SylvesterMatrix, ResultantError> {
    let alg = f.element.algebra().clone();
    if g.element.algebra().as_ref() != alg.as_ref() {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    let (m, n) = (f.degree, g.degree);
    if m == 0 || n == 0 {
        return Err(ResultantError::Precondition(
            "homogeneous degrees must be at least 1".into(),
        ));
    }
    let one = ParamScalar::one(alg.table());
    let size = (m + n) as usize;
    let mut cols: Vec<QElem> = Vec::with_capacity(size);
    for k in 0..n {
        cols.push(&QElem::monomial(&alg, one.clone(), n - 1 - k, k) * &f.element);
    }
    for k in 0..m {
        cols.push(&QElem::monomial(&alg, one.clone(), m - 1 - k, k) * &g.element);
    }
    let entries = (0..size as u32)
        .map(|i| cols.iter().map(|col| col.gamma(m + n - 1 - i, i)).collect())
        .collect();
    Ok(SylvesterMatrix {
        algebra: alg,
        f_degree: m,
        g_degree: n,
        entries,
    })
}

/// Determinant of [`sylvester_homogeneous`].
pub fn resultant_homogeneous(
    f: &GradedSlice,
    g: &GradedSlice,
) -> Result<ParamScalar, ResultantError> {
    sylvester_homogeneous(f, g)?.determinant()
}

/// Convenience wrapper taking plain elements.
pub fn resultant_homogeneous_elems(f: &QElem, g: &QElem) -> Result<ParamScalar, ResultantError> {
    let fs = GradedSlice::new(f.clone())?;
    let gs = GradedSlice::new(g.clone())?;
    resultant_homogeneous(&fs, &gs)
}
