use std::sync::Arc;

use crate::coeffs::XPoly;
use crate::qalgebra::{AlgebraSpec, QElem};

use super::det::{determinant, last_column_cofactors};
use super::ResultantError;

/// Dense matrix of polynomials in `x`, optionally with a last column of
/// algebra elements that replaces the commutative last column when expanding.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    alg: Arc<AlgebraSpec>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<XPoly>>,
    pub last_column_override: Option<Vec<QElem>>,
}

impl PolyMatrix {
    pub fn new(
        alg: &Arc<AlgebraSpec>,
        entries: Vec<Vec<XPoly>>,
    ) -> Result<PolyMatrix, ResultantError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(ResultantError::Shape("ragged rows".into()));
        }
        Ok(PolyMatrix {
            alg: alg.clone(),
            rows,
            cols,
            entries,
            last_column_override: None,
        })
    }

    /// Attaches the algebra-valued last column used by the expansion form.
    pub fn with_override(mut self, column: Vec<QElem>) -> Result<PolyMatrix, ResultantError> {
        if column.len() != self.rows {
            return Err(ResultantError::Shape(format!(
                "override column has {} entries for {} rows",
                column.len(),
                self.rows
            )));
        }
        self.last_column_override = Some(column);
        Ok(self)
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.alg
    }

    /// Canonical strings, row-major; the override column (if any) is appended.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                let mut row: Vec<String> = self.entries[i].iter().map(|p| p.to_string()).collect();
                if let Some(col) = &self.last_column_override {
                    row.push(col[i].to_string());
                }
                row
            })
            .collect()
    }

    /// Aligned text grid.
    pub fn render(&self) -> String {
        render_grid(&self.to_strings())
    }

    fn one(&self) -> XPoly {
        XPoly::one(self.alg.table())
    }

    /// Signed cofactors of the last column, computed from the first `r-1`
    /// commutative columns.
    pub fn last_column_cofactors(&self) -> Result<Vec<XPoly>, ResultantError> {
        let r = self.rows;
        if r == 0 || self.cols + 1 < r {
            return Err(ResultantError::Shape(format!(
                "need at least {} leading columns, have {}",
                r.saturating_sub(1),
                self.cols
            )));
        }
        let lead: Vec<Vec<XPoly>> = self
            .entries
            .iter()
            .map(|row| row[..r - 1].to_vec())
            .collect();
        Ok(last_column_cofactors(&lead, &self.one())?)
    }
}

/// Determinant polynomial `|M| = Σᵢ det(Mᵢ)·yⁱ`, where `Mᵢ` is the first
/// `r-1` columns followed by column `c-i` (1-based).
///
/// With an override column the determinant is instead expanded along that
/// column, each `x`-cofactor multiplying its algebra entry from the left.
pub fn determinant_polynomial(m: &PolyMatrix) -> Result<QElem, ResultantError> {
    let (r, c) = (m.rows, m.cols);
    if let Some(col) = &m.last_column_override {
        let cof = m.last_column_cofactors()?;
        let mut out = QElem::zero(&m.alg);
        for (k, g) in cof.iter().zip(col) {
            out = &out + &g.left_mul_xpoly(k);
        }
        return Ok(out);
    }
    if r == 0 || r > c {
        return Err(ResultantError::Shape(format!(
            "determinant polynomial needs r <= c, got {}x{}",
            r, c
        )));
    }
    let one = m.one();
    let mut rows = Vec::new();
    for i in 0..=(c - r) {
        let last = c - 1 - i;
        let sub: Vec<Vec<XPoly>> = m
            .entries
            .iter()
            .map(|row| {
                let mut v = row[..r - 1].to_vec();
                v.push(row[last].clone());
                v
            })
            .collect();
        rows.push((i as u32, determinant(&sub, &one)?));
    }
    Ok(QElem::from_rows(&m.alg, rows))
}

/// `r × (d+1)` matrix whose `(i, j)` entry (1-based `j`) is the coefficient of
/// `y^{d+1-j}` in the `i`-th element, `d` the largest `y`-degree.
pub fn sequence_matrix(g: &[QElem]) -> Result<PolyMatrix, ResultantError> {
    let alg = common_algebra(g)?;
    let d = g.iter().filter_map(|e| e.ydeg()).max().unwrap_or(0);
    let r = g.len();
    if r > d as usize + 1 {
        return Err(ResultantError::Shape(format!(
            "{} elements but the largest y-degree is {}: the matrix would have fewer columns than rows",
            r, d
        )));
    }
    let entries = g
        .iter()
        .map(|e| (0..=d).rev().map(|k| e.row(k)).collect())
        .collect();
    PolyMatrix::new(&alg, entries)
}

/// Matrix used by the sequence resultant: the coefficients of
/// `y⁰, …, y^{r-2}` in each element, with the elements themselves as the
/// last column.
pub fn expansion_matrix(g: &[QElem]) -> Result<PolyMatrix, ResultantError> {
    let alg = common_algebra(g)?;
    let r = g.len();
    let entries = g
        .iter()
        .map(|e| (0..r.saturating_sub(1) as u32).map(|k| e.row(k)).collect())
        .collect();
    PolyMatrix::new(&alg, entries)?.with_override(g.to_vec())
}

fn common_algebra(g: &[QElem]) -> Result<Arc<AlgebraSpec>, ResultantError> {
    let first = g
        .first()
        .ok_or_else(|| ResultantError::Shape("empty sequence".into()))?;
    let alg = first.algebra().clone();
    if g.iter().any(|e| e.algebra().as_ref() != alg.as_ref()) {
        return Err(crate::qalgebra::AlgebraError::AlgebraMismatch.into());
    }
    Ok(alg)
}

pub(crate) fn render_grid(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    cells
        .iter()
        .map(|r| {
            let body: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(j, s)| format!("{:>w$}", s, w = widths[j]))
                .collect();
            format!("[ {} ]", body.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
