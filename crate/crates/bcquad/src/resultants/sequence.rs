use crate::coeffs::{ParamScalar, XPoly};
use crate::qalgebra::{AlgebraError, QElem};

use super::matrix::{expansion_matrix, PolyMatrix};
use super::ResultantError;

/// Result of expanding the determinant of a polynomial sequence.
#[derive(Clone, Debug)]
pub struct SequenceResultant {
    pub value: QElem,
    /// The arguments were exchanged because the second had larger `y`-degree.
    pub swapped: bool,
    /// Sign `ε` with `Res(f, g) = ε · value` for the order the caller gave.
    pub sign: i32,
    /// Sequence rows, coefficient columns and the rows as last column.
    pub matrix: PolyMatrix,
    /// Signed cofactor of each row in the last-column expansion.
    pub cofactors: Vec<XPoly>,
    /// Number of rows built from the first (post-swap) argument.
    pub first_block: usize,
}

fn check_inputs(f: &QElem, g: &QElem) -> Result<(u32, u32), ResultantError> {
    if f.algebra().as_ref() != g.algebra().as_ref() {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let (n, m) = (f.ydeg().unwrap(), g.ydeg().unwrap());
    if n == 0 || m == 0 {
        return Err(ResultantError::Precondition(
            "both inputs need positive y-degree".into(),
        ));
    }
    Ok((n, m))
}

fn y_times(k: u32, f: &QElem) -> QElem {
    let alg = f.algebra();
    &QElem::monomial(alg, ParamScalar::one(alg.table()), 0, k) * f
}

fn expand(rows: Vec<QElem>) -> Result<(QElem, PolyMatrix, Vec<XPoly>), ResultantError> {
    let matrix = expansion_matrix(&rows)?;
    let cofactors = matrix.last_column_cofactors()?;
    let mut value = QElem::zero(rows[0].algebra());
    for (c, row) in cofactors.iter().zip(&rows) {
        if !c.is_zero() {
            value = &value + &row.left_mul_xpoly(c);
        }
    }
    Ok((value, matrix, cofactors))
}

/// Determinant polynomial of `f, yf, …, y^{m-1}f, g, yg, …, y^{n-1}g` with
/// `n = ydeg f`, `m = ydeg g`.
///
/// The coefficient columns hold `y⁰, …, y^{r-2}` and the last column holds
/// the sequence itself; the expansion multiplies each cofactor from the left.
/// If `ydeg g > ydeg f` the arguments are exchanged first and the sign
/// relating the two orders is reported.
pub fn resultant_sequence(f: &QElem, g: &QElem) -> Result<SequenceResultant, ResultantError> {
    let (n, m) = check_inputs(f, g)?;
    let (first, second, swapped) = if m > n { (g, f, true) } else { (f, g, false) };
    let (n1, n2) = (first.ydeg().unwrap(), second.ydeg().unwrap());
    let mut rows: Vec<QElem> = (0..n2).map(|k| y_times(k, first)).collect();
    rows.extend((0..n1).map(|k| y_times(k, second)));
    let (value, matrix, cofactors) = expand(rows)?;
    let sign = if swapped && (n1 * n2) % 2 == 1 { -1 } else { 1 };
    Ok(SequenceResultant {
        value,
        swapped,
        sign,
        matrix,
        cofactors,
        first_block: n2 as usize,
    })
}

/// `sRes_l(f, g)`: the sequence `y^{m-l-1}f, …, yf, f, y^{n-l-1}g, …, yg, g`
/// (descending inside each block), expanded like [`resultant_sequence`].
/// Requires `ydeg f ≥ ydeg g > l`.
pub fn subresultant(f: &QElem, g: &QElem, l: u32) -> Result<SequenceResultant, ResultantError> {
    let (n, m) = check_inputs(f, g)?;
    if n < m {
        return Err(ResultantError::Precondition(format!(
            "subresultant needs ydeg f >= ydeg g, got {} < {}",
            n, m
        )));
    }
    if l >= m {
        return Err(ResultantError::Precondition(format!(
            "level {} must be below ydeg g = {}",
            l, m
        )));
    }
    let mut rows: Vec<QElem> = (0..m - l).rev().map(|k| y_times(k, f)).collect();
    rows.extend((0..n - l).rev().map(|k| y_times(k, g)));
    let (value, matrix, cofactors) = expand(rows)?;
    Ok(SequenceResultant {
        value,
        swapped: false,
        sign: 1,
        matrix,
        cofactors,
        first_block: (m - l) as usize,
    })
}

/// `Res = F₁·f + F₂·g` with `F₁, F₂` gathered from the expansion cofactors.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub f1: QElem,
    pub f2: QElem,
    /// The resultant as computed (see [`SequenceResultant::swapped`]).
    pub resultant: QElem,
    pub swapped: bool,
    pub remainder_identity_checked: bool,
}

pub fn bezout_certificate(f: &QElem, g: &QElem) -> Result<Certificate, ResultantError> {
    let res = resultant_sequence(f, g)?;
    let alg = f.algebra();
    let gather = |cofs: &[XPoly]| {
        QElem::from_rows(
            alg,
            cofs.iter().enumerate().map(|(k, c)| (k as u32, c.clone())),
        )
    };
    let first = gather(&res.cofactors[..res.first_block]);
    let second = gather(&res.cofactors[res.first_block..]);
    let (f1, f2) = if res.swapped {
        (second, first)
    } else {
        (first, second)
    };
    let check = &(&f1 * f) + &(&f2 * g);
    Ok(Certificate {
        remainder_identity_checked: check == res.value,
        f1,
        f2,
        resultant: res.value,
        swapped: res.swapped,
    })
}
