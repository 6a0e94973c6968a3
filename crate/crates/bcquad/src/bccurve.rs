//! Burchnall-Chaundy curves `F(s,t) = Res(f − s, g − t)` of commuting pairs.
//!
//! `s` and `t` are central degree-zero symbols of the coefficient table.
//! Evaluating a curve at `(f, g)` keeps every coefficient on the left and
//! substitutes `sⁱtʲ ↦ fⁱgʲ` on the right, which is the placement under
//! which `F₁(f − s) + F₂(g − t)` maps to zero.

use std::collections::BTreeMap;

use num_traits::One;
use thiserror::Error;

use crate::coeffs::{ParamScalar, Rational};
use crate::qalgebra::{commutes, AlgebraError, QElem};
use crate::resultants::{resultant_sequence, subresultant, ResultantError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("the pair does not commute (f*g != g*f)")]
    NonCommuting,
    #[error("{0} must not involve the curve symbols s, t")]
    HasCurveSymbols(&'static str),
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Content removed from a raw curve: `raw = x^alpha · scalar · reduced · y^beta`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveContent {
    pub alpha: u32,
    pub beta: u32,
    pub scalar: Rational,
}

#[derive(Clone, Debug)]
pub struct BCCurve {
    pub raw: QElem,
    pub reduced: QElem,
    pub content: CurveContent,
    /// `Res(f, g)` was computed with the arguments exchanged.
    pub swapped: bool,
    pub commuting_verified: bool,
    /// `evaluate_curve(reduced, f, g)` is zero.
    pub vanishing_verified: bool,
    pub residue: QElem,
    /// Evaluation of the unreduced determinant; zero whenever the pair commutes.
    pub raw_residue: QElem,
}

fn curve_symbols(f: &QElem) -> (QElem, QElem) {
    let alg = f.algebra();
    let (si, ti) = alg.table().curve_indices();
    (
        QElem::constant(alg, ParamScalar::var(alg.table(), si)),
        QElem::constant(alg, ParamScalar::var(alg.table(), ti)),
    )
}

fn free_of_curve_symbols(e: &QElem) -> bool {
    let (si, ti) = e.algebra().table().curve_indices();
    e.terms()
        .iter()
        .all(|(_, _, c)| c.free_of(si) && c.free_of(ti))
}

fn check_pair(f: &QElem, g: &QElem) -> Result<(), CurveError> {
    if !free_of_curve_symbols(f) {
        return Err(CurveError::HasCurveSymbols("f"));
    }
    if !free_of_curve_symbols(g) {
        return Err(CurveError::HasCurveSymbols("g"));
    }
    if !commutes(f, g)? {
        return Err(CurveError::NonCommuting);
    }
    Ok(())
}

/// Strips the largest `x^α` (left) and `y^β` (right) dividing every term and,
/// when the leading coefficient is a rational constant, makes it `1`.
pub fn reduce_curve(raw: &QElem) -> (QElem, CurveContent) {
    if raw.is_zero() {
        return (
            raw.clone(),
            CurveContent {
                alpha: 0,
                beta: 0,
                scalar: Rational::one(),
            },
        );
    }
    let (alpha, beta) = raw.monomial_content();
    let stripped = raw.strip_monomial(alpha, beta);
    let lead = stripped
        .terms()
        .into_iter()
        .next()
        .map(|(_, _, c)| c)
        .unwrap();
    let scalar = lead.as_constant().unwrap_or_else(Rational::one);
    let reduced = if scalar.is_one() {
        stripped
    } else {
        let inv = ParamScalar::constant(raw.algebra().table(), scalar.recip());
        stripped.scale(&inv)
    };
    (
        reduced,
        CurveContent {
            alpha,
            beta,
            scalar,
        },
    )
}

/// Rebuilds `x^α · scalar · reduced · y^β`.
pub fn restore_content(reduced: &QElem, content: &CurveContent) -> QElem {
    let alg = reduced.algebra();
    let sc = ParamScalar::constant(alg.table(), content.scalar.clone());
    let x_alpha = QElem::monomial(alg, sc, content.alpha, 0);
    (&x_alpha * reduced).mul_y_right(content.beta)
}

/// `F(f, g)` with coefficients on the left of `fⁱgʲ`.
pub fn evaluate_curve(curve: &QElem, f: &QElem, g: &QElem) -> Result<QElem, CurveError> {
    check_pair(f, g)?;
    Ok(evaluate_unchecked(curve, f, g))
}

pub(crate) fn evaluate_unchecked(curve: &QElem, f: &QElem, g: &QElem) -> QElem {
    let alg = curve.algebra();
    let (si, ti) = alg.table().curve_indices();
    let mut groups: BTreeMap<Vec<u32>, QElem> = BTreeMap::new();
    for (i, j, c) in curve.terms() {
        for (key, k) in c.split_by(&[si, ti]) {
            let term = QElem::monomial(alg, k, i, j);
            let slot = groups.entry(key).or_insert_with(|| QElem::zero(alg));
            *slot = &*slot + &term;
        }
    }
    let mut fpow = vec![QElem::one(alg)];
    let mut gpow = vec![QElem::one(alg)];
    let mut out = QElem::zero(alg);
    for (key, coeff) in groups {
        let (ei, ej) = (key[0] as usize, key[1] as usize);
        while fpow.len() <= ei {
            let next = fpow.last().unwrap() * f;
            fpow.push(next);
        }
        while gpow.len() <= ej {
            let next = gpow.last().unwrap() * g;
            gpow.push(next);
        }
        let sub = &fpow[ei] * &gpow[ej];
        out = &out + &(&coeff * &sub);
    }
    out
}

/// Curve of a commuting pair; refuses non-commuting input.
pub fn bc_curve(f: &QElem, g: &QElem) -> Result<BCCurve, CurveError> {
    check_pair(f, g)?;
    let (s, t) = curve_symbols(f);
    let res = resultant_sequence(&(f - &s), &(g - &t))?;
    let raw = res.value;
    let (reduced, content) = reduce_curve(&raw);
    let residue = evaluate_unchecked(&reduced, f, g);
    let raw_residue = evaluate_unchecked(&raw, f, g);
    Ok(BCCurve {
        vanishing_verified: residue.is_zero(),
        raw,
        reduced,
        content,
        swapped: res.swapped,
        commuting_verified: true,
        residue,
        raw_residue,
    })
}

#[derive(Clone, Debug)]
pub struct LevelReport {
    pub level: u32,
    pub raw: QElem,
    pub reduced: QElem,
    pub residue: QElem,
    pub raw_residue: QElem,
}

impl LevelReport {
    pub fn vanishes(&self) -> bool {
        self.residue.is_zero()
    }

    /// The determinant itself is zero, so the level carries no curve.
    pub fn degenerate(&self) -> bool {
        self.raw.is_zero()
    }
}

/// `sRes_l(f − s, g − t)` for each level, reduced and evaluated at `(f, g)`.
///
/// The argument of larger `y`-degree goes first; `s` stays attached to `f`.
pub fn bc_vanishing_suite(
    f: &QElem,
    g: &QElem,
    levels: &[u32],
) -> Result<Vec<LevelReport>, CurveError> {
    check_pair(f, g)?;
    let (s, t) = curve_symbols(f);
    let (fs, gt) = (f - &s, g - &t);
    let (first, second) = if gt.ydeg() > fs.ydeg() {
        (&gt, &fs)
    } else {
        (&fs, &gt)
    };
    levels
        .iter()
        .map(|&l| {
            let raw = subresultant(first, second, l)?.value;
            let (reduced, _) = reduce_curve(&raw);
            Ok(LevelReport {
                level: l,
                residue: evaluate_unchecked(&reduced, f, g),
                raw_residue: evaluate_unchecked(&raw, f, g),
                raw,
                reduced,
            })
        })
        .collect()
}
