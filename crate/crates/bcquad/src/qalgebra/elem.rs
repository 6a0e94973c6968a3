use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeffs::{fmt_coeff_times, join_signed, ParamScalar, XPoly};

use super::kernel::{commute_terms, CommuteTerms};
use super::{same_algebra, AlgebraError, AlgebraSpec};

/// Element of `Q(a,b,c)` in normal form `Σⱼ pⱼ(x)yʲ`.
///
/// Rows are keyed by the `y`-degree and never hold a zero polynomial, so the
/// representation is unique. The zero element still carries its algebra.
#[derive(Clone)]
pub struct QElem {
    alg: Arc<AlgebraSpec>,
    rows: BTreeMap<u32, XPoly>,
}

impl PartialEq for QElem {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.rows == other.rows
    }
}

impl Eq for QElem {}

impl QElem {
    pub fn zero(alg: &Arc<AlgebraSpec>) -> Self {
        QElem {
            alg: alg.clone(),
            rows: BTreeMap::new(),
        }
    }

    pub fn one(alg: &Arc<AlgebraSpec>) -> Self {
        Self::constant(alg, ParamScalar::one(alg.table()))
    }

    pub fn constant(alg: &Arc<AlgebraSpec>, c: ParamScalar) -> Self {
        Self::monomial(alg, c, 0, 0)
    }

    /// `c · xⁱyʲ`
    pub fn monomial(alg: &Arc<AlgebraSpec>, c: ParamScalar, i: u32, j: u32) -> Self {
        let mut rows = BTreeMap::new();
        if !c.is_zero() {
            rows.insert(j, XPoly::monomial(c, i));
        }
        QElem {
            alg: alg.clone(),
            rows,
        }
    }

    pub fn x(alg: &Arc<AlgebraSpec>) -> Self {
        Self::monomial(alg, ParamScalar::one(alg.table()), 1, 0)
    }

    pub fn y(alg: &Arc<AlgebraSpec>) -> Self {
        Self::monomial(alg, ParamScalar::one(alg.table()), 0, 1)
    }

    /// `Σ pⱼ(x)yʲ` from `(j, pⱼ)` pairs.
    pub fn from_rows<I>(alg: &Arc<AlgebraSpec>, rows: I) -> Self
    where
        I: IntoIterator<Item = (u32, XPoly)>,
    {
        let mut out = QElem::zero(alg);
        for (j, p) in rows {
            out.add_row(j, &p, &ParamScalar::one(alg.table()), 0);
        }
        out
    }

    /// `Σ c·xⁱyʲ` from `(i, j, c)` triples.
    pub fn from_terms<I>(alg: &Arc<AlgebraSpec>, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, ParamScalar)>,
    {
        let mut out = QElem::zero(alg);
        for (i, j, c) in terms {
            out.add_row(j, &XPoly::monomial(c, i), &ParamScalar::one(alg.table()), 0);
        }
        out
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.alg
    }

    pub fn rows(&self) -> impl DoubleEndedIterator<Item = (u32, &XPoly)> {
        self.rows.iter().map(|(j, p)| (*j, p))
    }

    /// Coefficient of `yʲ` (zero if absent).
    pub fn row(&self, j: u32) -> XPoly {
        self.rows
            .get(&j)
            .cloned()
            .unwrap_or_else(|| XPoly::zero(self.alg.table()))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest `y`-exponent; `None` for zero.
    pub fn ydeg(&self) -> Option<u32> {
        self.rows.keys().next_back().copied()
    }

    /// Leading coefficient in `y`.
    pub fn leading_row(&self) -> Option<&XPoly> {
        self.rows.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.rows.iter().map(|(j, p)| j + p.degree().unwrap()).max()
    }

    /// All terms `(i, j, c)` for `c·xⁱyʲ`, in display order.
    pub fn terms(&self) -> Vec<(u32, u32, ParamScalar)> {
        let mut v: Vec<(u32, u32, ParamScalar)> = self
            .rows
            .iter()
            .flat_map(|(j, p)| p.terms().map(move |(i, c)| (i, *j, c.clone())))
            .collect();
        v.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.rows.values().map(|p| p.terms().count()).sum()
    }

    /// Coefficient `γᵢⱼ` of `xⁱyʲ`.
    pub fn gamma(&self, i: u32, j: u32) -> ParamScalar {
        self.rows
            .get(&j)
            .map(|p| p.coeff(i))
            .unwrap_or_else(|| ParamScalar::zero(self.alg.table()))
    }

    /// The scalar if this element has no `x` or `y`.
    pub fn as_scalar(&self) -> Option<ParamScalar> {
        match self.rows.len() {
            0 => Some(ParamScalar::zero(self.alg.table())),
            1 => self.rows.get(&0).and_then(|p| p.as_scalar()),
            _ => None,
        }
    }

    /// Common total degree of every monomial; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (j, p) in &self.rows {
            for (i, _) in p.terms() {
                match deg {
                    None => deg = Some(i + j),
                    Some(d) if d != i + j => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    pub fn homogeneous_components(&self) -> Vec<GradedSlice> {
        let mut parts: BTreeMap<u32, Vec<(u32, u32, ParamScalar)>> = BTreeMap::new();
        for (j, p) in &self.rows {
            for (i, c) in p.terms() {
                parts.entry(i + j).or_default().push((i, *j, c.clone()));
            }
        }
        parts
            .into_iter()
            .rev()
            .map(|(degree, ts)| GradedSlice {
                degree,
                element: QElem::from_terms(&self.alg, ts),
            })
            .collect()
    }

    fn add_row(&mut self, j: u32, p: &XPoly, c: &ParamScalar, shift: u32) {
        if p.is_zero() || c.is_zero() {
            return;
        }
        let entry = self
            .rows
            .entry(j)
            .or_insert_with(|| XPoly::zero(self.alg.table()));
        entry.add_scaled_shift(p, c, shift);
        if entry.is_zero() {
            self.rows.remove(&j);
        }
    }

    fn check(&self, other: &QElem) -> Result<(), AlgebraError> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &QElem) -> Result<QElem, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        let one = ParamScalar::one(self.alg.table());
        for (j, p) in &other.rows {
            out.add_row(*j, p, &one, 0);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &QElem) -> Result<QElem, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        let m1 = ParamScalar::from_int(self.alg.table(), -1);
        for (j, p) in &other.rows {
            out.add_row(*j, p, &m1, 0);
        }
        Ok(out)
    }

    /// Product in the algebra, distributing the kernel's `yʲxᵏ` rule over all
    /// monomial pairs: `pⱼ(x)yʲ · vₖxᵏyˡ = pⱼ(x)·(yʲxᵏ)·vₖyˡ`.
    pub fn try_mul(&self, other: &QElem) -> Result<QElem, AlgebraError> {
        self.check(other)?;
        let mut out = QElem::zero(&self.alg);
        for (j, pj) in &self.rows {
            for (l, ql) in &other.rows {
                for (k, v) in ql.terms() {
                    match commute_terms(&self.alg, *j, k) {
                        CommuteTerms::Swap => out.add_row(j + l, pj, v, k),
                        CommuteTerms::Terms(ts) => {
                            for (dx, dy, w) in ts {
                                out.add_row(dy + l, pj, &(v * &w), dx);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a central scalar.
    pub fn scale(&self, c: &ParamScalar) -> QElem {
        let mut out = QElem::zero(&self.alg);
        for (j, p) in &self.rows {
            out.add_row(*j, p, c, 0);
        }
        out
    }

    /// `p(x) · self`; on normal forms this multiplies every row by `p`.
    pub fn left_mul_xpoly(&self, p: &XPoly) -> QElem {
        let mut out = QElem::zero(&self.alg);
        for (j, r) in &self.rows {
            let prod = p * r;
            out.add_row(*j, &prod, &ParamScalar::one(self.alg.table()), 0);
        }
        out
    }

    /// `self · yᵏ`.
    pub fn mul_y_right(&self, k: u32) -> QElem {
        QElem {
            alg: self.alg.clone(),
            rows: self.rows.iter().map(|(j, p)| (j + k, p.clone())).collect(),
        }
    }

    /// Removes a left factor `xᵅ` and a right factor `yᵝ`; both must divide
    /// every term.
    pub fn strip_monomial(&self, alpha: u32, beta: u32) -> QElem {
        QElem {
            alg: self.alg.clone(),
            rows: self
                .rows
                .iter()
                .map(|(j, p)| {
                    (
                        j.checked_sub(beta).expect("y-power not present"),
                        p.unshift(alpha),
                    )
                })
                .collect(),
        }
    }

    /// Largest `(α, β)` with every term divisible by `xᵅyᵝ`.
    pub fn monomial_content(&self) -> (u32, u32) {
        let alpha = self
            .rows
            .values()
            .filter_map(|p| p.low_degree())
            .min()
            .unwrap_or(0);
        let beta = self.rows.keys().next().copied().unwrap_or(0);
        (alpha, beta)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> QElem {
        let mut out = QElem::zero(&self.alg);
        let one = ParamScalar::one(self.alg.table());
        for (j, p) in &self.rows {
            out.add_row(*j, &p.map_coeffs(&f), &one, 0);
        }
        out
    }

    /// `self^k` by repeated multiplication; `self^0 = 1`.
    pub fn pow(&self, k: u32) -> QElem {
        let mut acc = QElem::one(&self.alg);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_scalar() {
            return write!(f, "{}", c);
        }
        let parts = self.terms().into_iter().map(|(i, j, c)| {
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("x".to_string()),
                _ => mono.push(format!("x^{}", i)),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{}", j)),
            }
            fmt_coeff_times(&c, &mono.join("*"))
        });
        write!(f, "{}", join_signed(parts))
    }
}

impl fmt::Debug for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QElem({})", self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QElem> for &QElem {
            type Output = QElem;
            /// # Panics
            /// If the operands belong to different algebras.
            fn $method(self, rhs: &QElem) -> QElem {
                self.$checked(rhs)
                    .expect("QElem operands from different algebras")
            }
        }
        impl $tr<QElem> for QElem {
            type Output = QElem;
            fn $method(self, rhs: QElem) -> QElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        self.scale(&ParamScalar::from_int(self.alg.table(), -1))
    }
}

impl Neg for QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        -&self
    }
}

/// A homogeneous element together with its total degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSlice {
    pub degree: u32,
    pub element: QElem,
}

impl GradedSlice {
    /// Wraps a nonzero homogeneous element.
    pub fn new(element: QElem) -> Result<GradedSlice, AlgebraError> {
        let degree = element
            .homogeneous_degree()
            .ok_or(AlgebraError::NotHomogeneous)?;
        Ok(GradedSlice { degree, element })
    }
}
