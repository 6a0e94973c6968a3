//! Exact commutative coefficients: rationals, polynomials in the central
//! symbols, and polynomials in `x` over those.

mod scalar;
mod symbols;
mod xpoly;

use std::fmt::Debug;

use thiserror::Error;

pub use scalar::{display_cmp, Monomial, ParamScalar};
pub use symbols::{same_table, SymbolTable, BUILTIN_SYMBOLS, GENERATORS};
pub use xpoly::XPoly;
pub(crate) use xpoly::{fmt_coeff_times, join_signed};

/// Exact rational numbers; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("operands live over different symbol tables")]
    TableMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("`{0}` cannot be used as a central symbol")]
    BadSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// Which ring operation [`scalar_arith`] and [`xpoly_arith`] perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn scalar_arith(
    op: ArithOp,
    u: &ParamScalar,
    v: &ParamScalar,
) -> Result<ParamScalar, CoeffError> {
    match op {
        ArithOp::Add => u.try_add(v),
        ArithOp::Sub => u.try_sub(v),
        ArithOp::Mul => u.try_mul(v),
    }
}

pub fn scalar_exact_div(u: &ParamScalar, v: &ParamScalar) -> Result<ParamScalar, CoeffError> {
    u.exact_div(v)
}

pub fn xpoly_arith(op: ArithOp, p: &XPoly, q: &XPoly) -> Result<XPoly, CoeffError> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

/// Commutative integral domain with exact division, as needed by
/// fraction-free determinant algorithms.
pub trait ExactRing: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Result<Self, CoeffError>;
}

impl ExactRing for ParamScalar {
    fn zero_like(&self) -> Self {
        ParamScalar::zero(self.table())
    }
    fn one_like(&self) -> Self {
        ParamScalar::one(self.table())
    }
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Result<Self, CoeffError> {
        ParamScalar::exact_div(self, other)
    }
}

impl ExactRing for XPoly {
    fn zero_like(&self) -> Self {
        XPoly::zero(self.table())
    }
    fn one_like(&self) -> Self {
        XPoly::one(self.table())
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Result<Self, CoeffError> {
        XPoly::exact_div(self, other)
    }
}
