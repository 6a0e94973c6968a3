use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::scalar::ParamScalar;
use super::symbols::{same_table, SymbolTable};
use super::CoeffError;

/// Univariate polynomial in `x` over [`ParamScalar`].
#[derive(Clone)]
pub struct XPoly {
    table: Arc<SymbolTable>,
    coeffs: BTreeMap<u32, ParamScalar>,
}

impl PartialEq for XPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for XPoly {}

impl XPoly {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        XPoly {
            table: table.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::constant(ParamScalar::one(table))
    }

    pub fn constant(c: ParamScalar) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · x^k`
    pub fn monomial(c: ParamScalar, k: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        let table = c.table().clone();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        XPoly { table, coeffs }
    }

    pub fn x(table: &Arc<SymbolTable>) -> Self {
        Self::monomial(ParamScalar::one(table), 1)
    }

    pub fn from_coeffs<I>(table: &Arc<SymbolTable>, coeffs: I) -> Self
    where
        I: IntoIterator<Item = (u32, ParamScalar)>,
    {
        let mut out = XPoly::zero(table);
        for (k, c) in coeffs {
            out.add_at(k, &c);
        }
        out
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent present; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, k: u32) -> ParamScalar {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| ParamScalar::zero(&self.table))
    }

    pub fn leading_coeff(&self) -> Option<&ParamScalar> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &ParamScalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn as_scalar(&self) -> Option<ParamScalar> {
        match self.degree() {
            None => Some(ParamScalar::zero(&self.table)),
            Some(0) => Some(self.coeffs[&0].clone()),
            _ => None,
        }
    }

    pub(crate) fn add_at(&mut self, k: u32, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&k) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, sum);
        }
    }

    /// `self += c · x^shift · p`, in place.
    pub(crate) fn add_scaled_shift(&mut self, p: &XPoly, c: &ParamScalar, shift: u32) {
        if c.is_one() {
            for (k, v) in &p.coeffs {
                self.add_at(k + shift, v);
            }
        } else {
            for (k, v) in &p.coeffs {
                self.add_at(k + shift, &(c * v));
            }
        }
    }

    fn check(&self, other: &XPoly) -> Result<(), CoeffError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(CoeffError::TableMismatch)
        }
    }

    pub fn try_add(&self, other: &XPoly) -> Result<XPoly, CoeffError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_at(*k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &XPoly) -> Result<XPoly, CoeffError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_at(*k, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &XPoly) -> Result<XPoly, CoeffError> {
        self.check(other)?;
        let mut out = XPoly::zero(&self.table);
        for (i, p) in &self.coeffs {
            for (j, q) in &other.coeffs {
                out.add_at(i + j, &(p * q));
            }
        }
        Ok(out)
    }

    pub fn left_scale(&self, c: &ParamScalar) -> Result<XPoly, CoeffError> {
        if !same_table(&self.table, c.table()) {
            return Err(CoeffError::TableMismatch);
        }
        let mut out = XPoly::zero(&self.table);
        for (k, p) in &self.coeffs {
            out.add_at(*k, &c.try_mul(p)?);
        }
        Ok(out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u32) -> XPoly {
        XPoly {
            table: self.table.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Divides by `x^k`; every exponent must be at least `k`.
    pub fn unshift(&self, k: u32) -> XPoly {
        XPoly {
            table: self.table.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.checked_sub(k).expect("x-power not present"), c.clone()))
                .collect(),
        }
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> XPoly {
        let mut out = XPoly::zero(&self.table);
        for (k, c) in &self.coeffs {
            out.add_at(*k, &f(c));
        }
        out
    }

    /// Exact quotient `self / v` by long division; leading coefficients must
    /// divide exactly at every step and the remainder must vanish.
    pub fn exact_div(&self, v: &XPoly) -> Result<XPoly, CoeffError> {
        self.check(v)?;
        let dv = v.degree().ok_or(CoeffError::DivisionByZero)?;
        let lc = v.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut q = XPoly::zero(&self.table);
        while let Some(dr) = rem.degree() {
            if dr < dv {
                return Err(CoeffError::InexactDivision {
                    dividend: self.to_string(),
                    divisor: v.to_string(),
                });
            }
            let c = rem.leading_coeff().unwrap().exact_div(&lc).map_err(|_| {
                CoeffError::InexactDivision {
                    dividend: self.to_string(),
                    divisor: v.to_string(),
                }
            })?;
            let k = dr - dv;
            for (e, vc) in &v.coeffs {
                rem.add_at(e + k, &-(&c * vc));
            }
            debug_assert!(!rem.coeffs.contains_key(&dr));
            q.add_at(k, &c);
        }
        Ok(q)
    }

    fn fmt_term(c: &ParamScalar, k: u32) -> (bool, String) {
        let xs = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{}", k),
        };
        fmt_coeff_times(c, &xs)
    }
}

/// Renders `c * mono` and reports whether it carries a leading minus.
pub(crate) fn fmt_coeff_times(c: &ParamScalar, mono: &str) -> (bool, String) {
    if c.num_terms() == 1 {
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if mono.is_empty() {
            (neg, body)
        } else if body == "1" {
            (neg, mono.to_string())
        } else {
            (neg, format!("{}*{}", body, mono))
        }
    } else if mono.is_empty() {
        (false, format!("({})", c))
    } else {
        (false, format!("({})*{}", c, mono))
    }
}

pub(crate) fn join_signed<I: IntoIterator<Item = (bool, String)>>(parts: I) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            let (k, c) = self.coeffs.iter().next().unwrap();
            if *k == 0 {
                return write!(f, "{}", c);
            }
        }
        let s = join_signed(self.coeffs.iter().rev().map(|(k, c)| Self::fmt_term(c, *k)));
        write!(f, "{}", s)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({})", self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&XPoly> for &XPoly {
            type Output = XPoly;
            /// # Panics
            /// If the operands use different symbol tables.
            fn $method(self, rhs: &XPoly) -> XPoly {
                self.$checked(rhs).expect("XPoly symbol tables differ")
            }
        }
        impl $tr<XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}
