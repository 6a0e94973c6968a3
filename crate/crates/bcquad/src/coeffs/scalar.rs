use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::symbols::{same_table, SymbolTable};
use super::{CoeffError, Rational};

/// Dense exponent vector over a [`SymbolTable`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut v = vec![0; nvars];
        v[idx] = exp;
        Monomial(v.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out.into_boxed_slice()))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

/// Polynomial over the rationals in the central symbols of a [`SymbolTable`].
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone)]
pub struct ParamScalar {
    table: Arc<SymbolTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for ParamScalar {}

impl ParamScalar {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        ParamScalar {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn constant(table: &Arc<SymbolTable>, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(table.len()), value);
        }
        ParamScalar {
            table: table.clone(),
            terms,
        }
    }

    pub fn from_int(table: &Arc<SymbolTable>, value: i64) -> Self {
        Self::constant(table, Rational::from_integer(BigInt::from(value)))
    }

    /// The symbol with index `idx` in the table.
    pub fn var(table: &Arc<SymbolTable>, idx: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(table.len(), idx, 1), Rational::one());
        ParamScalar {
            table: table.clone(),
            terms,
        }
    }

    pub fn symbol(table: &Arc<SymbolTable>, name: &str) -> Result<Self, CoeffError> {
        let idx = table
            .index_of(name)
            .ok_or_else(|| CoeffError::UnknownSymbol(name.to_string()))?;
        Ok(Self::var(table, idx))
    }

    pub fn from_terms<I>(table: &Arc<SymbolTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = Self::zero(table);
        for (m, c) in terms {
            assert_eq!(m.0.len(), table.len(), "exponent vector length");
            out.add_term(m, c);
        }
        out
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this is a rational constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// True if no term mentions symbol `idx`.
    pub fn free_of(&self, idx: usize) -> bool {
        self.terms.keys().all(|m| m.0[idx] == 0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += coef * mono * other`, in place.
    fn add_scaled(&mut self, other: &ParamScalar, mono: &Monomial, coef: &Rational) {
        for (m, c) in &other.terms {
            self.add_term(m.mul(mono), c * coef);
        }
    }

    fn check(&self, other: &ParamScalar) -> Result<(), CoeffError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(CoeffError::TableMismatch)
        }
    }

    pub fn try_add(&self, other: &ParamScalar) -> Result<ParamScalar, CoeffError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ParamScalar) -> Result<ParamScalar, CoeffError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &ParamScalar) -> Result<ParamScalar, CoeffError> {
        self.check(other)?;
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c));
        }
        let mut out = ParamScalar::zero(&self.table);
        for (m, c) in &self.terms {
            out.add_scaled(other, m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> ParamScalar {
        if k.is_zero() {
            return ParamScalar::zero(&self.table);
        }
        ParamScalar {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> ParamScalar {
        let mut acc = ParamScalar::one(&self.table);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / v` in the polynomial ring.
    ///
    /// Uses division by the lex-leading term; when `v` divides `self` the
    /// remainder reaches zero, otherwise an [`CoeffError::InexactDivision`]
    /// is returned.
    pub fn exact_div(&self, v: &ParamScalar) -> Result<ParamScalar, CoeffError> {
        self.check(v)?;
        if v.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if let Some(c) = v.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let (lm_v, lc_v) = v.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut q = ParamScalar::zero(&self.table);
        while let Some((lm_r, lc_r)) = rem.terms.iter().next_back() {
            let m = lm_r
                .checked_div(lm_v)
                .ok_or_else(|| CoeffError::InexactDivision {
                    dividend: self.to_string(),
                    divisor: v.to_string(),
                })?;
            let c = lc_r / lc_v;
            rem.add_scaled(v, &m, &-c.clone());
            q.add_term(m, c);
        }
        Ok(q)
    }

    /// Splits by the exponents of the listed symbols:
    /// `self = Σ coeff(e) · Π sym_k^{e_k}` with each coefficient free of them.
    pub fn split_by(&self, idxs: &[usize]) -> BTreeMap<Vec<u32>, ParamScalar> {
        let mut out: BTreeMap<Vec<u32>, ParamScalar> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idxs.iter().map(|&i| m.0[i]).collect();
            let mut rest = m.0.to_vec();
            for &i in idxs {
                rest[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| ParamScalar::zero(&self.table))
                .add_term(Monomial(rest.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Replaces symbol `idx` by `value`.
    pub fn substitute(&self, idx: usize, value: &ParamScalar) -> ParamScalar {
        let mut out = ParamScalar::zero(&self.table);
        let mut powers: Vec<ParamScalar> = vec![ParamScalar::one(&self.table)];
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            let mut v = rest.0.to_vec();
            v[idx] = 0;
            rest = Monomial(v.into_boxed_slice());
            out.add_scaled(&powers[e], &rest, c);
        }
        out
    }

    /// Re-expresses this scalar over another table containing every symbol
    /// that actually occurs in it.
    pub fn embed(&self, target: &Arc<SymbolTable>) -> Result<ParamScalar, CoeffError> {
        if same_table(&self.table, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .table
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = ParamScalar::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    let j = map[i]
                        .ok_or_else(|| CoeffError::UnknownSymbol(self.table.name(i).to_string()))?;
                    e[j] = k;
                }
            }
            out.add_term(Monomial(e.into_boxed_slice()), c.clone());
        }
        Ok(out)
    }

    /// Largest monomial dividing every term (the unit monomial for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.table.len()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Positive rational `r` such that `self / r` has coprime integer coefficients.
    pub fn rational_content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Terms in canonical display order (see [`display_cmp`]).
    pub fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        let (si, ti) = self.table.curve_indices();
        v.sort_by(|a, b| display_cmp(a.0, b.0, si, ti));
        v
    }

    /// First term in display order.
    pub fn leading_display_term(&self) -> Option<(&Monomial, &Rational)> {
        self.display_terms().into_iter().next()
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.table.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.table.name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Display order: curve symbols `s,t` first by degree (descending, `s` before
/// `t`), then the remaining symbols in graded-lex order with `a > b > c > …`.
///
/// For scalars free of `s,t` this is plain graded-lex.
pub fn display_cmp(m1: &Monomial, m2: &Monomial, si: usize, ti: usize) -> Ordering {
    let (e1, e2) = (&m1.0, &m2.0);
    let st1 = e1[si] + e1[ti];
    let st2 = e2[si] + e2[ti];
    st2.cmp(&st1)
        .then(e2[si].cmp(&e1[si]))
        .then_with(|| {
            let rest = |e: &[u32]| -> u32 {
                e.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != si && *i != ti)
                    .map(|(_, x)| *x)
                    .sum()
            };
            rest(e2).cmp(&rest(e1))
        })
        .then_with(|| {
            for i in 0..e1.len() {
                if i == si || i == ti {
                    continue;
                }
                match e2[i].cmp(&e1[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
}

pub(crate) fn fmt_rational_abs(c: &Rational) -> String {
    c.abs().to_string()
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = self.fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{}", fmt_rational_abs(c))?;
            } else if c.abs().is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational_abs(c), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({})", self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            /// # Panics
            /// If the operands use different symbol tables.
            fn $method(self, rhs: &ParamScalar) -> ParamScalar {
                self.$checked(rhs)
                    .expect("ParamScalar symbol tables differ")
            }
        }
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $method(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}
