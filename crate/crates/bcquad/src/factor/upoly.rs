//! Dense univariate polynomials `Σ cₖ λᵏ` with `ParamScalar` coefficients.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeffs::{ParamScalar, Rational, SymbolTable};

pub type UPoly = Vec<ParamScalar>;

/// Largest constant term or leading coefficient whose divisors are enumerated.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

/// Parameter specializations used to guess rational roots of symbolic polynomials.
const SPECIALIZATIONS: [i64; 3] = [7, 13, -5];

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &UPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn is_zero(p: &UPoly) -> bool {
    degree(p).is_none()
}

/// Divides out the rational content and the common symbol monomial.
pub fn primitive(p: &UPoly) -> UPoly {
    let nz: Vec<&ParamScalar> = p.iter().filter(|c| !c.is_zero()).collect();
    let Some(first) = nz.first() else {
        return p.clone();
    };
    let table = first.table().clone();
    let mono = nz.iter().skip(1).fold(first.monomial_content(), |acc, c| {
        acc.gcd(&c.monomial_content())
    });
    let mono_s = ParamScalar::from_terms(&table, [(mono, Rational::one())]);
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in &nz {
        let r = c.rational_content();
        num = num.gcd(r.numer());
        den = den.lcm(r.denom());
    }
    let content = Rational::new(num, den);
    let lead_neg = nz
        .last()
        .unwrap()
        .leading_display_term()
        .is_some_and(|(_, c)| c.is_negative());
    let content = if lead_neg { -content } else { content };
    p.iter()
        .map(|c| {
            c.exact_div(&mono_s)
                .expect("monomial content divides")
                .scale(&content.recip())
        })
        .collect()
}

/// `lc(b)^k · a = q·b + r` with `deg r < deg b`; returns `r`.
pub fn pseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = degree(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] = &r[k + shift] - &(&lr * bk);
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor over the fraction field of the coefficients.
///
/// Leading coefficients of intermediate remainders that are not constants
/// are returned as well: where one of them vanishes the true gcd of a
/// specialization can be larger.
pub fn gcd(a: &UPoly, b: &UPoly) -> (UPoly, Vec<ParamScalar>) {
    let mut watch = Vec::new();
    let (mut u, mut v) = (primitive(a), primitive(b));
    trim(&mut u);
    trim(&mut v);
    if degree(&u) < degree(&v) {
        std::mem::swap(&mut u, &mut v);
    }
    while !is_zero(&v) {
        let r = primitive(&pseudo_rem(&u, &v));
        if let Some(d) = degree(&r) {
            if !r[d].is_constant() {
                watch.push(r[d].clone());
            }
        }
        u = v;
        v = r;
    }
    (u, watch)
}

pub fn mul(p: &UPoly, q: &UPoly) -> UPoly {
    let (Some(dp), Some(dq)) = (degree(p), degree(q)) else {
        return Vec::new();
    };
    let mut out = vec![ParamScalar::zero(p[0].table()); dp + dq + 1];
    for (i, a) in p.iter().enumerate().take(dp + 1) {
        for (j, b) in q.iter().enumerate().take(dq + 1) {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

pub fn eval(p: &UPoly, x: &ParamScalar) -> ParamScalar {
    let mut acc = ParamScalar::zero(x.table());
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Quotient by `(λ − r)` for an exact root `r`.
fn deflate(p: &UPoly, r: &ParamScalar) -> UPoly {
    let d = degree(p).unwrap();
    let mut q = vec![ParamScalar::zero(r.table()); d];
    let mut carry = ParamScalar::zero(r.table());
    for k in (1..=d).rev() {
        carry = &p[k] + &(&carry * r);
        q[k - 1] = carry.clone();
    }
    q
}

/// A root `λ = num / den`.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub num: ParamScalar,
    pub den: ParamScalar,
}

#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Part of degree at least two with no root found.
    pub rest: Option<UPoly>,
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() || n.to_u64().is_none_or(|v| v > DIVISOR_LIMIT) {
        return None;
    }
    let v = n.to_u64().unwrap();
    let mut out = Vec::new();
    let mut d = 1;
    let lim = v.sqrt();
    while d <= lim {
        if v.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d != v / d {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_poly_eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Rational roots of a polynomial with rational coefficients.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let d = p.iter().rposition(|c| !c.is_zero())?;
    let p = &p[..=d];
    let mut out = BTreeSet::new();
    let start = p.iter().position(|c| !c.is_zero()).unwrap();
    if start > 0 {
        out.insert(Rational::zero());
    }
    let q = &p[start..];
    if q.len() == 1 {
        return Some(out.into_iter().collect());
    }
    let lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let nums = divisors(&ints[0])?;
    let dens = divisors(ints.last().unwrap())?;
    for n in &nums {
        for m in &dens {
            for sign in [1, -1] {
                let r = Rational::new(n * sign, m.clone());
                if rational_poly_eval(q, &r).is_zero() {
                    out.insert(r);
                }
            }
        }
    }
    Some(out.into_iter().collect())
}

fn specialize(c: &ParamScalar, value: i64) -> Rational {
    let t = c.table();
    let v = ParamScalar::from_int(t, value);
    let mut cur = c.clone();
    for idx in 0..t.len() {
        if !cur.free_of(idx) {
            // distinct values per symbol avoid accidental cancellations
            let shifted = &v + &ParamScalar::from_int(t, 3 * idx as i64);
            cur = cur.substitute(idx, &shifted);
        }
    }
    cur.as_constant().expect("all symbols substituted")
}

/// Roots found by exact means: `λ = 0`, linear pieces, rational roots of
/// constant-coefficient parts and rational constants suggested by
/// specializing the symbols. Every reported root is checked exactly.
pub fn find_roots(p: &UPoly, table: &Arc<SymbolTable>) -> RootSet {
    let mut p = p.clone();
    trim(&mut p);
    let mut roots = Vec::new();
    let one = ParamScalar::one(table);
    let zero = ParamScalar::zero(table);
    if degree(&p).is_none_or(|d| d == 0) {
        return RootSet { roots, rest: None };
    }
    if p[0].is_zero() {
        roots.push(Root {
            num: zero.clone(),
            den: one.clone(),
        });
        while p[0].is_zero() {
            p.remove(0);
        }
    }
    let mut tried = BTreeSet::new();
    loop {
        p = primitive(&p);
        let d = degree(&p).unwrap_or(0);
        if d == 0 {
            return RootSet { roots, rest: None };
        }
        if d == 1 {
            roots.push(Root {
                num: -&p[0],
                den: p[1].clone(),
            });
            return RootSet { roots, rest: None };
        }
        let mut candidates: Vec<Rational> = Vec::new();
        if p.iter().all(|c| c.is_constant()) {
            let q: Vec<Rational> = p.iter().map(|c| c.as_constant().unwrap()).collect();
            candidates = rational_roots(&q).unwrap_or_default();
        } else {
            let mut common: Option<BTreeSet<Rational>> = None;
            for v in SPECIALIZATIONS {
                let q: Vec<Rational> = p.iter().map(|c| specialize(c, v)).collect();
                let Some(rs) = rational_roots(&q) else {
                    common = Some(BTreeSet::new());
                    break;
                };
                let rs: BTreeSet<Rational> = rs.into_iter().collect();
                common = Some(match common {
                    None => rs,
                    Some(c) => c.intersection(&rs).cloned().collect(),
                });
            }
            candidates.extend(common.unwrap_or_default());
        }
        let found = candidates.into_iter().find(|r| {
            !tried.contains(r) && eval(&p, &ParamScalar::constant(table, r.clone())).is_zero()
        });
        match found {
            Some(r) => {
                tried.insert(r.clone());
                let rs = ParamScalar::constant(table, r.clone());
                p = deflate(&p, &rs);
                if !roots.iter().any(|x: &Root| x.den.is_one() && x.num == rs) {
                    roots.push(Root {
                        num: rs,
                        den: one.clone(),
                    });
                }
            }
            None => {
                return RootSet {
                    roots,
                    rest: Some(p),
                }
            }
        }
    }
}

pub fn render(p: &UPoly, var: &str) -> String {
    let mut parts = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, k),
        };
        parts.push(crate::coeffs::fmt_coeff_times(c, &mono));
    }
    crate::coeffs::join_signed(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_scalar;

    fn up(t: &Arc<SymbolTable>, cs: &[&str]) -> UPoly {
        cs.iter().map(|s| parse_scalar(t, s).unwrap()).collect()
    }

    #[test]
    fn gcd_of_symbolic_pair() {
        let t = SymbolTable::standard();
        // λ(λ - c) and (λ - c)
        let a = up(&t, &["0", "-c", "1"]);
        let b = up(&t, &["-c", "1"]);
        let (g, _) = gcd(&a, &b);
        assert_eq!(render(&g, "L"), "L - c");
    }

    #[test]
    fn roots_of_constant_and_symbolic_polys() {
        let t = SymbolTable::standard();
        let p = up(&t, &["-2", "1", "1"]); // (λ+2)(λ-1)
        let r = find_roots(&p, &t);
        assert_eq!(r.roots.len(), 2);
        assert!(r.rest.is_none());
        let p = up(&t, &["-a", "a - 1", "1"]); // (λ+a)(λ-1)
        let r = find_roots(&p, &t);
        let shown: Vec<String> = r
            .roots
            .iter()
            .map(|x| format!("{}/{}", x.num, x.den))
            .collect();
        assert_eq!(shown, vec!["1/1", "-a/1"]);
        let p = up(&t, &["-2", "0", "1"]);
        let r = find_roots(&p, &t);
        assert!(r.roots.is_empty() && r.rest.is_some());
    }
}
