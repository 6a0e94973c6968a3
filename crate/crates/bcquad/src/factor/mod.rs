//! Right division and bounded right-factor search.
//!
//! `right_divide` solves the linear system for the coefficients of `q` in
//! `q·p = f`. Degree-one right factors of a homogeneous `f` are `y` and
//! `x − λy`; for the latter the system is set up once with `λ` as an extra
//! central symbol, so the values of `λ` that make it solvable are the common
//! roots of a few polynomials in `λ`. Every factor that is reported has been
//! checked by multiplying back.

pub mod linsolve;
pub mod upoly;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use thiserror::Error;

use crate::coeffs::{CoeffError, ParamScalar, SymbolTable};
use crate::qalgebra::{AlgebraError, QElem};

use linsolve::{solve, Solved};
use upoly::{find_roots, gcd, render, Root, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("`{0}` is not homogeneous; the factor search needs homogeneous input")]
    NotHomogeneous(String),
    #[error("cannot search factors of zero: every element right-divides it")]
    ZeroTarget,
    #[error("degree bound must be at least 1")]
    BadBound,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Outcome of solving `q·p = f`.
#[derive(Clone, Debug, PartialEq)]
pub enum Division {
    /// `numerator · p = denominator · f`; over the coefficient ring when the
    /// denominator is a constant, otherwise wherever it does not vanish.
    Exact {
        numerator: QElem,
        denominator: ParamScalar,
    },
    /// Solvable only where every listed polynomial vanishes.
    Conditional {
        vanishing: Vec<ParamScalar>,
    },
    Impossible,
}

impl Division {
    /// `q` itself when it has coefficients in the ring.
    pub fn quotient(&self) -> Option<QElem> {
        match self {
            Division::Exact {
                numerator,
                denominator,
            } => {
                let c = denominator.as_constant()?;
                let inv = ParamScalar::constant(denominator.table(), c.recip());
                Some(numerator.scale(&inv))
            }
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Division::Exact { .. })
    }

    /// Denominator that must not vanish, if it is not a constant.
    pub fn nonzero_condition(&self) -> Option<&ParamScalar> {
        match self {
            Division::Exact { denominator, .. } if !denominator.is_constant() => Some(denominator),
            _ => None,
        }
    }
}

fn min_degree(p: &QElem) -> u32 {
    p.terms().iter().map(|(i, j, _)| i + j).min().unwrap_or(0)
}

/// Monomials `xⁱyʲ` allowed in the quotient.
fn quotient_support(f: &QElem, p: &QElem) -> Vec<(u32, u32)> {
    let Some(df) = f.total_degree() else {
        return Vec::new();
    };
    if let (Some(hf), Some(hp)) = (f.homogeneous_degree(), p.homogeneous_degree()) {
        if hf < hp {
            return Vec::new();
        }
        let d = hf - hp;
        return (0..=d).map(|j| (d - j, j)).collect();
    }
    let low = min_degree(p);
    if df < low {
        return Vec::new();
    }
    let top = df - low;
    let ymax = f.ydeg().unwrap_or(0);
    let mut out = Vec::new();
    for total in 0..=top {
        for j in 0..=total.min(ymax) {
            out.push((total - j, j));
        }
    }
    out
}

fn coefficient_system(columns: &[QElem], rhs: &QElem) -> (Vec<Vec<ParamScalar>>, Vec<ParamScalar>) {
    let table = rhs.algebra().table();
    let mut index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for e in columns.iter().chain(std::iter::once(rhs)) {
        for (i, j, _) in e.terms() {
            let n = index.len();
            index.entry((i, j)).or_insert(n);
        }
    }
    let mut a = vec![vec![ParamScalar::zero(table); columns.len()]; index.len()];
    let mut b = vec![ParamScalar::zero(table); index.len()];
    for (k, col) in columns.iter().enumerate() {
        for (i, j, c) in col.terms() {
            a[index[&(i, j)]][k] = c;
        }
    }
    for (i, j, c) in rhs.terms() {
        b[index[&(i, j)]] = c;
    }
    (a, b)
}

fn tidy(num: Vec<ParamScalar>, den: ParamScalar) -> (Vec<ParamScalar>, ParamScalar) {
    let table = den.table().clone();
    if let Some(c) = den.as_constant() {
        let inv = c.recip();
        return (
            num.iter().map(|n| n.scale(&inv)).collect(),
            ParamScalar::one(&table),
        );
    }
    let divided: Result<Vec<_>, _> = num.iter().map(|n| n.exact_div(&den)).collect();
    if let Ok(q) = divided {
        return (q, ParamScalar::one(&table));
    }
    let mut all = num.clone();
    all.push(den.clone());
    let prim = upoly::primitive(&all);
    let mut num = prim;
    let den = num.pop().unwrap();
    let lead_neg = den
        .leading_display_term()
        .is_some_and(|(_, c)| c.is_negative());
    if lead_neg {
        return (num.iter().map(|n| -n).collect(), -&den);
    }
    (num, den)
}

/// Solves `q·p = f` with `q` supported on the degrees that can contribute.
pub fn right_divide_detailed(f: &QElem, p: &QElem) -> Result<Division, FactorError> {
    if p.algebra().as_ref() != f.algebra().as_ref() {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    if p.is_zero() {
        return Err(FactorError::ZeroDivisor);
    }
    let alg = f.algebra();
    let table = alg.table();
    if f.is_zero() {
        return Ok(Division::Exact {
            numerator: QElem::zero(alg),
            denominator: ParamScalar::one(table),
        });
    }
    let support = quotient_support(f, p);
    if support.is_empty() {
        return Ok(Division::Impossible);
    }
    let columns: Vec<QElem> = support
        .iter()
        .map(|&(i, j)| &QElem::monomial(alg, ParamScalar::one(table), i, j) * p)
        .collect();
    let (a, b) = coefficient_system(&columns, f);
    Ok(match solve(&a, &b, &ParamScalar::one(table))? {
        Solved::Inconsistent => Division::Impossible,
        Solved::Conditional { vanishing, .. } => Division::Conditional { vanishing },
        Solved::Solution { num, den } => {
            let (num, den) = tidy(num, den);
            let numerator =
                QElem::from_terms(alg, support.iter().zip(num).map(|(&(i, j), c)| (i, j, c)));
            assert_eq!(
                &numerator * p,
                f.scale(&den),
                "right division failed to multiply back"
            );
            Division::Exact {
                numerator,
                denominator: den,
            }
        }
    })
}

/// `q` with `q·p = f` over the coefficient ring, if one exists.
pub fn right_divide(f: &QElem, p: &QElem) -> Result<Option<QElem>, FactorError> {
    Ok(right_divide_detailed(f, p)?.quotient())
}

/// Requirement attached to a factor search.
#[derive(Clone, Debug, PartialEq)]
pub enum Condition {
    /// A reported quotient has this denominator.
    NonZero {
        poly: ParamScalar,
        context: String,
    },
    /// Something more holds where all of these vanish.
    Vanishing {
        polys: Vec<ParamScalar>,
        context: String,
    },
    Note(String),
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::NonZero { poly, context } => write!(f, "{} != 0 ({})", poly, context),
            Condition::Vanishing { polys, context } => {
                let eqs: Vec<String> = polys.iter().map(|p| format!("{} = 0", p)).collect();
                write!(f, "{}: {}", eqs.join(", "), context)
            }
            Condition::Note(s) => write!(f, "{}", s),
        }
    }
}

/// Vanishing condition with each polynomial made primitive and listed once.
fn vanishing(polys: impl IntoIterator<Item = ParamScalar>, context: String) -> Condition {
    let mut out: Vec<ParamScalar> = Vec::new();
    for p in polys {
        let mut r = p.rational_content();
        if p.leading_display_term()
            .is_some_and(|(_, c)| c.is_negative())
        {
            r = -r;
        }
        let p = p.scale(&r.recip());
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Condition::Vanishing {
        polys: out,
        context,
    }
}

fn push_unique(out: &mut Vec<Condition>, c: Condition) {
    if !out.contains(&c) {
        out.push(c);
    }
}

/// `quotient · divisor = denominator · target`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightFactor {
    pub divisor: QElem,
    pub quotient: QElem,
    pub denominator: ParamScalar,
}

#[derive(Clone, Debug)]
pub struct RightFactorQuery {
    pub target: QElem,
    pub divisor_degree_bound: u32,
    pub solutions: Vec<RightFactor>,
    pub conditions: Vec<Condition>,
    /// `x − λy` divides for every `λ` outside the roots of this polynomial.
    pub lambda_family: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CommonFactor {
    pub factor: QElem,
    pub f_quotient: RightFactor,
    pub g_quotient: RightFactor,
}

impl CommonFactor {
    pub fn nonzero_conditions(&self) -> Vec<&ParamScalar> {
        [&self.f_quotient.denominator, &self.g_quotient.denominator]
            .into_iter()
            .filter(|d| !d.is_constant())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CommonFactorReport {
    pub factors: Vec<CommonFactor>,
    pub conditions: Vec<Condition>,
    pub degree_bound: u32,
    /// As in [`RightFactorQuery::lambda_family`], for both inputs at once.
    pub lambda_family: Option<String>,
}

impl CommonFactorReport {
    pub fn factor(&self) -> Option<&QElem> {
        self.factors.first().map(|c| &c.factor)
    }
}

/// The system for `q·(x − λy) = f` reduced to polynomials in `λ`.
struct LambdaSystem {
    /// Every `λ` works (only for degenerate input).
    generic: bool,
    /// Common roots make the system solvable.
    vanishing: Vec<UPoly>,
    /// Rank minor; at its roots the reduction above does not apply.
    den: UPoly,
}

fn lambda_table(t: &Arc<SymbolTable>) -> Result<(Arc<SymbolTable>, usize), FactorError> {
    let mut name = "lambda_".to_string();
    while t.index_of(&name).is_some() {
        name.push('_');
    }
    let mut extra: Vec<String> = t.names()[crate::coeffs::BUILTIN_SYMBOLS.len()..].to_vec();
    extra.push(name.clone());
    let ext = SymbolTable::with_extra(extra)?;
    let idx = ext.index_of(&name).unwrap();
    Ok((ext, idx))
}

fn to_upoly(e: &ParamScalar, lam: usize, back: &Arc<SymbolTable>) -> Result<UPoly, FactorError> {
    let mut out: UPoly = Vec::new();
    for (key, c) in e.split_by(&[lam]) {
        let k = key[0] as usize;
        if out.len() <= k {
            out.resize(k + 1, ParamScalar::zero(back));
        }
        out[k] = c.embed(back)?;
    }
    upoly::trim(&mut out);
    Ok(out)
}

fn lambda_system(f: &QElem) -> Result<LambdaSystem, FactorError> {
    let alg = f.algebra();
    let t = alg.table();
    let n = f
        .homogeneous_degree()
        .ok_or_else(|| FactorError::NotHomogeneous(f.to_string()))?;
    let one = ParamScalar::one(t);
    if n == 0 {
        return Ok(LambdaSystem {
            generic: false,
            vanishing: vec![vec![one.clone()]],
            den: vec![one],
        });
    }
    let (ext, lam) = lambda_table(t)?;
    let lam_s = ParamScalar::var(&ext, lam);
    let mut index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for i in 0..=n {
        index.insert((n - i, i), i as usize);
    }
    let unknowns = n as usize;
    let mut a = vec![vec![ParamScalar::zero(&ext); unknowns]; index.len()];
    for j in 0..n {
        let mono = QElem::monomial(alg, one.clone(), n - 1 - j, j);
        let u = &mono * &QElem::x(alg);
        let v = &mono * &QElem::y(alg);
        for (i, k, c) in u.terms() {
            let cell = &mut a[index[&(i, k)]][j as usize];
            *cell = &*cell + &c.embed(&ext)?;
        }
        for (i, k, c) in v.terms() {
            let cell = &mut a[index[&(i, k)]][j as usize];
            *cell = &*cell - &(&c.embed(&ext)? * &lam_s);
        }
    }
    let mut b = vec![ParamScalar::zero(&ext); index.len()];
    for (i, k, c) in f.terms() {
        b[index[&(i, k)]] = c.embed(&ext)?;
    }
    let ext_one = ParamScalar::one(&ext);
    Ok(match solve(&a, &b, &ext_one)? {
        Solved::Solution { den, .. } => LambdaSystem {
            generic: true,
            vanishing: Vec::new(),
            den: to_upoly(&den, lam, t)?,
        },
        Solved::Inconsistent => LambdaSystem {
            generic: false,
            vanishing: vec![vec![one]],
            den: Vec::new(),
        },
        Solved::Conditional { vanishing, den } => LambdaSystem {
            generic: false,
            vanishing: vanishing
                .iter()
                .map(|v| to_upoly(v, lam, t))
                .collect::<Result<_, _>>()?,
            den: to_upoly(&den, lam, t)?,
        },
    })
}

fn fold_gcd(polys: &[UPoly], watch: Option<&mut Vec<ParamScalar>>) -> Option<UPoly> {
    let mut it = polys.iter();
    let mut acc = it.next()?.clone();
    let mut seen = Vec::new();
    for p in it {
        let (g, w) = gcd(&acc, p);
        seen.extend(w);
        acc = g;
    }
    if let Some(out) = watch {
        out.extend(seen);
    }
    Some(acc)
}

fn divisor_from_root(alg: &Arc<crate::qalgebra::AlgebraSpec>, r: &Root) -> QElem {
    // λ = num/den  ↦  x − λy, or den·x − num·y when the quotient is not polynomial
    let (xc, yc) = match r.num.exact_div(&r.den) {
        Ok(l) => (ParamScalar::one(alg.table()), -&l),
        Err(_) => (r.den.clone(), -&r.num),
    };
    &QElem::monomial(alg, xc, 1, 0) + &QElem::monomial(alg, yc, 0, 1)
}

fn as_right_factor(divisor: &QElem, d: &Division) -> Option<RightFactor> {
    match d {
        Division::Exact {
            numerator,
            denominator,
        } => Some(RightFactor {
            divisor: divisor.clone(),
            quotient: numerator.clone(),
            denominator: denominator.clone(),
        }),
        _ => None,
    }
}

/// Candidate degree-one divisors of homogeneous `targets`, common to all.
///
/// When every target is divisible by `x − λy` for generic `λ` the second
/// value is the product of the rank minors: the family divides wherever it
/// does not vanish.
fn degree_one_candidates(
    targets: &[&QElem],
    conditions: &mut Vec<Condition>,
) -> Result<(Vec<QElem>, Option<UPoly>), FactorError> {
    let alg = targets[0].algebra().clone();
    let table = alg.table().clone();
    let mut candidates = vec![QElem::y(&alg)];
    let systems: Vec<LambdaSystem> = targets
        .iter()
        .map(|f| lambda_system(f))
        .collect::<Result<_, _>>()?;
    let conds: Vec<UPoly> = systems
        .iter()
        .filter(|s| !s.generic)
        .filter_map(|s| fold_gcd(&s.vanishing, None))
        .collect();
    let mut watch = Vec::new();
    let mut roots = Vec::new();
    if let Some(g) = fold_gcd(&conds, Some(&mut watch)) {
        let r = find_roots(&g, &table);
        roots.extend(r.roots);
        if let Some(rest) = r.rest {
            conditions.push(Condition::Note(format!(
                "factors x - lambda*y with lambda a root of {} are not searched",
                render(&rest, "lambda")
            )));
        }
    }
    for s in &systems {
        roots.extend(find_roots(&s.den, &table).roots);
    }
    for w in watch {
        push_unique(
            conditions,
            vanishing([w], "a further common factor x - lambda*y may exist".into()),
        );
    }
    for r in &roots {
        let p = divisor_from_root(&alg, r);
        if !candidates.contains(&p) {
            candidates.push(p);
        }
    }
    let family = systems.iter().all(|s| s.generic).then(|| {
        let mut prod: UPoly = vec![ParamScalar::one(&table)];
        for s in &systems {
            prod = upoly::mul(&prod, &s.den);
        }
        upoly::primitive(&prod)
    });
    if let Some(den) = &family {
        conditions.push(Condition::Note(format!(
            "x - lambda*y is a right factor for every lambda with {} != 0",
            render(den, "lambda")
        )));
    }
    Ok((candidates, family))
}

fn check_bound(bound: u32) -> Result<(), FactorError> {
    if bound == 0 {
        Err(FactorError::BadBound)
    } else {
        Ok(())
    }
}

fn require_homogeneous(f: &QElem) -> Result<u32, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroTarget);
    }
    f.homogeneous_degree()
        .ok_or_else(|| FactorError::NotHomogeneous(f.to_string()))
}

/// Right factors of a homogeneous `target` of degree one, plus `target`
/// itself when the bound reaches its degree.
pub fn right_factors(target: &QElem, bound: u32) -> Result<RightFactorQuery, FactorError> {
    check_bound(bound)?;
    let n = require_homogeneous(target)?;
    let mut conditions = Vec::new();
    let mut solutions = Vec::new();
    let mut family = None;
    if n >= 1 {
        let (cands, fam) = degree_one_candidates(&[target], &mut conditions)?;
        family = fam.map(|d| render(&d, "lambda"));
        for p in cands {
            match right_divide_detailed(target, &p)? {
                d @ Division::Exact { .. } => solutions.extend(as_right_factor(&p, &d)),
                Division::Conditional { vanishing: vs } => push_unique(
                    &mut conditions,
                    vanishing(vs, format!("{} is also a right factor", p)),
                ),
                Division::Impossible => {}
            }
        }
    }
    if n >= 2 && bound >= n {
        let one = ParamScalar::one(target.algebra().table());
        solutions.push(RightFactor {
            divisor: target.clone(),
            quotient: QElem::one(target.algebra()),
            denominator: one,
        });
    }
    if bound >= 2 && n > 2 {
        conditions.push(Condition::Note(format!(
            "divisors of degree 2..{} are not enumerated",
            bound.min(n - 1)
        )));
    }
    Ok(RightFactorQuery {
        target: target.clone(),
        divisor_degree_bound: bound,
        solutions,
        conditions,
        lambda_family: family,
    })
}

/// Common right factors of homogeneous `f` and `g` of degree one, and `f`
/// or `g` themselves when the bound reaches their degree.
pub fn common_right_factor(
    f: &QElem,
    g: &QElem,
    bound: u32,
) -> Result<CommonFactorReport, FactorError> {
    check_bound(bound)?;
    if f.algebra().as_ref() != g.algebra().as_ref() {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    let nf = require_homogeneous(f)?;
    let ng = require_homogeneous(g)?;
    let mut conditions = Vec::new();
    let mut candidates = Vec::new();
    let mut family = None;
    if nf >= 1 && ng >= 1 {
        let (cands, fam) = degree_one_candidates(&[f, g], &mut conditions)?;
        candidates = cands;
        family = fam.map(|d| render(&d, "lambda"));
    }
    for (p, d) in [(f, nf), (g, ng)] {
        if d >= 2 && d <= bound && !candidates.contains(p) {
            candidates.push(p.clone());
        }
    }
    let mut factors = Vec::new();
    for p in candidates {
        let df = right_divide_detailed(f, &p)?;
        let dg = right_divide_detailed(g, &p)?;
        match (as_right_factor(&p, &df), as_right_factor(&p, &dg)) {
            (Some(a), Some(b)) => factors.push(CommonFactor {
                factor: p,
                f_quotient: a,
                g_quotient: b,
            }),
            _ => {
                // conditional on one side and not impossible on the other
                let mut vs = Vec::new();
                let mut blocked = false;
                for d in [&df, &dg] {
                    match d {
                        Division::Conditional { vanishing } => vs.extend(vanishing.iter().cloned()),
                        Division::Impossible => blocked = true,
                        Division::Exact { .. } => {}
                    }
                }
                if !blocked {
                    push_unique(
                        &mut conditions,
                        vanishing(vs, format!("{} is a common right factor", p)),
                    );
                }
            }
        }
    }
    for cf in &factors {
        for d in cf.nonzero_conditions() {
            push_unique(
                &mut conditions,
                Condition::NonZero {
                    poly: d.clone(),
                    context: format!("{} is a common right factor", cf.factor),
                },
            );
        }
    }
    if bound >= 2 && nf.max(ng) > 2 {
        conditions.push(Condition::Note(format!(
            "divisors of degree 2..{} are tried only as f or g",
            bound.min(nf.max(ng) - 1)
        )));
    }
    Ok(CommonFactorReport {
        factors,
        conditions,
        degree_bound: bound,
        lambda_family: family,
    })
}
