//! Closed-form product rules for homogeneous elements, transcribed term for
//! term as stated. They are only used to cross-check the generic kernel.
//!
//! Inputs are coefficient lists: `e[i]` is the coefficient of `x^{m-i}yⁱ`.
//!
//! Known defects of these formulas (found by the cross-checks):
//! [`minus_one_product`] omits every even-by-odd cross term and carries `+`
//! on the middle term where the relation gives `-`; [`a_zero_zero_product`]
//! applies `yⁱx⁰ = aⁱxⁱ`, which is false, so it is wrong whenever the last
//! coefficient of `g` and some `eᵢ` with `i ≥ 1` are both nonzero.
//! [`minus_one_y_power`] and [`quantum_plane_product`] agree with the kernel.

use std::sync::Arc;

use crate::coeffs::ParamScalar;

use super::{AlgebraSpec, QElem};

/// `(m, e)` with `f = Σ eᵢ x^{m-i}yⁱ`, for nonzero homogeneous `f`.
pub fn homogeneous_coeffs(f: &QElem) -> Option<(u32, Vec<ParamScalar>)> {
    let m = f.homogeneous_degree()?;
    Some((m, (0..=m).map(|i| f.gamma(m - i, i)).collect()))
}

struct Acc {
    alg: Arc<AlgebraSpec>,
    out: QElem,
}

impl Acc {
    fn new(alg: &Arc<AlgebraSpec>) -> Self {
        Acc {
            alg: alg.clone(),
            out: QElem::zero(alg),
        }
    }

    fn add(&mut self, c: ParamScalar, i: u32, j: u32) {
        self.out = &self.out + &QElem::monomial(&self.alg, c, i, j);
    }
}

/// `yⁿ · Σ eⱼx^{m-j}yʲ` in `Q(a,-1,c)` for odd `n`; `None` for even `n`.
pub fn minus_one_y_power(alg: &Arc<AlgebraSpec>, n: u32, e: &[ParamScalar]) -> Option<QElem> {
    if n.is_multiple_of(2) || e.is_empty() {
        return None;
    }
    let m = (e.len() - 1) as u32;
    let (a, c) = (alg.a(), alg.c());
    let mut acc = Acc::new(alg);
    if m.is_multiple_of(2) {
        for j in 0..=m {
            let sign = if j % 2 == 0 {
                e[j as usize].clone()
            } else {
                -&e[j as usize]
            };
            acc.add(sign, m - j, n + j);
        }
        for j in 0..m / 2 {
            let ej = &e[(2 * j + 1) as usize];
            acc.add(ej * a, m - 2 * j, n + 2 * j);
            acc.add(ej * c, m - (2 * j + 2), n + 2 * j + 2);
        }
    } else {
        for j in 0..=m / 2 {
            let ej = &e[(2 * j) as usize];
            acc.add(ej * a, m - 2 * j + 1, 2 * j + n - 1);
            acc.add(-ej, m - 2 * j, 2 * j + n);
            acc.add(ej * c, m - (2 * j + 1), 2 * j + n + 1);
        }
        for j in 0..=m / 2 {
            acc.add(
                e[(2 * j + 1) as usize].clone(),
                m - (2 * j + 1),
                n + 2 * j + 1,
            );
        }
    }
    Some(acc.out)
}

/// Stated double sum for `f·g` in `Q(a,-1,c)`.
pub fn minus_one_product(alg: &Arc<AlgebraSpec>, e: &[ParamScalar], l: &[ParamScalar]) -> QElem {
    let m = (e.len() - 1) as u32;
    let n = (l.len() - 1) as u32;
    let big = m + n;
    let (p, q) = if m % 2 == 1 {
        (m / 2, m / 2)
    } else {
        (m / 2, (m / 2).wrapping_sub(1))
    };
    let q_range = if m == 0 { 0 } else { q + 1 };
    let (a, c) = (alg.a(), alg.c());
    let mut acc = Acc::new(alg);
    let ev = |k: u32| &e[k as usize];
    let lv = |k: u32| &l[k as usize];
    if n.is_multiple_of(2) {
        for i in 0..=p {
            for j in 0..=n / 2 {
                acc.add(ev(2 * i) * lv(2 * j), big - (2 * i + 2 * j), 2 * i + 2 * j);
            }
        }
        for i in 0..q_range {
            for j in 0..n / 2 {
                let el = ev(2 * i + 1) * lv(2 * j + 1);
                let s = 2 * i + 2 * j;
                acc.add(&el * a, big - (s + 1), s + 1);
                acc.add(el.clone(), big - (s + 2), s + 2);
                acc.add(&el * c, big - (s + 3), s + 3);
            }
        }
    } else {
        for i in 0..=p {
            for j in 0..=n / 2 {
                acc.add(ev(2 * i) * lv(2 * j), big - (2 * i + 2 * j), 2 * i + 2 * j);
            }
        }
        for i in 0..q_range {
            for j in 0..=n / 2 {
                let s = 2 * i + 2 * j;
                acc.add(ev(2 * i + 1) * lv(2 * j + 1), big - (s + 2), s + 2);
            }
        }
    }
    acc.out
}

/// Stated double sum `Σ eᵢlⱼaⁱ x^{m+n-j}yʲ` for `Q(a,0,0)`.
pub fn a_zero_zero_product(alg: &Arc<AlgebraSpec>, e: &[ParamScalar], l: &[ParamScalar]) -> QElem {
    let m = (e.len() - 1) as u32;
    let n = (l.len() - 1) as u32;
    let mut acc = Acc::new(alg);
    for (i, ei) in e.iter().enumerate() {
        let ai = alg.a().pow(i as u32);
        for (j, lj) in l.iter().enumerate() {
            acc.add(&(ei * lj) * &ai, m + n - j as u32, j as u32);
        }
    }
    acc.out
}

/// Stated double sum `Σ eᵢlⱼ b^{in-ij} x^{m+n-i-j}y^{i+j}` for `Q(0,b,0)`.
pub fn quantum_plane_product(
    alg: &Arc<AlgebraSpec>,
    e: &[ParamScalar],
    l: &[ParamScalar],
) -> QElem {
    let m = (e.len() - 1) as u32;
    let n = (l.len() - 1) as u32;
    let mut acc = Acc::new(alg);
    for (i, ei) in e.iter().enumerate() {
        let i = i as u32;
        for (j, lj) in l.iter().enumerate() {
            let j = j as u32;
            let w = alg.b().pow(i * n - i * j);
            acc.add(&(ei * lj) * &w, m + n - i - j, i + j);
        }
    }
    acc.out
}
