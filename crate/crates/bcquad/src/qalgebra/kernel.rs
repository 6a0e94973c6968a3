use std::sync::Arc;

use crate::coeffs::ParamScalar;

use super::{AlgebraSpec, Kernel, QElem};

/// Normal form of `yⁿxᵐ`, as produced by the kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum CommuteTerms {
    /// `yⁿxᵐ = xᵐyⁿ`.
    Swap,
    /// Explicit terms `(x-exponent, y-exponent, coefficient)`.
    Terms(Vec<(u32, u32, ParamScalar)>),
}

pub(crate) fn commute_terms(alg: &AlgebraSpec, n: u32, m: u32) -> CommuteTerms {
    if n == 0 || m == 0 {
        return CommuteTerms::Swap;
    }
    match alg.kernel() {
        Kernel::MinusOne => {
            if n.is_multiple_of(2) || m.is_multiple_of(2) {
                CommuteTerms::Swap
            } else {
                // y^{n-1} and x^{m-1} are central enough: yⁿxᵐ = y^{n-1}(yx)x^{m-1}
                let t = alg.table();
                CommuteTerms::Terms(vec![
                    (m + 1, n - 1, alg.a().clone()),
                    (m, n, ParamScalar::from_int(t, -1)),
                    (m - 1, n + 1, alg.c().clone()),
                ])
            }
        }
        Kernel::AZeroZero => {
            let w = alg.a().pow(n);
            if w.is_zero() {
                CommuteTerms::Terms(Vec::new())
            } else {
                CommuteTerms::Terms(vec![(n + m, 0, w)])
            }
        }
        Kernel::QuantumPlane | Kernel::OreBxy => {
            let w = alg.b().pow(n * m);
            if w.is_zero() {
                CommuteTerms::Terms(Vec::new())
            } else if w.is_one() {
                CommuteTerms::Swap
            } else {
                CommuteTerms::Terms(vec![(m, n, w)])
            }
        }
    }
}

/// Normal form of `yⁿxᵐ` in `alg`.
pub fn commute_monomial(alg: &Arc<AlgebraSpec>, n: u32, m: u32) -> QElem {
    match commute_terms(alg, n, m) {
        CommuteTerms::Swap => QElem::monomial(alg, ParamScalar::one(alg.table()), m, n),
        CommuteTerms::Terms(ts) => {
            let mut out = QElem::zero(alg);
            for (i, j, c) in ts {
                out = out + QElem::monomial(alg, c, i, j);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        let m1 = AlgebraSpec::minus_one_symbolic();
        assert_eq!(commute_monomial(&m1, 3, 2).to_string(), "x^2*y^3");
        assert_eq!(
            commute_monomial(&m1, 1, 1).to_string(),
            "a*x^2 - x*y + c*y^2"
        );
        let a00 = AlgebraSpec::a_zero_zero_symbolic();
        assert_eq!(commute_monomial(&a00, 2, 3).to_string(), "a^2*x^5");
        assert_eq!(commute_monomial(&a00, 2, 0).to_string(), "y^2");
        let qp = AlgebraSpec::quantum_plane_symbolic();
        assert_eq!(commute_monomial(&qp, 2, 2).to_string(), "b^4*x^2*y^2");
    }
}
