//! The quadratic algebra `Q(a,b,c)`: generators `x, y` with the single
//! relation `yx = ax² + bxy + cy²`, in PBW normal form `Σ pᵢ(x)yⁱ`.

pub mod closed_form;
mod elem;
mod kernel;

use std::fmt;
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::coeffs::{same_table, CoeffError, ParamScalar, Rational, SymbolTable};

pub use elem::{GradedSlice, QElem};
pub use kernel::{commute_monomial, CommuteTerms};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("kernel {kernel:?} does not match parameters: {detail}")]
    KernelMismatch { kernel: Kernel, detail: String },
    #[error("b = -1 and a*c = 1: the monomials x^i y^j are not a PBW basis")]
    NonPbw,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("unsupported algebra: {0}")]
    Unsupported(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Which commutation rule drives multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `b = -1`: `yⁿxᵐ = xᵐyⁿ` unless both exponents are odd.
    MinusOne,
    /// `b = c = 0`: `yⁿxᵏ = aⁿx^{n+k}` for `k ≥ 1`.
    AZeroZero,
    /// `a = c = 0`: `yⁿxᵏ = b^{kn}xᵏyⁿ`.
    QuantumPlane,
    /// The Ore relation `yx = bxy`; same rule as [`Kernel::QuantumPlane`].
    OreBxy,
}

/// Parameters `(a, b, c)` together with the kernel that multiplies in `Q(a,b,c)`.
#[derive(Clone)]
pub struct AlgebraSpec {
    a: ParamScalar,
    b: ParamScalar,
    c: ParamScalar,
    kernel: Kernel,
    warnings: Vec<String>,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kernel == other.kernel && self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl Eq for AlgebraSpec {}

impl AlgebraSpec {
    /// Validates the parameters against `kernel`.
    pub fn new(
        a: ParamScalar,
        b: ParamScalar,
        c: ParamScalar,
        kernel: Kernel,
    ) -> Result<Arc<AlgebraSpec>, AlgebraError> {
        if !same_table(a.table(), b.table()) || !same_table(a.table(), c.table()) {
            return Err(CoeffError::TableMismatch.into());
        }
        let mismatch = |detail: &str| AlgebraError::KernelMismatch {
            kernel,
            detail: detail.to_string(),
        };
        let mut warnings = Vec::new();
        match kernel {
            Kernel::MinusOne => {
                if b.as_constant() != Some(-Rational::one()) {
                    return Err(mismatch("requires b = -1"));
                }
                match (a.as_constant(), c.as_constant()) {
                    (Some(ra), Some(rc)) => {
                        if (ra * rc).is_one() {
                            return Err(AlgebraError::NonPbw);
                        }
                    }
                    _ => warnings.push(format!("results hold where {} != 1", &a * &c)),
                }
            }
            Kernel::AZeroZero => {
                if !b.is_zero() || !c.is_zero() {
                    return Err(mismatch("requires b = c = 0"));
                }
            }
            Kernel::QuantumPlane | Kernel::OreBxy => {
                if !a.is_zero() || !c.is_zero() {
                    return Err(mismatch("requires a = c = 0"));
                }
            }
        }
        Ok(Arc::new(AlgebraSpec {
            a,
            b,
            c,
            kernel,
            warnings,
        }))
    }

    /// Picks the kernel from the parameter shape.
    pub fn infer(
        a: ParamScalar,
        b: ParamScalar,
        c: ParamScalar,
    ) -> Result<Arc<AlgebraSpec>, AlgebraError> {
        let kernel = if b.as_constant() == Some(-Rational::one()) {
            Kernel::MinusOne
        } else if b.is_zero() && c.is_zero() {
            Kernel::AZeroZero
        } else if a.is_zero() && c.is_zero() {
            Kernel::QuantumPlane
        } else {
            return Err(AlgebraError::Unsupported(format!(
                "({}, {}, {}); supported cases are (a,-1,c), (a,0,0) and (0,b,0)",
                a, b, c
            )));
        };
        Self::new(a, b, c, kernel)
    }

    /// `Q(a,-1,c)` with symbolic `a, c` over the standard table.
    pub fn minus_one_symbolic() -> Arc<AlgebraSpec> {
        let t = SymbolTable::standard();
        Self::new(
            ParamScalar::var(&t, 0),
            ParamScalar::from_int(&t, -1),
            ParamScalar::var(&t, 2),
            Kernel::MinusOne,
        )
        .expect("valid parameters")
    }

    /// `Q(a,0,0)` with symbolic `a`.
    pub fn a_zero_zero_symbolic() -> Arc<AlgebraSpec> {
        let t = SymbolTable::standard();
        Self::new(
            ParamScalar::var(&t, 0),
            ParamScalar::zero(&t),
            ParamScalar::zero(&t),
            Kernel::AZeroZero,
        )
        .expect("valid parameters")
    }

    /// `Q(0,b,0)` with symbolic `b`.
    pub fn quantum_plane_symbolic() -> Arc<AlgebraSpec> {
        let t = SymbolTable::standard();
        Self::new(
            ParamScalar::zero(&t),
            ParamScalar::var(&t, 1),
            ParamScalar::zero(&t),
            Kernel::QuantumPlane,
        )
        .expect("valid parameters")
    }

    pub fn a(&self) -> &ParamScalar {
        &self.a
    }

    pub fn b(&self) -> &ParamScalar {
        &self.b
    }

    pub fn c(&self) -> &ParamScalar {
        &self.c
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        self.a.table()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `"a,-1,c"`-style parameter string.
    pub fn params_string(&self) -> String {
        format!("{},{},{}", self.a, self.b, self.c)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({}, {:?})", self, self.kernel)
    }
}

pub(crate) fn same_algebra(a: &Arc<AlgebraSpec>, b: &Arc<AlgebraSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Product `f·g`; errors on algebra mismatch.
pub fn multiply(f: &QElem, g: &QElem) -> Result<QElem, AlgebraError> {
    f.try_mul(g)
}

/// True iff `fg = gf`.
pub fn commutes(f: &QElem, g: &QElem) -> Result<bool, AlgebraError> {
    Ok(f.try_mul(g)? == g.try_mul(f)?)
}

pub fn homogeneous_components(f: &QElem) -> Vec<GradedSlice> {
    f.homogeneous_components()
}

pub fn coefficient_gamma(f: &QElem, i: u32, j: u32) -> ParamScalar {
    f.gamma(i, j)
}

pub fn evaluate_power(f: &QElem, k: u32) -> QElem {
    f.pow(k)
}
