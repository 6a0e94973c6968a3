//! Exact arithmetic in the quadratic algebras `Q(a,b,c)` (generators `x, y`,
//! relation `yx = ax² + bxy + cy²`): normal forms, PBW checks, Sylvester
//! matrices, sequence resultants and subresultants, Bezout certificates,
//! Burchnall-Chaundy curves of commuting pairs, and right factors.
//!
//! ```
//! use bcquad::parse::parse_elem;
//! use bcquad::qalgebra::AlgebraSpec;
//!
//! let alg = AlgebraSpec::minus_one_symbolic();
//! let yx = parse_elem(&alg, "y*x").unwrap();
//! assert_eq!(yx.to_string(), "a*x^2 - x*y + c*y^2");
//! ```

pub mod bccurve;
pub mod cli;
pub mod coeffs;
pub mod factor;
pub mod parse;
pub mod pbw;
pub mod qalgebra;
pub mod resultants;
