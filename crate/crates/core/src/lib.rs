//! Factorization of `X^n - a`, `X^n - 1`, cyclotomic polynomials and
//! compositions `f(X^n)` over finite fields by closed formulas, with a
//! brute-force oracle to check the results.
//!
//! ```
//! use cyclofactor::field::FieldCtx;
//! use cyclofactor::factorizer::factor_unity;
//!
//! let f3 = FieldCtx::prime(3).unwrap();
//! let fz = factor_unity(&f3, 8).unwrap();
//! let degrees: Vec<_> = fz.factors.iter().map(|f| f.degree).collect();
//! assert_eq!(degrees, [1, 1, 2, 2, 2]);
//! assert_eq!(fz.product(), fz.base);
//! ```

pub mod factorization;
pub mod factorizer;
pub mod field;
pub mod numtheory;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod sweep;

pub use factorization::{Factor, Factorization};
pub use factorizer::FactorError;
pub use field::{FieldCtx, FieldElem};
pub use poly::Poly;
