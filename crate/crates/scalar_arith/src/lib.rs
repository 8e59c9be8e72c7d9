//! Exact scalar arithmetic for quantum sl2 computations.
//!
//! Three fields are supported: the generic rational function field Q(v), the
//! cyclotomic fields Q(z) with z a primitive l-th root of unity (l odd), and
//! Q with v specialized to a nonzero rational q. Division-bearing constants
//! are computed in Z[v, v^-1] first and specialized afterwards.

pub mod cyclotomic;
pub mod laurent;
pub mod linalg;
pub mod modp;
pub mod ratfunc;
pub mod scalar;
pub mod text;
mod zpoly;

pub use laurent::{qbinom_laurent, qfact_laurent, qint_laurent, LaurentPoly};
pub use linalg::{Echelon, Mat, SparseVec};
pub use scalar::{Scalar, ScalarContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under specialization")]
    DenominatorVanishes,
    #[error("cyclotomic order must be odd and at least 3, got {0}")]
    InvalidOrder(u32),
    #[error("the parameter q must be nonzero")]
    ZeroParameter,
    #[error("scalar context mismatch")]
    ContextMismatch,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Quantum integer [a] in the given context.
pub fn qint(a: i64, ctx: &ScalarContext) -> Scalar {
    ctx.qint(a)
}

/// Quantum factorial [b]!.
pub fn qfact(b: u32, ctx: &ScalarContext) -> Scalar {
    ctx.qfact(b)
}

/// Quantum binomial, computed in Z[v, v^-1] and then specialized.
pub fn qbinom(a: i64, b: u32, ctx: &ScalarContext) -> Scalar {
    ctx.qbinom(a, b)
}

/// Ring map v -> parameter of `ctx`, applied to a Laurent polynomial.
pub fn specialize(p: &LaurentPoly, ctx: &ScalarContext) -> Scalar {
    ctx.lift(p)
}

/// Specialize a generic scalar; fails if its denominator vanishes.
pub fn specialize_scalar(x: &Scalar, ctx: &ScalarContext) -> Result<Scalar, ScalarError> {
    ctx.specialize(x)
}
