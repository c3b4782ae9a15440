//! Exact-arithmetic computer algebra for symmetric functions in noncommuting
//! variables in superspace (sNCSym).
//!
//! The crate is organized around five layers:
//!
//! * [`combinat`] — the index objects: set partitions, partial set
//!   supercompositions, set superpartitions, superpartitions, and their poset
//!   structure (strong coarsening, meets, Möbius values, types and counting).
//! * [`oracle`] — a brute-force engine over finitely many noncommuting
//!   `x`-variables and anticommuting `θ`-variables, used as ground truth for
//!   every symbolic identity.
//! * [`algebra`] — symbolic elements of sNCSym in the monomial, power sum,
//!   elementary and complete homogeneous bases, with transition maps,
//!   products, the ω involution and the inner product.
//! * [`ssym`] — the commuting-variable superspace algebra sSym, the projection
//!   ρ, the lifting ρ̃ and their isometry.
//! * [`schur`] — super semistandard Young tableaux of both kinds, Kostka-type
//!   coefficients and the Schur-type functions S and S̄.
//!
//! All coefficients are arbitrary-precision rationals; no floating point is
//! used anywhere.

pub mod algebra;
pub mod combinat;
pub mod oracle;
pub mod schur;
pub mod ssym;
pub mod verify;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rat = num::BigRational;

use num::{BigInt, One, Zero};

/// Rational zero.
pub fn rat_zero() -> Rat {
    Rat::zero()
}

/// Rational one.
pub fn rat_one() -> Rat {
    Rat::one()
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// `n!` as a rational.
pub fn rat_factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from(acc)
}

/// Errors reported by the symbolic layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("bidegree mismatch: ({0}, {1}) vs ({2}, {3})")]
    BidegreeMismatch(u32, usize, u32, usize),
    #[error("operation requires basis in {{m, p, e, h}}, got {0}")]
    UnsupportedBasis(String),
    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
