//! Exact permutation and integer-matrix primitives.

mod arith;
mod blocks;
mod permutation;
mod smith;

pub use arith::{gcd, lcm, mod_inverse};
pub use blocks::{block_quotient, orbits, orbits_of_degree, BlockQuotient, Orbits};
pub use permutation::{commutator, word_product, CycleProfile, Permutation};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("permutation degree must be positive")]
    ZeroDegree,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} is outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("generator list is empty and no degree was given")]
    EmptyGenerators,
    #[error("{a} is not invertible modulo {n}")]
    NotCoprime { a: i64, n: i64 },
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),
    #[error("generated group is not transitive")]
    NotTransitive,
    #[error("orbits of the normal generators are not blocks of the group")]
    BlocksNotInvariant,
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    BadMatrixShape { rows: usize, cols: usize, got: usize },
}
