//! Representation-theory primitives: irrep labels, dimensions, branching
//! series and operator counting for the handful of groups the periodic
//! tables are built from.
//!
//! Everything here is exact integer arithmetic.

mod counting;
mod halfint;
mod irrep;
mod su3;

use thiserror::Error;

pub use counting::{complete_set_size, racah_missing_labels, GroupProfile};
pub use halfint::HalfInt;
pub use irrep::{so42_h_dimension, so42_h_truncated, so4_branch, So3Irrep, So4Irrep, Su2Irrep, Su3Irrep};
pub use su3::{su3_dim, su3_isospin_multiplets, su3_su2_content, IsospinMultiplet, Weight, WeightDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{num}/{den} is not an integer or half-integer")]
    NotHalfInteger { num: i32, den: i32 },
    #[error("cannot parse half-integer from {0:?}")]
    Parse(String),
    #[error("angular momentum label must be non-negative, got {0}")]
    NegativeLabel(HalfInt),
    #[error("diagonal irrep required, got ({0}, {1})")]
    NotDiagonal(HalfInt, HalfInt),
    #[error("truncation order must be at least 1")]
    EmptyTruncation,
    #[error("Racah count undefined for this profile: order {order}, rank {rank}")]
    RacahUndefined { order: u32, rank: u32 },
    #[error("invalid group profile: {0}")]
    InvalidProfile(String),
}
