//! Ground-set arithmetic for set-family work over `[n]`, `n <= 64`.
//!
//! Labels are 1-based at every public boundary; bit `i-1` of a [`KSet`]
//! word stands for label `i`.

mod binom;
mod error;
mod kset;
mod lex;

pub use binom::{binom_u64, binomial, BigCount};
pub use error::{Error, Result};
pub use kset::{KSet, MAX_N};
pub use lex::{ksubsets, lex_compare, lex_rank, lex_unrank, KSubsets};
