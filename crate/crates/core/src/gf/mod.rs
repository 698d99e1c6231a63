//! Arithmetic and dense matrix algebra over the prime fields GF(2), GF(3),
//! GF(5) and GF(7).

mod field;
mod matrix;

pub use field::Field;
pub use matrix::{FpMatrix, Rref};
pub(crate) use matrix::{format_digits, parse_digits};
