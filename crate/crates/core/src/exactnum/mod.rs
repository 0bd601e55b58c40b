//! Arbitrary-precision rational arithmetic and exact dense linear algebra.

mod matrix;
mod rational;

pub use matrix::{QMatrix, Rref};
pub use rational::Rational;
