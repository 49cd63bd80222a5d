//! Exact rational numbers and linear algebra over them.

mod matrix;
mod rational;

pub use matrix::{span_dimension, Echelon, RationalMatrix};
pub use rational::{canonicalize, Rational};
