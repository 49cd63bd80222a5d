//! Exact computations for symmetric divisors on the moduli space of six-pointed
//! stable rational curves: divisor classes and intersection numbers, GIT
//! stability of weighted point configurations, the chamber decomposition of the
//! symmetric effective cone, the Segre cubic and Igusa quartic, and the
//! translation to genus-two curves.

pub mod arith;
pub mod divisor;
mod error;
pub mod git;
pub mod hypersurface;
pub mod m2;

pub use arith::{Rational, RationalMatrix};
pub use error::{Error, Result};
