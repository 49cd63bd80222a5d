pub mod divisor;
pub mod git;
pub mod hypersurface;
pub mod m2;
