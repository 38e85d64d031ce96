//! Exact rational linear algebra, polynomials, rational functions and
//! truncated power series.

pub mod charpoly;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod series;
pub mod series_matrix;

pub use charpoly::{charpoly, det_resolvent};
pub use matrix::{ExactMatrix, MatrixJson};
pub use poly::{Degree, IntPoly, Poly, RatPoly};
pub use ratfunc::RatFunc;
pub use scalar::{int, rat, FractionText, Rational};
pub use series::PowerSeries;
