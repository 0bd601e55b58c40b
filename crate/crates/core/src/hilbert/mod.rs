//! Graded and bigraded Hilbert series.

mod series;

pub use series::{BigradedSeries, HilbertSeries, IntPoly, IntPoly2};
