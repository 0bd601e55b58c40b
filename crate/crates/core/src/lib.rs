//! Exact arithmetic toolkit for the blowup algebras attached to a central
//! hyperplane arrangement.
//!
//! The pipeline is layered: [`exactnum`] provides arbitrary-precision rational
//! scalars and dense linear algebra, [`matroid`] the combinatorics of an
//! arrangement (circuits, lattice, Moebius function), [`poly`] bigraded
//! polynomials over the rationals, [`groebner`] a Buchberger engine with the
//! ideal calculus (elimination, intersection, colon, saturation), [`blowup`]
//! the ideal constructions themselves together with a cross-verification
//! battery, and [`hilbert`] graded and bigraded Hilbert series.
//!
//! Everything is exact: no floating point anywhere.

pub mod budget;
pub mod exactnum;
pub mod exec;
pub mod poly;

pub mod matroid;

pub mod groebner;

pub mod hilbert;

pub mod blowup;
