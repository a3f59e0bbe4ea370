//! Exact q-series engine for spt-crank-type functions.
//!
//! The crate builds the eight spt-crank-type generating functions from their
//! Bailey pairs, checks the identities they satisfy coefficient by
//! coefficient, and cross-checks everything against brute-force partition
//! enumeration. All arithmetic is exact: integers, Laurent polynomials in `z`,
//! and cyclotomic integers for evaluations at `z = ζ_3, ζ_5, ζ_7`.

pub mod bailey;
mod cache;
pub mod combinatorics;
pub mod error;
pub mod identities;
pub mod qseries;
pub mod ring;
pub mod spt;
pub mod zqseries;

pub use error::{Error, Result};
pub use qseries::{CycSeries, IntSeries, QSeries};
pub use ring::{Coeff, CycInt, Int};
pub use zqseries::{LaurentPoly, ZQSeries};
