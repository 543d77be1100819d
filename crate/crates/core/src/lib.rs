//! Exact counting and isolation of complex polynomial roots in rectangles.
//!
//! Roots are counted through winding numbers, which in turn are sums of
//! Cauchy indices computed from signed subresultant chains. All arithmetic
//! is exact over ℚ and the Gaussian rationals.

pub mod bounds;
pub mod cauchy;
pub mod cli;
pub mod error;
pub mod exact;
pub mod subres;
pub mod winding;

pub use error::{Error, Result};
