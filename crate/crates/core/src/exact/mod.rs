//! Exact arithmetic: rationals, Gaussian rationals, and dense polynomials
//! over any of the coefficient domains used by the rest of the crate.
//!
//! Everything here is immutable and exact. The [`Domain`] trait is the small
//! algebraic interface the subresultant machinery is generic over; it is
//! implemented for [`Rational`], [`GaussianRational`] and (recursively) for
//! [`Poly<D>`], so `Poly<Rational>` is ℚ[X] and `Poly<Poly<Rational>>` is
//! ℚ[Y][X].

mod complex;
mod gaussian;
mod poly;
mod rational;

use std::fmt::Debug;

use num_traits::{One, Zero};

pub use complex::{realify, ComplexUniPoly, PlanePoly};
pub use gaussian::GaussianRational;
pub use poly::Poly;
pub use rational::{int, parse_rational, rat, rational_to_string, serialize_rational, sign_of, Rational};

/// Univariate polynomial over ℚ.
pub type UniPoly = Poly<Rational>;
/// Bivariate polynomial over ℚ, stored as an element of ℚ[Y][X]
/// (outer index is the power of X, each coefficient is a polynomial in Y).
pub type BiPoly = Poly<Poly<Rational>>;
/// Trivariate polynomial over ℚ, stored as ℚ[T][Y][X].
pub type TriPoly = Poly<Poly<Poly<Rational>>>;

/// An integral domain that is also a ℚ-algebra.
///
/// `try_div` must return `Some(c)` exactly when `self = c * other` has a
/// solution in the domain.
pub trait Domain: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn try_div(&self, other: &Self) -> Option<Self>;
    /// Multiplication by an element of the prime field.
    fn scaled(&self, r: &Rational) -> Self;

    fn from_rational(r: &Rational) -> Self {
        Self::one().scaled(r)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A [`Domain`] in which every nonzero element is invertible.
pub trait Field: Domain {
    /// Multiplicative inverse. Panics on zero, mirroring integer division.
    fn inv(&self) -> Self;
}
