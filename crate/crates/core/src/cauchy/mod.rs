//! Cauchy indices, sign variations and `(σ, τ)`-chains.
//!
//! The production path is [`cauchy_index`], which reduces to a subresultant
//! chain and counts ε-weighted sign variations. [`cauchy_index_oracle`] is
//! an independent evaluation straight from the definition (Descartes
//! bisection plus local indices) used to cross-check it.

mod chain;
mod halfint;
mod index;
mod oracle;

pub use chain::{
    build_chain, build_chain_bivariate, epsilon_weights, var_sigma_tau, BivariateChainTemplate,
    ChainDomain, ChainRelation, SigmaTauChain,
};
pub use halfint::HalfInt;
pub use index::{
    cauchy_index, cauchy_index_traced, count_real_roots, has_root_in, inversion_check,
    product_formula_check,
};
pub use oracle::{cauchy_index_oracle, descartes_bound, isolate_real_roots, IsolatedRoot};

pub use crate::exact::sign_of;
use crate::exact::{Rational, UniPoly};

/// `Var_x(P, Q) = ½ |sign P(x) − sign Q(x)|`.
pub fn var_at(p: &UniPoly, q: &UniPoly, x: &Rational) -> HalfInt {
    HalfInt::from_halves(i64::from((p.sign_at(x) - q.sign_at(x)).abs()))
}

/// `Var_a^b(P, Q) = Var_a(P, Q) − Var_b(P, Q)`.
pub fn var_interval(p: &UniPoly, q: &UniPoly, a: &Rational, b: &Rational) -> HalfInt {
    var_at(p, q, a) - var_at(p, q, b)
}

/// One-sided and total Cauchy index of `Q/P` at a rational point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalIndex {
    pub plus: HalfInt,
    pub minus: HalfInt,
    pub total: HalfInt,
}

/// Index of `(Q, P)` at `x`: write `P = (X−x)^μ P̃`, `Q = (X−x)^ν Q̃`; when
/// `μ > ν` the right-hand half is `½ sign(Q̃P̃)(x)` and the left-hand half
/// carries an extra `(−1)^{μ−ν}`. Otherwise (or if either input is zero)
/// both halves vanish.
pub fn local_index(q: &UniPoly, p: &UniPoly, x: &Rational) -> LocalIndex {
    let zero = LocalIndex {
        plus: HalfInt::ZERO,
        minus: HalfInt::ZERO,
        total: HalfInt::ZERO,
    };
    if p.is_zero() || q.is_zero() {
        return zero;
    }
    let (mu, pt) = p.split_root(x);
    let (nu, qt) = q.split_root(x);
    if mu <= nu {
        return zero;
    }
    let s = i64::from(qt.sign_at(x) * pt.sign_at(x));
    let plus = HalfInt::from_halves(s);
    let minus = if (mu - nu) % 2 == 0 { plus } else { -plus };
    LocalIndex {
        plus,
        minus,
        total: plus - minus,
    }
}
