use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BiPoly, Domain, GaussianRational, Poly, Rational, UniPoly};

/// A polynomial `F ∈ ℂ[X, Y]` with Gaussian-rational coefficients, kept as
/// its real and imaginary parts `F = re + i·im`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanePoly {
    pub re: BiPoly,
    pub im: BiPoly,
}

impl PlanePoly {
    pub fn new(re: BiPoly, im: BiPoly) -> Self {
        Self { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn times(&self, other: &Self) -> Self {
        Self::new(
            &(&self.re * &other.re) - &(&self.im * &other.im),
            &(&self.re * &other.im) + &(&self.im * &other.re),
        )
    }

    /// `i·F`, whose parts are `(-F_im, F_re)`.
    pub fn times_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let (a, b) = (
            BiPoly::constant(Poly::constant(c.re.clone())),
            BiPoly::constant(Poly::constant(c.im.clone())),
        );
        Self::new(
            &(&self.re * &a) - &(&self.im * &b),
            &(&self.re * &b) + &(&self.im * &a),
        )
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> GaussianRational {
        GaussianRational::new(self.re.eval_point(x, y), self.im.eval_point(x, y))
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.re.total_degree().max(self.im.total_degree())
    }

    /// Restriction to the horizontal line `Y = y`: `(F_re(X, y), F_im(X, y))`.
    pub fn on_horizontal(&self, y: &Rational) -> (UniPoly, UniPoly) {
        (self.re.specialize_y(y), self.im.specialize_y(y))
    }

    /// Restriction to the vertical line `X = x`: `(F_re(x, Y), F_im(x, Y))`.
    pub fn on_vertical(&self, x: &Rational) -> (UniPoly, UniPoly) {
        (self.re.specialize_x(x), self.im.specialize_x(x))
    }

    pub fn swap_vars(&self) -> Self {
        Self::new(self.re.swap_vars(), self.im.swap_vars())
    }
}

/// A polynomial in `ℂ[Z]` with Gaussian-rational coefficients together
/// with its realification `F(X + iY) = F_re(X, Y) + i·F_im(X, Y)`, computed
/// once at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexUniPoly {
    poly: Poly<GaussianRational>,
    plane: PlanePoly,
}

impl ComplexUniPoly {
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        Self::from_poly(Poly::new(coeffs))
    }

    pub fn from_poly(poly: Poly<GaussianRational>) -> Self {
        let plane = realify(&poly);
        Self { poly, plane }
    }

    /// `Z - z`.
    pub fn linear(z: &GaussianRational) -> Self {
        Self::new(vec![z.negated(), GaussianRational::one()])
    }

    /// `lead · Π (Z - z)^m`.
    pub fn from_roots(lead: &GaussianRational, roots: &[(GaussianRational, u32)]) -> Self {
        let mut acc = Poly::constant(lead.clone());
        for (z, m) in roots {
            let lin = Poly::new(vec![z.negated(), GaussianRational::one()]);
            acc = &acc * &lin.pow(*m);
        }
        Self::from_poly(acc)
    }

    /// A real polynomial viewed in ℂ[Z].
    pub fn from_real(p: &UniPoly) -> Self {
        Self::from_poly(p.map(|c| GaussianRational::real(c.clone())))
    }

    pub fn poly(&self) -> &Poly<GaussianRational> {
        &self.poly
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn is_constant(&self) -> bool {
        self.poly.is_constant()
    }

    pub fn plane(&self) -> &PlanePoly {
        &self.plane
    }

    pub fn re(&self) -> &BiPoly {
        &self.plane.re
    }

    pub fn im(&self) -> &BiPoly {
        &self.plane.im
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        self.poly.eval(z)
    }

    pub fn times(&self, other: &Self) -> Self {
        Self::from_poly(&self.poly * &other.poly)
    }

    pub fn derivative(&self) -> Self {
        Self::from_poly(self.poly.derivative())
    }

    pub fn monic(&self) -> Self {
        Self::from_poly(self.poly.monic())
    }

    pub fn squarefree_part(&self) -> Self {
        Self::from_poly(self.poly.squarefree_part())
    }
}

/// Realification: the pair `(F_re, F_im)` with `F(X + iY) = F_re + i·F_im`,
/// obtained by binomial expansion of every `(X + iY)^j`.
pub fn realify(f: &Poly<GaussianRational>) -> PlanePoly {
    let n = f.coeffs().len();
    // grid[x_power][y_power]
    let mut re = vec![vec![Rational::zero(); n]; n];
    let mut im = vec![vec![Rational::zero(); n]; n];
    for (j, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut binom = BigInt::from(1);
        for k in 0..=j {
            // c · i^k
            let (a, b) = match k % 4 {
                0 => (c.re.clone(), c.im.clone()),
                1 => (-&c.im, c.re.clone()),
                2 => (-&c.re, -&c.im),
                _ => (c.im.clone(), -&c.re),
            };
            let w = Rational::from_integer(binom.clone());
            re[j - k][k] += &a * &w;
            im[j - k][k] += &b * &w;
            binom = binom * BigInt::from(j - k) / BigInt::from(k + 1);
        }
    }
    let to_bi = |g: Vec<Vec<Rational>>| BiPoly::new(g.into_iter().map(Poly::new).collect());
    PlanePoly::new(to_bi(re), to_bi(im))
}
