use serde::Serialize;

use super::{winding_number_plane, Rectangle, WindingReport};
use crate::error::Result;
use crate::exact::{serialize_rational, BiPoly, PlanePoly, Poly, Rational, TriPoly};

/// `F ∈ ℂ[X, Y, T]` as real and imaginary parts in ℚ[T][Y][X]: the outer
/// index is the power of X, then Y, then T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpacePoly {
    pub re: TriPoly,
    pub im: TriPoly,
}

impl SpacePoly {
    pub fn new(re: TriPoly, im: TriPoly) -> Self {
        Self { re, im }
    }

    /// The straight-line family `(1 − T)·F + T·G`.
    pub fn homotopy(f: &PlanePoly, g: &PlanePoly) -> Self {
        let lift = |p: &BiPoly| -> TriPoly { p.map(|cy| cy.map(|c| Poly::constant(c.clone()))) };
        let t: TriPoly = Poly::constant(Poly::constant(Poly::x()));
        let one_minus_t: TriPoly = Poly::constant(Poly::constant(Poly::from_ints(&[1, -1])));
        let mix = |a: &BiPoly, b: &BiPoly| &(&one_minus_t * &lift(a)) + &(&t * &lift(b));
        Self::new(mix(&f.re, &g.re), mix(&f.im, &g.im))
    }

    /// `F(X, Y, t)` in the variables `(X, Y)`.
    pub fn at_t(&self, t: &Rational) -> PlanePoly {
        let f = |p: &TriPoly| -> BiPoly { p.map(|cy| cy.map(|ct| ct.eval(t))) };
        PlanePoly::new(f(&self.re), f(&self.im))
    }

    /// `F(X, y, T)` in the variables `(X, T)`.
    pub fn at_y(&self, y: &Rational) -> PlanePoly {
        let f = |p: &TriPoly| -> BiPoly { p.map(|cy| cy.eval_rational(y)) };
        PlanePoly::new(f(&self.re), f(&self.im))
    }

    /// `F(x, Y, T)` in the variables `(Y, T)`.
    pub fn at_x(&self, x: &Rational) -> PlanePoly {
        PlanePoly::new(self.re.eval_rational(x), self.im.eval_rational(x))
    }
}

/// The six face winding numbers of the box `[x0,x1] × [y0,y1] × [t0,t1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeFaces {
    pub t0: WindingReport,
    pub t1: WindingReport,
    pub y0: WindingReport,
    pub y1: WindingReport,
    pub x0: WindingReport,
    pub x1: WindingReport,
    /// `−w(t0) + w(y0) − w(x0) + w(t1) − w(y1) + w(x1)`.
    #[serde(serialize_with = "serialize_rational")]
    pub signed_sum: Rational,
}

/// Evaluates the six faces of the box and their signed sum, which is 0 for
/// every `F`: each edge index of the box appears once with each sign.
pub fn homotopy_cube_sum(
    f: &SpacePoly,
    xs: (&Rational, &Rational),
    ys: (&Rational, &Rational),
    ts: (&Rational, &Rational),
) -> Result<CubeFaces> {
    let gamma_t = Rectangle::new(xs.0.clone(), xs.1.clone(), ys.0.clone(), ys.1.clone())?;
    let gamma_y = Rectangle::new(xs.0.clone(), xs.1.clone(), ts.0.clone(), ts.1.clone())?;
    let gamma_x = Rectangle::new(ys.0.clone(), ys.1.clone(), ts.0.clone(), ts.1.clone())?;
    let t0 = winding_number_plane(&f.at_t(ts.0), &gamma_t);
    let t1 = winding_number_plane(&f.at_t(ts.1), &gamma_t);
    let y0 = winding_number_plane(&f.at_y(ys.0), &gamma_y);
    let y1 = winding_number_plane(&f.at_y(ys.1), &gamma_y);
    let x0 = winding_number_plane(&f.at_x(xs.0), &gamma_x);
    let x1 = winding_number_plane(&f.at_x(xs.1), &gamma_x);
    let signed_sum = -&t0.value + &y0.value - &x0.value + &t1.value - &y1.value + &x1.value;
    Ok(CubeFaces {
        t0,
        t1,
        y0,
        y1,
        x0,
        x1,
        signed_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, ComplexUniPoly, GaussianRational};
    use num_traits::Zero;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    #[test]
    fn faces_specialize_consistently() {
        let f = ComplexUniPoly::new(vec![g(-1, 2), g(0, 1), g(1, 0)]);
        let h = SpacePoly::homotopy(f.plane(), &ComplexUniPoly::new(vec![g(3, 0), g(1, 0)]).plane().clone());
        assert_eq!(h.at_t(&int(0)), f.plane().clone());
        let (x, y, t) = (rat(1, 2), rat(-2, 3), rat(3, 4));
        let a = h.at_t(&t).eval(&x, &y);
        assert_eq!(h.at_y(&y).eval(&x, &t), a);
        assert_eq!(h.at_x(&x).eval(&y, &t), a);
    }

    #[test]
    fn signed_sum_vanishes() {
        let f = ComplexUniPoly::from_roots(&g(1, 0), &[(g(0, 0), 2), (g(2, 1), 1)]);
        let k = ComplexUniPoly::new(vec![g(1, -1), g(0, 0), g(0, 0), g(2, 0)]);
        let h = SpacePoly::homotopy(f.plane(), k.plane());
        let faces = homotopy_cube_sum(
            &h,
            (&int(-1), &rat(3, 2)),
            (&rat(-1, 3), &int(1)),
            (&int(0), &int(1)),
        )
        .unwrap();
        assert!(faces.signed_sum.is_zero());
    }
}
