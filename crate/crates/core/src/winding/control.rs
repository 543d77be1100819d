use num_traits::{One, Zero};
use serde::Serialize;

use super::{count_roots_in_rectangle, vanishes_on_boundary, Rectangle};
use crate::error::{Error, Result};
use crate::exact::{rat, ComplexUniPoly, PlanePoly, Rational};

/// `r' = 1 + 2 max_{j<e} (|a_j| + |b_j|)` for the monic normalization
/// `Z^e + Σ (a_j + i b_j) Z^j` of `F`. Every square `[−m, m]²` with `m ≥ r'`
/// has `w(F | ∂Γ) = e`.
pub fn sufficient_radius(f: &ComplexUniPoly) -> Result<Rational> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let g = f.monic();
    let e = g.degree().expect("nonconstant");
    let max = g.coeffs()[..e]
        .iter()
        .map(|c| c.l1_norm())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max * Rational::from_integer(2.into()))
}

/// `deg F`, obtained as the root count of a large enough square. When the
/// square's boundary meets a root the half-width is grown by `1 + 1/(k+2)`
/// on the `k`-th retry.
pub fn count_all_roots(f: &ComplexUniPoly) -> Result<usize> {
    let mut m = sufficient_radius(f)?;
    let mut k: i64 = 0;
    loop {
        let rect = Rectangle::centered_square(&m)?;
        if !vanishes_on_boundary(f, &rect) {
            return count_roots_in_rectangle(f, &rect);
        }
        m = &m * (Rational::one() + rat(1, k + 2));
        k += 1;
    }
}

/// Which of `F` and `iF` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    F,
    #[serde(rename = "iF")]
    IF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Controlled {
    pub well_controlled: bool,
    /// The element of `{F, iF}` whose imaginary part has the larger X-degree.
    pub fx: Option<Variant>,
    /// The element of `{F, iF}` whose imaginary part has the larger Y-degree.
    pub fy: Option<Variant>,
}

/// `F` is well-controlled when `F_re, F_im ≠ 0` and the two parts differ
/// in X-degree and in Y-degree.
pub fn is_well_controlled(f: &PlanePoly) -> Controlled {
    let none = Controlled {
        well_controlled: false,
        fx: None,
        fy: None,
    };
    if f.re.is_zero() || f.im.is_zero() {
        return none;
    }
    let (rx, ix) = (f.re.deg_x(), f.im.deg_x());
    let (ry, iy) = (f.re.deg_y(), f.im.deg_y());
    if rx == ix || ry == iy {
        return none;
    }
    // (iF)_im = F_re
    let pick = |im: Option<usize>, re: Option<usize>| if im > re { Variant::F } else { Variant::IF };
    Controlled {
        well_controlled: true,
        fx: Some(pick(ix, rx)),
        fy: Some(pick(iy, ry)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, GaussianRational};

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    #[test]
    fn radius_values() {
        let z3 = ComplexUniPoly::new(vec![g(0, 0), g(0, 0), g(0, 0), g(1, 0)]);
        assert_eq!(sufficient_radius(&z3).unwrap(), int(1));
        let f = ComplexUniPoly::new(vec![g(4, 0), g(0, 0), g(1, 0)]);
        assert_eq!(sufficient_radius(&f).unwrap(), int(9));
        // non-monic input is normalized: 2Z + 2i -> Z + i
        let h = ComplexUniPoly::new(vec![g(0, 2), g(2, 0)]);
        assert_eq!(sufficient_radius(&h).unwrap(), int(3));
        assert_eq!(
            sufficient_radius(&ComplexUniPoly::new(vec![g(1, 1)])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn counts_everything() {
        let cube_roots = ComplexUniPoly::new(vec![g(-1, 0), g(0, 0), g(0, 0), g(1, 0)]);
        assert_eq!(count_all_roots(&cube_roots).unwrap(), 3);
        let sq = ComplexUniPoly::from_roots(&g(1, 0), &[(g(0, 1), 2)]);
        assert_eq!(count_all_roots(&sq).unwrap(), 2);
        let lin = ComplexUniPoly::new(vec![g(5, -3), g(0, 7)]);
        assert_eq!(count_all_roots(&lin).unwrap(), 1);
    }

    #[test]
    fn well_controlled_cases() {
        let z = ComplexUniPoly::new(vec![g(0, 0), g(1, 0)]);
        let c = is_well_controlled(z.plane());
        assert!(c.well_controlled);
        assert_eq!((c.fx, c.fy), (Some(Variant::IF), Some(Variant::F)));
        let i = ComplexUniPoly::new(vec![g(0, 1)]);
        assert!(!is_well_controlled(i.plane()).well_controlled);
        let monic = ComplexUniPoly::new(vec![g(3, -2), g(1, 5), g(0, 0), g(1, 0)]);
        assert!(is_well_controlled(monic.plane()).well_controlled);
    }
}
