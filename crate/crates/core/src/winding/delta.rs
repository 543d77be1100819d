use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Domain, Field, GaussianRational, PlanePoly, Rational};

/// A positive rational `r` with `r^k ≤ t` and `(9r/8)^k > t`.
pub(crate) fn root_lower_bound(t: &Rational, k: u32) -> Rational {
    let fits = |r: &Rational| &Domain::pow(r, k) <= t;
    let two = Rational::from_integer(2.into());
    let mut lo = Rational::one();
    if fits(&lo) {
        while fits(&(&lo * &two)) {
            lo = &lo * &two;
        }
    } else {
        while !fits(&lo) {
            lo = &lo / &two;
        }
    }
    let mut hi = &lo * &two;
    for _ in 0..3 {
        let m = (&lo + &hi) * rat(1, 2);
        if fits(&m) {
            lo = m;
        } else {
            hi = m;
        }
    }
    lo
}

/// A positive `δ` such that `F` has no zero in `[x−δ, x+δ] × [y−δ, y+δ]`.
///
/// With `G = (i / F(x, y))·F` we have `G_im(x, y) = 1`. Writing
/// `G_im(x+U, y+V) = 1 + Σ c_j U^{j1} V^{j2}` and `Δ = (D+1)(D+2)/2` for the
/// total degree `D`, each term is below `1/Δ` in absolute value as soon as
/// `δ^{j1+j2} ≤ 1/(Δ |c_j|)`, so `G_im > 0` on the box.
pub fn nonvanishing_delta(f: &PlanePoly, x: &Rational, y: &Rational) -> Result<Rational> {
    let v = f.eval(x, y);
    if Zero::is_zero(&v) {
        return Err(Error::PointIsRoot);
    }
    let g = f.scale(&(&GaussianRational::i() * &v.inv()));
    let d = g.total_degree().unwrap_or(0);
    let big_delta = Rational::from_integer((((d + 1) * (d + 2)) / 2).into());
    let shifted = g.im.taylor_shift(x, y);
    let mut best: Option<Rational> = None;
    for (j1, row) in shifted.coeffs().iter().enumerate() {
        for (j2, c) in row.coeffs().iter().enumerate() {
            let k = j1 + j2;
            if k == 0 || Zero::is_zero(c) {
                continue;
            }
            let t = (&big_delta * c.abs()).recip();
            let r = root_lower_bound(&t, k as u32);
            if best.as_ref().is_none_or(|b| &r < b) {
                best = Some(r);
            }
        }
    }
    Ok(best.unwrap_or_else(Rational::one))
}
