use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational_to_string, Domain, Field, Rational};
use crate::error::{Error, Result};

/// Dense polynomial with coefficients in `D`, stored in ascending order of
/// powers. The highest stored coefficient is always nonzero, so the zero
/// polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<D> {
    coeffs: Vec<D>,
}

impl<D: Domain> Default for Poly<D> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<D: Domain> Poly<D> {
    pub fn new(mut coeffs: Vec<D>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: D) -> Self {
        Self::new(vec![c])
    }

    /// `c · X^k`.
    pub fn monomial(c: D, k: usize) -> Self {
        let mut v = vec![D::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The main variable `X`.
    pub fn x() -> Self {
        Self::monomial(D::one(), 1)
    }

    pub fn coeffs(&self) -> &[D] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<D> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> D {
        self.coeffs.get(i).cloned().unwrap_or_else(D::zero)
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&D> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &D) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scaled(r)).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![D::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scaled(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    /// Horner evaluation at a point of the coefficient domain.
    pub fn eval(&self, x: &D) -> D {
        self.coeffs
            .iter()
            .rev()
            .fold(D::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> D {
        self.coeffs
            .iter()
            .rev()
            .fold(D::zero(), |acc, c| acc.scaled(x).plus(c))
    }

    pub fn map<E: Domain>(&self, f: impl Fn(&D) -> E) -> Poly<E> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        Domain::pow(self, e)
    }

    /// `p(c·X + e)`.
    pub fn compose_affine(&self, c: &D, e: &D) -> Self {
        let lin = Self::new(vec![e.clone(), c.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| &(&acc * &lin) + &Self::constant(a.clone()))
    }

    /// Euclidean division whose quotient is required to have coefficients
    /// in `D`. Each quotient coefficient is an exact division by the
    /// leading coefficient of `den`; if one of them is not exact the
    /// quotient does not lie in `D[X]` and `InexactDivision` is returned.
    pub fn div_rem_exact(&self, den: &Self) -> Result<(Self, Self)> {
        let dd = den.degree().ok_or(Error::ZeroDivisor)?;
        let lc = den.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![D::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.try_div(lc).ok_or(Error::InexactDivision)?;
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].minus(&c.times(d));
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quo), Self::new(rem)))
    }

    /// Exact quotient `self / den`, failing unless the remainder is zero.
    pub fn exact_quotient(&self, den: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_exact(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Coefficient-wise exact division by a domain element.
    pub fn div_scalar_exact(&self, c: &D) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        self.coeffs
            .iter()
            .map(|a| a.try_div(c).ok_or(Error::InexactDivision))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl<D: Field> Poly<D> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self)> {
        // Over a field every coefficient division is exact.
        self.div_rem_exact(den)
    }

    pub fn rem(&self, den: &Self) -> Result<Self> {
        self.div_rem(den).map(|(_, r)| r)
    }

    /// Leading coefficient normalised to one; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, monic. Zero and constants map to themselves (made monic).
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_quotient(&g).expect("gcd divides").monic()
    }

    /// Splits off the factor `(X - x)^m` with `m` maximal, returning `(m, cofactor)`.
    /// The zero polynomial has no such decomposition and yields `(0, 0)`.
    pub fn split_root(&self, x: &D) -> (usize, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        let lin = Self::new(vec![x.negated(), D::one()]);
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                return (m, cur);
            }
            m += 1;
            cur = q;
        }
    }
}

impl<D: Domain> Zero for Poly<D> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<D: Domain> One for Poly<D> {
    fn one() -> Self {
        Poly::constant(D::one())
    }
}

impl<D: Domain> Add for Poly<D> {
    type Output = Poly<D>;
    fn add(self, rhs: Self) -> Poly<D> {
        self.plus(&rhs)
    }
}

impl<D: Domain> Mul for Poly<D> {
    type Output = Poly<D>;
    fn mul(self, rhs: Self) -> Poly<D> {
        self.times(&rhs)
    }
}

impl<D: Domain> Domain for Poly<D> {
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![D::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(out)
    }
    fn negated(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Domain::negated).collect(),
        }
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.exact_quotient(other).ok()
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale_rational(r)
    }
}

impl<D: Domain> Add for &Poly<D> {
    type Output = Poly<D>;
    fn add(self, rhs: Self) -> Poly<D> {
        self.plus(rhs)
    }
}

impl<D: Domain> Sub for &Poly<D> {
    type Output = Poly<D>;
    fn sub(self, rhs: Self) -> Poly<D> {
        self.minus(rhs)
    }
}

impl<D: Domain> Mul for &Poly<D> {
    type Output = Poly<D>;
    fn mul(self, rhs: Self) -> Poly<D> {
        self.times(rhs)
    }
}

impl<D: Domain> Neg for &Poly<D> {
    type Output = Poly<D>;
    fn neg(self) -> Poly<D> {
        self.negated()
    }
}

impl Poly<Rational> {
    /// Builds a polynomial from integer coefficients in ascending order.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// Sign of the value at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        super::sign_of(&self.eval(x))
    }

    /// Cauchy bound: every real root has absolute value strictly below the result.
    pub fn root_bound(&self) -> Rational {
        let lc = match self.leading() {
            Some(lc) => lc.abs(),
            None => return Rational::one(),
        };
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Human-readable rendering in the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match k {
                0 => rational_to_string(&a),
                _ => {
                    let mono = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if a.is_one() {
                        mono
                    } else {
                        format!("{}*{mono}", rational_to_string(&a))
                    }
                }
            };
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

/// Operations specific to ℚ[Y][X].
impl Poly<Poly<Rational>> {
    /// Builds `Σ c[i][k] X^i Y^k` from integer coefficients.
    pub fn from_int_grid(c: &[&[i64]]) -> Self {
        Self::new(c.iter().map(|row| Poly::from_ints(row)).collect())
    }

    /// The polynomial `Y` viewed in ℚ[Y][X].
    pub fn y() -> Self {
        Self::constant(Poly::x())
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.degree()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.degree().map(|k| i + k))
            .max()
    }

    /// Substitutes `Y = y`, leaving a polynomial in X.
    pub fn specialize_y(&self, y: &Rational) -> Poly<Rational> {
        self.map(|c| c.eval(y))
    }

    /// Substitutes `X = x`, leaving a polynomial in Y.
    pub fn specialize_x(&self, x: &Rational) -> Poly<Rational> {
        self.eval_rational(x)
    }

    /// Value at the point `(x, y)`.
    pub fn eval_point(&self, x: &Rational, y: &Rational) -> Rational {
        self.specialize_x(x).eval(y)
    }

    /// Exchanges the roles of X and Y.
    pub fn swap_vars(&self) -> Self {
        let dy = match self.deg_y() {
            Some(d) => d,
            None => return Self::zero(),
        };
        let rows = (0..=dy)
            .map(|k| Poly::new(self.coeffs.iter().map(|c| c.coeff(k)).collect()))
            .collect();
        Self::new(rows)
    }

    /// `p(X + x, Y + y)`.
    pub fn taylor_shift(&self, x: &Rational, y: &Rational) -> Self {
        let shifted_y = self.map(|c| c.compose_affine(&Rational::one(), y));
        shifted_y.compose_affine(&Poly::one(), &Poly::constant(x.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, BiPoly, UniPoly};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn ring_identities() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[-2, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!((&p(&[1, 2]) - &p(&[1, 2])).degree(), None);
    }

    #[test]
    fn divrem_cases() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), UniPoly::zero()));
        let (q, r) = p(&[0, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert_eq!((q, r), (UniPoly::zero(), p(&[0, 1])));
        assert_eq!(p(&[1]).div_rem(&UniPoly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[0, 1])), p(&[1]));
        assert_eq!(p(&[2, 4]).gcd(&UniPoly::zero()), UniPoly::new(vec![rat(1, 2), int(1)]));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn affine_composition() {
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.compose_affine(&int(1), &int(0)), sq);
        assert_eq!(sq.compose_affine(&int(2), &int(1)), p(&[1, 4, 4]));
    }

    #[test]
    fn exact_division_over_polynomial_domain() {
        // (Y X + Y^2) / Y = X + Y in Q[Y][X]
        let f = BiPoly::from_int_grid(&[&[0, 0, 1], &[0, 1]]);
        let y = BiPoly::y();
        let q = f.exact_quotient(&y).unwrap();
        assert_eq!(q, BiPoly::from_int_grid(&[&[0, 1], &[1]]));
        // X / Y is not in Q[Y][X]
        assert_eq!(BiPoly::x().exact_quotient(&y), Err(Error::InexactDivision));
    }

    #[test]
    fn specialization() {
        let f = BiPoly::from_int_grid(&[&[0, 0, 1], &[0, 1]]); // XY + Y^2
        assert_eq!(f.specialize_y(&int(2)), p(&[4, 2]));
        assert_eq!(BiPoly::from_int_grid(&[&[], &[0, 1]]).specialize_y(&int(0)), UniPoly::zero());
        assert_eq!(f.specialize_x(&int(1)), p(&[0, 1, 1]));
        assert_eq!(f.deg_x(), Some(1));
        assert_eq!(f.deg_y(), Some(2));
        assert_eq!(f.total_degree(), Some(2));
        assert_eq!(f.swap_vars().specialize_x(&int(2)), f.specialize_y(&int(2)));
    }

    #[test]
    fn split_root_counts_multiplicity() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 1]);
        let (m, cof) = f.split_root(&int(1));
        assert_eq!(m, 3);
        assert_eq!(cof, p(&[2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 0, 1]).to_string(), "X^2 - 2");
        assert_eq!(UniPoly::new(vec![rat(1, 2), int(-3)]).display_in("Y"), "-3*Y + 1/2");
    }
}
