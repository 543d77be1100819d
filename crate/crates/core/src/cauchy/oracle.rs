use num_traits::{One, Zero};

use super::{local_index, HalfInt};
use crate::exact::{sign_of, Rational, UniPoly};

/// A real root of a polynomial, either known exactly or isolated in an open
/// interval that contains no other root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolatedRoot {
    Exact(Rational),
    Interval(Rational, Rational),
}

impl IsolatedRoot {
    fn low(&self) -> &Rational {
        match self {
            IsolatedRoot::Exact(x) => x,
            IsolatedRoot::Interval(l, _) => l,
        }
    }
}

fn sign_variations(coeffs: &[Rational]) -> usize {
    let signs: Vec<i8> = coeffs.iter().map(sign_of).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn taylor_shift_one(p: &UniPoly) -> UniPoly {
    let mut c = p.coeffs().to_vec();
    let n = c.len();
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            let t = c[k + 1].clone();
            c[k] += t;
        }
    }
    UniPoly::new(c)
}

/// Sign variations of `(X+1)^n P((l + rX)/(X+1))`: an upper bound on the
/// number of roots of `P` in the open interval `(l, r)` with the same parity.
pub fn descartes_bound(p: &UniPoly, l: &Rational, r: &Rational) -> usize {
    if p.is_zero() {
        return usize::MAX;
    }
    let scaled = p.compose_affine(&(r - l), l);
    let n = scaled.degree().unwrap_or(0);
    let mut rev = scaled.coeffs().to_vec();
    rev.resize(n + 1, Rational::zero());
    rev.reverse();
    sign_variations(taylor_shift_one(&UniPoly::new(rev)).coeffs())
}

/// Real roots of `P` in the open interval `(a, b)` by Descartes bisection,
/// sorted left to right. `P` must be nonzero.
pub fn isolate_real_roots(p: &UniPoly, a: &Rational, b: &Rational) -> Vec<IsolatedRoot> {
    let sf = p.squarefree_part();
    let mut out = Vec::new();
    if sf.is_constant() || a >= b {
        return out;
    }
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((l, r)) = stack.pop() {
        match descartes_bound(&sf, &l, &r) {
            0 => {}
            1 => out.push(IsolatedRoot::Interval(l, r)),
            _ => {
                let m = (&l + &r) / Rational::from_integer(2.into());
                if sf.sign_at(&m) == 0 {
                    out.push(IsolatedRoot::Exact(m.clone()));
                }
                stack.push((l, m.clone()));
                stack.push((m, r));
            }
        }
    }
    out.sort_by(|x, y| x.low().cmp(y.low()));
    out
}

fn half(l: &Rational, r: &Rational) -> Rational {
    (l + r) / (Rational::one() + Rational::one())
}

/// Shrinks an interval holding exactly one root of the squarefree `sf` in
/// its interior until neither endpoint is a root of `sf` or `q` and `q` has
/// no root inside, or until the root is hit exactly. Requires `q` nonzero
/// at the isolated root.
fn tighten(sf: &UniPoly, q: &UniPoly, mut l: Rational, mut r: Rational) -> IsolatedRoot {
    // move root endpoints inward without passing the isolated root
    while sf.sign_at(&l) == 0 {
        let mut t = half(&l, &r);
        while descartes_bound(sf, &l, &t) != 0 || sf.sign_at(&t) == 0 {
            t = half(&l, &t);
        }
        l = t;
    }
    while sf.sign_at(&r) == 0 {
        let mut t = half(&l, &r);
        while descartes_bound(sf, &t, &r) != 0 || sf.sign_at(&t) == 0 {
            t = half(&t, &r);
        }
        r = t;
    }
    while q.sign_at(&l) == 0 || q.sign_at(&r) == 0 || descartes_bound(q, &l, &r) != 0 {
        let m = half(&l, &r);
        if sf.sign_at(&m) == 0 {
            return IsolatedRoot::Exact(m);
        }
        if descartes_bound(sf, &l, &m) == 1 {
            r = m;
        } else {
            l = m;
        }
    }
    IsolatedRoot::Interval(l, r)
}

/// `Ind_a^b(Q, P)` evaluated straight from the definition: endpoint halves
/// from the local index and, for each root of `P` strictly inside, the sign
/// change of `QP` across an isolating interval free of roots of `Q`.
pub fn cauchy_index_oracle(q: &UniPoly, p: &UniPoly, a: &Rational, b: &Rational) -> HalfInt {
    if p.is_zero() || q.is_zero() || a == b {
        return HalfInt::ZERO;
    }
    if a > b {
        return -cauchy_index_oracle(q, p, b, a);
    }
    let g = p.gcd(q);
    let p = p.exact_quotient(&g).expect("gcd divides");
    let q = q.exact_quotient(&g).expect("gcd divides");
    let sf = p.squarefree_part();
    let qp = &q * &p;
    let mut total = local_index(&q, &p, a).plus - local_index(&q, &p, b).minus;
    for root in isolate_real_roots(&p, a, b) {
        match root {
            IsolatedRoot::Exact(x) => total += local_index(&q, &p, &x).total,
            IsolatedRoot::Interval(l, r) => match tighten(&sf, &q, l, r) {
                IsolatedRoot::Exact(x) => total += local_index(&q, &p, &x).total,
                IsolatedRoot::Interval(l, r) => {
                    let jump = qp.sign_at(&r) - qp.sign_at(&l);
                    total += HalfInt::from_halves(i64::from(jump));
                }
            },
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn descartes_counts() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(descartes_bound(&f, &int(0), &int(2)), 1);
        assert_eq!(descartes_bound(&f, &int(-2), &int(2)), 2);
        assert_eq!(descartes_bound(&f, &int(2), &int(3)), 0);
    }

    #[test]
    fn shift_by_one() {
        // (X+1)^2 = X^2 + 2X + 1
        assert_eq!(taylor_shift_one(&p(&[0, 0, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn isolation_of_cubic() {
        let f = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[-3, 0, 1]);
        let roots = isolate_real_roots(&f, &int(-5), &int(5));
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(cauchy_index_oracle(&p(&[1]), &p(&[-2, 0, 1]), &int(1), &int(2)), HalfInt::from_int(1));
        assert_eq!(cauchy_index_oracle(&p(&[0, 2]), &p(&[-2, 0, 1]), &int(0), &int(2)), HalfInt::from_int(1));
        assert_eq!(cauchy_index_oracle(&p(&[1]), &p(&[0, 1]), &int(0), &int(1)), HalfInt::from_halves(1));
        assert_eq!(cauchy_index_oracle(&p(&[1]), &p(&[0, 0, 1]), &int(-1), &int(1)), HalfInt::ZERO);
        assert_eq!(cauchy_index_oracle(&p(&[1]), &p(&[0, 1]), &rat(1, 2), &int(-1)), HalfInt::from_int(-1));
    }
}
