use super::chain::{build_chain, var_sigma_tau, SigmaTauChain};
use super::{var_interval, HalfInt};
use crate::error::{Error, Result};
use crate::exact::{Rational, UniPoly};

/// `Ind_a^b(Q, P)`, the Cauchy index of `Q/P` on `[a, b]`.
///
/// Defined for every input: zero polynomials and `a = b` give 0, `a > b`
/// is handled by antisymmetry. The common factor of `P` and `Q` is removed
/// and `Q` is reduced modulo `P`; neither changes the index. The result is
/// the ε-weighted variation count of the subresultant chain of `(P, Q)`.
pub fn cauchy_index(q: &UniPoly, p: &UniPoly, a: &Rational, b: &Rational) -> HalfInt {
    cauchy_index_traced(q, p, a, b).0
}

/// Like [`cauchy_index`], also returning the chain that produced the value
/// (`None` when a degenerate case short-circuits).
pub fn cauchy_index_traced(
    q: &UniPoly,
    p: &UniPoly,
    a: &Rational,
    b: &Rational,
) -> (HalfInt, Option<SigmaTauChain>) {
    if p.is_zero() || q.is_zero() || a == b {
        return (HalfInt::ZERO, None);
    }
    if a > b {
        let (v, ch) = cauchy_index_traced(q, p, b, a);
        return (-v, ch);
    }
    let g = p.gcd(q);
    let (p, mut q) = (
        p.exact_quotient(&g).expect("gcd divides"),
        q.exact_quotient(&g).expect("gcd divides"),
    );
    if p.is_constant() {
        return (HalfInt::ZERO, None);
    }
    if q.degree() >= p.degree() {
        q = q.rem(&p).expect("p is nonzero");
    }
    let chain = build_chain(&p, &q).expect("coprime pair with deg q < deg p");
    (var_sigma_tau(&chain, a, b), Some(chain))
}

/// `Ind_a^b(P', P)`: the number of distinct roots of `P` in `(a, b)` plus
/// ½ for each endpoint that is a root.
pub fn count_real_roots(p: &UniPoly, a: &Rational, b: &Rational) -> HalfInt {
    cauchy_index(&p.derivative(), p, a, b)
}

/// Whether `P` vanishes somewhere on the closed interval `[lo, hi]`. The
/// zero polynomial vanishes everywhere.
pub fn has_root_in(p: &UniPoly, lo: &Rational, hi: &Rational) -> bool {
    if p.is_zero() {
        return true;
    }
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    p.sign_at(lo) == 0 || p.sign_at(hi) == 0 || count_real_roots(p, lo, hi) != HalfInt::ZERO
}

fn ordered<'a>(a: &'a Rational, b: &'a Rational) -> (&'a Rational, &'a Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Both sides of `Ind_a^b(Q, P) + Ind_a^b(P, Q) = Var_a^b(P, Q)`, valid when
/// `P` and `Q` have no common root in `[a, b]`.
pub fn inversion_check(p: &UniPoly, q: &UniPoly, a: &Rational, b: &Rational) -> Result<(HalfInt, HalfInt)> {
    let (lo, hi) = ordered(a, b);
    if has_root_in(&p.gcd(q), lo, hi) {
        return Err(Error::CommonRoot);
    }
    let lhs = cauchy_index(q, p, a, b) + cauchy_index(p, q, a, b);
    Ok((lhs, var_interval(p, q, a, b)))
}

/// Both sides of the product formula
/// `Ind(PR−QS, PS+QR) = Ind(P, Q) + Ind(R, S) + ½ sign(((PS+QR)QS)(a)) − ½ sign(((PS+QR)QS)(b))`
/// on `[a, b]`, valid when neither `gcd(P, Q)` nor `gcd(R, S)` has a root in
/// `[a, b]`.
pub fn product_formula_check(
    p: &UniPoly,
    q: &UniPoly,
    r: &UniPoly,
    s: &UniPoly,
    a: &Rational,
    b: &Rational,
) -> Result<(HalfInt, HalfInt)> {
    let (lo, hi) = ordered(a, b);
    if has_root_in(&p.gcd(q), lo, hi) || has_root_in(&r.gcd(s), lo, hi) {
        return Err(Error::CommonRoot);
    }
    let num = &(p * r) - &(q * s);
    let den = &(p * s) + &(q * r);
    let lhs = cauchy_index(&num, &den, a, b);
    let corr = &(&den * q) * s;
    let rhs = cauchy_index(p, q, a, b)
        + cauchy_index(r, s, a, b)
        + HalfInt::from_halves(i64::from(corr.sign_at(a)))
        - HalfInt::from_halves(i64::from(corr.sign_at(b)));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn root_two_on_one_two() {
        assert_eq!(cauchy_index(&p(&[1]), &p(&[-2, 0, 1]), &int(1), &int(2)), HalfInt::from_int(1));
    }

    #[test]
    fn simple_pole() {
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1]), &int(-1), &int(1)), HalfInt::from_int(1));
        assert_eq!(cauchy_index(&p(&[-1]), &p(&[0, 1]), &int(-1), &int(1)), HalfInt::from_int(-1));
    }

    #[test]
    fn degenerate_cases() {
        let (a, b) = (int(-3), int(3));
        assert_eq!(cauchy_index(&UniPoly::zero(), &p(&[0, 1]), &a, &b), HalfInt::ZERO);
        assert_eq!(cauchy_index(&p(&[1]), &UniPoly::zero(), &a, &b), HalfInt::ZERO);
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1]), &a, &a), HalfInt::ZERO);
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1]), &b, &a), HalfInt::from_int(-1));
    }

    #[test]
    fn endpoint_halves() {
        // 1/X on [0, 1]: right half at 0 is +½
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1]), &int(0), &int(1)), HalfInt::from_halves(1));
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1]), &int(-1), &int(0)), HalfInt::from_halves(1));
    }

    #[test]
    fn high_degree_numerator_is_reduced() {
        // (X^3 + 1)/X has the same jump at 0 as 1/X
        assert_eq!(cauchy_index(&p(&[1, 0, 0, 1]), &p(&[0, 1]), &int(-1), &int(1)), HalfInt::from_int(1));
    }

    #[test]
    fn counting_real_roots() {
        assert_eq!(count_real_roots(&p(&[-2, 0, 1]), &int(0), &int(2)), HalfInt::from_int(1));
        assert_eq!(count_real_roots(&p(&[0, 1]), &int(0), &int(1)), HalfInt::from_halves(1));
        // (X-1)^2 (X+1) on [-2, 2]: distinct roots only
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        assert_eq!(count_real_roots(&f, &int(-2), &int(2)), HalfInt::from_int(2));
        assert!(has_root_in(&p(&[-1, 1]), &int(1), &int(1)));
        assert!(!has_root_in(&p(&[1, 0, 1]), &int(-9), &int(9)));
    }

    #[test]
    fn inversion_examples() {
        let (l, r) = inversion_check(&p(&[0, 1]), &p(&[1]), &int(-1), &int(1)).unwrap();
        assert_eq!((l, r), (HalfInt::from_int(1), HalfInt::from_int(1)));
        let f = p(&[1, 0, 1]);
        assert_eq!(inversion_check(&f, &f, &int(0), &int(1)).unwrap(), (HalfInt::ZERO, HalfInt::ZERO));
        let g = p(&[-1, 1]);
        assert_eq!(inversion_check(&g, &(&g * &f), &int(0), &int(2)), Err(Error::CommonRoot));
    }

    #[test]
    fn product_formula_fixed_quadruples() {
        let (a, b) = (int(0), int(1));
        let (l, r) = product_formula_check(&p(&[1]), &p(&[0, 1]), &p(&[-1, 1]), &p(&[0, 1]), &a, &b).unwrap();
        assert_eq!(l, r);
        assert_eq!(
            product_formula_check(&p(&[-1, 1]), &p(&[0, -1, 1]), &p(&[-1, 1]), &p(&[0, 1]), &a, &b),
            Err(Error::CommonRoot)
        );
    }

    #[test]
    fn affine_change() {
        let (q, pp) = (p(&[3, -1, 2]), p(&[-1, 0, 0, 1]));
        let (c, e) = (rat(3, 2), rat(-1, 4));
        let (a, b) = (int(-2), rat(7, 3));
        let l = |x: &Rational| &(&c * x) + &e;
        assert_eq!(
            cauchy_index(&q, &pp, &l(&a), &l(&b)),
            cauchy_index(&q.compose_affine(&c, &e), &pp.compose_affine(&c, &e), &a, &b)
        );
    }
}
