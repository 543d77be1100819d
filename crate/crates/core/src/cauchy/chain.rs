use num_traits::{One, Zero};

use super::index::{count_real_roots, has_root_in};
use super::{var_interval, HalfInt};
use crate::error::{Error, Result};
use crate::exact::{rational_to_string, sign_of, BiPoly, Poly, Rational, UniPoly};
use crate::subres::subresultants_structured;

/// Where a chain's sign conditions are claimed to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainDomain {
    Line,
    Interval(Rational, Rational),
}

/// Witnesses `A_i, B_i, C_i` of `A_i S_{i+1} + B_i S_i + C_i S_{i-1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRelation {
    pub a: UniPoly,
    pub b: UniPoly,
    pub c: UniPoly,
}

/// A `(σ, τ)`-chain `S_0, …, S_n` with its sign vectors, ε-weights and the
/// relations that certify it.
///
/// `sigma[i-1]`, `tau[i-1]` and `relations[i-1]` belong to the relation
/// with index `i` (`1 ≤ i ≤ n−1`); `epsilon[i-1]` is `ε_i` (`1 ≤ i ≤ n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTauChain {
    pub polys: Vec<UniPoly>,
    pub sigma: Vec<i8>,
    pub tau: Vec<i8>,
    pub epsilon: Vec<i8>,
    pub domain: ChainDomain,
    pub relations: Vec<ChainRelation>,
}

/// `ε_i = Π_{j<i} σ_j τ_j` for `1 ≤ i ≤ n`, where `n = sigma.len() + 1`.
pub fn epsilon_weights(sigma: &[i8], tau: &[i8]) -> Vec<i8> {
    let mut out = Vec::with_capacity(sigma.len() + 1);
    let mut acc = 1i8;
    out.push(acc);
    for (s, t) in sigma.iter().zip(tau) {
        acc *= s * t;
        out.push(acc);
    }
    out
}

impl SigmaTauChain {
    pub fn new(
        polys: Vec<UniPoly>,
        sigma: Vec<i8>,
        tau: Vec<i8>,
        domain: ChainDomain,
        relations: Vec<ChainRelation>,
    ) -> Result<Self> {
        if polys.len() < 2 || sigma.len() + 2 != polys.len() || tau.len() != sigma.len() {
            return Err(Error::InvalidChain(format!(
                "{} polynomials need {} signs, got sigma {} and tau {}",
                polys.len(),
                polys.len().saturating_sub(2),
                sigma.len(),
                tau.len()
            )));
        }
        if relations.len() != sigma.len() {
            return Err(Error::InvalidChain("one relation per inner member".into()));
        }
        let epsilon = epsilon_weights(&sigma, &tau);
        Ok(Self {
            polys,
            sigma,
            tau,
            epsilon,
            domain,
            relations,
        })
    }

    /// The index `n` of the last member.
    pub fn n(&self) -> usize {
        self.polys.len() - 1
    }

    fn root_free(&self, p: &UniPoly) -> bool {
        match &self.domain {
            ChainDomain::Line => {
                let m = p.root_bound();
                !p.is_zero() && !has_root_in(p, &-&m, &m)
            }
            ChainDomain::Interval(lo, hi) => !has_root_in(p, lo, hi),
        }
    }

    fn sample_point(&self) -> Rational {
        match &self.domain {
            ChainDomain::Line => Rational::zero(),
            ChainDomain::Interval(lo, _) => lo.clone(),
        }
    }

    /// `S_n` has no root on the domain.
    pub fn is_good_sturm(&self) -> bool {
        self.root_free(&self.polys[self.n()])
    }

    /// Checks every defining property: the relations, constant signs of
    /// `A_i` and `C_i`, the ε-weights, the good-Sturm condition and
    /// successive coprimality on the domain.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidChain(m));
        if self.epsilon != epsilon_weights(&self.sigma, &self.tau) {
            return bad("epsilon weights".into());
        }
        let x0 = self.sample_point();
        for (k, rel) in self.relations.iter().enumerate() {
            let i = k + 1;
            let lhs = &(&(&rel.a * &self.polys[i + 1]) + &(&rel.b * &self.polys[i]))
                + &(&rel.c * &self.polys[i - 1]);
            if !lhs.is_zero() {
                return bad(format!("relation {i} does not vanish"));
            }
            for (name, poly, want) in [("A", &rel.a, self.sigma[k]), ("C", &rel.c, self.tau[k])] {
                if !self.root_free(poly) || poly.sign_at(&x0) != want {
                    return bad(format!("{name}_{i} does not have constant sign {want}"));
                }
            }
        }
        if !self.is_good_sturm() {
            return bad("last member vanishes on the domain".into());
        }
        for w in self.polys.windows(2) {
            let g = w[0].gcd(&w[1]);
            if g.is_zero() || (!g.is_constant() && !self.root_free(&g)) {
                return bad("consecutive members share a root".into());
            }
        }
        Ok(())
    }
}

/// `Var(σ,τ)_a^b(S_0, …, S_n) = Σ ε_i Var_a^b(S_{i-1}, S_i)`.
pub fn var_sigma_tau(chain: &SigmaTauChain, a: &Rational, b: &Rational) -> HalfInt {
    chain
        .polys
        .windows(2)
        .zip(&chain.epsilon)
        .map(|(w, &e)| var_interval(&w[0], &w[1], a, b) * i64::from(e))
        .sum()
}

/// The good Sturm `(σ, τ)`-chain of a coprime pair built from its signed
/// subresultants: `S_i = sResP_{d_{i-1}-1}(S_0, S_1)` with the constant
/// multipliers `A_i = T_{d_{i-2}-1} sRes_{d_{i-1}}` and
/// `C_i = T_{d_{i-1}-1} sRes_{d_i}`. Valid on the whole line.
pub fn build_chain(s0: &UniPoly, s1: &UniPoly) -> Result<SigmaTauChain> {
    if s0.is_zero() || s1.is_zero() {
        return Err(Error::ZeroInput);
    }
    let seq = subresultants_structured(s0, s1)?;
    let s = seq.steps();
    if seq.degrees[s] != 0 {
        return Err(Error::NotCoprime);
    }
    let mut sigma = Vec::with_capacity(s.saturating_sub(1));
    let mut tau = Vec::with_capacity(s.saturating_sub(1));
    let mut relations = Vec::with_capacity(s.saturating_sub(1));
    for i in 1..s {
        let (a, c) = (seq.a_coeff(i), seq.c_coeff(i));
        sigma.push(sign_of(&a));
        tau.push(sign_of(&c));
        relations.push(ChainRelation {
            a: UniPoly::constant(a),
            b: seq.b_coeff(i)?,
            c: UniPoly::constant(c),
        });
    }
    SigmaTauChain::new(seq.chain(), sigma, tau, ChainDomain::Line, relations)
}

/// Subresultant chain of a bivariate pair in `X`, with sign conditions
/// certified on a `Y`-interval `[lo, hi]`. Specializing `Y` to any point of
/// the interval gives a good Sturm chain in `X` on the whole line, and
/// specializing `X` to any point gives a good Sturm chain in `Y` on
/// `[lo, hi]`, both with the same `(σ, τ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateChainTemplate {
    pub polys: Vec<BiPoly>,
    pub a: Vec<UniPoly>,
    pub b: Vec<BiPoly>,
    pub c: Vec<UniPoly>,
    pub sigma: Vec<i8>,
    pub tau: Vec<i8>,
    pub y_interval: (Rational, Rational),
}

impl BivariateChainTemplate {
    pub fn specialize_y(&self, y: &Rational) -> Result<SigmaTauChain> {
        let (lo, hi) = &self.y_interval;
        if y < lo || y > hi {
            return Err(Error::InvalidArgument(format!(
                "y = {} outside the certified interval",
                rational_to_string(y)
            )));
        }
        let relations = (0..self.a.len())
            .map(|k| ChainRelation {
                a: UniPoly::constant(self.a[k].eval(y)),
                b: self.b[k].specialize_y(y),
                c: UniPoly::constant(self.c[k].eval(y)),
            })
            .collect();
        SigmaTauChain::new(
            self.polys.iter().map(|p| p.specialize_y(y)).collect(),
            self.sigma.clone(),
            self.tau.clone(),
            ChainDomain::Line,
            relations,
        )
    }

    pub fn specialize_x(&self, x: &Rational) -> Result<SigmaTauChain> {
        let relations = (0..self.a.len())
            .map(|k| ChainRelation {
                a: self.a[k].clone(),
                b: self.b[k].specialize_x(x),
                c: self.c[k].clone(),
            })
            .collect();
        SigmaTauChain::new(
            self.polys.iter().map(|p| p.specialize_x(x)).collect(),
            self.sigma.clone(),
            self.tau.clone(),
            ChainDomain::Interval(self.y_interval.0.clone(), self.y_interval.1.clone()),
            relations,
        )
    }
}

/// Builds the bivariate template for `S_0, S_1 ∈ ℚ[Y][X]`, coprime in
/// `ℚ[X, Y]` with `deg_X S_1 < deg_X S_0`, provided every `A_i`, `C_i` and
/// the final member `S_s ∈ ℚ[Y]` has no root on `[lo, hi]`.
pub fn build_chain_bivariate(
    s0: &BiPoly,
    s1: &BiPoly,
    interval: (&Rational, &Rational),
) -> Result<BivariateChainTemplate> {
    let (lo, hi) = interval;
    if lo > hi {
        return Err(Error::InvalidArgument("empty Y-interval".into()));
    }
    if s0.is_zero() || s1.is_zero() {
        return Err(Error::ZeroInput);
    }
    let seq = subresultants_structured(s0, s1)?;
    let s = seq.steps();
    if seq.degrees[s] != 0 {
        return Err(Error::NotCoprime);
    }
    let content = s0
        .coeffs()
        .iter()
        .chain(s1.coeffs())
        .fold(Poly::zero(), |g: UniPoly, c| g.gcd(c));
    if !content.is_constant() {
        return Err(Error::NotCoprime);
    }
    let last = seq.chain_member(s).coeff(0);
    let mid = (lo + hi) / Rational::from_integer(2.into());
    let check = |p: &UniPoly| -> Result<i8> {
        if count_real_roots(p, lo, hi) != HalfInt::ZERO || p.is_zero() {
            return Err(Error::SignConditionFails {
                poly: p.display_in("Y"),
            });
        }
        Ok(p.sign_at(&mid))
    };
    check(&last)?;
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    let (mut sigma, mut tau) = (Vec::new(), Vec::new());
    for i in 1..s {
        let (ai, ci) = (seq.a_coeff(i), seq.c_coeff(i));
        sigma.push(check(&ai)?);
        tau.push(check(&ci)?);
        a.push(ai);
        c.push(ci);
        b.push(seq.b_coeff(i)?);
    }
    debug_assert!(seq.leading[0].is_one());
    Ok(BivariateChainTemplate {
        polys: seq.chain(),
        a,
        b,
        c,
        sigma,
        tau,
        y_interval: (lo.clone(), hi.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::cauchy_index_oracle;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn chain_for_square_root_two() {
        let chain = build_chain(&p(&[-2, 0, 1]), &p(&[0, 2])).unwrap();
        assert_eq!(chain.n(), 2);
        assert!(chain.polys[2].is_constant() && !chain.polys[2].is_zero());
        // A_1 = T_p · sRes_p = 1, C_1 = T_{p-1} · sRes_q = 2 · 2
        assert_eq!(chain.relations[0].a, p(&[1]));
        assert_eq!(chain.relations[0].c, p(&[4]));
        assert_eq!((chain.sigma.clone(), chain.tau.clone()), (vec![1], vec![1]));
        chain.validate().unwrap();
    }

    #[test]
    fn constant_second_member_is_trivial_chain() {
        let chain = build_chain(&p(&[1, 2, 3]), &p(&[5])).unwrap();
        assert_eq!(chain.n(), 1);
        assert!(chain.sigma.is_empty() && chain.tau.is_empty());
        assert_eq!(chain.epsilon, vec![1]);
        chain.validate().unwrap();
    }

    #[test]
    fn epsilon_products() {
        assert_eq!(epsilon_weights(&[1, 1, 1], &[1, 1, 1]), vec![1, 1, 1, 1]);
        assert_eq!(epsilon_weights(&[-1], &[1]), vec![1, -1]);
        assert_eq!(epsilon_weights(&[-1, 1, -1], &[-1, -1, 1]), vec![1, 1, -1, 1]);
    }

    #[test]
    fn hand_built_chain_with_negative_sigma() {
        // A = -1, C = 1: S2 = B S1 + S0 = -3
        let (s0, s1, b) = (p(&[-3, 0, 1]), p(&[0, 1]), p(&[0, -1]));
        let s2 = &(&b * &s1) + &s0;
        let chain = SigmaTauChain::new(
            vec![s0.clone(), s1.clone(), s2],
            vec![-1],
            vec![1],
            ChainDomain::Line,
            vec![ChainRelation { a: p(&[-1]), b, c: p(&[1]) }],
        )
        .unwrap();
        assert_eq!(chain.epsilon, vec![1, -1]);
        chain.validate().unwrap();
        let (a, bb) = (int(-3), rat(7, 2));
        let lhs = cauchy_index_oracle(&s1, &s0, &a, &bb)
            + cauchy_index_oracle(&chain.polys[1], &chain.polys[2], &a, &bb) * i64::from(chain.epsilon[1]);
        assert_eq!(lhs, var_sigma_tau(&chain, &a, &bb));
    }

    #[test]
    fn validate_rejects_broken_relation() {
        let mut chain = build_chain(&p(&[1, -3, 0, 1]), &p(&[-3, 0, 3])).unwrap();
        chain.relations[0].b = &chain.relations[0].b + &p(&[1]);
        assert!(matches!(chain.validate(), Err(Error::InvalidChain(_))));
    }

    #[test]
    fn bivariate_template_of_z_squared() {
        // Z^2 = (X^2 - Y^2) + i 2XY; use S0 = F_re, S1 = F_im (deg_X 2 > 1)
        let s0 = BiPoly::from_int_grid(&[&[0, 0, -1], &[], &[1]]);
        let s1 = BiPoly::from_int_grid(&[&[], &[0, 2]]);
        let t = build_chain_bivariate(&s0, &s1, (&int(1), &int(2))).unwrap();
        assert!(t.sigma.is_empty() || t.sigma.len() == t.polys.len() - 2);
        for y in [int(1), rat(3, 2), int(2)] {
            let ch = t.specialize_y(&y).unwrap();
            ch.validate().unwrap();
            let direct = build_chain(&s0.specialize_y(&y), &s1.specialize_y(&y)).unwrap();
            assert_eq!(direct.polys, ch.polys);
        }
        for x in [int(-2), int(0), rat(5, 3)] {
            t.specialize_x(&x).unwrap().validate().unwrap();
        }
        // Y = 0 is a root of the sign conditions
        assert!(matches!(
            build_chain_bivariate(&s0, &s1, (&int(-1), &int(1))),
            Err(Error::SignConditionFails { .. })
        ));
    }

    #[test]
    fn bivariate_rejects_content_factor() {
        let s0 = BiPoly::from_int_grid(&[&[], &[], &[0, 1]]); // Y X^2
        let s1 = BiPoly::from_int_grid(&[&[0, 1]]); // Y
        assert_eq!(build_chain_bivariate(&s0, &s1, (&int(1), &int(2))), Err(Error::NotCoprime));
    }

    #[test]
    fn bivariate_with_constant_second_member() {
        let s0 = BiPoly::from_int_grid(&[&[1], &[0, 1], &[1]]);
        let s1 = BiPoly::from_int_grid(&[&[1, 0, 1]]);
        let t = build_chain_bivariate(&s0, &s1, (&int(-5), &int(5))).unwrap();
        assert!(t.sigma.is_empty() && t.tau.is_empty());
        assert_eq!(t.polys.len(), 2);
    }
}
