//! Signed subresultant sequences.
//!
//! Two independent routes compute the same [`SubresSeq`]:
//! [`subresultants_naive`] evaluates every polynomial determinant of the
//! Sylvester–Habicht matrices, and [`subresultants_structured`] runs the
//! remainder recursion of the structure theorem with exact divisions in the
//! coefficient domain. Both are generic over [`Domain`], and are used at
//! `D = ℚ` and `D = ℚ[Y]`.

mod degree;
mod matrix;

pub use degree::{coefficient_degree_check, refined_bound_holds, DegreeEntry, DegreeReport};
pub use matrix::{syha_matrix, Matrix};

use crate::error::{Error, Result};
use crate::exact::{Domain, Poly};
use matrix::check_pair;

/// Full signed subresultant sequence of a pair `(P, Q)` with `deg Q < deg P`.
///
/// `polys[j]` is `sResP_j` and `principal[j]` is `sRes_j` for `0 ≤ j ≤ p`.
/// `degrees` lists the non-defective indices `d_0 = p > d_1 = q > … > d_s`,
/// and `leading[i] = T_{d_{i-1}-1}` for `0 ≤ i ≤ s`, with `leading[0] = T_p = 1`
/// (the virtual index `d_{-1} = p + 1` is never stored).
#[derive(Clone, PartialEq, Debug)]
pub struct SubresSeq<D> {
    pub p: usize,
    pub q: usize,
    pub polys: Vec<Poly<D>>,
    pub principal: Vec<D>,
    pub degrees: Vec<usize>,
    pub leading: Vec<D>,
}

impl<D: Domain> SubresSeq<D> {
    /// Number of steps `s`, i.e. `degrees.len() - 1`.
    pub fn steps(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn sresp(&self, j: usize) -> &Poly<D> {
        &self.polys[j]
    }

    pub fn sres(&self, j: usize) -> &D {
        &self.principal[j]
    }

    /// `sResP_{d_{i-1}-1}`, with `d_{-1} = p + 1` so that index 0 gives `P`.
    pub fn chain_member(&self, i: usize) -> &Poly<D> {
        if i == 0 {
            &self.polys[self.p]
        } else {
            &self.polys[self.degrees[i - 1] - 1]
        }
    }

    /// `S_0, …, S_s` with `S_i = sResP_{d_{i-1}-1}`.
    pub fn chain(&self) -> Vec<Poly<D>> {
        (0..=self.steps()).map(|i| self.chain_member(i).clone()).collect()
    }

    /// `A_i = T_{d_{i-2}-1} · sRes_{d_{i-1}}` for `1 ≤ i ≤ s`.
    pub fn a_coeff(&self, i: usize) -> D {
        self.leading[i - 1].times(self.sres(self.degrees[i - 1]))
    }

    /// `C_i = T_{d_{i-1}-1} · sRes_{d_i}` for `1 ≤ i ≤ s`.
    pub fn c_coeff(&self, i: usize) -> D {
        self.leading[i].times(self.sres(self.degrees[i]))
    }

    /// `B_i = -Quot(C_i · S_{i-1}, S_i)`, which lies in `D[X]`.
    pub fn b_coeff(&self, i: usize) -> Result<Poly<D>> {
        let num = self.chain_member(i - 1).scale(&self.c_coeff(i));
        let (q, _) = num
            .div_rem_exact(self.chain_member(i))
            .map_err(|_| violation(format!("Quot for B_{i} not in D[X]")))?;
        Ok(q.negated())
    }

    /// Assembles a sequence from the list `sResP_p, …, sResP_0`, deriving
    /// principal coefficients, non-defective degrees and leading coefficients.
    fn from_polys(p: usize, q: usize, polys: Vec<Poly<D>>) -> Result<Self> {
        let mut principal = vec![D::zero(); p + 1];
        principal[p] = D::one();
        for (j, slot) in principal.iter_mut().enumerate().take(q + 1) {
            *slot = polys[j].coeff(j);
        }
        let mut degrees = vec![p];
        degrees.extend((0..=q).rev().filter(|&j| !principal[j].is_zero()));
        let mut leading = vec![D::one()];
        for i in 1..degrees.len() {
            let member = &polys[degrees[i - 1] - 1];
            let lc = member
                .leading()
                .ok_or_else(|| violation(format!("sResP_{} vanishes", degrees[i - 1] - 1)))?;
            leading.push(lc.clone());
        }
        Ok(Self {
            p,
            q,
            polys,
            principal,
            degrees,
            leading,
        })
    }

    /// Checks every identity of the structure theorem exactly against the
    /// inputs `(P, Q)` the sequence was computed from.
    pub fn check_structure(&self, p_poly: &Poly<D>, q_poly: &Poly<D>) -> Result<()> {
        let (p, q) = (self.p, self.q);
        if self.polys[p] != *p_poly || self.polys[p - 1] != *q_poly {
            return Err(violation("sResP_p = P and sResP_{p-1} = Q".into()));
        }
        if !self.principal[p].is_one() {
            return Err(violation("sRes_p = 1".into()));
        }
        for j in q + 1..p.saturating_sub(1) {
            if !self.polys[j].is_zero() || !self.principal[j].is_zero() {
                return Err(violation(format!("sResP_{j} = 0 for q < j < p-1")));
            }
        }
        if self.degrees[0] != p || self.degrees.get(1) != Some(&q) {
            return Err(violation("d_0 = p and d_1 = q".into()));
        }
        let s = self.steps();
        for i in 1..=s {
            let (dp, di) = (self.degrees[i - 1], self.degrees[i]);
            for j in di + 1..dp - 1 {
                if !self.polys[j].is_zero() {
                    return Err(violation(format!("sResP_{j} should vanish (i = {i})")));
                }
            }
            let member = self.chain_member(i);
            if member.degree() != Some(di) {
                return Err(violation(format!("deg sResP_{} = {di}", dp - 1)));
            }
            let t = &self.leading[i];
            // proportionality
            if member.scale(self.sres(di)) != self.polys[di].scale(t) {
                return Err(violation(format!("proportionality at i = {i}")));
            }
            // sRes_{d_i} · sRes_{d_{i-1}}^{δ-1} = (-1)^{δ(δ-1)/2} T^δ, and the quotient is exact
            let delta = (dp - di) as u32;
            let mut rhs = t.pow(delta);
            if (delta * (delta - 1) / 2) % 2 == 1 {
                rhs = rhs.negated();
            }
            let den = self.sres(dp).pow(delta - 1);
            if self.sres(di).times(&den) != rhs || rhs.try_div(&den).as_ref() != Some(self.sres(di)) {
                return Err(violation(format!("sign/power formula at i = {i}")));
            }
            // remainder identity, when sResP_{d_i - 1} exists
            if di >= 1 {
                let lhs = self.polys[di - 1].scale(&self.a_coeff(i));
                let num = self.chain_member(i - 1).scale(&self.c_coeff(i));
                let (_, r) = num
                    .div_rem_exact(member)
                    .map_err(|_| violation(format!("Quot not in D[X] at i = {i}")))?;
                if lhs != r.negated() {
                    return Err(violation(format!("remainder identity at i = {i}")));
                }
            }
        }
        let ds = self.degrees[s];
        if ds > 0 && self.polys[..ds].iter().any(|p| !p.is_zero()) {
            return Err(violation("sResP_j = 0 below d_s".into()));
        }
        Ok(())
    }
}

fn violation(msg: String) -> Error {
    Error::StructureTheoremViolation(msg)
}

/// Subresultants from their definition: each `sResP_j` for `j ≤ q` is the
/// polynomial determinant of `SyHa_j(P, Q)`.
pub fn subresultants_naive<D: Domain>(p_poly: &Poly<D>, q_poly: &Poly<D>) -> Result<SubresSeq<D>> {
    let (p, q) = check_pair(p_poly, q_poly)?;
    let mut polys = vec![Poly::zero(); p + 1];
    polys[p] = p_poly.clone();
    polys[p - 1] = q_poly.clone();
    for (j, slot) in polys.iter_mut().enumerate().take(q + 1) {
        if j != p - 1 {
            *slot = polynomial_determinant(p_poly, q_poly, j)?;
        }
    }
    SubresSeq::from_polys(p, q, polys)
}

/// `Σ_i det(SyHa_{j,i}) X^i`.
fn polynomial_determinant<D: Domain>(p_poly: &Poly<D>, q_poly: &Poly<D>, j: usize) -> Result<Poly<D>> {
    let m = syha_matrix(p_poly, q_poly, j)?;
    let lead = m.rows() - 1;
    let mut cols: Vec<usize> = (0..lead).collect();
    cols.push(0);
    let coeffs = (0..=j)
        .map(|i| {
            // column p+q-j-i in 1-based numbering
            cols[lead] = m.cols() - 1 - i;
            m.select_columns(&cols).determinant()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// Subresultants through the structure-theorem recursion
///
/// `T_{d_{i-2}-1} sRes_{d_{i-1}} sResP_{d_i-1} = -Rem(T_{d_{i-1}-1} sRes_{d_i} sResP_{d_{i-2}-1}, sResP_{d_{i-1}-1})`
///
/// together with the proportionality relation for `sResP_{d_i}`. Every
/// division is required to be exact in `D`; a failure is reported as
/// `StructureTheoremViolation`.
pub fn subresultants_structured<D: Domain>(p_poly: &Poly<D>, q_poly: &Poly<D>) -> Result<SubresSeq<D>> {
    let (p, q) = check_pair(p_poly, q_poly)?;
    let mut polys = vec![Poly::zero(); p + 1];
    let mut principal = vec![D::zero(); p + 1];
    polys[p] = p_poly.clone();
    principal[p] = D::one();
    let mut degrees = vec![p];
    let mut leading = vec![D::one()];

    let mut prev = p_poly.clone();
    let mut cur = q_poly.clone();
    let mut i = 1;
    loop {
        let d_prev = degrees[i - 1];
        let di = cur.degree().expect("nonzero chain member");
        let t = cur.leading().expect("nonzero").clone();
        let delta = (d_prev - di) as u32;
        let mut sres = t
            .pow(delta)
            .try_div(&principal[d_prev].pow(delta - 1))
            .ok_or_else(|| violation(format!("sRes_{di} not in D")))?;
        if (delta * (delta - 1) / 2) % 2 == 1 {
            sres = sres.negated();
        }
        polys[d_prev - 1] = cur.clone();
        polys[di] = cur
            .scale(&sres)
            .div_scalar_exact(&t)
            .map_err(|_| violation(format!("sResP_{di} not in D[X]")))?;
        principal[di] = sres.clone();
        degrees.push(di);
        leading.push(t.clone());
        if di == 0 {
            break;
        }
        let num = prev.scale(&t.times(&sres));
        let (_, r) = num
            .div_rem_exact(&cur)
            .map_err(|_| violation(format!("Quot not in D[X] at step {i}")))?;
        let divisor = leading[i - 1].times(&principal[d_prev]);
        let next = r
            .negated()
            .div_scalar_exact(&divisor)
            .map_err(|_| violation(format!("sResP_{} not in D[X]", di - 1)))?;
        if next.is_zero() {
            break;
        }
        prev = cur;
        cur = next;
        i += 1;
    }
    debug_assert_eq!(q, degrees[1]);
    Ok(SubresSeq {
        p,
        q,
        polys,
        principal,
        degrees,
        leading,
    })
}
