use serde::Serialize;

use super::subresultants_structured;
use crate::error::{Error, Result};
use crate::exact::BiPoly;

/// Y-degree of one X-coefficient of one subresultant, with its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub j: usize,
    pub i: usize,
    /// `None` when the coefficient is zero.
    pub deg_y: Option<usize>,
    /// `d(p+q-2j) - pq + j² + j - i`
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub d: usize,
    pub p: usize,
    pub q: usize,
    pub entries: Vec<DegreeEntry>,
}

impl DegreeReport {
    pub fn max_deg_y(&self) -> Option<usize> {
        self.entries.iter().filter_map(|e| e.deg_y).max()
    }
}

/// `d(p+q) - pq ≤ d²`, the refined bound, for `1 ≤ q < p ≤ d`.
pub fn refined_bound_holds(p: i64, q: i64, d: i64) -> bool {
    d * (p + q) - p * q <= d * d
}

/// Computes the subresultants of bivariate `P, Q` in `X` and checks that
/// the Y-degree of the `X^i` coefficient of `sResP_j` is at most
/// `d(p+q-2j) - pq + j² + j - i`, and that this is at most `d²`.
pub fn coefficient_degree_check(p_poly: &BiPoly, q_poly: &BiPoly, d: usize) -> Result<DegreeReport> {
    let seq = subresultants_structured(p_poly, q_poly)?;
    let (p, q) = (seq.p, seq.q);
    let too_big = |t: Option<usize>| t.is_some_and(|t| t > d);
    if p > d || too_big(p_poly.total_degree()) || too_big(q_poly.total_degree()) {
        return Err(Error::InvalidArgument(format!(
            "total degrees and deg_X must not exceed d = {d}"
        )));
    }
    let (di, pi, qi) = (d as i64, p as i64, q as i64);
    let mut entries = Vec::new();
    for j in 0..=q {
        let ji = j as i64;
        for i in 0..=j {
            let bound = di * (pi + qi - 2 * ji) - pi * qi + ji * ji + ji - i as i64;
            let deg_y = seq.sresp(j).coeff(i).degree();
            let degree = deg_y.unwrap_or(0);
            if deg_y.is_some() && (degree as i64 > bound || degree as i64 > di * di) {
                return Err(Error::DegreeBoundViolation { j, i, degree, bound });
            }
            if bound > di * di {
                return Err(Error::DegreeBoundViolation {
                    j,
                    i,
                    degree: bound as usize,
                    bound: di * di,
                });
            }
            entries.push(DegreeEntry { j, i, deg_y, bound });
        }
    }
    Ok(DegreeReport { d, p, q, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refined_bound_exhaustive() {
        for d in 1..=12 {
            for p in 2..=d {
                for q in 1..p {
                    assert!(refined_bound_holds(p, q, d), "p={p} q={q} d={d}");
                }
            }
        }
    }

    #[test]
    fn constant_in_y_gives_zero_degrees() {
        let a = BiPoly::from_int_grid(&[&[3], &[1], &[], &[2]]);
        let b = BiPoly::from_int_grid(&[&[1], &[-4], &[1]]);
        let r = coefficient_degree_check(&a, &b, 3).unwrap();
        assert!(r.entries.iter().all(|e| e.deg_y.unwrap_or(0) == 0));
    }

    #[test]
    fn dense_pair_within_bounds() {
        // P = X^2 + XY + Y^2 + 1, Q = X Y + Y^2 - 1
        let a = BiPoly::from_int_grid(&[&[1, 0, 1], &[0, 1], &[1]]);
        let b = BiPoly::from_int_grid(&[&[-1, 0, 1], &[0, 1]]);
        let r = coefficient_degree_check(&a, &b, 2).unwrap();
        assert!(r.max_deg_y().unwrap() <= 4);
    }
}
