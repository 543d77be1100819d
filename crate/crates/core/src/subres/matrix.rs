use crate::error::{Error, Result};
use crate::exact::{Domain, Poly};

/// Dense row-major matrix over a coefficient domain.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<D> {
    rows: usize,
    cols: usize,
    data: Vec<D>,
}

impl<D: Domain> Matrix<D> {
    pub fn from_rows(rows: Vec<Vec<D>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &D {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[D] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Submatrix keeping all rows and the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division
    /// is exact in an integral domain; a failed division is reported as
    /// `InexactDivision`.
    pub fn determinant(&self) -> Result<D> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(D::one());
        }
        let mut a: Vec<Vec<D>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = D::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(D::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                    a[i][j] = t.try_div(&prev).ok_or(Error::InexactDivision)?;
                }
                a[i][k] = D::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { det.negated() } else { det })
    }
}

/// The Sylvester–Habicht matrix `SyHa_j(P, Q)`: rows
/// `X^{q-j-1}P, …, P, Q, …, X^{p-j-1}Q` written in the monomial basis
/// `X^{p+q-j-1}, …, X, 1`. Shape `(p+q-2j) × (p+q-j)`.
pub fn syha_matrix<D: Domain>(p_poly: &Poly<D>, q_poly: &Poly<D>, j: usize) -> Result<Matrix<D>> {
    let (p, q) = check_pair(p_poly, q_poly)?;
    if j > q {
        return Err(Error::IndexOutOfRange { index: j, max: q });
    }
    let ncols = p + q - j;
    let row_of = |poly: &Poly<D>, shift: usize| -> Vec<D> {
        // column c holds the coefficient of X^{ncols-1-c}
        (0..ncols)
            .map(|c| {
                let pow = ncols - 1 - c;
                if pow >= shift {
                    poly.coeff(pow - shift)
                } else {
                    D::zero()
                }
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(p + q - 2 * j);
    for k in (0..q - j).rev() {
        rows.push(row_of(p_poly, k));
    }
    for k in 0..p - j {
        rows.push(row_of(q_poly, k));
    }
    Ok(Matrix::from_rows(rows))
}

/// Validates `P, Q ≠ 0`, `deg P ≥ 1`, `deg Q < deg P` and returns the degrees.
pub(crate) fn check_pair<D: Domain>(p_poly: &Poly<D>, q_poly: &Poly<D>) -> Result<(usize, usize)> {
    let (Some(p), Some(q)) = (p_poly.degree(), q_poly.degree()) else {
        return Err(Error::ZeroInput);
    };
    if p == 0 || q >= p {
        return Err(Error::DegreeOrder(format!(
            "need deg P >= 1 and deg Q < deg P, got {p} and {q}"
        )));
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational, UniPoly};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn syha_for_square_and_linear() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let q = UniPoly::from_ints(&[1, 1]);
        let s = syha_matrix(&p, &q, 0).unwrap();
        assert_eq!(s, m(&[&[1, 0, 0], &[0, 1, 1], &[1, 1, 0]]));
        // cofactor expansion along the first row: 1·(1·0 − 1·1)
        assert_eq!(s.determinant().unwrap(), int(-1));
    }

    #[test]
    fn shape_formula() {
        let p = UniPoly::from_ints(&[1, 2, 3, 4, 5]);
        let q = UniPoly::from_ints(&[1, 0, 1]);
        for j in 0..=2 {
            let s = syha_matrix(&p, &q, j).unwrap();
            assert_eq!((s.rows(), s.cols()), (4 + 2 - 2 * j, 4 + 2 - j));
            assert_eq!(s.cols() - s.rows(), j);
        }
        let s = syha_matrix(&p, &q, 2).unwrap();
        assert_eq!((s.rows(), s.cols()), (2, 4));
        assert!(matches!(syha_matrix(&p, &q, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 0, 5, 1], &[-3, 2, 1, 1]]);
        fn cofactor(rows: &[Vec<Rational>]) -> Rational {
            if rows.len() == 1 {
                return rows[0][0].clone();
            }
            let mut acc = int(0);
            for c in 0..rows.len() {
                let minor: Vec<Vec<Rational>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &rows[0][c] * cofactor(&minor);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let rows: Vec<Vec<Rational>> = (0..4).map(|r| a.row(r).to_vec()).collect();
        assert_eq!(a.determinant().unwrap(), cofactor(&rows));
        // zero pivot forcing a row swap
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant().unwrap(), int(-1));
    }
}
