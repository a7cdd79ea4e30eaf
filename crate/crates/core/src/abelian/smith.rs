use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A Smith normal form `D = F * P * C` together with `F^{-1}`.
///
/// `F` (rows x rows) and `C` (cols x cols) are unimodular. The diagonal of
/// `D` is nonnegative, each entry divides the next, and zeros come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<Z> {
    pub d: Matrix<Z>,
    pub f: Matrix<Z>,
    pub c: Matrix<Z>,
    pub p: Matrix<Z>,
    pub f_inv: Matrix<Z>,
}

/// Computes the Smith normal form with both transformation matrices.
///
/// Pivot rule: the nonzero entry of smallest absolute value in the active
/// block, ties broken by lowest `(row, col)`. Output is a pure function of
/// the input.
pub fn smith_normal_form<Z: Scalar>(p: &Matrix<Z>) -> SmithDecomposition<Z> {
    let (m, n) = (p.rows(), p.cols());
    let mut a = p.clone();
    let mut f = Matrix::identity(m);
    let mut f_inv = Matrix::identity(m);
    let mut c = Matrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                return finish(a, f, c, p, f_inv);
            };
            a.swap_rows(t, pi);
            f.swap_rows(t, pi);
            f_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            c.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&pivot);
                let neg_q = -q.clone();
                a.add_row_multiple(i, t, &neg_q);
                f.add_row_multiple(i, t, &neg_q);
                f_inv.add_col_multiple(t, i, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                c.add_col_multiple(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Row t and column t are clear; enforce divisibility on the rest.
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = Z::one();
                    a.add_row_multiple(t, i, &one);
                    f.add_row_multiple(t, i, &one);
                    f_inv.add_col_multiple(i, t, &-one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            f.negate_row(t);
            f_inv.negate_col(t);
        }
    }
    finish(a, f, c, p, f_inv)
}

fn find_pivot<Z: Scalar>(a: &Matrix<Z>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Z, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(b, _, _)| mag < *b) {
                best = Some((mag, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn finish<Z: Scalar>(
    d: Matrix<Z>,
    f: Matrix<Z>,
    c: Matrix<Z>,
    p: &Matrix<Z>,
    f_inv: Matrix<Z>,
) -> SmithDecomposition<Z> {
    SmithDecomposition { d, f, c, p: p.clone(), f_inv }
}

impl<Z: Scalar> SmithDecomposition<Z> {
    /// One divisor per row of `P`: `D[i][i]` for `i < min(rows, cols)`, and 0
    /// for the remaining rows (free generators of the cokernel).
    pub fn row_divisors(&self) -> Vec<Z> {
        let k = self.d.rows().min(self.d.cols());
        (0..self.d.rows()).map(|i| if i < k { self.d[(i, i)].clone() } else { Z::zero() }).collect()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal_entries().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks every structural claim of the decomposition.
    pub fn verify(&self) -> bool {
        let fpc = &(&self.f * &self.p) * &self.c;
        if fpc != self.d || !self.d.is_diagonal() {
            return false;
        }
        if !self.f.is_unimodular() || !self.c.is_unimodular() {
            return false;
        }
        if &self.f * &self.f_inv != Matrix::identity(self.f.rows()) {
            return false;
        }
        let diag = self.d.diagonal_entries();
        if diag.iter().any(|x| x.is_negative()) {
            return false;
        }
        diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) })
    }
}

/// Inverse of a unimodular square matrix, via its Smith form
/// (`F M C = I` gives `M^{-1} = C F`).
pub fn unimodular_inverse<Z: Scalar>(m: &Matrix<Z>) -> Result<Matrix<Z>> {
    if !m.is_square() {
        return Err(Error::Shape(format!("inverse of a {}x{} matrix", m.rows(), m.cols())));
    }
    let snf = smith_normal_form(m);
    if snf.d != Matrix::identity(m.rows()) {
        return Err(Error::Invalid("matrix is not unimodular".into()));
    }
    Ok(&snf.c * &snf.f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn identity_is_fixed() {
        let snf = smith_normal_form(&Matrix::<i64>::identity(2));
        assert_eq!(snf.d, Matrix::identity(2));
        assert_eq!(snf.f, Matrix::identity(2));
        assert_eq!(snf.c, Matrix::identity(2));
    }

    #[test]
    fn non_square_and_zero() {
        let p = Matrix::<i64>::from_i64(&[[2, 4, 4], [-6, 6, 12]]);
        let snf = smith_normal_form(&p);
        assert!(snf.verify());
        assert_eq!(snf.d.diagonal_entries(), vec![2, 6]);

        let z = Matrix::<i64>::zeros(3, 2);
        let snf = smith_normal_form(&z);
        assert!(snf.verify());
        assert_eq!(snf.row_divisors(), vec![0, 0, 0]);
        assert_eq!(snf.rank(), 0);
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) is diagonal but not in Smith form.
        let p = Matrix::<BigInt>::from_i64(&[[2, 0], [0, 3]]);
        let snf = smith_normal_form(&p);
        assert!(snf.verify());
        assert_eq!(snf.d.diagonal_entries(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn deterministic() {
        let p = Matrix::<i64>::from_i64(&[[4, 6, -2], [8, 3, 5], [0, 9, 7]]);
        assert_eq!(smith_normal_form(&p), smith_normal_form(&p));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::<i64>::from_i64(&[[0, 0, 0, 1], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, -1, 2]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(&m * &inv, Matrix::identity(4));
        assert!(unimodular_inverse(&Matrix::<i64>::from_i64(&[[2, 0], [0, 1]])).is_err());
    }
}
