//! Negative continued fractions `[B; x1, ..., xn]^- = B - 1/(x1 - 1/(... - 1/xn))`
//! and the 2x2 matrix words that turn a rational surgery framing into a
//! linear plumbing chain.

use num_rational::Ratio;

use crate::abelian::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Canonical negative continued fraction: `head = ceil(p/q)` and every tail
/// entry at least 2.
#[derive(Clone, Debug)]
pub struct NegContFrac<Z> {
    pub head: Z,
    pub tail: Vec<Z>,
    pub value: Ratio<Z>,
}

impl<Z: Scalar> NegContFrac<Z> {
    /// All coefficients `[B, x1, ..., xn]`.
    pub fn coefficients(&self) -> Vec<Z> {
        std::iter::once(self.head.clone()).chain(self.tail.iter().cloned()).collect()
    }

    /// Evaluates the fraction from the innermost term outwards.
    pub fn evaluate(&self) -> Ratio<Z> {
        evaluate(&self.coefficients())
    }
}

/// Evaluates `[c0; c1, ..., cn]^-`. Panics on a zero partial denominator.
pub fn evaluate<Z: Scalar>(coeffs: &[Z]) -> Ratio<Z> {
    let mut iter = coeffs.iter().rev();
    let Some(last) = iter.next() else {
        return Ratio::from_integer(Z::zero());
    };
    iter.fold(Ratio::from_integer(last.clone()), |acc, c| Ratio::from_integer(c.clone()) - acc.recip())
}

/// Expands `p/q` (with `q >= 1`) as a canonical negative continued fraction.
pub fn expand<Z: Scalar>(p: &Z, q: &Z) -> Result<NegContFrac<Z>> {
    if !q.is_positive() {
        return Err(Error::Invalid(format!("denominator {q} must be positive")));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::Invalid(format!("{p}/{q} is not in lowest terms")));
    }
    let head = p.div_ceil(q);
    let mut tail = Vec::new();
    // p/q = head - 1/r with r = q / (head*q - p) > 1
    let (mut num, mut den) = (q.clone(), head.clone() * q.clone() - p.clone());
    while !den.is_zero() {
        let x = num.div_ceil(&den);
        let rem = x.clone() * den.clone() - num;
        tail.push(x);
        num = den;
        den = rem;
    }
    Ok(NegContFrac { head, tail, value: Ratio::new(p.clone(), q.clone()) })
}

/// Ordered factors `[[x, -1], [1, 0]]` and their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixWord<Z> {
    pub factors: Vec<Matrix<Z>>,
    pub product: Matrix<Z>,
}

impl<Z: Scalar> MatrixWord<Z> {
    pub fn from_factors(factors: Vec<Matrix<Z>>) -> Self {
        let product = factors.iter().fold(Matrix::identity(2), |acc, f| &acc * f);
        MatrixWord { factors, product }
    }

    /// Left-multiplies the word by one more factor.
    pub fn prepend(&self, m: Matrix<Z>) -> Self {
        let mut factors = vec![m];
        factors.extend(self.factors.iter().cloned());
        Self::from_factors(factors)
    }
}

pub fn chain_factor<Z: Scalar>(x: &Z) -> Matrix<Z> {
    Matrix::from_rows(vec![vec![x.clone(), Z::of(-1)], vec![Z::one(), Z::zero()]]).expect("2x2")
}

/// Quarter turn `[[0, -1], [1, 0]]`.
pub fn rotation<Z: Scalar>() -> Matrix<Z> {
    Matrix::from_i64(&[[0, -1], [1, 0]])
}

pub fn cf_matrix<Z: Scalar>(coeffs: &[Z]) -> MatrixWord<Z> {
    MatrixWord::from_factors(coeffs.iter().map(chain_factor).collect())
}

/// The chain data realizing the Sol manifold with gluing matrix
/// `[[a, c], [d, b]]` as a splice of two dihedral pieces.
#[derive(Clone, Debug)]
pub struct SpliceChain<Z> {
    /// Expansion of `-b/c`.
    pub expansion: NegContFrac<Z>,
    /// Integer framing replacing `a/c` on the second piece.
    pub framing: Z,
    pub f1: MatrixWord<Z>,
    pub f2: MatrixWord<Z>,
    /// Whether the closed formula `A = a c' - b' d`, with `(c', b')` the
    /// second row of `cf_matrix([B, x1, ..., xn])`, reproduces `framing`.
    pub closed_formula_agrees: bool,
}

/// Builds the splice chain and verifies `f1^{-1} A_phi f2 = [[0, 1], [1, 0]]`
/// before returning.
pub fn splice_chain<Z: Scalar>(a: &Z, b: &Z, c: &Z, d: &Z) -> Result<SpliceChain<Z>> {
    let det = a.clone() * b.clone() - c.clone() * d.clone();
    if det != Z::of(-1) {
        return Err(Error::Determinant { det: det.to_string() });
    }
    if a.is_zero() || b.is_zero() || d.is_zero() {
        return Err(Error::Degenerate(format!("a, b and d must be nonzero (a={a}, b={b}, d={d})")));
    }
    if !c.is_positive() {
        return Err(Error::Invalid(format!("c = {c} must be positive; normalize first")));
    }
    let expansion = expand(&-b.clone(), c)?;
    let word = cf_matrix(&expansion.coefficients());
    let w = &word.product;
    // First column of the word is (-b, c). The gluing identity then reads
    //   w[1][1] = a - c*A  and  w[0][1] = b*A - d,
    // and det(word) = 1 makes the two equations equivalent.
    let numerator = a.clone() - w[(1, 1)].clone();
    if !numerator.is_multiple_of(c) {
        return Err(Error::Invalid("no integer framing solves the gluing identity".into()));
    }
    let framing = numerator / c.clone();
    let closed_formula_agrees = a.clone() * w[(1, 0)].clone() - w[(1, 1)].clone() * d.clone() == framing;

    let f1 = word.prepend(rotation());
    let f2 = MatrixWord::from_factors(vec![rotation(), chain_factor(&framing)]);
    let chain = SpliceChain { expansion, framing, f1, f2, closed_formula_agrees };
    if !chain.gluing_identity_holds(a, b, c, d) {
        return Err(Error::Invalid("gluing identity failed".into()));
    }
    Ok(chain)
}

impl<Z: Scalar> SpliceChain<Z> {
    /// `f1^{-1} * A_phi * f2 == [[0, 1], [1, 0]]`, checked as
    /// `A_phi * f2 == f1 * [[0, 1], [1, 0]]` (f1 is unimodular).
    pub fn gluing_identity_holds(&self, a: &Z, b: &Z, c: &Z, d: &Z) -> bool {
        let gluing = gluing_matrix(a, b, c, d);
        let swap = Matrix::from_i64(&[[0, 1], [1, 0]]);
        self.f1.product.is_unimodular() && &gluing * &self.f2.product == &self.f1.product * &swap
    }

    /// Central chain weights `B, x1, ..., xn, A`.
    pub fn chain_weights(&self) -> Vec<Z> {
        let mut w = self.expansion.coefficients();
        w.push(self.framing.clone());
        w
    }
}

/// `A_phi = [[a, c], [d, b]]`
pub fn gluing_matrix<Z: Scalar>(a: &Z, b: &Z, c: &Z, d: &Z) -> Matrix<Z> {
    Matrix::from_rows(vec![vec![a.clone(), c.clone()], vec![d.clone(), b.clone()]]).expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Ratio<i64> {
        Ratio::new(p, q)
    }

    #[test]
    fn expansions() {
        let e = expand(&-3i64, &1).unwrap();
        assert_eq!((e.head, e.tail.clone()), (-3, vec![]));
        let e = expand(&-7i64, &2).unwrap();
        assert_eq!((e.head, e.tail.clone()), (-3, vec![2]));
        assert_eq!(e.evaluate(), r(-7, 2));
        let e = expand(&5i64, &3).unwrap();
        assert_eq!((e.head, e.tail.clone()), (2, vec![3]));
        assert_eq!(e.evaluate(), r(5, 3));
        assert!(expand(&4i64, &2).is_err());
        assert!(expand(&4i64, &0).is_err());
    }

    #[test]
    fn matrix_words() {
        assert_eq!(cf_matrix::<i64>(&[]).product, Matrix::identity(2));
        assert_eq!(cf_matrix(&[7i64]).product, Matrix::from_i64(&[[7, -1], [1, 0]]));
        assert_eq!(cf_matrix(&[2i64, 3]).product, Matrix::from_i64(&[[5, -2], [3, -1]]));
    }

    #[test]
    fn splice_examples() {
        for (a, b, c, d) in [(1i64, 2, 1, 3), (2, 3, 1, 7), (1, 1, 1, 2), (2, 4, 3, 3), (3, 5, 2, 8)] {
            let chain = splice_chain(&a, &b, &c, &d).unwrap();
            assert!(chain.gluing_identity_holds(&a, &b, &c, &d));
            assert_eq!(chain.expansion.value, r(-b, c));
        }
        let chain = splice_chain(&1i64, &2, &1, &3).unwrap();
        assert_eq!(chain.chain_weights(), vec![-2, 1]);
        assert!(chain.closed_formula_agrees);
    }

    #[test]
    fn splice_errors() {
        assert!(matches!(splice_chain(&1i64, &2, &1, &2), Err(Error::Determinant { .. })));
        assert!(matches!(splice_chain(&0i64, &1, &1, &1), Err(Error::Degenerate(_))));
        assert!(matches!(splice_chain(&-1i64, &-2, &-1, &-3), Err(Error::Invalid(_))));
    }
}
