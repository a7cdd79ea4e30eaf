use std::collections::BTreeSet;
use std::fmt;

use super::group::{enumeration_cap, Cokernel, CyclicProduct};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{reduce, Scalar};

/// A homomorphism between direct sums of cyclic groups, written as a matrix
/// on the chosen generators (column `j` is the image of source generator `j`).
/// Entries are kept reduced modulo the target orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom<Z> {
    source: CyclicProduct<Z>,
    target: CyclicProduct<Z>,
    matrix: Matrix<Z>,
}

impl<Z: Scalar> GroupHom<Z> {
    /// Checks that the matrix respects the relations of the source:
    /// `m_j * column_j == 0` in the target for every generator of order `m_j`.
    pub fn new(source: CyclicProduct<Z>, target: CyclicProduct<Z>, matrix: Matrix<Z>) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::Shape(format!(
                "{}x{} matrix for a map from rank {} to rank {}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        for (j, m) in source.orders().iter().enumerate() {
            let image: Vec<Z> = matrix.column(j).iter().map(|x| x.clone() * m.clone()).collect();
            if !target.is_zero_element(&image) {
                return Err(Error::WellDefinedness { column: j });
            }
        }
        let mut reduced = matrix;
        for i in 0..reduced.rows() {
            let n = target.orders()[i].clone();
            for j in 0..reduced.cols() {
                reduced[(i, j)] = reduce(&reduced[(i, j)], &n);
            }
        }
        Ok(GroupHom { source, target, matrix: reduced })
    }

    pub fn identity(group: CyclicProduct<Z>) -> Self {
        let n = group.rank();
        GroupHom::new(group.clone(), group, Matrix::identity(n)).expect("identity is well defined")
    }

    pub fn source(&self) -> &CyclicProduct<Z> {
        &self.source
    }

    pub fn target(&self) -> &CyclicProduct<Z> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<Z> {
        &self.matrix
    }

    pub fn apply(&self, x: &[Z]) -> Vec<Z> {
        self.target.normalize(&self.matrix.apply(x))
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &GroupHom<Z>) -> Result<GroupHom<Z>> {
        if inner.target != self.source {
            return Err(Error::Shape("composition of maps with mismatched groups".into()));
        }
        GroupHom::new(inner.source.clone(), self.target.clone(), &self.matrix * &inner.matrix)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Image as a set of normalized target elements (finite source only).
    pub fn image(&self) -> Result<BTreeSet<Vec<Z>>> {
        Ok(self.source.elements(enumeration_cap())?.iter().map(|x| self.apply(x)).collect())
    }

    /// All source elements mapping to `y`.
    pub fn preimage(&self, y: &[Z]) -> Result<BTreeSet<Vec<Z>>> {
        let y = self.target.normalize(y);
        Ok(self.source.elements(enumeration_cap())?.into_iter().filter(|x| self.apply(x) == y).collect())
    }

    pub fn is_injective(&self) -> Result<bool> {
        let src = self.source.elements(enumeration_cap())?;
        Ok(src.iter().filter(|x| self.target.is_zero_element(&self.apply(x))).count() == 1)
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        if !self.source.is_finite() || !self.target.is_finite() {
            return Err(Error::InfiniteGroup { free_rank: 1 });
        }
        Ok(self.source.order() == self.target.order() && self.is_injective()?)
    }

    /// The induced map `Ext(target, Z) -> Ext(source, Z)`, using
    /// `Ext(Z/n, Z) = Z/n`. A component `k: Z/m -> Z/n` dualizes to
    /// multiplication by `k*m/n` from `Z/n` to `Z/m`.
    pub fn ext_dual(&self) -> Result<GroupHom<Z>> {
        for g in [&self.source, &self.target] {
            if !g.is_finite() {
                let free_rank = g.orders().iter().filter(|o| o.is_zero()).count();
                return Err(Error::InfiniteGroup { free_rank });
            }
        }
        let (rows, cols) = (self.source.rank(), self.target.rank());
        let mut dual = Matrix::zeros(rows, cols);
        for j in 0..rows {
            let m = &self.source.orders()[j];
            for i in 0..cols {
                let n = &self.target.orders()[i];
                let k = &self.matrix[(i, j)];
                // well-definedness guarantees n | k*m
                dual[(j, i)] = k.clone() * m.clone() / n.clone();
            }
        }
        GroupHom::new(self.target.clone(), self.source.clone(), dual)
    }
}

impl<Z: Scalar> fmt::Display for GroupHom<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.matrix, self.source, self.target)
    }
}

/// The map `coker(P) -> coker(P')` induced by `h: Z^rows(P) -> Z^rows(P')`,
/// on canonical Smith generators. Requires `h(Im P) ⊆ Im P'`.
pub fn induced_map<Z: Scalar>(p: &Matrix<Z>, p_target: &Matrix<Z>, h: &Matrix<Z>) -> Result<GroupHom<Z>> {
    let src = Cokernel::new(p);
    let dst = Cokernel::new(p_target);
    induced_map_between(&src, &dst, h)
}

/// As [`induced_map`], reusing precomputed cokernels.
pub fn induced_map_between<Z: Scalar>(src: &Cokernel<Z>, dst: &Cokernel<Z>, h: &Matrix<Z>) -> Result<GroupHom<Z>> {
    let full = conjugated_map(src, dst, h)?;
    let block = full.select(&dst.generators, &src.generators);
    GroupHom::new(CyclicProduct::new(src.generator_orders())?, CyclicProduct::new(dst.generator_orders())?, block)
}

/// The full matrix `F' h F^{-1}` on Smith bases, after checking
/// well-definedness.
pub fn conjugated_map<Z: Scalar>(src: &Cokernel<Z>, dst: &Cokernel<Z>, h: &Matrix<Z>) -> Result<Matrix<Z>> {
    let (p, p_target) = (&src.smith.p, &dst.smith.p);
    if h.rows() != p_target.rows() || h.cols() != p.rows() {
        return Err(Error::Shape(format!("h is {}x{}, expected {}x{}", h.rows(), h.cols(), p_target.rows(), p.rows())));
    }
    let hp = h * p;
    for j in 0..hp.cols() {
        if !dst.contains_relation(&hp.column(j)) {
            return Err(Error::WellDefinedness { column: j });
        }
    }
    Ok(&(&dst.smith.f * h) * &src.smith.f_inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(o: &[i64]) -> CyclicProduct<i64> {
        CyclicProduct::from_i64(o)
    }

    #[test]
    fn ill_defined_rejected() {
        // 1: Z/2 -> Z/4 is not a homomorphism
        let err = GroupHom::new(cp(&[2]), cp(&[4]), Matrix::from_i64(&[[1]])).unwrap_err();
        assert_eq!(err, Error::WellDefinedness { column: 0 });
        assert!(GroupHom::new(cp(&[2]), cp(&[4]), Matrix::from_i64(&[[2]])).is_ok());
    }

    #[test]
    fn ext_dual_examples() {
        let doubling = GroupHom::new(cp(&[2]), cp(&[4]), Matrix::from_i64(&[[2]])).unwrap();
        let quotient = GroupHom::new(cp(&[4]), cp(&[2]), Matrix::from_i64(&[[1]])).unwrap();
        assert_eq!(doubling.ext_dual().unwrap(), quotient);
        assert_eq!(quotient.ext_dual().unwrap(), doubling);

        let id = GroupHom::identity(cp(&[4, 4]));
        assert_eq!(id.ext_dual().unwrap(), id);

        let zero = GroupHom::new(cp(&[2]), cp(&[2]), Matrix::from_i64(&[[0]])).unwrap();
        assert!(zero.ext_dual().unwrap().is_zero());

        let infinite = GroupHom::new(cp(&[0]), cp(&[2]), Matrix::from_i64(&[[1]])).unwrap();
        assert!(matches!(infinite.ext_dual(), Err(Error::InfiniteGroup { free_rank: 1 })));
    }

    #[test]
    fn induced_identity_on_z4() {
        let p = Matrix::<i64>::from_i64(&[[4]]);
        let map = induced_map(&p, &p, &Matrix::identity(1)).unwrap();
        assert_eq!(map, GroupHom::identity(cp(&[4])));
    }

    #[test]
    fn induced_requires_well_definedness() {
        let p = Matrix::<i64>::from_i64(&[[2]]);
        let q = Matrix::<i64>::from_i64(&[[4]]);
        assert!(matches!(induced_map(&p, &q, &Matrix::identity(1)), Err(Error::WellDefinedness { .. })));
        let doubled = induced_map(&p, &q, &Matrix::from_i64(&[[2]])).unwrap();
        assert_eq!(doubled.matrix(), &Matrix::from_i64(&[[2]]));
    }

    #[test]
    fn images_and_preimages() {
        let f = GroupHom::new(cp(&[4, 2]), cp(&[4, 4]), Matrix::from_i64(&[[1, 0], [0, 2]])).unwrap();
        assert_eq!(f.image().unwrap().len(), 8);
        assert!(f.is_injective().unwrap());
        assert!(!f.is_isomorphism().unwrap());
        assert_eq!(f.preimage(&[2, 2]).unwrap().into_iter().collect::<Vec<_>>(), vec![vec![2, 1]]);
    }
}
