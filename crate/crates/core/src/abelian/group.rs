use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use num_bigint::BigInt;

use super::matrix::Matrix;
use super::smith::{smith_normal_form, SmithDecomposition};
use crate::error::{Error, Result};
use crate::scalar::{reduce, Scalar};

/// Default bound on `|G|` for element enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 16;

static ENUMERATION_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_CAP);

/// Largest group order that element-wise routines will enumerate.
pub fn enumeration_cap() -> u64 {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

pub fn set_enumeration_cap(cap: u64) {
    ENUMERATION_CAP.store(cap, Ordering::Relaxed);
}

/// A finitely generated abelian group in canonical form
/// `Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ... | d_k` and
/// every `d_i >= 2`. Two groups are isomorphic iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup<Z> {
    free_rank: usize,
    torsion: Vec<Z>,
}

impl<Z: Scalar> FinAbGroup<Z> {
    /// Validates the canonical-form invariants.
    pub fn new(free_rank: usize, torsion: Vec<Z>) -> Result<Self> {
        if torsion.iter().any(|d| *d < Z::of(2)) {
            return Err(Error::Invalid("elementary divisors must be >= 2".into()));
        }
        if !torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])) {
            return Err(Error::Invalid("elementary divisors must form a divisibility chain".into()));
        }
        Ok(FinAbGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, torsion: Vec::new() }
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups
    /// (`0` stands for an infinite cyclic summand).
    pub fn from_cyclic_orders(orders: &[Z]) -> Self {
        let n = orders.len();
        let diag = Matrix::diagonal(n, n, orders);
        cokernel(&diag)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Z] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<Z> {
        self.is_finite().then(|| self.torsion.iter().fold(Z::one(), |acc, d| acc * d.clone()))
    }

    /// Generator orders in element-tuple order: torsion first, then free.
    pub fn as_cyclic_product(&self) -> CyclicProduct<Z> {
        let mut orders = self.torsion.clone();
        orders.extend(std::iter::repeat_n(Z::zero(), self.free_rank));
        CyclicProduct { orders }
    }

    /// All elements in lexicographic order; see [`CyclicProduct::elements`].
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Vec<Z>>> {
        self.as_cyclic_product().elements(cap)
    }
}

impl<Z: Scalar> fmt::Display for FinAbGroup<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|d| format!("Z/{d}")))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A direct sum of cyclic groups with a chosen (not necessarily canonical)
/// ordering, e.g. `Z/4 + Z/2` as written in a hand computation. An order of
/// 0 denotes `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicProduct<Z> {
    orders: Vec<Z>,
}

impl<Z: Scalar> CyclicProduct<Z> {
    pub fn new(orders: Vec<Z>) -> Result<Self> {
        if orders.iter().any(|o| o.is_negative()) {
            return Err(Error::Invalid("cyclic orders must be nonnegative".into()));
        }
        Ok(CyclicProduct { orders })
    }

    pub fn from_i64(orders: &[i64]) -> Self {
        Self::new(orders.iter().map(|&o| Z::of(o.abs())).collect()).expect("nonnegative orders")
    }

    pub fn orders(&self) -> &[Z] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|o| !o.is_zero())
    }

    pub fn order(&self) -> Option<Z> {
        self.is_finite().then(|| self.orders.iter().fold(Z::one(), |acc, d| acc * d.clone()))
    }

    pub fn canonical(&self) -> FinAbGroup<Z> {
        FinAbGroup::from_cyclic_orders(&self.orders)
    }

    /// Reduce each coordinate into `0..order`.
    pub fn normalize(&self, x: &[Z]) -> Vec<Z> {
        x.iter().zip(&self.orders).map(|(v, m)| reduce(v, m)).collect()
    }

    pub fn add(&self, x: &[Z], y: &[Z]) -> Vec<Z> {
        let sum: Vec<Z> = x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect();
        self.normalize(&sum)
    }

    pub fn neg(&self, x: &[Z]) -> Vec<Z> {
        let n: Vec<Z> = x.iter().map(|a| -a.clone()).collect();
        self.normalize(&n)
    }

    pub fn scale(&self, k: &Z, x: &[Z]) -> Vec<Z> {
        let s: Vec<Z> = x.iter().map(|a| k.clone() * a.clone()).collect();
        self.normalize(&s)
    }

    pub fn zero_element(&self) -> Vec<Z> {
        vec![Z::zero(); self.orders.len()]
    }

    pub fn is_zero_element(&self, x: &[Z]) -> bool {
        self.normalize(x).iter().all(Z::is_zero)
    }

    /// All elements, lexicographically ordered. Fails for infinite groups
    /// and for groups larger than `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Vec<Z>>> {
        if !self.is_finite() {
            let free_rank = self.orders.iter().filter(|o| o.is_zero()).count();
            return Err(Error::InfiniteGroup { free_rank });
        }
        let order = self.order().expect("finite");
        if order.to_u64().is_none_or(|o| o > cap) {
            return Err(Error::TooLarge { order: order.to_string(), cap });
        }
        let ranges: Vec<Vec<Z>> = self
            .orders
            .iter()
            .map(|m| {
                let n = m.to_u64().expect("bounded by cap");
                (0..n).map(|v| Z::of(v as i64)).collect()
            })
            .collect();
        if ranges.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        Ok(ranges.into_iter().multi_cartesian_product().collect())
    }

    /// Order of an element in a finite group.
    pub fn element_order(&self, x: &[Z]) -> Z {
        self.normalize(x).iter().zip(&self.orders).fold(Z::one(), |acc, (v, m)| {
            let g = v.gcd(m);
            let ord = if g.is_zero() { Z::one() } else { m.clone() / g };
            acc.lcm(&ord)
        })
    }
}

impl<Z: Scalar> fmt::Display for CyclicProduct<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.orders.iter().map(|o| if o.is_zero() { "Z".to_string() } else { format!("Z/{o}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel `Z^rows / colspan(P)` together with the Smith bookkeeping needed
/// to express maps on its canonical generators.
#[derive(Clone, Debug)]
pub struct Cokernel<Z> {
    pub smith: SmithDecomposition<Z>,
    pub group: FinAbGroup<Z>,
    /// Rows of the Smith basis whose divisor is not a unit, in order.
    pub generators: Vec<usize>,
}

impl<Z: Scalar> Cokernel<Z> {
    pub fn new(p: &Matrix<Z>) -> Self {
        let smith = smith_normal_form(p);
        let divisors = smith.row_divisors();
        let generators: Vec<usize> = (0..divisors.len()).filter(|&i| !divisors[i].is_one()).collect();
        let torsion: Vec<Z> = generators.iter().map(|&i| divisors[i].clone()).filter(|d| !d.is_zero()).collect();
        let free_rank = generators.len() - torsion.len();
        let group = FinAbGroup { free_rank, torsion };
        Cokernel { smith, group, generators }
    }

    /// Orders of the retained Smith generators (0 for free ones).
    pub fn generator_orders(&self) -> Vec<Z> {
        let divisors = self.smith.row_divisors();
        self.generators.iter().map(|&i| divisors[i].clone()).collect()
    }

    /// Coordinates of the class of `v` in `Z^rows` on the canonical generators.
    pub fn class_of(&self, v: &[Z]) -> Vec<Z> {
        let fv = self.smith.f.apply(v);
        let divisors = self.smith.row_divisors();
        self.generators.iter().map(|&i| reduce(&fv[i], &divisors[i])).collect()
    }

    /// Whether `v` lies in the column span of the presentation matrix.
    pub fn contains_relation(&self, v: &[Z]) -> bool {
        let fv = self.smith.f.apply(v);
        fv.iter().zip(self.smith.row_divisors()).all(
            |(x, d)| {
                if d.is_zero() {
                    x.is_zero()
                } else {
                    x.is_multiple_of(&d)
                }
            },
        )
    }
}

/// Canonical form of `Z^rows / colspan(P)`.
pub fn cokernel<Z: Scalar>(p: &Matrix<Z>) -> FinAbGroup<Z> {
    Cokernel::new(p).group
}

impl FinAbGroup<BigInt> {
    pub fn from_small(free_rank: usize, torsion: &[i64]) -> Result<Self> {
        Self::new(free_rank, torsion.iter().map(|&d| BigInt::from(d)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(free: usize, torsion: &[i64]) -> FinAbGroup<i64> {
        FinAbGroup::new(free, torsion.to_vec()).unwrap()
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&Matrix::<i64>::zeros(1, 1)), g(1, &[]));
        assert_eq!(cokernel(&Matrix::<i64>::from_i64(&[[-2, 0], [0, 0]])), g(1, &[2]));
        let dihedral = Matrix::<i64>::from_i64(&[[1, 1, 1, 0], [2, 0, 0, 1], [0, -2, 0, 1], [0, 0, -4, 3]]);
        assert_eq!(cokernel(&dihedral), g(0, &[2, 6]));
    }

    #[test]
    fn canonical_validation() {
        assert!(FinAbGroup::<i64>::new(0, vec![1]).is_err());
        assert!(FinAbGroup::<i64>::new(0, vec![2, 3]).is_err());
        assert!(FinAbGroup::<i64>::new(0, vec![0]).is_err());
        assert_eq!(FinAbGroup::<i64>::from_cyclic_orders(&[4, 2]), g(0, &[2, 4]));
        assert_eq!(FinAbGroup::<i64>::from_cyclic_orders(&[4, 6]), g(0, &[2, 12]));
        assert_eq!(FinAbGroup::<i64>::from_cyclic_orders(&[1, 0, 3]), g(1, &[3]));
    }

    #[test]
    fn enumeration() {
        assert_eq!(g(0, &[2]).enumerate_elements(DEFAULT_ENUMERATION_CAP).unwrap(), vec![vec![0], vec![1]]);
        let elems = g(0, &[4, 4]).enumerate_elements(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(elems.len(), 16);
        assert_eq!(elems[1], vec![0, 1]);
        assert_eq!(g(0, &[2, 2, 4]).enumerate_elements(DEFAULT_ENUMERATION_CAP).unwrap().len(), 16);
        assert_eq!(g(0, &[]).enumerate_elements(1).unwrap(), vec![Vec::<i64>::new()]);
        assert!(matches!(g(0, &[4, 4]).enumerate_elements(15), Err(Error::TooLarge { .. })));
        assert!(matches!(g(1, &[2]).enumerate_elements(100), Err(Error::InfiniteGroup { free_rank: 1 })));
    }

    #[test]
    fn display() {
        assert_eq!(g(0, &[4, 4]).to_string(), "Z/4 + Z/4");
        assert_eq!(g(1, &[2]).to_string(), "Z + Z/2");
        assert_eq!(g(0, &[]).to_string(), "0");
        assert_eq!(CyclicProduct::<i64>::from_i64(&[4, 2]).to_string(), "Z/4 + Z/2");
    }

    #[test]
    fn element_orders() {
        let h = CyclicProduct::<i64>::from_i64(&[2, 4]);
        assert_eq!(h.element_order(&[1, 2]), 2);
        assert_eq!(h.element_order(&[1, 1]), 4);
        assert_eq!(h.element_order(&[0, 0]), 1);
    }
}
