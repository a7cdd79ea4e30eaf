//! Exact homology, spin^c and d-invariant computations for Sol torus
//! semi-bundles and dihedral 3-manifolds, and the homology-cobordism
//! classification of Sol manifolds with `|H1| = 16`.
//!
//! Everything is generic over an exact integer [`Scalar`]; the aliases below
//! fix it to `BigInt`, which is what the CLI uses.

pub mod abelian;
pub mod classify;
pub mod cobordism;
pub mod contfrac;
pub mod dinv;
pub mod error;
pub mod manifolds;
pub mod scalar;
pub mod spinc;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

use num_bigint::BigInt;

pub type IntMatrix = abelian::Matrix<BigInt>;
pub type SmallMatrix = abelian::Matrix<i64>;
pub type Group = abelian::FinAbGroup<BigInt>;
pub type Hom = abelian::GroupHom<BigInt>;
pub type Smith = abelian::SmithDecomposition<BigInt>;
pub type Rational = num_rational::BigRational;
pub type Sol = manifolds::SolManifold<BigInt>;
pub type Dihedral = manifolds::DihedralManifold<BigInt>;
