//! The integer scalar abstraction shared by every module.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable as a matrix entry.
///
/// Implemented for `i64`, `i128` and `BigInt`. The machine-width types are
/// meant for sweeps over small parameters; overflow there panics in debug
/// builds rather than wrapping.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
    /// Lift a machine integer.
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type holds an i64")
    }

    /// Convert to `i64` when the value fits.
    fn small(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

/// Least nonnegative residue of `x` modulo `m`; `m == 0` leaves `x` unchanged.
pub fn reduce<Z: Scalar>(x: &Z, m: &Z) -> Z {
    if m.is_zero() {
        x.clone()
    } else {
        x.mod_floor(&m.abs())
    }
}
