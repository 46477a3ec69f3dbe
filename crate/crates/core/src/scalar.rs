//! Scalar types the seminorm and homology code is generic over.
//!
//! Everything in [`crate::satellite`] is written against [`Scalar`], so the
//! same formulas evaluate exactly over [`Ratio<i64>`] / [`BigRational`] or
//! approximately over `f32` / `f64` (handy for plotting).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed ordered field element.
pub trait Scalar:
    Clone + PartialOrd + Signed + FromPrimitive + ToPrimitive + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Smallest integer `>= self`.
    fn ceil_int(&self) -> i64;

    /// Largest integer `<= self`.
    fn floor_int(&self) -> i64;

    fn is_integer(&self) -> bool {
        self.ceil_int() == self.floor_int()
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn ceil_int(&self) -> i64 {
        *self.ceil().numer()
    }

    fn floor_int(&self) -> i64 {
        *self.floor().numer()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn ceil_int(&self) -> i64 {
        big_to_i64(self.ceil().numer())
    }

    fn floor_int(&self) -> i64 {
        big_to_i64(self.floor().numer())
    }
}

fn big_to_i64(n: &BigInt) -> i64 {
    n.to_i64().expect("integer part fits in i64")
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn ceil_int(&self) -> i64 {
                self.ceil() as i64
            }

            fn floor_int(&self) -> i64 {
                self.floor() as i64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
