//! Exact counters.
//!
//! Dynamic programs run first on `u128` with checked arithmetic and are
//! rerun on [`BigCount`] when any step overflows.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

/// Exact nonnegative count.
pub type BigCount = BigUint;
/// Exact signed count, used for linear combinations.
pub type SignedCount = BigInt;

/// Arithmetic used by the counting dynamic programs.
pub(crate) trait Tally: Clone + Send + Sync + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn into_big(self) -> BigCount;
}

macro_rules! checked_tally {
    ($t:ty) => {
        impl Tally for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn add(&self, other: &Self) -> Option<Self> {
                self.checked_add(*other)
            }
            fn mul(&self, other: &Self) -> Option<Self> {
                self.checked_mul(*other)
            }
            fn into_big(self) -> BigCount {
                BigUint::from(self)
            }
        }
    };
}

checked_tally!(u64);
checked_tally!(u128);

impl Tally for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn into_big(self) -> BigCount {
        self
    }
}

/// A computation generic over the counter type. `None` signals overflow.
pub(crate) trait Tallied {
    fn run<T: Tally>(&self) -> Option<T>;
}

/// Runs `job` on `u64`, then `u128`, then big integers, returning the
/// first result that did not overflow.
pub(crate) fn with_promotion(job: &impl Tallied) -> BigCount {
    if let Some(v) = job.run::<u64>() {
        return v.into_big();
    }
    log::debug!("u64 overflow, retrying with u128");
    if let Some(v) = job.run::<u128>() {
        return v.into_big();
    }
    log::debug!("u128 overflow, retrying with big integers");
    job.run::<BigUint>()
        .expect("big integer arithmetic never overflows")
}

/// Converts a signed count to an unsigned one, if nonnegative.
pub fn to_unsigned(v: &SignedCount) -> Option<BigCount> {
    v.to_biguint()
}

/// Lossy conversion used only for logging and guards.
pub fn approx_f64(v: &BigCount) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}
