//! Exact integer coefficient types.
//!
//! Series arithmetic is generic over [`Coeff`]. Machine integers use checked
//! arithmetic everywhere except inside kernels whose inputs have already been
//! bounded (see [`Coeff::axpy_in_bound`]), so overflow is always reported and
//! never wraps into a wrong count.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{
    CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero,
};

pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Ord
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
    /// `dst[i] += c * src[i]` for every `i`.
    ///
    /// The caller has proven that no partial sum leaves the representable
    /// range, so machine integers may skip the overflow checks here.
    fn axpy_in_bound(dst: &mut [Self], src: &[Self], c: &Self);

    /// `self += a * b` under the same no-overflow guarantee.
    fn mul_add_in_bound(&mut self, a: &Self, b: &Self);

    /// The largest magnitude for which the unchecked kernels are allowed.
    /// `None` means unbounded.
    fn bound() -> Option<Self>;
}

macro_rules! impl_machine_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            #[inline]
            fn axpy_in_bound(dst: &mut [Self], src: &[Self], c: &Self) {
                let c = *c;
                if c == 1 {
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d = d.wrapping_add(*s);
                    }
                } else {
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d = d.wrapping_add(s.wrapping_mul(c));
                    }
                }
            }

            #[inline]
            fn mul_add_in_bound(&mut self, a: &Self, b: &Self) {
                *self = self.wrapping_add(a.wrapping_mul(*b));
            }

            fn bound() -> Option<Self> {
                Some(<$t>::MAX)
            }
        }
    };
}

impl_machine_coeff!(i64);
impl_machine_coeff!(i128);

impl Coeff for BigInt {
    fn axpy_in_bound(dst: &mut [Self], src: &[Self], c: &Self) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d += s * c;
            }
        }
    }

    fn mul_add_in_bound(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn bound() -> Option<Self> {
        None
    }
}

/// Converts a small count into a coefficient. Counts always fit in `i64`.
pub(crate) fn from_count<T: Coeff>(n: i64) -> T {
    T::from_i64(n).expect("every coefficient type holds i64 values")
}
