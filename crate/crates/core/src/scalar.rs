//! Integer scalars for counts and polynomial coefficients.
//!
//! Everything that counts (α, κ, Tutte coefficients) is generic over
//! [`Count`]; machine integers detect overflow through `checked_*`, and
//! [`num_bigint::BigUint`] never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::error::{Error, Result};

pub trait Count: Clone + Debug + Display + Eq + Ord + Hash + Zero + One + CheckedAdd + CheckedMul {
    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }

    fn try_pow(&self, exp: usize) -> Result<Self> {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Count for T where T: Clone + Debug + Display + Eq + Ord + Hash + Zero + One + CheckedAdd + CheckedMul {}
