//! Arbitrary-precision nonnegative integers.
//!
//! Every quantity the crate manipulates (inputs, binomial coefficients,
//! Macaulay values) is a [`Nat`]. Arithmetic is exact; there is no wraparound
//! to worry about, only memory.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A nonnegative integer of arbitrary size.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(pub(crate) BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self - rhs`, or `None` if the result would be negative.
    pub fn checked_sub(&self, rhs: &Nat) -> Option<Nat> {
        if self.0 >= rhs.0 {
            Some(Nat(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidInput(format!(
                "not a nonnegative decimal integer: {s:?}"
            )));
        }
        let v = BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| Error::InvalidInput(format!("unparseable integer: {s:?}")))?;
        Ok(Nat(v))
    }
}

macro_rules! nat_from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Nat {
            fn from(v: $t) -> Self {
                Nat(BigUint::from(v))
            }
        }
    )*};
}

nat_from_prim!(u8, u16, u32, u64, u128, usize);

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl Add<&Nat> for &Nat {
    type Output = Nat;
    fn add(self, rhs: &Nat) -> Nat {
        Nat(&self.0 + &rhs.0)
    }
}

impl Add<Nat> for Nat {
    type Output = Nat;
    fn add(self, rhs: Nat) -> Nat {
        Nat(self.0 + rhs.0)
    }
}

impl Add<&Nat> for Nat {
    type Output = Nat;
    fn add(self, rhs: &Nat) -> Nat {
        Nat(self.0 + &rhs.0)
    }
}

impl Add<u32> for &Nat {
    type Output = Nat;
    fn add(self, rhs: u32) -> Nat {
        Nat(&self.0 + rhs)
    }
}

impl Mul<&Nat> for &Nat {
    type Output = Nat;
    fn mul(self, rhs: &Nat) -> Nat {
        Nat(&self.0 * &rhs.0)
    }
}

impl Sum for Nat {
    fn sum<I: Iterator<Item = Nat>>(iter: I) -> Nat {
        Nat(iter.map(|n| n.0).sum())
    }
}

impl<'a> Sum<&'a Nat> for Nat {
    fn sum<I: Iterator<Item = &'a Nat>>(iter: I) -> Nat {
        Nat(iter.map(|n| &n.0).sum())
    }
}

impl PartialEq<u32> for Nat {
    fn eq(&self, other: &u32) -> bool {
        self.0 == BigUint::from(*other)
    }
}

// Serialized as a decimal string so consumers never lose width.
impl Serialize for Nat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Nat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
