use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RepError;

/// An exact half-integer, stored as twice its value.
///
/// `j = 3/2` is held as `twice = 3`. Ordering and arithmetic are integer
/// operations on the doubled value, so no rounding ever happens. Serialized
/// as the string `"3/2"`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i32) -> Self {
        HalfInt { twice: 2 * value }
    }

    /// Builds `num/den`; only `den = 1` or `den = 2` are representable.
    pub fn new(num: i32, den: i32) -> Result<Self, RepError> {
        match den {
            1 => Ok(HalfInt::from_int(num)),
            2 => Ok(HalfInt::from_twice(num)),
            -1 => Ok(HalfInt::from_int(-num)),
            -2 => Ok(HalfInt::from_twice(-num)),
            _ => Err(RepError::NotHalfInteger { num, den }),
        }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_half_odd(self) -> bool {
        self.twice % 2 != 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// Number of states `2x + 1` for a multiplet labelled by `self`.
    pub fn multiplicity(self) -> u64 {
        debug_assert!(self.twice >= 0);
        self.twice as u64 + 1
    }

    /// The values `-self, -self + 1, ..., self`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let top = self.twice;
        (-top..=top).step_by(2).map(HalfInt::from_twice)
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }
}

impl From<i32> for HalfInt {
    fn from(value: i32) -> Self {
        HalfInt::from_int(value)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RepError::Parse(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num = num.trim().parse().map_err(|_| bad())?;
                let den = den.trim().parse().map_err(|_| bad())?;
                HalfInt::new(num, den)
            }
            None => s.parse().map(HalfInt::from_int).map_err(|_| bad()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
