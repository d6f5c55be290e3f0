//! Exact half-integer quantities.
//!
//! Every fractional matching value handled by this crate is a multiple of
//! 1/2, so values are stored as a count of halves and never touch floating
//! point.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative multiple of 1/2, stored as its number of halves.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_units(units: u32) -> Self {
        HalfInt(units)
    }

    pub const fn from_int(value: u32) -> Self {
        HalfInt(2 * value)
    }

    /// Number of halves, i.e. twice the value.
    pub const fn units(self) -> u32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub const fn floor(self) -> u32 {
        self.0 / 2
    }

    pub fn checked_sub(self, rhs: HalfInt) -> Option<HalfInt> {
        self.0.checked_sub(rhs.0).map(HalfInt)
    }

    /// Decimal rendering: `2`, `2.5`.
    pub fn decimal(self) -> String {
        if self.is_integer() {
            format!("{}", self.0 / 2)
        } else {
            format!("{}.5", self.0 / 2)
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError(String);

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a half-integer: {:?}", self.0)
    }
}

impl std::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `k`, `k/2` and `k.5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            return num.parse::<u32>().map(HalfInt).map_err(|_| err());
        }
        if let Some(int) = s.strip_suffix(".5") {
            let v = int.parse::<u32>().map_err(|_| err())?;
            return Ok(HalfInt(2 * v + 1));
        }
        let int = s.strip_suffix(".0").unwrap_or(s);
        int.parse::<u32>().map(HalfInt::from_int).map_err(|_| err())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;

    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, Add::add)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
