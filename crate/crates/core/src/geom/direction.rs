use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Point;
use crate::error::{Error, Result};

/// A line through the origin, stored as its canonical primitive spanning
/// vector: `gcd(|a|, |b|) = 1` and either `a > 0`, or `a = 0` and `b > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    a: i64,
    b: i64,
}

pub fn canonical_direction(v: (i64, i64)) -> Result<Direction> {
    Direction::canonical(BigInt::from(v.0), BigInt::from(v.1))
}

impl Direction {
    fn canonical(a: BigInt, b: BigInt) -> Result<Direction> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
        }
        match (a.to_i64(), b.to_i64()) {
            (Some(a), Some(b)) => Ok(Direction { a, b }),
            _ => Err(Error::DirectionOverflow),
        }
    }

    /// Canonical direction spanned by a rational vector.
    pub fn of_vector(v: &Point) -> Result<Direction> {
        let lcm = v.x.denom().lcm(v.y.denom());
        let a = v.x.numer() * (&lcm / v.x.denom());
        let b = v.y.numer() * (&lcm / v.y.denom());
        Direction::canonical(a, b)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The sweep normal `(-b, a)`.
    pub fn normal(&self) -> (i64, i64) {
        (-self.b, self.a)
    }

    pub fn as_point(&self) -> Point {
        Point::from_ints(self.a, self.b)
    }

    /// True iff the rational vector `v` is a nonzero multiple of this direction.
    pub fn spans(&self, v: &Point) -> bool {
        Direction::of_vector(v).map(|d| d == *self).unwrap_or(false)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The ordered, duplicate-free set of `k >= 1` directions of a scene.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectionSet {
    dirs: Vec<Direction>,
}

impl DirectionSet {
    pub fn new(dirs: Vec<Direction>) -> Result<Self> {
        if dirs.is_empty() {
            return Err(Error::EmptyDirectionSet);
        }
        for (i, d) in dirs.iter().enumerate() {
            if dirs[..i].contains(d) {
                return Err(Error::DuplicateDirection(*d));
            }
        }
        Ok(DirectionSet { dirs })
    }

    /// Canonicalizes each integer pair, then builds the set.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let dirs = pairs
            .iter()
            .map(|&p| canonical_direction(p))
            .collect::<Result<Vec<_>>>()?;
        DirectionSet::new(dirs)
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn get(&self, i: usize) -> Direction {
        self.dirs[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Direction> {
        self.dirs.iter()
    }

    pub fn index_of(&self, d: &Direction) -> Option<usize> {
        self.dirs.iter().position(|x| x == d)
    }

    pub fn as_slice(&self) -> &[Direction] {
        &self.dirs
    }
}
