//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Every coordinate is a [`Rational`]; no predicate in this module ever
//! rounds. Directions are primitive integer vectors, and the sweep normal of
//! a direction `(a, b)` is always its counterclockwise rotation `(-b, a)`.

mod direction;
mod polygon;
mod predicates;
mod segment;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use direction::{canonical_direction, Direction, DirectionSet};
pub use polygon::{validate_polygon, ConvexPolygon};
pub use predicates::{
    boundary_crossings, homothety_of, line_meets_polygon, polygons_intersect, separating_line,
    support_interval, support_offset, Homothety, SupportLine,
};
pub use segment::{segments_intersect, segment_distance_squared, Segment};

/// Exact reduced fraction with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den` as a reduced rational.
///
/// Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    /// `<w, self>` for an integer vector `w`.
    pub fn dot_int(&self, w: (i64, i64)) -> Rational {
        &self.x * BigInt::from(w.0) + &self.y * BigInt::from(w.1)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = int(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    /// Key for the "lowest, then leftmost" order.
    pub(crate) fn low_left_key(&self) -> (&Rational, &Rational) {
        (&self.y, &self.x)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul<&Rational> for &Point {
    type Output = Point;
    fn mul(self, rhs: &Rational) -> Point {
        self.scale(rhs)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of a rational as -1, 0 or 1.
pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
