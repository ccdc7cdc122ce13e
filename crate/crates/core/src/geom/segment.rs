use num_traits::{One, Signed, Zero};

use super::{sign, Direction, DirectionSet, Point, Rational};
use crate::error::{Error, Result};

/// A closed straight-line segment parallel to one of the scene directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    start: Point,
    end: Point,
    direction: Direction,
}

impl Segment {
    pub fn new(start: Point, end: Point, dirs: &DirectionSet) -> Result<Self> {
        if start == end {
            return Err(Error::ZeroLengthSegment);
        }
        let direction = Direction::of_vector(&(&end - &start))?;
        if dirs.index_of(&direction).is_none() {
            return Err(Error::SegmentDirectionNotInSet(direction));
        }
        Ok(Segment { start, end, direction })
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn end(&self) -> &Point {
        &self.end
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn translated(&self, t: &Point) -> Segment {
        Segment {
            start: &self.start + t,
            end: &self.end + t,
            direction: self.direction,
        }
    }

    pub fn scaled(&self, s: &Rational) -> Segment {
        Segment {
            start: self.start.scale(s),
            end: self.end.scale(s),
            direction: self.direction,
        }
    }
}

fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    sign(&(b - a).cross(&(c - a)))
}

/// `c` is known to be collinear with `a`, `b`.
fn within_box(a: &Point, b: &Point, c: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ly, hy) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lx <= &c.x && &c.x <= hx && ly <= &c.y && &c.y <= hy
}

/// Closed-segment intersection test by orientation signs.
pub fn segments_intersect(s: &Segment, t: &Segment) -> bool {
    let (p1, p2, q1, q2) = (&s.start, &s.end, &t.start, &t.end);
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && within_box(q1, q2, p1))
        || (d2 == 0 && within_box(q1, q2, p2))
        || (d3 == 0 && within_box(p1, p2, q1))
        || (d4 == 0 && within_box(p1, p2, q2))
}

pub(crate) fn point_segment_distance_squared(p: &Point, a: &Point, b: &Point) -> Rational {
    let ab = b - a;
    let ap = p - a;
    let len2 = ab.norm_squared();
    let mut t = ap.dot(&ab) / &len2;
    if t.is_negative() {
        t = Rational::zero();
    } else if t > Rational::one() {
        t = Rational::one();
    }
    let closest = a + &ab.scale(&t);
    (p - &closest).norm_squared()
}

/// Exact squared Euclidean distance between two closed segments; zero when
/// they intersect.
pub fn segment_distance_squared(s: &Segment, t: &Segment) -> Rational {
    if segments_intersect(s, t) {
        return Rational::zero();
    }
    // Disjoint planar segments realize their distance at an endpoint.
    [
        point_segment_distance_squared(&s.start, &t.start, &t.end),
        point_segment_distance_squared(&s.end, &t.start, &t.end),
        point_segment_distance_squared(&t.start, &s.start, &s.end),
        point_segment_distance_squared(&t.end, &s.start, &s.end),
    ]
    .into_iter()
    .min()
    .expect("four candidates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::int;

    fn dirs() -> DirectionSet {
        DirectionSet::from_pairs(&[(1, 0), (0, 1), (1, 1), (1, -1)]).unwrap()
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(Point::from_ints(a.0, a.1), Point::from_ints(b.0, b.1), &dirs()).unwrap()
    }

    #[test]
    fn crossing_diagonals() {
        assert!(segments_intersect(&seg((0, 0), (1, 1)), &seg((0, 1), (1, 0))));
    }

    #[test]
    fn parallel_disjoint() {
        let a = seg((0, 0), (2, 0));
        let b = seg((0, 1), (2, 1));
        assert!(!segments_intersect(&a, &b));
        assert_eq!(segment_distance_squared(&a, &b), int(1));
    }

    #[test]
    fn collinear_cases() {
        assert!(segments_intersect(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))));
        assert!(segments_intersect(&seg((0, 0), (2, 0)), &seg((2, 0), (3, 0))));
        let a = seg((0, 0), (2, 0));
        let b = seg((3, 0), (5, 0));
        assert!(!segments_intersect(&a, &b));
        assert_eq!(segment_distance_squared(&a, &b), int(1));
    }

    #[test]
    fn t_junction_touches() {
        assert!(segments_intersect(&seg((0, 0), (4, 0)), &seg((2, 0), (2, 3))));
        let a = seg((0, 0), (4, 0));
        let b = seg((2, 1), (2, 3));
        assert!(!segments_intersect(&a, &b));
        assert_eq!(segment_distance_squared(&a, &b), int(1));
    }

    #[test]
    fn rejects_bad_segments() {
        let p = Point::from_ints(1, 1);
        assert_eq!(Segment::new(p.clone(), p, &dirs()), Err(Error::ZeroLengthSegment));
        let err = Segment::new(Point::from_ints(0, 0), Point::from_ints(1, 2), &dirs()).unwrap_err();
        assert!(matches!(err, Error::SegmentDirectionNotInSet(_)));
    }
}
