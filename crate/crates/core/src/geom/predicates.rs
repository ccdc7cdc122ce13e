use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use super::{int, Direction, DirectionSet, ConvexPolygon, Point, Rational};
use crate::error::{Error, Result};

/// The line `{x : <normal, x> = offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportLine {
    pub normal: (i64, i64),
    pub offset: Rational,
}

impl SupportLine {
    /// The line perpendicular to the sweep normal of `d` at `offset`.
    pub fn across(d: Direction, offset: Rational) -> Self {
        SupportLine { normal: d.normal(), offset }
    }

    /// The supporting line of `p` that is last in the sweep along the normal of `d`.
    pub fn supporting(p: &ConvexPolygon, d: Direction) -> Self {
        SupportLine::across(d, support_offset(p, d.normal()))
    }

    /// Signed side of `x`: `<normal, x> - offset`.
    pub fn side(&self, x: &Point) -> Rational {
        x.dot_int(self.normal) - &self.offset
    }
}

/// `(min, max)` of `<w, v>` over the vertices of `p`.
pub fn support_interval(p: &ConvexPolygon, w: (i64, i64)) -> (Rational, Rational) {
    let mut values = p.vertices().iter().map(|v| v.dot_int(w));
    let first = values.next().expect("polygon has vertices");
    values.fold((first.clone(), first), |(lo, hi), x| {
        if x < lo {
            (x, hi)
        } else if x > hi {
            (lo, x)
        } else {
            (lo, hi)
        }
    })
}

/// `max <w, v>` over the vertices of `p`.
pub fn support_offset(p: &ConvexPolygon, w: (i64, i64)) -> Rational {
    assert!(w != (0, 0), "support direction must be nonzero");
    support_interval(p, w).1
}

/// Closed-set intersection by the separating-axis test over the edge
/// normals of both polygons.
pub fn polygons_intersect(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    p.edge_normals()
        .into_iter()
        .chain(q.edge_normals())
        .all(|w| {
            let (plo, phi) = support_interval(p, w);
            let (qlo, qhi) = support_interval(q, w);
            plo <= qhi && qlo <= phi
        })
}

/// A line parallel to a direction of `dirs` with `p` and `q` on opposite
/// closed sides, or `None` when the polygons intersect.
///
/// The first direction (in set order) whose normal separates the support
/// intervals is used, and the offset is the midpoint of the gap.
pub fn separating_line(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    dirs: &DirectionSet,
) -> Option<SupportLine> {
    let two = int(2);
    dirs.iter().find_map(|&d| {
        let w = d.normal();
        let (plo, phi) = support_interval(p, w);
        let (qlo, qhi) = support_interval(q, w);
        if phi < qlo {
            Some(SupportLine::across(d, (phi + qlo) / &two))
        } else if qhi < plo {
            Some(SupportLine::across(d, (qhi + plo) / &two))
        } else {
            None
        }
    })
}

/// True iff the line meets the closed polygon.
pub fn line_meets_polygon(line: &SupportLine, p: &ConvexPolygon) -> bool {
    let (lo, hi) = support_interval(p, line.normal);
    lo <= line.offset && line.offset <= hi
}

/// Intersection of two closed segments `a0a1` and `b0b1`. `Err(())` marks a
/// collinear overlap of positive length.
fn segment_meet(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> std::result::Result<Option<Point>, ()> {
    let r = a1 - a0;
    let s = b1 - b0;
    let denom = r.cross(&s);
    let qp = b0 - a0;
    if denom.is_zero() {
        if !qp.cross(&r).is_zero() {
            return Ok(None);
        }
        let rr = r.norm_squared();
        let t0 = qp.dot(&r) / &rr;
        let t1 = (b1 - a0).dot(&r) / &rr;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let lo = lo.max(Rational::zero());
        let hi = hi.min(Rational::one());
        return if lo < hi {
            Err(())
        } else if lo == hi {
            Ok(Some(a0 + &r.scale(&lo)))
        } else {
            Ok(None)
        };
    }
    let t = qp.cross(&s) / &denom;
    let u = qp.cross(&r) / &denom;
    let unit = Rational::zero()..=Rational::one();
    if unit.contains(&t) && unit.contains(&u) {
        Ok(Some(a0 + &r.scale(&t)))
    } else {
        Ok(None)
    }
}

/// Number of distinct points shared by the boundaries of `p` and `q`.
pub fn boundary_crossings(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<usize> {
    let mut points = HashSet::new();
    for (i, (a0, a1)) in p.edges().enumerate() {
        for (j, (b0, b1)) in q.edges().enumerate() {
            match segment_meet(a0, a1, b0, b1) {
                Ok(Some(x)) => {
                    points.insert(x);
                }
                Ok(None) => {}
                Err(()) => return Err(Error::DegenerateOverlap(i, j)),
            }
        }
    }
    Ok(points.len())
}

/// `x -> scale * x + translation` with `scale > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homothety {
    pub scale: Rational,
    pub translation: Point,
}

impl Homothety {
    pub fn apply(&self, x: &Point) -> Point {
        &x.scale(&self.scale) + &self.translation
    }
}

/// The positive homothety mapping `p` onto `q`, if one exists.
pub fn homothety_of(p: &ConvexPolygon, q: &ConvexPolygon) -> Option<Homothety> {
    if p.len() != q.len() {
        return None;
    }
    // A positive homothety preserves the lowest-leftmost start vertex, so
    // canonical vertex lists correspond index by index.
    let (pv, qv) = (p.vertices(), q.vertices());
    let dp = &pv[1] - &pv[0];
    let dq = &qv[1] - &qv[0];
    let scale = if !dp.x.is_zero() {
        &dq.x / &dp.x
    } else {
        &dq.y / &dp.y
    };
    if !scale.is_positive() {
        return None;
    }
    let translation = &qv[0] - &pv[0].scale(&scale);
    let h = Homothety { scale, translation };
    pv.iter()
        .zip(qv)
        .all(|(a, b)| h.apply(a) == *b)
        .then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{canonical_direction, rat};

    fn rect(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0),
            Point::new(x1, y1.clone()),
            Point::new(x0, y1),
        ])
        .unwrap()
    }

    fn unit_at(x: Rational, y: Rational) -> ConvexPolygon {
        rect(x.clone(), y.clone(), x + int(1), y + int(1))
    }

    fn axis() -> DirectionSet {
        DirectionSet::from_pairs(&[(1, 0), (0, 1)]).unwrap()
    }

    fn pentagon() -> ConvexPolygon {
        let pts = [(0, 0), (2, 0), (3, 1), (0, 3), (-1, 1)];
        ConvexPolygon::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn pentagon_dirs() -> DirectionSet {
        DirectionSet::from_pairs(&[(1, 0), (1, 1), (3, -2), (1, 2), (1, -1)]).unwrap()
    }

    #[test]
    fn support_offsets() {
        let sq = unit_at(int(0), int(0));
        assert_eq!(support_offset(&sq, (0, 1)), int(1));
        assert_eq!(support_offset(&sq, (1, 1)), int(2));
        // brute force over the five vertices: max y is 3 at (0, 3)
        let brute = pentagon().vertices().iter().map(|v| v.y.clone()).max().unwrap();
        assert_eq!(support_offset(&pentagon(), (0, 1)), brute);
        assert_eq!(brute, int(3));
    }

    #[test]
    fn square_intersections() {
        let a = unit_at(int(0), int(0));
        assert!(polygons_intersect(&a, &unit_at(rat(1, 2), rat(1, 2))));
        assert!(!polygons_intersect(&a, &unit_at(int(3), int(0))));
        assert!(polygons_intersect(&a, &unit_at(int(1), int(0))));
        assert!(polygons_intersect(&a, &unit_at(int(1), int(1))));
    }

    #[test]
    fn axis_separation_line() {
        let a = unit_at(int(0), int(0));
        let b = unit_at(int(3), int(0));
        let line = separating_line(&a, &b, &axis()).unwrap();
        // normal of (0, 1) is (-1, 0): the line x = 2
        assert_eq!(line.normal, (-1, 0));
        assert_eq!(line.offset, int(-2));
        assert!(separating_line(&a, &unit_at(rat(1, 2), rat(1, 2)), &axis()).is_none());
    }

    #[test]
    fn disjoint_pentagons_separate_along_a_side_direction() {
        let p = pentagon();
        let q = p.translated(&Point::from_ints(3, 2));
        assert!(!polygons_intersect(&p, &q));
        let line = separating_line(&p, &q, &pentagon_dirs()).unwrap();
        // independent check: exactly the directions whose normal intervals are disjoint
        let candidates: Vec<(i64, i64)> = pentagon_dirs()
            .iter()
            .map(|d| d.normal())
            .filter(|&w| {
                let (a, b) = support_interval(&p, w);
                let (c, d) = support_interval(&q, w);
                b < c || d < a
            })
            .collect();
        assert!(candidates.contains(&line.normal));
        let (plo, phi) = support_interval(&p, line.normal);
        let (qlo, qhi) = support_interval(&q, line.normal);
        assert!((phi < line.offset && line.offset < qlo) || (qhi < line.offset && line.offset < plo));
    }

    #[test]
    fn line_meets() {
        let sq = unit_at(int(0), int(0));
        let d = canonical_direction((1, 0)).unwrap();
        assert!(line_meets_polygon(&SupportLine::across(d, int(1)), &sq));
        assert!(!line_meets_polygon(&SupportLine::across(d, int(2)), &sq));
        let diag = SupportLine { normal: (1, 1), offset: int(1) };
        assert!(line_meets_polygon(&diag, &sq));
    }

    #[test]
    fn crossing_counts() {
        let a = unit_at(int(0), int(0));
        assert_eq!(boundary_crossings(&a, &unit_at(int(3), int(0))).unwrap(), 0);
        assert_eq!(boundary_crossings(&a, &unit_at(rat(1, 2), rat(1, 2))).unwrap(), 2);
        let wide = rect(int(0), int(0), int(3), int(1));
        let tall = rect(int(1), int(-1), int(2), int(2));
        assert_eq!(boundary_crossings(&wide, &tall).unwrap(), 4);
        // corner touch is a single shared point
        assert_eq!(boundary_crossings(&a, &unit_at(int(1), int(1))).unwrap(), 1);
    }

    #[test]
    fn shared_edge_is_degenerate() {
        let a = unit_at(int(0), int(0));
        let err = boundary_crossings(&a, &unit_at(int(1), int(0))).unwrap_err();
        assert!(matches!(err, Error::DegenerateOverlap(_, _)));
    }

    #[test]
    fn homotheties() {
        let sq = unit_at(int(0), int(0));
        let big = rect(int(5), int(5), int(7), int(7));
        let h = homothety_of(&sq, &big).unwrap();
        assert_eq!(h.scale, int(2));
        assert_eq!(h.translation, Point::from_ints(5, 5));
        let id = homothety_of(&sq, &sq).unwrap();
        assert_eq!(id.scale, int(1));
        assert_eq!(id.translation, Point::origin());
        assert!(homothety_of(&sq, &rect(int(0), int(0), int(1), int(2))).is_none());
        // a half-turn is not a positive homothety
        let p = pentagon();
        let flipped = ConvexPolygon::new(
            p.vertices().iter().map(|v| Point::new(-v.x.clone(), -v.y.clone())).collect(),
        )
        .unwrap();
        assert!(homothety_of(&p, &flipped).is_none());
    }
}
