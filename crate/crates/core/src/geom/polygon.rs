use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{sign, Direction, DirectionSet, Point, Rational};
use crate::error::{Error, Result};

/// A closed, bounded, strictly convex polygon.
///
/// Vertices are stored counterclockwise starting at the lowest vertex (ties
/// broken by the leftmost one), so two equal polygons always have identical
/// vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Validates `points` as a strictly convex polygon (either orientation)
/// whose every edge is parallel to a direction of `dirs`.
///
/// Edge `i` runs from `points[i]` to `points[i + 1]` in the input order,
/// and that index is what [`Error::EdgeDirectionNotInSet`] reports.
pub fn validate_polygon(points: &[Point], dirs: &DirectionSet) -> Result<ConvexPolygon> {
    let polygon = ConvexPolygon::new(points.to_vec())?;
    let n = points.len();
    for i in 0..n {
        let edge = &points[(i + 1) % n] - &points[i];
        let direction = Direction::of_vector(&edge)?;
        if dirs.index_of(&direction).is_none() {
            return Err(Error::EdgeDirectionNotInSet { edge: i, direction });
        }
    }
    Ok(polygon)
}

/// Half-plane index for angular ordering: 0 for angles in `[0, pi)`.
fn half(v: &Point) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    half(u)
        .cmp(&half(v))
        .then_with(|| match sign(&u.cross(v)) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        })
}

impl ConvexPolygon {
    /// Checks strict convexity and canonicalizes the vertex order. Edge
    /// directions are not checked here; see [`validate_polygon`].
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut orientation = 0i8;
        for i in 0..n {
            let prev = &points[(i + n - 1) % n];
            let cur = &points[i];
            let next = &points[(i + 1) % n];
            let turn = sign(&(cur - prev).cross(&(next - cur)));
            if turn == 0 || (orientation != 0 && turn != orientation) {
                return Err(Error::NotConvex(i));
            }
            orientation = turn;
        }
        if orientation < 0 {
            points.reverse();
        }
        let start = (0..n)
            .min_by(|&i, &j| points[i].low_left_key().cmp(&points[j].low_left_key()))
            .unwrap_or(0);
        points.rotate_left(start);

        // All left turns still admit self-overlapping stars; a simple convex
        // polygon has strictly increasing edge angles from the lowest vertex.
        let edges: Vec<Point> = (0..n).map(|i| &points[(i + 1) % n] - &points[i]).collect();
        for i in 1..n {
            if angle_cmp(&edges[i - 1], &edges[i]) != Ordering::Less {
                return Err(Error::NotConvex(i));
            }
        }
        Ok(ConvexPolygon { vertices: points })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn edge_directions(&self) -> Vec<Direction> {
        self.edges()
            .map(|(p, q)| Direction::of_vector(&(q - p)).expect("edges have positive length"))
            .collect()
    }

    /// Outward normals of the edges, as integer vectors.
    pub fn edge_normals(&self) -> Vec<(i64, i64)> {
        self.edges()
            .map(|(p, q)| {
                let d = Direction::of_vector(&(q - p)).expect("edges have positive length");
                // The canonical representative may point either way along the
                // edge; flip so the normal faces out of a CCW polygon.
                let e = q - p;
                let along = e.dot_int((d.a(), d.b()));
                if along.is_positive() {
                    (d.b(), -d.a())
                } else {
                    (-d.b(), d.a())
                }
            })
            .collect()
    }

    /// Index of the first edge not parallel to any direction of `dirs`.
    pub fn conforms_to(&self, dirs: &DirectionSet) -> Option<usize> {
        self.edge_directions()
            .iter()
            .position(|d| dirs.index_of(d).is_none())
    }

    /// Image under `x -> scale * x + translation`; `scale` must be positive.
    pub fn transformed(&self, scale: &Rational, translation: &Point) -> ConvexPolygon {
        assert!(scale.is_positive(), "homothety scale must be positive");
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| &v.scale(scale) + translation)
                .collect(),
        }
    }

    pub fn translated(&self, t: &Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v + t).collect(),
        }
    }

    /// Twice the signed area; positive for every valid polygon.
    pub fn double_area(&self) -> Rational {
        self.edges().map(|(p, q)| p.cross(q)).sum()
    }

    /// `(min_x, min_y, max_x, max_y)`.
    pub fn bounding_box(&self) -> (Rational, Rational, Rational, Rational) {
        let xs = self.vertices.iter().map(|v| &v.x);
        let ys = self.vertices.iter().map(|v| &v.y);
        (
            xs.clone().min().unwrap().clone(),
            ys.clone().min().unwrap().clone(),
            xs.max().unwrap().clone(),
            ys.max().unwrap().clone(),
        )
    }

    /// True iff `p` lies in the closed polygon.
    pub fn contains(&self, p: &Point) -> bool {
        self.edges().all(|(a, b)| !(b - a).cross(&(p - a)).is_negative())
    }

    /// True iff `p` lies on the boundary.
    pub fn on_boundary(&self, p: &Point) -> bool {
        self.contains(p) && self.edges().any(|(a, b)| (b - a).cross(&(p - a)).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn axis() -> DirectionSet {
        DirectionSet::from_pairs(&[(1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn unit_square_validates() {
        let p = validate_polygon(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]), &axis()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.vertices()[0], Point::from_ints(0, 0));
    }

    #[test]
    fn square_rejected_by_diagonal_directions() {
        let dirs = DirectionSet::from_pairs(&[(1, 1), (1, -1)]).unwrap();
        let err = validate_polygon(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]), &dirs).unwrap_err();
        assert!(matches!(err, Error::EdgeDirectionNotInSet { edge: 0, .. }));
    }

    #[test]
    fn pentagon_with_five_directions() {
        // Edge path (2,0), (1,1), (-3,2), (-1,-2), (1,-1) from the origin.
        let mut at = (0i64, 0i64);
        let mut points = vec![];
        let mut found = vec![];
        for (dx, dy) in [(2, 0), (1, 1), (-3, 2), (-1, -2), (1, -1)] {
            points.push(at);
            found.push(super::super::canonical_direction((dx, dy)).unwrap());
            at = (at.0 + dx, at.1 + dy);
        }
        assert_eq!(at, (0, 0));
        let expected: Vec<(i64, i64)> = vec![(1, 0), (1, 1), (3, -2), (1, 2), (1, -1)];
        assert_eq!(
            found.iter().map(|d| (d.a(), d.b())).collect::<Vec<_>>(),
            expected
        );
        let dirs = DirectionSet::new(found).unwrap();
        let p = validate_polygon(&pts(&points), &dirs).unwrap();
        assert_eq!(p.len(), 5);
        let four = DirectionSet::from_pairs(&expected[..4]).unwrap();
        let err = validate_polygon(&pts(&points), &four).unwrap_err();
        assert!(matches!(err, Error::EdgeDirectionNotInSet { edge: 4, .. }));
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let p = ConvexPolygon::new(pts(&[(0, 1), (1, 1), (1, 0), (0, 0)])).unwrap();
        assert_eq!(p.vertices(), &pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])[..]);
        assert!(p.double_area().is_positive());
    }

    #[test]
    fn lowest_then_leftmost_start() {
        let p = ConvexPolygon::new(pts(&[(2, 0), (1, 1), (0, 0)])).unwrap();
        assert_eq!(p.vertices()[0], Point::from_ints(0, 0));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(ConvexPolygon::new(pts(&[(0, 0), (1, 0)])), Err(Error::TooFewVertices(2)));
        // collinear run
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0, 0), (1, 0), (2, 0), (1, 1)])),
            Err(Error::NotConvex(_))
        ));
        // reflex vertex
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0, 0), (4, 0), (1, 1), (0, 4)])),
            Err(Error::NotConvex(_))
        ));
        // repeated vertex
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0, 0), (0, 0), (1, 0), (0, 1)])),
            Err(Error::NotConvex(_))
        ));
        // all segments collinear
        assert!(ConvexPolygon::new(pts(&[(0, 0), (1, 1), (2, 2)])).is_err());
    }

    #[test]
    fn pentagram_rejected() {
        // Every turn is a left turn but the boundary winds twice.
        let star = pts(&[(0, 10), (6, -8), (-10, 3), (10, 3), (-6, -8)]);
        assert!(matches!(ConvexPolygon::new(star), Err(Error::NotConvex(_))));
    }

    #[test]
    fn outward_normals_of_square() {
        let p = ConvexPolygon::new(pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!(p.edge_normals(), vec![(0, -1), (1, 0), (0, 1), (-1, 0)]);
    }
}
