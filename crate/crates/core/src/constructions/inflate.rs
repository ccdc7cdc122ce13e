use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geom::{int, segment_distance_squared, ConvexPolygon, Point, Rational};
use crate::graph::{Scene, SegmentScene};

/// Rational `e > 0` with `e^2 <= r`, from an integer square root of
/// `num * den` over `den`.
fn sqrt_under(r: &Rational) -> Rational {
    let prod: BigInt = r.numer() * r.denom();
    Rational::new(prod.sqrt(), r.denom().clone())
}

/// Widens every segment into a parallelogram along the next scene direction
/// without creating new intersections.
///
/// With `d` the smallest distance between two disjoint segments, each
/// segment grows by `±e·b` where `e <= d/3` and `|b| <= 1`, so disjoint
/// pairs stay at least `d/3` apart.
pub fn inflate_segments(scene: &SegmentScene) -> Result<Scene> {
    let dirs = scene.dirs();
    let k = dirs.len();
    if k < 2 {
        return Err(Error::InvalidParameters(
            "inflation needs at least two directions".into(),
        ));
    }
    let segments = scene.segments();
    let mut min_d2: Option<Rational> = None;
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let d2 = segment_distance_squared(&segments[i].1, &segments[j].1);
            if d2.is_positive() && min_d2.as_ref().is_none_or(|m| d2 < *m) {
                min_d2 = Some(d2);
            }
        }
    }
    let eps = match min_d2 {
        Some(d2) => sqrt_under(&(d2 / int(9))),
        None => Rational::one(),
    };

    let mut polygons = Vec::with_capacity(segments.len());
    for (label, s) in segments {
        let j = dirs.index_of(&s.direction()).expect("segment scene is valid");
        let next = dirs.get((j + 1) % k);
        let l1 = int(next.a().abs() + next.b().abs());
        let widen = Point::from_ints(next.a(), next.b()).scale(&(&eps / l1));
        let poly = ConvexPolygon::new(vec![
            s.start() + &widen,
            s.start() - &widen,
            s.end() - &widen,
            s.end() + &widen,
        ])?;
        polygons.push((label.clone(), poly));
    }
    Scene::new(dirs.clone(), polygons)
}
