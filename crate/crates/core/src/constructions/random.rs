//! Seeded random scenes for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geom::{boundary_crossings, canonical_direction, int, rat, ConvexPolygon, Direction, DirectionSet, Point, Segment};
use crate::graph::{Scene, SegmentScene};

use super::zonogon;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const POOL: [(i64, i64); 12] = [
    (1, 0),
    (0, 1),
    (1, 1),
    (1, -1),
    (1, 2),
    (2, 1),
    (1, -2),
    (2, -1),
    (1, 3),
    (3, 1),
    (1, -3),
    (3, -1),
];

/// `k` distinct directions drawn from a pool of small primitive vectors.
pub fn random_directions<R: Rng>(rng: &mut R, k: usize) -> DirectionSet {
    assert!((1..=POOL.len()).contains(&k), "k must be in 1..={}", POOL.len());
    let dirs: Vec<Direction> = POOL
        .choose_multiple(rng, k)
        .map(|&v| canonical_direction(v).expect("pool vectors are nonzero"))
        .collect();
    DirectionSet::new(dirs).expect("pool directions are distinct")
}

fn random_vector<R: Rng>(rng: &mut R, d: Direction) -> Point {
    let len = rng.gen_range(1..=4);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Point::from_ints(sign * len * d.a(), sign * len * d.b())
}

/// A random zonogon (parallelogram or hexagon) whose edges use two or three
/// directions of `dirs`, centered at a random half-integer point.
pub fn random_polygon<R: Rng>(rng: &mut R, dirs: &DirectionSet) -> ConvexPolygon {
    assert!(dirs.len() >= 2, "random polygons need at least two directions");
    let sides = if dirs.len() >= 3 && rng.gen_bool(0.5) { 3 } else { 2 };
    let chosen: Vec<Direction> = dirs.as_slice().choose_multiple(rng, sides).copied().collect();
    let center = Point::new(rat(rng.gen_range(0..=24), 2), rat(rng.gen_range(0..=24), 2));
    let vectors: Vec<Point> = chosen.iter().map(|&d| random_vector(rng, d)).collect();
    zonogon(&vectors, &center).expect("non-parallel vectors give a zonogon")
}

/// `n` random polygons over `k` random directions.
pub fn random_scene<R: Rng>(rng: &mut R, n: usize, k: usize) -> Scene {
    let dirs = random_directions(rng, k);
    let polygons = (0..n)
        .map(|i| (format!("p{}", i + 1), random_polygon(rng, &dirs)))
        .collect();
    Scene::new(dirs, polygons).expect("zonogons conform to their directions")
}

/// `n` random segments over `k` random directions on a small grid.
pub fn random_segment_scene<R: Rng>(rng: &mut R, n: usize, k: usize) -> SegmentScene {
    let dirs = random_directions(rng, k);
    let segments = (0..n)
        .map(|i| {
            let d = dirs.get(rng.gen_range(0..dirs.len()));
            let start = Point::from_ints(rng.gen_range(0..=8), rng.gen_range(0..=8));
            let len = int(rng.gen_range(1..=5));
            let end = &start + &d.as_point().scale(&len);
            let s = Segment::new(start, end, &dirs).expect("segment along a scene direction");
            (format!("s{}", i + 1), s)
        })
        .collect();
    SegmentScene::new(dirs, segments).expect("labels are distinct")
}

/// A random polygon over `dirs` and a homothetic copy placed so that the
/// boundaries cross transversally or not at all.
pub fn random_homothetic_pair<R: Rng>(
    rng: &mut R,
    dirs: &DirectionSet,
) -> Result<(ConvexPolygon, ConvexPolygon)> {
    loop {
        let p = random_polygon(rng, dirs);
        let scale = rat(rng.gen_range(1..=12), rng.gen_range(1..=4));
        let shift = Point::new(rat(rng.gen_range(-40..=40), 4), rat(rng.gen_range(-40..=40), 4));
        let q = p.transformed(&scale, &shift);
        let touching = p.vertices().iter().any(|v| q.on_boundary(v))
            || q.vertices().iter().any(|v| p.on_boundary(v));
        if touching {
            continue;
        }
        if boundary_crossings(&p, &q).is_ok() {
            return Ok((p, q));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_scenes_are_reproducible() {
        let a = random_scene(&mut rng(7), 6, 3);
        let b = random_scene(&mut rng(7), 6, 3);
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
        assert_eq!(a.dirs().len(), 3);
    }

    #[test]
    fn segment_scenes_have_requested_size() {
        let s = random_segment_scene(&mut rng(1), 10, 4);
        assert_eq!(s.len(), 10);
        assert_eq!(s.dirs().len(), 4);
    }

    #[test]
    fn homothetic_pairs_avoid_touching() {
        let mut r = rng(3);
        let dirs = random_directions(&mut r, 3);
        for _ in 0..20 {
            let (p, q) = random_homothetic_pair(&mut r, &dirs).unwrap();
            assert!(p.vertices().iter().all(|v| !q.on_boundary(v)));
        }
    }
}
