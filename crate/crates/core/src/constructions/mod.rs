//! Extremal scene generators. Every generator returns its geometric scene
//! together with the graph the placement is meant to realize.

mod inflate;
mod n3;
mod pairs;
pub mod random;
mod segments;
mod sun;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

pub use inflate::inflate_segments;
pub use n3::{gen_n3, n3_master, staircase_cliques};
pub use pairs::{gen_ladder_2kgon, gen_regular_odd, ladder_master, regular_master};
pub use segments::{gen_k33_segments, gen_kdir_multipartite};
pub use sun::gen_sun;

use crate::error::Result;
use crate::geom::{canonical_direction, int, ConvexPolygon, Direction, Point};
use crate::graph::{build_graph, build_segment_graph, graphs_equal, Graph, Scene, SegmentScene};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Multipartite,
    Ladder,
    RegularOdd,
    N3,
    Sun,
    K33,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Multipartite,
        Family::Ladder,
        Family::RegularOdd,
        Family::N3,
        Family::Sun,
        Family::K33,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Multipartite => "multipartite",
            Family::Ladder => "ladder",
            Family::RegularOdd => "regular-odd",
            Family::N3 => "n3",
            Family::Sun => "sun",
            Family::K33 => "k33",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceScene {
    Polygons(Scene),
    Segments(SegmentScene),
}

impl InstanceScene {
    pub fn len(&self) -> usize {
        match self {
            InstanceScene::Polygons(s) => s.len(),
            InstanceScene::Segments(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graph(&self) -> Graph {
        match self {
            InstanceScene::Polygons(s) => build_graph(s),
            InstanceScene::Segments(s) => build_segment_graph(s),
        }
    }

    /// The polygon scene, inflating segments into thin parallelograms.
    pub fn to_polygons(&self) -> Result<Scene> {
        match self {
            InstanceScene::Polygons(s) => Ok(s.clone()),
            InstanceScene::Segments(s) => inflate_segments(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedCount {
    Exact(u64),
    AtLeast(u64),
}

impl ExpectedCount {
    pub fn admits(&self, count: u64) -> bool {
        match *self {
            ExpectedCount::Exact(c) => count == c,
            ExpectedCount::AtLeast(c) => count >= c,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedInstance {
    pub family: Family,
    pub scene: InstanceScene,
    pub intended: Graph,
    pub expected: ExpectedCount,
}

impl GeneratedInstance {
    /// True iff the geometric intersection graph is the intended graph.
    pub fn realizes_intended(&self) -> Result<bool> {
        graphs_equal(&self.scene.graph(), &self.intended)
    }
}

/// The first `k` entries of a fixed list of small primitive directions:
/// `(1,0), (0,1), (1,1), (1,-1), (1,2), (2,1), ...`.
pub fn small_directions(k: usize) -> Vec<Direction> {
    let mut out: Vec<Direction> = Vec::with_capacity(k);
    let mut r = 1i64;
    while out.len() < k {
        let mut ring = Vec::new();
        for a in 0..=r {
            for b in -r..=r {
                if a.max(b.abs()) == r {
                    if let Ok(d) = canonical_direction((a, b)) {
                        if (d.a(), d.b()) == (a, b) && !out.contains(&d) && !ring.contains(&d) {
                            ring.push(d);
                        }
                    }
                }
            }
        }
        ring.sort_by_key(|d| (d.a().abs() + d.b().abs(), d.b() < 0, d.a()));
        if r == 1 {
            ring.sort_by_key(|d| match (d.a(), d.b()) {
                (1, 0) => 0,
                (0, 1) => 1,
                (1, 1) => 2,
                _ => 3,
            });
        }
        out.extend(ring);
        r += 1;
    }
    out.truncate(k);
    out
}

fn upper_half(v: &Point) -> bool {
    v.y.is_positive() || (v.y.is_zero() && v.x.is_positive())
}

/// Minkowski sum of the segments `[-v/2, v/2]` translated to `center`; a
/// centrally symmetric `2m`-gon for `m` pairwise non-parallel vectors.
pub fn zonogon(vectors: &[Point], center: &Point) -> Result<ConvexPolygon> {
    let mut ups: Vec<Point> = vectors
        .iter()
        .map(|v| if upper_half(v) { v.clone() } else { v.scale(&int(-1)) })
        .collect();
    ups.sort_by(|u, v| match u.cross(v) {
        c if c.is_positive() => Ordering::Less,
        c if c.is_negative() => Ordering::Greater,
        _ => Ordering::Equal,
    });
    let half = int(2);
    let mut at = center.clone();
    for u in &ups {
        at = &at - &u.scale(&(int(1) / &half));
    }
    let mut vertices = Vec::with_capacity(2 * ups.len());
    for u in ups.iter().chain(ups.iter()) {
        vertices.push(at.clone());
        at = if vertices.len() <= ups.len() { &at + u } else { &at - u };
    }
    ConvexPolygon::new(vertices)
}

/// Average of the vertices of `p` that maximize `<w, .>` (a vertex or the
/// midpoint of an edge).
pub(crate) fn extreme_midpoint(p: &ConvexPolygon, w: (i64, i64)) -> Point {
    let best = p.vertices().iter().map(|v| v.dot_int(w)).max().expect("nonempty");
    let hits: Vec<&Point> = p.vertices().iter().filter(|v| v.dot_int(w) == best).collect();
    let mut sum = Point::origin();
    for h in &hits {
        sum = &sum + h;
    }
    sum.scale(&(int(1) / int(hits.len() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_directions_are_distinct_and_canonical() {
        let dirs = small_directions(12);
        assert_eq!(dirs.len(), 12);
        let pairs: Vec<(i64, i64)> = dirs.iter().map(|d| (d.a(), d.b())).collect();
        assert_eq!(&pairs[..4], &[(1, 0), (0, 1), (1, 1), (1, -1)]);
        for (i, d) in dirs.iter().enumerate() {
            assert!(!dirs[..i].contains(d));
            assert_eq!(canonical_direction((d.a(), d.b())).unwrap(), *d);
        }
    }

    #[test]
    fn zonogon_of_two_vectors_is_a_parallelogram() {
        let p = zonogon(&[Point::from_ints(2, 0), Point::from_ints(0, -2)], &Point::origin()).unwrap();
        assert_eq!(
            p.vertices(),
            &[
                Point::from_ints(-1, -1),
                Point::from_ints(1, -1),
                Point::from_ints(1, 1),
                Point::from_ints(-1, 1)
            ]
        );
    }

    #[test]
    fn zonogon_hexagon() {
        let p = zonogon(
            &[Point::from_ints(2, 0), Point::from_ints(1, 1), Point::from_ints(-1, 1)],
            &Point::from_ints(5, 5),
        )
        .unwrap();
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
        assert_eq!(Family::from_name("bogus"), None);
    }
}
