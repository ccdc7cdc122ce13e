use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::geom::{support_interval, Direction, Rational};
use crate::graph::{build_graph, CliqueSet, Graph, Scene};

/// One candidate sweep line: a distinct support offset along a direction's
/// normal, with the polygons it meets and the polygons whose own support
/// line it is.
#[derive(Clone, Debug)]
pub struct SupportLevel {
    pub offset: Rational,
    pub meets: FixedBitSet,
    pub attains: FixedBitSet,
}

/// Per-direction sorted distinct support offsets of a scene.
#[derive(Clone, Debug)]
pub struct SupportProfile {
    directions: Vec<Direction>,
    levels: Vec<Vec<SupportLevel>>,
}

impl SupportProfile {
    pub fn new(scene: &Scene) -> Self {
        let n = scene.len();
        let directions: Vec<Direction> = scene.dirs().iter().copied().collect();
        let levels = directions
            .iter()
            .map(|d| {
                let w = d.normal();
                let intervals: Vec<(Rational, Rational)> = scene
                    .polygons()
                    .iter()
                    .map(|(_, p)| support_interval(p, w))
                    .collect();
                let mut offsets: Vec<&Rational> = intervals.iter().map(|(_, hi)| hi).collect();
                offsets.sort();
                offsets.dedup();
                offsets
                    .into_iter()
                    .map(|offset| {
                        let mut meets = FixedBitSet::with_capacity(n);
                        let mut attains = FixedBitSet::with_capacity(n);
                        for (i, (lo, hi)) in intervals.iter().enumerate() {
                            if lo <= offset && offset <= hi {
                                meets.insert(i);
                            }
                            if hi == offset {
                                attains.insert(i);
                            }
                        }
                        SupportLevel { offset: offset.clone(), meets, attains }
                    })
                    .collect()
            })
            .collect();
        SupportProfile { directions, levels }
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn levels(&self, direction: usize) -> &[SupportLevel] {
        &self.levels[direction]
    }

    /// Number of offset tuples, the product of level counts.
    pub fn tuple_count(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.len() as u128)
            .fold(1u128, |acc, x| acc.saturating_mul(x))
    }
}

struct Search<'a> {
    profile: &'a SupportProfile,
    closed_rows: Vec<FixedBitSet>,
    n: usize,
}

impl Search<'_> {
    fn descend(&self, depth: usize, cand: &FixedBitSet, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == self.profile.levels.len() {
            if let Some(c) = self.accept(cand) {
                out.push(c);
            }
            return;
        }
        for (li, level) in self.profile.levels[depth].iter().enumerate() {
            let mut next = cand.clone();
            next.intersect_with(&level.meets);
            if next.is_clear() || next.is_disjoint(&level.attains) {
                continue;
            }
            // The tuple belongs to a maximal clique only if every chosen line
            // is still the support line of some surviving member.
            let witnessed = chosen
                .iter()
                .enumerate()
                .all(|(e, &lj)| !next.is_disjoint(&self.profile.levels[e][lj].attains));
            if !witnessed {
                continue;
            }
            chosen.push(li);
            self.descend(depth + 1, &next, chosen, out);
            chosen.pop();
        }
    }

    /// The candidate if it is a maximal clique.
    fn accept(&self, cand: &FixedBitSet) -> Option<Vec<usize>> {
        let mut common = FixedBitSet::with_capacity(self.n);
        common.insert_range(..);
        for r in cand.ones() {
            let row = &self.closed_rows[r];
            if !cand.is_subset(row) {
                return None;
            }
            common.intersect_with(row);
        }
        (common == *cand).then(|| cand.ones().collect())
    }
}

/// All maximal cliques of the scene's intersection graph, found by
/// intersecting the polygons met by one support line per direction.
pub fn enumerate_supporting_line(scene: &Scene) -> CliqueSet {
    enumerate_supporting_line_with(scene, &build_graph(scene))
}

/// As [`enumerate_supporting_line`], reusing a prebuilt graph of `scene`.
pub fn enumerate_supporting_line_with(scene: &Scene, graph: &Graph) -> CliqueSet {
    let n = scene.len();
    if n == 0 {
        return CliqueSet::new();
    }
    let profile = SupportProfile::new(scene);
    let closed_rows = (0..n)
        .map(|i| {
            let mut row = graph.neighbors(i).clone();
            row.insert(i);
            row
        })
        .collect();
    let search = Search { profile: &profile, closed_rows, n };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);

    // Each worker owns the subtree under one offset of the first direction.
    let found: Vec<Vec<Vec<usize>>> = profile.levels[0]
        .par_iter()
        .enumerate()
        .map(|(li, level)| {
            let mut out = Vec::new();
            let mut cand = all.clone();
            cand.intersect_with(&level.meets);
            if !cand.is_disjoint(&level.attains) {
                let mut chosen = vec![li];
                search.descend(1, &cand, &mut chosen, &mut out);
            }
            out
        })
        .collect();
    found.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ConvexPolygon, DirectionSet, Point};

    fn square(x: i64, y: i64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::from_ints(x, y),
            Point::from_ints(x + 1, y),
            Point::from_ints(x + 1, y + 1),
            Point::from_ints(x, y + 1),
        ])
        .unwrap()
    }

    fn axis() -> DirectionSet {
        DirectionSet::from_pairs(&[(1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn single_polygon() {
        let s = Scene::new(axis(), vec![("a".into(), square(0, 0))]).unwrap();
        let set = enumerate_supporting_line(&s);
        assert_eq!(set.iter().cloned().collect::<Vec<_>>(), vec![vec![0]]);
    }

    #[test]
    fn disjoint_squares() {
        let s = Scene::new(
            axis(),
            vec![("a".into(), square(0, 0)), ("b".into(), square(3, 0))],
        )
        .unwrap();
        let set = enumerate_supporting_line(&s);
        assert_eq!(set.iter().cloned().collect::<Vec<_>>(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn empty_scene() {
        let s = Scene::new(axis(), vec![]).unwrap();
        assert!(enumerate_supporting_line(&s).is_empty());
    }

    #[test]
    fn profile_levels_are_distinct_and_consistent() {
        let s = Scene::new(
            axis(),
            vec![
                ("a".into(), square(0, 0)),
                ("b".into(), square(0, 3)),
                ("c".into(), square(5, 0)),
            ],
        )
        .unwrap();
        let profile = SupportProfile::new(&s);
        // normal of (1,0) is (0,1): tops at y = 1 and y = 4
        let offsets: Vec<_> = profile.levels(0).iter().map(|l| l.offset.clone()).collect();
        assert_eq!(offsets, vec![int(1), int(4)]);
        assert_eq!(profile.levels(0)[0].meets.ones().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(profile.levels(0)[0].attains.ones().collect::<Vec<_>>(), vec![0, 2]);
        // normal of (0,1) is (-1,0): offsets -5 and 0
        assert_eq!(profile.tuple_count(), 2 * 2);
    }
}
