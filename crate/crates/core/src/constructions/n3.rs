//! Four families of homothets of a fixed pentagon with `C(m,3)` staircase
//! maximal cliques.

use crate::error::{Error, Result};
use crate::geom::{int, rat, ConvexPolygon, DirectionSet, Point, Rational};
use crate::graph::{Graph, Scene};
use crate::bound::choose;

use super::{ExpectedCount, Family, GeneratedInstance, InstanceScene};

/// The non-parallelogram master, edge vectors
/// `(3,0), (2,2), (-3,3), (-3,-2), (1,-3)`.
pub fn n3_master() -> ConvexPolygon {
    ConvexPolygon::new(
        [(0, 0), (3, 0), (5, 2), (2, 5), (-1, 3)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect(),
    )
    .expect("master pentagon is convex")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    H,
    V,
    T,
    R,
}

const KINDS: [Kind; 4] = [Kind::H, Kind::V, Kind::T, Kind::R];

fn adjacent(a: (Kind, usize), b: (Kind, usize)) -> bool {
    use Kind::*;
    let ((ka, i), (kb, j)) = (a, b);
    match (ka, kb) {
        _ if ka == kb => true,
        (T, V) => i >= j,
        (H, V) => i <= j,
        (H, T) => i <= j,
        (R, T) => i >= j,
        (R, V) | (R, H) => true,
        _ => adjacent(b, a),
    }
}

/// `4m` homothets labelled `h1..hm, v1..vm, t1..tm, r1..rm`, realizing
/// the rules `t_i~v_j iff i>=j`, `h_i~v_j iff i<=j`, `h_i~t_j iff i<=j`,
/// `r_i~t_j iff i>=j`, `r` adjacent to every `v` and `h`, and each family
/// complete.
pub fn gen_n3(m: usize) -> Result<GeneratedInstance> {
    if m < 3 {
        return Err(Error::InvalidParameters(format!("need m >= 3, got {m}")));
    }
    let master = n3_master();
    let eps = rat(1, 16 * m as i64);
    let half = rat(1, 2);
    let pt = |x: Rational, y: Rational| Point::new(x, y);
    let placement = |kind: Kind| -> (Rational, Point, Point) {
        match kind {
            Kind::H => (int(3), pt(int(13), int(22) - &eps), pt(eps.clone(), eps.clone())),
            Kind::V => (
                int(1),
                pt(int(18) - &eps * &half, int(17) - &eps * &half),
                pt(eps.clone(), eps.clone()),
            ),
            Kind::T => (int(5), Point::origin(), pt(&eps * int(-2), &eps * int(4))),
            Kind::R => (int(5), pt(rat(51, 2), rat(17, 2) - &eps), pt(-eps.clone(), eps.clone())),
        }
    };
    let name = |kind: Kind| match kind {
        Kind::H => 'h',
        Kind::V => 'v',
        Kind::T => 't',
        Kind::R => 'r',
    };

    let mut polygons = Vec::with_capacity(4 * m);
    let mut tags = Vec::with_capacity(4 * m);
    for kind in KINDS {
        let (scale, base, step) = placement(kind);
        for i in 1..=m {
            let at = &base + &step.scale(&int(i as i64));
            polygons.push((format!("{}{i}", name(kind)), master.transformed(&scale, &at)));
            tags.push((kind, i));
        }
    }
    let labels: Vec<String> = polygons.iter().map(|(l, _)| l.clone()).collect();
    let mut intended = Graph::empty(labels);
    for a in 0..tags.len() {
        for b in a + 1..tags.len() {
            if adjacent(tags[a], tags[b]) {
                intended.add_edge(a, b);
            }
        }
    }
    let dirs = DirectionSet::new(master.edge_directions())?;
    let bound: u64 = choose(m as u64, 3).try_into().unwrap_or(u64::MAX);
    Ok(GeneratedInstance {
        family: Family::N3,
        scene: InstanceScene::Polygons(Scene::new(dirs, polygons)?),
        intended,
        expected: ExpectedCount::AtLeast(bound),
    })
}

/// Index sets `{h_1..h_α, v_α..v_β, t_β..t_γ, r_γ..r_m}` for
/// `1 <= α <= β <= γ <= m`, in the labelling of [`gen_n3`].
pub fn staircase_cliques(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for alpha in 1..=m {
        for beta in alpha..=m {
            for gamma in beta..=m {
                let mut c: Vec<usize> = (1..=alpha).map(|i| i - 1).collect();
                c.extend((alpha..=beta).map(|i| m + i - 1));
                c.extend((beta..=gamma).map(|i| 2 * m + i - 1));
                c.extend((gamma..=m).map(|i| 3 * m + i - 1));
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::enumerate_oracle;
    use crate::graph::is_maximal_clique;

    #[test]
    fn n3_realizes_intended() {
        for m in 3..=8 {
            let inst = gen_n3(m).unwrap();
            assert!(inst.realizes_intended().unwrap(), "m={m}");
        }
    }

    #[test]
    fn staircase_sets_are_maximal() {
        for m in 3..=6 {
            let inst = gen_n3(m).unwrap();
            let all = enumerate_oracle(&inst.intended);
            for c in staircase_cliques(m) {
                assert!(is_maximal_clique(&inst.intended, &c).unwrap(), "m={m} {c:?}");
                assert!(all.contains(&c));
            }
            assert!(inst.expected.admits(all.len() as u64));
        }
    }

    #[test]
    fn golden_total_for_m5() {
        assert_eq!(enumerate_oracle(&gen_n3(5).unwrap().intended).len(), 40);
    }

    #[test]
    fn staircase_count() {
        // α <= β <= γ from m values: C(m+2, 3), at least C(m, 3)
        assert_eq!(staircase_cliques(5).len(), 35);
        assert!(gen_n3(2).is_err());
    }
}
