//! Pair gadgets: per direction, `m` pairs of translates whose facing sides
//! nearly touch, so that `L_i` meets `R_j` exactly when `j <= i`.
//!
//! Two translates `P + a` and `P + b` meet iff `b - a` lies in the
//! difference body `D = P - P`. Each gadget shifts copies along a vector
//! `g` whose double is the midpoint of one face of `D`, so `t·g` is in `D`
//! iff `|t| <= 2`. Shifts of about `±g` put the `L` and `R` chains two
//! units apart, and a tiny staircase perturbation decides which pairs
//! still touch. Copies from different gadgets sit near midpoints of
//! different faces and so stay deep inside each other's reach.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{int, rat, ConvexPolygon, Direction, DirectionSet, Point, Rational};
use crate::graph::{Graph, Scene};

use super::{extreme_midpoint, zonogon, ExpectedCount, Family, GeneratedInstance, InstanceScene};

/// Centrally symmetric `2k`-gon with edge vectors close to
/// `100·(cos(jπ/k), sin(jπ/k))`, centered at the origin.
pub fn ladder_master(k: usize) -> Result<ConvexPolygon> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("need k >= 2, got {k}")));
    }
    let vectors: Vec<Point> = (0..k)
        .map(|j| {
            let t = j as f64 * PI / k as f64;
            Point::from_ints((100.0 * t.cos()).round() as i64, (100.0 * t.sin()).round() as i64)
        })
        .collect();
    let p = zonogon(&vectors, &Point::origin())
        .map_err(|_| Error::InvalidParameters(format!("k={k} is too large for the ladder master")))?;
    if p.len() != 2 * k {
        return Err(Error::InvalidParameters(format!("k={k} is too large for the ladder master")));
    }
    Ok(p)
}

/// Rational approximation (within `1e-7` per coordinate) of the regular
/// odd `k`-gon on the unit circle, with a horizontal bottom edge.
pub fn regular_master(k: usize) -> Result<ConvexPolygon> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "need odd k >= 3, got {k}; use the ladder for even k"
        )));
    }
    let scale = 10_000_000i64;
    let points = (0..k)
        .map(|i| {
            let t = -PI / 2.0 + PI / k as f64 + 2.0 * PI * i as f64 / k as f64;
            Point::new(
                rat((t.cos() * scale as f64).round() as i64, scale),
                rat((t.sin() * scale as f64).round() as i64, scale),
            )
        })
        .collect();
    ConvexPolygon::new(points)
}

/// Edge directions of `p` in edge order, each listed once.
fn directions_of(p: &ConvexPolygon) -> Vec<Direction> {
    let mut out = Vec::new();
    for d in p.edge_directions() {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// Places `m` pairs per face normal and returns the scene and its intended
/// graph. Labels are `L{d}_{i}` and `R{d}_{i}`.
fn place_pairs(
    master: &ConvexPolygon,
    dirs: DirectionSet,
    normals: &[(i64, i64)],
    m: usize,
) -> Result<(Scene, Graph)> {
    let k = dirs.len() as i64;
    let lambda = rat(1, 8 * m as i64 * k * k);
    let c_left = rat(2 * m as i64 + 1, 4);
    let c_right = rat(2 * m as i64 + 3, 4);

    let mut polygons = Vec::with_capacity(2 * m * normals.len());
    for (d, &w) in normals.iter().enumerate() {
        let neg = (-w.0, -w.1);
        let g = (&extreme_midpoint(master, w) - &extreme_midpoint(master, neg)).scale(&rat(1, 2));
        let place = |sigma: Rational| master.translated(&g.scale(&sigma));
        for i in 1..=m {
            let sigma = int(-1) + (int(i as i64) - &c_left) * &lambda;
            polygons.push((format!("L{}_{}", d + 1, i), place(sigma)));
        }
        for j in 1..=m {
            let sigma = int(1) + (int(j as i64) - &c_right) * &lambda;
            polygons.push((format!("R{}_{}", d + 1, j), place(sigma)));
        }
    }

    let labels: Vec<String> = polygons.iter().map(|(l, _)| l.clone()).collect();
    let n = labels.len();
    let mut g = Graph::empty(labels);
    let gadget = |v: usize| v / (2 * m);
    for a in 0..n {
        for b in a + 1..n {
            let adjacent = if gadget(a) != gadget(b) {
                true
            } else {
                let (ra, rb) = (a % (2 * m), b % (2 * m));
                match (ra < m, rb < m) {
                    (true, true) | (false, false) => true,
                    // a is L_{ra+1}, b is R_{rb-m+1}
                    (true, false) => rb - m <= ra,
                    (false, true) => unreachable!("L copies precede R copies"),
                }
            };
            if adjacent {
                g.add_edge(a, b);
            }
        }
    }
    Ok((Scene::new(dirs, polygons)?, g))
}

/// `2km` translates of a centrally symmetric `2k`-gon with `m^k` maximal
/// cliques.
pub fn gen_ladder_2kgon(k: usize, m: usize) -> Result<GeneratedInstance> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let master = ladder_master(k)?;
    let dirs = directions_of(&master);
    let normals: Vec<(i64, i64)> = dirs.iter().map(|d| d.normal()).collect();
    let (scene, intended) = place_pairs(&master, DirectionSet::new(dirs)?, &normals, m)?;
    Ok(GeneratedInstance {
        family: Family::Ladder,
        scene: InstanceScene::Polygons(scene),
        intended,
        expected: ExpectedCount::Exact((m as u64).pow(k as u32)),
    })
}

/// `2qm` translates of a near-regular odd `k`-gon, `q = floor(k/2)`, each
/// gadget pairing a side with the opposite corner; `m^q` maximal cliques.
pub fn gen_regular_odd(k: usize, m: usize) -> Result<GeneratedInstance> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let master = regular_master(k)?;
    let q = k / 2;
    let normals: Vec<(i64, i64)> = master.edge_normals().into_iter().take(q).collect();
    let dirs = DirectionSet::new(directions_of(&master))?;
    let (scene, intended) = place_pairs(&master, dirs, &normals, m)?;
    Ok(GeneratedInstance {
        family: Family::RegularOdd,
        scene: InstanceScene::Polygons(scene),
        intended,
        expected: ExpectedCount::Exact((m as u64).pow(q as u32)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::enumerate_oracle;
    use crate::geom::homothety_of;
    use num_traits::ToPrimitive;

    #[test]
    fn ladder_master_shape() {
        let p = ladder_master(3).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(directions_of(&p).len(), 3);
        assert!(ladder_master(1).is_err());
    }

    #[test]
    fn regular_master_shape() {
        let p = regular_master(5).unwrap();
        assert_eq!(p.len(), 5);
        // the first edge is the horizontal bottom side
        assert_eq!(p.edge_directions()[0], crate::geom::canonical_direction((1, 0)).unwrap());
        for v in p.vertices() {
            let (x, y) = (v.x.to_f64().unwrap(), v.y.to_f64().unwrap());
            let r2 = x * x + y * y;
            assert!((r2 - 1.0).abs() < 1e-6);
        }
        assert!(regular_master(4).is_err());
        assert!(regular_master(1).is_err());
    }

    #[test]
    fn ladder_realizes_intended() {
        for (k, m) in [(2, 1), (2, 4), (3, 2), (4, 2), (3, 3), (6, 1)] {
            let inst = gen_ladder_2kgon(k, m).unwrap();
            assert_eq!(inst.scene.len(), 2 * k * m);
            assert!(inst.realizes_intended().unwrap(), "k={k} m={m}");
            let count = enumerate_oracle(&inst.intended).len() as u64;
            assert!(inst.expected.admits(count), "k={k} m={m} count={count}");
        }
    }

    #[test]
    fn regular_odd_realizes_intended() {
        for (k, m) in [(3, 2), (5, 2), (7, 2), (9, 3), (3, 1)] {
            let inst = gen_regular_odd(k, m).unwrap();
            assert_eq!(inst.scene.len(), 2 * (k / 2) * m);
            assert!(inst.realizes_intended().unwrap(), "k={k} m={m}");
            let count = enumerate_oracle(&inst.intended).len() as u64;
            assert!(inst.expected.admits(count), "k={k} m={m} count={count}");
        }
    }

    #[test]
    fn copies_are_translates_of_the_master() {
        let inst = gen_regular_odd(5, 2).unwrap();
        let master = regular_master(5).unwrap();
        let InstanceScene::Polygons(scene) = &inst.scene else { panic!() };
        for (_, p) in scene.polygons() {
            let h = homothety_of(&master, p).unwrap();
            assert_eq!(h.scale, int(1));
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(gen_regular_odd(6, 2).is_err());
        assert!(gen_regular_odd(5, 0).is_err());
        assert!(gen_ladder_2kgon(3, 0).is_err());
    }
}
