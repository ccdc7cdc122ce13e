use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, DirectionSet, Point};
use crate::graph::{Graph, Scene};

use super::{ExpectedCount, Family, GeneratedInstance, InstanceScene};

fn square(x: i64, y: i64, side: i64) -> Result<ConvexPolygon> {
    ConvexPolygon::new(vec![
        Point::from_ints(x, y),
        Point::from_ints(x + side, y),
        Point::from_ints(x + side, y + side),
        Point::from_ints(x, y + side),
    ])
}

/// `2k+1` large squares on a diagonal staircase, pairwise overlapping, each
/// with a small private square on its top-left corner: the clique
/// `K_{2k+1}` with one pendant vertex per clique vertex.
pub fn gen_sun(k: usize) -> Result<GeneratedInstance> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    let count = 2 * k + 1;
    // wider than the whole staircase, so every two large squares overlap
    let side = 20 * k as i64 + 20;
    let mut polygons = Vec::with_capacity(2 * count);
    for x in 1..=count as i64 {
        polygons.push((format!("c{x}"), square(10 * x - 10, 5 * x, side)?));
    }
    for x in 1..=count as i64 {
        polygons.push((format!("p{x}"), square(10 * x - 13, 5 * x + side - 3, 6)?));
    }
    let labels: Vec<String> = polygons.iter().map(|(l, _)| l.clone()).collect();
    let mut intended = Graph::empty(labels);
    for a in 0..count {
        for b in a + 1..count {
            intended.add_edge(a, b);
        }
        intended.add_edge(a, count + a);
    }
    let dirs = DirectionSet::from_pairs(&[(1, 0), (0, 1)])?;
    Ok(GeneratedInstance {
        family: Family::Sun,
        scene: InstanceScene::Polygons(Scene::new(dirs, polygons)?),
        intended,
        expected: ExpectedCount::Exact(count as u64 + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::enumerate_oracle;

    #[test]
    fn sun_realizes_intended() {
        for k in 1..=10 {
            let inst = gen_sun(k).unwrap();
            assert!(inst.realizes_intended().unwrap(), "k={k}");
        }
    }

    #[test]
    fn sun_clique_counts() {
        assert_eq!(enumerate_oracle(&gen_sun(1).unwrap().intended).len(), 4);
        assert_eq!(enumerate_oracle(&gen_sun(2).unwrap().intended).len(), 6);
        assert!(gen_sun(0).is_err());
    }
}
