use crate::error::{Error, Result};
use crate::geom::{int, DirectionSet, Point, Segment};
use crate::graph::{Graph, SegmentScene};

use super::{small_directions, ExpectedCount, Family, GeneratedInstance, InstanceScene};

/// `n/k` parallel segments in each of `k` directions, long enough that any
/// two non-parallel ones cross: the complete `k`-partite graph with
/// `(n/k)^k` maximal cliques.
pub fn gen_kdir_multipartite(n: usize, k: usize) -> Result<GeneratedInstance> {
    if k < 2 || n == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidParameters(format!(
            "need k >= 2 and k dividing n > 0, got n={n}, k={k}"
        )));
    }
    let m = n / k;
    let dirs = small_directions(k);
    let width = dirs.iter().map(|d| d.a().abs() + d.b().abs()).max().unwrap_or(1);
    // Line i at offset s meets line j at offset t within parameter
    // t + s*width of its foot point.
    let reach = int(m as i64 * (1 + width) + 1);
    let set = DirectionSet::new(dirs.clone())?;

    let mut segments = Vec::with_capacity(n);
    let mut part = Vec::with_capacity(n);
    for (i, d) in dirs.iter().enumerate() {
        let w = d.normal();
        let wn = int(w.0 * w.0 + w.1 * w.1);
        let along = d.as_point().scale(&reach);
        for s in 0..m {
            let foot = Point::from_ints(w.0, w.1).scale(&(int(s as i64) / &wn));
            let seg = Segment::new(&foot - &along, &foot + &along, &set)?;
            segments.push((format!("d{}_{}", i + 1, s + 1), seg));
            part.push(i);
        }
    }
    let labels: Vec<String> = segments.iter().map(|(l, _)| l.clone()).collect();
    let mut intended = Graph::empty(labels);
    for a in 0..n {
        for b in a + 1..n {
            if part[a] != part[b] {
                intended.add_edge(a, b);
            }
        }
    }
    Ok(GeneratedInstance {
        family: Family::Multipartite,
        scene: InstanceScene::Segments(SegmentScene::new(set, segments)?),
        intended,
        expected: ExpectedCount::Exact((m as u64).pow(k as u32)),
    })
}

/// `n` horizontal and `n` vertical segments forming a grid, realizing
/// `K_{n,n}`.
pub fn gen_k33_segments(n: usize) -> Result<GeneratedInstance> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be positive".into()));
    }
    let set = DirectionSet::from_pairs(&[(1, 0), (0, 1)])?;
    let len = n as i64 + 1;
    let mut segments = Vec::with_capacity(2 * n);
    for i in 1..=n as i64 {
        let seg = Segment::new(Point::from_ints(0, i), Point::from_ints(len, i), &set)?;
        segments.push((format!("h{i}"), seg));
    }
    for j in 1..=n as i64 {
        let seg = Segment::new(Point::from_ints(j, 0), Point::from_ints(j, len), &set)?;
        segments.push((format!("v{j}"), seg));
    }
    let labels: Vec<String> = segments.iter().map(|(l, _)| l.clone()).collect();
    let mut intended = Graph::empty(labels);
    for i in 0..n {
        for j in 0..n {
            intended.add_edge(i, n + j);
        }
    }
    Ok(GeneratedInstance {
        family: Family::K33,
        scene: InstanceScene::Segments(SegmentScene::new(set, segments)?),
        intended,
        expected: ExpectedCount::Exact((n * n) as u64),
    })
}
