//! Scenes and their intersection graphs.

use std::collections::{BTreeSet, HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::geom::{
    polygons_intersect, segments_intersect, ConvexPolygon, DirectionSet, Point, Rational, Segment,
};

fn check_labels<'a>(labels: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A direction set together with labeled polygons conforming to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    dirs: DirectionSet,
    polygons: Vec<(String, ConvexPolygon)>,
}

impl Scene {
    pub fn new(dirs: DirectionSet, polygons: Vec<(String, ConvexPolygon)>) -> Result<Self> {
        check_labels(polygons.iter().map(|(l, _)| l))?;
        for (_, p) in &polygons {
            if let Some(edge) = p.conforms_to(&dirs) {
                return Err(Error::EdgeDirectionNotInSet {
                    edge,
                    direction: p.edge_directions()[edge],
                });
            }
        }
        Ok(Scene { dirs, polygons })
    }

    pub fn dirs(&self) -> &DirectionSet {
        &self.dirs
    }

    pub fn polygons(&self) -> &[(String, ConvexPolygon)] {
        &self.polygons
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    pub fn polygon(&self, i: usize) -> &ConvexPolygon {
        &self.polygons[i].1
    }

    pub fn labels(&self) -> Vec<String> {
        self.polygons.iter().map(|(l, _)| l.clone()).collect()
    }

    /// Applies `x -> scale * x + translation` to every polygon.
    pub fn transformed(&self, scale: &Rational, translation: &Point) -> Scene {
        Scene {
            dirs: self.dirs.clone(),
            polygons: self
                .polygons
                .iter()
                .map(|(l, p)| (l.clone(), p.transformed(scale, translation)))
                .collect(),
        }
    }
}

/// A direction set together with labeled segments parallel to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentScene {
    dirs: DirectionSet,
    segments: Vec<(String, Segment)>,
}

impl SegmentScene {
    pub fn new(dirs: DirectionSet, segments: Vec<(String, Segment)>) -> Result<Self> {
        check_labels(segments.iter().map(|(l, _)| l))?;
        for (_, s) in &segments {
            if dirs.index_of(&s.direction()).is_none() {
                return Err(Error::SegmentDirectionNotInSet(s.direction()));
            }
        }
        Ok(SegmentScene { dirs, segments })
    }

    pub fn dirs(&self) -> &DirectionSet {
        &self.dirs
    }

    pub fn segments(&self) -> &[(String, Segment)] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.segments.iter().map(|(l, _)| l.clone()).collect()
    }
}

/// Labeled simple undirected graph with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Graph with vertices labeled `0..n`.
    pub fn unlabeled(n: usize) -> Self {
        Graph::empty((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(labels);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Panics on a self-loop or an out-of-range index.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loops are not allowed");
        self.rows[i].insert(j);
        self.rows[j].insert(i);
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.rows[i].ones().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| {
            !self.rows[i].contains(i) && self.rows[i].ones().all(|j| self.rows[j].contains(i))
        })
    }

    fn check_indices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&i| i >= self.len()) {
            Some(&index) => Err(Error::IndexOutOfRange { index, len: self.len() }),
            None => Ok(()),
        }
    }
}

pub fn build_graph(scene: &Scene) -> Graph {
    let mut g = Graph::empty(scene.labels());
    let ps = scene.polygons();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if polygons_intersect(&ps[i].1, &ps[j].1) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn build_segment_graph(scene: &SegmentScene) -> Graph {
    let mut g = Graph::empty(scene.labels());
    let ss = scene.segments();
    for i in 0..ss.len() {
        for j in i + 1..ss.len() {
            if segments_intersect(&ss[i].1, &ss[j].1) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn is_clique(g: &Graph, s: &[usize]) -> Result<bool> {
    g.check_indices(s)?;
    Ok(s
        .iter()
        .enumerate()
        .all(|(a, &i)| s[a + 1..].iter().all(|&j| i != j && g.adjacent(i, j))))
}

/// True iff the clique `s` has no common neighbor outside itself.
pub fn is_maximal_clique(g: &Graph, s: &[usize]) -> Result<bool> {
    if !is_clique(g, s)? {
        return Err(Error::NotAClique);
    }
    let mut common = FixedBitSet::with_capacity(g.len());
    common.insert_range(..);
    for &i in s {
        common.intersect_with(g.neighbors(i));
    }
    Ok(common.is_clear())
}

/// Equality under the matching of vertices by label.
pub fn graphs_equal(g1: &Graph, g2: &Graph) -> Result<bool> {
    check_labels(g1.labels.iter())?;
    check_labels(g2.labels.iter())?;
    if g1.len() != g2.len() {
        return Ok(false);
    }
    let index: HashMap<&str, usize> = g2
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut map = Vec::with_capacity(g1.len());
    for l in &g1.labels {
        match index.get(l.as_str()) {
            Some(&j) => map.push(j),
            None => return Ok(false),
        }
    }
    Ok((0..g1.len()).all(|i| {
        (0..g1.len()).all(|j| g1.adjacent(i, j) == g2.adjacent(map[i], map[j]))
    }))
}

/// Canonical set of vertex sets: each set sorted ascending, sets ordered
/// lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CliqueSet {
    cliques: BTreeSet<Vec<usize>>,
}

impl CliqueSet {
    pub fn new() -> Self {
        CliqueSet::default()
    }

    pub fn insert(&mut self, mut clique: Vec<usize>) -> bool {
        clique.sort_unstable();
        clique.dedup();
        self.cliques.insert(clique)
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn contains(&self, clique: &[usize]) -> bool {
        let mut c = clique.to_vec();
        c.sort_unstable();
        self.cliques.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cliques.iter()
    }

    pub fn extend(&mut self, other: CliqueSet) {
        self.cliques.extend(other.cliques);
    }

    /// True iff no member is a proper subset of another.
    pub fn is_antichain(&self) -> bool {
        let sets: Vec<&Vec<usize>> = self.cliques.iter().collect();
        sets.iter().enumerate().all(|(a, x)| {
            sets.iter()
                .enumerate()
                .all(|(b, y)| a == b || !x.iter().all(|v| y.binary_search(v).is_ok()))
        })
    }

    /// Members present in exactly one of the two sets.
    pub fn symmetric_difference<'a>(&'a self, other: &'a CliqueSet) -> Vec<&'a Vec<usize>> {
        self.cliques.symmetric_difference(&other.cliques).collect()
    }
}

impl FromIterator<Vec<usize>> for CliqueSet {
    fn from_iter<I: IntoIterator<Item = Vec<usize>>>(iter: I) -> Self {
        let mut set = CliqueSet::new();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl<'a> IntoIterator for &'a CliqueSet {
    type Item = &'a Vec<usize>;
    type IntoIter = std::collections::btree_set::Iter<'a, Vec<usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.cliques.iter()
    }
}
