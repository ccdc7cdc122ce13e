//! Maximal clique enumeration: the geometric supporting-line method and a
//! purely combinatorial oracle.

mod oracle;
mod supporting_line;

use std::collections::BTreeSet;

use num_bigint::BigUint;

pub use oracle::enumerate_oracle;
pub use supporting_line::{
    enumerate_supporting_line, enumerate_supporting_line_with, SupportLevel, SupportProfile,
};

use crate::graph::{build_graph, CliqueSet, Graph, Scene};

/// Largest clique of a maximal-clique family; among equal sizes the
/// lexicographically smallest index sequence wins.
pub fn largest_of(cliques: &CliqueSet) -> Vec<usize> {
    let mut best: Option<&Vec<usize>> = None;
    // iteration is lexicographic, so a strict `>` keeps the first of each size
    for c in cliques {
        if best.is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    }
    best.cloned().unwrap_or_default()
}

/// A maximum clique of `g`.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    largest_of(&enumerate_oracle(g))
}

/// A maximum clique of the scene's graph, via the supporting-line method.
pub fn max_clique_in_scene(scene: &Scene) -> Vec<usize> {
    largest_of(&enumerate_supporting_line(scene))
}

/// Outcome of comparing a scene's maximal clique count with `n^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundAudit {
    pub n: usize,
    /// Declared number of directions.
    pub k: usize,
    /// Directions that actually occur as an edge direction.
    pub directions_used: usize,
    pub clique_count: usize,
    pub limit: BigUint,
    pub pass: bool,
}

pub fn audit_bound(scene: &Scene) -> BoundAudit {
    audit_with(scene, &enumerate_supporting_line(scene))
}

/// Audit with a precomputed clique family of `scene`.
pub fn audit_with(scene: &Scene, cliques: &CliqueSet) -> BoundAudit {
    let n = scene.len();
    let k = scene.dirs().len();
    let used: BTreeSet<_> = scene
        .polygons()
        .iter()
        .flat_map(|(_, p)| p.edge_directions())
        .collect();
    let limit = BigUint::from(n).pow(k as u32);
    let clique_count = cliques.len();
    BoundAudit {
        n,
        k,
        directions_used: used.len(),
        clique_count,
        pass: BigUint::from(clique_count) <= limit,
        limit,
    }
}

/// Graph of the scene and its maximal cliques, by both methods.
pub fn enumerate_both(scene: &Scene) -> (Graph, CliqueSet, CliqueSet) {
    let g = build_graph(scene);
    let geometric = enumerate_supporting_line_with(scene, &g);
    let combinatorial = enumerate_oracle(&g);
    (g, geometric, combinatorial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ConvexPolygon, DirectionSet, Point};

    fn complete_bipartite(n: usize) -> Graph {
        let labels = (1..=n)
            .map(|i| format!("h{i}"))
            .chain((1..=n).map(|i| format!("v{i}")))
            .collect();
        let mut g = Graph::empty(labels);
        for i in 0..n {
            for j in 0..n {
                g.add_edge(i, n + j);
            }
        }
        g
    }

    #[test]
    fn max_clique_tie_break() {
        // brute force: every maximal clique of K_{3,3} is an edge {h, v};
        // the smallest sorted index pair is (0, 3)
        let g = complete_bipartite(3);
        let all = enumerate_oracle(&g);
        assert_eq!(all.len(), 9);
        let smallest = all.iter().filter(|c| c.len() == 2).min().unwrap().clone();
        assert_eq!(smallest, vec![0, 3]);
        assert_eq!(max_clique(&g), vec![0, 3]);
    }

    #[test]
    fn max_clique_of_complete_graph() {
        let mut g = Graph::unlabeled(4);
        for i in 0..4 {
            for j in i + 1..4 {
                g.add_edge(i, j);
            }
        }
        assert_eq!(max_clique(&g), vec![0, 1, 2, 3]);
        assert!(max_clique(&Graph::unlabeled(0)).is_empty());
    }

    #[test]
    fn single_polygon_audit() {
        let dirs = DirectionSet::from_pairs(&[(1, 0), (0, 1)]).unwrap();
        let sq = ConvexPolygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ])
        .unwrap();
        let s = Scene::new(dirs, vec![("a".into(), sq)]).unwrap();
        let audit = audit_bound(&s);
        assert_eq!(audit.clique_count, 1);
        assert_eq!(audit.limit, BigUint::from(1u32));
        assert!(audit.pass);
        assert_eq!(audit.directions_used, 2);
    }
}
