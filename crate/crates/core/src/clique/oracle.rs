use fixedbitset::FixedBitSet;

use crate::graph::{CliqueSet, Graph};

/// All maximal cliques by pivoting Bron–Kerbosch over bitset rows.
///
/// The empty graph has no maximal cliques.
pub fn enumerate_oracle(g: &Graph) -> CliqueSet {
    let n = g.len();
    let mut out = CliqueSet::new();
    if n == 0 {
        return out;
    }
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut current = Vec::new();
    expand(g, &mut current, candidates, FixedBitSet::with_capacity(n), &mut out);
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut CliqueSet,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.insert(current.clone());
        }
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbors in P.
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| g.neighbors(u).intersection(&candidates).count())
        .expect("candidates nonempty");
    let mut branch = candidates.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.ones() {
        let mut next_p = candidates.clone();
        next_p.intersect_with(g.neighbors(v));
        let mut next_x = excluded.clone();
        next_x.intersect_with(g.neighbors(v));
        current.push(v);
        expand(g, current, next_p, next_x, out);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}
