//! Independent brute-force oracles used only by the acceptance suite.
//! They stay definition-level on purpose: subsets are enumerated
//! directly and isomorphism is decided by bijection backtracking, with
//! no code shared with the search under test.

use treehunt_core::tree::{build_tree, TreeSpec};
use treehunt_core::Graph;

/// Does any vertex subset of the right size induce a copy of the tree?
pub fn subset_oracle_contains(g: &Graph, spec: &TreeSpec) -> bool {
    let tree = build_tree(spec);
    let size = tree.graph.vertex_count();
    if size > g.vertex_count() {
        return false;
    }
    let mut subset = Vec::with_capacity(size);
    subsets(g, &tree.graph, size, 0, &mut subset)
}

fn subsets(g: &Graph, tree: &Graph, size: usize, from: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == size {
        return induced_isomorphic(g, tree, subset);
    }
    // not enough vertices left to fill the subset
    if g.vertex_count() - from < size - subset.len() {
        return false;
    }
    for v in from..g.vertex_count() {
        subset.push(v);
        if subsets(g, tree, size, v + 1, subset) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

fn induced_isomorphic(g: &Graph, tree: &Graph, subset: &[usize]) -> bool {
    let size = subset.len();
    let mut edges = 0;
    for i in 0..size {
        for j in (i + 1)..size {
            if g.has_edge(subset[i], subset[j]) {
                edges += 1;
            }
        }
    }
    if edges != tree.edge_count() {
        return false;
    }
    let mut assigned = vec![usize::MAX; size];
    let mut taken = vec![false; size];
    bijections(g, tree, subset, 0, &mut assigned, &mut taken)
}

fn bijections(
    g: &Graph,
    tree: &Graph,
    subset: &[usize],
    tv: usize,
    assigned: &mut Vec<usize>,
    taken: &mut Vec<bool>,
) -> bool {
    if tv == subset.len() {
        return true;
    }
    for slot in 0..subset.len() {
        if taken[slot] {
            continue;
        }
        let consistent = (0..tv).all(|prev| {
            tree.has_edge(tv, prev) == g.has_edge(subset[slot], subset[assigned[prev]])
        });
        if !consistent {
            continue;
        }
        taken[slot] = true;
        assigned[tv] = slot;
        if bijections(g, tree, subset, tv + 1, assigned, taken) {
            return true;
        }
        taken[slot] = false;
    }
    false
}
