//! Symbolic tree shapes, their realization as rooted graphs, the
//! backtracking induced-copy search and embedding certificate checks.
//!
//! A shape is a list of per-level child counts: `[a, b]` is the
//! radius-two tree whose root has `a` children each with `b` children;
//! `[t, 2, 1]` is the radius-three tree the hunter looks for.

use crate::graph::{build_graph, Graph, VertexSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSpecError {
    EmptyLevels,
    ZeroDegree { level: usize },
}

impl fmt::Display for TreeSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeSpecError::EmptyLevels => write!(f, "tree shape needs at least one level"),
            TreeSpecError::ZeroDegree { level } => {
                write!(f, "level {level} has zero children per vertex")
            }
        }
    }
}

impl std::error::Error for TreeSpecError {}

/// Per-level child counts of a uniform rooted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    level_degrees: Vec<usize>,
}

impl TreeSpec {
    pub fn new(level_degrees: Vec<usize>) -> Result<Self, TreeSpecError> {
        if level_degrees.is_empty() {
            return Err(TreeSpecError::EmptyLevels);
        }
        if let Some(level) = level_degrees.iter().position(|&d| d == 0) {
            return Err(TreeSpecError::ZeroDegree { level });
        }
        Ok(TreeSpec { level_degrees })
    }

    /// The radius-three shape `[t, 2, 1]` hunted for throughout.
    pub fn hunted(t: usize) -> Self {
        TreeSpec::new(vec![t, 2, 1]).expect("t >= 1")
    }

    pub fn level_degrees(&self) -> &[usize] {
        &self.level_degrees
    }

    pub fn depth(&self) -> usize {
        self.level_degrees.len()
    }

    /// Number of children of a vertex at `depth`.
    pub fn children_at(&self, depth: usize) -> usize {
        self.level_degrees.get(depth).copied().unwrap_or(0)
    }

    /// 1 + d1 + d1*d2 + ...
    pub fn vertex_count(&self) -> usize {
        let mut total = 1;
        let mut level = 1;
        for &d in &self.level_degrees {
            level *= d;
            total += level;
        }
        total
    }
}

impl fmt::Display for TreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.level_degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// A tree realized as a graph, vertices in breadth-first order from the
/// root (vertex 0).
#[derive(Debug, Clone)]
pub struct TreeGraph {
    pub graph: Graph,
    pub root: usize,
    pub depth_of: Vec<usize>,
    pub parent_of: Vec<Option<usize>>,
}

/// Realizes a shape as a rooted tree in BFS vertex order.
pub fn build_tree(spec: &TreeSpec) -> TreeGraph {
    let total = spec.vertex_count();
    let mut edges = Vec::with_capacity(total.saturating_sub(1));
    let mut depth_of = vec![0usize; total];
    let mut parent_of = vec![None; total];

    let mut level_start = 0usize;
    let mut level_size = 1usize;
    let mut next = 1usize;
    for (depth, &d) in spec.level_degrees().iter().enumerate() {
        for parent in level_start..level_start + level_size {
            for _ in 0..d {
                edges.push((parent, next));
                depth_of[next] = depth + 1;
                parent_of[next] = Some(parent);
                next += 1;
            }
        }
        level_start += level_size;
        level_size *= d;
    }
    debug_assert_eq!(next, total);

    TreeGraph {
        graph: build_graph(total, &edges).expect("tree layout is valid"),
        root: 0,
        depth_of,
        parent_of,
    }
}

/// Injective map from tree vertices (BFS indices) to host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_of(&self, tree_vertex: usize) -> usize {
        self.map[tree_vertex]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Host image as a vertex set.
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

/// True iff `e` is a total, injective, induced embedding of the shape
/// into `g`: tree edges map to edges and tree non-edges to non-edges.
pub fn verify_embedding(g: &Graph, spec: &TreeSpec, e: &Embedding) -> bool {
    let tree = build_tree(spec);
    let total = tree.graph.vertex_count();
    if e.len() != total {
        return false;
    }
    if e.map().iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in e.map() {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for a in 0..total {
        for b in (a + 1)..total {
            if tree.graph.has_edge(a, b) != g.has_edge(e.image_of(a), e.image_of(b)) {
                return false;
            }
        }
    }
    true
}

/// Backtracking search for an induced copy of `spec` in `g`.
///
/// Tree vertices are placed in BFS order; every placement is checked
/// against all previously placed vertices, so inducedness holds at each
/// partial step. Children of a common parent are assigned increasing
/// host indices, which removes sibling permutations without losing any
/// vertex set. The first embedding found is the lexicographically
/// least one under host-index order; with `root_candidates` given the
/// root maps only into that set.
pub fn find_induced_copy(
    g: &Graph,
    spec: &TreeSpec,
    root_candidates: Option<&VertexSet>,
) -> Option<Embedding> {
    let tree = build_tree(spec);
    let total = tree.graph.vertex_count();
    if total > g.vertex_count() {
        return None;
    }

    let mut placed: Vec<usize> = Vec::with_capacity(total);
    let mut used = vec![false; g.vertex_count()];

    fn feasible(
        g: &Graph,
        tree: &TreeGraph,
        spec: &TreeSpec,
        placed: &[usize],
        tv: usize,
        host: usize,
    ) -> bool {
        // a vertex must still have room for its children
        if g.degree(host) < spec.children_at(tree.depth_of[tv]) {
            return false;
        }
        for (prev, &prev_host) in placed.iter().enumerate() {
            if g.has_edge(host, prev_host) != tree.graph.has_edge(tv, prev) {
                return false;
            }
        }
        true
    }

    fn search(
        g: &Graph,
        tree: &TreeGraph,
        spec: &TreeSpec,
        root_candidates: Option<&VertexSet>,
        placed: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let tv = placed.len();
        if tv == tree.graph.vertex_count() {
            return true;
        }
        let candidates: Vec<usize> = match tree.parent_of[tv] {
            None => match root_candidates {
                Some(set) => set.iter().collect(),
                None => (0..g.vertex_count()).collect(),
            },
            Some(parent) => {
                // siblings are consecutive in BFS order; force increasing
                // host indices within each sibling block
                let min = if tv > 0 && tree.parent_of[tv - 1] == Some(parent) {
                    placed[tv - 1] + 1
                } else {
                    0
                };
                g.neighbors(placed[parent])
                    .iter()
                    .copied()
                    .filter(|&h| h >= min)
                    .collect()
            }
        };
        for host in candidates {
            if used[host] || !feasible(g, tree, spec, placed, tv, host) {
                continue;
            }
            used[host] = true;
            placed.push(host);
            if search(g, tree, spec, root_candidates, placed, used) {
                return true;
            }
            placed.pop();
            used[host] = false;
        }
        false
    }

    if search(g, &tree, spec, root_candidates, &mut placed, &mut used) {
        Some(Embedding::new(placed))
    } else {
        None
    }
}
