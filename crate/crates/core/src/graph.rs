//! Immutable simple undirected graphs with the neighborhood, layer and
//! bipartite-completeness primitives the rest of the crate builds on.
//!
//! Vertices are dense indices `0..n`. Neighbor lists are sorted and
//! duplicate-free, so every operation that returns a set of vertices
//! returns it in increasing order. That ordering is what makes the
//! searches downstream deterministic.

use std::collections::VecDeque;
use std::fmt;

/// Errors raised by graph construction and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge `(v, v)` was supplied.
    SelfLoop { vertex: usize },
    /// An edge endpoint is not a vertex of the graph.
    VertexOutOfRange { vertex: usize, n: usize },
    /// The graph has no finite radius.
    Disconnected,
    /// The graph has no vertices.
    Empty,
    /// The two sides passed to a bipartiteness check share a vertex.
    SidesOverlap { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::Disconnected => write!(f, "graph is disconnected (infinite radius)"),
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::SidesOverlap { vertex } => {
                write!(f, "sides overlap at vertex {vertex}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary input, sorting and collapsing duplicates.
    pub fn from_unsorted(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Wraps a vector that is already strictly increasing.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(
            v.windows(2).all(|w| w[0] < w[1]),
            "input not strictly increasing"
        );
        VertexSet(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        VertexSet::from_unsorted(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// True if `self` is a subset of `other`.
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// The first and second neighborhood of a root vertex.
///
/// `s1` is exactly `N(root)` and `s2` the set of vertices at distance
/// two. Vertices farther away are simply absent from both sets; the
/// hunter re-restricts these sets as it deletes vertices, so they are
/// not required to cover the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedLayers {
    pub root: usize,
    pub s1: VertexSet,
    pub s2: VertexSet,
}

impl RootedLayers {
    /// All vertices the layered view can see: root, first and second layer.
    pub fn support(&self) -> VertexSet {
        let mut v: Vec<usize> = self.s1.iter().chain(self.s2.iter()).collect();
        v.push(self.root);
        VertexSet::from_unsorted(v)
    }

    /// The same view with `removed` taken out of both layers.
    pub fn without(&self, removed: &VertexSet) -> RootedLayers {
        RootedLayers {
            root: self.root,
            s1: self.s1.difference(removed),
            s2: self.s2.difference(removed),
        }
    }
}

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Builds a graph on `n` vertices from an edge list.
///
/// Duplicate edges collapse; self-loops and out-of-range endpoints are
/// rejected.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Ok(Graph { n, adj })
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbors of `v` inside `within`, sorted.
    pub fn neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.adj[v]
                .iter()
                .copied()
                .filter(|&w| within.contains(w))
                .collect(),
        )
    }

    /// True iff no three vertices are mutually adjacent.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                // common neighbor of an edge closes a triangle
                let (mut i, mut j) = (0, 0);
                let (a, b) = (&self.adj[u], &self.adj[v]);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return false,
                    }
                }
            }
        }
        true
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// First and second neighborhood of `root`.
    pub fn layers(&self, root: usize) -> RootedLayers {
        let dist = self.bfs_distances(root);
        let s1 = (0..self.n).filter(|&v| dist[v] == Some(1)).collect();
        let s2 = (0..self.n).filter(|&v| dist[v] == Some(2)).collect();
        RootedLayers { root, s1, s2 }
    }

    /// Maximum BFS distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let dist = self.bfs_distances(v);
        let mut ecc = 0;
        for d in dist {
            ecc = ecc.max(d?);
        }
        Some(ecc)
    }

    /// Radius and the least-index center attaining it.
    pub fn radius_and_center(&self) -> Result<(usize, usize), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.n {
            let ecc = self.eccentricity(v).ok_or(GraphError::Disconnected)?;
            if best.is_none_or(|(r, _)| ecc < r) {
                best = Some((ecc, v));
            }
        }
        Ok(best.unwrap())
    }

    /// True iff every `a`-`b` pair is an edge and both sides are
    /// independent sets. Vacuously true when either side is empty.
    pub fn is_complete_bipartite_between(
        &self,
        a: &VertexSet,
        b: &VertexSet,
    ) -> Result<bool, GraphError> {
        if let Some(v) = a.iter().find(|&v| b.contains(v)) {
            return Err(GraphError::SidesOverlap { vertex: v });
        }
        if a.is_empty() || b.is_empty() {
            return Ok(true);
        }
        for side in [a, b] {
            let verts = side.as_slice();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    if self.has_edge(u, v) {
                        return Ok(false);
                    }
                }
            }
        }
        for u in a.iter() {
            for v in b.iter() {
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Subgraph induced on `s`, plus the map from new indices back to
    /// the originals (`mapping[new] == old`).
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let mapping: Vec<usize> = s.iter().collect();
        let mut index_of = vec![usize::MAX; self.n];
        for (i, &v) in mapping.iter().enumerate() {
            index_of[v] = i;
        }
        let mut adj = vec![Vec::new(); mapping.len()];
        for (i, &v) in mapping.iter().enumerate() {
            adj[i] = self.adj[v]
                .iter()
                .filter(|&&w| s.contains(w))
                .map(|&w| index_of[w])
                .collect();
        }
        (
            Graph {
                n: mapping.len(),
                adj,
            },
            mapping,
        )
    }
}
