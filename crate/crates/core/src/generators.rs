//! Deterministic constructions of triangle-free, high-chromatic test
//! graphs: cycles, iterated Mycielskians, Kneser graphs and a seeded
//! random triangle-free process.

use crate::graph::{build_graph, Graph, GraphError};

/// Fixed 64-bit xorshift* generator.
///
/// Embedded so that seeded corpora reproduce bit-identically everywhere;
/// no external randomness is used anywhere in the crate.
#[derive(Debug, Clone)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    /// A zero seed would lock xorshift at zero, so it maps to a fixed
    /// nonzero constant.
    pub fn new(seed: u64) -> Self {
        let state = if seed == 0 {
            0x9E37_79B9_7F4A_7C15
        } else {
            seed
        };
        Rng64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish draw in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// The cycle `C_n`, for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::VertexOutOfRange { vertex: n, n: 3 });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build_graph(n, &edges)
}

/// Mycielski construction.
///
/// Output layout is fixed: originals `0..n`, shadows `n..2n` (shadow of
/// `u` is `n + u`, adjacent to `N(u)`), apex `2n` adjacent to every
/// shadow. Triangle-freeness is preserved and the chromatic number
/// rises by one; with at least one input edge the apex has
/// eccentricity exactly 2.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(3 * g.edge_count() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for u in 0..n {
        edges.push((n + u, 2 * n));
    }
    build_graph(2 * n + 1, &edges).expect("mycielskian layout is always valid")
}

/// `k` Mycielski iterations applied to `C_5`.
pub fn iterated_mycielski(k: usize) -> Graph {
    let mut g = cycle(5).unwrap();
    for _ in 0..k {
        g = mycielskian(&g);
    }
    g
}

/// Kneser graph: vertices are the `k`-subsets of `{1..n}` in
/// lexicographic order, edges join disjoint subsets. Requires `n >= 2k`.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 2 * k {
        return Err(GraphError::VertexOutOfRange {
            vertex: n,
            n: 2 * k,
        });
    }
    let subsets = k_subsets(n, k);
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                edges.push((i, j));
            }
        }
    }
    build_graph(subsets.len(), &edges)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for x in start..=n {
            current.push(x);
            rec(x + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

/// Seeded triangle-free process.
///
/// Candidate pairs are visited in a seeded shuffle of lexicographic
/// order; each is added unless it would close a triangle, stopping at
/// `target_edges` accepted edges or exhaustion. Identical inputs give
/// identical graphs.
pub fn random_triangle_free(n: usize, target_edges: usize, seed: u64) -> Graph {
    let mut rng = Rng64::new(seed);
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            candidates.push((u, v));
        }
    }
    rng.shuffle(&mut candidates);

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut accepted = Vec::new();
    for (u, v) in candidates {
        if accepted.len() == target_edges {
            break;
        }
        let closes_triangle = adj[u].iter().any(|w| adj[v].contains(w));
        if !closes_triangle {
            adj[u].push(v);
            adj[v].push(u);
            accepted.push((u, v));
        }
    }
    build_graph(n, &accepted).expect("process only emits valid edges")
}
