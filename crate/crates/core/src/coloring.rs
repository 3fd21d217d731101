//! Exact and heuristic chromatic-number computation.
//!
//! The exact solver is a branch-and-bound over vertices in saturation
//! order, seeded with a greedy upper bound and a greedy-clique lower
//! bound. Budget exhaustion degrades to valid bounds instead of
//! aborting, so callers can push larger graphs through it safely.

use crate::graph::{Graph, VertexSet};
use std::fmt;

/// Search-node budget used by callers that do not care to pick one.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// The order passed to the greedy colorer is not a permutation of
    /// the vertices.
    MalformedPermutation,
    /// A coloring does not assign exactly one color per vertex.
    AssignmentSizeMismatch { expected: usize, got: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::MalformedPermutation => write!(f, "order is not a permutation"),
            ColoringError::AssignmentSizeMismatch { expected, got } => {
                write!(f, "coloring covers {got} vertices, graph has {expected}")
            }
        }
    }
}

impl std::error::Error for ColoringError {}

/// A per-vertex color assignment. `color_count` is always
/// `max(assignment) + 1` (or 0 when there are no vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let color_count = assignment.iter().max().map_or(0, |&c| c + 1);
        Coloring {
            assignment,
            color_count,
        }
    }
}

/// Outcome of an exact solve: bounds, exactness flag, a proper witness
/// achieving the upper bound, and the number of search nodes spent.
#[derive(Debug, Clone)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: Coloring,
    pub search_nodes: u64,
}

/// Greedy coloring along `order`: each vertex takes the least color
/// absent among its earlier-colored neighbors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, ColoringError> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(ColoringError::MalformedPermutation);
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(ColoringError::MalformedPermutation);
        }
        seen[v] = true;
    }

    let mut assignment = vec![usize::MAX; n];
    for &v in order {
        let mut used = vec![false; g.degree(v) + 1];
        for &w in g.neighbors(v) {
            let c = assignment[w];
            if c < used.len() {
                used[c] = true;
            }
        }
        assignment[v] = used.iter().position(|&u| !u).unwrap();
    }
    Ok(Coloring::new(assignment))
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.assignment.len() != g.vertex_count() {
        return Err(ColoringError::AssignmentSizeMismatch {
            expected: g.vertex_count(),
            got: c.assignment.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| c.assignment[u] != c.assignment[v]))
}

/// Greedy maximal clique, used as a lower bound. Starts at the
/// max-degree (then least-index) vertex and extends by least index.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut clique = vec![start];
    loop {
        let next =
            (0..n).find(|&v| !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)));
        match next {
            Some(v) => clique.push(v),
            None => return clique,
        }
    }
}

/// DSATUR order used to seed the upper bound: repeatedly color the
/// vertex with the most distinctly-colored neighbors.
fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut assignment = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| assignment[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let color = (0..).find(|&c| !neighbor_colors[v][c]).unwrap();
        assignment[v] = color;
        for &w in g.neighbors(v) {
            if !neighbor_colors[w][color] {
                neighbor_colors[w][color] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::new(assignment)
}

enum SearchVerdict {
    Found(Vec<usize>),
    Infeasible,
    BudgetExhausted,
}

struct KColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    assignment: Vec<usize>,
    /// per vertex, per color: how many neighbors carry that color
    conflicts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    colored: usize,
    used_colors: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> KColorSearch<'a> {
    fn new(g: &'a Graph, k: usize, budget: u64) -> Self {
        let n = g.vertex_count();
        KColorSearch {
            g,
            k,
            assignment: vec![usize::MAX; n],
            conflicts: vec![vec![0; k]; n],
            saturation: vec![0; n],
            colored: 0,
            used_colors: 0,
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.assignment[v] = c;
        self.colored += 1;
        for &w in self.g.neighbors(v) {
            if self.conflicts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.conflicts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.assignment[v] = usize::MAX;
        self.colored -= 1;
        for &w in self.g.neighbors(v) {
            self.conflicts[w][c] -= 1;
            if self.conflicts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn run(&mut self) -> SearchVerdict {
        self.nodes += 1;
        if self.nodes > self.budget {
            return SearchVerdict::BudgetExhausted;
        }
        let n = self.g.vertex_count();
        if self.colored == n {
            return SearchVerdict::Found(self.assignment.clone());
        }
        // most saturated first, ties by degree then least index
        let v = (0..n)
            .filter(|&v| self.assignment[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        if self.saturation[v] == self.k {
            return SearchVerdict::Infeasible;
        }
        // trying more than one fresh color only relabels the palette
        let limit = self.k.min(self.used_colors + 1);
        for c in 0..limit {
            if self.conflicts[v][c] > 0 {
                continue;
            }
            let fresh = c == self.used_colors;
            if fresh {
                self.used_colors += 1;
            }
            self.assign(v, c);
            match self.run() {
                SearchVerdict::Found(sol) => return SearchVerdict::Found(sol),
                SearchVerdict::BudgetExhausted => return SearchVerdict::BudgetExhausted,
                SearchVerdict::Infeasible => {}
            }
            self.unassign(v, c);
            if fresh {
                self.used_colors -= 1;
            }
        }
        SearchVerdict::Infeasible
    }
}

/// Exact chromatic number by branch-and-bound, within `node_budget`
/// search nodes. On exhaustion the result carries valid bounds and
/// `exact = false`; the witness is always a proper coloring achieving
/// `upper`.
pub fn chromatic_number(g: &Graph, node_budget: u64) -> ChromaticResult {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticResult {
            lower: 0,
            upper: 0,
            exact: true,
            witness: Coloring::new(Vec::new()),
            search_nodes: 0,
        };
    }
    let mut lower = greedy_clique(g).len();
    let mut witness = dsatur_greedy(g);
    let mut upper = witness.color_count;
    let mut spent: u64 = 0;

    while lower < upper {
        let k = upper - 1;
        let mut search = KColorSearch::new(g, k, node_budget.saturating_sub(spent));
        let verdict = search.run();
        spent += search.nodes;
        match verdict {
            SearchVerdict::Found(assignment) => {
                witness = Coloring::new(assignment);
                upper = witness.color_count;
                debug_assert!(upper <= k);
            }
            SearchVerdict::Infeasible => {
                lower = upper;
            }
            SearchVerdict::BudgetExhausted => {
                return ChromaticResult {
                    lower,
                    upper,
                    exact: false,
                    witness,
                    search_nodes: spent,
                };
            }
        }
    }
    ChromaticResult {
        lower,
        upper,
        exact: true,
        witness,
        search_nodes: spent,
    }
}

/// Chromatic number of the subgraph induced on `s`. The witness is in
/// induced coordinates, aligned with `s` in sorted order.
pub fn chromatic_of_subset(g: &Graph, s: &VertexSet, node_budget: u64) -> ChromaticResult {
    let (h, _) = g.induced(s);
    chromatic_number(&h, node_budget)
}
