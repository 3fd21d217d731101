//! The constructive engine.
//!
//! Given a triangle-free radius-two graph, the hunter tries to build an
//! induced `T(t,2,1)` rooted at a center: greedy extraction of five-vertex
//! pieces first, and when that stalls, a structural pass that labels
//! first-layer vertices with covering pairs, reduces the labeled set to
//! a neighborhood basis, finds a wide radius-two backbone tree inside
//! the basis, and assembles the target tree from backbone rows and
//! first-layer partners. Every structural assumption along the way is
//! checked at runtime; a failed check produces a structured report
//! instead of a wrong certificate, and every `Found` outcome carries an
//! embedding that has passed `verify_embedding`.
//!
//! All tie-breaking is least-index, so outcomes are deterministic.

use crate::coloring::Coloring;
use crate::graph::{Graph, RootedLayers, VertexSet};
use crate::tree::{find_induced_copy, verify_embedding, Embedding, TreeSpec};
use std::collections::BTreeMap;
use std::fmt;

/// One extracted five-vertex piece: a first-layer vertex `base` with
/// two second-layer neighbors `arm_a`, `arm_b`, each owning a private
/// second-layer neighbor (`tip_a`, `tip_b`) with the tips nonadjacent.
/// The five induce a `T(2,1)`. `deletion_set` is everything removed
/// from the residual graph when the piece is banked: the five vertices,
/// the second-layer neighborhood of `base`, and the full residual
/// neighborhoods of arms and tips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionPiece {
    pub base: usize,
    pub arm_a: usize,
    pub arm_b: usize,
    pub tip_a: usize,
    pub tip_b: usize,
    pub deletion_set: VertexSet,
}

/// A first-layer vertex together with the pair of its second-layer
/// neighbors that covers every outside attachment: any second-layer
/// vertex adjacent to some neighbor of `vertex` is adjacent to one of
/// the pair. The two entries may coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPair {
    pub vertex: usize,
    pub pair: (usize, usize),
}

/// The labeled vertices and their minimal dominating subset under
/// second-layer neighborhood containment.
#[derive(Debug, Clone)]
pub struct CoverBasis {
    /// Every vertex that carries some label.
    pub labeled: VertexSet,
    /// Minimal subset such that each labeled vertex's second-layer
    /// neighborhood is contained in some member's.
    pub basis: VertexSet,
    /// Least-index dominator in `basis` for each labeled vertex.
    pub dominator_of: BTreeMap<usize, usize>,
}

/// The wide radius-two tree found inside the basis: a root with
/// `arms` children, each with `fan` children.
#[derive(Debug, Clone)]
pub struct BackboneTree {
    pub embedding: Embedding,
    pub arms: usize,
    pub fan: usize,
}

impl BackboneTree {
    pub fn root(&self) -> usize {
        self.embedding.image_of(0)
    }

    /// Host vertex of arm `i`, 1-based.
    pub fn arm(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.arms);
        self.embedding.image_of(i)
    }

    /// Host vertex of leaf `j` under arm `i`, both 1-based.
    pub fn leaf(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= j && j <= self.fan);
        self.embedding.image_of(self.arms + (i - 1) * self.fan + j)
    }

    /// Arm index if tree position `pos` is a leaf position.
    pub fn row_of_position(&self, pos: usize) -> Option<usize> {
        if pos > self.arms {
            Some((pos - self.arms - 1) / self.fan + 1)
        } else {
            None
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.embedding.image()
    }
}

/// How a stalled residual can fail its structural check. The witness
/// tuple doubles as a findable piece on triangle-free hosts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StallViolationKind {
    /// Two private fringe vertices of a pair miss their cross edge.
    MissingCrossEdge,
    /// A private fringe contains an internal edge (impossible without
    /// triangles).
    SideNotIndependent,
    /// Two outside traces on a fringe are neither nested nor disjoint.
    NotLaminar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StallViolation {
    pub vertex: usize,
    pub pair: (usize, usize),
    pub ends: (usize, usize),
    pub kind: StallViolationKind,
}

/// The specific structural step that could not proceed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailedStep {
    /// `find_piece` said no piece exists but the stall structure check
    /// found a violating tuple. Indicates an internal inconsistency.
    StallInconsistency(StallViolation),
    /// Some first-layer vertex admits no covering pair.
    CoverPairMissing { vertex: usize },
    /// A second-layer vertex has no dominating basis vertex to inherit
    /// a color from.
    ColorExtensionStuck { vertex: usize },
    /// No wide backbone tree inside the basis.
    BackboneMissing { basis_size: usize },
    /// A first-layer vertex attached to a backbone leaf is adjacent to
    /// tree vertices outside its row and the root, or to more than two.
    LeafAttachmentShape {
        vertex: usize,
        positions: Vec<usize>,
    },
    /// No second-layer vertex adjacent to the lead leaf avoids the root.
    CoAnchorMissing { lead_leaf: usize },
    /// The co-anchor misses a required arm adjacency or touches a
    /// foreign leaf.
    CoAnchorAdjacency {
        co_anchor: usize,
        tree_vertex: usize,
        expected_adjacent: bool,
    },
    /// Some partner of a foreign-row leaf is adjacent to both anchors.
    AnchorExclusivity { vertex: usize, leaf: usize },
    /// Fewer than `needed` rows share an avoided anchor (or survive
    /// pair selection).
    RowShortage { qualifying: usize, needed: usize },
    /// Fewer than `needed` rows admit an induced four-matching into the
    /// first layer.
    MatchingShortage { matched: usize, needed: usize },
    /// No first-layer vertex is adjacent to both the backbone root and
    /// a leaf, so the anchored branch cannot start.
    LeadPairMissing,
    /// A constructed embedding failed final verification.
    AssemblyUnverified,
}

impl FailedStep {
    /// Stable short name for reports and serialization.
    pub fn phase(&self) -> &'static str {
        match self {
            FailedStep::StallInconsistency(_) => "stall-check",
            FailedStep::CoverPairMissing { .. } => "cover-pair",
            FailedStep::ColorExtensionStuck { .. } => "color-extension",
            FailedStep::BackboneMissing { .. } => "backbone",
            FailedStep::LeafAttachmentShape { .. } => "leaf-attachment",
            FailedStep::CoAnchorMissing { .. } => "co-anchor",
            FailedStep::CoAnchorAdjacency { .. } => "co-anchor-adjacency",
            FailedStep::AnchorExclusivity { .. } => "anchor-exclusivity",
            FailedStep::RowShortage { .. } => "row-shortage",
            FailedStep::MatchingShortage { .. } => "matching-shortage",
            FailedStep::LeadPairMissing => "lead-pair",
            FailedStep::AssemblyUnverified => "assembly",
        }
    }

    /// Vertices worth pointing at in a report.
    pub fn witnesses(&self) -> Vec<usize> {
        match self {
            FailedStep::StallInconsistency(v) => {
                vec![v.vertex, v.pair.0, v.pair.1, v.ends.0, v.ends.1]
            }
            FailedStep::CoverPairMissing { vertex } => vec![*vertex],
            FailedStep::ColorExtensionStuck { vertex } => vec![*vertex],
            FailedStep::BackboneMissing { .. } => vec![],
            FailedStep::LeafAttachmentShape { vertex, .. } => vec![*vertex],
            FailedStep::CoAnchorMissing { lead_leaf } => vec![*lead_leaf],
            FailedStep::CoAnchorAdjacency {
                co_anchor,
                tree_vertex,
                ..
            } => {
                vec![*co_anchor, *tree_vertex]
            }
            FailedStep::AnchorExclusivity { vertex, leaf } => vec![*vertex, *leaf],
            FailedStep::RowShortage { .. } => vec![],
            FailedStep::MatchingShortage { .. } => vec![],
            FailedStep::LeadPairMissing => vec![],
            FailedStep::AssemblyUnverified => vec![],
        }
    }
}

impl fmt::Display for FailedStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedStep::StallInconsistency(v) => write!(
                f,
                "stall structure violated at vertex {} pair ({},{})",
                v.vertex, v.pair.0, v.pair.1
            ),
            FailedStep::CoverPairMissing { vertex } => {
                write!(f, "no covering pair for vertex {vertex}")
            }
            FailedStep::ColorExtensionStuck { vertex } => {
                write!(f, "no dominating basis vertex for {vertex}")
            }
            FailedStep::BackboneMissing { basis_size } => {
                write!(f, "no backbone tree in basis of {basis_size} vertices")
            }
            FailedStep::LeafAttachmentShape { vertex, positions } => {
                write!(f, "vertex {vertex} attaches outside its row: {positions:?}")
            }
            FailedStep::CoAnchorMissing { lead_leaf } => {
                write!(f, "no co-anchor for lead leaf {lead_leaf}")
            }
            FailedStep::CoAnchorAdjacency {
                co_anchor,
                tree_vertex,
                expected_adjacent,
            } => {
                if *expected_adjacent {
                    write!(f, "co-anchor {co_anchor} not adjacent to arm {tree_vertex}")
                } else {
                    write!(
                        f,
                        "co-anchor {co_anchor} adjacent to foreign leaf {tree_vertex}"
                    )
                }
            }
            FailedStep::AnchorExclusivity { vertex, leaf } => {
                write!(f, "partner {vertex} of leaf {leaf} touches both anchors")
            }
            FailedStep::RowShortage { qualifying, needed } => {
                write!(f, "only {qualifying} usable rows, need {needed}")
            }
            FailedStep::MatchingShortage { matched, needed } => {
                write!(
                    f,
                    "only {matched} rows admit a four-matching, need {needed}"
                )
            }
            FailedStep::LeadPairMissing => write!(f, "no vertex adjacent to root and a leaf"),
            FailedStep::AssemblyUnverified => write!(f, "assembled embedding failed verification"),
        }
    }
}

/// Where a constructive attempt gave up, for one center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub center: usize,
    pub pieces_extracted: usize,
    pub step: FailedStep,
}

/// Which route produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoundVia {
    /// Greedy extraction ran to completion.
    Pieces,
    /// Matching rows of the backbone against first-layer partners.
    Matching,
    /// Anchored assembly through the co-anchor.
    Anchored,
    /// The brute-force fallback search.
    Oracle,
}

impl FoundVia {
    pub fn name(&self) -> &'static str {
        match self {
            FoundVia::Pieces => "pieces",
            FoundVia::Matching => "matching",
            FoundVia::Anchored => "anchored",
            FoundVia::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntStatus {
    Found,
    NotFound,
    PremiseViolated,
    StepFailed,
}

impl HuntStatus {
    pub fn name(&self) -> &'static str {
        match self {
            HuntStatus::Found => "found",
            HuntStatus::NotFound => "not_found",
            HuntStatus::PremiseViolated => "premise_violated",
            HuntStatus::StepFailed => "step_failed",
        }
    }
}

/// Outcome of a hunt. `status == Found` implies a certificate that has
/// passed `verify_embedding` for the shape `[t,2,1]`.
#[derive(Debug, Clone)]
pub struct HuntOutcome {
    pub status: HuntStatus,
    pub t: usize,
    pub certificate: Option<Embedding>,
    pub via: Option<FoundVia>,
    /// Center whose constructive run produced the certificate.
    pub center: Option<usize>,
    /// First constructive failure, kept for diagnosis even when the
    /// fallback search settles the question.
    pub report: Option<FailureReport>,
    pub detail: String,
}

/// A residual graph during extraction: the vertices that survive, as a
/// mask over the original graph, together with the radius-two view the
/// structural machinery works in. Vertices that drift to distance
/// three or more from the root (every first-layer attachment deleted)
/// stay alive — they still count for the chromatic budget — but drop
/// out of both layers of the view.
#[derive(Debug, Clone)]
pub struct Residual {
    pub root: usize,
    /// Vertex set of the residual graph, root included.
    pub alive: VertexSet,
    /// First and second layer of the root within the residual graph.
    pub view: RootedLayers,
}

impl Residual {
    /// The whole graph as a residual rooted at `root`.
    pub fn full(g: &Graph, root: usize) -> Residual {
        let alive: VertexSet = (0..g.vertex_count()).collect();
        Residual {
            root,
            view: residual_view(g, root, &alive),
            alive,
        }
    }

    /// Removes `deleted` and recomputes the view.
    pub fn without(&self, g: &Graph, deleted: &VertexSet) -> Residual {
        let alive = self.alive.difference(deleted);
        Residual {
            root: self.root,
            view: residual_view(g, self.root, &alive),
            alive,
        }
    }
}

fn residual_view(g: &Graph, root: usize, alive: &VertexSet) -> RootedLayers {
    let s1 = g.neighbors_in(root, alive);
    let s2: VertexSet = alive
        .iter()
        .filter(|&z| z != root && !s1.contains(z) && g.neighbors(z).iter().any(|&v| s1.contains(v)))
        .collect();
    RootedLayers { root, s1, s2 }
}

/// Least quintuple (base, arm_a < arm_b, tip_a, tip_b) inducing a
/// `T(2,1)` below the first layer, or `None` when the residual has
/// stalled. The deletion set records the five vertices, the base's
/// second-layer fringe, and the full residual neighborhoods of arms
/// and tips.
pub fn find_piece(g: &Graph, residual: &Residual) -> Option<ExtractionPiece> {
    let layers = &residual.view;
    for base in layers.s1.iter() {
        let fringe = g.neighbors_in(base, &layers.s2);
        let fr = fringe.as_slice();
        for (i, &arm_a) in fr.iter().enumerate() {
            for &arm_b in &fr[i + 1..] {
                if g.has_edge(arm_a, arm_b) {
                    continue;
                }
                let private_a: Vec<usize> = g
                    .neighbors_in(arm_a, &layers.s2)
                    .iter()
                    .filter(|&x| !g.has_edge(x, arm_b) && !g.has_edge(x, base))
                    .collect();
                if private_a.is_empty() {
                    continue;
                }
                let private_b: Vec<usize> = g
                    .neighbors_in(arm_b, &layers.s2)
                    .iter()
                    .filter(|&x| !g.has_edge(x, arm_a) && !g.has_edge(x, base))
                    .collect();
                for &tip_a in &private_a {
                    for &tip_b in &private_b {
                        if !g.has_edge(tip_a, tip_b) {
                            let deletion_set = piece_deletion_set(
                                g, residual, base, arm_a, arm_b, tip_a, tip_b, &fringe,
                            );
                            return Some(ExtractionPiece {
                                base,
                                arm_a,
                                arm_b,
                                tip_a,
                                tip_b,
                                deletion_set,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn piece_deletion_set(
    g: &Graph,
    residual: &Residual,
    base: usize,
    arm_a: usize,
    arm_b: usize,
    tip_a: usize,
    tip_b: usize,
    fringe: &VertexSet,
) -> VertexSet {
    let mut del = vec![base, arm_a, arm_b, tip_a, tip_b];
    del.extend(fringe.iter());
    for u in [arm_a, arm_b, tip_a, tip_b] {
        // full neighborhoods in the residual graph, not just the view
        del.extend(
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| residual.alive.contains(w)),
        );
    }
    VertexSet::from_unsorted(del)
}

/// The four vertex classes the deletion set splits into when the host
/// is triangle-free: second-layer neighborhoods of each arm-tip side,
/// the fringe of the base, and the three odd vertices out. They need
/// not cover the whole deletion set (full neighborhoods reach into the
/// first layer), so this is a partial coloring; the binding bound on
/// the deletion set is checked by the exact solver instead.
pub fn deletion_color_classes(
    g: &Graph,
    layers: &RootedLayers,
    piece: &ExtractionPiece,
) -> [VertexSet; 4] {
    let fringe = |u: usize| g.neighbors_in(u, &layers.s2);
    [
        fringe(piece.arm_a).union(&fringe(piece.tip_a)),
        fringe(piece.arm_b).union(&fringe(piece.tip_b)),
        fringe(piece.base),
        [piece.base, piece.tip_a, piece.tip_b].into_iter().collect(),
    ]
}

/// Best-effort assignment of deletion-set vertices to the four classes,
/// handing the odd-vertices-out and base-fringe classes their members
/// first. Returns the partial map (class index per covered vertex) and
/// whether it is proper where defined, i.e. on edges with both
/// endpoints covered. First-layer vertices swept into the deletion set
/// by full neighborhoods stay uncovered; the binding chromatic bound on
/// the whole deletion set is the exact solver's job.
pub fn deletion_partial_coloring(
    g: &Graph,
    layers: &RootedLayers,
    piece: &ExtractionPiece,
) -> (BTreeMap<usize, usize>, bool) {
    let classes = deletion_color_classes(g, layers, piece);
    let mut class_of = BTreeMap::new();
    for ci in [3usize, 2, 0, 1] {
        for v in classes[ci].iter() {
            class_of.entry(v).or_insert(ci);
        }
    }
    let proper = g
        .edges()
        .iter()
        .all(|&(u, v)| match (class_of.get(&u), class_of.get(&v)) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        });
    (class_of, proper)
}

/// Result of running greedy extraction until `t` pieces or a stall.
#[derive(Debug, Clone)]
pub struct Phase1Result {
    pub pieces: Vec<ExtractionPiece>,
    /// The residual graph after the last extraction.
    pub residual: Residual,
}

/// Repeatedly extracts pieces from the shrinking residual, restricting
/// both layers after each extraction.
pub fn phase1(g: &Graph, root: usize, t: usize) -> Phase1Result {
    let mut residual = Residual::full(g, root);
    let mut pieces = Vec::new();
    while pieces.len() < t {
        match find_piece(g, &residual) {
            Some(piece) => {
                residual = residual.without(g, &piece.deletion_set);
                pieces.push(piece);
            }
            None => break,
        }
    }
    Phase1Result { pieces, residual }
}

/// Assembles `{root} ∪ pieces` into an embedding of `[k,2,1]` where
/// `k = pieces.len()`, in breadth-first position order.
pub fn pieces_to_embedding(root: usize, pieces: &[ExtractionPiece]) -> Embedding {
    let k = pieces.len();
    let mut map = vec![0usize; 1 + 5 * k];
    map[0] = root;
    for (b, piece) in pieces.iter().enumerate() {
        map[1 + b] = piece.base;
        map[1 + k + 2 * b] = piece.arm_a;
        map[1 + k + 2 * b + 1] = piece.arm_b;
        map[1 + 3 * k + 2 * b] = piece.tip_a;
        map[1 + 3 * k + 2 * b + 1] = piece.tip_b;
    }
    Embedding::new(map)
}

/// Verifies the structure a stalled residual must have: for every
/// first-layer vertex, (a) the private fringes of any two of its
/// second-layer neighbors span a complete bipartite graph, and (b) the
/// traces of outside vertices on its fringe form a laminar family.
/// A violation is returned with the tuple that witnesses it.
pub fn check_stall_structure(g: &Graph, layers: &RootedLayers) -> Result<(), StallViolation> {
    for v in layers.s1.iter() {
        let fringe = g.neighbors_in(v, &layers.s2);
        let fr = fringe.as_slice();
        for (i, &wa) in fr.iter().enumerate() {
            for &wb in &fr[i + 1..] {
                let side_a: Vec<usize> = g
                    .neighbors_in(wa, &layers.s2)
                    .iter()
                    .filter(|&x| !g.has_edge(x, wb))
                    .collect();
                let side_b: Vec<usize> = g
                    .neighbors_in(wb, &layers.s2)
                    .iter()
                    .filter(|&x| !g.has_edge(x, wa))
                    .collect();
                for side in [&side_a, &side_b] {
                    for (p, &x) in side.iter().enumerate() {
                        for &y in &side[p + 1..] {
                            if g.has_edge(x, y) {
                                return Err(StallViolation {
                                    vertex: v,
                                    pair: (wa, wb),
                                    ends: (x, y),
                                    kind: StallViolationKind::SideNotIndependent,
                                });
                            }
                        }
                    }
                }
                for &x in &side_a {
                    for &y in &side_b {
                        if !g.has_edge(x, y) {
                            return Err(StallViolation {
                                vertex: v,
                                pair: (wa, wb),
                                ends: (x, y),
                                kind: StallViolationKind::MissingCrossEdge,
                            });
                        }
                    }
                }
            }
        }

        // traces of outside second-layer vertices on the fringe must be
        // nested or disjoint
        let outside: Vec<usize> = layers.s2.iter().filter(|&z| !fringe.contains(z)).collect();
        let traces: Vec<VertexSet> = outside
            .iter()
            .map(|&z| g.neighbors_in(z, &fringe))
            .collect();
        for (i, &z1) in outside.iter().enumerate() {
            for (jo, &z2) in outside.iter().enumerate().skip(i + 1) {
                let (t1, t2) = (&traces[i], &traces[jo]);
                if t1.is_empty() || t2.is_empty() {
                    continue;
                }
                let meet = t1.intersect(t2);
                if meet.is_empty() || t1.is_subset_of(t2) || t2.is_subset_of(t1) {
                    continue;
                }
                let wa = t1.difference(t2).iter().next().unwrap();
                let wb = t2.difference(t1).iter().next().unwrap();
                return Err(StallViolation {
                    vertex: v,
                    pair: (wa, wb),
                    ends: (z1, z2),
                    kind: StallViolationKind::NotLaminar,
                });
            }
        }
    }
    Ok(())
}

/// For each first-layer vertex with a nonempty fringe, the least pair
/// of fringe vertices covering every second-layer vertex attached to
/// the fringe. Exhaustive pair search; a vertex without any valid pair
/// is reported instead of assumed away.
pub fn label_vertices(g: &Graph, layers: &RootedLayers) -> Result<Vec<LabelPair>, FailedStep> {
    let mut out = Vec::new();
    for v in layers.s1.iter() {
        let fringe = g.neighbors_in(v, &layers.s2);
        if fringe.is_empty() {
            continue;
        }
        let touched: Vec<usize> = layers
            .s2
            .iter()
            .filter(|&z| fringe.iter().any(|w| g.has_edge(z, w)))
            .collect();
        let fr = fringe.as_slice();
        let mut found = None;
        'pairs: for (i, &wa) in fr.iter().enumerate() {
            for &wb in &fr[i..] {
                if touched
                    .iter()
                    .all(|&z| g.has_edge(z, wa) || g.has_edge(z, wb))
                {
                    found = Some((wa, wb));
                    break 'pairs;
                }
            }
        }
        match found {
            Some(pair) => out.push(LabelPair { vertex: v, pair }),
            None => return Err(FailedStep::CoverPairMissing { vertex: v }),
        }
    }
    Ok(out)
}

/// Shrinks the labeled vertices to a minimal subset whose second-layer
/// neighborhoods dominate all of them, deleting the least-index
/// dominated vertex until none remains.
pub fn reduce_to_basis(g: &Graph, labels: &[LabelPair], layers: &RootedLayers) -> CoverBasis {
    let labeled: VertexSet = labels.iter().flat_map(|l| [l.pair.0, l.pair.1]).collect();
    let fringe_of: BTreeMap<usize, VertexSet> = labeled
        .iter()
        .map(|u| (u, g.neighbors_in(u, &layers.s2)))
        .collect();

    let mut alive: Vec<usize> = labeled.iter().collect();
    loop {
        let dominated = alive.iter().position(|&u| {
            alive
                .iter()
                .any(|&w| w != u && fringe_of[&u].is_subset_of(&fringe_of[&w]))
        });
        match dominated {
            Some(idx) => {
                alive.remove(idx);
            }
            None => break,
        }
    }
    let basis = VertexSet::from_sorted(alive);
    let mut dominator_of = BTreeMap::new();
    for u in labeled.iter() {
        let dom = basis
            .iter()
            .find(|&w| fringe_of[&u].is_subset_of(&fringe_of[&w]))
            .expect("every labeled vertex keeps a dominator");
        dominator_of.insert(u, dom);
    }
    CoverBasis {
        labeled,
        basis,
        dominator_of,
    }
}

/// Extends a proper coloring of the induced basis to all of the second
/// layer: each outside vertex inherits the color of the least basis
/// vertex whose neighborhood contains its own. The result is aligned
/// with `layers.s2` in sorted order.
pub fn extend_coloring(
    g: &Graph,
    basis: &CoverBasis,
    layers: &RootedLayers,
    basis_coloring: &Coloring,
) -> Result<Coloring, FailedStep> {
    debug_assert_eq!(basis_coloring.assignment.len(), basis.basis.len());
    let color_of_basis: BTreeMap<usize, usize> = basis
        .basis
        .iter()
        .zip(basis_coloring.assignment.iter().copied())
        .collect();

    let mut assignment = Vec::with_capacity(layers.s2.len());
    for z in layers.s2.iter() {
        if let Some(&c) = color_of_basis.get(&z) {
            assignment.push(c);
            continue;
        }
        let zn = g.neighbors_in(z, &layers.s2);
        let dom = basis
            .basis
            .iter()
            .find(|&h| zn.is_subset_of(&g.neighbors_in(h, &layers.s2)));
        match dom {
            Some(h) => assignment.push(color_of_basis[&h]),
            None => return Err(FailedStep::ColorExtensionStuck { vertex: z }),
        }
    }
    Ok(Coloring::new(assignment))
}

/// Searches the induced basis for the wide tree `[2t+1, 8]`.
pub fn find_backbone(g: &Graph, basis: &CoverBasis, t: usize) -> Option<BackboneTree> {
    let arms = 2 * t + 1;
    let fan = 8;
    let spec = TreeSpec::new(vec![arms, fan]).expect("positive degrees");
    let (h, map) = g.induced(&basis.basis);
    let local = find_induced_copy(&h, &spec, None)?;
    let embedding = Embedding::new(local.map().iter().map(|&x| map[x]).collect());
    Some(BackboneTree {
        embedding,
        arms,
        fan,
    })
}

/// Which backbone vertices `v` attaches to, and whether that attachment
/// breaks the allowed shape: once `v` touches a leaf, everything else
/// it touches must be another leaf of the same row or the root, and at
/// most two backbone vertices in total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentProfile {
    /// Backbone tree positions adjacent to the vertex.
    pub positions: Vec<usize>,
    pub violates_shape: bool,
}

pub fn leaf_attachment_profile(g: &Graph, backbone: &BackboneTree, v: usize) -> AttachmentProfile {
    let positions: Vec<usize> = (0..backbone.embedding.len())
        .filter(|&p| g.has_edge(v, backbone.embedding.image_of(p)))
        .collect();
    let leaf_row = positions.iter().find_map(|&p| backbone.row_of_position(p));
    let violates_shape = match leaf_row {
        None => false,
        Some(row) => {
            positions.len() > 2
                || positions
                    .iter()
                    .any(|&p| p != 0 && backbone.row_of_position(p) != Some(row))
        }
    };
    AttachmentProfile {
        positions,
        violates_shape,
    }
}

/// An induced four-matching between leaves of one backbone row and
/// first-layer partners: distinct partners, each adjacent to exactly
/// its own chosen leaf among the chosen ones, none adjacent to the
/// backbone root.
fn row_matching(
    g: &Graph,
    layers: &RootedLayers,
    backbone: &BackboneTree,
    row: usize,
) -> Option<Vec<(usize, usize)>> {
    let leaves: Vec<usize> = (1..=backbone.fan).map(|j| backbone.leaf(row, j)).collect();
    let root = backbone.root();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        layers: &RootedLayers,
        backbone: &BackboneTree,
        row: usize,
        leaves: &[usize],
        from: usize,
        root: usize,
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        if chosen.len() == 4 {
            return true;
        }
        for idx in from..leaves.len() {
            let leaf = leaves[idx];
            if chosen.iter().any(|&(_, p)| g.has_edge(p, leaf)) {
                continue;
            }
            for v in g.neighbors_in(leaf, &layers.s1).iter() {
                if g.has_edge(v, root) {
                    continue;
                }
                let profile = leaf_attachment_profile(g, backbone, v);
                let stays_in_row = !profile.violates_shape
                    && profile
                        .positions
                        .iter()
                        .all(|&p| backbone.row_of_position(p) == Some(row));
                if !stays_in_row {
                    continue;
                }
                if chosen.iter().any(|&(l, p)| p == v || g.has_edge(v, l)) {
                    continue;
                }
                chosen.push((leaf, v));
                if rec(g, layers, backbone, row, leaves, idx + 1, root, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    if rec(g, layers, backbone, row, &leaves, 0, root, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Builds the target tree from `t` backbone rows that admit induced
/// four-matchings into the first layer, rooted at the backbone root.
pub fn assemble_matching(
    g: &Graph,
    layers: &RootedLayers,
    backbone: &BackboneTree,
    t: usize,
) -> Result<Embedding, FailedStep> {
    let mut rows: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for row in 1..=backbone.arms {
        if let Some(pairs) = row_matching(g, layers, backbone, row) {
            rows.push((row, pairs));
            if rows.len() == t {
                break;
            }
        }
    }
    if rows.len() < t {
        return Err(FailedStep::MatchingShortage {
            matched: rows.len(),
            needed: t,
        });
    }

    let branches: Vec<Branch> = rows
        .iter()
        .map(|(row, pairs)| Branch {
            head: backbone.arm(*row),
            leaves: (pairs[0].0, pairs[1].0),
            partners: (pairs[0].1, pairs[1].1),
        })
        .collect();
    finish_assembly(g, backbone.root(), &branches, t)
}

/// Builds the target tree through the co-anchor: picks the lead vertex
/// adjacent to root and a leaf, finds a second-layer co-anchor off the
/// root, checks its adjacency pattern and the exclusivity of partner
/// attachments, then selects `t` rows whose partner majority avoids one
/// anchor and roots the tree there.
pub fn assemble_anchored(
    g: &Graph,
    layers: &RootedLayers,
    backbone: &BackboneTree,
    t: usize,
) -> Result<Embedding, FailedStep> {
    let root = backbone.root();

    // lead: least first-layer vertex adjacent to the root and a leaf
    let mut lead = None;
    'outer: for v in layers.s1.iter() {
        if !g.has_edge(v, root) {
            continue;
        }
        for pos in (backbone.arms + 1)..backbone.embedding.len() {
            if g.has_edge(v, backbone.embedding.image_of(pos)) {
                lead = Some((v, pos));
                break 'outer;
            }
        }
    }
    let (_lead_vertex, lead_pos) = lead.ok_or(FailedStep::LeadPairMissing)?;
    let lead_row = backbone.row_of_position(lead_pos).unwrap();
    let lead_leaf = backbone.embedding.image_of(lead_pos);

    // co-anchor: least second-layer vertex on the lead leaf, off the root
    let co_anchor = g
        .neighbors_in(lead_leaf, &layers.s2)
        .iter()
        .find(|&z| !g.has_edge(z, root))
        .ok_or(FailedStep::CoAnchorMissing { lead_leaf })?;

    // the co-anchor must behave like a second root toward foreign rows
    for row in 1..=backbone.arms {
        if row == lead_row {
            continue;
        }
        let head = backbone.arm(row);
        if !g.has_edge(co_anchor, head) {
            return Err(FailedStep::CoAnchorAdjacency {
                co_anchor,
                tree_vertex: head,
                expected_adjacent: true,
            });
        }
        for j in 1..=backbone.fan {
            let leaf = backbone.leaf(row, j);
            if g.has_edge(co_anchor, leaf) {
                return Err(FailedStep::CoAnchorAdjacency {
                    co_anchor,
                    tree_vertex: leaf,
                    expected_adjacent: false,
                });
            }
        }
    }

    // no partner of a foreign leaf may touch both anchors
    for row in 1..=backbone.arms {
        if row == lead_row {
            continue;
        }
        for j in 1..=backbone.fan {
            let leaf = backbone.leaf(row, j);
            for v in g.neighbors_in(leaf, &layers.s1).iter() {
                if g.has_edge(v, root) && g.has_edge(v, co_anchor) {
                    return Err(FailedStep::AnchorExclusivity { vertex: v, leaf });
                }
            }
        }
    }

    // least partner per foreign leaf; rows missing one are unusable
    struct RowInfo {
        row: usize,
        partners: Vec<usize>, // indexed by leaf position - 1
        avoid_root: usize,
        avoid_co: usize,
    }
    let mut complete_rows: Vec<RowInfo> = Vec::new();
    for row in 1..=backbone.arms {
        if row == lead_row {
            continue;
        }
        let mut partners = Vec::with_capacity(backbone.fan);
        for j in 1..=backbone.fan {
            let leaf = backbone.leaf(row, j);
            match g.neighbors_in(leaf, &layers.s1).iter().next() {
                Some(v) => partners.push(v),
                None => {
                    partners.clear();
                    break;
                }
            }
        }
        if partners.len() != backbone.fan {
            continue;
        }
        let avoid_root = partners.iter().filter(|&&v| !g.has_edge(v, root)).count();
        let avoid_co = partners
            .iter()
            .filter(|&&v| !g.has_edge(v, co_anchor))
            .count();
        complete_rows.push(RowInfo {
            row,
            partners,
            avoid_root,
            avoid_co,
        });
    }

    let majority = backbone.fan / 2;
    let root_rows = complete_rows
        .iter()
        .filter(|r| r.avoid_root >= majority)
        .count();
    let co_rows = complete_rows
        .iter()
        .filter(|r| r.avoid_co >= majority)
        .count();
    let anchor_is_root = if root_rows >= t {
        true
    } else if co_rows >= t {
        false
    } else {
        return Err(FailedStep::RowShortage {
            qualifying: root_rows.max(co_rows),
            needed: t,
        });
    };
    let anchor = if anchor_is_root { root } else { co_anchor };
    let avoids_anchor = |r: &RowInfo| {
        if anchor_is_root {
            r.avoid_root >= majority
        } else {
            r.avoid_co >= majority
        }
    };

    // two distinct, cross-nonadjacent (leaf, partner) pairs per row
    let mut branches: Vec<Branch> = Vec::new();
    for info in complete_rows.iter().filter(|r| avoids_anchor(r)) {
        let ok_positions: Vec<usize> = (0..backbone.fan)
            .filter(|&idx| !g.has_edge(info.partners[idx], anchor))
            .collect();
        let mut picked = None;
        'pick: for (a, &ja) in ok_positions.iter().enumerate() {
            for &jb in &ok_positions[a + 1..] {
                let (la, lb) = (
                    backbone.leaf(info.row, ja + 1),
                    backbone.leaf(info.row, jb + 1),
                );
                let (va, vb) = (info.partners[ja], info.partners[jb]);
                if va != vb && !g.has_edge(va, lb) && !g.has_edge(vb, la) {
                    picked = Some(Branch {
                        head: backbone.arm(info.row),
                        leaves: (la, lb),
                        partners: (va, vb),
                    });
                    break 'pick;
                }
            }
        }
        if let Some(branch) = picked {
            branches.push(branch);
            if branches.len() == t {
                break;
            }
        }
    }
    if branches.len() < t {
        return Err(FailedStep::RowShortage {
            qualifying: branches.len(),
            needed: t,
        });
    }
    finish_assembly(g, anchor, &branches, t)
}

struct Branch {
    head: usize,
    leaves: (usize, usize),
    partners: (usize, usize),
}

fn finish_assembly(
    g: &Graph,
    root: usize,
    branches: &[Branch],
    t: usize,
) -> Result<Embedding, FailedStep> {
    debug_assert_eq!(branches.len(), t);
    let mut map = vec![0usize; 1 + 5 * t];
    map[0] = root;
    for (b, branch) in branches.iter().enumerate() {
        map[1 + b] = branch.head;
        map[1 + t + 2 * b] = branch.leaves.0;
        map[1 + t + 2 * b + 1] = branch.leaves.1;
        map[1 + 3 * t + 2 * b] = branch.partners.0;
        map[1 + 3 * t + 2 * b + 1] = branch.partners.1;
    }
    let embedding = Embedding::new(map);
    if verify_embedding(g, &TreeSpec::hunted(t), &embedding) {
        Ok(embedding)
    } else {
        Err(FailedStep::AssemblyUnverified)
    }
}

/// Runs the whole constructive pipeline rooted at one center.
pub fn hunt_at_center(
    g: &Graph,
    center: usize,
    t: usize,
) -> Result<(Embedding, FoundVia), FailureReport> {
    let result = phase1(g, center, t);
    let pieces_extracted = result.pieces.len();
    let fail = |step: FailedStep| FailureReport {
        center,
        pieces_extracted,
        step,
    };

    if result.pieces.len() == t {
        let embedding = pieces_to_embedding(center, &result.pieces);
        return if verify_embedding(g, &TreeSpec::hunted(t), &embedding) {
            Ok((embedding, FoundVia::Pieces))
        } else {
            Err(fail(FailedStep::AssemblyUnverified))
        };
    }

    let layers = &result.residual.view;
    if let Err(violation) = check_stall_structure(g, layers) {
        return Err(fail(FailedStep::StallInconsistency(violation)));
    }
    let labels = label_vertices(g, layers).map_err(&fail)?;
    let basis = reduce_to_basis(g, &labels, layers);
    let backbone = find_backbone(g, &basis, t).ok_or_else(|| {
        fail(FailedStep::BackboneMissing {
            basis_size: basis.basis.len(),
        })
    })?;

    for v in layers.s1.iter() {
        let profile = leaf_attachment_profile(g, &backbone, v);
        if profile.violates_shape {
            return Err(fail(FailedStep::LeafAttachmentShape {
                vertex: v,
                positions: profile.positions,
            }));
        }
    }

    // a vertex adjacent to both root and a leaf forces the anchored
    // route; otherwise try the matching route. Either way the other
    // route is attempted before giving up.
    let lead_exists = layers.s1.iter().any(|v| {
        g.has_edge(v, backbone.root())
            && ((backbone.arms + 1)..backbone.embedding.len())
                .any(|pos| g.has_edge(v, backbone.embedding.image_of(pos)))
    });
    let order = if lead_exists {
        [FoundVia::Anchored, FoundVia::Matching]
    } else {
        [FoundVia::Matching, FoundVia::Anchored]
    };
    let mut first_err = None;
    for via in order {
        let attempt = match via {
            FoundVia::Anchored => assemble_anchored(g, layers, &backbone, t),
            FoundVia::Matching => assemble_matching(g, layers, &backbone, t),
            _ => unreachable!(),
        };
        match attempt {
            Ok(embedding) => return Ok((embedding, via)),
            Err(step) => {
                if first_err.is_none() {
                    first_err = Some(step);
                }
            }
        }
    }
    Err(fail(first_err.unwrap()))
}

/// All vertices of eccentricity exactly two, in index order.
pub fn candidate_centers(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.eccentricity(v) == Some(2))
        .collect()
}

/// End-to-end hunt.
///
/// Premises (triangle-freeness, radius exactly two) are validated
/// first; then every candidate center is tried in index order, and the
/// outcome reported is the one for the least center whose constructive
/// pipeline succeeds. When every constructive path fails and
/// `oracle_fallback` is set, the brute-force search settles existence.
pub fn hunt(g: &Graph, t: usize, oracle_fallback: bool) -> HuntOutcome {
    hunt_jobs(g, t, oracle_fallback, 1)
}

/// `hunt` with `jobs` worker threads sharing the candidate centers.
/// The reported outcome is independent of `jobs`: it is always the one
/// for the least-index center that succeeds.
pub fn hunt_jobs(g: &Graph, t: usize, oracle_fallback: bool, jobs: usize) -> HuntOutcome {
    assert!(t >= 1, "target branch count must be positive");
    let premise = |detail: String| HuntOutcome {
        status: HuntStatus::PremiseViolated,
        t,
        certificate: None,
        via: None,
        center: None,
        report: None,
        detail,
    };
    if !g.is_triangle_free() {
        return premise("graph contains a triangle".into());
    }
    match g.radius_and_center() {
        Err(e) => return premise(format!("no finite radius: {e}")),
        Ok((2, _)) => {}
        Ok((r, _)) => return premise(format!("radius is {r}, not 2")),
    }

    let centers = candidate_centers(g);
    let mut first_report: Option<FailureReport> = None;
    let mut success: Option<(usize, Embedding, FoundVia)> = None;

    if jobs <= 1 {
        for &center in &centers {
            match hunt_at_center(g, center, t) {
                Ok((embedding, via)) => {
                    success = Some((center, embedding, via));
                    break;
                }
                Err(report) => {
                    if first_report.is_none() {
                        first_report = Some(report);
                    }
                }
            }
        }
    } else {
        let results = run_centers_parallel(g, t, &centers, jobs);
        for (idx, &center) in centers.iter().enumerate() {
            match &results[idx] {
                Some(Ok((embedding, via))) => {
                    success = Some((center, embedding.clone(), *via));
                    break;
                }
                Some(Err(report)) if first_report.is_none() => {
                    first_report = Some(report.clone());
                }
                Some(Err(_)) => {}
                // skipped because an earlier center already succeeded
                None => {}
            }
        }
    }

    if let Some((center, embedding, via)) = success {
        return HuntOutcome {
            status: HuntStatus::Found,
            t,
            certificate: Some(embedding),
            via: Some(via),
            center: Some(center),
            report: first_report,
            detail: format!("found via {} at center {center}", via.name()),
        };
    }

    if oracle_fallback {
        if let Some(embedding) = find_induced_copy(g, &TreeSpec::hunted(t), None) {
            return HuntOutcome {
                status: HuntStatus::Found,
                t,
                certificate: Some(embedding),
                via: Some(FoundVia::Oracle),
                center: None,
                report: first_report,
                detail: "found by fallback search".into(),
            };
        }
        let detail = match &first_report {
            Some(r) => format!(
                "absent; constructive search stopped at {} (center {})",
                r.step.phase(),
                r.center
            ),
            None => "absent; no candidate center".into(),
        };
        return HuntOutcome {
            status: HuntStatus::NotFound,
            t,
            certificate: None,
            via: None,
            center: None,
            report: first_report,
            detail,
        };
    }

    let detail = match &first_report {
        Some(r) => format!("step failed: {} (center {})", r.step, r.center),
        None => "no candidate center".into(),
    };
    HuntOutcome {
        status: HuntStatus::StepFailed,
        t,
        certificate: None,
        via: None,
        center: None,
        report: first_report,
        detail,
    }
}

type CenterResult = Result<(Embedding, FoundVia), FailureReport>;

fn run_centers_parallel(
    g: &Graph,
    t: usize,
    centers: &[usize],
    jobs: usize,
) -> Vec<Option<CenterResult>> {
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;

    let next = AtomicUsize::new(0);
    // least center index whose pipeline succeeded so far; later centers
    // may be skipped, earlier ones never are
    let best_success = AtomicUsize::new(usize::MAX);
    let results: Vec<Mutex<Option<CenterResult>>> =
        centers.iter().map(|_| Mutex::new(None)).collect();

    std::thread::scope(|scope| {
        for _ in 0..jobs.min(centers.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::SeqCst);
                if idx >= centers.len() {
                    return;
                }
                if idx > best_success.load(Ordering::SeqCst) {
                    continue;
                }
                let outcome = hunt_at_center(g, centers[idx], t);
                if outcome.is_ok() {
                    best_success.fetch_min(idx, Ordering::SeqCst);
                }
                *results[idx].lock().unwrap() = Some(outcome);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap())
        .collect()
}
