//! Constructed instances that force the hunter down a chosen route.
//!
//! Each builder returns a triangle-free radius-two graph whose unique
//! eccentricity-two center is vertex 0 and whose structure admits
//! exactly one of the constructive paths: greedy extraction to
//! completion, the matching route, or the anchored route (with pieces
//! optionally banked first via extra gadgets). They double as the
//! regression corpus for the end-to-end suite.

use crate::graph::{build_graph, Graph};
use crate::hunter::FoundVia;

#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub name: String,
    pub graph: Graph,
    /// The hunt center the construction is aimed at (always 0 here).
    pub center: usize,
    pub t: usize,
    /// The route the hunter is expected to succeed through.
    pub expected_via: FoundVia,
}

struct Assembler {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Assembler {
    fn new() -> Self {
        Assembler {
            n: 0,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn build(self) -> Graph {
        build_graph(self.n, &self.edges).expect("assembler emits valid edges")
    }
}

/// One extraction gadget below `hub`: a base in the first layer with
/// two arms, two tips, and two support vertices that keep the tips at
/// distance two from the hub. Self-contained, so its deletion set never
/// leaks into anything else.
fn add_piece_gadget(a: &mut Assembler, hub: usize) {
    let base = a.vertex();
    a.edge(hub, base);
    let arm_a = a.vertex();
    let arm_b = a.vertex();
    a.edge(base, arm_a);
    a.edge(base, arm_b);
    let tip_a = a.vertex();
    let tip_b = a.vertex();
    a.edge(arm_a, tip_a);
    a.edge(arm_b, tip_b);
    for tip in [tip_a, tip_b] {
        let support = a.vertex();
        a.edge(hub, support);
        a.edge(support, tip);
    }
}

struct Core {
    backbone_root: usize,
    arms: Vec<usize>,
    leaves: Vec<Vec<usize>>,           // leaves[row][j]
    pendants: Vec<Vec<Option<usize>>>, // pendants[row][j], None where skipped
    witness_of: std::collections::BTreeMap<usize, usize>,
}

/// Plants the wide backbone tree `[2t+1, 8]` in the second layer with
/// enough scaffolding that the structural pass recovers exactly it:
/// a pendant per leaf keeps leaf neighborhoods incomparable, and a
/// dedicated first-layer witness per second-layer vertex puts every
/// tree vertex into the labeled set. `skip_pendant_for` suppresses the
/// pendant of one designated leaf (the anchored construction replaces
/// it with the co-anchor).
fn add_backbone_core(
    a: &mut Assembler,
    hub: usize,
    t: usize,
    skip_pendant_for: Option<(usize, usize)>,
) -> Core {
    let arm_count = 2 * t + 1;
    let fan = 8;

    let backbone_root = a.vertex();
    let arms: Vec<usize> = (0..arm_count).map(|_| a.vertex()).collect();
    for &arm in &arms {
        a.edge(backbone_root, arm);
    }
    let mut leaves = Vec::with_capacity(arm_count);
    for &arm in &arms {
        let row: Vec<usize> = (0..fan).map(|_| a.vertex()).collect();
        for &leaf in &row {
            a.edge(arm, leaf);
        }
        leaves.push(row);
    }
    // pendants keep each leaf's second-layer neighborhood incomparable
    // with the backbone root's
    let mut pendants = Vec::with_capacity(arm_count);
    for (row, row_leaves) in leaves.iter().enumerate() {
        let mut row_pendants = Vec::with_capacity(fan);
        for (j, &leaf) in row_leaves.iter().enumerate() {
            if skip_pendant_for == Some((row, j)) {
                row_pendants.push(None);
                continue;
            }
            let pendant = a.vertex();
            a.edge(leaf, pendant);
            row_pendants.push(Some(pendant));
        }
        pendants.push(row_pendants);
    }
    // dedicated first-layer witnesses: one per second-layer vertex
    let mut second_layer = vec![backbone_root];
    second_layer.extend(&arms);
    second_layer.extend(leaves.iter().flatten());
    second_layer.extend(pendants.iter().flatten().flatten());
    let mut witness_of = std::collections::BTreeMap::new();
    for u in second_layer {
        let witness = a.vertex();
        a.edge(hub, witness);
        a.edge(witness, u);
        witness_of.insert(u, witness);
    }
    Core {
        backbone_root,
        arms,
        leaves,
        pendants,
        witness_of,
    }
}

/// `gadget_count >= t` gadgets: greedy extraction completes.
pub fn planted_pieces(t: usize, gadget_count: usize) -> PlantedInstance {
    assert!(t >= 1 && gadget_count >= t);
    let mut a = Assembler::new();
    let hub = a.vertex();
    for _ in 0..gadget_count {
        add_piece_gadget(&mut a, hub);
    }
    PlantedInstance {
        name: format!("pieces-t{t}-g{gadget_count}"),
        graph: a.build(),
        center: hub,
        t,
        expected_via: FoundVia::Pieces,
    }
}

/// Immediate stall with a clean backbone: the matching route fires.
/// `banked_gadgets` extra gadgets make greedy extraction bank that many
/// pieces before the stall.
pub fn planted_matching(t: usize, banked_gadgets: usize) -> PlantedInstance {
    assert!(t >= 1 && banked_gadgets < t);
    let mut a = Assembler::new();
    let hub = a.vertex();
    add_backbone_core(&mut a, hub, t, None);
    for _ in 0..banked_gadgets {
        add_piece_gadget(&mut a, hub);
    }
    PlantedInstance {
        name: format!("matching-t{t}-banked{banked_gadgets}"),
        graph: a.build(),
        center: hub,
        t,
        expected_via: FoundVia::Matching,
    }
}

/// A lead vertex adjacent to the backbone root and one leaf forces the
/// anchored route; the co-anchor hangs off that leaf with the adjacency
/// pattern the route checks for. The lead's fringe pair stays stalled
/// because the co-anchor is wired to every foreign arm.
pub fn planted_anchored(t: usize, banked_gadgets: usize) -> PlantedInstance {
    assert!(t >= 1 && banked_gadgets < t);
    let mut a = Assembler::new();
    let hub = a.vertex();
    let core = add_backbone_core(&mut a, hub, t, Some((0, 0)));
    let lead_leaf = core.leaves[0][0];

    let co_anchor = a.vertex();
    a.edge(co_anchor, lead_leaf);
    for &arm in &core.arms[1..] {
        a.edge(co_anchor, arm);
    }
    // the co-anchor needs its own first-layer witness to sit at
    // distance two from the hub
    let co_witness = a.vertex();
    a.edge(hub, co_witness);
    a.edge(co_witness, co_anchor);

    let lead = a.vertex();
    a.edge(hub, lead);
    a.edge(lead, core.backbone_root);
    a.edge(lead, lead_leaf);

    for _ in 0..banked_gadgets {
        add_piece_gadget(&mut a, hub);
    }
    PlantedInstance {
        name: format!("anchored-t{t}-banked{banked_gadgets}"),
        graph: a.build(),
        center: hub,
        t,
        expected_via: FoundVia::Anchored,
    }
}

/// Anchored route that must re-root at the co-anchor: every partner of
/// a wired row also touches the backbone root, so the row majority can
/// only avoid the co-anchor. Wiring each such pendant to all other arms
/// keeps the stall intact, and with `t >= 2` a single plain row cannot
/// carry a root-anchored assembly.
pub fn planted_anchored_via_co(t: usize) -> PlantedInstance {
    assert!(t >= 2, "one plain row would let the backbone root anchor");
    let mut a = Assembler::new();
    let hub = a.vertex();
    let core = add_backbone_core(&mut a, hub, t, None);
    for row in 1..core.arms.len() {
        for j in 0..core.leaves[row].len() {
            a.edge(core.witness_of[&core.leaves[row][j]], core.backbone_root);
            let pendant = core.pendants[row][j].expect("no pendant was skipped");
            for (other, &arm) in core.arms.iter().enumerate() {
                if other != row {
                    a.edge(pendant, arm);
                }
            }
        }
    }
    PlantedInstance {
        name: format!("anchored-co-t{t}"),
        graph: a.build(),
        center: hub,
        t,
        expected_via: FoundVia::Anchored,
    }
}

/// The twenty-instance regression corpus covering every route: greedy
/// extraction to completion, the matching route, the anchored route
/// with either anchor as root, and hybrids that bank pieces first.
pub fn regression_corpus() -> Vec<PlantedInstance> {
    let mut out = Vec::new();
    for t in 1..=5 {
        out.push(planted_pieces(t, t));
    }
    for t in 1..=3 {
        out.push(planted_pieces(t, t + 1));
    }
    for t in 1..=3 {
        out.push(planted_matching(t, 0));
    }
    out.push(planted_matching(2, 1));
    out.push(planted_matching(3, 2));
    for t in 1..=3 {
        out.push(planted_anchored(t, 0));
    }
    out.push(planted_anchored(2, 1));
    out.push(planted_anchored(3, 1));
    out.push(planted_anchored_via_co(2));
    out.push(planted_anchored_via_co(3));
    debug_assert_eq!(out.len(), 20);
    out
}
