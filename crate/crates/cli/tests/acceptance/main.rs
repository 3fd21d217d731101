//! Acceptance suite: one test per criterion, each printing a pass line
//! with the measured numbers. Every tolerance is pinned here.
//!
//! Run with `cargo test -p treehunt-cli --test acceptance -- --nocapture`.

mod corpus;
mod oracle;

use std::process::{Command, Output};
use std::time::{Duration, Instant};
use treehunt_core::coloring::{
    chromatic_number, chromatic_of_subset, verify_coloring, DEFAULT_NODE_BUDGET,
};
use treehunt_core::generators::{iterated_mycielski, random_triangle_free, Rng64};
use treehunt_core::graph::RootedLayers;
use treehunt_core::hunter::{
    candidate_centers, check_stall_structure, extend_coloring, find_piece, hunt, label_vertices,
    reduce_to_basis, HuntStatus, Residual,
};
use treehunt_core::instances::regression_corpus;
use treehunt_core::tree::{build_tree, find_induced_copy, verify_embedding, TreeSpec};
use treehunt_core::Graph;

#[test]
fn a1_corpus_sanity_mycielski_ladder() {
    for (k, chi) in [(0usize, 3usize), (1, 4), (2, 5)] {
        let start = Instant::now();
        let g = iterated_mycielski(k);
        assert!(g.is_triangle_free(), "iteration {k} not triangle-free");
        assert_eq!(g.radius_and_center().unwrap().0, 2, "iteration {k} radius");
        let result = chromatic_number(&g, DEFAULT_NODE_BUDGET);
        assert!(result.exact, "iteration {k}: solver did not complete");
        assert_eq!(result.upper, chi, "iteration {k} chromatic number");
        let elapsed = start.elapsed();
        assert!(
            elapsed < Duration::from_secs(10),
            "iteration {k} took {elapsed:?}"
        );
        println!("PASS corpus-sanity: iteration {k} chi={chi} in {elapsed:?}");
    }
}

#[test]
fn a2_oracle_matches_subset_enumeration() {
    let start = Instant::now();
    // every shape with at most 7 vertices from the two families
    let shapes: Vec<TreeSpec> = [
        vec![1usize, 1],
        vec![1, 2],
        vec![1, 3],
        vec![1, 4],
        vec![1, 5],
        vec![2, 1],
        vec![2, 2],
        vec![3, 1],
        vec![1, 2, 1],
    ]
    .into_iter()
    .map(|v| TreeSpec::new(v).unwrap())
    .collect();

    let mut rng = Rng64::new(404);
    let mut checked = 0;
    for round in 0..50 {
        let n = 4 + rng.below(9); // up to 12
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_u64() % 100 < 25 + rng.below(25) as u64 {
                    edges.push((u, v));
                }
            }
        }
        let g = treehunt_core::build_graph(n, &edges).unwrap();
        for spec in &shapes {
            let found = find_induced_copy(&g, spec, None);
            let expected = oracle::subset_oracle_contains(&g, spec);
            assert_eq!(found.is_some(), expected, "round {round} spec {spec}");
            if let Some(e) = found {
                assert!(verify_embedding(&g, spec, &e), "round {round} spec {spec}");
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "oracle sweep took {elapsed:?}"
    );
    println!("PASS oracle-agreement: {checked} graph/shape pairs in {elapsed:?}");
}

#[test]
fn a3_tree_vertex_count_anchors() {
    for (degrees, expected) in [
        (vec![4usize, 2], 13usize),
        (vec![5, 2, 1], 26),
        (vec![2, 1], 5),
    ] {
        let spec = TreeSpec::new(degrees.clone()).unwrap();
        let tree = build_tree(&spec);
        assert_eq!(tree.graph.vertex_count(), expected, "shape {spec}");
        println!("PASS tree-count: {spec} has {expected} vertices");
    }
}

/// Every extraction the hunter can perform over the corpus, one step at
/// a time, with the residual graphs before and after.
fn for_each_extraction(
    mut visit: impl FnMut(&str, &Graph, &Residual, &Residual, &treehunt_core::hunter::ExtractionPiece),
) {
    for (name, g) in corpus::corpus() {
        if g.vertex_count() > 30 {
            continue;
        }
        for center in candidate_centers(&g) {
            let mut residual = Residual::full(&g, center);
            while let Some(piece) = find_piece(&g, &residual) {
                let after = residual.without(&g, &piece.deletion_set);
                visit(&name, &g, &residual, &after, &piece);
                residual = after;
            }
        }
    }
}

#[test]
fn a4_extraction_budget_holds() {
    let mut extractions = 0;
    for_each_extraction(|name, g, before, after, piece| {
        extractions += 1;
        let chi_before = chromatic_of_subset(g, &before.alive, DEFAULT_NODE_BUDGET);
        let chi_after = chromatic_of_subset(g, &after.alive, DEFAULT_NODE_BUDGET);
        assert!(
            chi_before.exact && chi_after.exact,
            "{name}: solver incomplete"
        );
        assert!(
            chi_before.upper <= chi_after.upper + 4,
            "{name}: chi dropped from {} to {}",
            chi_before.upper,
            chi_after.upper
        );
        let chi_deleted = chromatic_of_subset(g, &piece.deletion_set, DEFAULT_NODE_BUDGET);
        assert!(chi_deleted.exact, "{name}: deletion solve incomplete");
        assert!(
            chi_deleted.upper <= 4,
            "{name}: deletion set needs {} colors",
            chi_deleted.upper
        );
    });
    assert!(
        extractions >= 20,
        "sweep found only {extractions} extractions"
    );
    println!("PASS extraction-budget: {extractions} extractions, zero violations");
}

fn fuzz_rooted_graphs() -> Vec<(Graph, usize)> {
    let mut rng = Rng64::new(808);
    let mut out = Vec::new();
    while out.len() < 200 {
        let n = 5 + rng.below(14);
        let g = random_triangle_free(n, rng.below(3 * n), rng.next_u64());
        let root = rng.below(n);
        out.push((g, root));
    }
    out
}

#[test]
fn a5_stall_structure_iff_no_piece() {
    let mut stalled = 0;
    for (idx, (g, root)) in fuzz_rooted_graphs().iter().enumerate() {
        let residual = Residual::full(g, *root);
        let piece_absent = find_piece(g, &residual).is_none();
        let structure_holds = check_stall_structure(g, &residual.view).is_ok();
        assert_eq!(
            piece_absent, structure_holds,
            "instance {idx}: piece_absent={piece_absent}, structure={structure_holds}"
        );
        if piece_absent {
            stalled += 1;
        }
    }
    assert!(stalled > 20, "only {stalled} stalls in the fuzz corpus");
    println!("PASS stall-equivalence: 200 rooted graphs, {stalled} stalled, zero violations");
}

/// Checks the basis/second-layer chromatic equality and the coloring
/// extension on one stalled residual. Returns true when the instance
/// was in scope (nonempty second layer of size at most 25).
fn check_basis_equality(name: &str, g: &Graph, layers: &RootedLayers) -> bool {
    if layers.s2.is_empty() || layers.s2.len() > 25 {
        return false;
    }
    let labels = label_vertices(g, layers)
        .unwrap_or_else(|e| panic!("{name}: labeling failed on a stalled instance: {e}"));
    if labels.is_empty() {
        return false;
    }
    let basis = reduce_to_basis(g, &labels, layers);
    let chi_basis = chromatic_of_subset(g, &basis.basis, DEFAULT_NODE_BUDGET);
    let chi_layer = chromatic_of_subset(g, &layers.s2, DEFAULT_NODE_BUDGET);
    assert!(
        chi_basis.exact && chi_layer.exact,
        "{name}: solver incomplete"
    );
    assert_eq!(
        chi_basis.upper, chi_layer.upper,
        "{name}: basis needs {} colors, layer {}",
        chi_basis.upper, chi_layer.upper
    );
    let extended = extend_coloring(g, &basis, layers, &chi_basis.witness)
        .unwrap_or_else(|e| panic!("{name}: extension stuck: {e}"));
    let (induced, _) = g.induced(&layers.s2);
    assert!(
        verify_coloring(&induced, &extended).unwrap(),
        "{name}: extended coloring improper"
    );
    assert_eq!(
        extended.color_count, chi_basis.upper,
        "{name}: extension used {} colors, basis {}",
        extended.color_count, chi_basis.upper
    );
    true
}

#[test]
fn a6_basis_chromatic_equality_on_stalls() {
    let mut checked = 0;

    // stalls reached by running extraction to exhaustion over the corpus
    for (name, g) in corpus::corpus() {
        if g.vertex_count() > 30 {
            continue;
        }
        for center in candidate_centers(&g) {
            let mut residual = Residual::full(&g, center);
            while let Some(piece) = find_piece(&g, &residual) {
                residual = residual.without(&g, &piece.deletion_set);
            }
            if check_basis_equality(&name, &g, &residual.view) {
                checked += 1;
            }
        }
    }
    // stalls among the fuzzed rooted graphs
    for (idx, (g, root)) in fuzz_rooted_graphs().iter().enumerate() {
        let residual = Residual::full(g, *root);
        if find_piece(g, &residual).is_some() {
            continue;
        }
        if check_basis_equality(&format!("fuzz-{idx}"), g, &residual.view) {
            checked += 1;
        }
    }
    assert!(checked >= 50, "only {checked} stalled instances in scope");
    println!("PASS basis-equality: {checked} stalled instances, zero violations");
}

#[test]
fn a7_hunt_agrees_with_oracle_end_to_end() {
    let start = Instant::now();
    let mut compared = 0;
    for (name, g) in corpus::corpus() {
        if g.vertex_count() > 25 {
            continue;
        }
        let premises_hold = g.is_triangle_free() && g.radius_and_center().map(|(r, _)| r) == Ok(2);
        for t in [1usize, 2] {
            let outcome = hunt(&g, t, true);
            if !premises_hold {
                assert_eq!(outcome.status, HuntStatus::PremiseViolated, "{name} t={t}");
                continue;
            }
            let spec = TreeSpec::hunted(t);
            let oracle_found = find_induced_copy(&g, &spec, None).is_some();
            match outcome.status {
                HuntStatus::Found => {
                    assert!(oracle_found, "{name} t={t}: hunter found, oracle absent");
                    let cert = outcome.certificate.expect("found carries certificate");
                    assert!(verify_embedding(&g, &spec, &cert), "{name} t={t}");
                }
                HuntStatus::NotFound => {
                    assert!(!oracle_found, "{name} t={t}: hunter missed a copy")
                }
                other => panic!("{name} t={t}: unexpected status {other:?}"),
            }
            compared += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "end-to-end sweep took {elapsed:?}"
    );
    println!("PASS end-to-end: {compared} hunt/oracle comparisons in {elapsed:?}");
}

#[test]
fn a8_planted_instances_recover_through_intended_route() {
    let instances = regression_corpus();
    assert_eq!(instances.len(), 20);
    for inst in &instances {
        // no fallback: the constructive route itself must succeed
        let outcome = hunt(&inst.graph, inst.t, false);
        assert_eq!(outcome.status, HuntStatus::Found, "{}", inst.name);
        assert_eq!(outcome.via, Some(inst.expected_via), "{}", inst.name);
        assert_eq!(outcome.center, Some(inst.center), "{}", inst.name);
        let cert = outcome
            .certificate
            .as_ref()
            .expect("found carries certificate");
        assert!(verify_embedding(
            &inst.graph,
            &TreeSpec::hunted(inst.t),
            cert
        ));
        // the trace in the serialized certificate records the route
        let file = treehunt_cli::certificate::from_outcome(&outcome);
        let stall = file.stall.expect("found outcomes carry a trace");
        assert_eq!(
            stall.branch.as_deref(),
            Some(inst.expected_via.name()),
            "{}",
            inst.name
        );
    }
    println!("PASS planted-recovery: 20 instances through their intended routes");
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treehunt"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn a9_cli_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let grotzsch = dir.path().join("g.col");
    let c5 = dir.path().join("c5.col");
    assert!(run_cli(&[
        "generate",
        "mycielski",
        "--k",
        "1",
        "--output",
        grotzsch.to_str().unwrap()
    ])
    .status
    .success());
    assert!(run_cli(&[
        "generate",
        "cycle",
        "--n",
        "5",
        "--output",
        c5.to_str().unwrap()
    ])
    .status
    .success());
    let g = grotzsch.to_str().unwrap();
    let c = c5.to_str().unwrap();

    let invocations: Vec<Vec<&str>> = vec![
        vec!["generate", "cycle", "--n", "7"],
        vec!["generate", "mycielski", "--k", "2"],
        vec!["generate", "kneser", "--n", "5", "--k", "2"],
        vec![
            "generate", "random", "--n", "14", "--edges", "20", "--seed", "99",
        ],
        vec!["color", "--input", g],
        vec!["oracle", "--spec", "1,2,1", "--input", g],
        vec!["hunt", "--t", "1", "--input", g],
        vec!["hunt", "--t", "1", "--input", c],
        vec!["hunt", "--t", "2", "--input", g, "--no-fallback"],
        vec!["stats", "--input", g],
    ];
    for args in &invocations {
        let first = run_cli(args);
        let second = run_cli(args);
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
        assert_eq!(first.status.code(), second.status.code(), "args {args:?}");
    }
    // verify over a written certificate, twice
    let cert = dir.path().join("cert.json");
    assert!(run_cli(&[
        "hunt",
        "--t",
        "1",
        "--input",
        g,
        "--output",
        cert.to_str().unwrap()
    ])
    .status
    .success());
    let v1 = run_cli(&["verify", "--cert", cert.to_str().unwrap(), "--input", g]);
    let v2 = run_cli(&["verify", "--cert", cert.to_str().unwrap(), "--input", g]);
    assert!(v1.status.success());
    assert_eq!(v1.stdout, v2.stdout);
    // worker count must not change the reported outcome
    let solo = run_cli(&["hunt", "--t", "1", "--input", g]);
    let multi = run_cli(&["hunt", "--t", "1", "--input", g, "--jobs", "3"]);
    assert_eq!(solo.stdout, multi.stdout);
    println!(
        "PASS determinism: {} invocations byte-identical",
        invocations.len() + 1
    );
}
