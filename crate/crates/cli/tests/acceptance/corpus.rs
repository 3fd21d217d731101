//! The graph corpus the sweeps run over: the generator families at
//! small scale, the tiny planted instances, and a block of seeded
//! triangle-free process graphs.

use treehunt_core::generators::{cycle, iterated_mycielski, kneser, random_triangle_free};
use treehunt_core::instances::planted_pieces;
use treehunt_core::Graph;

pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    out.push(("c5".into(), cycle(5).unwrap()));
    for k in 0..=2 {
        out.push((format!("mycielski-{k}"), iterated_mycielski(k)));
    }
    out.push(("kneser-5-2".into(), kneser(5, 2).unwrap()));
    out.push(("kneser-4-2".into(), kneser(4, 2).unwrap()));
    out.push(("kneser-2-1".into(), kneser(2, 1).unwrap()));
    for t in 1..=3 {
        let inst = planted_pieces(t, t);
        out.push((inst.name, inst.graph));
    }
    for seed in 1..=12u64 {
        let n = 10 + (seed as usize % 7) * 3; // 10..=28
        let edges = n + (seed as usize * 5) % (2 * n);
        out.push((
            format!("random-n{n}-m{edges}-s{seed}"),
            random_triangle_free(n, edges, seed),
        ));
    }
    out
}
