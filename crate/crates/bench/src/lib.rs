//! Shared fixtures for the benchmark targets.

use treehunt_core::generators::{iterated_mycielski, kneser, random_triangle_free};
use treehunt_core::instances::{
    planted_anchored, planted_matching, planted_pieces, PlantedInstance,
};
use treehunt_core::Graph;

pub fn grotzsch() -> Graph {
    iterated_mycielski(1)
}

pub fn double_mycielski() -> Graph {
    iterated_mycielski(2)
}

pub fn petersen() -> Graph {
    kneser(5, 2).unwrap()
}

pub fn dense_triangle_free(n: usize) -> Graph {
    random_triangle_free(n, 3 * n, 0x5eed)
}

pub fn planted_set() -> Vec<PlantedInstance> {
    vec![
        planted_pieces(3, 3),
        planted_matching(1, 0),
        planted_anchored(2, 0),
    ]
}
