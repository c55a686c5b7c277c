//! A small bundled example: the four-node power-transmission network used
//! throughout the documentation and tests.

use crate::net::{Arc, ArcId, Network, State, StateDistribution};
use alloc::vec::Vec;

/// Arc list of the four-node example: `(id, tail, head, capacity)`.
pub const FOUR_NODE_ARCS: [(ArcId, usize, usize, State); 6] = [
    (1, 1, 2, 3),
    (2, 2, 4, 2),
    (3, 2, 3, 2),
    (4, 3, 2, 2),
    (5, 1, 3, 2),
    (6, 3, 4, 3),
];

/// State distribution of the four-node example: `(arc, state, probability)`.
pub const FOUR_NODE_PROBS: [(ArcId, State, f64); 20] = [
    (1, 3, 0.60),
    (1, 2, 0.20),
    (1, 1, 0.10),
    (1, 0, 0.10),
    (2, 2, 0.60),
    (2, 1, 0.25),
    (2, 0, 0.15),
    (3, 2, 0.40),
    (3, 1, 0.35),
    (3, 0, 0.25),
    (4, 2, 0.55),
    (4, 1, 0.25),
    (4, 0, 0.20),
    (5, 2, 0.80),
    (5, 1, 0.15),
    (5, 0, 0.05),
    (6, 3, 0.70),
    (6, 2, 0.15),
    (6, 1, 0.10),
    (6, 0, 0.05),
];

/// Builds the four-node example network with its state distribution.
///
/// Nodes 1..4, source 1, sink 4, capacities `W = (3,2,2,2,2,3)`. It has
/// exactly four minimal cuts and nine 3-MCs.
pub fn four_node() -> (Network, Option<StateDistribution>) {
    let arcs: Vec<Arc> = FOUR_NODE_ARCS
        .iter()
        .map(|&(id, tail, head, capacity)| Arc { id, tail, head, capacity })
        .collect();
    let net = Network::new(4, arcs).expect("sample network is valid");
    let dist = StateDistribution::from_entries(&net, &FOUR_NODE_PROBS)
        .expect("sample distribution is valid");
    (net, Some(dist))
}
