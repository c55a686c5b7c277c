//! Shared test support: seeded random networks and brute-force oracles that
//! stay independent of the library's enumeration and filtering paths.

// Each test binary pulls in the subset it needs.
#![allow(dead_code)]

use dmc_core::{analyze, Arc, ArcId, Network, State, StateVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected network: a source-to-sink path through every node plus
/// random extra arcs, capacities in `1..=max_w`. The state space
/// `prod(W+1)` is kept small so lattice-wide oracles stay fast.
pub fn random_net(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize, max_w: State) -> Network {
    let n = rng.gen_range(2..=max_n);
    let mut order: Vec<usize> = (2..n).collect();
    order.shuffle(rng);
    let mut nodes = vec![1];
    nodes.extend(order);
    nodes.push(n);

    let mut ends: Vec<(usize, usize)> = nodes.windows(2).map(|w| (w[0], w[1])).collect();
    let m = rng.gen_range(ends.len()..=max_m.max(ends.len()));
    while ends.len() < m {
        let tail = rng.gen_range(1..=n);
        let head = rng.gen_range(1..=n);
        if tail != head {
            ends.push((tail, head));
        }
    }

    let mut caps: Vec<State> = (0..ends.len()).map(|_| rng.gen_range(1..=max_w)).collect();
    // Shrink the state space until lattice enumeration is cheap.
    let mut space: u128 = caps.iter().map(|&w| w as u128 + 1).product();
    let mut k = 0;
    while space > 30_000 {
        let idx = k % caps.len();
        if caps[idx] > 1 {
            space = space / (caps[idx] as u128 + 1) * 2;
            caps[idx] = 1;
        }
        k += 1;
    }

    let arcs = ends
        .into_iter()
        .zip(caps)
        .enumerate()
        .map(|(i, ((tail, head), capacity))| Arc { id: i + 1, tail, head, capacity })
        .collect();
    Network::new(n, arcs).unwrap()
}

/// Uniform random state vector below the capacities.
pub fn random_state(rng: &mut ChaCha8Rng, net: &Network) -> StateVector {
    StateVector::new(
        net.arcs()
            .iter()
            .map(|a| rng.gen_range(0..=a.capacity))
            .collect(),
    )
}

fn disconnects(net: &Network, removed: &[bool]) -> bool {
    let mut seen = vec![false; net.node_count() + 1];
    seen[1] = true;
    let mut stack = vec![1];
    while let Some(u) = stack.pop() {
        for arc in net.arcs() {
            if arc.tail == u && !removed[arc.id] && !seen[arc.head] {
                seen[arc.head] = true;
                stack.push(arc.head);
            }
        }
    }
    !seen[net.node_count()]
}

/// All minimal cuts by exhaustive subset search: a subset of arcs is an MC
/// iff removing it disconnects source from sink and removing any proper
/// subset does not.
pub fn brute_force_mcs(net: &Network) -> BTreeSet<Vec<ArcId>> {
    let m = net.arc_count();
    assert!(m <= 16, "exhaustive cut search wants small networks");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1u32 << m) {
        let mut removed = vec![false; m + 1];
        for a in 1..=m {
            removed[a] = mask >> (a - 1) & 1 == 1;
        }
        if !disconnects(net, &removed) {
            continue;
        }
        let members: Vec<usize> = (1..=m).filter(|&a| removed[a]).collect();
        let minimal = members.iter().all(|&a| {
            removed[a] = false;
            let still_cut = disconnects(net, &removed);
            removed[a] = true;
            !still_cut
        });
        if minimal {
            out.insert(members);
        }
    }
    out
}

/// Max flow of every state vector in the lattice `0..=W`, indexed by the
/// mixed-radix rank of the vector.
pub struct FlowTable {
    strides: Vec<usize>,
    caps: Vec<State>,
    values: Vec<State>,
}

impl FlowTable {
    pub fn build(net: &Network) -> FlowTable {
        let caps: Vec<State> = net.arcs().iter().map(|a| a.capacity).collect();
        let mut strides = vec![1usize; caps.len()];
        for k in 1..caps.len() {
            strides[k] = strides[k - 1] * (caps[k - 1] as usize + 1);
        }
        let total: usize = caps.iter().map(|&w| w as usize + 1).product();
        let mut values = vec![0; total];
        let mut x = StateVector::zeros(caps.len());
        for slot in values.iter_mut() {
            *slot = analyze(net, &x).value;
            // odometer
            for k in 1..=caps.len() {
                if x.get(k) < caps[k - 1] {
                    x.set(k, x.get(k) + 1);
                    break;
                }
                x.set(k, 0);
            }
        }
        FlowTable { strides, caps, values }
    }

    fn rank(&self, x: &StateVector) -> usize {
        x.states()
            .iter()
            .zip(&self.strides)
            .map(|(&s, &st)| s as usize * st)
            .sum()
    }

    pub fn flow(&self, x: &StateVector) -> State {
        self.values[self.rank(x)]
    }

    pub fn max_flow(&self) -> State {
        *self.values.last().unwrap()
    }

    /// The real d-MC set straight from the definition: flow exactly `d` and
    /// every unsaturated bump raises it.
    pub fn dmc_set(&self, d: State) -> BTreeSet<StateVector> {
        let mut out = BTreeSet::new();
        let mut x = StateVector::zeros(self.caps.len());
        for _ in 0..self.values.len() {
            if self.flow(&x) == d {
                let is_dmc = (1..=self.caps.len())
                    .filter(|&k| x.get(k) < self.caps[k - 1])
                    .all(|k| self.flow(&x.bump(k)) > d);
                if is_dmc {
                    out.insert(x.clone());
                }
            }
            for k in 1..=self.caps.len() {
                if x.get(k) < self.caps[k - 1] {
                    x.set(k, x.get(k) + 1);
                    break;
                }
                x.set(k, 0);
            }
        }
        out
    }
}
