//! d-MC candidate generation.
//!
//! A candidate for demand `d` and minimal cut `C` keeps every arc outside
//! `C` at capacity and distributes exactly `d` units over the arcs of `C`,
//! each within its capacity. Candidates stream in descending lexicographic
//! order of the on-cut coordinates (arcs ascending by id), which fixes the
//! `(i, j)` indexing used by the filters and reports. Candidate sets grow
//! exponentially, so consumers should iterate rather than materialize.

use crate::cuts::MinCut;
use crate::net::{ArcId, Network, State, StateVector};
use alloc::vec::Vec;

/// One candidate vector, tagged with the cut that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub vector: StateVector,
    /// Canonical index of the generating MC.
    pub mc_index: usize,
    /// 1-based position within the MC's candidate list.
    pub ordinal: usize,
}

/// Streaming enumerator of the candidates of one cut.
pub struct CandidateIter {
    template: StateVector,
    cut_arcs: Vec<ArcId>,
    bounds: Vec<State>,
    current: Option<Vec<State>>,
    mc_index: usize,
    ordinal: usize,
}

impl CandidateIter {
    fn new(net: &Network, mc: &MinCut, d: State) -> Self {
        let bounds: Vec<State> = mc
            .arcs
            .iter()
            .map(|&a| net.capacity(a).expect("cut arcs belong to the network"))
            .collect();
        let current = first_composition(d, &bounds);
        CandidateIter {
            template: net.capacity_vector(),
            cut_arcs: mc.arcs.clone(),
            bounds,
            current,
            mc_index: mc.index,
            ordinal: 0,
        }
    }
}

impl Iterator for CandidateIter {
    type Item = Candidate;

    fn next(&mut self) -> Option<Candidate> {
        let parts = self.current.as_ref()?;
        let mut vector = self.template.clone();
        for (&arc, &value) in self.cut_arcs.iter().zip(parts) {
            vector.set(arc, value);
        }
        self.ordinal += 1;
        let candidate = Candidate { vector, mc_index: self.mc_index, ordinal: self.ordinal };
        self.current = next_composition(self.current.take().unwrap(), &self.bounds);
        Some(candidate)
    }
}

/// Lexicographically largest composition of `total` under `bounds`, if any.
fn first_composition(total: State, bounds: &[State]) -> Option<Vec<State>> {
    let mut remaining = total;
    let mut parts = Vec::with_capacity(bounds.len());
    for &b in bounds {
        let take = remaining.min(b);
        parts.push(take);
        remaining -= take;
    }
    if remaining == 0 && !bounds.is_empty() {
        Some(parts)
    } else {
        None
    }
}

/// Next composition in descending lexicographic order: decrement the
/// rightmost position whose suffix can absorb one more unit, then refill
/// the suffix greedily from the left.
fn next_composition(mut parts: Vec<State>, bounds: &[State]) -> Option<Vec<State>> {
    let len = parts.len();
    let mut suffix_sum: State = 0;
    let mut suffix_bound: State = 0;
    for p in (0..len.saturating_sub(1)).rev() {
        suffix_sum += parts[p + 1];
        suffix_bound += bounds[p + 1];
        if parts[p] > 0 && suffix_sum < suffix_bound {
            parts[p] -= 1;
            let mut remaining = suffix_sum + 1;
            for q in p + 1..len {
                let take = remaining.min(bounds[q]);
                parts[q] = take;
                remaining -= take;
            }
            debug_assert_eq!(remaining, 0);
            return Some(parts);
        }
    }
    None
}

/// Streams the candidates of `mc` for demand `d` in canonical order.
pub fn enumerate_candidates(net: &Network, mc: &MinCut, d: State) -> CandidateIter {
    CandidateIter::new(net, mc, d)
}

/// Number of candidates of `mc` for demand `d`, computed by a bounded
/// composition count (saturating at `u64::MAX`).
pub fn count_candidates(net: &Network, mc: &MinCut, d: State) -> u64 {
    let mut ways: Vec<u64> = alloc::vec![0; d as usize + 1];
    ways[0] = 1;
    for &arc in &mc.arcs {
        let bound = net.capacity(arc).expect("cut arcs belong to the network");
        let mut next: Vec<u64> = alloc::vec![0; d as usize + 1];
        for (total, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let top = (d as usize).min(total + bound as usize);
            for value in next.iter_mut().take(top + 1).skip(total) {
                *value = value.saturating_add(w);
            }
        }
        ways = next;
    }
    ways[d as usize]
}

/// All candidates of all cuts, materialized per MC in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub per_mc: Vec<Vec<Candidate>>,
    pub total: usize,
}

pub fn collect_candidate_set(net: &Network, mcs: &[MinCut], d: State) -> CandidateSet {
    let per_mc: Vec<Vec<Candidate>> = mcs
        .iter()
        .map(|mc| enumerate_candidates(net, mc, d).collect())
        .collect();
    let total = per_mc.iter().map(Vec::len).sum();
    CandidateSet { per_mc, total }
}
