//! Enumeration of minimal cuts (MCs) through their MCV node sets.
//!
//! Every minimal source-sink cut `C` of a digraph is the boundary `E(V*)` of
//! exactly one node set `V*` (its MCV: the nodes still reachable from the
//! source once `C` is removed), so enumerating valid MCVs enumerates MCs
//! without duplicates. A candidate `V*` containing the source and not the
//! sink is an MCV iff
//!
//! 1. every node of `V*` is reachable from the source using arcs internal
//!    to `V*`, and
//! 2. the head of every boundary arc can reach the sink using arcs internal
//!    to the complement of `V*` (this is exactly minimality of `E(V*)`:
//!    dropping one boundary arc must reconnect source to sink).
//!
//! Enumeration iterates over node subsets, so it is exponential in the node
//! count; the library targets desk-scale networks and refuses larger ones.

use crate::net::{ArcId, Network, NodeId, NodeSet};
use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

/// Node-count ceiling for [`enumerate_mcs`] (subset enumeration).
pub const MAX_ENUMERATION_NODES: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutError {
    NodeOutOfRange { node: NodeId },
    UnknownArc { arc: ArcId },
    /// The MCV predicate requires the source inside and the sink outside.
    SourceSinkPlacement,
    /// The given arc set does not disconnect source from sink.
    NotACut,
    SourceCannotReachSink,
    TooManyNodes { n: usize },
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::NodeOutOfRange { node } => write!(f, "node {node} outside the network"),
            CutError::UnknownArc { arc } => write!(f, "unknown arc id {arc}"),
            CutError::SourceSinkPlacement => {
                write!(f, "node set must contain the source and exclude the sink")
            }
            CutError::NotACut => write!(f, "arc set does not disconnect source from sink"),
            CutError::SourceCannotReachSink => {
                write!(f, "the network has no source-to-sink path")
            }
            CutError::TooManyNodes { n } => write!(
                f,
                "cut enumeration supports at most {MAX_ENUMERATION_NODES} nodes, got {n}"
            ),
        }
    }
}

/// A minimal cut with its MCV node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    /// 1-based position in the canonical enumeration order.
    pub index: usize,
    /// Arc ids of the cut, ascending.
    pub arcs: Vec<ArcId>,
    /// Nodes reachable from the source once the cut is removed.
    pub mcv: NodeSet,
}

impl MinCut {
    /// Total capacity of the cut under state vector `x`.
    pub fn capacity_under(&self, x: &crate::net::StateVector) -> u64 {
        self.arcs.iter().map(|&a| x.get(a)).sum()
    }
}

/// `E(V*)`: arcs with tail inside `vset` and head outside, ascending by id.
pub fn boundary(net: &Network, vset: &NodeSet) -> Result<Vec<ArcId>, CutError> {
    for node in vset.iter() {
        if node > net.node_count() {
            return Err(CutError::NodeOutOfRange { node });
        }
    }
    Ok(net
        .arcs()
        .iter()
        .filter(|a| vset.contains(a.tail) && !vset.contains(a.head))
        .map(|a| a.id)
        .collect())
}

/// Nodes reachable from `start` using only arcs whose id passes `arc_ok`
/// and whose endpoints both pass `node_ok`.
fn reach_forward(
    net: &Network,
    start: NodeId,
    arc_ok: impl Fn(ArcId) -> bool,
    node_ok: impl Fn(NodeId) -> bool,
) -> NodeSet {
    let mut seen = NodeSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for arc in net.arcs() {
            if arc.tail == u && arc_ok(arc.id) && node_ok(arc.head) && !seen.contains(arc.head) {
                seen.insert(arc.head);
                queue.push_back(arc.head);
            }
        }
    }
    seen
}

/// Nodes that can reach `target` using only arcs with both endpoints
/// passing `node_ok`.
fn reach_backward(net: &Network, target: NodeId, node_ok: impl Fn(NodeId) -> bool) -> NodeSet {
    let mut seen = NodeSet::singleton(target);
    let mut queue = VecDeque::from([target]);
    while let Some(u) = queue.pop_front() {
        for arc in net.arcs() {
            if arc.head == u
                && node_ok(arc.tail)
                && node_ok(arc.head)
                && !seen.contains(arc.tail)
            {
                seen.insert(arc.tail);
                queue.push_back(arc.tail);
            }
        }
    }
    seen
}

/// True iff `vset` is the MCV of some minimal cut, i.e. `E(vset)` is an MC
/// and `vset` is exactly the set of nodes reachable once it is removed.
pub fn is_mcv(net: &Network, vset: &NodeSet) -> Result<bool, CutError> {
    for node in vset.iter() {
        if node > net.node_count() {
            return Err(CutError::NodeOutOfRange { node });
        }
    }
    if !vset.contains(net.source()) || vset.contains(net.sink()) {
        return Err(CutError::SourceSinkPlacement);
    }
    // Internal reachability: vset must equal the reach of the source once
    // the boundary is removed.
    let inside = reach_forward(net, net.source(), |_| true, |v| vset.contains(v));
    if inside != *vset {
        return Ok(false);
    }
    // Minimality: restoring any single boundary arc must reconnect the
    // source to the sink, i.e. every boundary head reaches the sink within
    // the complement.
    let reaches_sink = reach_backward(net, net.sink(), |v| !vset.contains(v));
    for arc in net.arcs() {
        if vset.contains(arc.tail) && !vset.contains(arc.head) && !reaches_sink.contains(arc.head)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The MCV of cut `arcs`: nodes reachable from the source in the network
/// with those arcs deleted. Fails if the sink stays reachable.
pub fn mcv_of(net: &Network, arcs: &[ArcId]) -> Result<NodeSet, CutError> {
    let mut is_removed = alloc::vec![false; net.arc_count() + 1];
    for &a in arcs {
        if a == 0 || a > net.arc_count() {
            return Err(CutError::UnknownArc { arc: a });
        }
        is_removed[a] = true;
    }
    let reach = reach_forward(net, net.source(), |a| !is_removed[a], |_| true);
    if reach.contains(net.sink()) {
        return Err(CutError::NotACut);
    }
    Ok(reach)
}

/// Enumerates all minimal cuts in canonical order: ascending arc count,
/// ties broken by lexicographic MCV node order. The order fixes the
/// candidate indexing downstream, so it is part of the contract.
pub fn enumerate_mcs(net: &Network) -> Result<Vec<MinCut>, CutError> {
    let n = net.node_count();
    if n > MAX_ENUMERATION_NODES {
        return Err(CutError::TooManyNodes { n });
    }
    let full_reach = reach_forward(net, net.source(), |_| true, |_| true);
    if !full_reach.contains(net.sink()) {
        return Err(CutError::SourceCannotReachSink);
    }

    let middle: Vec<NodeId> = (2..n).collect();
    let mut found: Vec<(Vec<ArcId>, NodeSet)> = Vec::new();
    for mask in 0u64..(1u64 << middle.len()) {
        let mut vset = NodeSet::singleton(net.source());
        for (bit, &node) in middle.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                vset.insert(node);
            }
        }
        if is_mcv(net, &vset)? {
            let arcs = boundary(net, &vset)?;
            found.push((arcs, vset));
        }
    }
    found.sort_by(|(arcs_a, mcv_a), (arcs_b, mcv_b)| {
        arcs_a.len().cmp(&arcs_b.len()).then_with(|| mcv_a.lex_cmp(mcv_b))
    });
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(i, (arcs, mcv))| MinCut { index: i + 1, arcs, mcv })
        .collect())
}
