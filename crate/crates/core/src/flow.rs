//! Integer max-flow over a network bound to a state vector, plus the
//! residual-network reach sets `S(X)` (from the source) and `T(X)` (to the
//! sink) that the d-MC verification rules are built on.
//!
//! Any maximum flow yields the same residual reach sets, so the engine only
//! has to be deterministic, not canonical. Two strategies are provided; the
//! reach-set invariance across them is covered by tests rather than assumed.

use crate::net::{ArcId, Network, NodeId, NodeSet, State, StateVector};
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowError {
    /// The queried arc is already at capacity.
    ArcSaturated { arc: ArcId },
}

impl fmt::Display for FlowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowError::ArcSaturated { arc } => {
                write!(f, "arc {arc} is saturated; only unsaturated arcs may be bumped")
            }
        }
    }
}

/// Augmenting-path selection rule. Both rules are deterministic: residual
/// edges at a node are always scanned in ascending arc-id order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentStrategy {
    /// Breadth-first shortest augmenting path (the default).
    ShortestPath,
    /// Depth-first search, first augmenting path found.
    DepthFirst,
}

/// Result of a max-flow run for a fixed state vector `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAnalysis {
    /// Maximum flow value `F(X)` from node 1 to node n.
    pub value: State,
    /// Per-arc flow assignment, `flow[k-1] <= X(a_k)`.
    pub flow: Vec<State>,
    /// `S(X)`: nodes reachable from the source in the residual network.
    pub source_side: NodeSet,
    /// `T(X)`: nodes from which the sink is reachable in the residual network.
    pub sink_side: NodeSet,
}

/// Residual capacities induced by `(X, flow)`: forward `X(a) - flow(a)` along
/// the arc and backward `flow(a)` against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualView {
    pub forward: Vec<State>,
    pub backward: Vec<State>,
}

impl ResidualView {
    pub fn new(x: &StateVector, analysis: &FlowAnalysis) -> ResidualView {
        let forward = x
            .states()
            .iter()
            .zip(&analysis.flow)
            .map(|(&cap, &f)| cap - f)
            .collect();
        ResidualView { forward, backward: analysis.flow.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    Forward,
    Backward,
}

/// Residual graph working state for one max-flow run.
struct Engine<'a> {
    net: &'a Network,
    fwd: Vec<State>,
    bwd: Vec<State>,
    out: Vec<Vec<ArcId>>,
    inc: Vec<Vec<ArcId>>,
}

impl<'a> Engine<'a> {
    fn new(net: &'a Network, x: &StateVector) -> Self {
        let n = net.node_count();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for arc in net.arcs() {
            out[arc.tail - 1].push(arc.id);
            inc[arc.head - 1].push(arc.id);
        }
        Engine { net, fwd: x.states().to_vec(), bwd: vec![0; x.len()], out, inc }
    }

    /// Residual edges leaving `node`, merged in ascending arc-id order.
    fn edges_from(&self, node: NodeId) -> Vec<(ArcId, Dir, NodeId)> {
        let fwd = self.out[node - 1]
            .iter()
            .filter(|&&a| self.fwd[a - 1] > 0)
            .map(|&a| (a, Dir::Forward, self.net.arcs()[a - 1].head));
        let bwd = self.inc[node - 1]
            .iter()
            .filter(|&&a| self.bwd[a - 1] > 0)
            .map(|&a| (a, Dir::Backward, self.net.arcs()[a - 1].tail));
        let mut edges: Vec<_> = fwd.chain(bwd).collect();
        edges.sort_unstable_by_key(|&(a, _, _)| a);
        edges
    }

    fn residual(&self, arc: ArcId, dir: Dir) -> State {
        match dir {
            Dir::Forward => self.fwd[arc - 1],
            Dir::Backward => self.bwd[arc - 1],
        }
    }

    fn push(&mut self, arc: ArcId, dir: Dir, amount: State) {
        match dir {
            Dir::Forward => {
                self.fwd[arc - 1] -= amount;
                self.bwd[arc - 1] += amount;
            }
            Dir::Backward => {
                self.bwd[arc - 1] -= amount;
                self.fwd[arc - 1] += amount;
            }
        }
    }

    /// Shortest augmenting path by BFS; ties fall to the smallest arc id
    /// because discovery scans edges in id order.
    fn bfs_path(&self) -> Option<Vec<(ArcId, Dir)>> {
        let n = self.net.node_count();
        let (source, sink) = (self.net.source(), self.net.sink());
        let mut parent: Vec<Option<(NodeId, ArcId, Dir)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[source - 1] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for (arc, dir, v) in self.edges_from(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    parent[v - 1] = Some((u, arc, dir));
                    if v == sink {
                        let mut path = Vec::new();
                        let mut node = sink;
                        while node != source {
                            let (prev, arc, dir) = parent[node - 1].unwrap();
                            path.push((arc, dir));
                            node = prev;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(v);
                }
            }
        }
        None
    }

    fn dfs_path(&self) -> Option<Vec<(ArcId, Dir)>> {
        let n = self.net.node_count();
        let (source, sink) = (self.net.source(), self.net.sink());
        let mut seen = vec![false; n];
        let mut path = Vec::new();
        seen[source - 1] = true;
        if self.dfs_from(source, sink, &mut seen, &mut path) {
            Some(path)
        } else {
            None
        }
    }

    fn dfs_from(
        &self,
        u: NodeId,
        sink: NodeId,
        seen: &mut [bool],
        path: &mut Vec<(ArcId, Dir)>,
    ) -> bool {
        if u == sink {
            return true;
        }
        for (arc, dir, v) in self.edges_from(u) {
            if !seen[v - 1] {
                seen[v - 1] = true;
                path.push((arc, dir));
                if self.dfs_from(v, sink, seen, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    fn run(&mut self, strategy: AugmentStrategy) -> State {
        let mut value: State = 0;
        loop {
            let path = match strategy {
                AugmentStrategy::ShortestPath => self.bfs_path(),
                AugmentStrategy::DepthFirst => self.dfs_path(),
            };
            let Some(path) = path else { return value };
            let bottleneck = path
                .iter()
                .map(|&(arc, dir)| self.residual(arc, dir))
                .min()
                .expect("augmenting path is non-empty");
            for &(arc, dir) in &path {
                self.push(arc, dir, bottleneck);
            }
            value += bottleneck;
        }
    }

    fn source_side(&self) -> NodeSet {
        let mut side = NodeSet::singleton(self.net.source());
        let mut queue = VecDeque::from([self.net.source()]);
        while let Some(u) = queue.pop_front() {
            for (_, _, v) in self.edges_from(u) {
                if !side.contains(v) {
                    side.insert(v);
                    queue.push_back(v);
                }
            }
        }
        side
    }

    fn sink_side(&self) -> NodeSet {
        // Reverse reachability: predecessors of `u` are tails of residual
        // forward edges into `u` and heads of residual backward edges out.
        let sink = self.net.sink();
        let mut side = NodeSet::singleton(sink);
        let mut queue = VecDeque::from([sink]);
        while let Some(u) = queue.pop_front() {
            let fwd_preds = self.inc[u - 1]
                .iter()
                .filter(|&&a| self.fwd[a - 1] > 0)
                .map(|&a| self.net.arcs()[a - 1].tail);
            let bwd_preds = self.out[u - 1]
                .iter()
                .filter(|&&a| self.bwd[a - 1] > 0)
                .map(|&a| self.net.arcs()[a - 1].head);
            for v in fwd_preds.chain(bwd_preds) {
                if !side.contains(v) {
                    side.insert(v);
                    queue.push_back(v);
                }
            }
        }
        side
    }
}

/// Computes a maximum flow for `X` with the default strategy.
///
/// Panics if `x` is not bound to `net` (wrong length).
pub fn analyze(net: &Network, x: &StateVector) -> FlowAnalysis {
    analyze_with(net, x, AugmentStrategy::ShortestPath)
}

pub fn analyze_with(net: &Network, x: &StateVector, strategy: AugmentStrategy) -> FlowAnalysis {
    net.bind(x).expect("state vector must be bound to the network");
    let mut engine = Engine::new(net, x);
    let value = engine.run(strategy);
    let source_side = engine.source_side();
    let sink_side = engine.sink_side();
    FlowAnalysis { value, flow: engine.bwd, source_side, sink_side }
}

/// True iff a source-to-sink path appears in the residual network once one
/// unit of forward residual is added to arc `j`; equivalently,
/// `F(X + o_j) > F(X)`.
///
/// `analysis` must be the result of [`analyze`] for `(net, x)`.
pub fn augmented_path_exists(
    net: &Network,
    x: &StateVector,
    analysis: &FlowAnalysis,
    j: ArcId,
) -> Result<bool, FlowError> {
    let arc = net.arc(j).expect("arc id must be valid");
    if x.get(j) >= arc.capacity {
        return Err(FlowError::ArcSaturated { arc: j });
    }
    let mut engine = Engine::new(net, x);
    engine.bwd.copy_from_slice(&analysis.flow);
    for (f, (xs, fl)) in engine.fwd.iter_mut().zip(x.states().iter().zip(&analysis.flow)) {
        *f = xs - fl;
    }
    engine.fwd[j - 1] += 1;
    Ok(engine.bfs_path().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::four_node;
    use alloc::vec;

    fn nodes(ids: &[usize]) -> NodeSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn analyze_matches_worked_example() {
        let (net, _) = four_node();
        let x22 = StateVector::new(vec![3, 1, 2, 2, 2, 2]);
        let a = analyze(&net, &x22);
        assert_eq!(a.value, 3);
        assert_eq!(a.source_side, nodes(&[1, 2, 3]));
        assert_eq!(a.sink_side, nodes(&[4]));

        let x41 = StateVector::new(vec![3, 2, 2, 0, 2, 0]);
        assert_eq!(analyze(&net, &x41).value, 2);

        let zero = analyze(&net, &StateVector::zeros(6));
        assert_eq!(zero.value, 0);
        assert_eq!(zero.source_side, nodes(&[1]));
        assert_eq!(zero.sink_side, nodes(&[4]));

        assert_eq!(analyze(&net, &net.capacity_vector()).value, 5);
    }

    #[test]
    fn strategies_agree_on_reach_sets() {
        let (net, _) = four_node();
        for x in [
            StateVector::new(vec![3, 1, 2, 2, 2, 2]),
            StateVector::new(vec![2, 2, 2, 0, 2, 1]),
            StateVector::new(vec![3, 2, 0, 2, 1, 3]),
            net.capacity_vector(),
        ] {
            let a = analyze_with(&net, &x, AugmentStrategy::ShortestPath);
            let b = analyze_with(&net, &x, AugmentStrategy::DepthFirst);
            assert_eq!(a.value, b.value);
            assert_eq!(a.source_side, b.source_side);
            assert_eq!(a.sink_side, b.sink_side);
        }
    }

    #[test]
    fn augmented_path_examples() {
        let (net, _) = four_node();

        let x43 = StateVector::new(vec![2, 2, 2, 0, 2, 1]);
        let a43 = analyze(&net, &x43);
        assert_eq!(a43.value, 3);
        assert_eq!(augmented_path_exists(&net, &x43, &a43, 1), Ok(false));

        let x31 = StateVector::new(vec![3, 2, 1, 2, 0, 3]);
        let a31 = analyze(&net, &x31);
        assert_eq!(augmented_path_exists(&net, &x31, &a31, 3), Ok(false));

        let x32 = StateVector::new(vec![3, 2, 0, 2, 1, 3]);
        let a32 = analyze(&net, &x32);
        assert_eq!(augmented_path_exists(&net, &x32, &a32, 3), Ok(true));
        assert_eq!(analyze(&net, &x32.bump(3)).value, 4);

        // Saturated arc: precondition violation.
        assert_eq!(
            augmented_path_exists(&net, &x32, &a32, 1),
            Err(FlowError::ArcSaturated { arc: 1 })
        );
    }

    #[test]
    fn flow_conservation_holds() {
        let (net, _) = four_node();
        let x = StateVector::new(vec![3, 1, 2, 2, 2, 2]);
        let a = analyze(&net, &x);
        let mut net_out = vec![0i64; net.node_count()];
        for arc in net.arcs() {
            let f = a.flow[arc.id - 1];
            assert!(f <= x.get(arc.id));
            net_out[arc.tail - 1] += f as i64;
            net_out[arc.head - 1] -= f as i64;
        }
        assert_eq!(net_out[0], a.value as i64);
        assert_eq!(net_out[net.node_count() - 1], -(a.value as i64));
        for &b in &net_out[1..net.node_count() - 1] {
            assert_eq!(b, 0);
        }
        // Max flow: source and sink sides are disjoint.
        assert!(a.source_side.intersection(&a.sink_side).is_empty());
    }

    #[test]
    fn residual_view_is_consistent() {
        let (net, _) = four_node();
        let x = StateVector::new(vec![3, 1, 2, 2, 2, 2]);
        let a = analyze(&net, &x);
        let r = ResidualView::new(&x, &a);
        for k in 0..x.len() {
            assert_eq!(r.forward[k] + r.backward[k], x.states()[k]);
        }
    }
}
