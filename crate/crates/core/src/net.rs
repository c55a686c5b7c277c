//! Network model: directed multistate flow networks, per-arc state vectors
//! and state probability distributions.

use alloc::vec::Vec;
use core::fmt;

/// 1-based node identifier. Node 1 is always the source, node `n` the sink.
pub type NodeId = usize;
/// 1-based arc identifier; arcs are contiguous `1..=m`.
pub type ArcId = usize;
/// Integer arc state (current or maximal capacity).
pub type State = u64;

/// Largest supported node count (node sets are 128-bit masks).
pub const MAX_NODES: usize = 128;

#[derive(Debug, Clone, PartialEq)]
pub enum NetError {
    /// Node count is zero or the network has no distinct sink.
    NodeCountTooSmall { n: usize },
    NodeCountTooLarge { n: usize },
    /// Arc ids must be exactly 1..=m in order.
    ArcIdNotContiguous { expected: ArcId, found: ArcId },
    EndpointOutOfRange { arc: ArcId, node: NodeId },
    SelfLoop { arc: ArcId },
    LengthMismatch { expected: usize, found: usize },
    UnknownArc { arc: ArcId },
    NodeOutOfRange { node: NodeId },
    /// Distribution row has the wrong number of states for its arc.
    StateExceedsCapacity { arc: ArcId, state: State, capacity: State },
    ProbabilityOutOfRange { arc: ArcId, state: State, value: f64 },
    MassNotNormalized { arc: ArcId, sum: f64 },
}

impl fmt::Display for NetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetError::NodeCountTooSmall { n } => {
                write!(f, "node count {n} is too small (need source 1 and sink n distinct)")
            }
            NetError::NodeCountTooLarge { n } => {
                write!(f, "node count {n} exceeds the supported maximum {MAX_NODES}")
            }
            NetError::ArcIdNotContiguous { expected, found } => {
                write!(f, "arc ids must be contiguous: expected {expected}, found {found}")
            }
            NetError::EndpointOutOfRange { arc, node } => {
                write!(f, "arc {arc} references node {node} outside the network")
            }
            NetError::SelfLoop { arc } => write!(f, "arc {arc} is a self-loop"),
            NetError::LengthMismatch { expected, found } => {
                write!(f, "state vector length {found} does not match arc count {expected}")
            }
            NetError::UnknownArc { arc } => write!(f, "unknown arc id {arc}"),
            NetError::NodeOutOfRange { node } => write!(f, "node {node} outside the network"),
            NetError::StateExceedsCapacity { arc, state, capacity } => {
                write!(f, "arc {arc}: state {state} exceeds capacity {capacity}")
            }
            NetError::ProbabilityOutOfRange { arc, state, value } => {
                write!(f, "arc {arc} state {state}: probability {value} outside [0, 1]")
            }
            NetError::MassNotNormalized { arc, sum } => {
                write!(f, "arc {arc}: probabilities sum to {sum}, expected 1")
            }
        }
    }
}

/// A directed arc `tail -> head` with integer maximal capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: ArcId,
    pub tail: NodeId,
    pub head: NodeId,
    pub capacity: State,
}

/// A connected multistate flow network with fixed source 1 and sink `n`.
///
/// Parallel arcs (same endpoints, distinct ids) are allowed; self-loops are
/// not. Arcs are stored in id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    node_count: usize,
    arcs: Vec<Arc>,
}

impl Network {
    pub fn new(node_count: usize, arcs: Vec<Arc>) -> Result<Self, NetError> {
        if node_count < 2 {
            return Err(NetError::NodeCountTooSmall { n: node_count });
        }
        if node_count > MAX_NODES {
            return Err(NetError::NodeCountTooLarge { n: node_count });
        }
        for (i, arc) in arcs.iter().enumerate() {
            if arc.id != i + 1 {
                return Err(NetError::ArcIdNotContiguous { expected: i + 1, found: arc.id });
            }
            for node in [arc.tail, arc.head] {
                if node == 0 || node > node_count {
                    return Err(NetError::EndpointOutOfRange { arc: arc.id, node });
                }
            }
            if arc.tail == arc.head {
                return Err(NetError::SelfLoop { arc: arc.id });
            }
        }
        Ok(Network { node_count, arcs })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn source(&self) -> NodeId {
        1
    }

    pub fn sink(&self) -> NodeId {
        self.node_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Result<&Arc, NetError> {
        if id == 0 || id > self.arcs.len() {
            return Err(NetError::UnknownArc { arc: id });
        }
        Ok(&self.arcs[id - 1])
    }

    pub fn capacity(&self, id: ArcId) -> Result<State, NetError> {
        self.arc(id).map(|a| a.capacity)
    }

    /// The maximal state vector `W`.
    pub fn capacity_vector(&self) -> StateVector {
        StateVector::new(self.arcs.iter().map(|a| a.capacity).collect())
    }

    /// Checks that `x` has one coordinate per arc.
    pub fn bind(&self, x: &StateVector) -> Result<(), NetError> {
        if x.len() != self.arcs.len() {
            return Err(NetError::LengthMismatch { expected: self.arcs.len(), found: x.len() });
        }
        Ok(())
    }

    /// Arcs whose current state is strictly below capacity, ascending by id.
    pub fn unsaturated(&self, x: &StateVector) -> Result<Vec<ArcId>, NetError> {
        self.bind(x)?;
        Ok(self
            .arcs
            .iter()
            .filter(|a| x.get(a.id) < a.capacity)
            .map(|a| a.id)
            .collect())
    }
}

/// Per-arc integer states; coordinate `k` is the state of arc `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVector(Vec<State>);

impl StateVector {
    pub fn new(states: Vec<State>) -> Self {
        StateVector(states)
    }

    pub fn zeros(len: usize) -> Self {
        StateVector(alloc::vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, arc: ArcId) -> State {
        self.0[arc - 1]
    }

    pub fn set(&mut self, arc: ArcId, value: State) {
        self.0[arc - 1] = value;
    }

    pub fn states(&self) -> &[State] {
        &self.0
    }

    /// Returns a copy with coordinate `arc` incremented by one. The result
    /// may exceed the network capacity; callers enforce bounds.
    pub fn bump(&self, arc: ArcId) -> StateVector {
        let mut out = self.clone();
        out.0[arc - 1] += 1;
        out
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &StateVector) -> Result<bool, NetError> {
        if self.len() != other.len() {
            return Err(NetError::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Strictly below: componentwise `<=` and not equal.
    pub fn strictly_below(&self, other: &StateVector) -> Result<bool, NetError> {
        Ok(self.leq(other)? && self != other)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A set of node ids backed by a 128-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NodeSet(u128);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn singleton(node: NodeId) -> Self {
        NodeSet(1u128 << (node - 1))
    }

    pub fn full(node_count: usize) -> Self {
        if node_count >= 128 {
            NodeSet(u128::MAX)
        } else {
            NodeSet((1u128 << node_count) - 1)
        }
    }

    pub fn contains(&self, node: NodeId) -> bool {
        node >= 1 && self.0 >> (node - 1) & 1 == 1
    }

    pub fn insert(&mut self, node: NodeId) {
        self.0 |= 1u128 << (node - 1);
    }

    pub fn remove(&mut self, node: NodeId) {
        self.0 &= !(1u128 << (node - 1));
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn complement(&self, node_count: usize) -> NodeSet {
        NodeSet(NodeSet::full(node_count).0 & !self.0)
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Node ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        (1..=128usize).filter(move |&node| self.contains(node))
    }

    /// Lexicographic order on the ascending node lists; a proper prefix
    /// sorts first. This is the tie-break used by the canonical MC order.
    pub fn lex_cmp(&self, other: &NodeSet) -> core::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return core::cmp::Ordering::Equal,
                (None, Some(_)) => return core::cmp::Ordering::Less,
                (Some(_), None) => return core::cmp::Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }
}

impl FromIterator<NodeId> for NodeSet {
    fn from_iter<T: IntoIterator<Item = NodeId>>(iter: T) -> Self {
        let mut set = NodeSet::EMPTY;
        for node in iter {
            set.insert(node);
        }
        set
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, node) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{node}")?;
        }
        write!(f, "}}")
    }
}

/// Per-arc probability mass over states `0..=W(a)`. States not listed when
/// building the distribution have probability 0.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDistribution {
    /// `masses[k-1][s]` = Pr(state of arc k is s); row length is `W(a_k)+1`.
    masses: Vec<Vec<f64>>,
}

/// Tolerance on each arc's total probability mass.
pub const MASS_TOLERANCE: f64 = 1e-9;

impl StateDistribution {
    /// Builds a distribution from sparse `(arc, state, probability)` entries.
    pub fn from_entries(
        net: &Network,
        entries: &[(ArcId, State, f64)],
    ) -> Result<Self, NetError> {
        let mut masses: Vec<Vec<f64>> = net
            .arcs()
            .iter()
            .map(|a| alloc::vec![0.0; a.capacity as usize + 1])
            .collect();
        for &(arc, state, p) in entries {
            let capacity = net.capacity(arc)?;
            if state > capacity {
                return Err(NetError::StateExceedsCapacity { arc, state, capacity });
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(NetError::ProbabilityOutOfRange { arc, state, value: p });
            }
            masses[arc - 1][state as usize] = p;
        }
        for (idx, row) in masses.iter().enumerate() {
            let sum: f64 = row.iter().sum();
            if !(sum - 1.0 <= MASS_TOLERANCE && 1.0 - sum <= MASS_TOLERANCE) {
                return Err(NetError::MassNotNormalized { arc: idx + 1, sum });
            }
        }
        Ok(StateDistribution { masses })
    }

    pub fn arc_count(&self) -> usize {
        self.masses.len()
    }

    /// Pr(state of `arc` = s); zero above capacity.
    pub fn mass(&self, arc: ArcId, s: State) -> Result<f64, NetError> {
        let row = self.row(arc)?;
        Ok(row.get(s as usize).copied().unwrap_or(0.0))
    }

    /// Pr(state of `arc` <= s). Equals 1 for `s >= W(a)`.
    pub fn cdf(&self, arc: ArcId, s: State) -> Result<f64, NetError> {
        let row = self.row(arc)?;
        if s as usize + 1 >= row.len() {
            return Ok(1.0);
        }
        Ok(row[..=s as usize].iter().sum())
    }

    pub fn row(&self, arc: ArcId) -> Result<&[f64], NetError> {
        if arc == 0 || arc > self.masses.len() {
            return Err(NetError::UnknownArc { arc });
        }
        Ok(&self.masses[arc - 1])
    }

    pub(crate) fn cdf_unchecked(&self, arc: ArcId, s: State) -> f64 {
        let row = &self.masses[arc - 1];
        if s as usize + 1 >= row.len() {
            1.0
        } else {
            row[..=s as usize].iter().sum()
        }
    }
}
