//! The three stage-3 filters that turn d-MC candidates into the
//! duplicate-free set of real d-MCs.
//!
//! * `dmcv` — the residual-network filter: a candidate is kept only by the
//!   cut whose MCV equals the candidate's source reach set `S(X)` (which
//!   removes duplicates for free), then accepted outright when
//!   `S(X) ∪ T(X)` covers every node, or accepted after a scan showing no
//!   unsaturated arc leads from `S(X)` into stranded territory.
//! * `unsat` — the unsaturated-arc test: bump every unsaturated arc and
//!   demand the flow rises, then drop duplicates by checking whether an
//!   earlier cut also generates the vector.
//! * `c2c` — candidate-to-candidate comparison: keep the maximal vectors
//!   among all candidates at flow `d`.
//!
//! All three produce the same vector set; `cross_check` asserts it.

use crate::candidates::enumerate_candidates;
use crate::cuts::{enumerate_mcs, CutError, MinCut};
use crate::flow::{analyze, augmented_path_exists, FlowAnalysis};
use crate::net::{Network, State, StateVector};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterError {
    /// Demand must stay below the maximum flow of the fully loaded network.
    DemandTooHigh { d: State, max_flow: State },
}

impl fmt::Display for FilterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterError::DemandTooHigh { d, max_flow } => {
                write!(f, "demand {d} must be below the network max flow {max_flow}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dmcv,
    Unsat,
    C2c,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Dmcv, Algorithm::Unsat, Algorithm::C2c];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Dmcv => "dmcv",
            Algorithm::Unsat => "unsat",
            Algorithm::C2c => "c2c",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which rule admitted a vector into the d-MC set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcceptedVia {
    /// `|S(X) ∪ T(X)| = n`.
    FullCover,
    /// Boundary scan found no unsaturated arc into stranded nodes.
    BoundaryScan,
    /// Every unsaturated bump raised the flow.
    UnsaturatedTest,
    /// Not strictly below any other surviving candidate.
    Maximality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmcRecord {
    pub vector: StateVector,
    /// Canonical index of the cut credited with the vector.
    pub generator_mc: usize,
    pub accepted_via: AcceptedVia,
}

/// Per-rule tallies; every candidate offered lands in exactly one bucket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FilterCounters {
    pub candidates_seen: usize,
    pub rejected_low_flow: usize,
    /// dmcv: source reach set differs from the generating cut's MCV.
    pub rejected_noncanonical: usize,
    /// dmcv: an unsaturated arc leads into stranded territory.
    pub rejected_stranded_arc: usize,
    /// unsat: some unsaturated bump left the flow at `d`.
    pub rejected_unsaturated_test: usize,
    /// c2c: strictly below another candidate.
    pub rejected_dominated: usize,
    /// duplicate of a vector kept elsewhere.
    pub rejected_duplicate: usize,
    pub accepted_full_cover: usize,
    pub accepted_after_scan: usize,
    /// unsat / c2c accepts.
    pub accepted_plain: usize,
}

impl FilterCounters {
    pub fn accepted_total(&self) -> usize {
        self.accepted_full_cover + self.accepted_after_scan + self.accepted_plain
    }

    pub fn rejected_total(&self) -> usize {
        self.rejected_low_flow
            + self.rejected_noncanonical
            + self.rejected_stranded_arc
            + self.rejected_unsaturated_test
            + self.rejected_dominated
            + self.rejected_duplicate
    }

    /// The buckets partition the candidates seen.
    pub fn is_partition(&self) -> bool {
        self.candidates_seen == self.accepted_total() + self.rejected_total()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterOutcome {
    pub algorithm: Algorithm,
    pub dmcs: Vec<DmcRecord>,
    pub counters: FilterCounters,
}

impl FilterOutcome {
    /// The accepted vectors as a sorted, duplicate-free set.
    pub fn vector_set(&self) -> BTreeSet<StateVector> {
        self.dmcs.iter().map(|r| r.vector.clone()).collect()
    }
}

/// True iff the candidate's source reach set equals the MCV of the cut
/// that generated it; candidates failing this are duplicates or not d-MCs.
pub fn matches_generator_mcv(analysis: &FlowAnalysis, mc: &MinCut) -> bool {
    analysis.source_side == mc.mcv
}

/// True iff `S(X) ∪ T(X)` covers all nodes, which certifies a d-MC.
pub fn covers_all_nodes(analysis: &FlowAnalysis, node_count: usize) -> bool {
    analysis.source_side.union(&analysis.sink_side).len() == node_count
}

/// True iff some unsaturated arc leaves the source side into a node outside
/// `S(X) ∪ T(X)`, or leaves such a node into the sink side. Bumping that
/// arc cannot raise the flow, so the candidate is not a d-MC.
pub fn has_stranded_unsaturated_arc(
    net: &Network,
    x: &StateVector,
    analysis: &FlowAnalysis,
) -> bool {
    let covered = analysis.source_side.union(&analysis.sink_side);
    net.arcs().iter().any(|arc| {
        x.get(arc.id) < arc.capacity
            && ((analysis.source_side.contains(arc.tail) && !covered.contains(arc.head))
                || (!covered.contains(arc.tail) && analysis.sink_side.contains(arc.head)))
    })
}

fn check_demand(net: &Network, d: State) -> Result<(), FilterError> {
    let max_flow = analyze(net, &net.capacity_vector()).value;
    if d >= max_flow {
        return Err(FilterError::DemandTooHigh { d, max_flow });
    }
    Ok(())
}

/// True iff `x` is a candidate of `mc`: off-cut coordinates at capacity and
/// the on-cut coordinates summing to `d`.
fn generated_by(net: &Network, mc: &MinCut, x: &StateVector, d: State) -> bool {
    let mut on_cut = alloc::vec![false; net.arc_count() + 1];
    for &a in &mc.arcs {
        on_cut[a] = true;
    }
    let off_cut_full = net
        .arcs()
        .iter()
        .all(|arc| on_cut[arc.id] || x.get(arc.id) == arc.capacity);
    off_cut_full && mc.capacity_under(x) == d
}

/// Incremental driver for the residual-network filter. Candidates must be
/// offered in canonical order: cuts ascending, vectors in generation order.
pub struct DmcvRun<'a> {
    net: &'a Network,
    d: State,
    records: Vec<DmcRecord>,
    counters: FilterCounters,
}

impl<'a> DmcvRun<'a> {
    pub fn new(net: &'a Network, d: State) -> Result<Self, FilterError> {
        check_demand(net, d)?;
        Ok(DmcvRun { net, d, records: Vec::new(), counters: FilterCounters::default() })
    }

    pub fn offer(&mut self, mc: &MinCut, vector: StateVector) {
        self.counters.candidates_seen += 1;
        let analysis = analyze(self.net, &vector);
        debug_assert!(analysis.value <= self.d, "candidate flow cannot exceed demand");
        if analysis.value < self.d {
            self.counters.rejected_low_flow += 1;
            return;
        }
        if !matches_generator_mcv(&analysis, mc) {
            self.counters.rejected_noncanonical += 1;
            return;
        }
        // Past this point all unsaturated arcs lie on the generating cut.
        debug_assert!(self
            .net
            .unsaturated(&vector)
            .unwrap()
            .iter()
            .all(|a| mc.arcs.contains(a)));
        if covers_all_nodes(&analysis, self.net.node_count()) {
            self.counters.accepted_full_cover += 1;
            self.records.push(DmcRecord {
                vector,
                generator_mc: mc.index,
                accepted_via: AcceptedVia::FullCover,
            });
        } else if has_stranded_unsaturated_arc(self.net, &vector, &analysis) {
            self.counters.rejected_stranded_arc += 1;
        } else {
            self.counters.accepted_after_scan += 1;
            self.records.push(DmcRecord {
                vector,
                generator_mc: mc.index,
                accepted_via: AcceptedVia::BoundaryScan,
            });
        }
    }

    pub fn finish(self) -> FilterOutcome {
        FilterOutcome { algorithm: Algorithm::Dmcv, dmcs: self.records, counters: self.counters }
    }
}

/// Incremental driver for the unsaturated-arc test with cut-comparison
/// duplicate removal.
pub struct UnsatRun<'a> {
    net: &'a Network,
    d: State,
    prior: Vec<&'a MinCut>,
    current: Option<&'a MinCut>,
    records: Vec<DmcRecord>,
    counters: FilterCounters,
}

impl<'a> UnsatRun<'a> {
    pub fn new(net: &'a Network, d: State) -> Result<Self, FilterError> {
        check_demand(net, d)?;
        Ok(UnsatRun {
            net,
            d,
            prior: Vec::new(),
            current: None,
            records: Vec::new(),
            counters: FilterCounters::default(),
        })
    }

    pub fn offer(&mut self, mc: &'a MinCut, vector: StateVector) {
        if self.current.map(|c| c.index) != Some(mc.index) {
            if let Some(done) = self.current.take() {
                self.prior.push(done);
            }
            self.current = Some(mc);
        }
        self.counters.candidates_seen += 1;
        let analysis = analyze(self.net, &vector);
        if analysis.value < self.d {
            self.counters.rejected_low_flow += 1;
            return;
        }
        for arc in self.net.arcs() {
            if vector.get(arc.id) < arc.capacity {
                let raised = augmented_path_exists(self.net, &vector, &analysis, arc.id)
                    .expect("arc is unsaturated");
                if !raised {
                    self.counters.rejected_unsaturated_test += 1;
                    return;
                }
            }
        }
        // Real d-MC; drop it if an earlier cut already generates it.
        for earlier in &self.prior {
            if generated_by(self.net, earlier, &vector, self.d) {
                self.counters.rejected_duplicate += 1;
                return;
            }
        }
        self.counters.accepted_plain += 1;
        self.records.push(DmcRecord {
            vector,
            generator_mc: mc.index,
            accepted_via: AcceptedVia::UnsaturatedTest,
        });
    }

    pub fn finish(self) -> FilterOutcome {
        FilterOutcome { algorithm: Algorithm::Unsat, dmcs: self.records, counters: self.counters }
    }
}

/// Incremental driver for candidate-to-candidate comparison. Survivors are
/// materialized; the pairwise sweep happens in [`C2cRun::finish`].
pub struct C2cRun<'a> {
    net: &'a Network,
    d: State,
    kept: Vec<(StateVector, usize)>,
    counters: FilterCounters,
}

impl<'a> C2cRun<'a> {
    pub fn new(net: &'a Network, d: State) -> Result<Self, FilterError> {
        check_demand(net, d)?;
        Ok(C2cRun { net, d, kept: Vec::new(), counters: FilterCounters::default() })
    }

    pub fn offer(&mut self, mc: &MinCut, vector: StateVector) {
        self.counters.candidates_seen += 1;
        let analysis = analyze(self.net, &vector);
        if analysis.value < self.d {
            self.counters.rejected_low_flow += 1;
            return;
        }
        self.kept.push((vector, mc.index));
    }

    pub fn finish(mut self) -> FilterOutcome {
        let mut records = Vec::new();
        for i in 0..self.kept.len() {
            let dominated = self.kept.iter().any(|(other, _)| {
                self.kept[i].0.strictly_below(other).expect("equal lengths")
            });
            if dominated {
                self.counters.rejected_dominated += 1;
                continue;
            }
            let duplicate = self.kept[..i].iter().any(|(other, _)| *other == self.kept[i].0);
            if duplicate {
                self.counters.rejected_duplicate += 1;
                continue;
            }
            self.counters.accepted_plain += 1;
            records.push(DmcRecord {
                vector: self.kept[i].0.clone(),
                generator_mc: self.kept[i].1,
                accepted_via: AcceptedVia::Maximality,
            });
        }
        FilterOutcome { algorithm: Algorithm::C2c, dmcs: records, counters: self.counters }
    }
}

fn drive<'a, R>(
    net: &'a Network,
    mcs: &'a [MinCut],
    d: State,
    mut run: R,
    mut offer: impl FnMut(&mut R, &'a MinCut, StateVector),
    finish: impl FnOnce(R) -> FilterOutcome,
) -> FilterOutcome {
    for mc in mcs {
        for candidate in enumerate_candidates(net, mc, d) {
            offer(&mut run, mc, candidate.vector);
        }
    }
    finish(run)
}

/// Runs the residual-network filter over all candidates of `mcs`.
pub fn verify_dmcv(
    net: &Network,
    mcs: &[MinCut],
    d: State,
) -> Result<FilterOutcome, FilterError> {
    let run = DmcvRun::new(net, d)?;
    Ok(drive(net, mcs, d, run, DmcvRun::offer, DmcvRun::finish))
}

/// Runs the unsaturated-arc test with duplicate removal.
pub fn verify_unsat(
    net: &Network,
    mcs: &[MinCut],
    d: State,
) -> Result<FilterOutcome, FilterError> {
    let run = UnsatRun::new(net, d)?;
    Ok(drive(net, mcs, d, run, UnsatRun::offer, UnsatRun::finish))
}

/// Runs the candidate-to-candidate comparison.
pub fn verify_c2c(net: &Network, mcs: &[MinCut], d: State) -> Result<FilterOutcome, FilterError> {
    let run = C2cRun::new(net, d)?;
    Ok(drive(net, mcs, d, run, C2cRun::offer, C2cRun::finish))
}

#[derive(Debug, Clone, PartialEq)]
pub enum CrossCheckError {
    Cut(CutError),
    Filter(FilterError),
    /// The algorithms disagree; each entry lists one algorithm's vectors.
    Disagreement { sets: Vec<(Algorithm, Vec<StateVector>)> },
}

impl fmt::Display for CrossCheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossCheckError::Cut(e) => write!(f, "{e}"),
            CrossCheckError::Filter(e) => write!(f, "{e}"),
            CrossCheckError::Disagreement { sets } => {
                write!(f, "algorithms disagree on the d-MC set:")?;
                for (alg, vectors) in sets {
                    write!(f, " {alg}={{")?;
                    for (i, v) in vectors.iter().enumerate() {
                        if i > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{v}")?;
                    }
                    write!(f, "}}")?;
                }
                Ok(())
            }
        }
    }
}

impl From<CutError> for CrossCheckError {
    fn from(e: CutError) -> Self {
        CrossCheckError::Cut(e)
    }
}

impl From<FilterError> for CrossCheckError {
    fn from(e: FilterError) -> Self {
        CrossCheckError::Filter(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub mcs: Vec<MinCut>,
    pub outcomes: Vec<FilterOutcome>,
    /// The agreed d-MC set, sorted.
    pub vectors: Vec<StateVector>,
}

/// Runs all three filters and insists their vector sets agree.
pub fn cross_check(net: &Network, d: State) -> Result<CrossCheck, CrossCheckError> {
    let mcs = enumerate_mcs(net)?;
    let outcomes = alloc::vec![
        verify_dmcv(net, &mcs, d)?,
        verify_unsat(net, &mcs, d)?,
        verify_c2c(net, &mcs, d)?,
    ];
    let sets: Vec<BTreeSet<StateVector>> = outcomes.iter().map(|o| o.vector_set()).collect();
    if sets.iter().any(|s| *s != sets[0]) {
        return Err(CrossCheckError::Disagreement {
            sets: outcomes
                .iter()
                .zip(&sets)
                .map(|(o, s)| (o.algorithm, s.iter().cloned().collect()))
                .collect(),
        });
    }
    let vectors = sets[0].iter().cloned().collect();
    Ok(CrossCheck { mcs, outcomes, vectors })
}
