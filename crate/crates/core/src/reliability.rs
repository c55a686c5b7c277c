//! Exact network reliability: the probability that the network carries at
//! least `d+1` units from source to sink.
//!
//! Two routes are provided. The d-MC route subtracts the probability of the
//! union of the d-MC lower sets, expanded by plain inclusion–exclusion (the
//! per-arc independence makes every intersection a product of per-arc cdf
//! values at componentwise minima). The state-space route enumerates every
//! state vector and sums the probability mass where the max flow stays at
//! or below `d`; it is exponential and serves as the oracle.

use crate::filters::DmcRecord;
use crate::flow::analyze;
use crate::net::{NetError, Network, State, StateDistribution, StateVector};
use alloc::vec::Vec;
use core::fmt;

/// Inclusion–exclusion is limited to this many vectors (2^K - 1 terms).
pub const MAX_UNION_VECTORS: usize = 25;
/// State-space enumeration is limited to this many vectors.
pub const MAX_STATE_SPACE: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum ReliabilityError {
    TooManyVectors { count: usize },
    StateSpaceTooLarge { states: u128 },
    Net(NetError),
}

impl fmt::Display for ReliabilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReliabilityError::TooManyVectors { count } => write!(
                f,
                "inclusion-exclusion limited to {MAX_UNION_VECTORS} vectors, got {count}"
            ),
            ReliabilityError::StateSpaceTooLarge { states } => write!(
                f,
                "state space of {states} vectors exceeds the {MAX_STATE_SPACE} limit"
            ),
            ReliabilityError::Net(e) => write!(f, "{e}"),
        }
    }
}

impl From<NetError> for ReliabilityError {
    fn from(e: NetError) -> Self {
        ReliabilityError::Net(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    InclusionExclusion,
    StateSpace,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::InclusionExclusion => "ie",
            Method::StateSpace => "brute",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityResult {
    /// Demand level: the result is the probability of carrying `d+1` units.
    pub d: State,
    /// `R_{d+1}`.
    pub r: f64,
    /// Probability of the union of lower sets (d-MC route) or of the
    /// low-flow states (state-space route); `r = 1 - union_prob`.
    pub union_prob: f64,
    /// Terms evaluated: subsets for inclusion–exclusion, states enumerated
    /// for the state-space route.
    pub term_count: u64,
    pub method: Method,
}

/// Probability that the network state is componentwise `<= x`; factorizes
/// over arcs by independence.
pub fn lower_set_prob(
    dist: &StateDistribution,
    x: &StateVector,
) -> Result<f64, ReliabilityError> {
    if x.len() != dist.arc_count() {
        return Err(NetError::LengthMismatch { expected: dist.arc_count(), found: x.len() }.into());
    }
    let mut p = 1.0;
    for arc in 1..=dist.arc_count() {
        p *= dist.cdf(arc, x.get(arc))?;
    }
    Ok(p)
}

/// Probability of the union of the lower sets of `vectors`, by plain
/// inclusion–exclusion over all non-empty subsets.
pub fn union_prob_ie(
    dist: &StateDistribution,
    vectors: &[StateVector],
) -> Result<f64, ReliabilityError> {
    if vectors.len() > MAX_UNION_VECTORS {
        return Err(ReliabilityError::TooManyVectors { count: vectors.len() });
    }
    for v in vectors {
        if v.len() != dist.arc_count() {
            return Err(
                NetError::LengthMismatch { expected: dist.arc_count(), found: v.len() }.into()
            );
        }
    }
    let mut total = 0.0;
    subset_terms(dist, vectors, 0, None, 0, &mut total);
    Ok(total)
}

/// Walks the subset tree keeping the running componentwise minimum; each
/// leaf with a non-empty subset contributes a signed product of cdf values.
fn subset_terms(
    dist: &StateDistribution,
    vectors: &[StateVector],
    idx: usize,
    mins: Option<&[State]>,
    picked: usize,
    total: &mut f64,
) {
    if idx == vectors.len() {
        if let (Some(mins), true) = (mins, picked > 0) {
            let mut p = 1.0;
            for (k, &s) in mins.iter().enumerate() {
                p *= dist.cdf_unchecked(k + 1, s);
            }
            *total += if picked % 2 == 1 { p } else { -p };
        }
        return;
    }
    subset_terms(dist, vectors, idx + 1, mins, picked, total);
    let next: Vec<State> = match mins {
        None => vectors[idx].states().to_vec(),
        Some(m) => m
            .iter()
            .zip(vectors[idx].states())
            .map(|(&a, &b)| a.min(b))
            .collect(),
    };
    subset_terms(dist, vectors, idx + 1, Some(&next), picked + 1, total);
}

/// `R_{d+1}` from a complete d-MC set via inclusion–exclusion.
pub fn reliability_from_dmcs(
    dist: &StateDistribution,
    dmcs: &[DmcRecord],
    d: State,
) -> Result<ReliabilityResult, ReliabilityError> {
    let vectors: Vec<StateVector> = dmcs.iter().map(|r| r.vector.clone()).collect();
    let union_prob = union_prob_ie(dist, &vectors)?;
    Ok(ReliabilityResult {
        d,
        r: 1.0 - union_prob,
        union_prob,
        term_count: (1u64 << vectors.len()) - 1,
        method: Method::InclusionExclusion,
    })
}

/// `R_{d+1}` by enumerating the full state space and summing the mass of
/// states whose max flow is at most `d`.
pub fn brute_force_reliability(
    net: &Network,
    dist: &StateDistribution,
    d: State,
) -> Result<ReliabilityResult, ReliabilityError> {
    let states: u128 = net
        .arcs()
        .iter()
        .map(|a| a.capacity as u128 + 1)
        .product();
    if states > MAX_STATE_SPACE {
        return Err(ReliabilityError::StateSpaceTooLarge { states });
    }
    let caps = net.capacity_vector();
    let mut x = StateVector::zeros(net.arc_count());
    let mut low_mass = 0.0;
    let mut term_count: u64 = 0;
    loop {
        term_count += 1;
        if analyze(net, &x).value <= d {
            let mut mass = 1.0;
            for arc in 1..=net.arc_count() {
                mass *= dist.mass(arc, x.get(arc))?;
            }
            low_mass += mass;
        }
        // Odometer step over 0..=W per coordinate.
        let mut k = 1;
        loop {
            if k > net.arc_count() {
                return Ok(ReliabilityResult {
                    d,
                    r: 1.0 - low_mass,
                    union_prob: low_mass,
                    term_count,
                    method: Method::StateSpace,
                });
            }
            if x.get(k) < caps.get(k) {
                x.set(k, x.get(k) + 1);
                break;
            }
            x.set(k, 0);
            k += 1;
        }
    }
}
