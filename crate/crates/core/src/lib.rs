//! Exact reliability analysis of multistate flow networks through d-minimal
//! cuts (d-MCs).
//!
//! The pipeline has four stages: enumerate the minimal cuts of the network
//! ([`cuts`]), expand each cut into its d-MC candidates ([`candidates`]),
//! filter the candidates down to the duplicate-free set of real d-MCs
//! ([`filters`]), and compute the reliability `R_{d+1}` from that set
//! ([`reliability`]). Three interchangeable filters are provided — the
//! residual-network (d-MCV) method, the unsaturated-arc test, and plain
//! candidate-to-candidate comparison — and can be cross-checked against
//! each other.
//!
//! The crate is `no_std` (with `alloc`) and all types are immutable after
//! construction, so values can be shared freely across threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod candidates;
pub mod cuts;
pub mod filters;
pub mod flow;
pub mod net;
pub mod reliability;
pub mod samples;

pub use candidates::{collect_candidate_set, count_candidates, enumerate_candidates, Candidate};
pub use cuts::{boundary, enumerate_mcs, is_mcv, mcv_of, MinCut};
pub use filters::{
    cross_check, verify_c2c, verify_dmcv, verify_unsat, Algorithm, DmcRecord, FilterOutcome,
};
pub use flow::{analyze, analyze_with, augmented_path_exists, AugmentStrategy, FlowAnalysis};
pub use net::{Arc, ArcId, Network, NodeId, NodeSet, State, StateDistribution, StateVector};
pub use reliability::{
    brute_force_reliability, lower_set_prob, reliability_from_dmcs, union_prob_ie, Method,
    ReliabilityResult,
};
