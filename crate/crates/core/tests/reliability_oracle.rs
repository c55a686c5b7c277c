//! Inclusion–exclusion reliability against state-space summation on random
//! networks with random distributions.

mod common;

use common::{random_net, rng};
use dmc_core::{
    brute_force_reliability, enumerate_mcs, reliability_from_dmcs, union_prob_ie, verify_dmcv,
    Network, StateDistribution, StateVector,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn random_distribution(rng: &mut ChaCha8Rng, net: &Network) -> StateDistribution {
    let mut entries = Vec::new();
    for arc in net.arcs() {
        let weights: Vec<u32> = (0..=arc.capacity).map(|_| rng.gen_range(1..=20)).collect();
        let total: u32 = weights.iter().sum();
        for (state, w) in weights.iter().enumerate() {
            entries.push((arc.id, state as u64, *w as f64 / total as f64));
        }
    }
    StateDistribution::from_entries(net, &entries).unwrap()
}

#[test]
fn ie_route_matches_state_space_route() {
    let mut rng = rng(0x9e11_0001);
    let mut checked = 0;
    for _ in 0..50 {
        let net = random_net(&mut rng, 6, 9, 3);
        let dist = random_distribution(&mut rng, &net);
        let mcs = enumerate_mcs(&net).unwrap();
        let max_flow = dmc_core::analyze(&net, &net.capacity_vector()).value;
        for d in 0..max_flow {
            let dmcs = verify_dmcv(&net, &mcs, d).unwrap();
            if dmcs.dmcs.len() > dmc_core::reliability::MAX_UNION_VECTORS {
                continue;
            }
            let ie = reliability_from_dmcs(&dist, &dmcs.dmcs, d).unwrap();
            let brute = brute_force_reliability(&net, &dist, d).unwrap();
            assert!(
                (ie.r - brute.r).abs() <= 1e-9,
                "d={d}: ie={} brute={} net: {:?}",
                ie.r,
                brute.r,
                net
            );
            assert!((ie.r - (1.0 - ie.union_prob)).abs() <= 1e-12);
            assert!((-1e-12..=1.0 + 1e-12).contains(&ie.r));
            checked += 1;
        }
    }
    assert!(checked >= 50, "too few feasible (net, d) pairs: {checked}");
}

#[test]
fn reliability_is_monotone_in_demand() {
    let mut rng = rng(0x9e11_0002);
    for _ in 0..25 {
        let net = random_net(&mut rng, 6, 9, 3);
        let dist = random_distribution(&mut rng, &net);
        let max_flow = dmc_core::analyze(&net, &net.capacity_vector()).value;
        let mut prev = 1.0 + 1e-12;
        for d in 0..=max_flow {
            let r = brute_force_reliability(&net, &dist, d).unwrap().r;
            assert!(r <= prev + 1e-12, "R_{} = {r} rose above {prev}", d + 1);
            prev = r;
        }
    }
}

#[test]
fn union_probability_ignores_order_and_duplicates() {
    let mut rng = rng(0x9e11_0003);
    for _ in 0..25 {
        let net = random_net(&mut rng, 6, 8, 3);
        let dist = random_distribution(&mut rng, &net);
        let mut vectors: Vec<StateVector> = (0..6)
            .map(|_| common::random_state(&mut rng, &net))
            .collect();
        let base = union_prob_ie(&dist, &vectors).unwrap();

        vectors.shuffle(&mut rng);
        let shuffled = union_prob_ie(&dist, &vectors).unwrap();
        assert!((base - shuffled).abs() <= 1e-12);

        let mut doubled = vectors.clone();
        doubled.extend(vectors.iter().cloned());
        let with_duplicates = union_prob_ie(&dist, &doubled).unwrap();
        assert!((base - with_duplicates).abs() <= 1e-9, "{base} vs {with_duplicates}");
    }
}
