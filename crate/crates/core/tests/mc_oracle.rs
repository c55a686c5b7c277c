//! Cut enumeration against an exhaustive arc-subset oracle.

mod common;

use common::{brute_force_mcs, random_net, rng};
use dmc_core::{analyze, boundary, enumerate_mcs, mcv_of, StateVector};
use std::collections::BTreeSet;

#[test]
fn enumeration_matches_subset_oracle() {
    let mut rng = rng(0x5eed_0001);
    for _ in 0..60 {
        let net = random_net(&mut rng, 7, 10, 3);
        let enumerated: BTreeSet<Vec<usize>> = enumerate_mcs(&net)
            .unwrap()
            .into_iter()
            .map(|c| c.arcs)
            .collect();
        assert_eq!(enumerated, brute_force_mcs(&net), "net: {:?}", net);
    }
}

#[test]
fn mcvs_are_distinct_and_round_trip() {
    let mut rng = rng(0x5eed_0002);
    for _ in 0..40 {
        let net = random_net(&mut rng, 8, 12, 3);
        let mcs = enumerate_mcs(&net).unwrap();
        let mcvs: BTreeSet<Vec<usize>> =
            mcs.iter().map(|c| c.mcv.iter().collect()).collect();
        assert_eq!(mcvs.len(), mcs.len(), "distinct cuts must have distinct MCVs");
        for cut in &mcs {
            assert_eq!(boundary(&net, &cut.mcv).unwrap(), cut.arcs);
            assert_eq!(mcv_of(&net, &cut.arcs).unwrap(), cut.mcv);
        }
    }
}

#[test]
fn deleting_all_but_one_cut_arc_reconnects() {
    let mut rng = rng(0x5eed_0003);
    for _ in 0..40 {
        let net = random_net(&mut rng, 8, 12, 3);
        for cut in enumerate_mcs(&net).unwrap() {
            for &kept in &cut.arcs {
                // Zero capacity on every cut arc except `kept` must leave
                // positive flow: the remainder is not a cut.
                let mut x = StateVector::zeros(net.arc_count());
                for arc in net.arcs() {
                    let on_cut_removed = cut.arcs.contains(&arc.id) && arc.id != kept;
                    if !on_cut_removed {
                        x.set(arc.id, arc.capacity.max(1));
                    }
                }
                assert!(
                    analyze(&net, &x).value > 0,
                    "cut {:?} minus arc {kept} still disconnects {:?}",
                    cut.arcs,
                    net
                );
            }
        }
    }
}

#[test]
fn canonical_order_is_by_size_then_mcv() {
    let mut rng = rng(0x5eed_0004);
    for _ in 0..20 {
        let net = random_net(&mut rng, 8, 12, 3);
        let mcs = enumerate_mcs(&net).unwrap();
        for pair in mcs.windows(2) {
            let ord = pair[0]
                .arcs
                .len()
                .cmp(&pair[1].arcs.len())
                .then(pair[0].mcv.lex_cmp(&pair[1].mcv));
            assert_eq!(ord, std::cmp::Ordering::Less);
        }
        for (i, cut) in mcs.iter().enumerate() {
            assert_eq!(cut.index, i + 1);
        }
    }
}
