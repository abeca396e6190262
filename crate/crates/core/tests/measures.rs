mod common;

use common::*;
use posrev::{hamming_distance, ratio, Distribution, Event, HammingScale, Rational, Universe};
use num_traits::Signed;
use proptest::prelude::*;

fn level() -> impl Strategy<Value = Rational> {
    (0i64..=4).prop_map(|i| ratio(i, 4))
}

/// A normalized distribution over `n` labelled worlds.
fn distribution(n: usize) -> impl Strategy<Value = Distribution> {
    (prop::collection::vec(level(), n), 0..n).prop_map(move |(mut values, top)| {
        values[top] = ratio(1, 1);
        let u = Universe::from_labels((1..=n).map(|i| format!("w{i}"))).unwrap();
        Distribution::new(&u, values).unwrap()
    })
}

proptest! {
    #[test]
    fn maxitivity_on_all_event_pairs(pi in distribution(5)) {
        let evs = events(pi.universe());
        for a in &evs {
            for b in &evs {
                let union = pi.possibility(&a.union(b).unwrap()).unwrap();
                let best = pi.possibility(a).unwrap().max(pi.possibility(b).unwrap());
                prop_assert_eq!(union, best);
            }
        }
    }

    #[test]
    fn duality_and_consistency_of_belief(pi in distribution(4)) {
        for a in events(pi.universe()) {
            let n = pi.necessity(&a).unwrap();
            prop_assert_eq!(n.clone(), ratio(1, 1) - pi.possibility(&a.complement()).unwrap());
            prop_assert_eq!(n.min(pi.necessity(&a.complement()).unwrap()), ratio(0, 1));
        }
    }

    #[test]
    fn belief_set_is_closed_under_intersection(pi in distribution(4)) {
        let evs = events(pi.universe());
        for a in &evs {
            for b in &evs {
                if pi.believes(a).unwrap() && pi.believes(b).unwrap() {
                    prop_assert!(pi.believes(&a.intersection(b).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn believes_means_the_best_worlds_lie_inside(pi in distribution(4), mask in 0u64..16) {
        let a = Event::from_mask(pi.universe(), mask);
        let best = pi.maximal_worlds(&Event::full(pi.universe())).unwrap();
        prop_assert_eq!(pi.believes(&a).unwrap(), best.is_subset(&a).unwrap());
    }

    #[test]
    fn hamming_is_a_symmetric_sum(a in distribution(4), b in distribution(4)) {
        let b = Distribution::new(a.universe(), b.values().to_vec()).unwrap();
        let ab = hamming_distance(&a, &b, HammingScale::Raw).unwrap();
        prop_assert_eq!(ab.clone(), hamming_distance(&b, &a, HammingScale::Raw).unwrap());
        let direct: Rational = a.values().iter().zip(b.values()).map(|(x, y)| (x - y).abs()).sum();
        prop_assert_eq!(ab, direct);
        prop_assert_eq!(hamming_distance(&a, &a, HammingScale::LevelIndex).unwrap(), ratio(0, 1));
    }
}
