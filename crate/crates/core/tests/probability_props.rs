mod common;

use common::*;
use posrev::{jeffrey, jeffrey_partition, ratio, unreliable_update, Event, ProbDistribution, Rational};
use proptest::prelude::*;

fn probability() -> impl Strategy<Value = ProbDistribution> {
    prop::collection::vec(1i64..=6, 4).prop_map(|raw| {
        let total: i64 = raw.iter().sum();
        ProbDistribution::new(&labels4(), raw.into_iter().map(|v| ratio(v, total)).collect()).unwrap()
    })
}

fn mass() -> impl Strategy<Value = Rational> {
    (0i64..=10).prop_map(|i| ratio(i, 10))
}

proptest! {
    #[test]
    fn jeffrey_sets_the_mass_and_keeps_ratios(p in probability(), mask in 1u64..15, alpha in mass()) {
        let a = Event::from_mask(p.universe(), mask);
        let r = jeffrey(&p, &a, &alpha).unwrap();
        prop_assert_eq!(r.probability(&a).unwrap(), alpha.clone());
        prop_assert_eq!(r.probability(&Event::full(p.universe())).unwrap(), ratio(1, 1));
        for x in 0..4 {
            for y in 0..4 {
                if a.contains(x) == a.contains(y) && *r.value(y) != ratio(0, 1) {
                    prop_assert_eq!(r.value(x) / r.value(y), p.value(x) / p.value(y));
                }
            }
        }
    }

    #[test]
    fn partition_masses_are_prescribed(p in probability(), assign in prop::collection::vec(0usize..3, 4), raw in prop::collection::vec(0i64..=5, 3)) {
        let u = p.universe();
        let cells: Vec<Event> = (0..3)
            .map(|c| Event::from_indices(u, (0..4).filter(|&w| assign[w] == c)).unwrap())
            .filter(|e| !e.is_empty())
            .collect();
        let raw = &raw[..cells.len()];
        let total: i64 = raw.iter().sum();
        prop_assume!(total > 0);
        let input: Vec<(Event, Rational)> = cells.into_iter().zip(raw).map(|(e, &m)| (e, ratio(m, total))).collect();
        let r = jeffrey_partition(&p, &input).unwrap();
        for (e, m) in &input {
            prop_assert_eq!(&r.probability(e).unwrap(), m);
        }
    }

    #[test]
    fn unreliable_update_overshoots_the_constraint(p in probability(), mask in 1u64..15, alpha in mass()) {
        let a = Event::from_mask(p.universe(), mask);
        let r = unreliable_update(&p, &a, &alpha).unwrap();
        let before = p.probability(&a).unwrap();
        let after = r.probability(&a).unwrap();
        prop_assert_eq!(&after, &(alpha.clone() + (ratio(1, 1) - alpha.clone()) * before));
        if alpha > ratio(0, 1) && alpha < ratio(1, 1) {
            prop_assert!(after > alpha);
        }
    }
}
