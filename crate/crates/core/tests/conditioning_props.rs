mod common;

use common::*;
use posrev::{
    condition, condition_min, contract, envelope, minimal_change_revisions, ratio, Distribution, Error, Event, RevisionMode,
};
use proptest::prelude::*;

fn distribution() -> impl Strategy<Value = Distribution> {
    (prop::collection::vec(0i64..=4, 4), 0usize..4).prop_map(|(mut values, top)| {
        values[top] = 4;
        Distribution::new(&labels4(), values.into_iter().map(|v| ratio(v, 4)).collect()).unwrap()
    })
}

fn mode() -> impl Strategy<Value = RevisionMode> {
    prop_oneof![Just(RevisionMode::Min), Just(RevisionMode::Product)]
}

fn event(pi: &Distribution, mask: u64) -> Event {
    Event::from_mask(pi.universe(), mask)
}

proptest! {
    #[test]
    fn cox_equation(pi in distribution(), a in 0u64..16, mode in mode()) {
        let a = event(&pi, a);
        let pa = pi.possibility(&a).unwrap();
        prop_assume!(pa > ratio(0, 1));
        let c = condition(&pi, &a, mode).unwrap();
        for b in events(pi.universe()) {
            let lhs = pi.possibility(&a.intersection(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, mode.combine(&c.possibility(&b).unwrap(), &pa));
        }
    }

    /// Min-conditioning is the greatest grid solution of the Cox equation
    /// that vanishes outside `A`.
    #[test]
    fn least_specificity(pi in distribution(), a in 1u64..16) {
        let a = event(&pi, a);
        prop_assume!(pi.possibility(&a).unwrap() > ratio(0, 1));
        let c = condition_min(&pi, &a).unwrap();
        let evs = events(pi.universe());
        for candidate in normalized_distributions(pi.universe(), &grid()) {
            let pa = pi.possibility(&a).unwrap();
            let solves = evs.iter().all(|b| {
                pi.possibility(&a.intersection(b).unwrap()).unwrap()
                    == candidate.possibility(b).unwrap().min(pa.clone())
            }) && a.complement().iter().all(|w| *candidate.value(w) == ratio(0, 1));
            if solves {
                prop_assert!(candidate.is_below(&c).unwrap());
            }
        }
    }

    #[test]
    fn certainty_is_a_fixpoint(pi in distribution(), a in 0u64..16, mode in mode()) {
        // add every world of positive possibility, so that N(A) = 1
        let support = (0..4).filter(|&w| *pi.value(w) > ratio(0, 1)).fold(0u64, |m, w| m | 1 << w);
        let a = event(&pi, a | support);
        prop_assert_eq!(pi.necessity(&a).unwrap(), ratio(1, 1));
        prop_assert_eq!(condition(&pi, &a, mode).unwrap(), pi);
    }

    #[test]
    fn iterated_conditioning(pi in distribution(), a in 0u64..16, b in 0u64..16, mode in mode()) {
        let (a, b) = (event(&pi, a), event(&pi, b));
        let both = a.intersection(&b).unwrap();
        prop_assume!(pi.possibility(&both).unwrap() > ratio(0, 1));
        let twice = condition(&condition(&pi, &a, mode).unwrap(), &b, mode).unwrap();
        prop_assert_eq!(twice, condition(&pi, &both, mode).unwrap());
    }

    #[test]
    fn disjoint_iteration_is_undefined(pi in distribution(), a in 1u64..15, mode in mode()) {
        let a = event(&pi, a);
        prop_assume!(pi.possibility(&a).unwrap() > ratio(0, 1));
        let once = condition(&pi, &a, mode).unwrap();
        prop_assert!(matches!(
            condition(&once, &a.complement(), mode),
            Err(Error::ConditioningUndefined(_))
        ));
    }

    #[test]
    fn envelope_of_minimal_changes(pi in distribution(), a in 1u64..16) {
        let a = event(&pi, a);
        prop_assume!(pi.possibility(&a).unwrap() > ratio(0, 1));
        let family = minimal_change_revisions(&pi, &a).unwrap();
        prop_assert_eq!(family.len(), pi.maximal_worlds(&a).unwrap().len());
        for r in &family {
            prop_assert!(r.is_normalized());
            prop_assert!(r.believes(&a).unwrap());
        }
        prop_assert_eq!(envelope(&family).unwrap(), condition_min(&pi, &a).unwrap());
    }

    #[test]
    fn contraction_forgets(pi in distribution(), a in 0u64..15) {
        let a = event(&pi, a);
        let c = contract(&pi, &a).unwrap();
        prop_assert_eq!(c.necessity(&a).unwrap(), ratio(0, 1));
        prop_assert!(pi.is_below(&c).unwrap());
        for w in a.iter() {
            prop_assert_eq!(c.value(w), pi.value(w));
        }
        let raised: Vec<usize> = (0..4).filter(|&w| c.value(w) != pi.value(w)).collect();
        let best = pi.maximal_worlds(&a.complement()).unwrap();
        for w in raised {
            prop_assert!(best.contains(w));
        }
    }
}

#[test]
fn contraction_of_the_sure_event_is_refused() {
    let pi = Distribution::uniform(&labels4());
    assert_eq!(contract(&pi, &Event::full(pi.universe())), Err(Error::ContractSureEvent));
}
