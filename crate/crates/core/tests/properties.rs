mod common;

use std::cmp::Ordering;

use proptest::prelude::*;

use rank2p3_core::bounds::{bar_alpha, zeta};
use rank2p3_core::tables::{builtin_fixtures, fill_by_duality};
use rank2p3_core::theorems::{forced_nonvanishing, split_decision, SplitEvidence, SplitOutcome};
use rank2p3_core::{qv_cmp, BundleProfile, ChernClasses, CohomologyRow, CohomologyTable, Error, FirstChern, StabilityClass};

fn first_chern() -> impl Strategy<Value = FirstChern> {
    prop_oneof![Just(FirstChern::Zero), Just(FirstChern::MinusOne)]
}

fn stability() -> impl Strategy<Value = StabilityClass> {
    prop_oneof![
        Just(StabilityClass::Stable),
        Just(StabilityClass::StrictlySemistable),
        Just(StabilityClass::NonStable),
        Just(StabilityClass::Unknown),
    ]
}

fn evidence() -> impl Strategy<Value = SplitEvidence> {
    let h = proptest::option::of(0u64..4);
    (h.clone(), h.clone(), h).prop_map(|(a, b, c)| SplitEvidence { h1_minus_one: a, h1_zero: b, h1_one: c })
}

/// `fine` with the entries selected by `hide` forgotten.
fn forget(fine: SplitEvidence, hide: (bool, bool, bool)) -> SplitEvidence {
    SplitEvidence {
        h1_minus_one: fine.h1_minus_one.filter(|_| !hide.0),
        h1_zero: fine.h1_zero.filter(|_| !hide.1),
        h1_one: fine.h1_one.filter(|_| !hide.2),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn comparison_matches_float(r in 0i64..=1_000_000, p in -3_000i64..=3_000, q in 1i64..=100, num in -100_000i64..=100_000, den in 1i64..=1_000) {
        let exact = qv_cmp(&common::qv(r, p, q), &common::rational(num, den));
        if let Some(o) = common::trusted_order(common::eval_qv(r, p, q), common::eval_rational(num, den)) {
            prop_assert_eq!(o, exact);
        }
    }

    #[test]
    fn comparison_is_antisymmetric_between_values(a in (0i64..10_000, -100i64..100, 1i64..20), b in (0i64..10_000, -100i64..100, 1i64..20)) {
        let (x, y) = (common::qv(a.0, a.1, a.2), common::qv(b.0, b.1, b.2));
        prop_assert_eq!(x.cmp_value(&y), y.cmp_value(&x).reverse());
        if let Some(o) = common::trusted_order(common::eval_qv(a.0, a.1, a.2), common::eval_qv(b.0, b.1, b.2)) {
            prop_assert_eq!(o, x.cmp_value(&y));
        }
    }

    #[test]
    fn floor_brackets(r in 0i64..=1_000_000, p in -3_000i64..=3_000, q in 1i64..=100) {
        let v = common::qv(r, p, q);
        prop_assert!(common::floor_brackets(&v));
        prop_assert!(common::floor_matches_float(&v, common::eval_qv(r, p, q)));
    }

    #[test]
    fn split_decision_is_monotone(c1 in first_chern(), c2 in proptest::option::of(-5i64..10), st in stability(), fine in evidence(), hide in any::<(bool, bool, bool)>()) {
        let coarse = forget(fine, hide);
        let before = split_decision(c1, c2, st, coarse);
        let after = split_decision(c1, c2, st, fine);
        match (before.outcome, after.outcome) {
            (SplitOutcome::Split, SplitOutcome::NonSplit) | (SplitOutcome::NonSplit, SplitOutcome::Split) => {
                prop_assert!(false, "{:?} -> {:?}", before, after);
            }
            // more data may only expose a contradiction
            (SplitOutcome::Split | SplitOutcome::NonSplit, SplitOutcome::Undetermined) => prop_assert!(after.trace.conflict),
            _ => {}
        }
    }

    #[test]
    fn forced_range_is_contiguous_from_minus_one(c1 in first_chern(), c2 in -200i64..2_000, alpha in proptest::option::of(-40i64..40), gamma_gap in proptest::option::of(0i64..20)) {
        let gamma = alpha.zip(gamma_gap).map(|(a, g)| a + g);
        let chern = ChernClasses::normalized(c1, c2);
        let profile = BundleProfile::new(chern, alpha, gamma).unwrap();
        match forced_nonvanishing(&profile) {
            Ok(report) => {
                let twists: Vec<_> = report.forced().iter().map(|f| f.twist).collect();
                prop_assert_eq!(twists.first().copied(), Some(-1));
                prop_assert!(twists.windows(2).all(|w| w[1] == w[0] + 1));
                prop_assert!(report.forced().iter().all(|f| !f.clauses.is_empty()));
                if c2 > 0 {
                    // the chi family alone reaches bar_alpha - 2
                    prop_assert!(report.max_forced() >= bar_alpha(chern).unwrap() - 2);
                    prop_assert_ne!(zeta(chern).unwrap().cmp_integer(report.max_forced() + 1), Ordering::Greater);
                }
            }
            Err(Error::TheoremInapplicable) => prop_assert!(c2 <= 0 && alpha.is_none_or(|a| a > 0)),
            Err(Error::SplitBundle) => prop_assert_eq!(profile.delta, Some(0)),
            Err(Error::NegativeDelta(d)) => prop_assert!(d < 0),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn duality_fill_is_idempotent(c1 in first_chern(), c2 in -20i64..40, n_min in -10i64..2, rows in proptest::collection::vec((0u64..50, 0u64..50), 1..12)) {
        let rows = rows.into_iter().map(|(a, b)| CohomologyRow::new(a, b)).collect();
        let table = CohomologyTable::new(ChernClasses::normalized(c1, c2), None, None, n_min, rows).unwrap();
        let (once, first) = fill_by_duality(&table);
        let (twice, second) = fill_by_duality(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert!(!first.failed() && !second.failed());
    }
}

#[test]
fn no_fixture_table_has_a_forced_zero() {
    for f in builtin_fixtures() {
        let Some(table) = &f.table else { continue };
        let report = forced_nonvanishing(&f.profile).unwrap();
        for t in report.forced() {
            assert_ne!(table.h1(t.twist), Some(0), "{} at {}", f.id, t.twist);
        }
    }
}

#[test]
fn split_profiles_are_refused() {
    for c1 in FirstChern::ALL {
        for alpha in -30i64..=0 {
            // c2 = -c1 alpha - alpha^2 gives delta = 0
            let c2 = -c1.value() * alpha - alpha * alpha;
            let p = BundleProfile::new(ChernClasses::normalized(c1, c2), Some(alpha), None).unwrap();
            assert_eq!(p.delta, Some(0));
            assert_eq!(forced_nonvanishing(&p), Err(Error::SplitBundle));
        }
    }
}
