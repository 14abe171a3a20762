//! Worked examples with known cohomology: five printed tables and six
//! parameter-only profiles.

use alloc::vec::Vec;

use super::{CohomologyRow, CohomologyTable};
use crate::bundle::{BundleProfile, ChernClasses};
use crate::Twist;

/// Values a fixture must reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub forced_max: Twist,
    pub bar_alpha: Option<i64>,
    /// Twists known to have `h1 != 0`.
    pub nonvanishing: Vec<Twist>,
}

/// A cohomology value known from outside computation; never checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Annotation {
    pub twist: Twist,
    pub h1_nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub title: &'static str,
    pub profile: BundleProfile,
    pub table: Option<CohomologyTable>,
    pub expected: Expected,
    pub annotations: Vec<Annotation>,
}

fn profile(c1: i64, c2: i64, alpha: i64, gamma: Option<i64>) -> BundleProfile {
    BundleProfile::new(ChernClasses::new(c1, c2).unwrap(), Some(alpha), gamma).unwrap()
}

fn table(p: &BundleProfile, n_min: Twist, h0: &[u64], h1: &[u64]) -> Option<CohomologyTable> {
    assert_eq!(h0.len(), h1.len());
    let rows = h0.iter().zip(h1).map(|(&a, &b)| CohomologyRow::new(a, b)).collect();
    Some(CohomologyTable::new(p.chern, p.alpha, p.gamma, n_min, rows).unwrap())
}

fn expected(forced_max: Twist, bar_alpha: Option<i64>, nonvanishing: &[Twist]) -> Expected {
    Expected { forced_max, bar_alpha, nonvanishing: nonvanishing.to_vec() }
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut push = |id, title, profile: BundleProfile, table, expected, annotations: &[Annotation]| {
        out.push(Fixture { id, title, profile, table, expected, annotations: annotations.to_vec() })
    };

    let p = profile(0, 2, 1, None);
    push("ex41", "stable, c2 = 2", p, None, expected(0, Some(1), &[0]), &[]);

    let p = profile(-1, 2, 1, Some(2));
    let t = table(&p, -2, &[0, 0, 0, 1, 7, 21], &[0, 1, 2, 1, 0, 0]);
    push("ex42", "stable, c1 = -1, c2 = 2, integral zeta", p, t, expected(1, Some(2), &[1]), &[]);

    let h0a = [0, 0, 0, 0, 0, 5, 20];
    let p = profile(0, 4, 2, Some(2));
    let t = table(&p, -3, &h0a, &[0, 1, 4, 6, 4, 1, 0]);
    push("ex43a", "stable, c2 = 4, case A", p, t, expected(1, Some(2), &[1]), &[]);
    let p = profile(0, 4, 2, Some(2));
    let t = table(&p, -3, &[0, 0, 0, 0, 0, 6, 20], &[0, 1, 4, 6, 4, 2, 0]);
    push("ex43b", "stable, c2 = 4, case B", p, t, expected(1, Some(2), &[1]), &[]);
    let p = profile(0, 4, 1, Some(2));
    let t = table(&p, -3, &[0, 0, 0, 0, 1, 6, 20], &[0, 1, 4, 6, 5, 2, 0]);
    push("ex43c", "stable, c2 = 4, case C", p, t, expected(1, Some(2), &[1]), &[]);

    let p = profile(0, 9, -3, Some(9));
    push("ex45", "non-stable, alpha = -3, delta = 18", p, None, expected(12, Some(4), &[12]), &[]);

    let p = profile(0, 3, 0, Some(3));
    push("ex46", "strictly semistable, c2 = 3", p, None, expected(2, Some(2), &[2]), &[]);

    let p = profile(0, 47, 1, Some(9));
    let notes = [Annotation { twist: 34, h1_nonzero: true }, Annotation { twist: 35, h1_nonzero: false }];
    push("ex47", "stable, c2 = 47", p, None, expected(9, Some(10), &[9]), &notes);

    let p = profile(0, 20, 2, Some(10));
    push("ex48", "stable, c2 = 20", p, None, expected(5, Some(6), &[5]), &[]);

    let p = profile(0, 0, -4, Some(12));
    push("ex49", "non-stable, c2 = 0, alpha = -4", p, None, expected(13, Some(0), &[13]), &[]);

    let p = profile(0, 4, 0, None);
    let t = table(&p, -3, &[0, 0, 0, 1, 4, 10, 20], &[0, 2, 4, 7, 8, 6, 0]);
    push("ex410", "strictly semistable, c2 = 4, sharp", p, t, expected(2, Some(2), &[2]), &[]);

    out
}

pub fn fixture(id: &str) -> Option<Fixture> {
    builtin_fixtures().into_iter().find(|f| f.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bar_alpha;
    use crate::tables::{has_failures, verify_table};
    use crate::theorems::forced_nonvanishing;

    #[test]
    fn ids_are_unique() {
        let all = builtin_fixtures();
        for (i, f) in all.iter().enumerate() {
            assert!(all[i + 1..].iter().all(|g| g.id != f.id));
        }
        assert_eq!(all.len(), 11);
    }

    #[test]
    fn every_fixture_meets_its_expectation() {
        for f in builtin_fixtures() {
            let r = forced_nonvanishing(&f.profile).unwrap();
            assert_eq!(r.max_forced(), f.expected.forced_max, "{}", f.id);
            assert_eq!(bar_alpha(f.profile.chern).ok(), f.expected.bar_alpha, "{}", f.id);
            for n in &f.expected.nonvanishing {
                assert!(r.is_forced(*n), "{} at {n}", f.id);
            }
            for a in &f.annotations {
                assert!(!r.is_forced(a.twist), "annotation inside forced range");
            }
        }
    }

    #[test]
    fn every_table_verifies() {
        for f in builtin_fixtures() {
            let Some(t) = &f.table else { continue };
            let results = verify_table(t, &f.profile).unwrap();
            assert!(!has_failures(&results), "{}: {:?}", f.id, results);
            assert!(results.iter().all(|r| !r.failed()), "{}", f.id);
        }
    }

    #[test]
    fn case_a_rows() {
        let t = fixture("ex43a").unwrap().table.unwrap();
        let h1: Vec<_> = t.rows().map(|(_, r)| r.h1).collect();
        assert_eq!(h1, [0, 1, 4, 6, 4, 1, 0]);
        assert_eq!(t.window(), -3..=3);
    }
}
