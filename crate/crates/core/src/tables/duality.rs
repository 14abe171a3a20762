use alloc::format;

use super::{CheckResult, CheckStatus, CohomologyTable};
use crate::bundle::serre_dual_twist;

/// Completes `h2`, `h3` from `h2(n) = h1(d)`, `h3(n) = h0(d)` with
/// `d = -n - c1 - 4`. Values already present are compared, never replaced;
/// disagreements fail the returned `DUALITY` check.
pub fn fill_by_duality(table: &CohomologyTable) -> (CohomologyTable, CheckResult) {
    let mut check = CheckResult::new("DUALITY");
    let mut filled = table.clone();
    let c1 = table.chern().c1;
    let mut paired = 0usize;
    for (i, (n, _)) in table.rows().enumerate() {
        let d = serre_dual_twist(c1, n);
        let Some(dual) = table.row(d) else {
            check.note(Some(n), format!("dual twist {d} outside window"));
            continue;
        };
        paired += 1;
        let row = &mut filled.rows_mut()[i];
        for (slot, want, name, src) in [(&mut row.h2, dual.h1, "h2", "h1"), (&mut row.h3, dual.h0, "h3", "h0")] {
            match *slot {
                None => *slot = Some(want),
                Some(have) if have != want => {
                    check.fail(Some(n), format!("{name}={have} but {src}({d})={want}"));
                }
                Some(_) => {}
            }
        }
    }
    if paired == 0 {
        check.status = CheckStatus::Skipped(format!("no dual twist inside window {:?}", table.window()));
    }
    (filled, check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::ChernClasses;
    use crate::tables::CohomologyRow;
    use alloc::vec::Vec;

    fn ex42() -> CohomologyTable {
        let rows = [(0, 0), (0, 1), (0, 2), (1, 1), (7, 0), (21, 0)]
            .into_iter()
            .map(|(h0, h1)| CohomologyRow::new(h0, h1))
            .collect();
        CohomologyTable::new(ChernClasses::new(-1, 2).unwrap(), Some(1), Some(2), -2, rows).unwrap()
    }

    #[test]
    fn fills_from_dual_rows() {
        let (t, check) = fill_by_duality(&ex42());
        assert!(check.passed());
        assert_eq!(t.row(-1).map(|r| (r.h2, r.h3)), Some((Some(0), Some(0))));
        assert_eq!(t.row(-2).map(|r| (r.h2, r.h3)), Some((Some(1), Some(0))));
        // dual of 0 is -3, outside
        assert_eq!(t.row(0).map(|r| (r.h2, r.h3)), Some((None, None)));
        assert!(check.details.iter().any(|d| d.twist == Some(0)));
    }

    #[test]
    fn idempotent() {
        let (once, _) = fill_by_duality(&ex42());
        let (twice, check) = fill_by_duality(&once);
        assert_eq!(once, twice);
        assert!(check.passed());
    }

    #[test]
    fn conflict_is_reported_not_repaired() {
        let t = ex42().with_row(-1, CohomologyRow::full(0, 1, 5, 0)).unwrap();
        let (filled, check) = fill_by_duality(&t);
        assert!(check.failed());
        assert_eq!(filled.row(-1).unwrap().h2, Some(5));
        assert!(check.details.iter().any(|d| d.message == "h2=5 but h1(-2)=0"));
    }

    #[test]
    fn no_pair_in_window_is_skipped() {
        let rows: Vec<_> = [(5, 1), (20, 0)].into_iter().map(|(a, b)| CohomologyRow::new(a, b)).collect();
        let t = CohomologyTable::new(ChernClasses::new(0, 4).unwrap(), None, None, 2, rows).unwrap();
        let (filled, check) = fill_by_duality(&t);
        assert!(matches!(check.status, CheckStatus::Skipped(_)));
        assert_eq!(filled, t);
    }
}
