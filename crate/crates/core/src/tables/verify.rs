use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{fill_by_duality, CheckResult, CohomologyTable};
use crate::arith::Rational;
use crate::bundle::BundleProfile;
use crate::euler::{binom3, chi_p3};
use crate::theorems::{forced_nonvanishing, propagate_left_vanishing};
use crate::{Error, Result};

pub const CHECK_NAMES: [&str; 7] = ["CHI", "DUALITY", "FORCED", "VANISHING", "LEFTVANISH", "ALPHA", "NONSTABLE-H0"];

/// Whether any fatal check failed.
pub fn has_failures(results: &[CheckResult]) -> bool {
    results.iter().any(|r| r.fatal && r.failed())
}

/// Every numerical consequence of the theory checked against `table`, in
/// the order of [`CHECK_NAMES`]. `alpha` and `gamma` come from `profile`.
pub fn verify_table(table: &CohomologyTable, profile: &BundleProfile) -> Result<Vec<CheckResult>> {
    if table.chern() != profile.chern {
        return Err(Error::ChernMismatch);
    }
    let (filled, duality) = fill_by_duality(table);
    let (forced, vanishing) = check_forced(&filled, profile);
    Ok(alloc::vec![
        check_chi(&filled, profile),
        duality,
        forced,
        vanishing,
        check_left(&filled, profile),
        check_alpha(&filled, profile),
        check_nonstable_h0(&filled, profile),
    ])
}

fn check_chi(table: &CohomologyTable, profile: &BundleProfile) -> CheckResult {
    let mut check = CheckResult::new("CHI");
    let mut checked = 0usize;
    for (n, row) in table.rows() {
        let (Some(h2), Some(h3)) = (row.h2, row.h3) else { continue };
        checked += 1;
        let sum = Rational::from(BigInt::from(row.h0) - row.h1 + h2 - h3);
        let chi = chi_p3(profile.chern, n);
        if sum != chi {
            check.fail(Some(n), format!("h0-h1+h2-h3={sum} but chi={chi}"));
        }
    }
    if checked == 0 {
        return CheckResult::skipped("CHI", "no twist with all four h^i known");
    }
    check
}

fn check_forced(table: &CohomologyTable, profile: &BundleProfile) -> (CheckResult, CheckResult) {
    let report = match forced_nonvanishing(profile) {
        Ok(report) => report,
        Err(e) => {
            let reason = e.to_string();
            return (CheckResult::skipped("FORCED", reason.clone()), CheckResult::skipped("VANISHING", reason));
        }
    };

    let mut forced = CheckResult::new("FORCED");
    let (lo, hi) = report.interval;
    let in_window: Vec<_> = (lo.max(table.n_min())..=hi.min(table.n_max())).collect();
    for &n in &in_window {
        if table.h1(n) == Some(0) {
            let tags: Vec<_> = report.clauses_at(n).iter().map(|c| c.tag()).collect();
            forced.fail(Some(n), format!("h1=0 but forced by {}", tags.join(",")));
        }
    }
    if in_window.is_empty() {
        forced = CheckResult::skipped("FORCED", format!("forced range {lo}..={hi} outside window"));
    }

    let mut vanishing = CheckResult::new("VANISHING");
    if report.constraints.is_empty() {
        vanishing = CheckResult::skipped("VANISHING", "no vanishing constraint applies");
    }
    for c in &report.constraints {
        for (n, row) in table.rows() {
            if row.h1 == 0 && c.forbids(n) {
                vanishing.fail(Some(n), format!("h1=0 contradicts: {}", c.describe()));
            }
        }
    }
    (forced, vanishing)
}

fn check_left(table: &CohomologyTable, profile: &BundleProfile) -> CheckResult {
    let Some(alpha) = profile.alpha else {
        return CheckResult::skipped("LEFTVANISH", "alpha unknown");
    };
    let mut check = CheckResult::new("LEFTVANISH");
    let prop = propagate_left_vanishing(table, alpha);
    match prop.anchor {
        Some(m) => check.note(None, format!("h1(E({m}))=0 with {m} <= alpha-2: zero for n <= {m}")),
        None => check.note(None, format!("no h1 zero at n <= {} in window", alpha - 2)),
    }
    for n in prop.violations {
        check.fail(Some(n), format!("h1={} but implied zero", table.h1(n).unwrap_or_default()));
    }
    check
}

fn check_alpha(table: &CohomologyTable, profile: &BundleProfile) -> CheckResult {
    let Some(alpha) = profile.alpha else {
        return CheckResult::skipped("ALPHA", "alpha unknown");
    };
    let mut check = CheckResult::new("ALPHA");
    let first = table.first_positive_h0();
    // h0 vanishes below alpha and, multiplying by a linear form, stays
    // positive from alpha on
    let expected = if alpha > table.n_max() { None } else { Some(alpha.max(table.n_min())) };
    if first != expected {
        let show = |v: Option<i64>| v.map_or("none".to_string(), |n| n.to_string());
        check.fail(None, format!("first positive h0 at {} but alpha={alpha} gives {}", show(first), show(expected)));
    }
    for (n, row) in table.rows() {
        if n >= alpha && row.h0 == 0 {
            check.fail(Some(n), format!("h0=0 at or above alpha={alpha}"));
        }
    }
    check
}

fn check_nonstable_h0(table: &CohomologyTable, profile: &BundleProfile) -> CheckResult {
    let mut check = match profile.alpha {
        Some(alpha) if alpha <= 0 => {
            let top = -alpha - profile.chern.c1.value();
            let mut check = CheckResult::new("NONSTABLE-H0");
            let mut checked = 0usize;
            for (n, row) in table.rows().filter(|(n, _)| *n <= top) {
                checked += 1;
                let want = binom3(n - alpha + 3);
                if BigInt::from(row.h0) != want {
                    check.fail(Some(n), format!("h0={} but C({},3)={want}", row.h0, n - alpha + 3));
                }
            }
            if checked == 0 {
                check = CheckResult::skipped("NONSTABLE-H0", format!("no twist n <= {top} in window"));
            }
            check
        }
        Some(_) => CheckResult::skipped("NONSTABLE-H0", "bundle is stable"),
        None => CheckResult::skipped("NONSTABLE-H0", "alpha unknown"),
    };
    check.fatal = false;
    check
}
