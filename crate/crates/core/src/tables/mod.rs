//! Windows of cohomology tables `h^i(E(n))` and their verification.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::bundle::ChernClasses;
use crate::Twist;

mod duality;
mod fixtures;
mod verify;

pub use duality::fill_by_duality;
pub use fixtures::{builtin_fixtures, fixture, Annotation, Expected, Fixture};
pub use verify::{has_failures, verify_table, CHECK_NAMES};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("empty window")]
    EmptyWindow,
    #[error("window end overflows")]
    WindowOverflow,
    #[error("h0 = {h0} at n = {n} below alpha = {alpha}")]
    SectionBelowAlpha { n: Twist, h0: u64, alpha: i64 },
    #[error("h0 = 0 at n = alpha = {0}")]
    NoSectionAtAlpha(i64),
    #[error("twist {0} outside window")]
    OutsideWindow(Twist),
}

/// `h^0 .. h^3` of one twist; `h2`, `h3` may be unknown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CohomologyRow {
    pub h0: u64,
    pub h1: u64,
    pub h2: Option<u64>,
    pub h3: Option<u64>,
}

impl CohomologyRow {
    pub fn new(h0: u64, h1: u64) -> Self {
        CohomologyRow { h0, h1, h2: None, h3: None }
    }

    pub fn full(h0: u64, h1: u64, h2: u64, h3: u64) -> Self {
        CohomologyRow { h0, h1, h2: Some(h2), h3: Some(h3) }
    }
}

/// Contiguous window `n_min ..= n_min + rows.len() - 1` of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    chern: ChernClasses,
    alpha: Option<i64>,
    beta: Option<i64>,
    gamma: Option<i64>,
    n_min: Twist,
    rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn new(
        chern: ChernClasses,
        alpha: Option<i64>,
        gamma: Option<i64>,
        n_min: Twist,
        rows: Vec<CohomologyRow>,
    ) -> Result<Self, TableError> {
        if rows.is_empty() {
            return Err(TableError::EmptyWindow);
        }
        n_min
            .checked_add(rows.len() as i64 - 1)
            .ok_or(TableError::WindowOverflow)?;
        let table = CohomologyTable { chern, alpha, beta: None, gamma, n_min, rows };
        if let Some(alpha) = alpha {
            for (n, row) in table.rows() {
                if n < alpha && row.h0 != 0 {
                    return Err(TableError::SectionBelowAlpha { n, h0: row.h0, alpha });
                }
                if n == alpha && row.h0 == 0 {
                    return Err(TableError::NoSectionAtAlpha(alpha));
                }
            }
        }
        Ok(table)
    }

    pub fn with_beta(mut self, beta: Option<i64>) -> Self {
        self.beta = beta;
        self
    }

    pub fn chern(&self) -> ChernClasses {
        self.chern
    }

    pub fn alpha(&self) -> Option<i64> {
        self.alpha
    }

    pub fn beta(&self) -> Option<i64> {
        self.beta
    }

    pub fn gamma(&self) -> Option<i64> {
        self.gamma
    }

    pub fn n_min(&self) -> Twist {
        self.n_min
    }

    pub fn n_max(&self) -> Twist {
        self.n_min + self.rows.len() as i64 - 1
    }

    pub fn window(&self) -> RangeInclusive<Twist> {
        self.n_min..=self.n_max()
    }

    pub fn contains(&self, n: Twist) -> bool {
        self.window().contains(&n)
    }

    pub fn row(&self, n: Twist) -> Option<&CohomologyRow> {
        if !self.contains(n) {
            return None;
        }
        self.rows.get((n - self.n_min) as usize)
    }

    pub fn h1(&self, n: Twist) -> Option<u64> {
        self.row(n).map(|r| r.h1)
    }

    /// Rows in ascending twist order.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = (Twist, &CohomologyRow)> + '_ {
        let n_min = self.n_min;
        self.rows.iter().enumerate().map(move |(i, r)| (n_min + i as i64, r))
    }

    pub fn first_positive_h0(&self) -> Option<Twist> {
        self.rows().find(|(_, r)| r.h0 > 0).map(|(n, _)| n)
    }

    /// A copy with row `n` replaced, revalidated.
    pub fn with_row(&self, n: Twist, row: CohomologyRow) -> Result<Self, TableError> {
        if !self.contains(n) {
            return Err(TableError::OutsideWindow(n));
        }
        let mut rows = self.rows.clone();
        rows[(n - self.n_min) as usize] = row;
        Ok(CohomologyTable::new(self.chern, self.alpha, self.gamma, self.n_min, rows)?.with_beta(self.beta))
    }

    pub(crate) fn rows_mut(&mut self) -> &mut [CohomologyRow] {
        &mut self.rows
    }
}

/// One twist-level diagnostic of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detail {
    pub twist: Option<Twist>,
    pub message: String,
}

impl fmt::Display for Detail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.twist {
            Some(n) => write!(f, "n={n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("pass"),
            CheckStatus::Fail => f.write_str("fail"),
            CheckStatus::Skipped(reason) => write!(f, "skipped ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub details: Vec<Detail>,
    /// A failure of a non-fatal check is reported but does not fail the table.
    pub fatal: bool,
}

impl CheckResult {
    pub(crate) fn new(name: &'static str) -> Self {
        CheckResult { name, status: CheckStatus::Pass, details: Vec::new(), fatal: true }
    }

    pub(crate) fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Skipped(reason.into()), ..CheckResult::new(name) }
    }

    pub(crate) fn note(&mut self, twist: Option<Twist>, message: String) {
        self.details.push(Detail { twist, message });
    }

    pub(crate) fn fail(&mut self, twist: Option<Twist>, message: String) {
        self.status = CheckStatus::Fail;
        self.note(twist, message);
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(h0: &[u64], h1: &[u64]) -> Vec<CohomologyRow> {
        h0.iter().zip(h1).map(|(&a, &b)| CohomologyRow::new(a, b)).collect()
    }

    #[test]
    fn window_and_lookup() {
        let t = CohomologyTable::new(
            ChernClasses::new(-1, 2).unwrap(),
            Some(1),
            None,
            -2,
            rows(&[0, 0, 0, 1, 7, 21], &[0, 1, 2, 1, 0, 0]),
        )
        .unwrap();
        assert_eq!(t.window(), -2..=3);
        assert_eq!(t.h1(0), Some(2));
        assert_eq!(t.h1(4), None);
        assert_eq!(t.first_positive_h0(), Some(1));
        assert_eq!(t.rows().map(|(n, _)| n).collect::<Vec<_>>(), [-2, -1, 0, 1, 2, 3]);
    }

    #[test]
    fn alpha_is_validated() {
        let ch = ChernClasses::new(0, 4).unwrap();
        let err = CohomologyTable::new(ch, Some(2), None, 0, rows(&[0, 1, 5], &[6, 4, 1]));
        assert_eq!(err, Err(TableError::SectionBelowAlpha { n: 1, h0: 1, alpha: 2 }));
        let err = CohomologyTable::new(ch, Some(1), None, 0, rows(&[0, 0, 5], &[6, 4, 1]));
        assert_eq!(err, Err(TableError::NoSectionAtAlpha(1)));
        assert_eq!(CohomologyTable::new(ch, None, None, 0, Vec::new()), Err(TableError::EmptyWindow));
        // alpha outside the window constrains only the rows present
        assert!(CohomologyTable::new(ch, Some(9), None, 0, rows(&[0], &[6])).is_ok());
    }

    #[test]
    fn replacing_a_row_revalidates() {
        let ch = ChernClasses::new(0, 4).unwrap();
        let t = CohomologyTable::new(ch, Some(1), None, 0, rows(&[0, 1], &[6, 4])).unwrap();
        assert_eq!(t.with_row(1, CohomologyRow::new(1, 0)).unwrap().h1(1), Some(0));
        assert_eq!(t.with_row(0, CohomologyRow::new(1, 0)), Err(TableError::SectionBelowAlpha { n: 0, h0: 1, alpha: 1 }));
        assert_eq!(t.with_row(5, CohomologyRow::new(1, 0)), Err(TableError::OutsideWindow(5)));
    }
}
