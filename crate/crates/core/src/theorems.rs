//! Forced non-vanishing of `h^1(E(n))`, the splitting decision for
//! normalized bundles, and propagation of vanishing to the left.
//!
//! Every forced twist is annotated with the clause that forces it. Clauses
//! come in two families: the chi-negativity family, valid whenever
//! `c2 > 0`, and the non-stable family, valid whenever `alpha <= 0`. A
//! non-stable bundle with `c2 > 0` gets both.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::QuadraticValue;
use crate::bounds::{self, BoundKind};
use crate::bundle::{BundleProfile, ChernClasses, Diagnostic, FirstChern, StabilityClass};
use crate::tables::CohomologyTable;
use crate::{Error, Result, Twist};

/// A single statement of the theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClauseId {
    /// `-1 <= n < zeta`, from negativity of `chi`.
    ChiNegative,
    /// `-1 <= n <= bar_alpha - 2`, and `bar_alpha - 1` when `zeta` is irrational.
    BelowBarAlpha,
    /// `n = bar_alpha - 1` when `zeta` is an integer and `alpha < bar_alpha`.
    IntegralZeta,
    /// `n = bar_alpha - 1` when `alpha <= 0`.
    NonStableBarAlpha,
    /// Vanishing on `-1..=alpha - 1` forces `n = alpha - 1 = bar_alpha - 1`.
    VanishingBelowAlpha,
    /// Vanishing at `n >= alpha` forces `n >= bar_alpha`.
    VanishingAboveAlpha,
    /// `-1 <= n <= -alpha - c1` for non-stable bundles.
    NonStableRange,
    /// `alpha = 0`: up to `tau`.
    SemistableTau,
    /// `alpha < 0`: up to `eta(delta)`.
    EtaDelta,
    /// `alpha < 0`, `c2 >= 0`: from `-alpha - c1` up to `eta(alpha, delta)`.
    EtaAlphaDelta,
    /// `c1 = 0`: splits iff `h1(E(-1)) = 0`.
    SplitMinusOne,
    /// `c1 = -1`: splits iff `h1(E(-1)) = 0` or `h1(E) = 0`.
    SplitMinusOneOrZero,
    /// `c1 = -1`, not stable with `c2 = 2`: splits iff `h1(E(1)) = 0`.
    SplitOne,
    /// `h1(E(m)) = 0` with `m <= alpha - 2` forces `h1(E(n)) = 0` for `n <= m`.
    LeftVanishing,
    /// Splits iff `delta = 0`.
    DeltaZero,
}

impl ClauseId {
    pub fn tag(self) -> &'static str {
        match self {
            ClauseId::ChiNegative => "chi-negative",
            ClauseId::BelowBarAlpha => "below-bar-alpha",
            ClauseId::IntegralZeta => "integral-zeta",
            ClauseId::NonStableBarAlpha => "nonstable-bar-alpha",
            ClauseId::VanishingBelowAlpha => "vanishing-below-alpha",
            ClauseId::VanishingAboveAlpha => "vanishing-above-alpha",
            ClauseId::NonStableRange => "nonstable-range",
            ClauseId::SemistableTau => "semistable-tau",
            ClauseId::EtaDelta => "eta-delta",
            ClauseId::EtaAlphaDelta => "eta-alpha-delta",
            ClauseId::SplitMinusOne => "split-minus-one",
            ClauseId::SplitMinusOneOrZero => "split-minus-one-or-zero",
            ClauseId::SplitOne => "split-one",
            ClauseId::LeftVanishing => "left-vanishing",
            ClauseId::DeltaZero => "delta-zero",
        }
    }
}

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The twists `lo..=hi` on which `clause` forces `h1 != 0`; never empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClauseRange {
    pub clause: ClauseId,
    pub lo: Twist,
    pub hi: Twist,
}

impl ClauseRange {
    pub fn contains(&self, n: Twist) -> bool {
        self.lo <= n && n <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedTwist {
    pub twist: Twist,
    pub clauses: Vec<ClauseId>,
}

/// `h1(E(n)) = 0` is impossible for `lo <= n <= hi`, except at `allowed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingConstraint {
    pub clause: ClauseId,
    pub lo: Twist,
    pub hi: Twist,
    pub allowed: Option<Twist>,
    pub alpha: i64,
    pub bar_alpha: i64,
}

impl VanishingConstraint {
    pub fn forbids(&self, n: Twist) -> bool {
        self.lo <= n && n <= self.hi && self.allowed != Some(n)
    }

    pub fn describe(&self) -> String {
        match self.clause {
            ClauseId::VanishingBelowAlpha => match self.allowed {
                Some(m) => format!(
                    "vanishing on {}..={} only possible at n={m} (alpha=bar_alpha={})",
                    self.lo, self.hi, self.bar_alpha
                ),
                None => format!(
                    "no vanishing on {}..={} (alpha={} differs from bar_alpha={})",
                    self.lo, self.hi, self.alpha, self.bar_alpha
                ),
            },
            _ => format!(
                "vanishing at n>={} forces n>={} (bar_alpha={})",
                self.alpha, self.bar_alpha, self.bar_alpha
            ),
        }
    }
}

/// A clause that could not be evaluated for lack of data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionalClause {
    pub clause: ClauseId,
    pub needs: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportNote {
    /// `eta(delta)` is an integer; the forced range includes `n = eta`.
    IntegralEtaDelta(BigInt),
    Parity(Diagnostic),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Better,
    Equal,
    Worse,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Better => "better",
            Verdict::Equal => "equal",
            Verdict::Worse => "worse",
        })
    }
}

/// Our largest forced twist versus the `gamma - 2` bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaComparison {
    pub gamma_bound: Twist,
    pub our_bound: Twist,
    pub verdict: Verdict,
    /// `-r - c1 - 2`, the lower end of the known range, when `r` is known.
    pub literature_lower: Option<Twist>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVanishingReport {
    pub chern: ChernClasses,
    pub alpha: Option<i64>,
    pub bounds: Vec<(BoundKind, QuadraticValue)>,
    pub bar_alpha: Option<i64>,
    pub ranges: Vec<ClauseRange>,
    /// `-1..=max`, the union of `ranges`.
    pub interval: (Twist, Twist),
    pub constraints: Vec<VanishingConstraint>,
    pub conditional: Vec<ConditionalClause>,
    pub notes: Vec<ReportNote>,
    pub comparison: Option<GammaComparison>,
}

impl NonVanishingReport {
    pub fn max_forced(&self) -> Twist {
        self.interval.1
    }

    pub fn is_forced(&self, n: Twist) -> bool {
        self.interval.0 <= n && n <= self.interval.1
    }

    pub fn clauses_at(&self, n: Twist) -> Vec<ClauseId> {
        self.ranges.iter().filter(|r| r.contains(n)).map(|r| r.clause).collect()
    }

    /// Every forced twist, ascending, with the clauses forcing it.
    pub fn forced(&self) -> Vec<ForcedTwist> {
        (self.interval.0..=self.interval.1)
            .map(|twist| ForcedTwist {
                twist,
                clauses: self.clauses_at(twist),
            })
            .collect()
    }

    pub fn bound(&self, name: &str) -> Option<&QuadraticValue> {
        self.bounds.iter().find(|(k, _)| k.name() == name).map(|(_, v)| v)
    }
}

fn twist_of(v: BigInt, what: &'static str) -> Result<Twist> {
    v.to_i64().ok_or(Error::TwistOverflow(what))
}

struct RangeSet(Vec<ClauseRange>);

impl RangeSet {
    fn push(&mut self, clause: ClauseId, lo: Twist, hi: Twist) {
        if lo <= hi {
            self.0.push(ClauseRange { clause, lo, hi });
        }
    }

    /// Union as one interval; the clauses always chain from `-1`.
    fn interval(&self) -> (Twist, Twist) {
        let mut sorted = self.0.clone();
        sorted.sort_by_key(|r| (r.lo, r.hi));
        let mut hi = -2;
        for r in &sorted {
            assert!(r.lo <= hi + 1, "forced ranges leave a gap before {}", r.lo);
            hi = hi.max(r.hi);
        }
        debug_assert_eq!(sorted.first().map(|r| r.lo), Some(-1));
        (-1, hi)
    }
}

/// All twists at which the theory forces `h1(E(n)) != 0` for a non-split
/// bundle with the given profile.
pub fn forced_nonvanishing(profile: &BundleProfile) -> Result<NonVanishingReport> {
    let chern = profile.chern;
    let c1 = chern.c1.value();
    let chi_branch = chern.c2 > 0;
    let nonstable_branch = profile.alpha.is_some_and(|a| a <= 0);
    if !chi_branch && !nonstable_branch {
        return Err(Error::TheoremInapplicable);
    }
    if let Some(d) = profile.delta {
        if d == 0 {
            return Err(Error::SplitBundle);
        }
        if d < 0 {
            return Err(Error::NegativeDelta(d));
        }
    }

    let mut ranges = RangeSet(Vec::new());
    let mut bounds = Vec::new();
    let mut conditional = Vec::new();
    let mut notes = Vec::new();
    let mut constraints = Vec::new();
    let mut bar_alpha = None;
    let need_alpha = |clause| ConditionalClause {
        clause,
        needs: "alpha",
    };

    if let Some(d) = chern.diagnostic() {
        notes.push(ReportNote::Parity(d));
    }

    if chi_branch {
        let z = bounds::zeta(chern)?;
        let ba = bounds::bar_alpha(chern)?;
        bar_alpha = Some(ba);
        ranges.push(ClauseId::ChiNegative, -1, twist_of(z.max_below(), "zeta")?);
        let integral = z.is_integer();
        ranges.push(ClauseId::BelowBarAlpha, -1, if integral { ba - 2 } else { ba - 1 });
        match profile.alpha {
            Some(a) => {
                if integral && a < ba {
                    ranges.push(ClauseId::IntegralZeta, ba - 1, ba - 1);
                }
                if a <= 0 {
                    ranges.push(ClauseId::NonStableBarAlpha, ba - 1, ba - 1);
                } else {
                    constraints = vanishing_constraints_stable(chern, a)?;
                }
            }
            None => {
                if integral {
                    conditional.push(need_alpha(ClauseId::IntegralZeta));
                }
                conditional.extend(
                    [
                        ClauseId::NonStableBarAlpha,
                        ClauseId::VanishingBelowAlpha,
                        ClauseId::VanishingAboveAlpha,
                    ]
                    .map(need_alpha),
                );
            }
        }
        bounds.push((BoundKind::Zeta { c1: chern.c1, c2: chern.c2 }, z));
    }

    match (profile.alpha, profile.delta) {
        (Some(a), Some(d)) if a <= 0 => {
            ranges.push(ClauseId::NonStableRange, -1, -a - c1);
            if a == 0 {
                let t = bounds::tau(chern)?;
                let top = match chern.c1 {
                    FirstChern::Zero => t.max_below(),
                    FirstChern::MinusOne => t.max_at_most(),
                };
                ranges.push(ClauseId::SemistableTau, -c1, twist_of(top, "tau")?);
                bounds.push((BoundKind::Tau { c1: chern.c1, c2: chern.c2 }, t));
            } else {
                let e = bounds::eta_delta(chern.c1, d)?;
                ranges.push(ClauseId::EtaDelta, -1, twist_of(e.max_at_most(), "eta")?);
                if let Some(k) = e.to_integer() {
                    notes.push(ReportNote::IntegralEtaDelta(k));
                }
                bounds.push((BoundKind::EtaDelta { c1: chern.c1, delta: d }, e));
                if chern.c2 >= 0 {
                    let e = bounds::eta_alpha_delta(chern.c1, a, d)?;
                    let top = match chern.c1 {
                        FirstChern::Zero => e.max_below(),
                        FirstChern::MinusOne => e.max_at_most(),
                    };
                    ranges.push(ClauseId::EtaAlphaDelta, -a - c1, twist_of(top, "eta_alpha")?);
                    bounds.push((
                        BoundKind::EtaAlphaDelta { c1: chern.c1, alpha: a, delta: d },
                        e,
                    ));
                }
            }
        }
        (None, _) => conditional.extend(
            [
                ClauseId::NonStableRange,
                ClauseId::SemistableTau,
                ClauseId::EtaDelta,
                ClauseId::EtaAlphaDelta,
            ]
            .map(need_alpha),
        ),
        _ => {}
    }

    let interval = ranges.interval();
    let mut report = NonVanishingReport {
        chern,
        alpha: profile.alpha,
        bounds,
        bar_alpha,
        ranges: ranges.0,
        interval,
        constraints,
        conditional,
        notes,
        comparison: None,
    };
    if let Some(gamma) = profile.gamma {
        report.comparison = Some(gamma_bound_comparison(&report, gamma));
    }
    Ok(report)
}

/// The two vanishing constraints of a stable bundle with `c2 > 0`, with
/// `bar_alpha` substituted.
pub fn vanishing_constraints_stable(chern: ChernClasses, alpha: i64) -> Result<Vec<VanishingConstraint>> {
    if alpha <= 0 || chern.c2 <= 0 {
        return Err(Error::NotStableBranch);
    }
    let bar_alpha = bounds::bar_alpha(chern)?;
    Ok(alloc::vec![
        VanishingConstraint {
            clause: ClauseId::VanishingBelowAlpha,
            lo: -1,
            hi: alpha - 1,
            allowed: (alpha == bar_alpha).then_some(alpha - 1),
            alpha,
            bar_alpha,
        },
        VanishingConstraint {
            clause: ClauseId::VanishingAboveAlpha,
            lo: alpha,
            hi: bar_alpha - 1,
            allowed: None,
            alpha,
            bar_alpha,
        },
    ])
}

pub fn gamma_bound_comparison(report: &NonVanishingReport, gamma: i64) -> GammaComparison {
    let gamma_bound = gamma - 2;
    let our_bound = report.max_forced();
    let verdict = match our_bound.cmp(&gamma_bound) {
        core::cmp::Ordering::Greater => Verdict::Better,
        core::cmp::Ordering::Equal => Verdict::Equal,
        core::cmp::Ordering::Less => Verdict::Worse,
    };
    let literature_lower = report
        .alpha
        .map(|a| -crate::bundle::instability_order(report.chern.c1, a) - report.chern.c1.value() - 2);
    GammaComparison {
        gamma_bound,
        our_bound,
        verdict,
        literature_lower,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Split,
    NonSplit,
    Undetermined,
}

impl fmt::Display for SplitOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitOutcome::Split => "split",
            SplitOutcome::NonSplit => "non-split",
            SplitOutcome::Undetermined => "undetermined",
        })
    }
}

/// Known values of `h1(E(-1))`, `h1(E)` and `h1(E(1))`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplitEvidence {
    pub h1_minus_one: Option<u64>,
    pub h1_zero: Option<u64>,
    pub h1_one: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitTrace {
    /// Criteria concluding "split".
    pub split_by: Vec<ClauseId>,
    /// Criteria concluding "non-split".
    pub non_split_by: Vec<ClauseId>,
    /// `h1(E(1)) = 0` seen for a possibly stable bundle with `c1 = -1`,
    /// `c2 = 2`, where it decides nothing.
    pub exception: bool,
    /// The evidence is contradictory: criteria disagree.
    pub conflict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVerdict {
    pub outcome: SplitOutcome,
    pub trace: SplitTrace,
}

/// Splitting criterion for a normalized bundle from its first cohomology at
/// `-1`, `0`, `1`.
pub fn split_decision(
    c1: FirstChern,
    c2: Option<i64>,
    stability: StabilityClass,
    evidence: SplitEvidence,
) -> SplitVerdict {
    let mut trace = SplitTrace::default();
    let vote = |trace: &mut SplitTrace, value: Option<u64>, clause| match value {
        Some(0) => trace.split_by.push(clause),
        Some(_) => trace.non_split_by.push(clause),
        None => {}
    };
    match c1 {
        FirstChern::Zero => vote(&mut trace, evidence.h1_minus_one, ClauseId::SplitMinusOne),
        FirstChern::MinusOne => {
            let clause = ClauseId::SplitMinusOneOrZero;
            match (evidence.h1_minus_one, evidence.h1_zero) {
                (Some(0), _) | (_, Some(0)) => trace.split_by.push(clause),
                (Some(_), Some(_)) => trace.non_split_by.push(clause),
                _ => {}
            }
            let maybe_exception = matches!(stability, StabilityClass::Stable | StabilityClass::Unknown)
                && c2.is_none_or(|c2| c2 == 2);
            match (evidence.h1_one, maybe_exception) {
                (Some(0), true) => trace.exception = true,
                (_, true) => {}
                (value, false) => vote(&mut trace, value, ClauseId::SplitOne),
            }
        }
    }
    let outcome = match (trace.split_by.is_empty(), trace.non_split_by.is_empty()) {
        (false, false) => {
            trace.conflict = true;
            SplitOutcome::Undetermined
        }
        (false, true) => SplitOutcome::Split,
        (true, false) => SplitOutcome::NonSplit,
        (true, true) => SplitOutcome::Undetermined,
    };
    SplitVerdict { outcome, trace }
}

/// Vanishing implied to the left of a zero of `h1` below `alpha - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftPropagation {
    /// Largest `m <= alpha - 2` in the window with `h1(E(m)) = 0`; every
    /// `n <= m` then has `h1(E(n)) = 0`.
    pub anchor: Option<Twist>,
    /// Twists `n <= anchor` where the table records `h1 > 0`.
    pub violations: Vec<Twist>,
}

impl LeftPropagation {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn propagate_left_vanishing(table: &CohomologyTable, alpha: i64) -> LeftPropagation {
    let anchor = table
        .rows()
        .rev()
        .find(|(n, row)| *n <= alpha - 2 && row.h1 == 0)
        .map(|(n, _)| n);
    let violations = match anchor {
        Some(m) => table
            .rows()
            .filter(|(n, row)| *n <= m && row.h1 > 0)
            .map(|(n, _)| n)
            .collect(),
        None => Vec::new(),
    };
    LeftPropagation { anchor, violations }
}
