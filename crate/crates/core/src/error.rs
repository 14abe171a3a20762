use crate::Twist;

/// Domain and contract errors raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("isqrt of a negative integer")]
    NegativeSqrt,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid quadratic value: {0}")]
    InvalidQuadratic(&'static str),
    #[error("c1 must be 0 or -1 for a normalized bundle (got {0})")]
    NotNormalized(i64),
    #[error("zeta undefined for negative c2")]
    ZetaUndefined,
    #[error("{bound} undefined: negative radicand")]
    NegativeRadicand { bound: &'static str },
    #[error("eta(alpha, delta) requires alpha < 0 (got alpha = {0})")]
    AlphaNotNegative(i64),
    #[error("closed form for h0 - h3 requires a non-stable bundle, alpha <= 0 (got alpha = {0})")]
    AlphaPositive(i64),
    #[error("twist {n} outside validity range {lo}..={hi}")]
    OutsideValidity { n: Twist, lo: Twist, hi: Twist },
    #[error("theorem inapplicable: requires c2 > 0 or non-stability")]
    TheoremInapplicable,
    #[error("bundle splits (delta = 0): no forced non-vanishing")]
    SplitBundle,
    #[error("delta = {0} is negative; a minimal curve has positive degree")]
    NegativeDelta(i128),
    #[error("gamma ({gamma}) is smaller than alpha ({alpha})")]
    GammaBelowAlpha { alpha: i64, gamma: i64 },
    #[error("vanishing constraints need a stable bundle (alpha > 0) with c2 > 0")]
    NotStableBranch,
    #[error("bound value {0} does not fit a twist")]
    TwistOverflow(&'static str),
    #[error("table Chern classes differ from the profile")]
    ChernMismatch,
    #[error("invalid table: {0}")]
    Table(#[from] crate::tables::TableError),
}
