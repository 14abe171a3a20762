//! Chern-class data, stability, `delta`, twisting and Serre duality.

use core::fmt;

use crate::{Error, Result, Twist};

/// First Chern class of a normalized bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FirstChern {
    Zero,
    MinusOne,
}

impl FirstChern {
    pub const ALL: [FirstChern; 2] = [FirstChern::Zero, FirstChern::MinusOne];

    pub fn value(self) -> i64 {
        match self {
            FirstChern::Zero => 0,
            FirstChern::MinusOne => -1,
        }
    }
}

impl TryFrom<i64> for FirstChern {
    type Error = Error;

    fn try_from(c1: i64) -> Result<Self> {
        match c1 {
            0 => Ok(FirstChern::Zero),
            -1 => Ok(FirstChern::MinusOne),
            other => Err(Error::NotNormalized(other)),
        }
    }
}

impl fmt::Display for FirstChern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Normalized Chern pair `(c1, c2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChernClasses {
    pub c1: FirstChern,
    pub c2: i64,
}

/// Non-fatal remark about the numerical data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// `c1 = -1` forces `c2` even for an actual bundle.
    OddC2WithOddC1,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::OddC2WithOddC1 => {
                f.write_str("c2 is odd with c1 = -1; no bundle has these classes")
            }
        }
    }
}

impl ChernClasses {
    pub fn new(c1: i64, c2: i64) -> Result<Self> {
        Ok(ChernClasses {
            c1: FirstChern::try_from(c1)?,
            c2,
        })
    }

    pub const fn normalized(c1: FirstChern, c2: i64) -> Self {
        ChernClasses { c1, c2 }
    }

    pub fn c1_value(&self) -> i64 {
        self.c1.value()
    }

    /// Construction never fails on parity; the remark is kept here instead.
    pub fn diagnostic(&self) -> Option<Diagnostic> {
        (self.c1 == FirstChern::MinusOne && self.c2 % 2 != 0).then_some(Diagnostic::OddC2WithOddC1)
    }
}

/// Chern pair of an arbitrary twist `E(n)`, no longer normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneralChernPair {
    pub a1: i128,
    pub a2: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Stable,
    StrictlySemistable,
    NonStable,
    Unknown,
}

impl StabilityClass {
    /// Non-stable in the broad sense, `alpha <= 0`, strictly semistable
    /// included.
    pub fn is_non_stable(self) -> bool {
        matches!(self, StabilityClass::NonStable | StabilityClass::StrictlySemistable)
    }
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::Stable => "stable",
            StabilityClass::StrictlySemistable => "strictly-semistable",
            StabilityClass::NonStable => "non-stable",
            StabilityClass::Unknown => "unknown",
        })
    }
}

pub fn classify_stability(c1: FirstChern, alpha: Option<i64>) -> StabilityClass {
    match alpha {
        None => StabilityClass::Unknown,
        Some(a) if a > 0 => StabilityClass::Stable,
        Some(0) if c1 == FirstChern::Zero => StabilityClass::StrictlySemistable,
        Some(_) => StabilityClass::NonStable,
    }
}

/// `(c1(E(n)), c2(E(n))) = (c1 + 2n, c2 + c1 n + n^2)`.
pub fn twist_chern(chern: ChernClasses, n: Twist) -> GeneralChernPair {
    let (c1, c2, n) = (chern.c1_value() as i128, chern.c2 as i128, n as i128);
    GeneralChernPair {
        a1: c1 + 2 * n,
        a2: c2 + c1 * n + n * n,
    }
}

/// Degree of a minimal curve, `c2 + c1 alpha + alpha^2`.
pub fn delta(chern: ChernClasses, alpha: i64) -> i128 {
    let (c1, c2, a) = (chern.c1_value() as i128, chern.c2 as i128, alpha as i128);
    c2 + c1 * a + a * a
}

/// The twist `-n - c1 - 4` paired with `n` by Serre duality.
pub fn serre_dual_twist(c1: FirstChern, n: Twist) -> Twist {
    -n - c1.value() - 4
}

pub fn split_by_delta(delta: i128) -> bool {
    delta == 0
}

/// Order of instability: `-alpha - c1` when non-stable, `0` when stable.
pub fn instability_order(c1: FirstChern, alpha: i64) -> i64 {
    if alpha <= 0 {
        -alpha - c1.value()
    } else {
        0
    }
}

/// Chern classes together with whatever section levels are known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleProfile {
    pub chern: ChernClasses,
    pub alpha: Option<i64>,
    /// Accepted for completeness; no formula reads it.
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    pub delta: Option<i128>,
    pub stability: StabilityClass,
}

impl BundleProfile {
    pub fn new(chern: ChernClasses, alpha: Option<i64>, gamma: Option<i64>) -> Result<Self> {
        if let (Some(alpha), Some(gamma)) = (alpha, gamma) {
            if gamma < alpha {
                return Err(Error::GammaBelowAlpha { alpha, gamma });
            }
        }
        Ok(BundleProfile {
            chern,
            alpha,
            beta: None,
            gamma,
            delta: alpha.map(|a| delta(chern, a)),
            stability: classify_stability(chern.c1, alpha),
        })
    }

    pub fn chern_only(chern: ChernClasses) -> Self {
        BundleProfile {
            chern,
            alpha: None,
            beta: None,
            gamma: None,
            delta: None,
            stability: StabilityClass::Unknown,
        }
    }

    pub fn with_beta(mut self, beta: Option<i64>) -> Self {
        self.beta = beta;
        self
    }

    /// `r = -alpha - c1` or `0`, when `alpha` is known.
    pub fn instability_order(&self) -> Option<i64> {
        self.alpha.map(|a| instability_order(self.chern.c1, a))
    }
}
