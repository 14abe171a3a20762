//! The square-root bounds `zeta`, `tau`, `eta` and the maximal first level
//! `bar_alpha`, all in the integer-scaled form `(sqrt(R) - p) / q`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::QuadraticValue;
use crate::bundle::{ChernClasses, FirstChern};
use crate::{Error, Result};

/// Which bound, with its defining parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Zeta { c1: FirstChern, c2: i64 },
    Tau { c1: FirstChern, c2: i64 },
    EtaDelta { c1: FirstChern, delta: i128 },
    EtaAlphaDelta { c1: FirstChern, alpha: i64, delta: i128 },
}

impl BoundKind {
    pub fn evaluate(self) -> Result<QuadraticValue> {
        match self {
            BoundKind::Zeta { c1, c2 } => zeta(ChernClasses::normalized(c1, c2)),
            BoundKind::Tau { c1, c2 } => tau(ChernClasses::normalized(c1, c2)),
            BoundKind::EtaDelta { c1, delta } => eta_delta(c1, delta),
            BoundKind::EtaAlphaDelta { c1, alpha, delta } => eta_alpha_delta(c1, alpha, delta),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Zeta { .. } => "zeta",
            BoundKind::Tau { .. } => "tau",
            BoundKind::EtaDelta { .. } => "eta",
            BoundKind::EtaAlphaDelta { .. } => "eta_alpha",
        }
    }
}

fn checked(bound: &'static str, radicand: BigInt, offset: BigInt, denom: i64) -> Result<QuadraticValue> {
    if radicand.is_negative() {
        return Err(Error::NegativeRadicand { bound });
    }
    QuadraticValue::new(radicand, offset, denom)
}

/// `zeta = (sqrt(12 c2 + 4 - 3 c1^2) - (4 + c1)) / 2`, defined for `c2 >= 0`.
pub fn zeta(chern: ChernClasses) -> Result<QuadraticValue> {
    if chern.c2 < 0 {
        return Err(Error::ZetaUndefined);
    }
    let c1 = chern.c1_value();
    let radicand = BigInt::from(chern.c2) * 12 + 4 - 3 * c1 * c1;
    checked("zeta", radicand, BigInt::from(4 + c1), 2)
}

/// `floor(zeta) + 1`, the largest possible first level when `c2 >= 0`.
pub fn bar_alpha(chern: ChernClasses) -> Result<i64> {
    let z = zeta(chern)?;
    (z.floor() + BigInt::from(1)).to_i64().ok_or(Error::TwistOverflow("bar_alpha"))
}

/// Scaled `sqrt(6 x + 1) - 2` (`c1 = 0`) or `(sqrt(24 x + 10) - 3) / 2`
/// (`c1 = -1`), shared by `tau` (x = c2) and `eta` (x = delta).
fn six_x_bound(bound: &'static str, c1: FirstChern, x: BigInt) -> Result<QuadraticValue> {
    match c1 {
        FirstChern::Zero => checked(bound, x * 6 + 1, BigInt::from(2), 1),
        FirstChern::MinusOne => checked(bound, x * 24 + 10, BigInt::from(3), 2),
    }
}

pub fn tau(chern: ChernClasses) -> Result<QuadraticValue> {
    six_x_bound("tau", chern.c1, BigInt::from(chern.c2))
}

pub fn eta_delta(c1: FirstChern, delta: i128) -> Result<QuadraticValue> {
    six_x_bound("eta", c1, BigInt::from(delta))
}

/// The sharper `eta` for `alpha < 0`:
/// `(sqrt(24 delta + 4 - 3 alpha^2) - (4 + 3 alpha)) / 2` for `c1 = 0`,
/// `(sqrt(96 delta + 13 + 12 alpha - 12 alpha^2) - (3 + 6 alpha)) / 4` for `c1 = -1`.
pub fn eta_alpha_delta(c1: FirstChern, alpha: i64, delta: i128) -> Result<QuadraticValue> {
    if alpha >= 0 {
        return Err(Error::AlphaNotNegative(alpha));
    }
    let (d, a) = (BigInt::from(delta), BigInt::from(alpha));
    let bound = "eta_alpha";
    match c1 {
        FirstChern::Zero => checked(bound, d * 24 + 4 - &a * &a * 3, a * 3 + 4, 2),
        FirstChern::MinusOne => {
            checked(bound, d * 96 + 13 + &a * 12 - &a * &a * 12, a * 6 + 3, 4)
        }
    }
}
