//! Double-double (about 106-bit) floating evaluation, independent of the
//! exact comparison code.

#![allow(dead_code)]

use core::cmp::Ordering;

use num_traits::ToPrimitive;
use rank2p3_core::{QuadraticValue, Rational};
use twofloat::TwoFloat;

pub const GAP: f64 = 1e-6;

fn tf(v: i64) -> TwoFloat {
    TwoFloat::from(v as f64)
}

pub fn eval_qv(r: i64, p: i64, q: i64) -> TwoFloat {
    (tf(r).sqrt() - tf(p)) / tf(q)
}

pub fn eval_rational(num: i64, den: i64) -> TwoFloat {
    tf(num) / tf(den)
}

/// Sign of `lhs - rhs` when the gap is large enough to trust.
pub fn trusted_order(lhs: TwoFloat, rhs: TwoFloat) -> Option<Ordering> {
    let gap = lhs - rhs;
    (gap.abs() > TwoFloat::from(GAP)).then(|| if gap.hi() > 0.0 { Ordering::Greater } else { Ordering::Less })
}

pub fn qv(r: i64, p: i64, q: i64) -> QuadraticValue {
    QuadraticValue::new(r, p, q).unwrap()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num, den).unwrap()
}

/// `floor(v) <= v < floor(v) + 1`, exactly.
pub fn floor_brackets(v: &QuadraticValue) -> bool {
    let f = rank2p3_core::qv_floor(v);
    v.cmp_integer(f.clone()) != Ordering::Less && v.cmp_integer(f + 1) == Ordering::Less
}

/// The floating floor agrees whenever the value is not within `GAP` of an
/// integer.
pub fn floor_matches_float(v: &QuadraticValue, float: TwoFloat) -> bool {
    let f = float.floor();
    let near = (float - f).hi() < GAP || (f + TwoFloat::from(1.0) - float).hi() < GAP;
    near || rank2p3_core::qv_floor(v).to_f64() == Some(f.hi())
}
