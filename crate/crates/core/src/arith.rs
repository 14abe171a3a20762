//! Exact integer, rational and quadratic-irrational arithmetic.
//!
//! Nothing in here touches floating point except [`QuadraticValue::approx`],
//! which exists for display.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest `s` with `s * s <= m`.
pub fn isqrt(m: &BigInt) -> Result<BigInt> {
    if m.is_negative() {
        return Err(Error::NegativeSqrt);
    }
    Ok(m.sqrt())
}

/// An exact rational number, always stored reduced with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// `num / den` for a denominator known to be non-zero.
    pub(crate) fn frac(num: i64, den: i64) -> Self {
        debug_assert!(den != 0);
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, e))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// The real number `(sqrt(radicand) - offset) / denom`.
///
/// The form is not reduced; two values denoting the same number compare
/// equal under [`QuadraticValue::cmp_value`] even if their fields differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    radicand: BigInt,
    offset: BigInt,
    denom: BigInt,
}

impl QuadraticValue {
    pub fn new(
        radicand: impl Into<BigInt>,
        offset: impl Into<BigInt>,
        denom: impl Into<BigInt>,
    ) -> Result<Self> {
        let (radicand, offset, denom) = (radicand.into(), offset.into(), denom.into());
        if radicand.is_negative() {
            return Err(Error::InvalidQuadratic("negative radicand"));
        }
        if !denom.is_positive() {
            return Err(Error::InvalidQuadratic("denominator must be positive"));
        }
        Ok(QuadraticValue {
            radicand,
            offset,
            denom,
        })
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    /// Exact ordering of `self` against `r`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // (sqrt(R) - p) / q  vs  a / b   <=>   sqrt(R)  vs  (p b + q a) / b
        let (a, b) = (r.numer(), r.denom());
        let t = &self.offset * b + &self.denom * a;
        if t.is_negative() {
            return Ordering::Greater;
        }
        (&self.radicand * b * b).cmp(&(&t * &t))
    }

    pub fn cmp_integer(&self, n: impl Into<BigInt>) -> Ordering {
        self.cmp_rational(&Rational::integer(n))
    }

    /// Exact ordering of two quadratic values.
    pub fn cmp_value(&self, other: &QuadraticValue) -> Ordering {
        // (sqrt(R1) - p1)/q1 vs (sqrt(R2) - p2)/q2
        // <=> q2 sqrt(R1) - q1 sqrt(R2)  vs  p1 q2 - p2 q1 =: c
        // with x = q2 sqrt(R1) >= 0, y = q1 sqrt(R2) >= 0.
        let x2 = &self.radicand * &other.denom * &other.denom;
        let y2 = &other.radicand * &self.denom * &self.denom;
        let c = &self.offset * &other.denom - &other.offset * &self.denom;
        cmp_sqrt_diff(&x2, &y2, &c)
    }

    /// Unique `k` with `k <= self < k + 1`.
    pub fn floor(&self) -> BigInt {
        // sqrt(R) lies in [s, s+1) with s = isqrt(R); when R is not a square
        // no integer multiple of q falls strictly inside (s - p, s + 1 - p),
        // so the floor is that of (s - p) / q in every case.
        let s = self.radicand.sqrt();
        (s - &self.offset).div_floor(&self.denom)
    }

    /// Smallest `k` with `self <= k`.
    pub fn ceil(&self) -> BigInt {
        let f = self.floor();
        if self.is_integer() {
            f
        } else {
            f + 1
        }
    }

    pub fn is_integer(&self) -> bool {
        self.to_integer().is_some()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let s = self.radicand.sqrt();
        if &s * &s != self.radicand {
            return None;
        }
        let (k, rem) = (s - &self.offset).div_mod_floor(&self.denom);
        rem.is_zero().then_some(k)
    }

    /// Largest integer `n` with `n < self`.
    pub fn max_below(&self) -> BigInt {
        self.ceil() - 1
    }

    /// Largest integer `n` with `n <= self`.
    pub fn max_at_most(&self) -> BigInt {
        self.floor()
    }

    /// Floating approximation, for display only.
    pub fn approx(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::INFINITY);
        let p = self.offset.to_f64().unwrap_or(f64::NAN);
        let q = self.denom.to_f64().unwrap_or(f64::NAN);
        (libm_sqrt(r) - p) / q
    }

    /// Pulls square factors out of the radicand and cancels common factors,
    /// giving `(k * sqrt(r) - p) / q`. Trial division stops at 10^4, which
    /// only matters for display.
    fn simplified(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let mut k = BigInt::one();
        let mut r = self.radicand.clone();
        if !r.is_zero() {
            let s = r.sqrt();
            if &s * &s == r {
                k = s;
                r = BigInt::one();
            } else {
                let mut d = BigInt::from(2u32);
                let limit = BigInt::from(10_000u32);
                while &d * &d <= r && d <= limit {
                    let dd = &d * &d;
                    while (&r % &dd).is_zero() {
                        r /= &dd;
                        k *= &d;
                    }
                    d += 1;
                }
            }
        }
        let g = k.gcd(&self.offset).gcd(&self.denom);
        (&k / &g, r, &self.offset / &g, &self.denom / &g)
    }
}

/// Compares `x - y` with `c`, where `x = sqrt(x2)` and `y = sqrt(y2)` are
/// non-negative reals given by their squares.
fn cmp_sqrt_diff(x2: &BigInt, y2: &BigInt, c: &BigInt) -> Ordering {
    // x - y vs c  <=>  x vs y + c
    if !c.is_negative() {
        // y + c >= 0: compare x^2 with (y + c)^2 = y2 + c^2 + 2 c y
        // x2 - y2 - c^2  vs  2 c y
        let lhs = x2 - y2 - c * c;
        let two_c = c * 2;
        cmp_int_vs_scaled_sqrt(&lhs, &two_c, y2)
    } else {
        // c < 0: x - y vs c  <=>  x + |c| vs y, both sides non-negative
        // (x + |c|)^2 vs y2  <=>  x2 + c^2 - y2  vs  -2 |c| x = 2 c x
        let lhs = x2 + c * c - y2;
        let two_c = c * 2;
        cmp_int_vs_scaled_sqrt(&lhs, &two_c, x2)
    }
}

/// Ordering of `a` versus `m * sqrt(s)` for `s >= 0`.
fn cmp_int_vs_scaled_sqrt(a: &BigInt, m: &BigInt, s: &BigInt) -> Ordering {
    let rhs_sign = if m.is_zero() || s.is_zero() {
        Ordering::Equal
    } else if m.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    let lhs_sign = a.sign().cmp(&num_bigint::Sign::NoSign);
    if lhs_sign != rhs_sign {
        return lhs_sign.cmp(&rhs_sign);
    }
    match lhs_sign {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => (a * a).cmp(&(m * m * s)),
        Ordering::Less => (m * m * s).cmp(&(a * a)),
    }
}

fn libm_sqrt(x: f64) -> f64 {
    // no_std has no f64::sqrt; Newton from a bit-level estimate.
    if x <= 0.0 || x.is_nan() || x.is_infinite() {
        return if x == 0.0 { 0.0 } else { x.max(0.0) };
    }
    let mut y = f64::from_bits((x.to_bits() >> 1) + (1023u64 << 51));
    for _ in 0..8 {
        y = 0.5 * (y + x / y);
    }
    y
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.to_integer() {
            return write!(f, "{k}");
        }
        let (k, r, p, q) = self.simplified();
        let head = if k.is_one() {
            alloc::format!("sqrt({r})")
        } else {
            alloc::format!("{k}*sqrt({r})")
        };
        let body = match p.sign() {
            num_bigint::Sign::Plus => alloc::format!("{head}-{p}"),
            num_bigint::Sign::Minus => alloc::format!("{head}+{}", -p),
            num_bigint::Sign::NoSign => head,
        };
        if q.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{q}")
        }
    }
}

pub fn qv_cmp(v: &QuadraticValue, r: &Rational) -> Ordering {
    v.cmp_rational(r)
}

pub fn qv_floor(v: &QuadraticValue) -> BigInt {
    v.floor()
}

pub fn qv_is_integer(v: &QuadraticValue) -> bool {
    v.is_integer()
}
