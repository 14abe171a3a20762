//! Hilbert polynomial, Euler characteristic on P3 and P2, and the
//! closed forms for `h0 - h3` of a non-stable bundle.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Rational;
use crate::bundle::{ChernClasses, FirstChern};
use crate::{Error, Result, Twist};

/// `P(c1, c2; t) = a3 t^3 + a2 t^2 + a1 t + a0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCubic {
    pub a3: Rational,
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

impl HilbertCubic {
    pub fn eval(&self, t: &Rational) -> Rational {
        // Horner
        let mut acc = self.a3.clone();
        acc = &(&acc * t) + &self.a2;
        acc = &(&acc * t) + &self.a1;
        &(&acc * t) + &self.a0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootStructure {
    ThreeReal,
    OneReal,
}

pub fn hilbert_coeffs(chern: ChernClasses) -> HilbertCubic {
    let c1 = Rational::from(chern.c1_value());
    let c2 = Rational::from(chern.c2);
    let q = Rational::frac;
    HilbertCubic {
        a3: q(1, 3),
        a2: &(&c1 * &q(1, 2)) + &Rational::from(2),
        a1: &(&(&c1.pow(2) * &q(1, 2)) + &(&c1 * &Rational::from(2))) - &c2
            + q(11, 3),
        a0: &c1.pow(3) * &q(1, 6) - &(&c1 * &c2) * &q(1, 2) + c1.pow(2) + &c1 * &q(11, 6)
            - &c2 * &Rational::from(2)
            + Rational::from(2),
    }
}

/// `P` in factored form,
/// `1/3 u [u^2 - 1 + 3 c1^2 / 4 - 3 c2]` with `u = t + 2 + c1/2`, evaluated
/// as `w (w^2 - 4 + 3 c1^2 - 12 c2) / 24` with `w = 2u`.
fn chi_factored(chern: ChernClasses, n: Twist) -> Rational {
    let c1 = chern.c1_value();
    let w = BigInt::from(n) * 2 + 4 + c1;
    let inner = &w * &w - 4 + 3 * c1 * c1 - BigInt::from(chern.c2) * 12;
    Rational::new(w * inner, 24).expect("nonzero denominator")
}

/// `chi(E(n))`, exactly. The factored and expanded forms are both evaluated
/// and must agree. The value is an integer whenever `c1 = 0` or `c2` is
/// even; odd `c2` with `c1 = -1` gives half-integers.
pub fn chi_p3(chern: ChernClasses, n: Twist) -> Rational {
    let factored = chi_factored(chern, n);
    let expanded = Rational::new(expanded_times_six(chern, n), 6).expect("nonzero denominator");
    assert_eq!(factored, expanded, "Hilbert polynomial forms disagree at n = {n}");
    factored
}

/// `6 P(t)` from the expanded coefficients, in integers.
fn expanded_times_six(chern: ChernClasses, n: Twist) -> BigInt {
    let c1 = BigInt::from(chern.c1_value());
    let c2 = BigInt::from(chern.c2);
    let t = BigInt::from(n);
    let a2 = &c1 * 3 + 12;
    let a1 = &c1 * &c1 * 3 + &c1 * 12 - &c2 * 6 + 22;
    let a0 = &c1 * &c1 * &c1 - &c1 * &c2 * 3 + &c1 * &c1 * 6 + &c1 * 11 - &c2 * 12 + 12;
    ((&t * 2 + a2) * &t + a1) * &t + a0
}

/// `chi(E(n))` when it is an integer.
pub fn chi_p3_integer(chern: ChernClasses, n: Twist) -> Option<BigInt> {
    chi_p3(chern, n).to_integer()
}

/// `chi(F(n)) = (n + 1)(n + 2 + c1) - c2` on the plane.
pub fn chi_p2(chern: ChernClasses, n: Twist) -> BigInt {
    let n = BigInt::from(n);
    (&n + 1) * (&n + 2 + chern.c1_value()) - chern.c2
}

/// `C(m, 3)`, zero for `m < 3`.
pub fn binom3(m: i64) -> BigInt {
    if m < 3 {
        return BigInt::zero();
    }
    let m = BigInt::from(m);
    &m * (&m - 1) * (&m - 2) / 6
}

/// Shape of the real roots of the Hilbert polynomial, read off from the
/// factored form: the `u = 0` root plus `u^2 = 1 - 3 c1^2 / 4 + 3 c2`.
pub fn cubic_root_structure(chern: ChernClasses) -> RootStructure {
    let c1 = chern.c1_value() as i128;
    let scaled = 4 - 3 * c1 * c1 + 12 * chern.c2 as i128;
    if scaled >= 0 {
        RootStructure::ThreeReal
    } else {
        RootStructure::OneReal
    }
}

/// Twists on which the closed form for `h0 - h3` holds: `alpha - 3 ..= -alpha - c1`.
pub fn nonstable_validity(c1: FirstChern, alpha: i64) -> RangeInclusive<Twist> {
    (alpha - 3)..=(-alpha - c1.value())
}

/// `h0(E(n)) - h3(E(n))` of a non-stable bundle, from its closed form.
///
/// The top twist of the validity range carries a `-1` correction.
pub fn h0_minus_h3_nonstable(c1: FirstChern, alpha: i64, n: Twist) -> Result<BigInt> {
    if alpha > 0 {
        return Err(Error::AlphaPositive(alpha));
    }
    let range = nonstable_validity(c1, alpha);
    if !range.contains(&n) {
        return Err(Error::OutsideValidity {
            n,
            lo: *range.start(),
            hi: *range.end(),
        });
    }
    let a = Rational::from(alpha);
    let value = match c1 {
        FirstChern::Zero => {
            let u = Rational::from(n + 2);
            &(&u * &(&u.pow(2) - &Rational::from(1) + &a.pow(2) * &Rational::from(3)))
                * &Rational::frac(1, 3)
        }
        FirstChern::MinusOne => {
            let u = &Rational::from(n) + &Rational::frac(3, 2);
            let shift = &(&a.pow(2) - &a) * &Rational::from(3);
            &(&u * &(&(&u.pow(2) - &Rational::frac(1, 4)) + &shift)) * &Rational::frac(1, 3)
        }
    };
    let value = value.to_integer().expect("closed form is integral on its range");
    Ok(if n == *range.end() { value - 1 } else { value })
}

/// `h0 - h3` read from the binomial description of sections of a
/// non-stable bundle: `h0(E(n)) = C(n - alpha + 3, 3)` and, by duality,
/// `h3(E(n)) = C(-n - alpha - 1 - c1, 3)`.
pub fn h0_minus_h3_binomial(c1: FirstChern, alpha: i64, n: Twist) -> BigInt {
    binom3(n - alpha + 3) - binom3(-n - alpha - 1 - c1.value())
}

/// Where an identity failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: Twist,
    pub alpha: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

struct Tally {
    name: &'static str,
    checked: u64,
    first_failure: Option<Counterexample>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, holds: bool, n: Twist, alpha: Option<i64>) {
        self.checked += 1;
        if !holds && self.first_failure.is_none() {
            self.first_failure = Some(Counterexample { n, alpha });
        }
    }

    fn finish(self) -> IdentityOutcome {
        IdentityOutcome {
            name: self.name,
            checked: self.checked,
            counterexample: self.first_failure,
        }
    }
}

pub const IDENTITY_NAMES: [&str; 7] = [
    "shifted-square-even",
    "shifted-square-odd",
    "cubic-even",
    "cubic-odd",
    "binomial-expansion",
    "closed-form-c1-0",
    "closed-form-c1-m1",
];

/// Exhaustive check of the polynomial and binomial identities behind the
/// non-stable bounds, over every `n` and `alpha` in range. Failures are
/// reported as data.
pub fn verify_lemma_identities(
    n_range: RangeInclusive<Twist>,
    alpha_range: RangeInclusive<i64>,
) -> IdentityReport {
    let r = |v: i64| Rational::from(v);
    let half = |v: i64| Rational::frac(v, 2);
    let sixth = Rational::frac(1, 6);

    let mut sq_even = Tally::new(IDENTITY_NAMES[0]);
    let mut sq_odd = Tally::new(IDENTITY_NAMES[1]);
    let mut cubic_even = Tally::new(IDENTITY_NAMES[2]);
    let mut cubic_odd = Tally::new(IDENTITY_NAMES[3]);
    let mut expansion = Tally::new(IDENTITY_NAMES[4]);
    let mut closed_even = Tally::new(IDENTITY_NAMES[5]);
    let mut closed_odd = Tally::new(IDENTITY_NAMES[6]);

    for n in n_range.clone() {
        let triple = r(n + 3) * r(n + 2) * r(n + 1);
        let lhs = &triple * &sixth;

        // (n+3)(n+1) = (n+2)^2 - 1
        sq_even.record(r(n + 3) * r(n + 1) == r(n + 2).pow(2) - r(1), n, None);
        // (n+2)(n+1) = (n + 3/2)^2 - 1/4
        let u = half(2 * n + 3);
        sq_odd.record(r(n + 2) * r(n + 1) == u.pow(2) - Rational::frac(1, 4), n, None);
        // 1/6 (n+3)(n+2)(n+1) = 1/6 (n+2)[(n+2)^2 - 1]
        let rhs = &(r(n + 2) * (r(n + 2).pow(2) - r(1))) * &sixth;
        cubic_even.record(lhs == rhs, n, None);
        // ... = 1/6 (n+3/2)[(n+3/2)^2 + 2] + 1/16 (4n^2 + 6n - 1)
        let rhs = &(&u * &(u.pow(2) + r(2))) * &sixth
            + Rational::frac(4 * n * n + 6 * n - 1, 16);
        cubic_odd.record(lhs == rhs, n, None);

        for alpha in alpha_range.clone() {
            if n >= alpha - 3 {
                let a = r(alpha);
                let quad = &(&a * &r(n * n)) * &half(1) - &(&a.pow(2) * &r(n)) * &half(1)
                    + &(&a * &r(n)) * &r(2);
                let cub = &a.pow(3) * &sixth - a.pow(2) + &a * &Rational::frac(11, 6);
                let rhs = &lhs - &quad - cub;
                expansion.record(Rational::from(binom3(n - alpha + 3)) == rhs, n, Some(alpha));
            }
            if alpha <= 0 {
                for (c1, tally) in [
                    (FirstChern::Zero, &mut closed_even),
                    (FirstChern::MinusOne, &mut closed_odd),
                ] {
                    if nonstable_validity(c1, alpha).contains(&n) {
                        let holds = h0_minus_h3_nonstable(c1, alpha, n).ok()
                            == Some(h0_minus_h3_binomial(c1, alpha, n));
                        tally.record(holds, n, Some(alpha));
                    }
                }
            }
        }
    }

    IdentityReport {
        outcomes: [
            sq_even, sq_odd, cubic_even, cubic_odd, expansion, closed_even, closed_odd,
        ]
        .into_iter()
        .map(Tally::finish)
        .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chern(c1: i64, c2: i64) -> ChernClasses {
        ChernClasses::new(c1, c2).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn coefficient_examples() {
        let h = hilbert_coeffs(chern(0, 0));
        assert_eq!([h.a3, h.a2, h.a1, h.a0], [q(1, 3), q(2, 1), q(11, 3), q(2, 1)]);
        let h = hilbert_coeffs(chern(0, 2));
        assert_eq!([h.a3, h.a2, h.a1, h.a0], [q(1, 3), q(2, 1), q(5, 3), q(-2, 1)]);
        // c1 = -1, c2 = 0: a0 = -1/6 + 1 - 11/6 + 2 = 1
        let h = hilbert_coeffs(chern(-1, 0));
        assert_eq!(
            [h.a3.clone(), h.a2.clone(), h.a1.clone(), h.a0.clone()],
            [q(1, 3), q(3, 2), q(13, 6), q(1, 1)]
        );
        // cross-check against the factored form at n = 0..3
        for n in 0..=3 {
            assert_eq!(h.eval(&Rational::from(n)), chi_p3(chern(-1, 0), n));
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_p3_integer(chern(0, 17), -2), Some(int(0)));
        // alternating sum of the c1 = -1, c2 = 2 table at n = -1, with h2, h3
        // read at the dual twist -2: 0 - 1 + 0 - 0
        assert_eq!(chi_p3_integer(chern(-1, 2), -1), Some(int(-1)));
        // hilbert_coeffs(0, 4) at t = 3: 9 + 18 + (11/3 - 4) 3 + (2 - 8) = 20
        assert_eq!(chi_p3_integer(chern(0, 4), 3), Some(int(20)));
    }

    #[test]
    fn plane_chi_examples() {
        assert_eq!(chi_p2(chern(0, 0), 0), int(2));
        assert_eq!(chi_p2(chern(-1, 0), 3), int(16));
        assert_eq!(chi_p2(chern(0, 4), 1), int(2));
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom3(3), int(1));
        assert_eq!(binom3(2), int(0));
        assert_eq!(binom3(7), int(35));
        assert_eq!(binom3(-5), int(0));
    }

    #[test]
    fn root_structure_examples() {
        assert_eq!(cubic_root_structure(chern(0, 4)), RootStructure::ThreeReal);
        assert_eq!(cubic_root_structure(chern(0, -1)), RootStructure::OneReal);
        assert_eq!(cubic_root_structure(chern(-1, 0)), RootStructure::ThreeReal);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(h0_minus_h3_nonstable(FirstChern::Zero, 0, -2).unwrap(), int(0));
        // C(6,3) - C(2,3) = 20
        assert_eq!(h0_minus_h3_nonstable(FirstChern::Zero, -3, 0).unwrap(), int(20));
        // top twist n = -alpha = 1: C(5,3) - 0 = 10
        assert_eq!(h0_minus_h3_nonstable(FirstChern::Zero, -1, 1).unwrap(), int(10));
    }

    #[test]
    fn closed_form_rejects_out_of_range() {
        assert_eq!(
            h0_minus_h3_nonstable(FirstChern::Zero, -1, 2),
            Err(Error::OutsideValidity { n: 2, lo: -4, hi: 1 })
        );
        assert_eq!(
            h0_minus_h3_nonstable(FirstChern::MinusOne, -1, -5),
            Err(Error::OutsideValidity { n: -5, lo: -4, hi: 2 })
        );
        assert_eq!(h0_minus_h3_nonstable(FirstChern::Zero, 1, 0), Err(Error::AlphaPositive(1)));
    }

    #[test]
    fn closed_forms_match_binomials() {
        for c1 in FirstChern::ALL {
            for alpha in -10..=0 {
                for n in nonstable_validity(c1, alpha) {
                    assert_eq!(
                        h0_minus_h3_nonstable(c1, alpha, n).unwrap(),
                        h0_minus_h3_binomial(c1, alpha, n),
                        "c1 = {c1}, alpha = {alpha}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(verify_lemma_identities(-10..=10, -5..=0).all_pass());
        let single = verify_lemma_identities(0..=0, 0..=0);
        assert!(single.all_pass());
        assert_eq!(single.get("binomial-expansion").unwrap().checked, 1);
        assert!(verify_lemma_identities(-3..=-3, 0..=0).get("cubic-even").unwrap().passed());
    }

    #[test]
    fn identity_sweep() {
        let report = verify_lemma_identities(-20..=20, -10..=0);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.outcomes.len(), IDENTITY_NAMES.len());
    }

    #[test]
    fn chi_integrality_and_symmetry() {
        for c1 in FirstChern::ALL {
            for c2 in -50..=50 {
                let ch = ChernClasses::normalized(c1, c2);
                for n in -50..=50 {
                    let dual = crate::bundle::serre_dual_twist(c1, n);
                    assert_eq!(chi_p3(ch, n), -chi_p3(ch, dual));
                    let integral = chi_p3_integer(ch, n).is_some();
                    assert_eq!(integral, ch.diagnostic().is_none(), "c1 = {c1}, c2 = {c2}, n = {n}");
                }
                let zero = Rational::zero();
                match c1 {
                    FirstChern::Zero => assert_eq!(chi_p3(ch, -2), zero),
                    FirstChern::MinusOne => assert_eq!(chi_p3(ch, -2) + chi_p3(ch, -1), zero),
                }
            }
        }
    }

    #[test]
    fn odd_c2_with_odd_c1_is_half_integral() {
        // chi(E) = 1 - 3 c2 / 2 for c1 = -1
        assert_eq!(chi_p3(chern(-1, 1), 0), Rational::new(-1, 2).unwrap());
        assert_eq!(chi_p3_integer(chern(-1, 1), 0), None);
    }

    #[test]
    fn root_structure_matches_sign_of_c2() {
        for c1 in FirstChern::ALL {
            for c2 in -50..=50 {
                let three = cubic_root_structure(ChernClasses::normalized(c1, c2))
                    == RootStructure::ThreeReal;
                assert_eq!(three, c2 >= 0);
            }
        }
    }
}
