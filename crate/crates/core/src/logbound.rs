//! Rigorous enclosures of `ln(e·c)` for rational `c ≥ 1`.
//!
//! The constants of the sparsification lemma and the dichotomy engine are
//! integer roundings of expressions like `a·ln(e·c)`. Floating point cannot
//! decide those roundings near integers, so every rounding here is computed
//! from a shrinking rational interval that is guaranteed to contain the true
//! value. `ln(c)` is irrational for rational `c ≠ 1`, so the refinement always
//! terminates in principle; after [`MAX_TERMS`] terms we stop and round in the
//! conservative direction requested by the caller.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

const MAX_TERMS: usize = 512;

/// Rational bounds `lo ≤ ln(x) ≤ hi` for `x ∈ [1, 2)` using
/// `ln x = 2·atanh((x-1)/(x+1))` truncated after `terms` terms.
fn ln_small(x: &Rational, terms: usize) -> (Rational, Rational) {
    let one = Rational::one();
    if *x == one {
        return (Rational::zero(), Rational::zero());
    }
    let y = (x - &one) / &(x + &one);
    let y2 = &y * &y;
    let mut power = y.clone();
    let mut sum = Rational::zero();
    for k in 0..terms {
        sum += &power / &Rational::from_usize(2 * k + 1);
        power *= &y2;
    }
    // Tail: sum_{k>=terms} y^{2k+1}/(2k+1) <= y^{2terms+1} / ((2terms+1)(1-y^2)).
    let tail = &power / &(Rational::from_usize(2 * terms + 1) * (&one - &y2));
    let two = Rational::from_integer(2);
    (&two * &sum, &two * &(sum + tail))
}

/// Rational bounds on `ln(c)` for `c ≥ 1`.
pub fn ln_bounds(c: &Rational, terms: usize) -> (Rational, Rational) {
    assert!(*c >= 1, "ln_bounds expects c >= 1");
    let two = Rational::from_integer(2);
    let mut reduced = c.clone();
    let mut k: usize = 0;
    while reduced >= two {
        reduced = &reduced / &two;
        k += 1;
    }
    let (rlo, rhi) = ln_small(&reduced, terms);
    if k == 0 {
        return (rlo, rhi);
    }
    let (l2lo, l2hi) = ln_small(&two, terms);
    let kk = Rational::from_usize(k);
    (&kk * &l2lo + rlo, &kk * &l2hi + rhi)
}

/// Rational bounds on `ln(e·c) = 1 + ln(c)`.
pub fn ln_ec_bounds(c: &Rational, terms: usize) -> (Rational, Rational) {
    let (lo, hi) = ln_bounds(c, terms);
    (lo + Rational::one(), hi + Rational::one())
}

/// `⌈a·ln(e·c)⌉` for `a ≥ 0`, `c ≥ 1`. If the enclosure never separates from
/// an integer the larger candidate is returned.
pub fn ceil_mul_ln_ec(a: &Rational, c: &Rational) -> BigInt {
    assert!(!a.is_negative());
    if a.is_zero() {
        return BigInt::zero();
    }
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_ec_bounds(c, terms);
        let clo = (a * &lo).ceil();
        let chi = (a * &hi).ceil();
        if clo == chi || terms >= MAX_TERMS {
            return chi;
        }
        terms *= 2;
    }
}

/// `⌊t / (a·ln(e·c))⌋` for `t ≥ 0`, `a > 0`, `c ≥ 1`. If undecided, the
/// smaller candidate is returned.
pub fn floor_div_mul_ln_ec(t: &Rational, a: &Rational, c: &Rational) -> BigInt {
    assert!(a.is_positive());
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_ec_bounds(c, terms);
        // t/(a*hi) <= t/(a ln(ec)) <= t/(a*lo)
        let flo = (t / &(a * &hi)).floor();
        let fhi = (t / &(a * &lo)).floor();
        if flo == fhi || terms >= MAX_TERMS {
            return flo;
        }
        terms *= 2;
    }
}

/// Decides `value ≤ a·ln(e·c)` exactly when `c = 1`, and by refinement
/// otherwise. Undecided comparisons resolve to `false`.
pub fn le_mul_ln_ec(value: &Rational, a: &Rational, c: &Rational) -> bool {
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_ec_bounds(c, terms);
        if *value <= a * &lo {
            return true;
        }
        if *value > a * &hi {
            return false;
        }
        if terms >= MAX_TERMS {
            return false;
        }
        terms *= 2;
    }
}

/// Decides `a·ln(e·c) ≤ value`. Undecided comparisons resolve to `false`.
pub fn mul_ln_ec_le(a: &Rational, c: &Rational, value: &Rational) -> bool {
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_ec_bounds(c, terms);
        if a * &hi <= *value {
            return true;
        }
        if a * &lo > *value {
            return false;
        }
        if terms >= MAX_TERMS {
            return false;
        }
        terms *= 2;
    }
}

pub(crate) fn binomial2(m: usize) -> BigInt {
    let m = BigInt::from(m);
    (&m * (&m - BigInt::one())) / BigInt::from(2)
}
