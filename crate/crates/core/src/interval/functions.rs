//! Certified enclosures of π, ln 2, exp and the modified Bessel function I₁.

use super::{Dyadic, IntervalReal, Round};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

fn pi_cache() -> &'static Mutex<HashMap<u32, IntervalReal>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntervalReal>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ln2_cache() -> &'static Mutex<HashMap<u32, IntervalReal>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntervalReal>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fixed-point alternating arctan(1/m) scaled by 2^s, with a slack bound on
/// the accumulated floor and truncation error (in units of 2^-s).
fn atan_recip_fixed(m: u64, s: u64) -> (BigInt, u64) {
    let m2 = BigInt::from(m) * BigInt::from(m);
    let one_shifted = BigInt::from(1) << s;
    let mut pow = BigInt::from(m); // m^(2k+1)
    let mut acc = BigInt::zero();
    let mut k = 0u64;
    let mut terms = 0u64;
    loop {
        let den = &pow * BigInt::from(2 * k + 1);
        let term = &one_shifted / den;
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        pow *= &m2;
        k += 1;
        terms += 1;
    }
    // Each floor loses < 1 ulp; the truncation error is below the first
    // omitted term, itself < 1 ulp here.
    (acc, terms + 2)
}

/// Certified enclosure of π with width ≤ 2^(2-prec).
pub fn pi_enclosure(prec: u32) -> IntervalReal {
    if let Some(v) = pi_cache().lock().unwrap().get(&prec) {
        return v.clone();
    }
    let s = prec as u64 + 24;
    // Machin: π = 16·arctan(1/5) − 4·arctan(1/239)
    let (a5, e5) = atan_recip_fixed(5, s);
    let (a239, e239) = atan_recip_fixed(239, s);
    let val = 16 * &a5 - 4 * &a239;
    let slack = BigInt::from(16 * e5 + 4 * e239);
    let lo = Dyadic::new(&val - &slack, -(s as i64)).round(prec, Round::Down);
    let hi = Dyadic::new(&val + &slack, -(s as i64)).round(prec, Round::Up);
    let out = IntervalReal::new(lo, hi, prec);
    pi_cache().lock().unwrap().insert(prec, out.clone());
    out
}

/// Certified enclosure of ln 2.
pub fn ln2_enclosure(prec: u32) -> IntervalReal {
    if let Some(v) = ln2_cache().lock().unwrap().get(&prec) {
        return v.clone();
    }
    let s = prec as u64 + 24;
    // ln 2 = 2·atanh(1/3) = 2·Σ_{k≥0} 1/((2k+1)·3^(2k+1))
    let mut pow = BigInt::from(3);
    let one_shifted = BigInt::from(1) << s;
    let mut acc = BigInt::zero();
    let mut k = 0u64;
    let mut terms = 0u64;
    loop {
        let den = &pow * BigInt::from(2 * k + 1);
        let term = &one_shifted / den;
        if term.is_zero() {
            break;
        }
        acc += &term;
        pow *= 9;
        k += 1;
        terms += 1;
    }
    let val: BigInt = 2 * acc;
    // All terms positive: floors make the sum an underestimate by at most
    // `terms` ulps (times 2); the tail is below one (doubled) ulp.
    let slack = BigInt::from(2 * (terms + 2));
    let lo = Dyadic::new(val.clone(), -(s as i64)).round(prec, Round::Down);
    let hi = Dyadic::new(val + slack, -(s as i64)).round(prec, Round::Up);
    let out = IntervalReal::new(lo, hi, prec);
    ln2_cache().lock().unwrap().insert(prec, out.clone());
    out
}

/// exp of a single dyadic point, as a tight enclosure.
fn exp_point(x: &Dyadic, prec: u32) -> IntervalReal {
    let work = prec + 32;
    if x.is_zero() {
        return IntervalReal::one(prec);
    }
    // Argument reduction x = m·ln2 + r with |r| ≤ ~0.36; m needs no rigour.
    let ln2 = ln2_enclosure(work);
    let m = (x.to_f64_approx() / std::f64::consts::LN_2).round();
    debug_assert!(m.abs() < 9e15);
    let m = m as i64;
    let r = IntervalReal::point(x.clone(), work).sub(&ln2.mul(&IntervalReal::from_i64(m, work)));
    // Taylor sum of exp(r) with a certified remainder.
    let mut sum = IntervalReal::one(work);
    let mut term = IntervalReal::one(work);
    let mut j = 1u64;
    let target = Dyadic::new(BigInt::from(1), -(work as i64));
    loop {
        term = term.mul(&r).div(&IntervalReal::from_u64(j, work)).expect("j > 0");
        sum = sum.add(&term);
        let tmag = term.abs();
        if tmag.hi().cmp_dyadic(&target) == Ordering::Less && j >= 4 {
            // Remainder bound: next |term| · 2 dominates the geometric tail
            // since |r| ≤ 0.4 and j ≥ 4 gives ratio ≤ 0.1.
            let rem = tmag.hi().mul_pow2(1);
            let rem_iv = IntervalReal::new(rem.neg(), rem, work);
            sum = sum.add(&rem_iv);
            break;
        }
        j += 1;
        assert!(j < 10_000, "exp series failed to converge");
    }
    let scaled = IntervalReal::new(sum.lo().mul_pow2(m), sum.hi().mul_pow2(m), work);
    scaled.with_prec(prec)
}

/// Certified enclosure of exp over an interval (exp is increasing).
pub fn exp_iv(x: &IntervalReal) -> IntervalReal {
    let prec = x.prec();
    let lo = exp_point(x.lo(), prec);
    let hi = exp_point(x.hi(), prec);
    IntervalReal::new(lo.lo().clone(), hi.hi().clone(), prec)
}

/// I₁ at a nonnegative dyadic point via the ascending series
/// Σ_{m≥0} (s/2)^(2m+1) / (m!(m+1)!), with a certified geometric tail bound.
fn bessel_i1_point(s: &Dyadic, prec: u32) -> IntervalReal {
    let work = prec + 32;
    if s.is_zero() {
        return IntervalReal::zero(prec);
    }
    let half = IntervalReal::point(s.mul_pow2(-1), work);
    let u = half.mul(&half);
    let mut term = half.clone(); // m = 0 term
    let mut sum = term.clone();
    let mut m = 0u64;
    loop {
        // term_{m+1} = term_m · u / ((m+1)(m+2))
        let den = IntervalReal::from_u64((m + 1) * (m + 2), work);
        term = term.mul(&u).div(&den).expect("positive denominator");
        sum = sum.add(&term);
        m += 1;
        // Ratio of the next term to the current one; later ratios only shrink.
        let ratio_den = Dyadic::from_u64((m + 1) * (m + 2));
        let q = u.hi().div(&ratio_den, 32, Round::Up);
        if q.cmp_dyadic(&Dyadic::new(BigInt::from(1), -1)) == Ordering::Less {
            // tail ≤ term · q/(1−q) ≤ term (since q < 1/2); stop once that
            // is below the target resolution relative to the sum.
            let tail = term.hi().clone();
            let target = sum.lo().mul_pow2(-(work as i64));
            if tail.cmp_dyadic(&target) == Ordering::Less {
                let tail_iv = IntervalReal::new(Dyadic::zero(), tail, work);
                sum = sum.add(&tail_iv);
                break;
            }
        }
        assert!(m < 1_000_000, "bessel series failed to converge");
    }
    sum.with_prec(prec)
}

/// Certified enclosure of the modified Bessel function I₁ on `s ≥ 0`.
///
/// I₁ is strictly increasing on [0, ∞) (all series coefficients are
/// positive), so the enclosure is taken endpoint-wise.
pub fn bessel_i1(s: &IntervalReal) -> Result<IntervalReal> {
    if s.lo().is_negative() {
        return Err(Error::NegativeBessel);
    }
    let prec = s.prec();
    let lo = bessel_i1_point(s.lo(), prec);
    let hi = bessel_i1_point(s.hi(), prec);
    Ok(IntervalReal::new(lo.lo().clone(), hi.hi().clone(), prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use std::str::FromStr;

    fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    /// Bracketing decimals computed with an independent high-precision
    /// evaluation before this module was written.
    #[test]
    fn pi_is_inside_known_bracket() {
        let pi = pi_enclosure(64);
        // enclosure ⊂ (3.14159265358979, 3.14159265358980)
        assert!(pi.lo().cmp_ratio(&rat("314159265358979/100000000000000")) == std::cmp::Ordering::Greater);
        assert!(pi.hi().cmp_ratio(&rat("314159265358980/100000000000000")) == std::cmp::Ordering::Less);
        let w = pi.width();
        let bound = Dyadic::new(BigInt::from(1), -62);
        assert!(w.cmp_dyadic(&bound) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn pi_nesting_and_refinement() {
        let coarse = pi_enclosure(16);
        let fine = pi_enclosure(64);
        assert!(coarse.contains_dyadic(&fine.midpoint()));
        assert!(fine.width().cmp_dyadic(&coarse.width()) == std::cmp::Ordering::Less);
        // monotone refinement across a precision ladder
        let mut last = pi_enclosure(16).width();
        for p in [32, 64, 128, 256, 512] {
            let w = pi_enclosure(p).width();
            assert!(w.cmp_dyadic(&last) != std::cmp::Ordering::Greater);
            last = w;
        }
    }

    #[test]
    fn exp_of_zero_and_one() {
        let e0 = exp_iv(&IntervalReal::zero(96));
        assert!(e0.contains_ratio(&rat("1/1")));
        let bound = Dyadic::new(BigInt::from(1), -94);
        assert!(e0.width().cmp_dyadic(&bound) != std::cmp::Ordering::Greater);

        let e1 = exp_iv(&IntervalReal::one(96));
        // enclosure ⊂ (2.718281828459045235, 2.718281828459045236)
        assert!(e1.lo().cmp_ratio(&rat("2718281828459045235/1000000000000000000")) == std::cmp::Ordering::Greater);
        assert!(e1.hi().cmp_ratio(&rat("2718281828459045236/1000000000000000000")) == std::cmp::Ordering::Less);
    }

    #[test]
    fn exp_of_large_argument() {
        // exp(181) has ~262 binary digits before the point; the reduction
        // must keep relative width small.
        let x = IntervalReal::from_u64(181, 128);
        let e = exp_iv(&x);
        assert!(e.is_certainly_positive());
        assert!(e.rel_width_approx() < 1e-30);
    }

    #[test]
    fn ln2_bracket() {
        let l = ln2_enclosure(80);
        assert!(l.lo().cmp_ratio(&rat("693147180559945/1000000000000000")) == std::cmp::Ordering::Greater);
        assert!(l.hi().cmp_ratio(&rat("693147180559946/1000000000000000")) == std::cmp::Ordering::Less);
    }

    #[test]
    fn bessel_at_zero_and_one() {
        let z = bessel_i1(&IntervalReal::zero(64)).unwrap();
        assert!(z.lo().is_zero());
        assert!(z.hi().to_f64_approx() < 1e-18);

        let one = bessel_i1(&IntervalReal::one(96)).unwrap();
        // I1(1) = 0.5651591039924850272...
        assert!(one.lo().cmp_ratio(&rat("5651591039924850/10000000000000000")) == std::cmp::Ordering::Greater);
        assert!(one.hi().cmp_ratio(&rat("5651591039924851/10000000000000000")) == std::cmp::Ordering::Less);
        // and the coarser spec bracket
        assert!(one.lo().cmp_ratio(&rat("565/1000")) == std::cmp::Ordering::Greater);
        assert!(one.hi().cmp_ratio(&rat("566/1000")) == std::cmp::Ordering::Less);
    }

    #[test]
    fn bessel_monotone_in_argument() {
        let a = bessel_i1(&IntervalReal::from_u64(3, 96)).unwrap();
        let b = bessel_i1(&IntervalReal::from_u64(5, 96)).unwrap();
        assert!(a.certainly_lt(&b));
    }

    #[test]
    fn bessel_rejects_negative() {
        let neg = IntervalReal::from_i64(-1, 64);
        assert!(bessel_i1(&neg).is_err());
    }
}
