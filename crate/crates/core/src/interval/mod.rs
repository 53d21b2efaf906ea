//! Rigorous interval arithmetic with exact dyadic endpoints.
//!
//! Every operation returns an enclosure of the exact result: endpoints are
//! rounded outward to the working precision. Endpoints are [`Dyadic`]
//! rationals, so the containment claims are independent of any notion of
//! hardware rounding mode.

mod dyadic;
mod functions;

pub use dyadic::{Dyadic, Round};
pub use functions::{bessel_i1, exp_iv, ln2_enclosure, pi_enclosure};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::cmp::Ordering;
use std::fmt;

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 128;
/// Hard cap for the auto-refinement loops; beyond this, comparisons report
/// [`Error::PrecisionCap`].
pub const PREC_CAP: u32 = 4096;

/// A closed interval `[lo, hi]` of exact dyadic rationals together with the
/// working precision used for outward rounding.
#[derive(Clone, PartialEq)]
pub struct IntervalReal {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl IntervalReal {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        debug_assert!(lo.cmp_dyadic(&hi) != Ordering::Greater, "inverted interval");
        IntervalReal { lo, hi, prec }
    }

    pub fn point(v: Dyadic, prec: u32) -> Self {
        IntervalReal { lo: v.clone(), hi: v, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::point(Dyadic::one(), prec)
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Self::point(Dyadic::from_u64(v), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::point(Dyadic::from_i64(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::point(Dyadic::from_bigint(v.clone()), prec)
    }

    /// Enclosure of an exact rational, outward-rounded to `prec` bits.
    pub fn from_ratio(r: &BigRational, prec: u32) -> Self {
        let num = Dyadic::from_bigint(r.numer().clone());
        let den = Dyadic::from_bigint(r.denom().clone());
        IntervalReal {
            lo: num.div(&den, prec, Round::Down),
            hi: num.div(&den, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    /// width / max(|lo|, |hi|), as a loose f64 (diagnostics only).
    pub fn rel_width_approx(&self) -> f64 {
        let w = self.width().to_f64_approx();
        let m = self.lo.abs().to_f64_approx().max(self.hi.abs().to_f64_approx());
        if m == 0.0 {
            w
        } else {
            w / m
        }
    }

    fn out(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        IntervalReal {
            lo: lo.round(prec, Round::Down),
            hi: hi.round(prec, Round::Up),
            prec,
        }
    }

    fn join_prec(&self, rhs: &Self) -> u32 {
        self.prec.min(rhs.prec)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.join_prec(rhs);
        Self::out(self.lo.add(&rhs.lo), self.hi.add(&rhs.hi), p)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.join_prec(rhs);
        Self::out(self.lo.sub(&rhs.hi), self.hi.sub(&rhs.lo), p)
    }

    pub fn neg(&self) -> Self {
        IntervalReal { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.join_prec(rhs);
        let candidates = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c.cmp_dyadic(&lo) == Ordering::Less {
                lo = c.clone();
            }
            if c.cmp_dyadic(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        Self::out(lo, hi, p)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if !rhs.lo.is_positive() && !rhs.hi.is_negative() {
            return Err(Error::DivisionByZero);
        }
        let p = self.join_prec(rhs);
        let cands = [
            self.lo.div(&rhs.lo, p, Round::Down),
            self.lo.div(&rhs.hi, p, Round::Down),
            self.hi.div(&rhs.lo, p, Round::Down),
            self.hi.div(&rhs.hi, p, Round::Down),
        ];
        let cands_up = [
            self.lo.div(&rhs.lo, p, Round::Up),
            self.lo.div(&rhs.hi, p, Round::Up),
            self.hi.div(&rhs.lo, p, Round::Up),
            self.hi.div(&rhs.hi, p, Round::Up),
        ];
        let mut lo = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp_dyadic(&lo) == Ordering::Less {
                lo = c.clone();
            }
        }
        let mut hi = cands_up[0].clone();
        for c in &cands_up[1..] {
            if c.cmp_dyadic(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        Ok(IntervalReal { lo, hi, prec: p })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.prec).div(self)
    }

    /// Integer power, exact endpoint analysis (handles even powers of
    /// sign-straddling intervals).
    pub fn pow_i64(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.pow_i64(-k)?.recip();
        }
        if k == 0 {
            return Ok(Self::one(self.prec));
        }
        let pl = pow_dyadic(&self.lo, k as u64);
        let ph = pow_dyadic(&self.hi, k as u64);
        let (lo, hi) = if k % 2 == 1 {
            (pl, ph)
        } else if !self.lo.is_negative() {
            (pl, ph)
        } else if !self.hi.is_positive() {
            (ph, pl)
        } else {
            // straddles zero, even power
            let m = if pl.cmp_dyadic(&ph) == Ordering::Greater { pl } else { ph };
            (Dyadic::zero(), m)
        };
        Ok(Self::out(lo, hi, self.prec))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        Ok(IntervalReal {
            lo: self.lo.sqrt(self.prec, Round::Down),
            hi: self.hi.sqrt(self.prec, Round::Up),
            prec: self.prec,
        })
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = if self.lo.abs().cmp_dyadic(&self.hi.abs()) == Ordering::Greater {
                self.lo.abs()
            } else {
                self.hi.abs()
            };
            IntervalReal { lo: Dyadic::zero(), hi: m, prec: self.prec }
        }
    }

    pub fn scale_u64(&self, c: u64) -> Self {
        self.mul(&Self::from_u64(c, self.prec))
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        IntervalReal {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn contains_ratio(&self, r: &BigRational) -> bool {
        self.lo.cmp_ratio(r) != Ordering::Greater && self.hi.cmp_ratio(r) != Ordering::Less
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        self.lo.cmp_dyadic(d) != Ordering::Greater && self.hi.cmp_dyadic(d) != Ordering::Less
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo.cmp_dyadic(&other.lo) != Ordering::Greater
            && self.hi.cmp_dyadic(&other.hi) != Ordering::Less
    }

    /// Certainly positive: the whole interval lies in (0, ∞).
    pub fn is_certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// `self < rhs` for every pair of points.
    pub fn certainly_lt(&self, rhs: &Self) -> bool {
        self.hi.cmp_dyadic(&rhs.lo) == Ordering::Less
    }

    pub fn certainly_gt(&self, rhs: &Self) -> bool {
        self.lo.cmp_dyadic(&rhs.hi) == Ordering::Greater
    }

    /// Midpoint as a dyadic (not outward-rounded; diagnostics and splitting).
    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// Decimal rendering `[lo, hi]`.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!("[{}, {}]", self.lo.to_decimal(digits), self.hi.to_decimal(digits))
    }
}

fn pow_dyadic(base: &Dyadic, mut k: u64) -> Dyadic {
    let mut acc = Dyadic::one();
    let mut b = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&b);
        }
        k >>= 1;
        if k > 0 {
            b = b.mul(&b);
        }
    }
    acc
}

impl fmt::Debug for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(12))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn iv(lo: f64, hi: f64) -> IntervalReal {
        IntervalReal::new(
            Dyadic::from_f64(lo).unwrap(),
            Dyadic::from_f64(hi).unwrap(),
            64,
        )
    }

    #[test]
    fn mul_handles_signs() {
        let a = iv(-2.0, 3.0);
        let b = iv(-1.0, 4.0);
        let p = a.mul(&b);
        assert_eq!(p.lo().to_f64_approx(), -8.0);
        assert_eq!(p.hi().to_f64_approx(), 12.0);
    }

    #[test]
    fn div_rejects_zero_straddle() {
        let a = iv(1.0, 2.0);
        let b = iv(-1.0, 1.0);
        assert!(matches!(a.div(&b), Err(Error::DivisionByZero)));
    }

    #[test]
    fn even_power_of_straddling_interval() {
        let a = iv(-3.0, 2.0);
        let p = a.pow_i64(2).unwrap();
        assert_eq!(p.lo().to_f64_approx(), 0.0);
        assert_eq!(p.hi().to_f64_approx(), 9.0);
    }

    #[test]
    fn rational_enclosure_contains_value() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let e = IntervalReal::from_ratio(&r, 64);
        assert!(e.contains_ratio(&r));
        assert!(e.width().to_f64_approx() < 1e-18);
    }

    #[test]
    fn sqrt_of_point_four() {
        let four = IntervalReal::from_u64(4, 64);
        let s = four.sqrt().unwrap();
        let two = BigRational::from(BigInt::from(2));
        assert!(s.contains_ratio(&two));
    }
}
