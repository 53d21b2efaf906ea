//! Exact dyadic rationals m·2^e with directed rounding to a bit precision.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction for operations that cannot be exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// An exact dyadic rational `mant * 2^exp`.
///
/// Normalised so that `mant` is odd or zero (zero has `exp = 0`). Addition
/// and multiplication are exact; rounding happens only through
/// [`Dyadic::round`] and the directed division/sqrt helpers.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::new(v, 0)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::new(BigInt::from(v), 0)
    }

    pub fn from_u64(v: u64) -> Self {
        Self::new(BigInt::from(v), 0)
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Self::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Some(Self::new(BigInt::from(sign) * BigInt::from(mant), exp))
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.magnitude().bits()
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= rhs.exp { (self, rhs) } else { (rhs, self) };
        let shifted = &hi.mant << (hi.exp - lo.exp) as u64;
        Self::new(&lo.mant + shifted, lo.exp)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let drop = bits - prec as u64;
        // Truncate the magnitude toward zero, then fix up per direction.
        let mag = self.mant.magnitude();
        let q = mag >> drop;
        let exact = (&q << drop) == *mag;
        let neg = self.mant.is_negative();
        let mut q = BigInt::from(q);
        if neg {
            q = -q;
        }
        if !exact {
            match (dir, neg) {
                (Round::Down, true) => q -= 1,
                (Round::Up, false) => q += 1,
                _ => {}
            }
        }
        Self::new(q, self.exp + drop as i64)
    }

    /// Directed quotient `self / rhs` with `prec` significant bits.
    pub fn div(&self, rhs: &Self, prec: u32, dir: Round) -> Self {
        assert!(!rhs.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        // Scale the numerator so the integer quotient carries prec+2 bits.
        let shift = prec as i64 + 2 + rhs.bits() as i64 - self.bits() as i64;
        let shift = shift.max(0) as u64;
        let num = &self.mant << shift;
        let (mut q, r) = num.div_rem(&rhs.mant);
        // div_rem truncates toward zero.
        if !r.is_zero() {
            let negative = q.is_negative() || (q.is_zero() && (self.mant.sign() != rhs.mant.sign()));
            match (dir, negative) {
                (Round::Down, true) => q -= 1,
                (Round::Up, false) => q += 1,
                _ => {}
            }
        }
        Self::new(q, self.exp - rhs.exp - shift as i64).round(prec + 2, dir)
    }

    /// Directed square root with `prec` significant bits. Requires `self >= 0`.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "dyadic sqrt of negative");
        if self.is_zero() {
            return Self::zero();
        }
        // Write self = m * 2^(2t) with m carrying >= 2*prec+4 bits.
        let want = 2 * prec as i64 + 4;
        let extra = want - self.bits() as i64;
        let mut shift = extra.max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = self.mant.magnitude() << shift as u64;
        let t = (self.exp - shift) / 2;
        let r = m.sqrt();
        let exact = &r * &r == m;
        let r = match (dir, exact) {
            (Round::Up, false) => r + BigUint::one(),
            _ => r,
        };
        Self::new(BigInt::from(r), t).round(prec + 2, dir)
    }

    pub fn cmp_dyadic(&self, rhs: &Self) -> Ordering {
        match (self.mant.sign(), rhs.mant.sign()) {
            (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) | (Sign::NoSign, Sign::Plus) => {
                return Ordering::Less
            }
            (Sign::Plus, Sign::NoSign) | (Sign::Plus, Sign::Minus) | (Sign::NoSign, Sign::Minus) => {
                return Ordering::Greater
            }
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            _ => {}
        }
        let d = self.sub(rhs);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact comparison against an arbitrary rational.
    pub fn cmp_ratio(&self, r: &BigRational) -> Ordering {
        // self = m*2^e  vs  p/q  (q > 0):  m*2^e*q  vs  p
        let (p, q) = (r.numer(), r.denom());
        let lhs = if self.exp >= 0 {
            (&self.mant << self.exp as u64) * q
        } else {
            &self.mant * q
        };
        let rhs = if self.exp >= 0 {
            p.clone()
        } else {
            p << (-self.exp) as u64
        };
        lhs.cmp(&rhs)
    }

    pub fn cmp_bigint(&self, v: &BigInt) -> Ordering {
        if self.exp >= 0 {
            (&self.mant << self.exp as u64).cmp(v)
        } else {
            self.mant.cmp(&(v << (-self.exp) as u64))
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Lossy conversion for magnitude estimates; saturates on overflow.
    pub fn to_f64_approx(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits() as i64;
        let keep = 64.min(bits);
        let drop = bits - keep;
        let top = (self.mant.magnitude() >> drop as u64).to_u64_digits();
        let top = *top.first().unwrap_or(&0) as f64;
        let sign = if self.is_negative() { -1.0 } else { 1.0 };
        let e = (self.exp + drop).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
        sign * top * 2f64.powi(e)
    }

    /// Decimal rendering with `digits` significant digits (not exact).
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let r = self.to_rational();
        let neg = r.is_negative();
        let r = r.abs();
        // scale into [10^(digits-1), 10^digits)
        let ten = BigInt::from(10);
        let mut scale10: i64 = 0;
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        while num < den {
            num *= &ten;
            scale10 -= 1;
        }
        while num >= &den * &ten {
            den *= &ten;
            scale10 += 1;
        }
        // now 1 <= num/den < 10; emit digits
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        let mut n = num;
        for i in 0..digits {
            let (q, r2) = n.div_rem(&den);
            out.push_str(&q.to_string());
            if i == 0 {
                out.push('.');
            }
            n = r2 * &ten;
        }
        out.push('e');
        out.push_str(&scale10.to_string());
        out
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}
