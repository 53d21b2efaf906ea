//! Exact elements of ℚ[π]: polynomials in π with rational coefficients.

use crate::interval::{IntervalReal, pi_enclosure};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Σ num[i]·π^i / den, with den > 0, gcd(content(num), den) = 1 and no
/// trailing zero entries. The single shared denominator keeps gcd work out
/// of the inner multiplication loops.
#[derive(Clone, PartialEq, Eq)]
pub struct PiRational {
    num: Vec<BigInt>,
    den: BigInt,
}

impl PiRational {
    pub fn zero() -> Self {
        PiRational { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        PiRational { num: vec![BigInt::one()], den: BigInt::one() }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::new(vec![BigInt::from(v)], BigInt::one())
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::new(vec![r.numer().clone()], r.denom().clone())
    }

    /// c · π^power
    pub fn pi_power(c: &BigRational, power: usize) -> Self {
        let mut num = vec![BigInt::zero(); power + 1];
        num[power] = c.numer().clone();
        Self::new(num, c.denom().clone())
    }

    pub fn new(num: Vec<BigInt>, den: BigInt) -> Self {
        let mut v = PiRational { num, den };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        while matches!(self.num.last(), Some(c) if c.is_zero()) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Degree in π, or None for zero.
    pub fn pi_degree(&self) -> Option<usize> {
        if self.num.is_empty() {
            None
        } else {
            Some(self.num.len() - 1)
        }
    }

    pub fn neg(&self) -> Self {
        PiRational {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let len = self.num.len().max(rhs.num.len());
        let mut num = vec![BigInt::zero(); len];
        for (i, c) in self.num.iter().enumerate() {
            num[i] = c * &rhs.den;
        }
        for (i, c) in rhs.num.iter().enumerate() {
            num[i] += c * &self.den;
        }
        Self::new(num, &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                num[i + j] += a * b;
            }
        }
        Self::new(num, &self.den * &rhs.den)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        Self::new(
            self.num.iter().map(|x| x * c.numer()).collect(),
            &self.den * c.denom(),
        )
    }

    /// The rational coefficient of π^i.
    pub fn coefficient(&self, i: usize) -> BigRational {
        match self.num.get(i) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coefficient(i)).collect()
    }

    /// Positive rational content: gcd of the coefficients, or None for zero.
    pub fn content(&self) -> Option<BigRational> {
        if self.is_zero() {
            return None;
        }
        let mut g = BigInt::zero();
        for c in &self.num {
            g = g.gcd(c);
        }
        Some(BigRational::new(g, self.den.clone()))
    }

    /// Exact division by a rational unit.
    pub fn div_ratio(&self, c: &BigRational) -> Self {
        assert!(!c.is_zero());
        self.scale(&c.recip())
    }

    /// Certified enclosure with π replaced by its `prec`-bit enclosure.
    pub fn eval_interval(&self, pi: &IntervalReal, prec: u32) -> IntervalReal {
        if self.is_zero() {
            return IntervalReal::zero(prec);
        }
        // Horner in π over exact rational coefficients.
        let mut acc = IntervalReal::zero(prec);
        for c in self.num.iter().rev() {
            acc = acc.mul(pi);
            if !c.is_zero() {
                acc = acc.add(&IntervalReal::from_bigint(c, prec));
            }
        }
        acc.div(&IntervalReal::from_bigint(&self.den, prec))
            .expect("positive denominator")
    }

    /// Evaluation at default π enclosure (convenience for tests).
    pub fn eval_default(&self, prec: u32) -> IntervalReal {
        self.eval_interval(&pi_enclosure(prec), prec)
    }

    /// Exact decimal-string forms "p/q" per π power.
    pub fn to_rational_strings(&self) -> Vec<String> {
        self.coefficients().iter().map(|c| format!("{c}")).collect()
    }
}

impl fmt::Debug for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}/{})", self.den)?;
            if i > 0 {
                write!(f, "·π^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    #[test]
    fn arithmetic_and_normalisation() {
        let a = PiRational::pi_power(&rat("2/3"), 2); // (2/3)π²
        let b = PiRational::pi_power(&rat("1/6"), 2); // (1/6)π²
        let s = a.add(&b); // (5/6)π²
        assert_eq!(s.coefficient(2), rat("5/6"));
        assert!(s.coefficient(0).is_zero());
        let p = a.mul(&b); // (1/9)π⁴
        assert_eq!(p.coefficient(4), rat("1/9"));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn content_extraction() {
        let v = PiRational::new(
            vec![BigInt::from(6), BigInt::zero(), BigInt::from(10)],
            BigInt::from(9),
        );
        assert_eq!(v.content().unwrap(), rat("2/9"));
    }

    #[test]
    fn interval_evaluation_contains_exact_pi_square() {
        let v = PiRational::pi_power(&rat("1"), 2); // π²
        let e = v.eval_default(96);
        // π² = 9.8696044010893586...
        assert!(e.lo().cmp_ratio(&rat("98696044010893585/10000000000000000"))
            == std::cmp::Ordering::Greater);
        assert!(e.hi().cmp_ratio(&rat("98696044010893587/10000000000000000"))
            == std::cmp::Ordering::Less);
    }
}
