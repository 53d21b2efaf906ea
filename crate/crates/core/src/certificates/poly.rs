//! Polynomials and Laurent polynomials in one variable over ℚ[π].

use super::pi_rational::PiRational;
use crate::interval::IntervalReal;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Dense polynomial; no trailing zero coefficients.
#[derive(Clone, PartialEq)]
pub struct PiPoly {
    coeffs: Vec<PiRational>,
}

impl PiPoly {
    pub fn zero() -> Self {
        PiPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: PiRational) -> Self {
        Self::new(vec![c])
    }

    pub fn new(coeffs: Vec<PiRational>) -> Self {
        let mut p = PiPoly { coeffs };
        p.normalize();
        p
    }

    /// Coefficients listed from x^0 upward.
    pub fn from_coeffs(coeffs: Vec<PiRational>) -> Self {
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficient(&self, i: usize) -> PiRational {
        self.coeffs.get(i).cloned().unwrap_or_else(PiRational::zero)
    }

    pub fn coefficients(&self) -> &[PiRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&PiRational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        PiPoly { coeffs: self.coeffs.iter().map(PiRational::neg).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![PiRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PiPoly { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn scale_pi(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PiPoly { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(PiRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Positive rational content over all coefficients; None for zero.
    pub fn content(&self) -> Option<BigRational> {
        let mut acc: Option<BigRational> = None;
        for c in &self.coeffs {
            if let Some(cc) = c.content() {
                acc = Some(match acc {
                    None => cc,
                    Some(prev) => rational_gcd(&prev, &cc),
                });
            }
        }
        acc
    }

    /// (content, primitive part) with the primitive part's leading rational
    /// coefficient positive.
    pub fn primitive(&self) -> Option<(BigRational, PiPoly)> {
        let mut content = self.content()?;
        // sign convention: make the highest π-power rational of the leading
        // coefficient positive
        let lead = self.leading().expect("nonzero");
        let top = lead.coefficient(lead.pi_degree().expect("nonzero"));
        if top.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Some((content, self.scale(&inv)))
    }

    /// Certified enclosure of the value at an interval point (Horner).
    pub fn eval_interval(&self, x: &IntervalReal, pi: &IntervalReal, prec: u32) -> IntervalReal {
        let mut acc = IntervalReal::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            if !c.is_zero() {
                acc = acc.add(&c.eval_interval(pi, prec));
            }
        }
        acc
    }

    /// Horner evaluation over already-substituted interval coefficients.
    pub fn eval_with_coeffs(coeffs: &[IntervalReal], x: &IntervalReal, prec: u32) -> IntervalReal {
        let mut acc = IntervalReal::zero(prec);
        for c in coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    use num_integer::Integer;
    // gcd(p/q, r/s) = gcd(p·s, r·q)/(q·s), reduced
    let n = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    BigRational::new(n, a.denom() * b.denom())
}

impl fmt::Debug for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{c:?}]·x^{i}")?;
        }
        Ok(())
    }
}

/// Laurent polynomial: coefficients for x^min .. x^(min+len−1).
#[derive(Clone, PartialEq)]
pub struct PiLaurent {
    min: i64,
    coeffs: Vec<PiRational>,
}

impl PiLaurent {
    pub fn zero() -> Self {
        PiLaurent { min: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: PiRational) -> Self {
        Self::new(0, vec![c])
    }

    pub fn one() -> Self {
        Self::constant(PiRational::one())
    }

    /// c · x^power
    pub fn monomial(c: PiRational, power: i64) -> Self {
        Self::new(power, vec![c])
    }

    pub fn new(min: i64, coeffs: Vec<PiRational>) -> Self {
        let mut l = PiLaurent { min, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min)
        }
    }

    pub fn max_degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coefficient(&self, power: i64) -> PiRational {
        if power < self.min {
            return PiRational::zero();
        }
        self.coeffs
            .get((power - self.min) as usize)
            .cloned()
            .unwrap_or_else(PiRational::zero)
    }

    pub fn from_poly(p: &PiPoly) -> Self {
        Self::new(0, p.coefficients().to_vec())
    }

    /// Conversion to a plain polynomial; None if negative powers remain.
    pub fn into_poly(self) -> Option<PiPoly> {
        if self.is_zero() {
            return Some(PiPoly::zero());
        }
        if self.min < 0 {
            return None;
        }
        let mut coeffs = vec![PiRational::zero(); self.min as usize];
        coeffs.extend(self.coeffs);
        Some(PiPoly::new(coeffs))
    }

    pub fn mul_xpow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        PiLaurent { min: self.min + k, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min.min(rhs.min);
        let max = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let mut out = vec![PiRational::zero(); (max - min + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.min - min) as usize + i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let idx = (rhs.min - min) as usize + i;
            out[idx] = out[idx].add(c);
        }
        Self::new(min, out)
    }

    pub fn neg(&self) -> Self {
        PiLaurent { min: self.min, coeffs: self.coeffs.iter().map(PiRational::neg).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![PiRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.min + rhs.min, out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PiLaurent { min: self.min, coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn scale_pi(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.min, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Certified enclosure at a point interval (0 ∉ x required when min < 0).
    pub fn eval_interval(&self, x: &IntervalReal, pi: &IntervalReal, prec: u32) -> IntervalReal {
        if self.is_zero() {
            return IntervalReal::zero(prec);
        }
        let mut acc = IntervalReal::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            if !c.is_zero() {
                acc = acc.add(&c.eval_interval(pi, prec));
            }
        }
        let shift = x.pow_i64(self.min).expect("0 not in x for Laurent eval");
        acc.mul(&shift)
    }
}

impl fmt::Debug for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{c:?}]·x^{}", self.min + i as i64)?;
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

    fn c(s: &str) -> PiRational {
        PiRational::from_ratio(&rat(s))
    }

    #[test]
    fn poly_ring_ops() {
        // (x + 1)(x − 1) = x² − 1
        let p = PiPoly::from_coeffs(vec![c("1"), c("1")]);
        let q = PiPoly::from_coeffs(vec![c("-1"), c("1")]);
        let r = p.mul(&q);
        assert_eq!(r.degree(), Some(2));
        assert_eq!(r.coefficient(0), c("-1"));
        assert!(r.coefficient(1).is_zero());
        assert_eq!(r.coefficient(2), c("1"));
    }

    #[test]
    fn primitive_part() {
        let p = PiPoly::from_coeffs(vec![c("-5/9"), PiRational::zero(), c("1")]);
        let (content, prim) = p.primitive().unwrap();
        assert_eq!(content, rat("1/9"));
        assert_eq!(prim.coefficient(2), c("9"));
        assert_eq!(prim.coefficient(0), c("-5"));
        // negative leading flips the content sign
        let q = p.neg();
        let (content2, prim2) = q.primitive().unwrap();
        assert_eq!(content2, rat("-1/9"));
        assert_eq!(prim2, prim);
    }

    #[test]
    fn laurent_mul_tracks_min_degree() {
        let a = PiLaurent::new(-2, vec![c("1"), c("2")]); // x⁻² + 2x⁻¹
        let b = PiLaurent::new(1, vec![c("3")]); // 3x
        let p = a.mul(&b);
        assert_eq!(p.min_degree(), Some(-1));
        assert_eq!(p.coefficient(-1), c("3"));
        assert_eq!(p.coefficient(0), c("6"));
    }

    #[test]
    fn laurent_to_poly() {
        let a = PiLaurent::new(-1, vec![c("1")]);
        assert!(a.clone().into_poly().is_none());
        let b = a.mul_xpow(3);
        let p = b.into_poly().unwrap();
        assert_eq!(p.degree(), Some(2));
    }
}
