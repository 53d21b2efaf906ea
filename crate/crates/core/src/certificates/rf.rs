//! Rational functions with a Laurent numerator and a factored denominator.
//!
//! Denominator atoms are kept primitive (integer content 1, positive leading
//! rational) so that equal factors produced along different construction
//! paths unify under addition; the extracted contents fold into the
//! numerator immediately.

use super::poly::{PiLaurent, PiPoly};
use num_rational::BigRational;

#[derive(Clone)]
pub(crate) struct FactoredRf {
    pub num: PiLaurent,
    /// (primitive atom, multiplicity)
    pub den: Vec<(PiPoly, u32)>,
}

impl FactoredRf {
    pub fn from_laurent(num: PiLaurent) -> Self {
        FactoredRf { num, den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_laurent(PiLaurent::one())
    }

    pub fn neg(&self) -> Self {
        FactoredRf { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        FactoredRf { num: self.num.scale(c), den: self.den.clone() }
    }

    fn mult_of(&self, atom: &PiPoly) -> u32 {
        self.den
            .iter()
            .find(|(a, _)| a == atom)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    fn push_atom(&mut self, atom: PiPoly, mult: u32) {
        if mult == 0 {
            return;
        }
        if let Some(entry) = self.den.iter_mut().find(|(a, _)| *a == atom) {
            entry.1 += mult;
        } else {
            self.den.push((atom, mult));
        }
    }

    /// Divide by a raw polynomial factor; its content moves into the
    /// numerator, its primitive part joins the denominator.
    pub fn div_atom(&self, raw: &PiPoly) -> Self {
        let (content, prim) = raw.primitive().expect("nonzero denominator atom");
        let mut out = FactoredRf {
            num: self.num.scale(&content.recip()),
            den: self.den.clone(),
        };
        out.push_atom(prim, 1);
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = FactoredRf {
            num: self.num.mul(&rhs.num),
            den: self.den.clone(),
        };
        for (atom, mult) in &rhs.den {
            out.push_atom(atom.clone(), *mult);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        // union denominator: per-atom max multiplicity
        let mut union: Vec<(PiPoly, u32)> = self.den.clone();
        for (atom, mult) in &rhs.den {
            if let Some(entry) = union.iter_mut().find(|(a, _)| a == atom) {
                entry.1 = entry.1.max(*mult);
            } else {
                union.push((atom.clone(), *mult));
            }
        }
        let raise = |rf: &FactoredRf| -> PiLaurent {
            let mut num = rf.num.clone();
            for (atom, mult) in &union {
                let have = rf.mult_of(atom);
                if *mult > have {
                    let factor = PiLaurent::from_poly(atom).pow(mult - have);
                    num = num.mul(&factor);
                }
            }
            num
        };
        FactoredRf { num: raise(self).add(&raise(rhs)), den: union }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Sorted (degree, multiplicity) signature of the denominator.
    pub fn den_signature(&self) -> Vec<(usize, u32)> {
        let mut sig: Vec<(usize, u32)> = self
            .den
            .iter()
            .map(|(a, m)| (a.degree().expect("atoms nonzero"), *m))
            .collect();
        sig.sort_unstable();
        sig
    }

    /// Expanded denominator Π atom^mult (primitive atoms only; any extracted
    /// content already lives in the numerator).
    pub fn den_expanded(&self) -> PiPoly {
        let mut acc = PiPoly::constant(super::pi_rational::PiRational::one());
        for (atom, mult) in &self.den {
            acc = acc.mul(&atom.pow(*mult));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::pi_rational::PiRational;
    use std::str::FromStr;

    fn c(s: &str) -> PiRational {
        PiRational::from_ratio(&BigRational::from_str(s).unwrap())
    }

    #[test]
    fn shared_atoms_unify_under_addition() {
        // 1/(x²−5/9) + 1/(x²−5/9) = 2/(x²−5/9): atoms constructed twice
        // must merge, and the content 1/9 must move to the numerator.
        let atom = PiPoly::from_coeffs(vec![c("-5/9"), PiRational::zero(), c("1")]);
        let a = FactoredRf::one().div_atom(&atom);
        let b = FactoredRf::one().div_atom(&atom);
        let s = a.add(&b);
        assert_eq!(s.den.len(), 1);
        assert_eq!(s.den[0].1, 1);
        // numerator = 2·9 (content⁻¹ applied) ⇒ 18
        assert_eq!(s.num.coefficient(0), c("18"));
        // and the primitive atom is 9x² − 5
        assert_eq!(s.den[0].0.coefficient(2), c("9"));
    }

    #[test]
    fn addition_raises_to_common_denominator() {
        let atom = PiPoly::from_coeffs(vec![c("1"), c("1")]); // x + 1
        let a = FactoredRf::one().div_atom(&atom); // 1/(x+1)
        let b = FactoredRf::one(); // 1
        let s = a.add(&b); // (x + 2)/(x+1)
        assert_eq!(s.num.coefficient(0), c("2"));
        assert_eq!(s.num.coefficient(1), c("1"));
        let sq = a.mul(&a);
        assert_eq!(sq.den[0].1, 2);
        let t = sq.add(&a); // (1 + (x+1))/(x+1)² = (x+2)/(x+1)²
        assert_eq!(t.num.coefficient(0), c("2"));
        assert_eq!(t.den[0].1, 2);
    }

    #[test]
    fn den_expansion() {
        let atom = PiPoly::from_coeffs(vec![c("1"), c("1")]);
        let rf = FactoredRf::one().div_atom(&atom).div_atom(&atom);
        let d = rf.den_expanded();
        assert_eq!(d.degree(), Some(2));
        assert_eq!(d.coefficient(1), c("2"));
    }
}
