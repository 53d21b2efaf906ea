//! Replayable positivity certificates for polynomials over ℚ[π] on rays.

use super::poly::PiPoly;
use crate::interval::{pi_enclosure, IntervalReal, PREC_CAP};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Proven,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxVerdict {
    Positive,
    Inconclusive,
}

/// One bisection box with its verdict. The `Positive` boxes in a finished
/// certificate cover [x₀, B].
#[derive(Debug, Clone)]
pub struct TraceBox {
    pub lo: BigRational,
    pub hi: BigRational,
    pub verdict: BoxVerdict,
}

/// Machine-checkable record that a polynomial is strictly positive on
/// [x₀, ∞): leading-coefficient dominance past B, certified-positive boxes
/// covering [x₀, B].
#[derive(Debug, Clone)]
pub struct Certificate {
    pub poly: PiPoly,
    pub ray_start: BigRational,
    pub pi_precision: u32,
    pub dominance_bound: BigRational,
    pub trace: Vec<TraceBox>,
    pub status: CertStatus,
}

impl Certificate {
    pub fn proven(&self) -> bool {
        self.status == CertStatus::Proven
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ray_start": self.ray_start.to_string(),
            "pi_precision": self.pi_precision,
            "dominance_bound": self.dominance_bound.to_string(),
            "status": match self.status {
                CertStatus::Proven => "proven",
                CertStatus::Undecided => "undecided",
            },
            "degree": self.poly.degree(),
            "coefficients": self
                .poly
                .coefficients()
                .iter()
                .map(|c| c.to_rational_strings())
                .collect::<Vec<_>>(),
            "subintervals": self
                .trace
                .iter()
                .map(|b| {
                    json!({
                        "lo": b.lo.to_string(),
                        "hi": b.hi.to_string(),
                        "verdict": match b.verdict {
                            BoxVerdict::Positive => "positive",
                            BoxVerdict::Inconclusive => "inconclusive",
                        },
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

enum Attempt {
    Done(Vec<TraceBox>, BigRational),
    Escalate,
}

/// Certify `poly > 0` on [x₀, ∞).
///
/// Strategy: substitute a π enclosure into the coefficients; pick
/// B ≥ max(x₀, 1, Σ|cᵢ|/c_lead) + 1 so leading-term dominance settles
/// [B, ∞); cover [x₀, B] by adaptive bisection with interval Horner
/// evaluation, starting from 64 equal boxes. Twelve consecutive
/// inconclusive boxes without progress double the π precision; past the
/// precision cap the status is `Undecided` (never "disproven").
pub fn certify_positive_on_ray(
    poly: &PiPoly,
    ray_start: &BigRational,
    prec: u32,
) -> Result<Certificate> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !ray_start.is_positive() {
        return Err(Error::NonPositiveRay(ray_start.to_string()));
    }
    let mut p = prec.max(32);
    loop {
        match attempt(poly, ray_start, p)? {
            Attempt::Done(trace, bound) => {
                return Ok(Certificate {
                    poly: poly.clone(),
                    ray_start: ray_start.clone(),
                    pi_precision: p,
                    dominance_bound: bound,
                    trace,
                    status: CertStatus::Proven,
                })
            }
            Attempt::Escalate => {
                if p >= PREC_CAP {
                    return Ok(Certificate {
                        poly: poly.clone(),
                        ray_start: ray_start.clone(),
                        pi_precision: p,
                        dominance_bound: BigRational::zero(),
                        trace: Vec::new(),
                        status: CertStatus::Undecided,
                    });
                }
                p = (p * 2).min(PREC_CAP);
            }
        }
    }
}

fn attempt(poly: &PiPoly, ray_start: &BigRational, prec: u32) -> Result<Attempt> {
    let pi = pi_enclosure(prec);
    let coeffs: Vec<IntervalReal> = poly
        .coefficients()
        .iter()
        .map(|c| c.eval_interval(&pi, prec))
        .collect();
    let lead = coeffs.last().expect("nonzero polynomial");
    if !lead.is_certainly_positive() {
        // either genuinely nonpositive or the enclosure is too coarse
        return Ok(Attempt::Escalate);
    }

    // Cauchy-style dominance bound: for x ≥ B > Σ|cᵢ|/c_d (and x ≥ 1),
    // |Σ_{i<d} cᵢ xⁱ| ≤ x^{d−1} Σ|cᵢ| < c_d x^d.
    let mut abs_sum = IntervalReal::zero(prec);
    for c in &coeffs[..coeffs.len() - 1] {
        abs_sum = abs_sum.add(&c.abs());
    }
    let quotient = abs_sum.div(lead)?;
    let mut bound = quotient.hi().to_rational().floor() + BigRational::from(BigInt::from(2));
    if bound < BigRational::one() {
        bound = BigRational::one();
    }
    let mut trace = Vec::new();
    if bound <= *ray_start {
        // dominance already covers the whole ray
        return Ok(Attempt::Done(trace, ray_start.clone()));
    }

    // Initial equal partition of [x0, B].
    const INITIAL_BOXES: usize = 64;
    const STALL_LIMIT: u32 = 12;
    let width = (&bound - ray_start) / BigRational::from(BigInt::from(INITIAL_BOXES as i64));
    let mut stack: Vec<(BigRational, BigRational)> = (0..INITIAL_BOXES)
        .rev()
        .map(|i| {
            let lo = ray_start + &width * BigRational::from(BigInt::from(i as i64));
            let hi = if i == INITIAL_BOXES - 1 {
                bound.clone()
            } else {
                ray_start + &width * BigRational::from(BigInt::from(i as i64 + 1))
            };
            (lo, hi)
        })
        .collect();

    let mut stalled: u32 = 0;
    while let Some((lo, hi)) = stack.pop() {
        let x = box_interval(&lo, &hi, prec);
        let value = PiPoly::eval_with_coeffs(&coeffs, &x, prec);
        if value.is_certainly_positive() {
            trace.push(TraceBox { lo, hi, verdict: BoxVerdict::Positive });
            stalled = 0;
            continue;
        }
        stalled += 1;
        if stalled > STALL_LIMIT {
            return Ok(Attempt::Escalate);
        }
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    Ok(Attempt::Done(trace, bound))
}

fn box_interval(lo: &BigRational, hi: &BigRational, prec: u32) -> IntervalReal {
    let l = IntervalReal::from_ratio(lo, prec);
    let h = IntervalReal::from_ratio(hi, prec);
    IntervalReal::new(l.lo().clone(), h.hi().clone(), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::pi_rational::PiRational;
    use std::str::FromStr;

    fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    #[test]
    fn globally_positive_quadratic() {
        // x² + 1 on [1, ∞)
        let p = PiPoly::from_coeffs(vec![
            PiRational::one(),
            PiRational::zero(),
            PiRational::one(),
        ]);
        let cert = certify_positive_on_ray(&p, &rat("1"), 64).unwrap();
        assert!(cert.proven());
        assert!(!cert.trace.is_empty() || cert.dominance_bound == rat("1"));
    }

    #[test]
    fn root_just_below_ray_start() {
        // (x − 2)(x − 3) = x² − 5x + 6, positive on [31/10, ∞)
        let p = PiPoly::from_coeffs(vec![
            PiRational::from_integer(6),
            PiRational::from_integer(-5),
            PiRational::one(),
        ]);
        let cert = certify_positive_on_ray(&p, &rat("31/10"), 64).unwrap();
        assert!(cert.proven());
        // the positive boxes tile [x0, B]
        let mut boxes = cert.trace.clone();
        boxes.sort_by(|a, b| a.lo.cmp(&b.lo));
        assert_eq!(boxes.first().unwrap().lo, rat("31/10"));
        assert_eq!(boxes.last().unwrap().hi, cert.dominance_bound);
        for w in boxes.windows(2) {
            assert_eq!(w[0].hi, w[1].lo);
        }
    }

    #[test]
    fn undecided_through_a_root() {
        // x − 1 is not positive on [1/2, ∞); the engine must not prove it,
        // and reports undecided at the cap.
        let p = PiPoly::from_coeffs(vec![PiRational::from_integer(-1), PiRational::one()]);
        let cert = certify_positive_on_ray(&p, &rat("1/2"), 64).unwrap();
        assert_eq!(cert.status, CertStatus::Undecided);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let zero = PiPoly::zero();
        assert!(certify_positive_on_ray(&zero, &rat("1"), 64).is_err());
        let p = PiPoly::from_coeffs(vec![PiRational::one()]);
        assert!(certify_positive_on_ray(&p, &rat("-1"), 64).is_err());
        assert!(certify_positive_on_ray(&p, &rat("0"), 64).is_err());
    }

    #[test]
    fn pi_coefficient_polynomial() {
        // x² − π is positive from 2 (π < 4)
        let p = PiPoly::from_coeffs(vec![
            PiRational::pi_power(&rat("-1"), 1),
            PiRational::zero(),
            PiRational::one(),
        ]);
        let cert = certify_positive_on_ray(&p, &rat("2"), 64).unwrap();
        assert!(cert.proven());
        // but not from 3/2 (π > 9/4)
        let cert = certify_positive_on_ray(&p, &rat("3/2"), 64).unwrap();
        assert_eq!(cert.status, CertStatus::Undecided);
    }

    #[test]
    fn certificate_json_shape() {
        let p = PiPoly::from_coeffs(vec![
            PiRational::one(),
            PiRational::zero(),
            PiRational::one(),
        ]);
        let cert = certify_positive_on_ray(&p, &rat("1"), 64).unwrap();
        let j = cert.to_json();
        assert_eq!(j["status"], "proven");
        assert_eq!(j["degree"], 2);
        assert_eq!(j["coefficients"][0][0], "1");
    }
}
