//! Exact reconstruction of the proof polynomials over ℚ[π] and rigorous
//! certification of their positivity on rays.

mod builders;
mod certify;
mod pi_rational;
mod poly;
mod rf;

pub use builders::{
    build_op6_ftilde, build_overpartition_f2, build_p6_h, build_p6_jtilde, build_p6_main,
    build_partition_f2, build_regular_logconcavity, build_regular_main,
    build_regular_overpartition_main, deg104_exponent_combinations,
    deg92_exponent_combinations, g_envelopes, hcheck, hhat, regular_delta,
    regular_overpartition_delta,
};
pub use certify::{certify_positive_on_ray, BoxVerdict, CertStatus, Certificate, TraceBox};
pub use pi_rational::PiRational;
pub use poly::{PiLaurent, PiPoly};

use crate::Result;
use num_rational::BigRational;

/// A displayed num/den pair; the denominator is the expanded product of the
/// construction's factors, so no implicit cancellation is assumed.
#[derive(Debug, Clone)]
pub struct PiRationalFunction {
    pub num: PiPoly,
    pub den: PiPoly,
}

/// Certify den(rf) > 0 on [x₀, ∞) by the same ray method used for
/// numerators.
pub fn denominator_positive_check(
    rf: &PiRationalFunction,
    ray_start: &BigRational,
    prec: u32,
) -> Result<bool> {
    let cert = certify_positive_on_ray(&rf.den, ray_start, prec)?;
    Ok(cert.proven())
}
