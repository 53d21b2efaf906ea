//! Exact evaluation of the three inequality predicates, range verification,
//! and threshold discovery.
//!
//! Conventions: log-concavity is non-strict (≥), the Briggs and strengthened
//! Briggs predicates are strict (>). All comparisons are exact big-integer
//! comparisons — no rounding anywhere.

use crate::series::{NaturalSeq, PartitionKind};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InequalityKind {
    /// a_n² − a_{n−1}a_{n+1} ≥ 0
    LogConcavity,
    /// a_n²(a_n² − a_{n−1}a_{n+1}) > a_{n−1}²(a_{n+1}² − a_n a_{n+2})
    Briggs,
    /// a_{n+1}a_n² − 2a_{n−1}a_{n+1}² + a_{n−1}a_n a_{n+2} > 0
    StrongBriggs,
}

impl InequalityKind {
    pub fn label(&self) -> &'static str {
        match self {
            InequalityKind::LogConcavity => "log-concavity",
            InequalityKind::Briggs => "briggs",
            InequalityKind::StrongBriggs => "strong-briggs",
        }
    }

    /// Indices needed around n: (n−1 .. n+fwd).
    fn forward_window(&self) -> u64 {
        match self {
            InequalityKind::LogConcavity => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for InequalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InequalityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "log-concavity" => Ok(InequalityKind::LogConcavity),
            "briggs" => Ok(InequalityKind::Briggs),
            "strong-briggs" => Ok(InequalityKind::StrongBriggs),
            _ => Err(Error::MalformedReport(format!("bad inequality kind `{s}`"))),
        }
    }
}

fn window_check(kind: InequalityKind, n: u64, n_max: u64) -> Result<()> {
    let fwd = kind.forward_window();
    if n < 1 || n + fwd > n_max {
        return Err(Error::WindowOutOfBounds {
            from: n as i64 - 1,
            to: n + fwd,
            n_max,
        });
    }
    Ok(())
}

/// Evaluate the predicate at index n of a raw value slice.
pub fn check_at_values(values: &[BigUint], kind: InequalityKind, n: u64) -> Result<bool> {
    window_check(kind, n, (values.len() - 1) as u64)?;
    let n = n as usize;
    let a = |i: usize| BigInt::from(values[i].clone());
    Ok(match kind {
        InequalityKind::LogConcavity => {
            let lhs = a(n) * a(n);
            let rhs = a(n - 1) * a(n + 1);
            lhs >= rhs
        }
        InequalityKind::Briggs => {
            let an2 = a(n) * a(n);
            let am2 = a(n - 1) * a(n - 1);
            let lhs = &an2 * (&an2 - a(n - 1) * a(n + 1));
            let rhs = &am2 * (a(n + 1) * a(n + 1) - a(n) * a(n + 2));
            lhs > rhs
        }
        InequalityKind::StrongBriggs => {
            let lhs = a(n + 1) * a(n) * a(n) + a(n - 1) * a(n) * a(n + 2);
            let rhs = 2 * a(n - 1) * a(n + 1) * a(n + 1);
            lhs > rhs
        }
    })
}

/// Evaluate the predicate at index n of a table.
pub fn check_at(seq: &NaturalSeq, kind: InequalityKind, n: u64) -> Result<bool> {
    check_at_values(seq.values(), kind, n)
}

/// (log-concavity at n ∧ strengthened Briggs at n) ⇒ Briggs at n, evaluated
/// directly; vacuously true when the antecedent fails.
pub fn implication_check_values(values: &[BigUint], n: u64) -> Result<bool> {
    let lc = check_at_values(values, InequalityKind::LogConcavity, n)?;
    let sb = check_at_values(values, InequalityKind::StrongBriggs, n)?;
    if !(lc && sb) {
        return Ok(true);
    }
    check_at_values(values, InequalityKind::Briggs, n)
}

pub fn implication_check(seq: &NaturalSeq, n: u64) -> Result<bool> {
    implication_check_values(seq.values(), n)
}

/// Outcome of checking one predicate over a full index range.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub kind: InequalityKind,
    pub sequence_kind: PartitionKind,
    pub lo: u64,
    pub hi: u64,
    /// Indices in [lo, hi] where the predicate is false, sorted.
    pub failures: Vec<u64>,
    /// Threshold found by [`find_threshold`], when requested.
    pub threshold: Option<u64>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.label(),
            "sequence": self.sequence_kind.label(),
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
            "failures": self.failures.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            "threshold": self.threshold.map(|t| t.to_string()),
            "elapsed_ms": self.elapsed.as_millis().to_string(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::MalformedReport(format!("missing field `{k}`")))
        };
        let s = |x: &Value| {
            x.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::MalformedReport("expected string".into()))
        };
        let num = |x: &Value| -> Result<u64> {
            s(x)?.parse().map_err(|_| Error::MalformedReport("bad number".into()))
        };
        let failures = get("failures")?
            .as_array()
            .ok_or_else(|| Error::MalformedReport("failures must be an array".into()))?
            .iter()
            .map(num)
            .collect::<Result<Vec<_>>>()?;
        let threshold = match get("threshold")? {
            Value::Null => None,
            x => Some(num(x)?),
        };
        Ok(VerificationReport {
            kind: s(get("kind")?)?.parse()?,
            sequence_kind: s(get("sequence")?)?.parse()?,
            lo: num(get("lo")?)?,
            hi: num(get("hi")?)?,
            failures,
            threshold,
            elapsed: Duration::from_millis(num(get("elapsed_ms")?)?),
        })
    }
}

/// Check the predicate for every n in [lo, hi]; the report lists exactly the
/// failing indices. The scan partitions across threads; the merged result is
/// order-independent.
pub fn verify_range(
    seq: &NaturalSeq,
    kind: InequalityKind,
    lo: u64,
    hi: u64,
) -> Result<VerificationReport> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    window_check(kind, lo, seq.n_max())?;
    window_check(kind, hi, seq.n_max())?;
    let start = Instant::now();
    let values = seq.values();
    let mut failures: Vec<u64> = (lo..=hi)
        .into_par_iter()
        .filter(|&n| !check_at_values(values, kind, n).expect("window checked"))
        .collect();
    failures.sort_unstable();
    Ok(VerificationReport {
        kind,
        sequence_kind: seq.kind(),
        lo,
        hi,
        failures,
        threshold: None,
        elapsed: start.elapsed(),
    })
}

/// Minimal N ≥ 1 such that the predicate holds for every n in [N, hi];
/// `None` if it already fails at hi.
pub fn find_threshold(seq: &NaturalSeq, kind: InequalityKind, hi: u64) -> Result<Option<u64>> {
    window_check(kind, hi, seq.n_max())?;
    let values = seq.values();
    if !check_at_values(values, kind, hi)? {
        return Ok(None);
    }
    let mut n = hi;
    while n > 1 && check_at_values(values, kind, n - 1)? {
        n -= 1;
    }
    Ok(Some(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::partition_table;
    use num_bigint::BigUint;

    fn seq(values: &[u64]) -> NaturalSeq {
        NaturalSeq::from_values(
            PartitionKind::Ordinary,
            values.iter().map(|&v| BigUint::from(v)).collect(),
        )
    }

    #[test]
    fn geometric_sequence_fails_strong_briggs() {
        // a_n = 2^n makes the left side identically zero; strict fails.
        let g = seq(&[1, 2, 4, 8, 16, 32, 64]);
        for n in 1..=4 {
            assert!(!check_at(&g, InequalityKind::StrongBriggs, n).unwrap());
        }
        assert_eq!(find_threshold(&g, InequalityKind::StrongBriggs, 4).unwrap(), None);
    }

    #[test]
    fn constant_sequence_is_log_concave() {
        let c = seq(&[1, 1, 1, 1, 1]);
        for n in 1..=3 {
            assert!(check_at(&c, InequalityKind::LogConcavity, n).unwrap());
        }
    }

    #[test]
    fn partition_table_anchors() {
        let p = partition_table(PartitionKind::Ordinary, 130).unwrap();
        assert!(check_at(&p, InequalityKind::StrongBriggs, 114).unwrap());
        assert!(implication_check(&p, 114).unwrap());
        let op = partition_table(PartitionKind::Overpartition, 30).unwrap();
        assert!(check_at(&op, InequalityKind::StrongBriggs, 18).unwrap());
    }

    #[test]
    fn window_errors() {
        let p = partition_table(PartitionKind::Ordinary, 10).unwrap();
        assert!(check_at(&p, InequalityKind::StrongBriggs, 0).is_err());
        assert!(check_at(&p, InequalityKind::StrongBriggs, 9).is_err());
        assert!(check_at(&p, InequalityKind::StrongBriggs, 8).is_ok());
        assert!(check_at(&p, InequalityKind::LogConcavity, 9).is_ok());
        assert!(verify_range(&p, InequalityKind::Briggs, 5, 3).is_err());
    }

    #[test]
    fn log_concavity_threshold_of_p() {
        let p = partition_table(PartitionKind::Ordinary, 2010).unwrap();
        assert_eq!(
            find_threshold(&p, InequalityKind::LogConcavity, 2000).unwrap(),
            Some(26)
        );
        let op = partition_table(PartitionKind::Overpartition, 2010).unwrap();
        let t = find_threshold(&op, InequalityKind::LogConcavity, 2000).unwrap();
        assert!(t.unwrap() <= 2);
    }

    #[test]
    fn below_threshold_failures_are_reported() {
        let p = partition_table(PartitionKind::Ordinary, 130).unwrap();
        let r = verify_range(&p, InequalityKind::StrongBriggs, 1, 113).unwrap();
        assert!(!r.passed());
        // odd small indices fail; spot-check the pattern discovered by the
        // exhaustive exact scan
        assert!(r.failures.contains(&1));
        assert!(r.failures.contains(&113));
        assert!(!r.failures.contains(&112));
    }

    #[test]
    fn report_json_roundtrip() {
        let p = partition_table(PartitionKind::Ordinary, 130).unwrap();
        let mut r = verify_range(&p, InequalityKind::StrongBriggs, 100, 120).unwrap();
        r.threshold = Some(114);
        let j = r.to_json();
        let back = VerificationReport::from_json(&j).unwrap();
        assert_eq!(back.kind, r.kind);
        assert_eq!(back.sequence_kind, r.sequence_kind);
        assert_eq!(back.lo, r.lo);
        assert_eq!(back.hi, r.hi);
        assert_eq!(back.failures, r.failures);
        assert_eq!(back.threshold, r.threshold);
    }

    #[test]
    fn determinism_across_runs() {
        let p = partition_table(PartitionKind::Ordinary, 300).unwrap();
        let a = verify_range(&p, InequalityKind::StrongBriggs, 1, 298).unwrap();
        let b = verify_range(&p, InequalityKind::StrongBriggs, 1, 298).unwrap();
        assert_eq!(a.failures, b.failures);
    }
}
