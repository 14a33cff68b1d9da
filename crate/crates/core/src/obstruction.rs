//! Minimal-cobordism obstructions between algebraic knots, and the
//! `(2a; b, c)` / `(a; 3b, c)` family of examples.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::knot::KnotSpec;
use crate::puiseux::{PuiseuxError, PuiseuxSequence};
use crate::rational;
use crate::signature;
use crate::upsilon::{cobordism_genus_lower_bound, TheoremViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("genus of K0 ({g0}) exceeds genus of K1 ({g1}); order the pair by genus")]
    GenusOrderViolated { g0: u64, g1: u64 },
    #[error(transparent)]
    Theorem(#[from] TheoremViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Obstructed => "Obstructed",
            Self::NotObstructed => "NotObstructed",
        })
    }
}

/// Lower bounds on the genus of a cobordism between `K0` and `K1`.
///
/// The bounds are lower bounds for `g4(K1 # -K0)`, not its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub k0: String,
    pub k1: String,
    pub g0: u64,
    pub g1: u64,
    pub tau_bound: u64,
    pub upsilon_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature_bound: Option<i64>,
    #[serde(serialize_with = "rational::serialize")]
    pub witness_t: BigRational,
    pub verdict: Verdict,
}

/// Decides whether the Upsilon bound rules out a cobordism of genus `g1 - g0`.
///
/// Requires `genus(k0) <= genus(k1)`. When `k0` has strictly larger multiplicity
/// than `k1` the verdict must come out `Obstructed`; anything else is reported
/// as a [`TheoremViolation`].
pub fn obstruct_minimal(
    k0: &KnotSpec,
    k1: &KnotSpec,
) -> Result<ObstructionReport, ObstructionError> {
    let (g0, g1) = (k0.genus(), k1.genus());
    if g0 > g1 {
        return Err(ObstructionError::GenusOrderViolated { g0, g1 });
    }
    let tau_bound = g1 - g0;
    let upsilon = cobordism_genus_lower_bound(k0, k1);
    if upsilon.bound < tau_bound as i64 {
        return Err(TheoremViolation(format!(
            "Upsilon bound {} for {k0}, {k1} is below the tau bound {tau_bound}",
            upsilon.bound
        ))
        .into());
    }
    let verdict = if upsilon.bound > tau_bound as i64 {
        Verdict::Obstructed
    } else {
        Verdict::NotObstructed
    };
    if k0.multiplicity() > k1.multiplicity() && verdict != Verdict::Obstructed {
        return Err(TheoremViolation(format!(
            "{k0} has larger multiplicity than {k1} and lower genus, yet no obstruction was found"
        ))
        .into());
    }
    let signature_bound = match (k0.torus_parameters(), k1.torus_parameters()) {
        (Some((p0, q0)), Some((p1, q1))) => {
            let s0 = signature::torus_signature(p0, q0).expect("validated torus knot");
            let s1 = signature::torus_signature(p1, q1).expect("validated torus knot");
            Some(signature::signature_cobordism_bound(&s1, &s0))
        }
        _ => None,
    };
    Ok(ObstructionReport {
        k0: k0.to_string(),
        k1: k1.to_string(),
        g0,
        g1,
        tau_bound,
        upsilon_bound: upsilon.bound,
        signature_bound,
        witness_t: upsilon.witness_t,
        verdict,
    })
}

/// The first condition a candidate `(a, b, c)` fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyRejection {
    #[error("parameters must be positive")]
    NotPositive,
    #[error("gcd(a, b) = 1, so d > 1 fails")]
    TrivialCommonDivisor,
    #[error("gcd(2a, b) = {found} differs from d = {d}")]
    DoubledGcdMismatch { d: u64, found: u64 },
    #[error("gcd(a, 3b) = {found} differs from d = {d}")]
    TripledGcdMismatch { d: u64, found: u64 },
    #[error("gcd(a, b, c) = {0}, expected 1")]
    CommonDivisorWithC(u64),
    #[error("2a < b fails")]
    FirstInequality,
    #[error("b < c/3 fails")]
    SecondInequality,
    #[error("sequence ({which}) is not a valid Puiseux sequence: {error}")]
    InvalidSequence { which: String, error: PuiseuxError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPair {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    /// `(2a; b, c)`
    pub k0: PuiseuxSequence,
    /// `(a; 3b, c)`
    pub k1: PuiseuxSequence,
}

/// Checks `2a < b < c/3`, `gcd(a,b) = gcd(2a,b) = gcd(a,3b) = d > 1` and
/// `gcd(a,b,c) = 1`, returning the sequences `(2a; b, c)` and `(a; 3b, c)`.
///
/// Conditions are tested gcds first, then inequalities. When `d = a` the
/// second sequence breaks the characteristic condition (`a | 3b`), which is
/// reported as [`FamilyRejection::InvalidSequence`].
pub fn family_check(a: u64, b: u64, c: u64) -> Result<FamilyPair, FamilyRejection> {
    if a == 0 || b == 0 || c == 0 {
        return Err(FamilyRejection::NotPositive);
    }
    let d = a.gcd(&b);
    if d == 1 {
        return Err(FamilyRejection::TrivialCommonDivisor);
    }
    let doubled = (2 * a).gcd(&b);
    if doubled != d {
        return Err(FamilyRejection::DoubledGcdMismatch { d, found: doubled });
    }
    let tripled = a.gcd(&(3 * b));
    if tripled != d {
        return Err(FamilyRejection::TripledGcdMismatch { d, found: tripled });
    }
    let all = d.gcd(&c);
    if all != 1 {
        return Err(FamilyRejection::CommonDivisorWithC(all));
    }
    if 2 * a >= b {
        return Err(FamilyRejection::FirstInequality);
    }
    if 3 * b >= c {
        return Err(FamilyRejection::SecondInequality);
    }
    let build = |terms: Vec<u64>| {
        let which = terms
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        PuiseuxSequence::new(terms)
            .map_err(|error| FamilyRejection::InvalidSequence { which, error })
    };
    let k0 = build(vec![2 * a, b, c])?;
    let k1 = build(vec![a, 3 * b, c])?;
    assert!(
        k0.genus() <= k1.genus(),
        "family ({a},{b},{c}): genus {} > {}",
        k0.genus(),
        k1.genus()
    );
    Ok(FamilyPair { a, b, c, d, k0, k1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn torus(a: u64, b: u64) -> KnotSpec {
        KnotSpec::torus(a, b).unwrap()
    }

    #[test]
    fn torus_pair_is_obstructed() {
        let r = obstruct_minimal(&torus(4, 5), &torus(3, 10)).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(r.tau_bound, 3);
        assert_eq!(r.upsilon_bound, 4);
        assert_eq!(r.witness_t, ratio(2, 3));
        assert_eq!(r.signature_bound, Some(3));
    }

    #[test]
    fn family_pair_is_obstructed() {
        let pair = family_check(4, 10, 31).unwrap();
        let (k0, k1) = (KnotSpec::from(pair.k0), KnotSpec::from(pair.k1));
        let r = obstruct_minimal(&k0, &k1).unwrap();
        assert_eq!((r.g0, r.g1), (42, 44));
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(r.signature_bound, None);
    }

    #[test]
    fn equal_multiplicities_not_obstructed() {
        let r = obstruct_minimal(&torus(2, 3), &torus(2, 5)).unwrap();
        assert_eq!(r.verdict, Verdict::NotObstructed);
        assert_eq!(r.upsilon_bound, 1);
    }

    #[test]
    fn degenerate_pair() {
        let k: KnotSpec = "4;6,7".parse().unwrap();
        let r = obstruct_minimal(&k, &k).unwrap();
        assert_eq!(r.verdict, Verdict::NotObstructed);
        assert_eq!((r.tau_bound, r.upsilon_bound), (0, 0));
    }

    #[test]
    fn genus_order_is_enforced() {
        assert_eq!(
            obstruct_minimal(&torus(3, 10), &torus(4, 5)),
            Err(ObstructionError::GenusOrderViolated { g0: 9, g1: 6 })
        );
    }

    #[test]
    fn report_json_shape() {
        let r = obstruct_minimal(&torus(4, 5), &torus(3, 10)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["verdict"], "Obstructed");
        assert_eq!(json["witness_t"], "2/3");
        assert_eq!(json["upsilon_bound"], 4);
        assert_eq!(json["signature_bound"], 3);
    }

    #[test]
    fn family_examples() {
        let pair = family_check(4, 10, 31).unwrap();
        assert_eq!(pair.k0.terms(), &[8, 10, 31]);
        assert_eq!(pair.k1.terms(), &[4, 30, 31]);
        assert_eq!(pair.d, 2);
        assert_eq!(
            family_check(4, 10, 30),
            Err(FamilyRejection::CommonDivisorWithC(2))
        );
        assert_eq!(
            family_check(3, 7, 22),
            Err(FamilyRejection::TrivialCommonDivisor)
        );
        assert_eq!(
            family_check(4, 10, 29),
            Err(FamilyRejection::SecondInequality)
        );
        assert_eq!(
            family_check(6, 9, 40),
            Err(FamilyRejection::FirstInequality)
        );
    }

    #[test]
    fn family_with_d_equal_to_a_is_rejected() {
        // gcd(2,6) = gcd(4,6) = gcd(2,18) = 2 = a, but 2 | 18 in (2; 18, 19)
        assert!(matches!(
            family_check(2, 6, 19),
            Err(FamilyRejection::InvalidSequence { .. })
        ));
    }
}
