//! Tristram-Levine signature functions of torus knots.
//!
//! For `T(p, q)` let `Σ = { i/p + j/q : 0 < i < p, 0 < j < q }`. Then for
//! `x ∈ (0, 1)` away from jumps
//!
//! ```text
//! σ(x) = -2 ( #(Σ ∩ (1, 1 + x)) - #(Σ ∩ (0, x)) ),
//! ```
//!
//! so each `s < 1` adds a `+2` jump at `s` and each `s > 1` a `-2` jump at `s - 1`.
//! This counting formula is checked against the Seifert-matrix oracle in
//! [`crate::seifert`].

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignatureError {
    #[error("torus parameters ({0}, {1}) must be coprime and at least 2")]
    NotCoprime(u64, u64),
    #[error("x = {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("x = {0} is a jump of the signature function")]
    AtJump(String),
    #[error("eigenvalue {value:e} is within {margin:e} of zero; perturb x")]
    EigenvalueTooCloseToZero { value: f64, margin: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Jump {
    #[serde(serialize_with = "rational::serialize")]
    pub x: BigRational,
    pub delta: i64,
}

/// An integer step function on `[0, 1]`, zero near both ends.
///
/// At a jump the value is the average of the one-sided limits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SignatureFunction {
    jumps: Vec<Jump>,
}

impl SignatureFunction {
    /// Sorts jumps by location. Coincident jumps are kept as separate entries.
    pub fn from_jumps(mut jumps: Vec<Jump>) -> Self {
        jumps.sort_by(|a, b| a.x.cmp(&b.x));
        Self { jumps }
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    pub fn is_jump(&self, x: &BigRational) -> bool {
        self.jumps.binary_search_by(|j| j.x.cmp(x)).is_ok()
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<i64, SignatureError> {
        if x < &BigRational::zero() || x > &BigRational::one() {
            return Err(SignatureError::OutOfRange(rational::format(x)));
        }
        let mut below = 0;
        let mut at = 0;
        for j in &self.jumps {
            match j.x.cmp(x) {
                std::cmp::Ordering::Less => below += j.delta,
                std::cmp::Ordering::Equal => at += j.delta,
                std::cmp::Ordering::Greater => break,
            }
        }
        Ok(below + at / 2)
    }

    /// Value at `x`, refusing jump locations.
    pub fn evaluate_off_jump(&self, x: &BigRational) -> Result<i64, SignatureError> {
        if self.is_jump(x) {
            return Err(SignatureError::AtJump(rational::format(x)));
        }
        self.evaluate(x)
    }

    /// Midpoints of the open intervals cut out by the jumps, plus one point
    /// left of the first jump and one right of the last.
    pub fn interval_representatives(&self) -> Vec<BigRational> {
        interval_midpoints(self.jumps.iter().map(|j| &j.x))
    }
}

fn interval_midpoints<'a>(locations: impl Iterator<Item = &'a BigRational>) -> Vec<BigRational> {
    let mut cuts: Vec<BigRational> = vec![BigRational::zero()];
    cuts.extend(locations.cloned());
    cuts.push(BigRational::one());
    cuts.sort();
    cuts.dedup();
    let two = rational::int(2);
    cuts.windows(2).map(|w| (&w[0] + &w[1]) / &two).collect()
}

/// σ of `T(p, q)` via the counting formula.
pub fn torus_signature(p: u64, q: u64) -> Result<SignatureFunction, SignatureError> {
    let (p, q) = if p > q { (q, p) } else { (p, q) };
    if p < 2 || p.gcd(&q) != 1 {
        return Err(SignatureError::NotCoprime(p, q));
    }
    let pq = (p * q) as i64;
    let mut jumps = Vec::with_capacity(((p - 1) * (q - 1)) as usize);
    for i in 1..p {
        for j in 1..q {
            // i/p + j/q = num / pq, never an integer for coprime p, q
            let num = (i * q + j * p) as i64;
            let jump = if num > pq {
                Jump {
                    x: rational::ratio(num - pq, pq),
                    delta: -2,
                }
            } else {
                Jump {
                    x: rational::ratio(num, pq),
                    delta: 2,
                }
            };
            jumps.push(jump);
        }
    }
    Ok(SignatureFunction::from_jumps(jumps))
}

/// `max |σ1(x) - σ0(x)|` over non-jump `x ∈ (0, 1)`: the signature of
/// `K1 # -K0`, scanned on exact midpoints of the merged jump list.
pub fn signature_diff_max(s1: &SignatureFunction, s0: &SignatureFunction) -> i64 {
    let locations = s1.jumps.iter().chain(&s0.jumps).map(|j| &j.x);
    interval_midpoints(locations)
        .iter()
        .map(|x| {
            let a = s1.evaluate(x).expect("midpoint inside (0, 1)");
            let b = s0.evaluate(x).expect("midpoint inside (0, 1)");
            (a - b).abs()
        })
        .max()
        .unwrap_or(0)
}

/// `ceil(signature_diff_max / 2)`, the cobordism genus bound from signatures.
pub fn signature_cobordism_bound(s1: &SignatureFunction, s0: &SignatureFunction) -> i64 {
    (signature_diff_max(s1, s0) + 1) / 2
}
