//! Exact piecewise-linear functions on a closed interval.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("a piecewise-linear function needs at least two breakpoints")]
    TooFewPoints,
    #[error("breakpoint abscissae must be strictly increasing")]
    NotIncreasing,
    #[error("t = {0} lies outside the domain [{1}, {2}]")]
    OutOfDomain(String, String, String),
    #[error("domains [{0}, {1}] and [{2}, {3}] differ")]
    DomainMismatch(String, String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Breakpoint {
    #[serde(serialize_with = "rational::serialize")]
    pub t: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub v: BigRational,
}

/// A continuous piecewise-linear function stored as its breakpoints.
///
/// The first and last breakpoints are the domain endpoints. Interior points
/// are kept only where the slope actually changes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PiecewiseLinear {
    points: Vec<Breakpoint>,
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(BigRational, BigRational)>) -> Result<Self, PlError> {
        if points.len() < 2 {
            return Err(PlError::TooFewPoints);
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(PlError::NotIncreasing);
        }
        let mut kept: Vec<Breakpoint> = Vec::with_capacity(points.len());
        for (t, v) in points {
            if kept.len() >= 2 {
                let (a, b) = (&kept[kept.len() - 2], &kept[kept.len() - 1]);
                let left = (&b.v - &a.v) / (&b.t - &a.t);
                let right = (&v - &b.v) / (&t - &b.t);
                if left == right {
                    kept.pop();
                }
            }
            kept.push(Breakpoint { t, v });
        }
        Ok(Self { points: kept })
    }

    /// The zero function on `[lo, hi]`.
    pub fn zero(lo: BigRational, hi: BigRational) -> Result<Self, PlError> {
        Self::new(vec![(lo, BigRational::zero()), (hi, BigRational::zero())])
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.points
    }

    pub fn domain(&self) -> (&BigRational, &BigRational) {
        (&self.points[0].t, &self.points[self.points.len() - 1].t)
    }

    /// Slope of each segment, left to right.
    pub fn slopes(&self) -> Vec<BigRational> {
        self.points
            .windows(2)
            .map(|w| (&w[1].v - &w[0].v) / (&w[1].t - &w[0].t))
            .collect()
    }

    /// Right end of the first segment: the first genuine breakpoint, or the
    /// domain end when the function is affine.
    pub fn first_breakpoint(&self) -> &Breakpoint {
        &self.points[1]
    }

    pub fn evaluate(&self, t: &BigRational) -> Result<BigRational, PlError> {
        let (lo, hi) = self.domain();
        if t < lo || t > hi {
            return Err(PlError::OutOfDomain(
                rational::format(t),
                rational::format(lo),
                rational::format(hi),
            ));
        }
        // index of the first breakpoint with abscissa >= t
        let i = self.points.partition_point(|p| &p.t < t);
        let right = &self.points[i];
        if &right.t == t {
            return Ok(right.v.clone());
        }
        let left = &self.points[i - 1];
        let slope = (&right.v - &left.v) / (&right.t - &left.t);
        Ok(&left.v + slope * (t - &left.t))
    }

    /// Slopes are nondecreasing.
    pub fn is_convex(&self) -> bool {
        self.slopes().windows(2).all(|w| w[0] <= w[1])
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PlError> {
        self.combine(other, |a, b| a - b)
    }

    pub fn add(&self, other: &Self) -> Result<Self, PlError> {
        self.combine(other, |a, b| a + b)
    }

    pub fn neg(&self) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|p| Breakpoint {
                    t: p.t.clone(),
                    v: -&p.v,
                })
                .collect(),
        }
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Result<Self, PlError> {
        let (lo, hi) = self.domain();
        let (olo, ohi) = other.domain();
        if lo != olo || hi != ohi {
            return Err(PlError::DomainMismatch(
                rational::format(lo),
                rational::format(hi),
                rational::format(olo),
                rational::format(ohi),
            ));
        }
        let mut ts: Vec<&BigRational> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|p| &p.t)
            .collect();
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| {
                let v = op(self.evaluate(t)?, other.evaluate(t)?);
                Ok((t.clone(), v))
            })
            .collect::<Result<Vec<_>, PlError>>()?;
        Self::new(points)
    }

    /// Mirrors the function across its right endpoint `h`, so the result on
    /// `[lo, 2h - lo]` satisfies `f(2h - t) = f(t)`.
    pub fn extend_symmetric(&self) -> Self {
        let (_, hi) = self.domain();
        let two_hi = hi + hi;
        let mut points: Vec<(BigRational, BigRational)> = self
            .points
            .iter()
            .map(|p| (p.t.clone(), p.v.clone()))
            .collect();
        for p in self.points.iter().rev().skip(1) {
            points.push((&two_hi - &p.t, p.v.clone()));
        }
        Self::new(points).expect("reflection keeps abscissae increasing")
    }

    /// `n + 1` evenly spaced samples across the domain, endpoints included.
    pub fn samples(&self, n: usize) -> Vec<Breakpoint> {
        let n = n.max(1);
        let (lo, hi) = self.domain();
        let width = hi - lo;
        (0..=n)
            .map(|k| {
                let t = lo + &width * rational::ratio(k as i64, n as i64);
                let v = self.evaluate(&t).expect("sample inside domain");
                Breakpoint { t, v }
            })
            .collect()
    }
}
