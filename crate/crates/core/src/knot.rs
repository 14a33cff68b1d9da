use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::puiseux::{PuiseuxError, PuiseuxSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("torus parameters ({0}, {1}) must both be at least 2")]
    TorusTooSmall(u64, u64),
    #[error("T({0},{0}) is a link, not a knot")]
    TorusEqualParameters(u64),
    #[error("torus parameters ({0}, {1}) are not coprime")]
    TorusNotCoprime(u64, u64),
    #[error("malformed knot description {0:?}")]
    Malformed(String),
    #[error(transparent)]
    Puiseux(#[from] PuiseuxError),
}

/// A knot given either as a torus knot or by a Puiseux characteristic sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    /// `T(a, b)` with `2 <= a < b` coprime.
    Torus {
        a: u64,
        b: u64,
    },
    Algebraic(PuiseuxSequence),
}

impl KnotSpec {
    /// Builds `T(a, b)`, swapping the parameters if `a > b`.
    pub fn torus(a: u64, b: u64) -> Result<Self, KnotError> {
        let (a, b) = if a > b { (b, a) } else { (a, b) };
        if a < 2 {
            return Err(KnotError::TorusTooSmall(a, b));
        }
        if a == b {
            return Err(KnotError::TorusEqualParameters(a));
        }
        if a.gcd(&b) != 1 {
            return Err(KnotError::TorusNotCoprime(a, b));
        }
        Ok(Self::Torus { a, b })
    }

    pub fn algebraic(seq: PuiseuxSequence) -> Self {
        Self::Algebraic(seq)
    }

    /// Canonical Puiseux sequence; `T(a, b)` maps to `(a; b)`.
    pub fn sequence(&self) -> PuiseuxSequence {
        match self {
            Self::Torus { a, b } => {
                PuiseuxSequence::torus(*a, *b).expect("validated torus parameters")
            }
            Self::Algebraic(seq) => seq.clone(),
        }
    }

    /// Torus parameters if the knot is a torus knot, including sequences `(a; b)`.
    pub fn torus_parameters(&self) -> Option<(u64, u64)> {
        match self {
            Self::Torus { a, b } => Some((*a, *b)),
            Self::Algebraic(seq) if seq.len_pairs() == 1 => Some((seq.terms()[0], seq.terms()[1])),
            Self::Algebraic(_) => None,
        }
    }

    pub fn multiplicity(&self) -> u64 {
        match self {
            Self::Torus { a, .. } => *a,
            Self::Algebraic(seq) => seq.multiplicity(),
        }
    }

    pub fn genus(&self) -> u64 {
        match self {
            Self::Torus { a, b } => (a - 1) * (b - 1) / 2,
            Self::Algebraic(seq) => seq.genus(),
        }
    }
}

impl From<PuiseuxSequence> for KnotSpec {
    fn from(seq: PuiseuxSequence) -> Self {
        Self::Algebraic(seq)
    }
}

impl FromStr for KnotSpec {
    type Err = KnotError;

    /// Accepts `"torus p q"`, `"T(p,q)"` or Puiseux text `"q0;q1,..."`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        let malformed = || KnotError::Malformed(text.to_string());
        let torus_args = if let Some(rest) = trimmed.strip_prefix("torus") {
            Some(rest.split_whitespace().collect::<Vec<_>>())
        } else {
            trimmed
                .strip_prefix("T(")
                .and_then(|r| r.strip_suffix(')'))
                .map(|rest| rest.split(',').map(str::trim).collect())
        };
        match torus_args {
            Some(args) => {
                let [p, q] = args.as_slice() else {
                    return Err(malformed());
                };
                let p = p.parse().map_err(|_| malformed())?;
                let q = q.parse().map_err(|_| malformed())?;
                Self::torus(p, q)
            }
            None => Ok(Self::Algebraic(trimmed.parse()?)),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Torus { a, b } => write!(f, "T({a},{b})"),
            Self::Algebraic(seq) => write!(f, "({seq})"),
        }
    }
}
