//! Puiseux characteristic sequences and the data derived from them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("malformed sequence text {0:?}; expected \"q0;q1,...,qn\"")]
    MalformedText(String),
    #[error("sequence needs at least one term after the multiplicity")]
    NoCharacteristicTerms,
    #[error("multiplicity q0 = {0} is below 2")]
    MultiplicityTooSmall(u64),
    #[error("terms must be strictly increasing, but q{index} = {value} follows {previous}")]
    NotIncreasing {
        index: usize,
        previous: u64,
        value: u64,
    },
    #[error("gcd chain ends at {0}, expected 1")]
    NotCoprime(u64),
    #[error("D{index} = {divisor} divides q{next} = {value}")]
    CharacteristicConditionViolated {
        index: usize,
        divisor: u64,
        next: usize,
        value: u64,
    },
    #[error("integer overflow while deriving invariants")]
    Overflow,
}

/// A validated Puiseux characteristic sequence `(q0; q1, ..., qn)`.
///
/// Construction checks every characteristic condition and precomputes the
/// gcd chain `D_i = gcd(q0, ..., qi)`, the semigroup generators and the Milnor
/// number, so all accessors are infallible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxSequence {
    terms: Vec<u64>,
    gcd_chain: Vec<u64>,
    generators: Vec<u64>,
    milnor: u64,
}

impl PuiseuxSequence {
    pub fn new(terms: Vec<u64>) -> Result<Self, PuiseuxError> {
        if terms.len() < 2 {
            return Err(PuiseuxError::NoCharacteristicTerms);
        }
        if terms[0] < 2 {
            return Err(PuiseuxError::MultiplicityTooSmall(terms[0]));
        }
        for (index, pair) in terms.windows(2).enumerate() {
            if pair[1] <= pair[0] {
                return Err(PuiseuxError::NotIncreasing {
                    index: index + 1,
                    previous: pair[0],
                    value: pair[1],
                });
            }
        }

        let mut gcd_chain = Vec::with_capacity(terms.len());
        gcd_chain.push(terms[0]);
        for &q in &terms[1..] {
            let last = *gcd_chain.last().unwrap();
            gcd_chain.push(last.gcd(&q));
        }
        let last = *gcd_chain.last().unwrap();
        if last != 1 {
            return Err(PuiseuxError::NotCoprime(last));
        }
        for i in 0..terms.len() - 1 {
            if terms[i + 1].is_multiple_of(gcd_chain[i]) {
                return Err(PuiseuxError::CharacteristicConditionViolated {
                    index: i,
                    divisor: gcd_chain[i],
                    next: i + 1,
                    value: terms[i + 1],
                });
            }
        }

        let generators = derive_generators(&terms, &gcd_chain)?;
        let milnor = derive_milnor(&terms, &gcd_chain)?;
        Ok(Self {
            terms,
            gcd_chain,
            generators,
            milnor,
        })
    }

    /// The sequence `(a; b)` of the torus knot `T(a, b)`.
    pub fn torus(a: u64, b: u64) -> Result<Self, PuiseuxError> {
        Self::new(vec![a, b])
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Number of characteristic pairs `n`.
    pub fn len_pairs(&self) -> usize {
        self.terms.len() - 1
    }

    /// The multiplicity `q0`.
    pub fn multiplicity(&self) -> u64 {
        self.terms[0]
    }

    pub fn gcd_chain(&self) -> &[u64] {
        &self.gcd_chain
    }

    /// Generators `s0, ..., sn` of the semigroup of the singularity.
    pub fn semigroup_generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn milnor_number(&self) -> u64 {
        self.milnor
    }

    /// Seifert genus, half the Milnor number.
    pub fn genus(&self) -> u64 {
        self.milnor / 2
    }

    /// Algebraic knots have `g4 = g`.
    pub fn slice_genus(&self) -> u64 {
        self.genus()
    }

    /// Algebraic knots have `u = g4 = g`.
    pub fn unknotting_number(&self) -> u64 {
        self.genus()
    }

    /// Iterated torus knot description: stage `i` is `(D(i-1)/Di, s_i/Di)`.
    pub fn to_cable_stages(&self) -> IteratedTorusDescription {
        let stages = (1..self.terms.len())
            .map(|i| {
                let (prev, cur) = (self.gcd_chain[i - 1], self.gcd_chain[i]);
                let s = self.generators[i];
                assert!(
                    prev % cur == 0 && s.is_multiple_of(cur),
                    "inexact cable parameters"
                );
                let stage = CableStage {
                    p: prev / cur,
                    r: s / cur,
                };
                assert_eq!(stage.p.gcd(&stage.r), 1, "cable stage {stage} not coprime");
                stage
            })
            .collect();
        IteratedTorusDescription { stages }
    }

    pub fn summary(&self) -> PuiseuxSummary {
        PuiseuxSummary {
            puiseux: self.to_string(),
            gcd_chain: self.gcd_chain.clone(),
            semigroup_generators: self.generators.clone(),
            cable_stages: self
                .to_cable_stages()
                .stages
                .iter()
                .map(|s| [s.p, s.r])
                .collect(),
            milnor: self.milnor,
            genus: self.genus(),
        }
    }
}

fn derive_generators(terms: &[u64], gcd_chain: &[u64]) -> Result<Vec<u64>, PuiseuxError> {
    let mut generators = vec![terms[0], terms[1]];
    // numerator D0*q1 + D1*(q2 - q1) + ... + D(i-1)*(qi - q(i-1))
    let mut numerator = gcd_chain[0]
        .checked_mul(terms[1])
        .ok_or(PuiseuxError::Overflow)?;
    for i in 2..terms.len() {
        let step = gcd_chain[i - 1]
            .checked_mul(terms[i] - terms[i - 1])
            .ok_or(PuiseuxError::Overflow)?;
        numerator = numerator.checked_add(step).ok_or(PuiseuxError::Overflow)?;
        let divisor = gcd_chain[i - 1];
        assert!(
            numerator % divisor == 0,
            "semigroup generator s{i} is not integral"
        );
        generators.push(numerator / divisor);
    }
    debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
    Ok(generators)
}

fn derive_milnor(terms: &[u64], gcd_chain: &[u64]) -> Result<u64, PuiseuxError> {
    let mut mu = 0u64;
    for i in 1..terms.len() {
        let term = (terms[i] - 1)
            .checked_mul(gcd_chain[i - 1] - gcd_chain[i])
            .ok_or(PuiseuxError::Overflow)?;
        mu = mu.checked_add(term).ok_or(PuiseuxError::Overflow)?;
    }
    assert!(mu.is_multiple_of(2), "odd Milnor number {mu}");
    Ok(mu)
}

impl FromStr for PuiseuxSequence {
    type Err = PuiseuxError;

    /// Parses `"q0;q1,...,qn"`. Surrounding parentheses and whitespace are
    /// tolerated.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = || PuiseuxError::MalformedText(text.to_string());
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner;
        }
        let (head, tail) = body.split_once(';').ok_or_else(malformed)?;
        let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| malformed());
        let mut terms = vec![parse(head)?];
        if tail.trim().is_empty() {
            return Err(PuiseuxError::NoCharacteristicTerms);
        }
        for part in tail.split(',') {
            terms.push(parse(part)?);
        }
        Self::new(terms)
    }
}

impl fmt::Display for PuiseuxSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.terms[0])?;
        for (i, q) in self.terms[1..].iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// One cabling stage `(p, r)`. The first stage is the torus knot `T(p, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CableStage {
    pub p: u64,
    pub r: u64,
}

impl fmt::Display for CableStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IteratedTorusDescription {
    pub stages: Vec<CableStage>,
}

impl IteratedTorusDescription {
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.stages.iter().map(|s| (s.p, s.r)).collect()
    }
}

impl fmt::Display for IteratedTorusDescription {
    /// Renders e.g. `((T(2,3))_(3,20))_(2,123)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = &self.stages[0];
        let mut out = format!("T({},{})", first.p, first.r);
        for stage in &self.stages[1..] {
            out = format!("({out})_({},{})", stage.p, stage.r);
        }
        f.write_str(&out)
    }
}

/// JSON-facing view of every derived field.
#[derive(Debug, Clone, Serialize)]
pub struct PuiseuxSummary {
    pub puiseux: String,
    pub gcd_chain: Vec<u64>,
    pub semigroup_generators: Vec<u64>,
    pub cable_stages: Vec<[u64; 2]>,
    pub milnor: u64,
    pub genus: u64,
}
