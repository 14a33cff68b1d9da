//! Numerical semigroups `<s0, ..., sn>` as dense membership tables.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have common divisor {0}")]
    NotCoprimeGenerators(u64),
    #[error("query at {query} exceeds the membership table of length {table}; regenerate with a larger bound")]
    QueryBeyondTable { query: usize, table: usize },
}

/// A numerical semigroup with its membership table on `[0, len)`, where `len`
/// is at least the conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: usize,
    members: Vec<bool>,
    // prefix[m] = #(S ∩ [0, m))
    prefix: Vec<usize>,
    gaps: Vec<usize>,
}

impl NumericalSemigroup {
    /// Sieves the semigroup generated by `gens`, tabulating membership up to
    /// `max(bound, conductor)`.
    pub fn generate(gens: &[u64], bound: usize) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let common = gens.iter().fold(0u64, |acc, g| acc.gcd(g));
        if common != 1 {
            return Err(SemigroupError::NotCoprimeGenerators(common));
        }
        let mut sorted: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0];

        let mut size = bound.max(2 * smallest).max(16);
        let (members, conductor) = loop {
            let members = sieve(&sorted, size);
            // A run of `smallest` consecutive members certifies everything above.
            let mut run = 0;
            let mut found = None;
            for (x, &m) in members.iter().enumerate() {
                run = if m { run + 1 } else { 0 };
                if run == smallest {
                    found = Some(x + 1 - smallest);
                    break;
                }
            }
            match found {
                Some(c) => break (members, c),
                None => size *= 2,
            }
        };

        let len = bound.max(conductor);
        let mut members = members;
        members.resize(len, true);
        let mut prefix = Vec::with_capacity(len + 1);
        prefix.push(0);
        for &m in &members {
            prefix.push(prefix.last().unwrap() + usize::from(m));
        }
        let gaps = (0..conductor).filter(|&x| !members[x]).collect();
        Ok(Self {
            generators: gens.to_vec(),
            conductor,
            members,
            prefix,
            gaps,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Least `c` with `[c, inf)` contained in the semigroup.
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn gap_count(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// Length of the membership table.
    pub fn table_len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.conductor || self.members[x]
    }

    /// `#(S ∩ [0, m))`.
    pub fn count_below(&self, m: usize) -> Result<usize, SemigroupError> {
        self.prefix
            .get(m)
            .copied()
            .ok_or(SemigroupError::QueryBeyondTable {
                query: m,
                table: self.members.len(),
            })
    }

    /// Prefix counts `#(S ∩ [0, m))` for `m = 0..=upto`.
    pub fn counts_through(&self, upto: usize) -> Result<&[usize], SemigroupError> {
        self.prefix
            .get(..=upto)
            .ok_or(SemigroupError::QueryBeyondTable {
                query: upto,
                table: self.members.len(),
            })
    }

    pub fn members_below(&self, m: usize) -> Result<Vec<usize>, SemigroupError> {
        self.check_covers(m)?;
        Ok((0..m).filter(|&x| self.members[x]).collect())
    }

    /// Smallest positive element.
    pub fn min_positive(&self) -> u64 {
        *self.generators.iter().min().unwrap()
    }

    /// True iff for every `0 <= m < 2g` exactly one of `m`, `2g - 1 - m` lies in `S`.
    pub fn is_symmetric(&self, genus: usize) -> Result<bool, SemigroupError> {
        let top = 2 * genus;
        self.check_covers(top)?;
        Ok((0..top).all(|m| self.members[m] != self.members[top - 1 - m]))
    }

    /// Coefficients (constant term first) of `(1 - t) * sum_{s in S, s < 2g} t^s + t^{2g}`.
    pub fn alexander_polynomial(&self, genus: usize) -> Result<Vec<i64>, SemigroupError> {
        let top = 2 * genus;
        self.check_covers(top)?;
        let mut coeffs = vec![0i64; top + 1];
        for s in (0..top).filter(|&s| self.members[s]) {
            coeffs[s] += 1;
            coeffs[s + 1] -= 1;
        }
        coeffs[top] += 1;
        Ok(coeffs)
    }

    pub fn summary(&self) -> SemigroupSummary {
        let top = (2 * self.gap_count()).min(self.members.len());
        SemigroupSummary {
            generators: self.generators.clone(),
            conductor: self.conductor,
            gaps: self.gaps.clone(),
            members_below_2g: (0..top).filter(|&x| self.members[x]).collect(),
        }
    }

    fn check_covers(&self, m: usize) -> Result<(), SemigroupError> {
        if m > self.members.len() {
            Err(SemigroupError::QueryBeyondTable {
                query: m,
                table: self.members.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn sieve(gens: &[usize], size: usize) -> Vec<bool> {
    let mut members = vec![false; size];
    members[0] = true;
    for x in 1..size {
        members[x] = gens
            .iter()
            .take_while(|&&g| g <= x)
            .any(|&g| members[x - g]);
    }
    members
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupSummary {
    pub generators: Vec<u64>,
    pub conductor: usize,
    pub gaps: Vec<usize>,
    pub members_below_2g: Vec<usize>,
}
