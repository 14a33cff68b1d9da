//! Exhaustive enumeration of Puiseux sequences and torus knots, used for
//! sweeps in tests, benchmarks and the CLI.

use num_integer::Integer;

use crate::knot::KnotSpec;
use crate::puiseux::PuiseuxSequence;

/// Every valid sequence with `qn <= max_term` and at most `max_pairs`
/// characteristic pairs, in lexicographic order of terms.
pub fn puiseux_sequences(max_term: u64, max_pairs: usize) -> Vec<PuiseuxSequence> {
    let mut out = Vec::new();
    let mut terms = Vec::new();
    for q0 in 2..=max_term {
        terms.clear();
        terms.push(q0);
        extend(&mut terms, q0, max_term, max_pairs, &mut out);
    }
    out
}

fn extend(
    terms: &mut Vec<u64>,
    divisor: u64,
    max_term: u64,
    max_pairs: usize,
    out: &mut Vec<PuiseuxSequence>,
) {
    if divisor == 1 {
        out.push(PuiseuxSequence::new(terms.clone()).expect("enumerated sequence is valid"));
        return;
    }
    if terms.len() > max_pairs {
        return;
    }
    let last = *terms.last().unwrap();
    for q in last + 1..=max_term {
        if q % divisor != 0 {
            terms.push(q);
            extend(terms, divisor.gcd(&q), max_term, max_pairs, out);
            terms.pop();
        }
    }
}

/// Torus knots `T(a, b)` with coprime `2 <= a < b <= max`.
pub fn torus_knots(max: u64) -> Vec<KnotSpec> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in a + 1..=max {
            if a.gcd(&b) == 1 {
                out.push(KnotSpec::Torus { a, b });
            }
        }
    }
    out
}
