//! Shared inputs for the criterion benches.

use algknot_core::KnotSpec;

/// Representative knots of increasing genus, labelled for bench ids.
pub fn fixtures() -> Vec<(&'static str, KnotSpec)> {
    [
        ("T(4,5)", "T(4,5)"),
        ("8;10,31", "8;10,31"),
        ("12;18,22,25", "12;18,22,25"),
        ("T(11,12)", "T(11,12)"),
        ("6;57,59,60", "6;57,59,60"),
    ]
    .into_iter()
    .map(|(name, text)| (name, text.parse().expect("fixture parses")))
    .collect()
}
