//! The Upsilon function of an algebraic knot and the cobordism genus bounds it
//! gives.
//!
//! For an algebraic knot of genus `g` with semigroup `S`,
//!
//! ```text
//! Υ(t) = max_{0 <= m <= 2g} ( -2·#(S ∩ [0, m)) - t·(g - m) ),   t ∈ [0, 1],
//! ```
//!
//! so Υ is the upper envelope of `2g + 1` integer lines and is computed exactly.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::envelope::{upper_envelope, Line};
use crate::knot::KnotSpec;
use crate::pl::PiecewiseLinear;
use crate::rational;
use crate::semigroup::NumericalSemigroup;

/// A computed value contradicted a result this crate relies on. Never expected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("internal assertion failed: {0}")]
pub struct TheoremViolation(pub String);

/// The semigroup of `knot`, tabulated through `2g`.
pub fn semigroup_of(knot: &KnotSpec) -> NumericalSemigroup {
    let seq = knot.sequence();
    let g = seq.genus() as usize;
    NumericalSemigroup::generate(seq.semigroup_generators(), 2 * g)
        .expect("Puiseux generators are coprime")
}

/// The affine pieces `L_m(t) = -2·#(S ∩ [0, m)) + t·(m - g)` for `m = 0..=2g`.
pub fn upsilon_lines(knot: &KnotSpec) -> Vec<Line> {
    lines_from(&semigroup_of(knot), knot.genus() as usize, |_| true)
}

fn lines_from(semigroup: &NumericalSemigroup, g: usize, keep: impl Fn(usize) -> bool) -> Vec<Line> {
    let counts = semigroup.counts_through(2 * g).expect("table covers 2g");
    counts
        .iter()
        .enumerate()
        .filter(|&(m, _)| keep(m))
        .map(|(m, &c)| Line::new(m as i64 - g as i64, -2 * c as i64))
        .collect()
}

/// Υ of `knot` on `[0, 1]`.
pub fn upsilon_of(knot: &KnotSpec) -> PiecewiseLinear {
    let g = knot.genus() as usize;
    let semigroup = semigroup_of(knot);
    // Among m with equal counts the largest m dominates on t >= 0, so only
    // m ∈ S (where the count steps up next) and m = 2g can contribute.
    let candidates = lines_from(&semigroup, g, |m| m == 2 * g || semigroup.contains(m));
    upper_envelope(&candidates, &rational::int(0), &rational::int(1))
        .expect("nonempty family on a nondegenerate interval")
}

/// τ, the negative of the initial slope of Υ.
pub fn tau_of(knot: &KnotSpec) -> i64 {
    let upsilon = upsilon_of(knot);
    let slope = &upsilon.slopes()[0];
    assert!(slope.is_integer(), "initial slope {slope} is not integral");
    -slope.to_integer().to_i64().expect("slope fits in i64")
}

/// The first `t > 0` where Υ changes slope, checked to be `2/q0` with
/// `Υ(t) = -g·t` there.
pub fn first_singularity(knot: &KnotSpec) -> Result<BigRational, TheoremViolation> {
    let upsilon = upsilon_of(knot);
    let first = upsilon.first_breakpoint();
    let expected = rational::ratio(2, knot.multiplicity() as i64);
    if first.t != expected {
        return Err(TheoremViolation(format!(
            "first singularity of {knot} at {} instead of {}",
            rational::format(&first.t),
            rational::format(&expected)
        )));
    }
    let linear = -rational::int(knot.genus() as i64) * &first.t;
    if first.v != linear {
        return Err(TheoremViolation(format!(
            "Υ of {knot} at its first singularity is {}, not -g·t = {}",
            rational::format(&first.v),
            rational::format(&linear)
        )));
    }
    Ok(first.t.clone())
}

/// Υ of `k1 # -k0`, that is `Υ_k1 - Υ_k0` on `[0, 1]`.
pub fn upsilon_diff(k1: &KnotSpec, k0: &KnotSpec) -> PiecewiseLinear {
    upsilon_of(k1)
        .sub(&upsilon_of(k0))
        .expect("both functions live on [0, 1]")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusBound {
    /// Smallest integer at least `sup`.
    pub bound: i64,
    /// Where the supremum is attained; `0` stands for the limit `t -> 0+`.
    #[serde(serialize_with = "rational::serialize")]
    pub witness_t: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub sup: BigRational,
}

/// Lower bound on the genus of any cobordism between `k0` and `k1` from
/// `|Υ_{k1 # -k0}(t)| <= t·g4(k1 # -k0)` over `t ∈ (0, 1]`.
///
/// On each segment `|α + βt| / t = |α/t + β|` is monotone away from its zero,
/// so the supremum sits at a breakpoint, at `t = 1`, or in the limit `t -> 0+`
/// where it equals the absolute initial slope. Ties report the smallest `t`.
pub fn cobordism_genus_lower_bound(k0: &KnotSpec, k1: &KnotSpec) -> GenusBound {
    let diff = upsilon_diff(k1, k0);
    ratio_supremum(&diff)
}

/// `sup_{t ∈ (0, hi]} |f(t)| / t` for `f` with `f(0) = 0` on `[0, hi]`.
pub fn ratio_supremum(f: &PiecewiseLinear) -> GenusBound {
    let (lo, _) = f.domain();
    assert!(lo.is_zero(), "ratio supremum needs a domain starting at 0");
    let mut best_t = BigRational::zero();
    let mut best = f.slopes()[0].abs();
    for p in &f.breakpoints()[1..] {
        let ratio = p.v.abs() / &p.t;
        if ratio > best {
            best = ratio;
            best_t = p.t.clone();
        }
    }
    GenusBound {
        bound: rational::ceil_to_int(&best)
            .to_i64()
            .expect("genus bound fits in i64"),
        witness_t: best_t,
        sup: best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use num_bigint::BigInt;

    fn torus(a: u64, b: u64) -> KnotSpec {
        KnotSpec::torus(a, b).unwrap()
    }

    fn knot(text: &str) -> KnotSpec {
        text.parse().unwrap()
    }

    fn points(f: &PiecewiseLinear) -> Vec<(BigRational, BigRational)> {
        f.breakpoints()
            .iter()
            .map(|p| (p.t.clone(), p.v.clone()))
            .collect()
    }

    /// Direct maximum over every m in 0..=2g, with integer arithmetic.
    fn brute_upsilon(knot: &KnotSpec, t: &BigRational) -> BigRational {
        let g = knot.genus() as i64;
        let seq = knot.sequence();
        let gens = seq.semigroup_generators();
        let in_s = |x: i64| {
            // x is a nonnegative combination of generators
            let mut reach = vec![false; x as usize + 1];
            reach[0] = true;
            for y in 1..=x as usize {
                reach[y] = gens
                    .iter()
                    .any(|&s| s as usize <= y && reach[y - s as usize]);
            }
            reach[x as usize]
        };
        (0..=2 * g)
            .map(|m| {
                let count = (0..m).filter(|&x| in_s(x)).count() as i64;
                int(-2 * count) - t * int(g - m)
            })
            .max()
            .unwrap()
    }

    #[test]
    fn trefoil_is_a_single_segment() {
        let u = upsilon_of(&torus(2, 3));
        assert_eq!(points(&u), vec![(int(0), int(0)), (int(1), int(-1))]);
    }

    #[test]
    fn t34_and_t45_envelopes() {
        let u = upsilon_of(&torus(3, 4));
        assert_eq!(
            points(&u),
            vec![(int(0), int(0)), (ratio(2, 3), int(-2)), (int(1), int(-2))]
        );
        assert_eq!(u.slopes(), vec![int(-3), int(0)]);

        let u = upsilon_of(&torus(4, 5));
        assert_eq!(
            points(&u),
            vec![(int(0), int(0)), (ratio(1, 2), int(-3)), (int(1), int(-4))]
        );
        assert_eq!(u.slopes(), vec![int(-6), int(-2)]);
    }

    #[test]
    fn envelope_matches_brute_force_on_small_knots() {
        for k in [
            torus(2, 3),
            torus(3, 4),
            torus(4, 5),
            torus(3, 10),
            knot("4;6,7"),
        ] {
            let u = upsilon_of(&k);
            for d in 1..=24 {
                for n in 0..=d {
                    let t = ratio(n, d);
                    assert_eq!(u.evaluate(&t).unwrap(), brute_upsilon(&k, &t), "{k} at {t}");
                }
            }
        }
    }

    #[test]
    fn evaluations() {
        let t = ratio(2, 3);
        assert_eq!(
            upsilon_of(&torus(4, 5)).evaluate(&t).unwrap(),
            ratio(-10, 3)
        );
        assert_eq!(upsilon_of(&torus(3, 10)).evaluate(&t).unwrap(), int(-6));
        assert_eq!(
            upsilon_of(&knot("4;6,7")).evaluate(&int(0)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn symmetric_extensions() {
        let e = upsilon_of(&torus(2, 3)).extend_symmetric();
        assert_eq!(
            points(&e),
            vec![(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]
        );
        let e = upsilon_of(&torus(3, 4)).extend_symmetric();
        assert_eq!(e.evaluate(&ratio(2, 3)).unwrap(), int(-2));
        assert_eq!(e.evaluate(&ratio(4, 3)).unwrap(), int(-2));
        assert_eq!(e.evaluate(&int(1)).unwrap(), int(-2));
    }

    #[test]
    fn tau_equals_genus() {
        assert_eq!(tau_of(&torus(3, 10)), 9);
        assert_eq!(tau_of(&knot("4;6,7")), 8);
        assert_eq!(tau_of(&torus(2, 3)), 1);
    }

    #[test]
    fn first_singularities() {
        assert_eq!(first_singularity(&knot("4;6,7")), Ok(ratio(1, 2)));
        assert_eq!(first_singularity(&torus(3, 4)), Ok(ratio(2, 3)));
        assert_eq!(first_singularity(&torus(2, 3)), Ok(int(1)));
        assert_eq!(first_singularity(&knot("12;18,22,25")), Ok(ratio(1, 6)));
    }

    #[test]
    fn differences() {
        let d = upsilon_diff(&torus(3, 10), &torus(4, 5));
        assert_eq!(d.evaluate(&ratio(2, 3)).unwrap(), ratio(-8, 3));
        assert_eq!(d.slopes()[0], int(-3));
        assert_eq!(d.breakpoints()[1].t, ratio(1, 2));

        let k = knot("4;6,7");
        let zero = upsilon_diff(&k, &k);
        assert_eq!(zero, PiecewiseLinear::zero(int(0), int(1)).unwrap());
    }

    #[test]
    fn additivity_at_merged_breakpoints() {
        let (k1, k0) = (knot("4;30,31"), knot("8;10,31"));
        let d = upsilon_diff(&k1, &k0);
        let (u1, u0) = (upsilon_of(&k1), upsilon_of(&k0));
        for p in d
            .breakpoints()
            .iter()
            .chain(u0.breakpoints())
            .chain(u1.breakpoints())
        {
            assert_eq!(
                d.evaluate(&p.t).unwrap() + u0.evaluate(&p.t).unwrap(),
                u1.evaluate(&p.t).unwrap()
            );
        }
    }

    #[test]
    fn genus_bounds() {
        let b = cobordism_genus_lower_bound(&torus(4, 5), &torus(3, 10));
        assert_eq!((b.bound, b.witness_t), (4, ratio(2, 3)));

        let k = knot("4;6,7");
        let b = cobordism_genus_lower_bound(&k, &k);
        assert_eq!((b.bound, b.witness_t), (0, int(0)));

        let b = cobordism_genus_lower_bound(&torus(2, 3), &torus(3, 4));
        assert_eq!((b.bound, b.witness_t), (2, int(0)));
    }

    #[test]
    fn genus_bound_matches_dense_grid() {
        // the supremum over a fine grid never exceeds the breakpoint scan and
        // reaches it at the reported witness
        let pairs = [
            (torus(4, 5), torus(3, 10)),
            (torus(2, 3), torus(3, 4)),
            (torus(2, 3), torus(2, 5)),
            (knot("8;10,31"), knot("4;30,31")),
        ];
        for (k0, k1) in pairs {
            let bound = cobordism_genus_lower_bound(&k0, &k1);
            let diff = upsilon_diff(&k1, &k0);
            let mut grid_best = BigRational::zero();
            for n in 1..=600 {
                let t = ratio(n, 600);
                let r = diff.evaluate(&t).unwrap().abs() / &t;
                grid_best = grid_best.max(r);
            }
            assert!(grid_best <= bound.sup, "{k0} {k1}");
            assert_eq!(
                rational::ceil_to_int(&grid_best),
                BigInt::from(bound.bound),
                "{k0} {k1}"
            );
        }
    }
}
