//! Upper envelope of a family of integer-coefficient lines, clipped to an
//! interval, with exact rational breakpoints.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::pl::{PiecewiseLinear, PlError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub slope: BigInt,
    pub intercept: BigInt,
}

impl Line {
    pub fn new(slope: impl Into<BigInt>, intercept: impl Into<BigInt>) -> Self {
        Self {
            slope: slope.into(),
            intercept: intercept.into(),
        }
    }

    pub fn at(&self, t: &BigRational) -> BigRational {
        BigRational::from_integer(self.intercept.clone())
            + BigRational::from_integer(self.slope.clone()) * t
    }

    /// Abscissa where `self` and `other` meet. Slopes must differ.
    fn meet(&self, other: &Line) -> BigRational {
        BigRational::new(
            &self.intercept - &other.intercept,
            &other.slope - &self.slope,
        )
    }
}

/// `max_i lines[i](t)` on `[lo, hi]`.
///
/// Lines are sorted by slope (equal slopes keep the larger intercept), swept
/// once through a monotone stack to drop dominated lines, and the surviving
/// neighbours are intersected.
pub fn upper_envelope(
    lines: &[Line],
    lo: &BigRational,
    hi: &BigRational,
) -> Result<PiecewiseLinear, PlError> {
    if lines.is_empty() || lo >= hi {
        return Err(PlError::TooFewPoints);
    }
    let mut sorted: Vec<&Line> = lines.iter().collect();
    sorted.sort_by(|a, b| (&a.slope, &a.intercept).cmp(&(&b.slope, &b.intercept)));

    let mut hull: Vec<&Line> = Vec::with_capacity(sorted.len());
    for (i, line) in sorted.iter().enumerate() {
        if sorted
            .get(i + 1)
            .is_some_and(|next| next.slope == line.slope)
        {
            continue;
        }
        while hull.len() >= 2 {
            let (l1, l2) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // l2 is dominated when meet(l1, l2) >= meet(l2, line)
            let lhs = (&l1.intercept - &l2.intercept) * (&line.slope - &l2.slope);
            let rhs = (&l2.intercept - &line.intercept) * (&l2.slope - &l1.slope);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(line);
    }

    let meets: Vec<BigRational> = hull.windows(2).map(|w| w[0].meet(w[1])).collect();
    let start = meets.partition_point(|x| x <= lo);
    let mut points = vec![(lo.clone(), hull[start].at(lo))];
    for (j, x) in meets.iter().enumerate().skip(start) {
        if x >= hi {
            break;
        }
        points.push((x.clone(), hull[j].at(x)));
    }
    let last = meets.partition_point(|x| x < hi);
    points.push((hi.clone(), hull[last].at(hi)));
    PiecewiseLinear::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn brute_max(lines: &[Line], t: &BigRational) -> BigRational {
        lines.iter().map(|l| l.at(t)).max().unwrap()
    }

    #[test]
    fn single_line() {
        let f = upper_envelope(&[Line::new(-3, 0)], &int(0), &int(1)).unwrap();
        assert_eq!(f.breakpoints().len(), 2);
        assert_eq!(f.evaluate(&int(1)).unwrap(), int(-3));
    }

    #[test]
    fn two_lines_cross_inside() {
        let lines = [Line::new(-3, 0), Line::new(0, -2)];
        let f = upper_envelope(&lines, &int(0), &int(1)).unwrap();
        let ts: Vec<_> = f.breakpoints().iter().map(|p| p.t.clone()).collect();
        assert_eq!(ts, vec![int(0), ratio(2, 3), int(1)]);
    }

    #[test]
    fn equal_slopes_keep_larger_intercept() {
        let lines = [Line::new(1, -5), Line::new(1, 2), Line::new(1, 0)];
        let f = upper_envelope(&lines, &int(0), &int(1)).unwrap();
        assert_eq!(f.evaluate(&int(0)).unwrap(), int(2));
    }

    #[test]
    fn crossing_outside_interval_is_clipped() {
        let lines = [Line::new(-1, 0), Line::new(1, -10)];
        let f = upper_envelope(&lines, &int(0), &int(1)).unwrap();
        assert_eq!(f.breakpoints().len(), 2);
        let g = upper_envelope(&lines, &int(6), &int(7)).unwrap();
        assert_eq!(g.evaluate(&int(6)).unwrap(), int(-4));
        assert_eq!(g.breakpoints().len(), 2);
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            raw in proptest::collection::vec((-12i64..12, -12i64..12), 1..14),
            samples in proptest::collection::vec((0i64..=60, 1i64..=60), 1..20),
        ) {
            let lines: Vec<Line> = raw.iter().map(|&(s, b)| Line::new(s, b)).collect();
            let (lo, hi) = (int(-1), int(2));
            let f = upper_envelope(&lines, &lo, &hi).unwrap();
            prop_assert!(f.is_convex());
            for &(n, d) in &samples {
                let t = &lo + ratio(3 * (n % (d + 1)), d);
                prop_assert_eq!(f.evaluate(&t).unwrap(), brute_max(&lines, &t));
            }
            for p in f.breakpoints() {
                prop_assert_eq!(p.v.clone(), brute_max(&lines, &p.t));
            }
        }
    }
}
