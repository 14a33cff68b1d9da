//! Seifert matrices of closed positive braids and a floating point
//! Tristram-Levine signature oracle built on them.
//!
//! Seifert's algorithm on a closed positive braid with `n` strands gives `n`
//! stacked disks joined by one half-twisted band per crossing. For each
//! generator `σ_k`, consecutive bands between disks `k` and `k+1` bound a
//! loop; these loops form a basis of the first homology of the surface.

use nalgebra::{DMatrix, SymmetricEigen};
use num_integer::Integer;
use num_rational::BigRational;

use crate::rational;
use crate::signature::SignatureError;

/// Default relative eigenvalue margin for [`signature_oracle`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The word `(σ1 σ2 ... σ(p-1))^q`, generators numbered from 1.
pub fn torus_braid(p: usize, q: usize) -> Vec<usize> {
    (0..q).flat_map(|_| 1..p).collect()
}

#[derive(Debug, Clone, Copy)]
struct Loop {
    column: usize,
    start: usize,
    end: usize,
}

/// Seifert matrix `V[a][b] = lk(a, b⁺)` of the closure of a positive braid.
///
/// Loop `a` in column `k` runs between crossings `c1 < c2`:
/// * `V[a][a] = -1`;
/// * the next loop `b` in the same column (starting at `c2`) has `V[a][b] = 1`;
/// * a loop `b` in column `k + 1` spanning `(d1, d2)` has `V[a][b] = -1` when
///   `c1 < d1 < c2 < d2`, and `V[b][a] = 1` when `d1 < c1 < d2 < c2`.
pub fn positive_braid_seifert_matrix(word: &[usize]) -> DMatrix<i64> {
    let columns = word.iter().copied().max().unwrap_or(0);
    let mut loops = Vec::new();
    for column in 1..=columns {
        let crossings: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|&(_, &g)| g == column)
            .map(|(i, _)| i)
            .collect();
        loops.extend(crossings.windows(2).map(|w| Loop {
            column,
            start: w[0],
            end: w[1],
        }));
    }
    let n = loops.len();
    let mut v = DMatrix::<i64>::zeros(n, n);
    for (i, a) in loops.iter().enumerate() {
        v[(i, i)] = -1;
        for (j, b) in loops.iter().enumerate() {
            if b.column == a.column && b.start == a.end {
                v[(i, j)] = 1;
            } else if b.column == a.column + 1 {
                if a.start < b.start && b.start < a.end && a.end < b.end {
                    v[(i, j)] = -1;
                }
                if b.start < a.start && a.start < b.end && b.end < a.end {
                    v[(j, i)] = 1;
                }
            }
        }
    }
    v
}

/// Signature of `(1 - ω)V + (1 - ω̄)Vᵀ` at `ω = e^{2πix}`.
///
/// The Hermitian matrix `A + iB` is embedded as the real symmetric
/// `[[A, -B], [B, A]]`, whose spectrum is that of `A + iB` with every
/// eigenvalue doubled. Fails when some eigenvalue is within
/// `tolerance · ‖M‖` of zero.
pub fn tristram_levine(v: &DMatrix<i64>, x: f64, tolerance: f64) -> Result<i64, SignatureError> {
    let n = v.nrows();
    if n == 0 {
        return Ok(0);
    }
    let angle = std::f64::consts::TAU * x;
    let (c, s) = (angle.cos(), angle.sin());
    // (1 - ω)V + (1 - ω̄)Vᵀ = (1 - c)(V + Vᵀ) + i·s·(Vᵀ - V)
    let mut real = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let (vij, vji) = (v[(i, j)] as f64, v[(j, i)] as f64);
            let a = (1.0 - c) * (vij + vji);
            let b = s * (vji - vij);
            real[(i, j)] = a;
            real[(i + n, j + n)] = a;
            real[(i, j + n)] = -b;
            real[(i + n, j)] = b;
        }
    }
    let eigen = SymmetricEigen::new(real);
    let norm = eigen.eigenvalues.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let margin = tolerance * norm;
    let mut balance = 0i64;
    for &e in eigen.eigenvalues.iter() {
        if e.abs() <= margin {
            return Err(SignatureError::EigenvalueTooCloseToZero { value: e, margin });
        }
        balance += if e > 0.0 { 1 } else { -1 };
    }
    Ok(balance / 2)
}

/// Tristram-Levine signature of `T(p, q)` at `x`, from the Seifert matrix of
/// the closed braid `(σ1 ... σ(p-1))^q`.
pub fn signature_oracle(
    p: u64,
    q: u64,
    x: &BigRational,
    tolerance: f64,
) -> Result<i64, SignatureError> {
    let (p, q) = if p > q { (q, p) } else { (p, q) };
    if p < 2 || p.gcd(&q) != 1 {
        return Err(SignatureError::NotCoprime(p, q));
    }
    let v = positive_braid_seifert_matrix(&torus_braid(p as usize, q as usize));
    tristram_levine(&v, rational::to_f64(x), tolerance)
}
