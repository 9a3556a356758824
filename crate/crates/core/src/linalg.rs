//! Exact-rational symmetric matrices and the numeric routines used on
//! them: cyclic Jacobi eigenvalues, Gershgorin intervals, and closed-form
//! spectra for tridiagonal-Toeplitz and circulant matrices.
//!
//! Matrices are assembled in exact rational arithmetic and converted to
//! floating point exactly once, at the eigen-analysis boundary.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Convenience constructor for small rational constants.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Dense symmetric matrix with exact rational entries (kept in lowest
/// terms by the arithmetic itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    dim: usize,
    /// Row-major entries; the symmetric pair is updated on every write.
    entries: Vec<BigRational>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymmetricMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    /// Builds from full rows, rejecting non-square or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Invalid("matrix rows must form a square".into()));
        }
        let m = SymmetricMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        for i in 0..dim {
            for j in (i + 1)..dim {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Invalid(format!(
                        "matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    /// Writes entry (i,j) and its mirror (j,i).
    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.dim + j] = value.clone();
        self.entries[j * self.dim + i] = value;
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scaled_by_int(&self, factor: i64) -> Self {
        let f = rat(factor, 1);
        SymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * &f).collect(),
        }
    }

    /// One-time conversion to floating point for eigen-analysis.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    /// Exact positive-definiteness test: symmetric Gaussian elimination
    /// succeeds with every pivot strictly positive iff all leading
    /// principal minors are positive.
    pub fn is_positive_definite(&self) -> bool {
        self.elimination_pivots_positive(0).is_ok()
    }

    /// Schur complement onto the leading `keep` indices: eliminates the
    /// trailing block, which must be positive definite.
    pub fn schur_complement_trailing(&self, keep: usize) -> Result<Self> {
        debug_assert!(keep <= self.dim);
        let reduced = self.eliminate_trailing(keep)?;
        let mut out = SymmetricMatrix::zeros(keep);
        for i in 0..keep {
            for j in i..keep {
                out.set(i, j, reduced[i][j].clone());
            }
        }
        Ok(out)
    }

    /// Eliminates indices keep..dim (in descending order), checking each
    /// pivot is positive; returns the updated leading block rows.
    fn eliminate_trailing(&self, keep: usize) -> Result<Vec<Vec<BigRational>>> {
        let mut m: Vec<Vec<BigRational>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect();
        for k in (keep..self.dim).rev() {
            let pivot = m[k][k].clone();
            if !pivot.is_positive() {
                return Err(Error::Domain(format!(
                    "pivot {pivot} at index {k} is not positive; the \
                     eliminated block is not positive definite"
                )));
            }
            for i in 0..k {
                if m[i][k].is_zero() {
                    continue;
                }
                let factor = &m[i][k] / &pivot;
                for j in 0..k {
                    let delta = &factor * &m[j][k];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        Ok(m)
    }

    fn elimination_pivots_positive(&self, keep: usize) -> Result<()> {
        self.eliminate_trailing(keep).map(|_| ())
    }
}

/// Eigenvalue result of the Jacobi solver.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// All real eigenvalues with multiplicity, sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// Number of Jacobi rotations applied.
    pub iterations: usize,
    /// Off-diagonal Frobenius norm at termination.
    pub residual: f64,
}

/// Convergence target for a matrix with the given initial Frobenius
/// norm: 1e-12 relative, with an absolute floor for zero matrices.
pub fn jacobi_tolerance(initial_frobenius: f64) -> f64 {
    f64::max(1e-12 * initial_frobenius, 1e-300)
}

const JACOBI_SWEEP_CAP: usize = 100;

fn frobenius(rows: &[Vec<f64>]) -> f64 {
    rows.iter()
        .flat_map(|r| r.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
}

fn off_diagonal_norm(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += rows[i][j] * rows[i][j];
            }
        }
    }
    sum.sqrt()
}

/// All eigenvalues of a symmetric matrix by cyclic-by-rows Jacobi
/// rotations on its floating-point image.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix) -> Result<Spectrum> {
    eigenvalues_symmetric_f64(&m.to_f64_rows())
}

/// Jacobi eigenvalues of an explicitly floating-point symmetric matrix.
pub fn eigenvalues_symmetric_f64(rows: &[Vec<f64>]) -> Result<Spectrum> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("matrix must be square".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if !rows[i][j].is_finite() {
                return Err(Error::Domain(format!(
                    "non-finite entry at ({i},{j})"
                )));
            }
            if rows[i][j] != rows[j][i] {
                return Err(Error::Domain(format!(
                    "matrix is not symmetric at ({i},{j})"
                )));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let tol = jacobi_tolerance(frobenius(&a));
    let mut rotations = 0usize;
    let mut residual = off_diagonal_norm(&a);
    let mut sweeps = 0usize;
    while residual > tol {
        if sweeps == JACOBI_SWEEP_CAP {
            return Err(Error::Numeric {
                message: format!(
                    "Jacobi solver did not reach tolerance {tol:e} within \
                     {JACOBI_SWEEP_CAP} sweeps"
                ),
                residual,
            });
        }
        sweeps += 1;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle chosen to annihilate a[p][q].
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[p][r] = a[r][p];
                    a[r][q] = s * arp + c * arq;
                    a[q][r] = a[r][q];
                }
                rotations += 1;
            }
        }
        residual = off_diagonal_norm(&a);
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum {
        eigenvalues,
        iterations: rotations,
        residual,
    })
}

/// Gershgorin intervals [m_ii − R_i, m_ii + R_i] with R_i the absolute
/// off-diagonal row sum; for symmetric matrices all eigenvalues lie in
/// their union.
pub fn gershgorin_intervals(m: &SymmetricMatrix) -> Vec<(f64, f64)> {
    gershgorin_intervals_f64(&m.to_f64_rows())
}

pub fn gershgorin_intervals_f64(rows: &[Vec<f64>]) -> Vec<(f64, f64)> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let radius: f64 = row
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.abs())
                .sum();
            (row[i] - radius, row[i] + radius)
        })
        .collect()
}

/// True when every eigenvalue lies in the union of the Gershgorin
/// intervals, with `slack` absolute tolerance at the endpoints.
pub fn spectrum_within_gershgorin(
    eigenvalues: &[f64],
    intervals: &[(f64, f64)],
    slack: f64,
) -> bool {
    eigenvalues.iter().all(|lambda| {
        intervals
            .iter()
            .any(|(lo, hi)| *lambda >= lo - slack && *lambda <= hi + slack)
    })
}

/// Closed-form spectrum of the n×n tridiagonal Toeplitz matrix with
/// diagonal b, sub-/super-diagonals a and c, and corner diagonal entries
/// b−α and b−β: when α = β = √(a·c) ≠ 0 the eigenvalues are
/// b + 2√(αβ)·cos(iπ/n) for i = 1..n (returned in that order).
pub fn tridiagonal_toeplitz_eigs(
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    c: f64,
    n: usize,
) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Domain("matrix dimension must be positive".into()));
    }
    let ac = a * c;
    if !(ac > 0.0) {
        return Err(Error::Domain(format!(
            "closed form requires a·c > 0, got {ac}"
        )));
    }
    let s = ac.sqrt();
    let tol = 1e-12 * (1.0 + s);
    if (alpha - s).abs() > tol || (beta - s).abs() > tol {
        return Err(Error::Domain(format!(
            "closed form requires α = β = √(a·c) = {s}, got α = {alpha}, β = {beta}"
        )));
    }
    let root = (alpha * beta).sqrt();
    Ok((1..=n)
        .map(|i| b + 2.0 * root * (std::f64::consts::PI * i as f64 / n as f64).cos())
        .collect())
}

/// Spectrum of the circulant matrix with first row c:
/// λ_j = Σ_k c_{(n−k) mod n}·ζ^{kj} with ζ = e^{2πi/n}, j = 0..n−1.
pub fn circulant_eigs(c: &[f64]) -> Result<Vec<Complex64>> {
    let n = c.len();
    if n == 0 {
        return Err(Error::Domain("circulant needs at least one entry".into()));
    }
    Ok((0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    let angle = 2.0 * std::f64::consts::PI * (k * j) as f64 / n as f64;
                    Complex64::from_polar(c[(n - k) % n], angle)
                })
                .sum()
        })
        .collect())
}

/// Real circulant spectrum; errors if any imaginary part exceeds 1e−9
/// (symmetric circulants are real up to roundoff).
pub fn circulant_real_eigs(c: &[f64]) -> Result<Vec<f64>> {
    let eigs = circulant_eigs(c)?;
    let worst = eigs.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if worst > 1e-9 {
        return Err(Error::Numeric {
            message: "circulant spectrum has a non-negligible imaginary part".into(),
            residual: worst,
        });
    }
    Ok(eigs.into_iter().map(|z| z.re).collect())
}
