//! Graph Laplacian spectra, spectral gaps, the gap-vs-curvature
//! comparison, isoperimetric boundary bounds with exhaustive or sampled
//! subset verification, and the Cayley-graph spectral-gap lower bound.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curvature::global_ricci;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::eigenvalues_symmetric_f64;

/// Eigenvalues below this threshold are treated as the zero mode when
/// extracting the spectral gap.
pub const ZERO_MODE_THRESHOLD: f64 = 1e-7;

/// Largest vertex count for exhaustive subset enumeration in
/// [`verify_isoperimetry`]; larger graphs fall back to seeded sampling.
pub const EXHAUSTIVE_SUBSET_CAP: usize = 14;

/// Number of random subsets drawn in sampled isoperimetry mode.
pub const SAMPLED_SUBSET_COUNT: u64 = 100_000;

/// Default RNG seed for sampled verification ("RICC" in ASCII).
pub const DEFAULT_SEED: u64 = 0x5249_4343;

/// Laplacian eigenvalues, spectral gap, and diameter of a connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProfile {
    /// Eigenvalues of D − A, sorted ascending.
    pub laplacian_eigenvalues: Vec<f64>,
    /// Least eigenvalue exceeding [`ZERO_MODE_THRESHOLD`].
    pub spectral_gap: f64,
    /// Diameter from all-pairs BFS.
    pub diameter: usize,
}

/// The Laplacian D − A as dense f64 rows.
fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut rows = vec![vec![0.0; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = g.degree_idx(i) as f64;
        for &j in g.neighbors_idx(i) {
            row[j] = -1.0;
        }
    }
    rows
}

/// Eigenvalues of the Laplacian D − A, sorted ascending. The graph must
/// be connected.
pub fn laplacian_spectrum(g: &Graph) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "spectral profile requires a connected graph".into(),
        ));
    }
    Ok(eigenvalues_symmetric_f64(&laplacian_rows(g))?.eigenvalues)
}

/// The spectral gap: least Laplacian eigenvalue above the zero-mode
/// threshold.
pub fn spectral_gap(g: &Graph) -> Result<f64> {
    let eigs = laplacian_spectrum(g)?;
    eigs.iter()
        .copied()
        .find(|&lam| lam > ZERO_MODE_THRESHOLD)
        .ok_or_else(|| Error::Numeric {
            message: "no Laplacian eigenvalue above the zero-mode threshold".into(),
            residual: eigs.last().copied().unwrap_or(0.0),
        })
}

/// Full spectral profile of a connected graph.
pub fn spectral_profile(g: &Graph) -> Result<SpectralProfile> {
    let laplacian_eigenvalues = laplacian_spectrum(g)?;
    let spectral_gap = laplacian_eigenvalues
        .iter()
        .copied()
        .find(|&lam| lam > ZERO_MODE_THRESHOLD)
        .ok_or_else(|| Error::Numeric {
            message: "no Laplacian eigenvalue above the zero-mode threshold".into(),
            residual: 0.0,
        })?;
    let diameter = g.diameter()?;
    Ok(SpectralProfile {
        laplacian_eigenvalues,
        spectral_gap,
        diameter,
    })
}

/// Outcome of comparing the spectral gap against the global curvature.
#[derive(Debug, Clone, PartialEq)]
pub enum GapCurvatureVerdict {
    /// Curvature is positive and gap ≥ curvature − 1e−9.
    Holds { spectral_gap: f64, curvature: f64 },
    /// Curvature is positive but the inequality fails.
    Violated { spectral_gap: f64, curvature: f64 },
    /// Curvature is not positive; the comparison does not apply.
    NotApplicable { curvature: f64 },
}

/// For graphs with positive global curvature, checks the spectral-gap
/// bound λ ≥ Ric(G); otherwise reports not-applicable.
pub fn check_gap_vs_curvature(g: &Graph) -> Result<GapCurvatureVerdict> {
    let curvature = global_ricci(g)?.global;
    if curvature <= 0.0 {
        return Ok(GapCurvatureVerdict::NotApplicable { curvature });
    }
    let spectral_gap = spectral_gap(g)?;
    if spectral_gap >= curvature - 1e-9 {
        Ok(GapCurvatureVerdict::Holds {
            spectral_gap,
            curvature,
        })
    } else {
        Ok(GapCurvatureVerdict::Violated {
            spectral_gap,
            curvature,
        })
    }
}

/// Number of edges joining `subset` to its complement.
pub fn boundary_size<S: AsRef<str>>(g: &Graph, subset: &[S]) -> Result<usize> {
    let mut member = vec![false; g.vertex_count()];
    let mut indices = BTreeSet::new();
    for name in subset {
        indices.insert(g.index_of(name.as_ref())?);
    }
    for i in indices {
        member[i] = true;
    }
    Ok(g.edges_idx()
        .into_iter()
        .filter(|&(a, b)| member[a] != member[b])
        .count())
}

/// The isoperimetric right-hand side
/// ½·min(√λ, λ/√(2|K|))·|A|·(1 − |A|/|V|) for nonzero curvature K.
pub fn isoperimetric_rhs(gap: f64, curvature: f64, size_a: usize, size_v: usize) -> Result<f64> {
    if curvature == 0.0 {
        return Err(Error::Domain(
            "isoperimetric bound requires nonzero curvature".into(),
        ));
    }
    if !(gap > 0.0) {
        return Err(Error::Domain("isoperimetric bound requires a positive gap".into()));
    }
    if size_a > size_v || size_v == 0 {
        return Err(Error::Domain(format!(
            "subset size {size_a} exceeds vertex count {size_v}"
        )));
    }
    let scale = gap.sqrt().min(gap / (2.0 * curvature.abs()).sqrt());
    Ok(0.5 * scale * size_a as f64 * (1.0 - size_a as f64 / size_v as f64))
}

/// Result of verifying the isoperimetric inequality over vertex subsets.
#[derive(Debug, Clone, PartialEq)]
pub enum IsoperimetryVerdict {
    /// The graph's global curvature is zero, so the bound does not apply.
    NotApplicable { curvature: f64 },
    /// The inequality was checked subset by subset.
    Checked {
        passed: bool,
        /// False for exhaustive enumeration, true for seeded sampling.
        sampled: bool,
        curvature: f64,
        spectral_gap: f64,
        subsets_checked: u64,
        /// Smallest observed boundary − rhs over proper nonempty subsets.
        worst_slack: f64,
        /// The subset attaining the worst slack.
        worst_subset: Vec<String>,
    },
}

impl IsoperimetryVerdict {
    /// Whether the verification is applicable and passed.
    pub fn passed(&self) -> bool {
        matches!(self, IsoperimetryVerdict::Checked { passed: true, .. })
    }
}

/// Verifies boundary(A) ≥ isoperimetric rhs − 1e−9 over vertex subsets,
/// exhaustively for graphs of at most [`EXHAUSTIVE_SUBSET_CAP`] vertices
/// and by seeded uniform sampling (labeled as such) for larger graphs.
/// Uses [`DEFAULT_SEED`]; see [`verify_isoperimetry_seeded`].
///
/// The empty and full subsets satisfy the bound with exact equality
/// (boundary 0, rhs 0), so only proper nonempty subsets are enumerated.
pub fn verify_isoperimetry(g: &Graph) -> Result<IsoperimetryVerdict> {
    verify_isoperimetry_seeded(g, DEFAULT_SEED)
}

/// [`verify_isoperimetry`] with an explicit RNG seed for sampled mode.
pub fn verify_isoperimetry_seeded(g: &Graph, seed: u64) -> Result<IsoperimetryVerdict> {
    let curvature = global_ricci(g)?.global;
    if curvature == 0.0 {
        return Ok(IsoperimetryVerdict::NotApplicable { curvature });
    }
    let gap = spectral_gap(g)?;
    let n = g.vertex_count();
    let edges = g.edges_idx();
    let mut passed = true;
    let mut worst_slack = f64::INFINITY;
    let mut worst_subset: Vec<usize> = Vec::new();
    let mut subsets_checked = 0u64;
    let mut consider = |member: &[bool]| -> Result<()> {
        let size_a = member.iter().filter(|&&b| b).count();
        let boundary = edges
            .iter()
            .filter(|&&(a, b)| member[a] != member[b])
            .count();
        let rhs = isoperimetric_rhs(gap, curvature, size_a, n)?;
        let slack = boundary as f64 - rhs;
        if slack < worst_slack {
            worst_slack = slack;
            worst_subset = member
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect();
        }
        if slack < -1e-9 {
            passed = false;
        }
        subsets_checked += 1;
        Ok(())
    };
    let sampled = n > EXHAUSTIVE_SUBSET_CAP;
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut member = vec![false; n];
        for _ in 0..SAMPLED_SUBSET_COUNT {
            loop {
                for slot in member.iter_mut() {
                    *slot = rng.gen_bool(0.5);
                }
                let size = member.iter().filter(|&&b| b).count();
                if size != 0 && size != n {
                    break;
                }
            }
            consider(&member)?;
        }
    } else {
        for mask in 1..((1u32 << n) - 1) {
            let member: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            consider(&member)?;
        }
    }
    drop(consider);
    Ok(IsoperimetryVerdict::Checked {
        passed,
        sampled,
        curvature,
        spectral_gap: gap,
        subsets_checked,
        worst_slack,
        worst_subset: worst_subset.into_iter().map(|i| g.name(i).to_string()).collect(),
    })
}

/// Spectral-gap lower bound for a Cayley graph:
/// |G| / (d · |S|^d) with d the graph diameter. Overflow-prone inputs
/// are evaluated in floating point; an infinite denominator yields 0.
pub fn cayley_gap_lower_bound(
    group_order: u128,
    generator_count: u64,
    diameter: u64,
) -> Result<f64> {
    if group_order == 0 || generator_count == 0 || diameter == 0 {
        return Err(Error::Domain(
            "Cayley gap bound requires positive order, generator count, and diameter".into(),
        ));
    }
    let denominator = diameter as f64 * (generator_count as f64).powf(diameter as f64);
    if !denominator.is_finite() {
        return Ok(0.0);
    }
    Ok(group_order as f64 / denominator)
}
