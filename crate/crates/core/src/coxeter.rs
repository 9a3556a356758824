//! Coxeter diagrams for the finite and affine irreducible types, the
//! commutation matrix M_W of a generating set, closed-form and spectral
//! curvature of weak-order graphs, explicit Cayley-graph generation for
//! the permutation-modeled families, and Bruhat graphs of small
//! symmetric groups.
//!
//! The weak-order graph of a Coxeter system (W,S) is the Cayley graph of
//! W with generating set S. Its Ricci curvature equals 2 − λ_max(M_W),
//! where M_W is the graph Laplacian of the unlabeled diagram — so the
//! curvature of enormous (even infinite) groups reduces to an eigenvalue
//! of a rank-sized matrix. The explicit Cayley graphs generated here
//! cross-validate that reduction end to end.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigenvalues_symmetric, rat, SymmetricMatrix};

/// Marker for an infinite bond (m_ij = ∞) in a Coxeter matrix.
pub const INFINITE_BOND: u32 = u32::MAX;

/// Irreducible Coxeter types supported by the crate, finite and affine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
    /// Affine Ã_n: a cycle of n+1 generators for n ≥ 2; Ã₁ is the
    /// infinite dihedral pair.
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    AffineE6,
    AffineE7,
    AffineE8,
    AffineF4,
    AffineG2,
}

impl CoxeterType {
    /// Canonical display label, e.g. "A3", "I2(7)", "~D4".
    pub fn label(&self) -> String {
        match self {
            CoxeterType::A(n) => format!("A{n}"),
            CoxeterType::B(n) => format!("B{n}"),
            CoxeterType::D(n) => format!("D{n}"),
            CoxeterType::I2(m) => format!("I2({m})"),
            CoxeterType::H3 => "H3".into(),
            CoxeterType::H4 => "H4".into(),
            CoxeterType::F4 => "F4".into(),
            CoxeterType::E6 => "E6".into(),
            CoxeterType::E7 => "E7".into(),
            CoxeterType::E8 => "E8".into(),
            CoxeterType::AffineA(n) => format!("~A{n}"),
            CoxeterType::AffineB(n) => format!("~B{n}"),
            CoxeterType::AffineC(n) => format!("~C{n}"),
            CoxeterType::AffineD(n) => format!("~D{n}"),
            CoxeterType::AffineE6 => "~E6".into(),
            CoxeterType::AffineE7 => "~E7".into(),
            CoxeterType::AffineE8 => "~E8".into(),
            CoxeterType::AffineF4 => "~F4".into(),
            CoxeterType::AffineG2 => "~G2".into(),
        }
    }

    /// Number of simple generators (diagram nodes).
    pub fn rank(&self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => *n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::AffineA(n)
            | CoxeterType::AffineB(n)
            | CoxeterType::AffineC(n)
            | CoxeterType::AffineD(n) => n + 1,
            CoxeterType::AffineE6 => 7,
            CoxeterType::AffineE7 => 8,
            CoxeterType::AffineE8 => 9,
            CoxeterType::AffineF4 => 5,
            CoxeterType::AffineG2 => 3,
        }
    }

    /// Order of the group for the finite types; None for affine types.
    pub fn group_order(&self) -> Option<u128> {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CoxeterType::A(n) => Some(factorial(n + 1)),
            CoxeterType::B(n) => Some(factorial(*n) << n),
            CoxeterType::D(n) => Some(factorial(*n) << (n - 1)),
            CoxeterType::I2(m) => Some(2 * *m as u128),
            CoxeterType::H3 => Some(120),
            CoxeterType::H4 => Some(14400),
            CoxeterType::F4 => Some(1152),
            CoxeterType::E6 => Some(51840),
            CoxeterType::E7 => Some(2_903_040),
            CoxeterType::E8 => Some(696_729_600),
            _ => None,
        }
    }

    /// Number of reflections |T| (= length of the longest element = the
    /// diameter of the weak-order graph) for the finite types.
    pub fn reflection_count(&self) -> Option<u64> {
        match self {
            CoxeterType::A(n) => Some((*n as u64 * (*n as u64 + 1)) / 2),
            CoxeterType::B(n) => Some((*n as u64) * (*n as u64)),
            CoxeterType::D(n) => Some((*n as u64) * (*n as u64 - 1)),
            CoxeterType::I2(m) => Some(*m as u64),
            CoxeterType::H3 => Some(15),
            CoxeterType::H4 => Some(60),
            CoxeterType::F4 => Some(24),
            CoxeterType::E6 => Some(36),
            CoxeterType::E7 => Some(63),
            CoxeterType::E8 => Some(120),
            _ => None,
        }
    }

    /// A concrete permutation-style model, when one exists under the
    /// generation size caps.
    pub fn group_model(&self) -> Option<GroupModel> {
        match self {
            CoxeterType::A(n) if (1..=5).contains(n) => Some(GroupModel::Symmetric(*n)),
            CoxeterType::B(n) if (2..=4).contains(n) => Some(GroupModel::Signed(*n)),
            CoxeterType::D(n) if (3..=4).contains(n) => Some(GroupModel::EvenSigned(*n)),
            CoxeterType::I2(m) if (2..=50).contains(m) => Some(GroupModel::Dihedral(*m)),
            _ => None,
        }
    }
}

/// A Coxeter diagram: rank, symmetric bond matrix, display label, and —
/// for single irreducible types — the type tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub label: String,
    pub rank: usize,
    /// The type, when the diagram is a single irreducible one.
    pub kind: Option<CoxeterType>,
    /// Coxeter matrix: m[i][i] = 1, m[i][j] ∈ {2,3,4,5,6,…} ∪ {∞}.
    m: Vec<Vec<u32>>,
}

impl CoxeterDiagram {
    fn from_bonds(
        label: String,
        kind: Option<CoxeterType>,
        rank: usize,
        bonds: &[(usize, usize, u32)],
    ) -> Self {
        let mut m = vec![vec![2u32; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, b) in bonds {
            debug_assert!(i != j && b >= 3);
            m[i][j] = b;
            m[j][i] = b;
        }
        CoxeterDiagram {
            label,
            rank,
            kind,
            m,
        }
    }

    /// Bond order m_ij (INFINITE_BOND for ∞).
    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    /// Whether generators i and j fail to commute (diagram edge).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.m[i][j] >= 3
    }

    /// Block-diagonal union of diagrams (the diagram of a product
    /// group), labeled with "x"-joined part labels.
    pub fn product(parts: &[CoxeterDiagram]) -> Result<CoxeterDiagram> {
        if parts.is_empty() {
            return Err(Error::Domain("product of zero diagrams".into()));
        }
        let rank: usize = parts.iter().map(|p| p.rank).sum();
        let label = parts
            .iter()
            .map(|p| p.label.as_str())
            .collect::<Vec<_>>()
            .join("x");
        let mut bonds = Vec::new();
        let mut offset = 0;
        for part in parts {
            for i in 0..part.rank {
                for j in (i + 1)..part.rank {
                    if part.adjacent(i, j) {
                        bonds.push((offset + i, offset + j, part.m[i][j]));
                    }
                }
            }
            offset += part.rank;
        }
        Ok(CoxeterDiagram::from_bonds(label, None, rank, &bonds))
    }
}

/// A spider diagram: a center node with paths ("legs") attached, all
/// bonds 3. Node 0 is the center; legs are laid out sequentially.
fn spider(label: &str, kind: CoxeterType, legs: &[usize]) -> CoxeterDiagram {
    let rank = 1 + legs.iter().sum::<usize>();
    let mut bonds = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            bonds.push((prev, next, 3));
            prev = next;
            next += 1;
        }
    }
    CoxeterDiagram::from_bonds(label.to_string(), Some(kind), rank, &bonds)
}

fn labeled_path(label: &str, kind: CoxeterType, bonds_in_order: &[u32]) -> CoxeterDiagram {
    let rank = bonds_in_order.len() + 1;
    let bonds: Vec<(usize, usize, u32)> = bonds_in_order
        .iter()
        .enumerate()
        .map(|(i, &b)| (i, i + 1, b))
        .collect();
    CoxeterDiagram::from_bonds(label.to_string(), Some(kind), rank, &bonds)
}

/// The standard Coxeter diagram of a type; errors on parameters outside
/// the family's validity range.
pub fn diagram(t: &CoxeterType) -> Result<CoxeterDiagram> {
    let label = t.label();
    let out = match *t {
        CoxeterType::A(n) => {
            if n < 1 {
                return Err(Error::Domain("A requires rank >= 1".into()));
            }
            labeled_path(&label, *t, &vec![3; n - 1])
        }
        CoxeterType::B(n) => {
            if n < 2 {
                return Err(Error::Domain("B requires rank >= 2".into()));
            }
            let mut bonds = vec![3u32; n - 1];
            bonds[0] = 4;
            labeled_path(&label, *t, &bonds)
        }
        CoxeterType::D(n) => {
            if n < 3 {
                return Err(Error::Domain("D requires rank >= 3".into()));
            }
            // Fork at node 2; at n = 3 this degenerates to a path,
            // honoring D3 = A3.
            let mut bonds = vec![(0, 2, 3), (1, 2, 3)];
            for i in 2..(n - 1) {
                bonds.push((i, i + 1, 3));
            }
            CoxeterDiagram::from_bonds(label, Some(*t), n, &bonds)
        }
        CoxeterType::I2(m) => {
            if m < 2 {
                return Err(Error::Domain("I2 requires bond order >= 2".into()));
            }
            if m == 2 {
                CoxeterDiagram::from_bonds(label, Some(*t), 2, &[])
            } else {
                CoxeterDiagram::from_bonds(label, Some(*t), 2, &[(0, 1, m)])
            }
        }
        CoxeterType::H3 => labeled_path(&label, *t, &[5, 3]),
        CoxeterType::H4 => labeled_path(&label, *t, &[5, 3, 3]),
        CoxeterType::F4 => labeled_path(&label, *t, &[3, 4, 3]),
        CoxeterType::E6 => spider(&label, *t, &[1, 2, 2]),
        CoxeterType::E7 => spider(&label, *t, &[1, 2, 3]),
        CoxeterType::E8 => spider(&label, *t, &[1, 2, 4]),
        CoxeterType::AffineA(n) => match n {
            0 => return Err(Error::Domain("~A requires rank >= 1".into())),
            1 => CoxeterDiagram::from_bonds(label, Some(*t), 2, &[(0, 1, INFINITE_BOND)]),
            _ => {
                let k = n + 1;
                let mut bonds: Vec<(usize, usize, u32)> =
                    (0..k - 1).map(|i| (i, i + 1, 3)).collect();
                bonds.push((k - 1, 0, 3));
                CoxeterDiagram::from_bonds(label, Some(*t), k, &bonds)
            }
        },
        CoxeterType::AffineB(n) => {
            if n < 3 {
                return Err(Error::Domain("~B requires rank >= 3".into()));
            }
            let mut bonds = vec![(0, 2, 3), (1, 2, 3)];
            for i in 2..(n - 1) {
                bonds.push((i, i + 1, 3));
            }
            bonds.push((n - 1, n, 4));
            CoxeterDiagram::from_bonds(label, Some(*t), n + 1, &bonds)
        }
        CoxeterType::AffineC(n) => {
            if n < 2 {
                return Err(Error::Domain("~C requires rank >= 2".into()));
            }
            let mut bonds = vec![4u32];
            bonds.extend(vec![3u32; n - 2]);
            bonds.push(4);
            labeled_path(&label, *t, &bonds)
        }
        CoxeterType::AffineD(n) => {
            if n < 4 {
                return Err(Error::Domain("~D requires rank >= 4".into()));
            }
            let mut bonds = vec![(0, 2, 3), (1, 2, 3)];
            for i in 2..(n - 2) {
                bonds.push((i, i + 1, 3));
            }
            bonds.push((n - 2, n - 1, 3));
            bonds.push((n - 2, n, 3));
            CoxeterDiagram::from_bonds(label, Some(*t), n + 1, &bonds)
        }
        CoxeterType::AffineE6 => spider(&label, *t, &[2, 2, 2]),
        CoxeterType::AffineE7 => spider(&label, *t, &[3, 3, 1]),
        CoxeterType::AffineE8 => spider(&label, *t, &[5, 2, 1]),
        CoxeterType::AffineF4 => labeled_path(&label, *t, &[3, 3, 4, 3]),
        CoxeterType::AffineG2 => labeled_path(&label, *t, &[3, 6]),
    };
    Ok(out)
}

/// Parses a single type tag: `A3`, `B4`, `D4`, `I2:7`, `H3`, `H4`, `F4`,
/// `E6`–`E8`, and affine tags `~A4`, `~B4`, `~C4`, `~D4`, `~E6`–`~E8`,
/// `~F4`, `~G2`, `~A1`.
pub fn parse_tag(tag: &str) -> Result<CoxeterType> {
    let bad = || Error::Invalid(format!("unknown Coxeter type tag {tag:?}"));
    let (affine, rest) = match tag.strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, tag),
    };
    if rest.is_empty() {
        return Err(bad());
    }
    if let Some(m_str) = rest.strip_prefix("I2:") {
        if affine {
            return Err(bad());
        }
        let m: u32 = m_str.parse().map_err(|_| bad())?;
        let t = CoxeterType::I2(m);
        diagram(&t)?;
        return Ok(t);
    }
    let family = rest.chars().next().ok_or_else(bad)?;
    let param_str = &rest[family.len_utf8()..];
    let t = match (affine, family) {
        (false, 'A') => CoxeterType::A(param_str.parse().map_err(|_| bad())?),
        (false, 'B') => CoxeterType::B(param_str.parse().map_err(|_| bad())?),
        (false, 'D') => CoxeterType::D(param_str.parse().map_err(|_| bad())?),
        (false, 'H') => match param_str {
            "3" => CoxeterType::H3,
            "4" => CoxeterType::H4,
            _ => return Err(bad()),
        },
        (false, 'F') if param_str == "4" => CoxeterType::F4,
        (false, 'E') => match param_str {
            "6" => CoxeterType::E6,
            "7" => CoxeterType::E7,
            "8" => CoxeterType::E8,
            _ => return Err(bad()),
        },
        (true, 'A') => CoxeterType::AffineA(param_str.parse().map_err(|_| bad())?),
        (true, 'B') => CoxeterType::AffineB(param_str.parse().map_err(|_| bad())?),
        (true, 'C') => CoxeterType::AffineC(param_str.parse().map_err(|_| bad())?),
        (true, 'D') => CoxeterType::AffineD(param_str.parse().map_err(|_| bad())?),
        (true, 'E') => match param_str {
            "6" => CoxeterType::AffineE6,
            "7" => CoxeterType::AffineE7,
            "8" => CoxeterType::AffineE8,
            _ => return Err(bad()),
        },
        (true, 'F') if param_str == "4" => CoxeterType::AffineF4,
        (true, 'G') if param_str == "2" => CoxeterType::AffineG2,
        _ => return Err(bad()),
    };
    diagram(&t)?; // validate the parameter range
    Ok(t)
}

/// Parses an `x`-joined product of type tags, e.g. `A3xB2`.
pub fn parse_product(tag: &str) -> Result<Vec<CoxeterType>> {
    tag.split('x').map(parse_tag).collect()
}

/// The commutation matrix M_W: off-diagonal −1 exactly where the
/// generators fail to commute (m_ij ≥ 3), 0 where m_ij = 2, and
/// diagonal = number of non-commuting partners. This is precisely the
/// graph Laplacian of the unlabeled diagram.
pub fn commutation_matrix(d: &CoxeterDiagram) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(d.rank);
    for i in 0..d.rank {
        let non_commuting = (0..d.rank).filter(|&j| d.adjacent(i, j)).count() as i64;
        m.set(i, i, rat(non_commuting, 1));
        for j in (i + 1)..d.rank {
            if d.adjacent(i, j) {
                m.set(i, j, rat(-1, 1));
            }
        }
    }
    m
}

/// Ricci curvature of the weak-order graph: 2 − λ_max(M_W).
pub fn weak_order_ricci_spectral(d: &CoxeterDiagram) -> Result<f64> {
    let spectrum = eigenvalues_symmetric(&commutation_matrix(d))?;
    Ok(2.0 - spectrum.eigenvalues[d.rank - 1])
}

/// High-precision reference constants for the exceptional types: the
/// exact value 2 − λ_max for the type's own diagram matrix, precomputed
/// from the characteristic polynomial.
pub const RICCI_E6: f64 = -2.302775637731995;
pub const RICCI_E7: f64 = -2.334200531542927;
pub const RICCI_E8: f64 = -2.342923082777170;
/// Ricci of the Ẽ₆ weak order, exactly −1 − √2.
pub const RICCI_AFFINE_E6: f64 = -2.414213562373095;
pub const RICCI_AFFINE_E7: f64 = -2.362339832857439;
pub const RICCI_AFFINE_E8: f64 = -2.345519857275827;

/// Closed-form (or reference) curvature of a weak-order graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedFormRicci {
    /// Exact closed-form value.
    Exact(f64),
    /// Types pinned only to an interval.
    Interval { lower: f64, upper: f64 },
    /// High-precision reference constant (root of the diagram matrix's
    /// characteristic polynomial), not a closed formula.
    Reference(f64),
}

impl ClosedFormRicci {
    /// Whether a spectrally computed value is consistent with this
    /// closed form at tolerance `tol`.
    pub fn admits(&self, value: f64, tol: f64) -> bool {
        match *self {
            ClosedFormRicci::Exact(v) | ClosedFormRicci::Reference(v) => (value - v).abs() <= tol,
            ClosedFormRicci::Interval { lower, upper } => {
                value >= lower - tol && value <= upper + tol
            }
        }
    }
}

fn strictly_linear_value(rank: usize) -> f64 {
    -2.0 * (std::f64::consts::PI / rank as f64).cos()
}

/// Closed-form curvature of the Ã weak order with k generators in a
/// cycle: 2 − max_j (2 − 2cos(2πj/k)) = 2cos(2π⌊k/2⌋/k); equals −2
/// exactly when k is even.
pub fn affine_cycle_ricci(k: usize) -> f64 {
    2.0 * (2.0 * std::f64::consts::PI * (k / 2) as f64 / k as f64).cos()
}

/// Closed-form / interval / reference curvature per type.
///
/// Strictly linear types (path-shaped diagrams: Aₙ, Bₙ, I₂(m≥3), H₃,
/// H₄, F₄, C̃ₙ, F̃₄, G̃₂, Ã₁ — and D₃, whose diagram is the A₃ path) get
/// the exact value −2cos(π/rank); Ãₙ gets the circulant closed form;
/// D̃₄ is exactly −3; Dₙ (n≥4), B̃ₙ, D̃ₙ (n≥5) are pinned to [−4,−2];
/// the E/Ẽ types carry reference constants.
pub fn weak_order_ricci_closed_form(d: &CoxeterDiagram) -> Result<ClosedFormRicci> {
    let kind = d.kind.ok_or_else(|| {
        Error::Domain(format!("no closed form for composite diagram {:?}", d.label))
    })?;
    let rank = d.rank;
    let out = match kind {
        CoxeterType::A(_)
        | CoxeterType::B(_)
        | CoxeterType::H3
        | CoxeterType::H4
        | CoxeterType::F4
        | CoxeterType::AffineC(_)
        | CoxeterType::AffineF4
        | CoxeterType::AffineG2 => ClosedFormRicci::Exact(strictly_linear_value(rank)),
        CoxeterType::I2(2) => ClosedFormRicci::Exact(2.0), // A1 x A1 product
        CoxeterType::I2(_) => ClosedFormRicci::Exact(strictly_linear_value(2)),
        CoxeterType::AffineA(1) => ClosedFormRicci::Exact(strictly_linear_value(2)),
        CoxeterType::AffineA(n) => ClosedFormRicci::Exact(affine_cycle_ricci(n + 1)),
        CoxeterType::D(3) => ClosedFormRicci::Exact(strictly_linear_value(3)),
        CoxeterType::D(_) | CoxeterType::AffineB(_) => ClosedFormRicci::Interval {
            lower: -4.0,
            upper: -2.0,
        },
        CoxeterType::AffineD(4) => ClosedFormRicci::Exact(-3.0),
        CoxeterType::AffineD(_) => ClosedFormRicci::Interval {
            lower: -4.0,
            upper: -2.0,
        },
        CoxeterType::E6 => ClosedFormRicci::Reference(RICCI_E6),
        CoxeterType::E7 => ClosedFormRicci::Reference(RICCI_E7),
        CoxeterType::E8 => ClosedFormRicci::Reference(RICCI_E8),
        CoxeterType::AffineE6 => ClosedFormRicci::Reference(RICCI_AFFINE_E6),
        CoxeterType::AffineE7 => ClosedFormRicci::Reference(RICCI_AFFINE_E7),
        CoxeterType::AffineE8 => ClosedFormRicci::Reference(RICCI_AFFINE_E8),
    };
    Ok(out)
}

/// Curvature of a product of Coxeter systems: the minimum over parts
/// (and the spectral value of the block-diagonal combined diagram).
pub fn product_ricci(parts: &[CoxeterDiagram]) -> Result<f64> {
    if parts.is_empty() {
        return Err(Error::Domain("product of zero diagrams".into()));
    }
    let mut min = f64::INFINITY;
    for part in parts {
        min = min.min(weak_order_ricci_spectral(part)?);
    }
    Ok(min)
}

/// Concrete involution models for the families whose elements are
/// cheaply enumerable: one-line permutations (A), signed permutations
/// (B), even-signed permutations (D), and dihedral normal forms (I₂).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupModel {
    /// A_n as the symmetric group S_{n+1}; generation cap n ≤ 5.
    Symmetric(usize),
    /// B_n as signed permutations of {1..n}; cap n ≤ 4.
    Signed(usize),
    /// D_n as even-signed permutations of {1..n}; 3 ≤ n ≤ 4.
    EvenSigned(usize),
    /// I₂(m) as the dihedral group of order 2m; cap m ≤ 50.
    Dihedral(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Element {
    Perm(Vec<u8>),
    Signed(Vec<i8>),
    Dihedral { rotation: u32, reflected: bool },
}

impl Element {
    fn key(&self) -> String {
        match self {
            Element::Perm(w) => w
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
            Element::Signed(w) => w
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
            Element::Dihedral {
                rotation,
                reflected,
            } => format!("{}{rotation}", if *reflected { "s" } else { "r" }),
        }
    }
}

impl GroupModel {
    pub fn generator_count(&self) -> usize {
        match self {
            GroupModel::Symmetric(n) | GroupModel::Signed(n) | GroupModel::EvenSigned(n) => *n,
            GroupModel::Dihedral(_) => 2,
        }
    }

    /// The Coxeter type this model realizes.
    pub fn coxeter_type(&self) -> CoxeterType {
        match self {
            GroupModel::Symmetric(n) => CoxeterType::A(*n),
            GroupModel::Signed(n) => CoxeterType::B(*n),
            GroupModel::EvenSigned(n) => CoxeterType::D(*n),
            GroupModel::Dihedral(m) => CoxeterType::I2(*m),
        }
    }

    pub fn expected_order(&self) -> u128 {
        self.coxeter_type()
            .group_order()
            .expect("finite model types always have an order")
    }

    fn validate(&self) -> Result<()> {
        let (ok_range, cap_msg) = match self {
            GroupModel::Symmetric(n) => (
                (1..=5).contains(n),
                "symmetric model supports ranks 1..=5",
            ),
            GroupModel::Signed(n) => ((2..=4).contains(n), "signed model supports ranks 2..=4"),
            GroupModel::EvenSigned(n) => (
                (3..=4).contains(n),
                "even-signed model supports ranks 3..=4",
            ),
            GroupModel::Dihedral(m) => (
                (2..=50).contains(m),
                "dihedral model supports bond orders 2..=50",
            ),
        };
        if ok_range {
            Ok(())
        } else {
            Err(Error::Resource(format!(
                "{cap_msg}, got {:?}",
                self.coxeter_type().label()
            )))
        }
    }

    fn identity(&self) -> Element {
        match self {
            GroupModel::Symmetric(n) => Element::Perm((1..=(*n as u8 + 1)).collect()),
            GroupModel::Signed(n) | GroupModel::EvenSigned(n) => {
                Element::Signed((1..=(*n as i8)).collect())
            }
            GroupModel::Dihedral(_) => Element::Dihedral {
                rotation: 0,
                reflected: false,
            },
        }
    }

    /// Right multiplication by the i-th simple generator. Generator
    /// indices follow the diagram node order of `coxeter_type()`.
    fn apply(&self, e: &Element, gen: usize) -> Element {
        match (self, e) {
            (GroupModel::Symmetric(_), Element::Perm(w)) => {
                let mut w = w.clone();
                w.swap(gen, gen + 1);
                Element::Perm(w)
            }
            (GroupModel::Signed(_), Element::Signed(w)) => {
                let mut w = w.clone();
                if gen == 0 {
                    w[0] = -w[0];
                } else {
                    w.swap(gen - 1, gen);
                }
                Element::Signed(w)
            }
            (GroupModel::EvenSigned(_), Element::Signed(w)) => {
                let mut w = w.clone();
                if gen == 0 {
                    let (a, b) = (w[0], w[1]);
                    w[0] = -b;
                    w[1] = -a;
                } else {
                    w.swap(gen - 1, gen);
                }
                Element::Signed(w)
            }
            (
                GroupModel::Dihedral(m),
                Element::Dihedral {
                    rotation,
                    reflected,
                },
            ) => {
                if gen == 0 {
                    Element::Dihedral {
                        rotation: *rotation,
                        reflected: !reflected,
                    }
                } else if !reflected {
                    Element::Dihedral {
                        rotation: (rotation + 1) % m,
                        reflected: true,
                    }
                } else {
                    Element::Dihedral {
                        rotation: (rotation + m - 1) % m,
                        reflected: false,
                    }
                }
            }
            _ => unreachable!("element shape always matches its model"),
        }
    }
}

/// The weak-order graph: the Cayley graph of the modeled group with its
/// simple generators — vertices are canonically encoded elements, edges
/// join w and w·s. The result is generator-count-regular and connected.
pub fn weak_order_graph(model: &GroupModel) -> Result<Graph> {
    model.validate()?;
    let gens = model.generator_count();
    let identity = model.identity();
    let mut seen: BTreeMap<String, Element> = BTreeMap::new();
    seen.insert(identity.key(), identity.clone());
    let mut queue = vec![identity];
    let mut edges: Vec<(String, String)> = Vec::new();
    while let Some(current) = queue.pop() {
        let ck = current.key();
        for gen in 0..gens {
            let next = model.apply(&current, gen);
            let nk = next.key();
            edges.push((ck.clone(), nk.clone()));
            if !seen.contains_key(&nk) {
                seen.insert(nk, next.clone());
                queue.push(next);
            }
        }
    }
    if seen.len() as u128 != model.expected_order() {
        return Err(Error::Internal(format!(
            "generated {} elements for {}, expected {}",
            seen.len(),
            model.coxeter_type().label(),
            model.expected_order()
        )));
    }
    Graph::from_edges(edges)
}

/// Verifies the model's generators satisfy their diagram relations:
/// every generator is a nontrivial involution and every alternating
/// word (s_i s_j)^{m_ij} returns to the identity for the first time at
/// exactly step 2·m_ij.
pub fn generator_relations_hold(model: &GroupModel) -> Result<bool> {
    model.validate()?;
    let diag = diagram(&model.coxeter_type())?;
    let id = model.identity();
    for i in 0..model.generator_count() {
        let once = model.apply(&id, i);
        if once == id || model.apply(&once, i) != id {
            return Ok(false);
        }
    }
    for i in 0..model.generator_count() {
        for j in (i + 1)..model.generator_count() {
            let m_ij = diag.bond(i, j);
            debug_assert_ne!(m_ij, INFINITE_BOND);
            let mut current = id.clone();
            for step in 1..=(2 * m_ij) {
                current = model.apply(&current, if step % 2 == 1 { i } else { j });
                let back_home = current == id;
                if back_home != (step == 2 * m_ij) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The Bruhat graph of the symmetric group S_n (2 ≤ n ≤ 5): vertices
/// are permutations, with an edge {w, tw} for every transposition t.
pub fn bruhat_graph_symmetric(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain(
            "Bruhat graph needs n >= 2 (S_1 has no edges)".into(),
        ));
    }
    if n > 5 {
        return Err(Error::Resource("Bruhat graph generation caps at n = 5".into()));
    }
    // Grow S_k words from S_{k-1} words by inserting k at every position.
    let mut perms: Vec<Vec<u8>> = vec![vec![1]];
    for k in 2..=n as u8 {
        let mut next = Vec::new();
        for w in &perms {
            for pos in 0..w.len() + 1 {
                let mut grown = w.clone();
                grown.insert(pos, k);
                next.push(grown);
            }
        }
        perms = next;
    }
    let key = |w: &[u8]| {
        w.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut edges = Vec::new();
    for w in &perms {
        for a in 1..=(n as u8) {
            for b in (a + 1)..=(n as u8) {
                // Left multiplication by the transposition (a b): swap
                // the values a and b wherever they appear.
                let swapped: Vec<u8> = w
                    .iter()
                    .map(|&v| {
                        if v == a {
                            b
                        } else if v == b {
                            a
                        } else {
                            v
                        }
                    })
                    .collect();
                edges.push((key(w), key(&swapped)));
            }
        }
    }
    Graph::from_edges(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{global_ricci, local_ricci};
    use crate::linalg::circulant_real_eigs;

    fn spectral(t: &CoxeterType) -> f64 {
        weak_order_ricci_spectral(&diagram(t).unwrap()).unwrap()
    }

    #[test]
    fn a3_commutation_matrix() {
        let d = diagram(&CoxeterType::A(3)).unwrap();
        let m = commutation_matrix(&d);
        let expected =
            SymmetricMatrix::from_integer_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]])
                .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn affine_d4_star_spectrum() {
        let d = diagram(&CoxeterType::AffineD(4)).unwrap();
        let s = eigenvalues_symmetric(&commutation_matrix(&d)).unwrap();
        let expected = [0.0, 1.0, 1.0, 1.0, 5.0];
        for (a, e) in s.eigenvalues.iter().zip(expected) {
            assert!((a - e).abs() <= 1e-10, "{:?}", s.eigenvalues);
        }
        assert!((spectral(&CoxeterType::AffineD(4)) + 3.0).abs() <= 1e-9);
        assert_eq!(
            weak_order_ricci_closed_form(&d).unwrap(),
            ClosedFormRicci::Exact(-3.0)
        );
    }

    #[test]
    fn affine_cycle_matches_circulant() {
        for n in 2..=11usize {
            let k = n + 1;
            let d = diagram(&CoxeterType::AffineA(n)).unwrap();
            let spectral = weak_order_ricci_spectral(&d).unwrap();
            let mut row = vec![0.0; k];
            row[0] = 2.0;
            row[1] = -1.0;
            row[k - 1] = -1.0;
            let eigs = circulant_real_eigs(&row).unwrap();
            let lam_max = eigs.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
            assert!((spectral - (2.0 - lam_max)).abs() <= 1e-9, "k = {k}");
            assert!((spectral - affine_cycle_ricci(k)).abs() <= 1e-9, "k = {k}");
            if k % 2 == 0 {
                assert!((spectral + 2.0).abs() <= 1e-9, "even k = {k}");
            }
        }
    }

    #[test]
    fn strictly_linear_families() {
        for n in 2..=8usize {
            let expect = -2.0 * (std::f64::consts::PI / n as f64).cos();
            assert!((spectral(&CoxeterType::A(n)) - expect).abs() <= 1e-9);
            assert!((spectral(&CoxeterType::B(n)) - expect).abs() <= 1e-9);
        }
        assert!((spectral(&CoxeterType::A(1)) - 2.0).abs() <= 1e-12);
        assert!((spectral(&CoxeterType::H3) + 1.0).abs() <= 1e-9);
        assert!(
            (spectral(&CoxeterType::H4) + std::f64::consts::SQRT_2).abs() <= 1e-9
        );
        assert!(
            (spectral(&CoxeterType::F4) + std::f64::consts::SQRT_2).abs() <= 1e-9
        );
        // Affine strictly linear types at their ranks.
        for n in 2..=6usize {
            let expect = -2.0 * (std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((spectral(&CoxeterType::AffineC(n)) - expect).abs() <= 1e-9);
        }
        assert!(
            (spectral(&CoxeterType::AffineG2)
                - -2.0 * (std::f64::consts::PI / 3.0).cos())
            .abs()
                <= 1e-9
        );
        assert!(
            (spectral(&CoxeterType::AffineF4)
                - -2.0 * (std::f64::consts::PI / 5.0).cos())
            .abs()
                <= 1e-9
        );
        assert!((spectral(&CoxeterType::AffineA(1)) - 0.0).abs() <= 1e-12);
    }

    #[test]
    fn closed_forms_match_spectral_values() {
        let exact_types = [
            CoxeterType::A(2),
            CoxeterType::A(5),
            CoxeterType::B(3),
            CoxeterType::I2(2),
            CoxeterType::I2(7),
            CoxeterType::H3,
            CoxeterType::H4,
            CoxeterType::F4,
            CoxeterType::D(3),
            CoxeterType::AffineA(1),
            CoxeterType::AffineA(4),
            CoxeterType::AffineC(3),
            CoxeterType::AffineD(4),
            CoxeterType::AffineF4,
            CoxeterType::AffineG2,
        ];
        for t in exact_types {
            let d = diagram(&t).unwrap();
            let s = weak_order_ricci_spectral(&d).unwrap();
            let cf = weak_order_ricci_closed_form(&d).unwrap();
            assert!(cf.admits(s, 1e-9), "{}: {s} vs {cf:?}", t.label());
            assert!(matches!(cf, ClosedFormRicci::Exact(_)));
        }
        for n in 4..=8 {
            let d = diagram(&CoxeterType::D(n)).unwrap();
            let s = weak_order_ricci_spectral(&d).unwrap();
            let cf = weak_order_ricci_closed_form(&d).unwrap();
            assert!(matches!(cf, ClosedFormRicci::Interval { .. }));
            assert!(cf.admits(s, 1e-9), "D{n}: {s}");
        }
        for t in [
            CoxeterType::AffineB(3),
            CoxeterType::AffineB(5),
            CoxeterType::AffineD(5),
            CoxeterType::AffineD(7),
        ] {
            let d = diagram(&t).unwrap();
            let s = weak_order_ricci_spectral(&d).unwrap();
            assert!(
                weak_order_ricci_closed_form(&d).unwrap().admits(s, 1e-9),
                "{}: {s}",
                t.label()
            );
        }
    }

    #[test]
    fn exceptional_reference_constants() {
        let cases = [
            (CoxeterType::E6, RICCI_E6),
            (CoxeterType::E7, RICCI_E7),
            (CoxeterType::E8, RICCI_E8),
            (CoxeterType::AffineE6, RICCI_AFFINE_E6),
            (CoxeterType::AffineE7, RICCI_AFFINE_E7),
            (CoxeterType::AffineE8, RICCI_AFFINE_E8),
        ];
        for (t, reference) in cases {
            let s = spectral(&t);
            assert!((s - reference).abs() <= 1e-9, "{}: {s}", t.label());
        }
        // ~E6 is exactly −1 − √2.
        assert!((RICCI_AFFINE_E6 - (-1.0 - std::f64::consts::SQRT_2)).abs() <= 1e-12);
    }

    #[test]
    fn product_rule() {
        let a1 = diagram(&CoxeterType::A(1)).unwrap();
        assert_eq!(product_ricci(&[a1.clone(), a1.clone()]).unwrap(), 2.0);
        let a2 = diagram(&CoxeterType::A(2)).unwrap();
        let a3 = diagram(&CoxeterType::A(3)).unwrap();
        let p = product_ricci(&[a2.clone(), a3.clone()]).unwrap();
        assert!((p + 1.0).abs() <= 1e-9);
        // The block-diagonal diagram gives the same spectral value.
        let combined = CoxeterDiagram::product(&[a2, a3]).unwrap();
        assert_eq!(combined.label, "A2xA3");
        let s = weak_order_ricci_spectral(&combined).unwrap();
        assert!((s - p).abs() <= 1e-9);
        let e8 = diagram(&CoxeterType::E8).unwrap();
        let single = product_ricci(std::slice::from_ref(&e8)).unwrap();
        assert!((single - weak_order_ricci_spectral(&e8).unwrap()).abs() == 0.0);
        assert!(product_ricci(&[]).is_err());
    }

    #[test]
    fn tag_parsing() {
        let good = [
            "A3", "B4", "D4", "I2:7", "H3", "H4", "F4", "E6", "E7", "E8", "~A4", "~B4", "~C4",
            "~D4", "~E6", "~E7", "~E8", "~F4", "~G2", "~A1",
        ];
        for tag in good {
            let t = parse_tag(tag).unwrap_or_else(|e| panic!("{tag}: {e}"));
            assert!(diagram(&t).is_ok(), "{tag}");
        }
        for tag in ["Z9", "A0", "B1", "D2", "I2:1", "~A0", "~B2", "~C1", "~D3", "E9", "", "~"] {
            assert!(parse_tag(tag).is_err(), "{tag} should not parse");
        }
        let parts = parse_product("A2xA3").unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].label(), "A2");
        assert_eq!(parts[1].label(), "A3");
        assert!(parse_product("A3x").is_err());
    }

    #[test]
    fn weak_order_graphs_small() {
        let k2 = weak_order_graph(&GroupModel::Symmetric(1)).unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
        for m in [2u32, 3, 5] {
            let g = weak_order_graph(&GroupModel::Dihedral(m)).unwrap();
            assert_eq!(g.vertex_count(), 2 * m as usize);
            assert!(g.is_connected());
            assert!((0..g.vertex_count()).all(|v| g.degree_idx(v) == 2));
        }
        let a2 = weak_order_graph(&GroupModel::Symmetric(2)).unwrap();
        assert_eq!(a2.vertex_count(), 6);
        assert!((global_ricci(&a2).unwrap().global - 0.0).abs() <= 1e-9);
    }

    #[test]
    fn weak_order_graph_orders() {
        assert_eq!(
            weak_order_graph(&GroupModel::Signed(3)).unwrap().vertex_count(),
            48
        );
        assert_eq!(
            weak_order_graph(&GroupModel::EvenSigned(4))
                .unwrap()
                .vertex_count(),
            192
        );
        assert_eq!(
            weak_order_graph(&GroupModel::Symmetric(4))
                .unwrap()
                .vertex_count(),
            120
        );
    }

    #[test]
    fn model_caps() {
        assert!(matches!(
            weak_order_graph(&GroupModel::Symmetric(6)),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            weak_order_graph(&GroupModel::Dihedral(51)),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            weak_order_graph(&GroupModel::EvenSigned(2)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn generator_relations() {
        for model in [
            GroupModel::Symmetric(3),
            GroupModel::Symmetric(5),
            GroupModel::Signed(2),
            GroupModel::Signed(4),
            GroupModel::EvenSigned(3),
            GroupModel::EvenSigned(4),
            GroupModel::Dihedral(2),
            GroupModel::Dihedral(7),
            GroupModel::Dihedral(50),
        ] {
            assert!(
                generator_relations_hold(&model).unwrap(),
                "relations fail for {model:?}"
            );
        }
    }

    #[test]
    fn bruhat_graphs() {
        let s2 = bruhat_graph_symmetric(2).unwrap();
        assert_eq!((s2.vertex_count(), s2.edge_count()), (2, 1));
        let s3 = bruhat_graph_symmetric(3).unwrap();
        assert_eq!(s3.vertex_count(), 6);
        assert!((0..6).all(|v| s3.degree_idx(v) == 3));
        assert!((local_ricci(&s3, s3.name(0)).unwrap() - 2.0).abs() <= 1e-9);
        let s4 = bruhat_graph_symmetric(4).unwrap();
        assert_eq!(s4.vertex_count(), 24);
        assert!((0..24).all(|v| s4.degree_idx(v) == 6));
        assert!(bruhat_graph_symmetric(1).is_err());
        assert!(matches!(
            bruhat_graph_symmetric(6),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn order_and_reflection_tables() {
        assert_eq!(CoxeterType::A(3).group_order(), Some(24));
        assert_eq!(CoxeterType::B(4).group_order(), Some(384));
        assert_eq!(CoxeterType::D(4).group_order(), Some(192));
        assert_eq!(CoxeterType::E6.group_order(), Some(51840));
        assert_eq!(CoxeterType::AffineA(3).group_order(), None);
        assert_eq!(CoxeterType::A(3).reflection_count(), Some(6));
        assert_eq!(CoxeterType::B(3).reflection_count(), Some(9));
        assert_eq!(CoxeterType::D(4).reflection_count(), Some(12));
        assert_eq!(CoxeterType::I2(8).reflection_count(), Some(8));
        assert_eq!(CoxeterType::E8.reflection_count(), Some(120));
    }

    #[test]
    fn d3_diagram_is_the_a3_path() {
        // The D fork at rank 3 degenerates to a path, so its matrix is
        // the A3 matrix up to relabeling and its curvature is −1 — not
        // the ≈ −1.7 that a non-degenerate fork template would give.
        let d3 = diagram(&CoxeterType::D(3)).unwrap();
        let s = weak_order_ricci_spectral(&d3).unwrap();
        assert!((s + 1.0).abs() <= 1e-9);
        let lam_max = 2.0 - s;
        assert!((lam_max - 3.0).abs() <= 1e-9);
    }
}
