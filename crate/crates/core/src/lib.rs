//! Discrete Ricci curvature of finite simple graphs.
//!
//! The curvature notion is the Bakry–Émery-style one built from the graph
//! operators Δ, Γ, Γ₂: the local curvature at a vertex x is the largest K
//! with Γ₂(f)(x) ≥ K·Γ(f)(x) for every function f, and it equals the
//! minimum eigenvalue of a small symmetric matrix assembled from the
//! length-2 path subgraph around x. The crate computes that matrix
//! exactly, cross-checks it against an independent definitional oracle,
//! and applies the machinery to Coxeter weak-order graphs, spectral gaps,
//! and isoperimetric inequalities.

pub mod corpus;
pub mod coxeter;
pub mod curvature;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod suites;

pub use coxeter::{
    affine_cycle_ricci, bruhat_graph_symmetric, commutation_matrix, diagram,
    generator_relations_hold, parse_product, parse_tag, product_ricci, weak_order_graph,
    weak_order_ricci_closed_form, weak_order_ricci_spectral, ClosedFormRicci, CoxeterDiagram,
    CoxeterType, GroupModel, INFINITE_BOND,
};
pub use curvature::{
    delta, gamma, gamma2, gamma2_expanded, global_ricci, local_ricci, local_ricci_oracle,
    no_tri_quad_bounds, regular_no_tri_quad_ricci, triangle_free_lower_bound,
    triangle_upper_bound, BoundCheck, CurvatureMatrix, CurvatureReport, VertexFunction,
};
pub use curvature::curvature_matrix;
pub use error::{Error, Result};
pub use graph::{
    load_graph, local_neighborhood, max_joint_triangles, sphere, Graph, LocalNeighborhood,
};
pub use linalg::{
    circulant_eigs, circulant_real_eigs, eigenvalues_symmetric, eigenvalues_symmetric_f64,
    gershgorin_intervals, gershgorin_intervals_f64, spectrum_within_gershgorin,
    tridiagonal_toeplitz_eigs, Spectrum, SymmetricMatrix,
};
pub use spectral::{
    boundary_size, cayley_gap_lower_bound, check_gap_vs_curvature, isoperimetric_rhs,
    laplacian_spectrum, spectral_gap, spectral_profile, verify_isoperimetry, GapCurvatureVerdict,
    IsoperimetryVerdict, SpectralProfile,
};
pub use corpus::{
    all_free_trees, complete_bipartite, complete_graph, cycle_graph, oracle_corpus, path_graph,
    petersen, positive_curvature_corpus, random_connected_graph, regular_tree, star_graph,
    CorpusEntry,
};
pub use suites::{
    bounds_suite, coxeter_suite, isoperimetry_suite, operators_suite, run_all_suites,
    run_all_suites_default, SuiteCheck, SuiteReport,
};
