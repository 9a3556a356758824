//! Property-based invariants over seeded random graphs and matrices:
//! operator identities, dual-route curvature agreement, bound and
//! Gershgorin containment, spectral trace identities, and closed-form
//! eigenvalue formulas against the iterative solver.

use proptest::prelude::*;

use ricci_core::corpus::{cycle_graph, random_connected_graph};
use ricci_core::curvature::{
    curvature_matrix, gamma2, gamma2_expanded, global_ricci, local_ricci, local_ricci_oracle,
    triangle_upper_bound, VertexFunction,
};
use ricci_core::graph::{local_neighborhood, sphere};
use ricci_core::linalg::{
    circulant_real_eigs, eigenvalues_symmetric, eigenvalues_symmetric_f64, gershgorin_intervals,
    gershgorin_intervals_f64, rat, spectrum_within_gershgorin, tridiagonal_toeplitz_eigs,
    SymmetricMatrix,
};
use ricci_core::spectral::{boundary_size, laplacian_spectrum};

fn graph_strategy() -> impl Strategy<Value = (usize, u64)> {
    (3usize..=9, any::<u64>())
}

fn values_strategy(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-5.0f64..5.0, max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma2_is_shift_invariant(
        (n, seed) in graph_strategy(),
        raw in values_strategy(9),
        shift in -10.0f64..10.0,
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let f = VertexFunction::from_values(&g, raw[..n].to_vec()).unwrap();
        let shifted = f.shifted(shift);
        for name in g.vertex_names() {
            let a = gamma2(&g, &f, name).unwrap();
            let b = gamma2(&g, &shifted, name).unwrap();
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn gamma2_expansion_matches_definition(
        (n, seed) in graph_strategy(),
        raw in values_strategy(9),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let f = VertexFunction::from_values(&g, raw[..n].to_vec()).unwrap();
        for (i, name) in g.vertex_names().to_vec().iter().enumerate() {
            let centered = f.shifted(-f.values()[i]);
            let by_definition = gamma2(&g, &centered, name).unwrap();
            let by_expansion = gamma2_expanded(&g, &centered, name).unwrap();
            prop_assert!(
                (by_definition - by_expansion).abs() <= 1e-9 * (1.0 + by_definition.abs()),
                "vertex {name}: {by_definition} vs {by_expansion}"
            );
        }
    }

    #[test]
    fn curvature_matrix_is_exactly_symmetric(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        for name in g.vertex_names() {
            let local = local_neighborhood(&g, name).unwrap();
            let m = curvature_matrix(&local).matrix;
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    prop_assert_eq!(m.get(i, j), m.get(j, i));
                }
            }
        }
    }

    #[test]
    fn gershgorin_contains_curvature_spectra(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        for name in g.vertex_names() {
            let local = local_neighborhood(&g, name).unwrap();
            let m = curvature_matrix(&local).matrix;
            let spectrum = eigenvalues_symmetric(&m).unwrap();
            let intervals = gershgorin_intervals(&m);
            prop_assert!(spectrum_within_gershgorin(
                &spectrum.eigenvalues,
                &intervals,
                1e-8
            ));
        }
    }

    #[test]
    fn triangle_bound_holds_on_random_graphs(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let report = global_ricci(&g).unwrap();
        prop_assert!(report.global <= triangle_upper_bound(&g) + 1e-9);
    }

    #[test]
    fn laplacian_trace_matches_degree_sum(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let eigs = laplacian_spectrum(&g).unwrap();
        let sum: f64 = eigs.iter().sum();
        let degrees: usize = (0..g.vertex_count()).map(|i| g.degree_idx(i)).sum();
        prop_assert!((sum - degrees as f64).abs() <= 1e-8 * (1.0 + degrees as f64));
        prop_assert!(eigs[0].abs() <= 1e-9);
        prop_assert!(eigs.windows(2).all(|w| w[0] <= w[1] + 1e-12));
    }

    #[test]
    fn boundary_is_complement_symmetric(
        (n, seed) in graph_strategy(),
        mask in any::<u16>(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let names = g.vertex_names();
        let subset: Vec<&str> = names
            .iter()
            .enumerate()
            .filter_map(|(i, name)| (mask >> i & 1 == 1).then_some(name.as_str()))
            .collect();
        let complement: Vec<&str> = names
            .iter()
            .enumerate()
            .filter_map(|(i, name)| (mask >> i & 1 == 0).then_some(name.as_str()))
            .collect();
        prop_assert_eq!(
            boundary_size(&g, &subset).unwrap(),
            boundary_size(&g, &complement).unwrap()
        );
    }

    #[test]
    fn spheres_partition_reachable_vertices(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        let x = g.name(0).to_string();
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for radius in 0..n {
            let shell = sphere(&g, &x, radius).unwrap();
            for v in &shell {
                prop_assert!(seen.insert(v.clone()), "vertex {v} in two spheres");
            }
            total += shell.len();
        }
        prop_assert_eq!(total, n, "connected graph: spheres cover all vertices");
        prop_assert_eq!(sphere(&g, &x, 1).unwrap().len(), g.degree(&x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_matches_matrix_route(
        (n, seed) in graph_strategy(),
    ) {
        let g = random_connected_graph(n, seed).unwrap();
        for name in g.vertex_names() {
            let direct = local_ricci(&g, name).unwrap();
            let oracle = local_ricci_oracle(&g, name).unwrap();
            prop_assert!(
                (direct - oracle).abs() <= 1e-6,
                "vertex {name}: matrix {direct} vs oracle {oracle}"
            );
        }
    }

    #[test]
    fn cycle_vertices_share_curvature(n in 3usize..=12) {
        let g = cycle_graph(n).unwrap();
        let reference = local_ricci(&g, g.name(0)).unwrap();
        for name in g.vertex_names() {
            let v = local_ricci(&g, name).unwrap();
            prop_assert!((v - reference).abs() <= 1e-9);
        }
    }

    #[test]
    fn symmetric_circulant_matches_dense_solver(
        half in proptest::collection::vec(-3.0f64..3.0, 1..=3),
        diagonal in -3.0f64..3.0,
    ) {
        // Build a symmetric circulant row c with c[k] = c[n−k].
        let mut row = vec![diagonal];
        row.extend(half.iter().copied());
        let mut mirrored: Vec<f64> = half.iter().rev().copied().collect();
        row.append(&mut mirrored);
        let n = row.len();
        let mut closed: Vec<f64> = circulant_real_eigs(&row)
            .unwrap();
        closed.sort_by(f64::total_cmp);
        let dense: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| row[(j + n - i) % n]).collect())
            .collect();
        let solved = eigenvalues_symmetric_f64(&dense).unwrap();
        for (a, b) in closed.iter().zip(&solved.eigenvalues) {
            prop_assert!((a - b).abs() <= 1e-8 * (1.0 + a.abs()), "{closed:?} vs {:?}", solved.eigenvalues);
        }
        let intervals = gershgorin_intervals_f64(&dense);
        prop_assert!(spectrum_within_gershgorin(&solved.eigenvalues, &intervals, 1e-8));
    }

    #[test]
    fn tridiagonal_closed_form_matches_dense_solver(
        n in 2usize..=7,
        b in -3.0f64..3.0,
        a in prop_oneof![Just(-2.0f64), Just(-1.0), Just(1.0), Just(2.0)],
    ) {
        let alpha = a.abs();
        let mut closed = tridiagonal_toeplitz_eigs(alpha, alpha, a, b, a, n).unwrap();
        closed.sort_by(f64::total_cmp);
        let mut dense = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            dense[i][i] = b;
            if i + 1 < n {
                dense[i][i + 1] = a;
                dense[i + 1][i] = a;
            }
        }
        dense[0][0] = b - alpha;
        dense[n - 1][n - 1] = b - alpha;
        let solved = eigenvalues_symmetric_f64(&dense).unwrap();
        for (c, s) in closed.iter().zip(&solved.eigenvalues) {
            prop_assert!((c - s).abs() <= 1e-8 * (1.0 + c.abs()));
        }
    }

    #[test]
    fn random_rational_matrices_respect_gershgorin(
        entries in proptest::collection::vec(-5i64..=5, 16),
        dim in 2usize..=4,
    ) {
        let mut m = SymmetricMatrix::zeros(dim);
        let mut k = 0;
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, rat(entries[k], 1));
                k += 1;
            }
        }
        let spectrum = eigenvalues_symmetric(&m).unwrap();
        let intervals = gershgorin_intervals(&m);
        prop_assert!(spectrum_within_gershgorin(&spectrum.eigenvalues, &intervals, 1e-8));
        let trace: f64 = (0..dim)
            .map(|i| {
                use num_traits::ToPrimitive;
                m.get(i, i).to_f64().unwrap()
            })
            .sum();
        let sum: f64 = spectrum.eigenvalues.iter().sum();
        prop_assert!((trace - sum).abs() <= 1e-8 * (1.0 + trace.abs()));
    }
}
