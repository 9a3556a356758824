//! Finite simple undirected graphs with string-labeled vertices.
//!
//! Vertices are stored in lexicographic order and every derived sequence
//! (neighbor lists, distance spheres, matrix row orders) follows that
//! order, so all downstream computations are deterministic and matrices
//! can be compared entrywise in tests.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Finite simple undirected graph. No self-loops, no multi-edges, no
/// isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Vertex identifiers in lexicographic order.
    names: Vec<String>,
    /// Adjacency lists as ascending vertex indices.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops are rejected. Every vertex mentioned gains degree ≥ 1,
    /// so the no-isolated-vertices invariant holds by construction.
    pub fn from_edges<I, S>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let pairs: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.into(), b.into()))
            .collect();
        if pairs.is_empty() {
            return Err(Error::Invalid("graph has no edges".into()));
        }
        for (a, b) in &pairs {
            if a == b {
                return Err(Error::Invalid(format!("self-loop at vertex {a:?}")));
            }
        }
        let names: Vec<String> = pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); names.len()];
        for (a, b) in &pairs {
            let (i, j) = (index[a.as_str()], index[b.as_str()]);
            sets[i].insert(j);
            sets[j].insert(i);
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Graph { names, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertex identifiers in lexicographic order.
    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, x: &str) -> Result<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(x))
            .map_err(|_| Error::UnknownVertex(x.to_string()))
    }

    pub fn degree(&self, x: &str) -> Result<usize> {
        Ok(self.adj[self.index_of(x)?].len())
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Neighbor indices of vertex `i`, ascending.
    pub fn neighbors_idx(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// All edges as index pairs (i, j) with i < j, lexicographically ordered.
    pub fn edges_idx(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.adj.len() {
            for &j in &self.adj[i] {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// BFS distances from `x`; `None` for unreachable vertices.
    pub fn distances_idx(&self, x: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.names.len()];
        dist[x] = Some(0);
        let mut frontier = vec![x];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for &w in &self.adj[v] {
                    if dist[w].is_none() {
                        dist[w] = Some(d);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_idx(0).iter().all(Option::is_some)
    }

    /// Largest BFS eccentricity. Errors on disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for x in 0..self.vertex_count() {
            for d in self.distances_idx(x) {
                match d {
                    Some(d) => best = best.max(d),
                    None => {
                        return Err(Error::Domain("graph is disconnected".into()));
                    }
                }
            }
        }
        Ok(best)
    }

    /// Some triangle (three mutually adjacent vertices) if one exists.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (i, j) in self.edges_idx() {
            for &k in &self.adj[i] {
                if k > j && self.has_edge_idx(j, k) {
                    return Some([i, j, k]);
                }
            }
        }
        None
    }

    /// Some 4-cycle (a, b, c, d) with edges a–b, b–c, c–d, d–a, if one
    /// exists. A 4-cycle exists iff some vertex pair has two common
    /// neighbors.
    pub fn find_four_cycle(&self) -> Option<[usize; 4]> {
        let n = self.vertex_count();
        for a in 0..n {
            for c in (a + 1)..n {
                let common: Vec<usize> = self.adj[a]
                    .iter()
                    .filter(|v| self.has_edge_idx(**v, c))
                    .copied()
                    .collect();
                if common.len() >= 2 {
                    return Some([a, common[0], c, common[1]]);
                }
            }
        }
        None
    }

    pub(crate) fn sphere_idx(&self, x: usize, i: usize) -> Vec<usize> {
        self.distances_idx(x)
            .into_iter()
            .enumerate()
            .filter(|(_, d)| *d == Some(i))
            .map(|(v, _)| v)
            .collect()
    }
}

/// The length-2 path subgraph around a center vertex: everything the
/// curvature matrix needs. All lists follow the graph's lexicographic
/// vertex order.
#[derive(Debug, Clone)]
pub struct LocalNeighborhood {
    /// The center vertex x.
    pub center: String,
    /// Degree of the center in the full graph, d(x) = |sphere1|.
    pub center_degree: usize,
    /// B(1,x) in lexicographic order.
    pub sphere1: Vec<String>,
    /// B(2,x) in lexicographic order.
    pub sphere2: Vec<String>,
    /// Full-graph degree of each sphere1 vertex.
    pub degrees: Vec<usize>,
    /// t_v: for each sphere1 vertex, the number of sphere1 neighbors
    /// (equivalently, triangles through v and the center).
    pub t: Vec<usize>,
    /// T(v,v'): adjacency among sphere1 vertices.
    pub adj1: Vec<Vec<bool>>,
    /// n_u = |B(1,u) ∩ B(1,x)| for each sphere2 vertex u: the number of
    /// length-2 paths from the center to u.
    pub n: Vec<usize>,
    /// For each sphere2 vertex u, the ascending sphere1 indices adjacent
    /// to u (so n[j] == link2[j].len()).
    pub link2: Vec<Vec<usize>>,
}

/// Parses edge-list text: one `<vertex> <vertex>` pair per line, `#`
/// lines are comments, blank lines are skipped, duplicate edges merge.
pub fn load_graph(source: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected two vertex tokens, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Invalid(format!(
                "self-loop at vertex {:?} (line {})",
                tokens[0],
                lineno + 1
            )));
        }
        edges.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Graph::from_edges(edges)
}

/// The distance-i sphere B(i,x) = { u : δ(x,u) = i }, in lexicographic
/// order, via breadth-first search.
pub fn sphere(g: &Graph, x: &str, i: usize) -> Result<Vec<String>> {
    let xi = g.index_of(x)?;
    Ok(g.sphere_idx(xi, i)
        .into_iter()
        .map(|v| g.name(v).to_string())
        .collect())
}

/// Extracts the full length-2 path subgraph data around `x`.
pub fn local_neighborhood(g: &Graph, x: &str) -> Result<LocalNeighborhood> {
    let xi = g.index_of(x)?;
    let s1 = g.sphere_idx(xi, 1);
    let s2 = g.sphere_idx(xi, 2);
    let adj1: Vec<Vec<bool>> = s1
        .iter()
        .map(|&v| s1.iter().map(|&w| g.has_edge_idx(v, w)).collect())
        .collect();
    let t: Vec<usize> = adj1
        .iter()
        .map(|row| row.iter().filter(|b| **b).count())
        .collect();
    let link2: Vec<Vec<usize>> = s2
        .iter()
        .map(|&u| {
            (0..s1.len())
                .filter(|&i| g.has_edge_idx(s1[i], u))
                .collect()
        })
        .collect();
    let n: Vec<usize> = link2.iter().map(Vec::len).collect();
    debug_assert!(n.iter().all(|&c| c >= 1));
    Ok(LocalNeighborhood {
        center: x.to_string(),
        center_degree: s1.len(),
        sphere1: s1.iter().map(|&v| g.name(v).to_string()).collect(),
        sphere2: s2.iter().map(|&u| g.name(u).to_string()).collect(),
        degrees: s1.iter().map(|&v| g.degree_idx(v)).collect(),
        t,
        adj1,
        n,
        link2,
    })
}

/// T = the maximum, over edges {v,v'}, of the number of triangles that
/// contain both endpoints (their common-neighbor count). 0 for
/// triangle-free graphs. Non-adjacent pairs lie in no common triangle.
pub fn max_joint_triangles(g: &Graph) -> usize {
    g.edges_idx()
        .into_iter()
        .map(|(i, j)| {
            g.neighbors_idx(i)
                .iter()
                .filter(|v| g.has_edge_idx(**v, j))
                .count()
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges((0..n).map(|i| (format!("{i}"), format!("{}", (i + 1) % n)))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                e.push((format!("{i}"), format!("{j}")));
            }
        }
        Graph::from_edges(e).unwrap()
    }

    #[test]
    fn load_path_graph() {
        let g = load_graph("a b\nb c").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree("b").unwrap(), 2);
        assert_eq!(g.degree("a").unwrap(), 1);
    }

    #[test]
    fn load_rejects_self_loop() {
        assert!(matches!(load_graph("a a"), Err(Error::Invalid(_))));
    }

    #[test]
    fn load_hexagon() {
        let src = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0";
        let g = load_graph(src).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.vertex_names().iter().all(|v| g.degree(v).unwrap() == 2));
    }

    #[test]
    fn load_merges_duplicates_and_skips_comments() {
        let g = load_graph("# a comment\na b\n\nb a\na b").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn load_reports_line_numbers() {
        let err = load_graph("a b\nx y z").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn sphere_on_path() {
        let g = load_graph("a b\nb c").unwrap();
        assert_eq!(sphere(&g, "a", 2).unwrap(), vec!["c".to_string()]);
        assert_eq!(sphere(&g, "a", 0).unwrap(), vec!["a".to_string()]);
    }

    #[test]
    fn sphere_on_hexagon() {
        let g = cycle(6);
        assert_eq!(sphere(&g, "0", 2).unwrap(), vec!["2", "4"]);
    }

    #[test]
    fn sphere_empty_beyond_diameter() {
        let g = complete(4);
        assert!(sphere(&g, "0", 2).unwrap().is_empty());
    }

    #[test]
    fn sphere_unknown_vertex() {
        let g = complete(3);
        assert!(matches!(
            sphere(&g, "zz", 1),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn sphere_cardinality_and_disjointness() {
        let g = cycle(8);
        for x in g.vertex_names() {
            assert_eq!(sphere(&g, x, 1).unwrap().len(), g.degree(x).unwrap());
            let s1 = sphere(&g, x, 1).unwrap();
            let s2 = sphere(&g, x, 2).unwrap();
            assert!(s1.iter().all(|v| !s2.contains(v)));
        }
    }

    #[test]
    fn neighborhood_of_complete_bipartite_3_3() {
        // One side {a0,a1,a2}, other side {b0,b1,b2}, all cross edges.
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                e.push((format!("a{i}"), format!("b{j}")));
            }
        }
        let g = Graph::from_edges(e).unwrap();
        let nb = local_neighborhood(&g, "a0").unwrap();
        assert_eq!(nb.sphere1, vec!["b0", "b1", "b2"]);
        assert_eq!(nb.sphere2, vec!["a1", "a2"]);
        // Each distance-2 vertex is adjacent to the whole opposite side.
        assert_eq!(nb.n, vec![3, 3]);
        assert_eq!(nb.t, vec![0, 0, 0]);
        assert_eq!(nb.degrees, vec![3, 3, 3]);
    }

    #[test]
    fn neighborhood_of_star_center() {
        let g = load_graph("c l1\nc l2\nc l3").unwrap();
        let nb = local_neighborhood(&g, "c").unwrap();
        assert!(nb.sphere2.is_empty());
        assert_eq!(nb.t, vec![0, 0, 0]);
        assert_eq!(nb.center_degree, 3);
    }

    #[test]
    fn neighborhood_of_five_cycle() {
        let g = cycle(5);
        let nb = local_neighborhood(&g, "0").unwrap();
        assert_eq!(nb.sphere2.len(), 2);
        assert_eq!(nb.n, vec![1, 1]);
    }

    #[test]
    fn neighborhood_path_count_identity() {
        // Sum of n_u equals the number of sphere1–sphere2 edges.
        let g = Graph::from_edges([
            ("x", "a"),
            ("x", "b"),
            ("a", "b"),
            ("a", "u"),
            ("b", "u"),
            ("u", "w"),
            ("b", "w"),
        ])
        .unwrap();
        let nb = local_neighborhood(&g, "x").unwrap();
        let cross_edges: usize = nb
            .link2
            .iter()
            .map(Vec::len)
            .sum();
        assert_eq!(nb.n.iter().sum::<usize>(), cross_edges);
        // adj1 is symmetric with a zero diagonal and row sums t_v.
        for i in 0..nb.sphere1.len() {
            assert!(!nb.adj1[i][i]);
            for j in 0..nb.sphere1.len() {
                assert_eq!(nb.adj1[i][j], nb.adj1[j][i]);
            }
            assert_eq!(nb.t[i], nb.adj1[i].iter().filter(|b| **b).count());
        }
    }

    #[test]
    fn joint_triangles_examples() {
        let tree = load_graph("a b\nb c\nb d").unwrap();
        assert_eq!(max_joint_triangles(&tree), 0);
        assert_eq!(max_joint_triangles(&complete(4)), 2);
        assert_eq!(max_joint_triangles(&cycle(6)), 0);
    }

    #[test]
    fn triangle_and_four_cycle_detection() {
        assert!(complete(3).find_triangle().is_some());
        assert!(cycle(5).find_triangle().is_none());
        assert!(cycle(4).find_four_cycle().is_some());
        assert!(cycle(5).find_four_cycle().is_none());
        let diamond = load_graph("a b\nb c\nc d\nd a\na c").unwrap();
        assert!(diamond.find_triangle().is_some());
        assert!(diamond.find_four_cycle().is_some());
    }

    #[test]
    fn diameter_and_connectivity() {
        assert_eq!(cycle(6).diameter().unwrap(), 3);
        let disconnected = Graph::from_edges([("a", "b"), ("c", "d")]).unwrap();
        assert!(!disconnected.is_connected());
        assert!(disconnected.diameter().is_err());
    }
}
