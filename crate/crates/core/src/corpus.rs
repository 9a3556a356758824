//! Deterministic graph corpora: named families (complete, cycle, path,
//! star, complete bipartite, Petersen, regular trees), exhaustive
//! enumeration of all free trees up to 10 vertices, seeded random
//! connected graphs, and the standard verification corpus used by the
//! cross-validation suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{bruhat_graph_symmetric, weak_order_graph, GroupModel};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn vertex(i: usize, width: usize) -> String {
    format!("v{i:0width$}")
}

fn width_for(n: usize) -> usize {
    n.saturating_sub(1).max(1).to_string().len()
}

fn graph_from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
    let w = width_for(n);
    Graph::from_edges(
        edges
            .into_iter()
            .map(|(a, b)| (vertex(a, w), vertex(b, w)))
            .collect::<Vec<_>>(),
    )
}

/// Complete graph K_n, n ≥ 2.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain("complete graph needs n >= 2".into()));
    }
    graph_from_index_edges(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
}

/// Cycle C_n, n ≥ 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain("cycle needs n >= 3".into()));
    }
    graph_from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on n vertices, n ≥ 2.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain("path needs n >= 2".into()));
    }
    graph_from_index_edges(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// Star K_{1,leaves} with the center as vertex 0.
pub fn star_graph(leaves: usize) -> Result<Graph> {
    if leaves < 1 {
        return Err(Error::Domain("star needs at least one leaf".into()));
    }
    graph_from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Complete bipartite K_{a,b} with sides a0.. and b0..
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::Domain("bipartite sides must be nonempty".into()));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((format!("a{i}"), format!("b{j}")));
        }
    }
    Graph::from_edges(edges)
}

/// The Petersen graph: outer 5-cycle, inner 5-cycle with step 2, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((format!("o{i}"), format!("o{}", (i + 1) % 5)));
        edges.push((format!("i{i}"), format!("i{}", (i + 2) % 5)));
        edges.push((format!("o{i}"), format!("i{i}")));
    }
    Graph::from_edges(edges).expect("the Petersen edge list is well formed")
}

/// The finite d-regular tree of the given depth: the center and every
/// internal vertex have degree d; leaves sit at the given depth.
/// The center is named "c".
pub fn regular_tree(degree: usize, depth: usize) -> Result<Graph> {
    if degree < 2 || depth < 1 {
        return Err(Error::Domain(
            "regular tree needs degree >= 2 and depth >= 1".into(),
        ));
    }
    let size_estimate = {
        let mut total = 1usize;
        let mut layer = degree;
        for _ in 0..depth {
            total = total
                .checked_add(layer)
                .ok_or_else(|| Error::Resource("regular tree too large".into()))?;
            layer = layer.saturating_mul(degree - 1);
        }
        total
    };
    if size_estimate > 100_000 {
        return Err(Error::Resource(format!(
            "regular tree with about {size_estimate} vertices exceeds the generation cap"
        )));
    }
    let mut edges = Vec::new();
    let mut next_id = 0usize;
    let mut frontier = vec!["c".to_string()];
    for level in 1..=depth {
        let mut next_frontier = Vec::new();
        for parent in &frontier {
            let children = if level == 1 { degree } else { degree - 1 };
            for _ in 0..children {
                let child = format!("n{next_id:05}");
                next_id += 1;
                edges.push((parent.clone(), child.clone()));
                next_frontier.push(child);
            }
        }
        frontier = next_frontier;
    }
    Graph::from_edges(edges)
}

/// All free (unlabeled, unrooted) trees on n vertices, 2 ≤ n ≤ 10,
/// one representative graph per isomorphism class.
///
/// Rooted trees are enumerated by canonical level sequences (successor
/// rule: find the last entry above 2, clip, and replicate the preceding
/// pattern); free-tree deduplication roots each tree at its centroid
/// (or the lexicographically smaller of two centroids) and canonizes
/// with sorted subtree encodings.
pub fn all_free_trees(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::Domain("free tree enumeration needs n >= 2".into()));
    }
    if n > 10 {
        return Err(Error::Resource(
            "free tree enumeration caps at 10 vertices".into(),
        ));
    }
    let mut seen = std::collections::BTreeMap::<String, Vec<(usize, usize)>>::new();
    let mut level_seq: Vec<usize> = (1..=n).collect();
    loop {
        let edges = edges_of_level_sequence(&level_seq);
        let canon = free_canonical_form(n, &edges);
        seen.entry(canon).or_insert(edges);
        match successor_level_sequence(&level_seq) {
            Some(next) => level_seq = next,
            None => break,
        }
    }
    seen.into_values()
        .map(|edges| graph_from_index_edges(n, edges))
        .collect()
}

/// Edges (parent, child) of a rooted-tree level sequence (root level 1).
fn edges_of_level_sequence(levels: &[usize]) -> Vec<(usize, usize)> {
    let mut last_at_level: Vec<usize> = vec![0; levels.len() + 2];
    let mut edges = Vec::with_capacity(levels.len() - 1);
    for (i, &level) in levels.iter().enumerate() {
        if level > 1 {
            edges.push((last_at_level[level - 1], i));
        }
        last_at_level[level] = i;
    }
    edges
}

/// The next canonical level sequence, or None after the path (all 2s).
fn successor_level_sequence(levels: &[usize]) -> Option<Vec<usize>> {
    let p = (0..levels.len()).rev().find(|&i| levels[i] > 2)?;
    let q = (0..p)
        .rev()
        .find(|&i| levels[i] == levels[p] - 1)
        .expect("a canonical level sequence always has the parent level before p");
    let mut next = levels.to_vec();
    for i in p..levels.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

/// Canonical form of a free tree given by its edge list: AHU encoding
/// rooted at the centroid, minimized over the at-most-two centroids.
fn free_canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    centroids(n, &adj)
        .into_iter()
        .map(|root| ahu_encoding(root, usize::MAX, &adj))
        .min()
        .expect("every tree has at least one centroid")
}

fn centroids(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    // Iteratively strip leaves; the last one or two vertices remaining
    // are the centroids (center of the tree under subtree-size balance
    // is equivalent to the center for this canonical use: we just need
    // a deterministic, isomorphism-invariant root set, and the tree
    // center — last vertices under leaf-stripping — is one).
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            removed[leaf] = true;
            remaining -= 1;
            for &u in &adj[leaf] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn ahu_encoding(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu_encoding(u, v, adj))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// A seeded random connected graph: a uniform random attachment tree
/// plus each remaining pair independently with probability 1/4.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain("random graph needs n >= 2".into()));
    }
    if n > 64 {
        return Err(Error::Resource("random graph generation caps at 64 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((j, i));
        present[j][i] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !present[i][j] && rng.gen_bool(0.25) {
                edges.push((i, j));
                present[i][j] = true;
            }
        }
    }
    graph_from_index_edges(n, edges)
}

/// A named corpus graph.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        CorpusEntry {
            name: name.into(),
            graph,
        }
    }
}

/// The standard cross-validation corpus: all free trees on 2–10
/// vertices, cycles C₃–C₁₀, complete graphs K₂–K₆, the Petersen graph,
/// the weak orders of A₂, A₃, B₂, B₃ and I₂(3)–I₂(8), and the Bruhat
/// graphs of S₃ and S₄.
pub fn oracle_corpus() -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for n in 2..=10 {
        for (i, tree) in all_free_trees(n)?.into_iter().enumerate() {
            entries.push(CorpusEntry::new(format!("tree_{n}_{i:03}"), tree));
        }
    }
    for n in 3..=10 {
        entries.push(CorpusEntry::new(format!("C{n}"), cycle_graph(n)?));
    }
    for n in 2..=6 {
        entries.push(CorpusEntry::new(format!("K{n}"), complete_graph(n)?));
    }
    entries.push(CorpusEntry::new("petersen", petersen()));
    entries.push(CorpusEntry::new(
        "weak_A2",
        weak_order_graph(&GroupModel::Symmetric(2))?,
    ));
    entries.push(CorpusEntry::new(
        "weak_A3",
        weak_order_graph(&GroupModel::Symmetric(3))?,
    ));
    entries.push(CorpusEntry::new(
        "weak_B2",
        weak_order_graph(&GroupModel::Signed(2))?,
    ));
    entries.push(CorpusEntry::new(
        "weak_B3",
        weak_order_graph(&GroupModel::Signed(3))?,
    ));
    for m in 3..=8 {
        entries.push(CorpusEntry::new(
            format!("weak_I2_{m}"),
            weak_order_graph(&GroupModel::Dihedral(m))?,
        ));
    }
    entries.push(CorpusEntry::new("bruhat_S3", bruhat_graph_symmetric(3)?));
    entries.push(CorpusEntry::new("bruhat_S4", bruhat_graph_symmetric(4)?));
    Ok(entries)
}

/// Corpus graphs with strictly positive global curvature, for
/// gap-vs-curvature checks.
pub fn positive_curvature_corpus() -> Result<Vec<CorpusEntry>> {
    let mut entries = vec![
        CorpusEntry::new("C3", cycle_graph(3)?),
        CorpusEntry::new("C4", cycle_graph(4)?),
        CorpusEntry::new("K33", complete_bipartite(3, 3)?),
        CorpusEntry::new("bruhat_S3", bruhat_graph_symmetric(3)?),
        CorpusEntry::new("bruhat_S4", bruhat_graph_symmetric(4)?),
        CorpusEntry::new(
            "weak_I2_2",
            weak_order_graph(&GroupModel::Dihedral(2))?,
        ),
        CorpusEntry::new(
            "weak_A1",
            weak_order_graph(&GroupModel::Symmetric(1))?,
        ),
    ];
    for n in 2..=6 {
        entries.push(CorpusEntry::new(format!("K{n}"), complete_graph(n)?));
    }
    Ok(entries)
}
