//! Maximal cliques and the clique graph `Γ(G)`: vertices are the maximal
//! cliques, adjacent when two distinct cliques intersect.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet, MAX_VERTICES};

/// Maximal cliques in canonical order (lexicographic on sorted members).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CliqueSet {
    cliques: Vec<VertexSet>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn get(&self, i: usize) -> VertexSet {
        self.cliques[i]
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.cliques.iter().copied()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cliques.iter().map(|c| c.len()).collect()
    }

    /// Index of the first clique (in canonical order) containing `s`.
    pub fn first_containing(&self, s: VertexSet) -> Option<usize> {
        self.cliques.iter().position(|&c| s.is_subset(c))
    }
}

/// Bron–Kerbosch with Tomita pivoting: the pivot `u ∈ P ∪ X` maximizes
/// `|P ∩ N(u)|`.
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    fn expand(
        g: &Graph,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
            .expect("P is non-empty");
        for v in p.difference(g.neighbors(pivot)).iter() {
            let nv = g.neighbors(v);
            let mut r2 = r;
            r2.insert(v);
            expand(g, r2, p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    let mut cliques = Vec::new();
    if g.n() > 0 {
        expand(
            g,
            VertexSet::EMPTY,
            g.vertices(),
            VertexSet::EMPTY,
            &mut cliques,
        );
    }
    cliques.sort_by_cached_key(|c| c.to_vec());
    CliqueSet { cliques }
}

/// `Γ(G)` together with the cliques its vertices stand for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGraph {
    cliques: CliqueSet,
    graph: Graph,
    dist: DistanceMatrix,
}

impl CliqueGraph {
    pub fn cliques(&self) -> &CliqueSet {
        &self.cliques
    }

    /// `Γ(G)` as a plain graph; vertex `i` is clique `i`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn is_tree(&self) -> bool {
        is_tree(self)
    }

    pub fn diameter(&self) -> usize {
        self.dist.max_entry() as usize
    }

    /// Distance between cliques `i` and `j` in `Γ(G)`.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.dist.get(i, j) as usize
    }

    pub fn distance_matrix(&self) -> &DistanceMatrix {
        &self.dist
    }
}

pub fn clique_graph(g: &Graph) -> Result<CliqueGraph> {
    g.ensure_connected()?;
    let cliques = maximal_cliques(g);
    let k = cliques.len();
    if k > MAX_VERTICES {
        return Err(Error::TooManyVertices(k));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if !cliques.get(i).intersection(cliques.get(j)).is_empty() {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(k, edges)?;
    let dist = graph.distance_matrix()?;
    Ok(CliqueGraph {
        cliques,
        graph,
        dist,
    })
}

/// A connected graph is a tree iff it has one edge fewer than vertices.
pub fn is_tree(cg: &CliqueGraph) -> bool {
    cg.graph.edge_count() + 1 == cg.graph.n()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterRelation {
    pub diam_g: usize,
    pub diam_cg: usize,
    pub tree: bool,
}

impl DiameterRelation {
    /// `diam(G) - 1 ≤ diam(Γ(G))`.
    pub fn lower_bound_holds(&self) -> bool {
        self.diam_g <= self.diam_cg + 1
    }

    /// Equality `diam(G) - 1 = diam(Γ(G))` whenever `Γ(G)` is a tree and
    /// `G` has an edge.
    pub fn tree_equality_holds(&self) -> bool {
        !self.tree || self.diam_g == 0 || self.diam_g == self.diam_cg + 1
    }
}

pub fn clique_diameter_relation(g: &Graph) -> Result<DiameterRelation> {
    let cg = clique_graph(g)?;
    Ok(DiameterRelation {
        diam_g: g.diameter()?,
        diam_cg: cg.diameter(),
        tree: cg.is_tree(),
    })
}

fn check_walk(g: &Graph, path: &[usize]) -> Result<()> {
    for &v in path {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if let Some(w) = path.windows(2).find(|w| !g.adjacent(w[0], w[1])) {
        return Err(Error::NotShortestPath(format!(
            "{} and {} are not adjacent",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Lifts a shortest path `x_0 ~ .. ~ x_d` (d ≥ 1) of `g` to the chain of
/// maximal cliques `H_1 ~ .. ~ H_d` with `{x_{i-1}, x_i} ⊆ H_i`, returned as
/// indices into `cg`. The chain is a shortest path of length `d - 1` in
/// `Γ(G)`. `H_i` is the first canonical clique containing the edge.
pub fn lift_shortest_path(g: &Graph, cg: &CliqueGraph, path: &[usize]) -> Result<Vec<usize>> {
    if path.len() < 2 {
        return Err(Error::NotShortestPath("need at least one edge".into()));
    }
    check_walk(g, path)?;
    let d = g.distance_matrix()?;
    let (first, last) = (path[0], path[path.len() - 1]);
    let len = path.len() - 1;
    if d.get(first, last) as usize != len {
        return Err(Error::NotShortestPath(format!(
            "length {len} but d({first}, {last}) = {}",
            d.get(first, last)
        )));
    }
    Ok(path
        .windows(2)
        .map(|w| {
            let edge: VertexSet = w.iter().copied().collect();
            cg.cliques
                .first_containing(edge)
                .expect("every edge lies in a maximal clique")
        })
        .collect())
}

/// Projects a shortest path `H_0 ~ .. ~ H_d` (d ≥ 1) of `Γ(G)` to vertices
/// `x_1 ~ .. ~ x_d` with `x_i` the smallest vertex of `H_{i-1} ∩ H_i`. The
/// result is a shortest path of length `d - 1` in `g`.
pub fn project_clique_path(cg: &CliqueGraph, clique_path: &[usize]) -> Result<Vec<usize>> {
    if clique_path.len() < 2 {
        return Err(Error::NotShortestPath(
            "need at least one clique edge".into(),
        ));
    }
    check_walk(&cg.graph, clique_path)?;
    let len = clique_path.len() - 1;
    let (first, last) = (clique_path[0], clique_path[len]);
    let dist = cg.distance(first, last);
    if dist != len {
        return Err(Error::NotShortestPath(format!(
            "length {len} but d(H_{first}, H_{last}) = {dist}"
        )));
    }
    Ok(clique_path
        .windows(2)
        .map(|w| {
            cg.cliques
                .get(w[0])
                .intersection(cg.cliques.get(w[1]))
                .first()
                .expect("adjacent cliques intersect")
        })
        .collect())
}

/// A diametral shortest path of a connected graph: BFS tree path between
/// the lexicographically first pair at maximum distance.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let d = g.distance_matrix()?;
    let n = g.n();
    let diam = d.max_entry();
    let (x, y) = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| d.get(x, y) == diam)
        .expect("non-empty graph");
    shortest_path(g, &d, x, y)
}

/// Shortest path from `x` to `y`, choosing the smallest next vertex at
/// each step.
pub fn shortest_path(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<Vec<usize>> {
    let mut path = vec![x];
    let mut cur = x;
    while cur != y {
        cur = g
            .neighbors(cur)
            .iter()
            .find(|&v| d.get(v, y) + 1 == d.get(cur, y))
            .ok_or(Error::Disconnected { unreachable: y })?;
        path.push(cur);
    }
    Ok(path)
}
