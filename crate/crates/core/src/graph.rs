//! Simple undirected graphs on dense vertex labels `0..n`, the named
//! constructions used throughout the crate, and metric helpers.
//!
//! Adjacency rows are stored as 64-bit vertex sets, so a graph has at most
//! [`MAX_VERTICES`] vertices.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices in `0..64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Loops are rejected; repeated
    /// edges collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<VertexSet>) -> Self {
        debug_assert_eq!(rows.len(), n);
        Graph { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// True when `s` induces a complete subgraph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            s.difference(VertexSet::singleton(v))
                .is_subset(self.rows[v])
        })
    }

    /// Breadth-first distances from `source` within the vertex set `within`.
    /// Unreached vertices get `u32::MAX`.
    fn bfs(&self, source: usize, within: VertexSet) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].intersection(within).iter() {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Set of vertices reachable from `source` inside `within`.
    fn component(&self, source: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next = next.union(self.rows[u]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True when the subgraph induced by the non-empty set `s` is connected.
    pub fn is_set_connected(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.component(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_set_connected(self.vertices())
    }

    /// Fails with [`Error::Disconnected`] naming an unreachable vertex.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let reached = self.component(0, self.vertices());
        match self.vertices().difference(reached).first() {
            Some(unreachable) => Err(Error::Disconnected { unreachable }),
            None => Ok(()),
        }
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distance_matrix()?.max_entry() as usize)
    }

    /// All-pairs shortest-path lengths, one BFS per vertex.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        self.ensure_connected()?;
        let all = self.vertices();
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            d.extend(self.bfs(s, all));
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    /// Subgraph induced by `s`, relabeled so that the i-th smallest member
    /// of `s` becomes vertex `i`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !s.is_subset(self.vertices()) {
            let vertex = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let members = s.to_vec();
        let rows = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adjacent(u, v))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Ok(Graph::from_rows_unchecked(members.len(), rows))
    }

    /// Compares distances inside the subgraph induced by `s` with distances
    /// in `self`.
    pub fn isometry_check(&self, s: VertexSet) -> Result<IsometryCheck> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !s.is_subset(self.vertices()) {
            let vertex = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        if !self.is_set_connected(s) {
            return Ok(IsometryCheck::DisconnectedSubgraph);
        }
        let all = self.vertices();
        for x in s.iter() {
            let inner = self.bfs(x, s);
            let outer = self.bfs(x, all);
            for y in s.iter().filter(|&y| y > x) {
                if inner[y] != outer[y] {
                    return Ok(IsometryCheck::Shortcut {
                        x,
                        y,
                        subgraph_distance: inner[y],
                        graph_distance: outer[y],
                    });
                }
            }
        }
        Ok(IsometryCheck::Isometric)
    }

    /// True when the subgraph induced by `s` is connected and isometrically
    /// embedded. Use [`Graph::isometry_check`] for the reason on failure.
    pub fn is_isometric_subgraph(&self, s: VertexSet) -> Result<bool> {
        Ok(self.isometry_check(s)?.is_isometric())
    }

    /// Image of `self` under `perm`, where old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if perm.iter().any(|&p| p >= self.n) || image.len() != self.n {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]].insert(perm[v]);
            rows[perm[v]].insert(perm[u]);
        }
        Ok(Graph::from_rows_unchecked(self.n, rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Outcome of [`Graph::isometry_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryCheck {
    Isometric,
    /// The induced subgraph is disconnected, so it has no metric of its own.
    DisconnectedSubgraph,
    /// `x` and `y` are closer in the ambient graph than in the subgraph.
    Shortcut {
        x: usize,
        y: usize,
        subgraph_distance: u32,
        graph_distance: u32,
    },
}

impl IsometryCheck {
    pub fn is_isometric(self) -> bool {
        matches!(self, IsometryCheck::Isometric)
    }
}

/// Shortest-path distances of a connected graph, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_raw(n: usize, d: Vec<u32>) -> Self {
        debug_assert_eq!(d.len(), n * n);
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn max_entry(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Row sums (transmissions) of each vertex.
    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|x| self.row(x).iter().map(|&v| u64::from(v)).sum())
            .collect()
    }

    /// Constant row sums.
    pub fn is_transmission_regular(&self) -> bool {
        let sums = self.row_sums();
        sums.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.d.iter().map(|&v| f64::from(v)).collect()
    }

    /// `f^T D f`.
    pub fn quadratic_form(&self, f: &[f64]) -> f64 {
        assert_eq!(f.len(), self.n);
        (0..self.n)
            .map(|x| {
                let row = self.row(x);
                f[x] * row
                    .iter()
                    .zip(f)
                    .map(|(&d, &fy)| f64::from(d) * fy)
                    .sum::<f64>()
            })
            .sum()
    }

    /// `D f`.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        assert_eq!(f.len(), self.n);
        (0..self.n)
            .map(|x| {
                self.row(x)
                    .iter()
                    .zip(f)
                    .map(|(&d, &fy)| f64::from(d) * fy)
                    .sum()
            })
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|x| self.row(x)))
            .finish()
    }
}

/// `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let all = VertexSet::range(n.min(MAX_VERTICES));
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.rows[v] = all.difference(VertexSet::singleton(v));
    }
    Ok(g)
}

/// `P_n` with edges `i ~ i+1`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("path needs n >= 2".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` with edges `i ~ i+1 (mod n)`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_m ∪_l K_n`: cliques `{0..m-1}` and `{m-l..m-l+n-1}` sharing the `l`
/// vertices `m-l..m-1`.
pub fn make_two_clique(l: usize, m: usize, n: usize) -> Result<Graph> {
    if l < 1 || m <= l || n <= l {
        return Err(Error::InvalidParameter(format!(
            "two-clique graph needs l >= 1, m > l, n > l (got l={l}, m={m}, n={n})"
        )));
    }
    let total = m + n - l;
    let mut g = Graph::empty(total)?;
    let first = VertexSet::range(m);
    let second = VertexSet::range(total).difference(VertexSet::range(m - l));
    for v in 0..total {
        let mut row = VertexSet::EMPTY;
        if first.contains(v) {
            row = row.union(first);
        }
        if second.contains(v) {
            row = row.union(second);
        }
        row.remove(v);
        g.rows[v] = row;
    }
    Ok(g)
}

/// `K_n * (K_{m_1}, .., K_{m_s})`: the hub clique is `{0..n-1}` and part `i`
/// is glued at hub vertex `i`; its remaining `m_i - 1` vertices follow the
/// hub and the earlier parts.
pub fn make_star_product(n: usize, parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.len() > n {
        return Err(Error::InvalidParameter(format!(
            "star product needs 1 <= s <= n (got n={n}, s={})",
            parts.len()
        )));
    }
    if let Some(&m) = parts.iter().find(|&&m| m < 2) {
        return Err(Error::InvalidParameter(format!(
            "star product part K_{m} is too small"
        )));
    }
    let total = n + parts.iter().map(|m| m - 1).sum::<usize>();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let mut next = n;
    for (hub, &m) in parts.iter().enumerate() {
        let members: Vec<usize> = std::iter::once(hub).chain(next..next + m - 1).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v));
            }
        }
        next += m - 1;
    }
    Graph::from_edges(total, edges)
}
