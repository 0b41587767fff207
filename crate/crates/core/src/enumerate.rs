//! Canonical forms and isomorph-free enumeration of small connected graphs.
//!
//! The canonical form of `g` is the relabeling whose upper-triangle
//! bitstring, read in graph6 column order, is lexicographically smallest
//! over all `n!` vertex permutations. The search places vertices one column
//! at a time; a column's bits follow the already fixed prefix, so only the
//! candidates producing the smallest next column can lead to the minimum.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;

/// Largest order accepted by [`canonical_form`]; the bitstring must fit in
/// 64 bits.
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

struct Search<'a> {
    g: &'a Graph,
    total_bits: u32,
    order: Vec<usize>,
    best_bits: u64,
    best_order: Vec<usize>,
}

fn column_start(j: usize) -> u32 {
    (j * j.saturating_sub(1) / 2) as u32
}

impl Search<'_> {
    /// Bits of column `pos` when `v` is placed there, as a `pos`-bit number.
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | u64::from(self.g.adjacent(u, v)))
    }

    fn run(&mut self, pos: usize, unused: VertexSet, prefix: u64) {
        let n = self.g.n();
        if pos == n {
            if prefix < self.best_bits || self.best_order.is_empty() {
                self.best_bits = prefix;
                self.best_order = self.order.clone();
            }
            return;
        }
        let used_bits = column_start(pos + 1);
        let chunks: Vec<(usize, u64)> = unused.iter().map(|v| (v, self.column(v))).collect();
        let smallest = chunks
            .iter()
            .map(|&(_, c)| c)
            .min()
            .expect("unused is non-empty");
        let next_prefix = prefix << pos | smallest;
        if !self.best_order.is_empty() {
            let best_prefix = self.best_bits >> (self.total_bits - used_bits);
            if next_prefix > best_prefix {
                return;
            }
        }
        for (v, _) in chunks.into_iter().filter(|&(_, c)| c == smallest) {
            self.order.push(v);
            let mut rest = unused;
            rest.remove(v);
            self.run(pos + 1, rest, next_prefix);
            self.order.pop();
        }
    }
}

/// Canonical relabeling of `g`: returns the canonical graph and the map
/// `perm[old] = new`.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical form is limited to {MAX_CANONICAL_ORDER} vertices, got {n}"
        )));
    }
    let mut search = Search {
        g,
        total_bits: column_start(n),
        order: Vec::with_capacity(n),
        best_bits: 0,
        best_order: Vec::new(),
    };
    search.run(0, g.vertices(), 0);
    let mut perm = vec![0; n];
    for (new, &old) in search.best_order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((g.relabel(&perm)?, perm))
}

/// graph6 string of the canonical form.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(to_graph6(&canonical_form(g)?.0))
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by graph6 string.
///
/// Every connected graph on `n ≥ 2` vertices has a vertex whose removal
/// leaves it connected, so extending each connected graph on `n - 1`
/// vertices by a vertex with a non-empty neighbourhood reaches every class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let found: BTreeMap<String, Graph> = level
            .par_iter()
            .flat_map_iter(|base| {
                (1u64..1 << (k - 1)).map(move |mask| {
                    let mut rows: Vec<VertexSet> = (0..k - 1).map(|v| base.neighbors(v)).collect();
                    let hood = VertexSet::from_bits(mask);
                    for v in hood.iter() {
                        rows[v].insert(k - 1);
                    }
                    rows.push(hood);
                    let (canon, _) = canonical_form(&Graph::from_rows_unchecked(k, rows))
                        .expect("order within limits");
                    (to_graph6(&canon), canon)
                })
            })
            .collect();
        level = found.into_values().collect();
    }
    Ok(level)
}
