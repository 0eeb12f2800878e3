//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` bitset per vertex and
//! edges carry stable indices assigned in lexicographic `(u, v)` order with
//! `u < v`. Colorings refer to these indices, so a graph never renumbers its
//! edges after construction.

mod canon;
mod edgelist;
mod families;
mod graph6;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANON_MAX_N};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use families::{build_family, GraphFamily};
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_MAX_N};

use crate::{Error, Result};
use serde::Serialize;

/// Largest vertex count the bitset representation can hold.
pub const MAX_N: usize = 64;

const NO_EDGE: u16 = u16::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    // n * n lookup from vertex pair to edge index
    edge_ids: Vec<u16>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_adjacency(n, vec![0; n])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n > MAX_N {
            return Err(too_large(n));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Graph::from_adjacency(n, (0..n).map(|v| full & !(1u64 << v)).collect())
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_N {
            return Err(too_large(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph::from_adjacency(n, adj)
    }

    /// Builds a graph from neighbor bitsets. The relation must be symmetric
    /// and irreflexive.
    pub fn from_adjacency(n: usize, adj: Vec<u64>) -> Result<Graph> {
        if n > MAX_N {
            return Err(too_large(n));
        }
        if adj.len() != n {
            return Err(Error::InvalidGraph(format!(
                "adjacency has {} rows for n = {n}",
                adj.len()
            )));
        }
        let range = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (u, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::InvalidGraph(format!("vertex {u} has out-of-range neighbor")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidGraph(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        let mut edges = Vec::new();
        let mut edge_ids = vec![NO_EDGE; n * n];
        for u in 0..n {
            for v in bits(adj[u] & !((1u64 << u) | ((1u64 << u) - 1))) {
                let id = edges.len() as u16;
                edge_ids[u * n + v] = id;
                edge_ids[v * n + u] = id;
                edges.push((u, v));
            }
        }
        Ok(Graph {
            n,
            adj,
            edges,
            edge_ids,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, indexed by edge id.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    #[inline]
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.edge_ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[u])
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Minimum degree, 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertices reachable from `start` inside the vertex set `within`.
    pub(crate) fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// A graph with no vertices is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The graph with vertex `v` removed; higher labels shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| squeeze(self.adj[u] & !(1u64 << v)))
            .collect();
        Graph::from_adjacency(self.n - 1, adj).expect("vertex deletion preserves validity")
    }

    /// The spanning subgraph without edge `id`. Remaining edges are reindexed.
    pub fn remove_edge(&self, id: usize) -> Graph {
        let (u, v) = self.edges[id];
        let mut adj = self.adj.clone();
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
        Graph::from_adjacency(self.n, adj).expect("edge deletion preserves validity")
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Contract("permutation length differs from n".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Contract("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn stats(&self) -> BasicStats {
        basic_stats(self)
    }
}

fn too_large(n: usize) -> Error {
    Error::Unsupported {
        what: "vertex count",
        actual: n,
        limit: MAX_N,
    }
}

/// `G + H`: side-by-side copies with `h` relabelled after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.n;
    Graph::from_edges(
        g.n + h.n,
        g.edges
            .iter()
            .copied()
            .chain(h.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
    )
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.n;
    let cross = (0..g.n).flat_map(|u| (0..h.n).map(move |v| (u, v + shift)));
    Graph::from_edges(
        g.n + h.n,
        g.edges
            .iter()
            .copied()
            .chain(h.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .chain(cross),
    )
}

/// `copies` disjoint copies of `g`.
pub fn repeat_union(g: &Graph, copies: usize) -> Result<Graph> {
    let mut out = Graph::empty(0)?;
    for _ in 0..copies {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Family(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BasicStats {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub complete: bool,
}

pub fn basic_stats(g: &Graph) -> BasicStats {
    BasicStats {
        n: g.n(),
        m: g.m(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        connected: g.is_connected(),
        complete: g.is_complete(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn edges_sorted_and_indexed() {
        let g = Graph::from_edges(4, [(2, 3), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(u, v), Some(i));
            assert_eq!(g.edge_id(v, u), Some(i));
        }
        assert_eq!(g.edge_id(1, 3), None);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn union_examples() {
        let k2 = k(2);
        let two = disjoint_union(&k2, &k2).unwrap();
        assert_eq!((two.n(), two.m()), (4, 2));
        assert!(!two.is_connected());
        assert_eq!(disjoint_union(&k(3), &Graph::empty(0).unwrap()).unwrap(), k(3));
        let three = repeat_union(&k2, 3).unwrap();
        assert_eq!((three.n(), three.m()), (6, 3));
    }

    #[test]
    fn join_examples() {
        let k1 = k(1);
        let g1 = join(&k1, &repeat_union(&k(2), 3).unwrap()).unwrap();
        assert_eq!((g1.n(), g1.m()), (7, 9));
        let inner = disjoint_union(&Graph::empty(2).unwrap(), &k(2)).unwrap();
        let gs1 = join(&k1, &inner).unwrap();
        assert_eq!((gs1.n(), gs1.m()), (5, 5));
        assert_eq!(join(&k(3), &k(4)).unwrap(), k(7));
    }

    #[test]
    fn join_with_single_vertex_adds_one_neighbor_each() {
        let g = path(5).unwrap();
        let j = join(&k(1), &g).unwrap();
        assert_eq!(j.degree(0), 5);
        for v in 0..5 {
            assert_eq!(j.degree(v + 1), g.degree(v) + 1);
        }
    }

    #[test]
    fn stats_examples() {
        let g1 = build_family(&GraphFamily::G1).unwrap();
        assert_eq!(
            basic_stats(&g1),
            BasicStats {
                n: 7,
                m: 9,
                min_degree: 2,
                max_degree: 6,
                connected: true,
                complete: false
            }
        );
        let k5 = basic_stats(&k(5));
        assert_eq!((k5.n, k5.m, k5.min_degree, k5.max_degree), (5, 10, 4, 4));
        assert!(k5.connected && k5.complete);
        assert!(!basic_stats(&repeat_union(&k(2), 2).unwrap()).connected);
    }

    #[test]
    fn vertex_and_edge_removal() {
        let c = cycle(5).unwrap();
        let p = c.remove_vertex(2);
        assert_eq!(p.n(), 4);
        assert_eq!(p.m(), 3);
        assert!(p.is_connected());
        let q = c.remove_edge(0);
        assert_eq!(q.m(), 4);
        assert!(q.is_tree());
    }
}
