//! Canonical forms by exhaustive relabeling search.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bit string (graph6 column order) over all vertex
//! relabelings, rendered as graph6. The search places vertices one position
//! at a time; placing a vertex at position `j` fixes column `j` of the bit
//! string, so branches whose column exceeds the best one seen are cut.
//! Interchangeable vertices (same neighborhood apart from each other) are
//! explored once per level.

use super::{bits, emit_graph6, Graph};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

pub const CANON_MAX_N: usize = 10;

/// graph6 text of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    best: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let j = self.order.len();
        self.order
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &u)| acc | ((self.adj[u] >> v & 1) << (j - 1 - i)))
    }

    // Invariant on entry: the columns chosen so far equal best[..level].
    fn descend(&mut self, unplaced: u64) {
        let level = self.order.len();
        if unplaced == 0 {
            self.best_order.clone_from(&self.order);
            return;
        }
        let cols: Vec<(usize, u64)> = bits(unplaced).map(|v| (v, self.column(v))).collect();
        let low = cols.iter().map(|&(_, c)| c).min().unwrap();
        if low > self.best[level] {
            return;
        }
        if low < self.best[level] {
            self.best[level] = low;
            for b in &mut self.best[level + 1..] {
                *b = u64::MAX;
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for &(v, c) in &cols {
            if c != low {
                continue;
            }
            let twin = tried.iter().any(|&u| {
                (self.adj[u] & !(1u64 << v)) == (self.adj[v] & !(1u64 << u))
            });
            if twin {
                continue;
            }
            tried.push(v);
            self.order.push(v);
            self.descend(unplaced & !(1u64 << v));
            self.order.pop();
        }
    }
}

/// Returns the permutation `perm` (old label -> new label) realising the
/// canonical form.
fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANON_MAX_N {
        return Err(Error::Unsupported {
            what: "canonical form vertex count",
            actual: g.n(),
            limit: CANON_MAX_N,
        });
    }
    let mut s = Search {
        adj: g.adjacency(),
        order: Vec::with_capacity(g.n()),
        best: vec![u64::MAX; g.n() + 1],
        best_order: Vec::new(),
    };
    s.descend(g.vertex_mask());
    let mut perm = vec![0; g.n()];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    g.relabel(&canonical_labeling(g)?)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(emit_graph6(&canonical_graph(g)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, GraphFamily, build_family};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Minimum over all n! relabelings, no pruning.
    fn brute_min(g: &Graph) -> String {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = emit_graph6(&g.relabel(&perm).unwrap()).unwrap();
        // Heap's algorithm
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let s = emit_graph6(&g.relabel(&perm).unwrap()).unwrap();
                if s < best {
                    best = s;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = path(3).unwrap();
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn matches_brute_force_minimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            assert_eq!(canonical_form(&g).unwrap().as_str(), brute_min(&g), "{g:?}");
        }
        for fam in [GraphFamily::G1, GraphFamily::GStar2, GraphFamily::Cycle { n: 7 }] {
            let g = build_family(&fam).unwrap();
            assert_eq!(canonical_form(&g).unwrap().as_str(), brute_min(&g));
        }
    }

    #[test]
    fn invariant_under_many_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = random_graph(&mut rng, 7, 0.5);
        let form = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..7).collect();
        for _ in 0..1000 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), form);
        }
    }

    #[test]
    fn size_cap() {
        assert!(canonical_form(&path(10).unwrap()).is_ok());
        assert!(matches!(canonical_form(&path(11).unwrap()), Err(Error::Unsupported { .. })));
    }
}
