use super::EdgeColoring;
use crate::graph::Graph;
use crate::structure::is_hamiltonian_path;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Proper edge coloring of a tree with exactly `Δ` colors.
///
/// Rooted at vertex 0; each vertex hands its child edges the colors of
/// `1..=Δ` in turn, skipping the color of its parent edge.
pub fn color_tree(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_tree() {
        return Err(Error::Contract("color_tree needs a tree".into()));
    }
    let delta = g.max_degree().max(1) as u8;
    let mut colors = vec![0u8; g.m()];
    let mut parent_color = vec![0u8; g.n()];
    let mut seen = 1u64;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let mut next = 1u8;
        for w in g.neighbors(v) {
            if seen >> w & 1 == 1 {
                continue;
            }
            if next == parent_color[v] {
                next += 1;
            }
            let e = g.edge_id(v, w).unwrap();
            colors[e] = next;
            parent_color[w] = next;
            next += 1;
            seen |= 1 << w;
            queue.push_back(w);
        }
    }
    EdgeColoring::new(delta, colors)
}

/// Alternates colors 1 and 2 along a Hamiltonian path; every other edge
/// gets color 1. Sub-paths of the Hamiltonian path join every pair.
pub fn color_traceable(g: &Graph, hp: &[usize]) -> Result<EdgeColoring> {
    if !is_hamiltonian_path(g, hp) {
        return Err(Error::Contract("not a Hamiltonian path of the graph".into()));
    }
    let mut colors = vec![1u8; g.m()];
    for (i, w) in hp.windows(2).enumerate() {
        colors[g.edge_id(w[0], w[1]).unwrap()] = if i % 2 == 0 { 1 } else { 2 };
    }
    let k = if g.n() <= 2 { 1 } else { 2 };
    EdgeColoring::new(k, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_properly_connected;
    use crate::graph::{cycle, path, star};
    use crate::structure::hamiltonian_path;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn adjacent_edges_differ(g: &Graph, c: &EdgeColoring) -> bool {
        (0..g.n()).all(|v| {
            let cols: Vec<u8> = g.neighbors(v).map(|w| c.color(g.edge_id(v, w).unwrap())).collect();
            let mut dedup = cols.clone();
            dedup.sort();
            dedup.dedup();
            dedup.len() == cols.len()
        })
    }

    #[test]
    fn star_gets_distinct_colors() {
        let s = star(3).unwrap();
        let c = color_tree(&s).unwrap();
        assert_eq!(c.distinct_colors(), 3);
        assert!(is_properly_connected(&s, &c).unwrap());
    }

    #[test]
    fn path_alternates() {
        let p = path(4).unwrap();
        let c = color_tree(&p).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1]);
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn random_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut hit_four = false;
        for _ in 0..300 {
            let n = 9;
            let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let t = Graph::from_edges(n, edges).unwrap();
            let c = color_tree(&t).unwrap();
            assert_eq!(c.distinct_colors(), t.max_degree());
            assert!(adjacent_edges_differ(&t, &c));
            assert!(is_properly_connected(&t, &c).unwrap());
            hit_four |= t.max_degree() == 4;
        }
        assert!(hit_four);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(color_tree(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn traceable_examples() {
        for g in [cycle(4).unwrap(), Graph::complete(4).unwrap()] {
            let hp = hamiltonian_path(&g).unwrap().unwrap();
            let c = color_traceable(&g, &hp).unwrap();
            assert_eq!(c.distinct_colors(), 2);
            assert!(is_properly_connected(&g, &c).unwrap());
        }
        let k2 = Graph::complete(2).unwrap();
        let c = color_traceable(&k2, &[0, 1]).unwrap();
        assert_eq!(c.colors(), &[1]);
        assert!(color_traceable(&cycle(4).unwrap(), &[0, 2, 1, 3]).is_err());
    }
}
