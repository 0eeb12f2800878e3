//! Exact decision of `pc(G) <= k` and the proper connection number.
//!
//! Fast paths settle complete graphs, trees and traceable graphs. Otherwise
//! colorings are searched edge by edge, block by block from the smallest,
//! each block's BFS tree before its chords. Colors are introduced in
//! order (edge `i` may use at most one color above the largest used so far),
//! which removes color permutations. A branch is cut when even treating every
//! uncolored edge as compatible with everything leaves some pair without a
//! candidate route. A branch is accepted as soon as the colored edges alone
//! properly connect the graph; the remaining edges then take any color, since
//! adding edges never removes a proper path.

use super::{color_traceable, color_tree, ColoredView, EdgeColoring};
use crate::graph::Graph;
use crate::structure::{
    biconnected_blocks, build_bridge_tree, find_bridges, hamiltonian_path, max_bridges_at_vertex, HAMILTONIAN_MAX_N,
};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

/// Largest edge count the exhaustive tier accepts.
pub const SEARCH_MAX_EDGES: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Complete,
    Tree,
    Traceable,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PcResult {
    pub pc: usize,
    pub witness: EdgeColoring,
    pub method: Method,
    /// Bound the search started from.
    pub lower_bound: usize,
    /// `min(max(3, Δ(G*)), Δ(T))` for a BFS spanning tree `T`, or 2 when
    /// traceable.
    pub upper_bound: usize,
}

/// BFS tree edges in discovery order followed by the chords by index.
fn search_order(g: &Graph) -> (Vec<usize>, usize) {
    let mut in_tree = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut seen = 1u64;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                let e = g.edge_id(v, w).unwrap();
                in_tree[e] = true;
                order.push(e);
                queue.push_back(w);
            }
        }
    }
    let tree_len = order.len();
    order.extend((0..g.m()).filter(|&e| !in_tree[e]));
    (order, tree_len)
}

fn bfs_tree_max_degree(g: &Graph) -> usize {
    let (order, tree_len) = search_order(g);
    let mut deg = vec![0; g.n()];
    for &e in &order[..tree_len] {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Block structure used for pruning. A simple path crosses the blocks on
/// the unique block-cut tree route between its ends, one contiguous segment
/// per block, so per-block walk tables chained along that route relax
/// proper connectivity without letting walks double back through a cut
/// vertex.
struct Blocks {
    block_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    /// `(local neighbor, edge)` lists per block and local vertex.
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    /// Route for each pair `u < v`: `(block, local from, local to)` segments.
    routes: Vec<Vec<(usize, usize, usize)>>,
}

impl Blocks {
    fn new(g: &Graph, blocks: &[Vec<usize>]) -> Blocks {
        let n = g.n();
        let mut block_of = vec![0; g.m()];
        let mut members = Vec::new();
        let mut local = Vec::new();
        let mut adj = Vec::new();
        let mut vertex_blocks = vec![Vec::new(); n];
        for (b, edges) in blocks.iter().enumerate() {
            let mut mask = 0u64;
            for &e in edges {
                block_of[e] = b;
                let (u, v) = g.edge(e);
                mask |= 1 << u | 1 << v;
            }
            let verts: Vec<usize> = crate::graph::bits(mask).collect();
            let mut idx = vec![usize::MAX; n];
            for (i, &v) in verts.iter().enumerate() {
                idx[v] = i;
                vertex_blocks[v].push(b);
            }
            let mut a = vec![Vec::new(); verts.len()];
            for &e in edges {
                let (u, v) = g.edge(e);
                a[idx[u]].push((idx[v], e));
                a[idx[v]].push((idx[u], e));
            }
            members.push(verts);
            local.push(idx);
            adj.push(a);
        }
        let mut routes = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            // BFS over the vertex-block incidence graph from u
            let mut via_block = vec![usize::MAX; n];
            let mut prev = vec![usize::MAX; n];
            let mut block_seen = vec![false; blocks.len()];
            let mut queue = VecDeque::from([u]);
            let mut reached = 1u64 << u;
            while let Some(x) = queue.pop_front() {
                for &b in &vertex_blocks[x] {
                    if block_seen[b] {
                        continue;
                    }
                    block_seen[b] = true;
                    for &y in &members[b] {
                        if reached >> y & 1 == 0 {
                            reached |= 1 << y;
                            via_block[y] = b;
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
            }
            for v in u + 1..n {
                let mut segs = Vec::new();
                let mut y = v;
                while y != u {
                    let (b, x) = (via_block[y], prev[y]);
                    segs.push((b, local[b][x], local[b][y]));
                    y = x;
                }
                segs.reverse();
                routes.push(segs);
            }
        }
        Blocks {
            block_of,
            members,
            adj,
            routes,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: u8,
    order: Vec<usize>,
    /// Shortest prefix of `order` spanning a connected subgraph.
    spanning: usize,
    colors: Vec<u8>,
    view: ColoredView,
    blocks: Blocks,
    /// Per block: `[from][to][first]` mask of last colors of proper walks,
    /// color 0 standing for an uncolored edge.
    tables: Vec<Vec<u64>>,
    dirty: Vec<bool>,
}

/// Blocks from smallest to largest; inside each, a BFS tree then chords.
fn block_order(g: &Graph, blocks: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let mut ids: Vec<usize> = (0..blocks.len()).collect();
    ids.sort_by_key(|&b| (blocks[b].len(), b));
    let mut order = Vec::with_capacity(g.m());
    for b in ids {
        let in_block = |e: usize| blocks[b].binary_search(&e).is_ok();
        let (u0, _) = g.edge(blocks[b][0]);
        let mut seen = 1u64 << u0;
        let mut queue = VecDeque::from([u0]);
        let mut tree = Vec::new();
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                let e = g.edge_id(v, w).unwrap();
                if seen >> w & 1 == 0 && in_block(e) {
                    seen |= 1 << w;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
        let chords: Vec<usize> = blocks[b].iter().copied().filter(|e| !tree.contains(e)).collect();
        order.extend(tree);
        order.extend(chords);
    }
    let mut comp: Vec<usize> = (0..g.n()).collect();
    fn root(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    let mut parts = g.n();
    let mut spanning = order.len();
    for (i, &e) in order.iter().enumerate() {
        let (u, v) = g.edge(e);
        let (a, b) = (root(&mut comp, u), root(&mut comp, v));
        if a != b {
            comp[a] = b;
            parts -= 1;
            if parts == 1 {
                spanning = i + 1;
                break;
            }
        }
    }
    (order, spanning)
}

impl Search<'_> {
    fn refresh(&mut self, b: usize) {
        let kk = self.k as usize + 1;
        let adj = &self.blocks.adj[b];
        let nb = adj.len();
        let table = &mut self.tables[b];
        table.clear();
        table.resize(nb * nb * kk, 0);
        let mut seen = vec![0u64; nb];
        let mut stack = Vec::new();
        for x in 0..nb {
            for f in 0..kk {
                seen.fill(0);
                for &(y, e) in &adj[x] {
                    if self.colors[e] as usize == f && seen[y] >> f & 1 == 0 {
                        seen[y] |= 1 << f;
                        stack.push((y, f));
                    }
                }
                while let Some((y, c)) = stack.pop() {
                    for &(z, e) in &adj[y] {
                        let d = self.colors[e] as usize;
                        if (c == 0 || d == 0 || c != d) && seen[z] >> d & 1 == 0 {
                            seen[z] |= 1 << d;
                            stack.push((z, d));
                        }
                    }
                }
                for y in 0..nb {
                    table[(x * nb + y) * kk + f] = seen[y];
                }
            }
        }
    }

    /// Every pair still has a candidate route once uncolored edges match
    /// any color.
    fn relaxed_ok(&mut self) -> bool {
        for b in 0..self.dirty.len() {
            if self.dirty[b] {
                self.refresh(b);
                self.dirty[b] = false;
            }
        }
        let kk = self.k as usize + 1;
        self.blocks.routes.iter().all(|route| {
            let mut last = u64::MAX;
            for &(b, x, y) in route {
                let nb = self.blocks.members[b].len();
                let base = (x * nb + y) * kk;
                let mut next = 0;
                for f in 0..kk {
                    if f == 0 || last & 1 == 1 || last & !(1 << f) != 0 {
                        next |= self.tables[b][base + f];
                    }
                }
                if next == 0 {
                    return false;
                }
                last = next;
            }
            true
        })
    }

    fn accepted(&mut self) -> bool {
        self.view.set_wildcard(false);
        let ok = self.view.properly_connected();
        self.view.set_wildcard(true);
        ok
    }

    fn set(&mut self, e: usize, c: u8) {
        let (u, v) = self.g.edge(e);
        self.view.recolor(u, v, self.colors[e], c);
        self.colors[e] = c;
        self.dirty[self.blocks.block_of[e]] = true;
    }

    fn descend(&mut self, i: usize, max_used: u8) -> bool {
        if i >= self.spanning && self.accepted() {
            return true;
        }
        if i == self.order.len() {
            return false;
        }
        let e = self.order[i];
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            self.set(e, c);
            if self.relaxed_ok() && self.descend(i + 1, max_used.max(c)) {
                return true;
            }
        }
        self.set(e, 0);
        false
    }
}

fn with_budget(c: EdgeColoring, k: usize) -> EdgeColoring {
    let k = k.clamp(c.k() as usize, u8::MAX as usize) as u8;
    EdgeColoring::new(k, c.colors().to_vec()).expect("budget covers the coloring")
}

/// A properly connecting coloring with at most `k` colors, if one exists.
pub fn decide_pc_le_k(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::Contract("color budget must be at least 1".into()));
    }
    if g.is_complete() {
        return Ok(Some(with_budget(EdgeColoring::uniform(g, 1), k)));
    }
    if k == 1 {
        return Ok(None);
    }
    let bridges = find_bridges(g)?;
    // bridges sharing an endpoint lie consecutively on every path crossing both
    if max_bridges_at_vertex(g, &bridges) > k {
        return Ok(None);
    }
    if g.is_tree() {
        return Ok(Some(with_budget(color_tree(g)?, k)));
    }
    if g.n() <= HAMILTONIAN_MAX_N {
        if let Some(hp) = hamiltonian_path(g)? {
            return Ok(Some(with_budget(color_traceable(g, &hp)?, k)));
        }
    }
    if g.m() > SEARCH_MAX_EDGES {
        return Err(Error::Unsupported {
            what: "edge count for exhaustive coloring search",
            actual: g.m(),
            limit: SEARCH_MAX_EDGES,
        });
    }
    let budget = k.min(g.m()) as u8;
    let blocks = biconnected_blocks(g)?;
    let (order, spanning) = block_order(g, &blocks);
    let colors = vec![0u8; g.m()];
    let mut s = Search {
        g,
        k: budget,
        view: ColoredView::new(g, budget, &colors, true),
        order,
        spanning,
        colors,
        tables: vec![Vec::new(); blocks.len()],
        dirty: vec![true; blocks.len()],
        blocks: Blocks::new(g, &blocks),
    };
    if !s.descend(0, 0) {
        return Ok(None);
    }
    let filled = s.colors.iter().map(|&c| c.max(1)).collect();
    Ok(Some(EdgeColoring::new(budget.max(k.min(255) as u8), filled)?))
}

/// The proper connection number with a witness coloring.
pub fn pc_exact(g: &Graph) -> Result<PcResult> {
    g.require_connected()?;
    if g.is_complete() {
        return Ok(PcResult {
            pc: 1,
            witness: EdgeColoring::uniform(g, 1),
            method: Method::Complete,
            lower_bound: 1,
            upper_bound: 1,
        });
    }
    let bridges = find_bridges(g)?;
    let lower = max_bridges_at_vertex(g, &bridges).max(2);
    if g.is_tree() {
        let witness = color_tree(g)?;
        return Ok(PcResult {
            pc: witness.k() as usize,
            witness,
            method: Method::Tree,
            lower_bound: lower,
            upper_bound: g.max_degree(),
        });
    }
    let star_bound = build_bridge_tree(g)?.max_degree.max(3);
    let upper = star_bound.min(bfs_tree_max_degree(g));
    if g.n() <= HAMILTONIAN_MAX_N {
        if let Some(hp) = hamiltonian_path(g)? {
            return Ok(PcResult {
                pc: 2,
                witness: color_traceable(g, &hp)?,
                method: Method::Traceable,
                lower_bound: lower,
                upper_bound: 2,
            });
        }
    }
    // pc <= m always holds, so the loop terminates
    for k in lower..=g.m() {
        if let Some(mut witness) = decide_pc_le_k(g, k)? {
            witness = EdgeColoring::new(k as u8, witness.colors().to_vec())?;
            return Ok(PcResult {
                pc: k,
                witness,
                method: Method::Search,
                lower_bound: lower,
                upper_bound: upper,
            });
        }
    }
    unreachable!("every connected graph is properly connected with m colors")
}

/// Some vertex `v` with `d(v) >= 2` whose deletion leaves a connected graph
/// with `pc <= 2`. Such a vertex certifies `pc(G) <= 2` without giving a
/// coloring, so this is only used as a cross-check.
pub fn vertex_deletion_certifies_pc2(g: &Graph) -> Result<Option<usize>> {
    g.require_connected()?;
    for v in 0..g.n() {
        if g.degree(v) < 2 {
            continue;
        }
        let h = g.remove_vertex(v);
        if h.is_connected() && decide_pc_le_k(&h, 2)?.is_some() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_properly_connected;
    use crate::graph::{build_family, star, GraphFamily};
    use crate::harness::enumerate_connected;

    fn family(f: GraphFamily) -> Graph {
        build_family(&f).unwrap()
    }

    #[test]
    fn decide_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(decide_pc_le_k(&k4, 1).unwrap().is_some());
        let g1 = family(GraphFamily::G1);
        assert!(decide_pc_le_k(&g1, 2).unwrap().is_none());
        let w = decide_pc_le_k(&g1, 3).unwrap().unwrap();
        assert!(is_properly_connected(&g1, &w).unwrap());
        assert!(decide_pc_le_k(&star(4).unwrap(), 3).unwrap().is_none());
        assert!(decide_pc_le_k(&k4, 0).is_err());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(pc_exact(&Graph::complete(7).unwrap()).unwrap().pc, 1);
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let r = pc_exact(&t).unwrap();
        assert_eq!((r.pc, r.method), (4, Method::Tree));
        let g8 = pc_exact(&family(GraphFamily::GN { n: 8 })).unwrap();
        assert_eq!(g8.pc, 3);
        assert_eq!(g8.method, Method::Search);
        assert_eq!(pc_exact(&family(GraphFamily::GStar1)).unwrap().pc, 3);
    }

    #[test]
    fn witnesses_are_valid_and_small() {
        for n in 2..=6 {
            for g in enumerate_connected(n).unwrap() {
                let r = pc_exact(g).unwrap();
                assert!(is_properly_connected(g, &r.witness).unwrap(), "{g:?}");
                assert!(r.witness.distinct_colors() <= r.pc);
                assert!(r.lower_bound <= r.pc);
                assert!(r.pc <= r.upper_bound, "{g:?} pc={} upper={}", r.pc, r.upper_bound);
            }
        }
    }

    #[test]
    fn pc_one_iff_complete() {
        for n in 1..=7 {
            for g in enumerate_connected(n).unwrap() {
                assert_eq!(pc_exact(g).unwrap().pc == 1, g.is_complete());
            }
        }
    }

    #[test]
    fn vertex_deletion_shortcut_is_sound() {
        for n in 3..=7 {
            for g in enumerate_connected(n).unwrap() {
                if vertex_deletion_certifies_pc2(g).unwrap().is_some() {
                    assert!(pc_exact(g).unwrap().pc <= 2, "{g:?}");
                }
            }
        }
        assert_eq!(vertex_deletion_certifies_pc2(&family(GraphFamily::G1)).unwrap(), None);
    }

    #[test]
    fn search_cap() {
        // K_{3,8} + hub chords is not traceable and has more than 28 edges
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..11 {
                edges.push((a, b));
            }
        }
        edges.extend([(0, 1), (1, 2), (0, 2)]);
        edges.extend([(3, 4), (5, 6)]);
        let g = Graph::from_edges(11, edges).unwrap();
        assert!(matches!(decide_pc_le_k(&g, 2), Err(Error::Unsupported { .. })));
    }
}
