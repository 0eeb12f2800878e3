//! Proper-path reachability.
//!
//! Reachability over `(vertex, last color)` states decides whether a proper
//! *walk* exists. Walks and paths differ: a walk may loop around an odd
//! structure to fix a color clash that no simple path can avoid. The walk
//! search is therefore only a necessary condition (and the relaxation used
//! to prune the coloring search); the verdict comes from a memoised search
//! over simple paths, keyed by `(visited set, vertex, last color)`.

use super::EdgeColoring;
use crate::graph::{bits, Graph};
use crate::{Error, Result};
use std::collections::HashSet;

/// Per-color adjacency. Slot 0 holds edges whose color is unknown and that
/// are compatible with every color, including each other.
pub(crate) struct ColoredView {
    n: usize,
    by_color: Vec<Vec<u64>>,
    // when false, slot 0 edges are treated as absent
    wild: bool,
}

#[inline]
fn compatible(a: usize, b: usize) -> bool {
    a == 0 || b == 0 || a != b
}

impl ColoredView {
    /// `colors[e] == 0` marks an uncolored edge: a wildcard if `wildcard`,
    /// otherwise the edge is left out.
    pub(crate) fn new(g: &Graph, k: u8, colors: &[u8], wildcard: bool) -> ColoredView {
        let mut by_color = vec![vec![0u64; g.n()]; k as usize + 1];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let c = colors[e] as usize;
            by_color[c][u] |= 1 << v;
            by_color[c][v] |= 1 << u;
        }
        ColoredView {
            n: g.n(),
            by_color,
            wild: wildcard,
        }
    }

    /// Moves edge `uv` from color slot `from` to `to` (0 = uncolored).
    pub(crate) fn recolor(&mut self, u: usize, v: usize, from: u8, to: u8) {
        let (f, t) = (from as usize, to as usize);
        self.by_color[f][u] &= !(1u64 << v);
        self.by_color[f][v] &= !(1u64 << u);
        self.by_color[t][u] |= 1 << v;
        self.by_color[t][v] |= 1 << u;
    }

    pub(crate) fn set_wildcard(&mut self, wild: bool) {
        self.wild = wild;
    }

    fn slot(&self, b: usize, v: usize) -> u64 {
        if b == 0 && !self.wild {
            0
        } else {
            self.by_color[b][v]
        }
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertices reachable from `src` by a proper walk; stops early once
    /// `target` is covered.
    fn walk_reach(&self, src: usize, target: u64) -> u64 {
        let colors = self.by_color.len();
        let mut reached = vec![0u64; colors];
        let mut frontier = vec![0u64; colors];
        reached[0] = 1 << src;
        frontier[0] = 1 << src;
        let mut seen = 1u64 << src;
        loop {
            let any: u64 = frontier.iter().fold(0, |a, &f| a | f);
            if any == 0 || seen & target == target {
                return seen;
            }
            let mut next = vec![0u64; colors];
            for b in 0..colors {
                let from = if b == 0 {
                    any
                } else {
                    frontier
                        .iter()
                        .enumerate()
                        .filter(|&(a, _)| a != b)
                        .fold(0, |acc, (_, &f)| acc | f)
                };
                let mut acc = 0u64;
                for v in bits(from) {
                    acc |= self.slot(b, v);
                }
                next[b] = acc & !reached[b];
                reached[b] |= next[b];
                seen |= acc;
            }
            frontier = next;
        }
    }

    /// Vertices reachable from `src` by a proper simple path.
    fn path_reach(&self, src: usize, target: u64) -> u64 {
        let mut memo = HashSet::new();
        let mut reached = 1u64 << src;
        self.path_dfs(src, 0, 1 << src, target, &mut reached, &mut memo);
        reached
    }

    fn path_dfs(
        &self,
        v: usize,
        last: usize,
        used: u64,
        target: u64,
        reached: &mut u64,
        memo: &mut HashSet<(u64, u16)>,
    ) -> bool {
        if !memo.insert((used, (v as u16) << 8 | last as u16)) {
            return false;
        }
        for b in 0..self.by_color.len() {
            if !compatible(last, b) {
                continue;
            }
            for w in bits(self.slot(b, v) & !used) {
                *reached |= 1 << w;
                if *reached & target == target {
                    return true;
                }
                if self.path_dfs(w, b, used | 1 << w, target, reached, memo) {
                    return true;
                }
            }
        }
        false
    }

    fn path_to(&self, src: usize, dst: usize) -> Option<Vec<usize>> {
        fn go(
            view: &ColoredView,
            v: usize,
            last: usize,
            used: u64,
            dst: usize,
            stack: &mut Vec<usize>,
            memo: &mut HashSet<(u64, u16)>,
        ) -> bool {
            if v == dst {
                return true;
            }
            if !memo.insert((used, (v as u16) << 8 | last as u16)) {
                return false;
            }
            for b in 0..view.by_color.len() {
                if !compatible(last, b) {
                    continue;
                }
                for w in bits(view.slot(b, v) & !used) {
                    stack.push(w);
                    if go(view, w, b, used | 1 << w, dst, stack, memo) {
                        return true;
                    }
                    stack.pop();
                }
            }
            false
        }
        let mut stack = vec![src];
        let mut memo = HashSet::new();
        go(self, src, 0, 1 << src, dst, &mut stack, &mut memo).then_some(stack)
    }

    /// First pair `(u, v)`, `u < v`, with no proper connection. Walk
    /// semantics when `walks`, path semantics otherwise.
    fn first_gap(&self, walks: bool) -> Option<(usize, usize)> {
        let all = self.all();
        for u in 0..self.n {
            let upto = if u >= 63 { u64::MAX } else { (2u64 << u) - 1 };
            let target = all & !upto;
            if target == 0 {
                continue;
            }
            let got = if walks {
                self.walk_reach(u, target)
            } else {
                self.path_reach(u, target)
            };
            let missing = target & !got;
            if missing != 0 {
                return Some((u, missing.trailing_zeros() as usize));
            }
        }
        None
    }

    pub(crate) fn walk_connected(&self) -> bool {
        self.first_gap(true).is_none()
    }

    pub(crate) fn properly_connected(&self) -> bool {
        self.walk_connected() && self.first_gap(false).is_none()
    }
}

#[cfg(test)]
fn walk_connected(g: &Graph, c: &EdgeColoring) -> bool {
    ColoredView::new(g, c.k(), c.colors(), false).walk_connected()
}

fn view(g: &Graph, c: &EdgeColoring) -> Result<ColoredView> {
    g.require_connected()?;
    c.require_total(g)?;
    Ok(ColoredView::new(g, c.k(), c.colors(), false))
}

/// Whether every pair of distinct vertices is joined by a proper path.
pub fn is_properly_connected(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Ok(view(g, c)?.properly_connected())
}

/// A pair of vertices with no proper path between them, if any.
pub fn unreachable_pair(g: &Graph, c: &EdgeColoring) -> Result<Option<(usize, usize)>> {
    Ok(view(g, c)?.first_gap(false))
}

/// A proper `u`–`v` path as a vertex sequence.
pub fn proper_path_witness(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    let view = view(g, c)?;
    if u == v || u >= g.n() || v >= g.n() {
        return Err(Error::Contract(format!("need distinct vertices, got {u} and {v}")));
    }
    let path = view.path_to(u, v);
    if let Some(p) = &path {
        debug_assert!(is_proper_path(g, c, p));
    }
    Ok(path)
}

/// Simple path along edges of `g` with no two consecutive edges sharing a
/// color.
pub fn is_proper_path(g: &Graph, c: &EdgeColoring, seq: &[usize]) -> bool {
    let mut used = 0u64;
    for &v in seq {
        if v >= g.n() || used >> v & 1 == 1 {
            return false;
        }
        used |= 1 << v;
    }
    let mut last = 0;
    for w in seq.windows(2) {
        let Some(e) = g.edge_id(w[0], w[1]) else {
            return false;
        };
        let col = c.color(e);
        if col == last {
            return false;
        }
        last = col;
    }
    true
}
