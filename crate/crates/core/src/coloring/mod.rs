//! Edge colorings, proper-path connectivity and the exact proper connection
//! number.

mod check;
mod colorers;
mod search;

pub use check::{is_properly_connected, proper_path_witness, unreachable_pair};
pub use colorers::{color_traceable, color_tree};
pub use search::{
    decide_pc_le_k, pc_exact, vertex_deletion_certifies_pc2, Method, PcResult, SEARCH_MAX_EDGES,
};

pub(crate) use check::ColoredView;

use crate::graph::Graph;
use crate::{Error, Result};
use serde::Serialize;

/// Colors `1..=k` indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeColoring {
    k: u8,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(k: u8, colors: Vec<u8>) -> Result<EdgeColoring> {
        if let Some((e, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::Contract(format!("edge {e} has color {c} outside 1..={k}")));
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Every edge gets color 1.
    pub fn uniform(g: &Graph, k: u8) -> EdgeColoring {
        EdgeColoring {
            k: k.max(1),
            colors: vec![1; g.m()],
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u8 {
        self.colors[edge]
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = 0u64;
        for &c in &self.colors {
            seen |= 1 << c;
        }
        seen.count_ones() as usize
    }

    /// Checks that this coloring is total on `g`.
    pub fn require_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::Contract(format!(
                "coloring covers {} edges, graph has {}",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

/// Parses `k <K>` followed by one `u v c` line per edge of `g`.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring> {
    let err = |line: usize, reason: String| Error::ColoringFormat { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header `k <K>`".into()))?;
    let k = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["k", v] => v
            .parse::<u8>()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| err(hline, format!("bad color count `{v}`")))?,
        _ => return Err(err(hline, "expected header `k <K>`".into())),
    };
    let mut colors = vec![0u8; g.m()];
    for (lineno, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(lineno, "expected `u v c`".into()))?;
        let [u, v, c] = nums.as_slice() else {
            return Err(err(lineno, "expected `u v c`".into()));
        };
        let e = g
            .edge_id(*u, *v)
            .ok_or_else(|| err(lineno, format!("{u} {v} is not an edge")))?;
        if *c == 0 || *c > k as usize {
            return Err(err(lineno, format!("color {c} outside 1..={k}")));
        }
        if colors[e] != 0 {
            return Err(err(lineno, format!("edge {u} {v} colored twice")));
        }
        colors[e] = *c as u8;
    }
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        let (u, v) = g.edge(e);
        return Err(err(0, format!("edge {u} {v} has no color")));
    }
    EdgeColoring::new(k, colors)
}

pub fn emit_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("k {}\n", c.k);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!("{u} {v} {}\n", c.colors[e]));
    }
    out
}
