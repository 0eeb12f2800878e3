//! Plain edge-list text: a header line `n <count>` followed by one `u v`
//! pair per line, 0-indexed. Blank lines are ignored.

use super::{Graph, MAX_N};
use crate::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n <count>`"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(hline, format!("bad vertex count `{count}`")))?,
        _ => return Err(err(hline, "expected header `n <count>`")),
    };
    if n > MAX_N {
        return Err(err(hline, format!("vertex count {n} exceeds {MAX_N}")));
    }
    let mut adj = vec![0u64; n];
    for (lineno, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts.as_slice() else {
            return Err(err(lineno, "expected `u v`"));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(lineno, format!("bad vertex `{s}`")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex out of range (n = {n})")));
        }
        if u == v {
            return Err(err(lineno, format!("self-loop at {u}")));
        }
        if adj[u] >> v & 1 == 1 {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Graph::from_adjacency(n, adj)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
