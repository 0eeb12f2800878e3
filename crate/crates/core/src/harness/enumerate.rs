use crate::graph::{bits, canonical_graph, emit_graph6, parse_graph6, Graph};
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;
use std::sync::OnceLock;

/// Largest order the built-in enumerator accepts.
pub const ENUMERATE_MAX_N: usize = 8;

static CLASSES: [OnceLock<Vec<Graph>>; ENUMERATE_MAX_N + 1] = [const { OnceLock::new() }; ENUMERATE_MAX_N + 1];

/// One representative per isomorphism class of connected graphs of order
/// `n`, each in canonical labeling, sorted by canonical graph6.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class of order `n - 1` by a new vertex with every nonempty
/// neighborhood reaches all classes of order `n`.
pub fn enumerate_connected(n: usize) -> Result<&'static [Graph]> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(Error::Unsupported {
            what: "order for built-in enumeration (use a graph6 stream)",
            actual: n,
            limit: ENUMERATE_MAX_N,
        });
    }
    if let Some(done) = CLASSES[n].get() {
        return Ok(done);
    }
    let built = if n == 1 {
        vec![Graph::empty(1)?]
    } else {
        extend(enumerate_connected(n - 1)?)?
    };
    Ok(CLASSES[n].get_or_init(|| built))
}

fn extend(smaller: &[Graph]) -> Result<Vec<Graph>> {
    let n = smaller[0].n() + 1;
    let found: Vec<(String, Graph)> = smaller
        .par_iter()
        .flat_map_iter(|g| {
            (1u64..1 << (n - 1)).map(move |nbrs| {
                let mut adj = g.adjacency().to_vec();
                adj.push(nbrs);
                for v in bits(nbrs) {
                    adj[v] |= 1 << (n - 1);
                }
                let h = canonical_graph(&Graph::from_adjacency(n, adj)?)?;
                Ok((emit_graph6(&h)?, h))
            })
        })
        .collect::<Result<_>>()?;
    let classes: BTreeMap<String, Graph> = found.into_iter().collect();
    Ok(classes.into_values().collect())
}

/// Lazily parsed graph6 lines. Blank lines are skipped; a malformed line
/// yields an error carrying its 1-based line number.
pub struct Graph6Stream<R> {
    lines: Lines<R>,
    line: usize,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            lines: reader.lines(),
            line: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<(usize, Graph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = self.lines.next()?;
            self.line += 1;
            let line = self.line;
            let wrap = |e: Error| Error::Stream {
                line,
                source: Box::new(e),
            };
            let text = match text {
                Ok(t) => t,
                Err(e) => return Some(Err(wrap(e.into()))),
            };
            if text.trim().is_empty() {
                continue;
            }
            return Some(parse_graph6(text.trim()).map(|g| (line, g)).map_err(wrap));
        }
    }
}

pub fn stream_graph6(path: &Path) -> Result<Graph6Stream<BufReader<File>>> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(Graph6Stream::new(BufReader::new(file)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::io::Cursor;

    fn connected_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let edges = bits(mask).map(|i| pairs[i]);
                Graph::from_edges(n, edges).unwrap()
            })
            .filter(Graph::is_connected)
            .collect()
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn perms(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if k == p.len() {
                return f(p);
            }
            for i in k..p.len() {
                p.swap(k, i);
                if perms(k + 1, p, f) {
                    return true;
                }
                p.swap(k, i);
            }
            false
        }
        if a.n() != b.n() || a.m() != b.m() {
            return false;
        }
        let mut p: Vec<usize> = (0..a.n()).collect();
        perms(0, &mut p, &mut |p| &a.relabel(p).unwrap() == b)
    }

    #[test]
    fn class_counts_match_brute_force() {
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            let mut reps: Vec<Graph> = Vec::new();
            for g in connected_labeled(n) {
                if !reps.iter().any(|r| isomorphic(r, &g)) {
                    reps.push(g);
                }
            }
            assert_eq!(reps.len(), want);
            assert_eq!(enumerate_connected(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn larger_counts_and_order() {
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
        assert_eq!(enumerate_connected(8).unwrap().len(), 11117);
        let forms: Vec<String> = enumerate_connected(6)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap().to_string())
            .collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        assert!(enumerate_connected(9).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn streams() {
        let got: Vec<_> = Graph6Stream::new(Cursor::new("Bw\n")).collect::<Result<_>>().unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].1, Graph::complete(3).unwrap());
        assert_eq!(Graph6Stream::new(Cursor::new("")).count(), 0);
        let mut bad = Graph6Stream::new(Cursor::new("Bw\nB!\nBw\n"));
        assert!(bad.next().unwrap().is_ok());
        assert!(matches!(bad.next(), Some(Err(Error::Stream { line: 2, .. }))));
    }
}
