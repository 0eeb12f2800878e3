use crate::graph::Graph;
use crate::Result;

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for v in self.g.neighbors(u) {
            let e = self.g.edge_id(u, v).unwrap();
            if Some(e) == parent_edge {
                continue;
            }
            if self.disc[v] == 0 {
                self.stack.push(e);
                self.visit(v, Some(e));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let at = self.stack.iter().rposition(|&f| f == e).unwrap();
                    let mut block = self.stack.split_off(at);
                    block.sort_unstable();
                    self.blocks.push(block);
                }
            } else if self.disc[v] < self.disc[u] {
                self.stack.push(e);
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Edge sets of the blocks (maximal 2-connected subgraphs and bridges),
/// each sorted, ordered by smallest edge id.
pub fn biconnected_blocks(g: &Graph) -> Result<Vec<Vec<usize>>> {
    g.require_connected()?;
    let mut t = Tarjan {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    t.visit(0, None);
    t.blocks.sort_unstable();
    Ok(t.blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cycle, path, GraphFamily};
    use crate::harness::enumerate_connected;

    // Edges sharing a simple cycle, closed under union; bridges stay alone.
    fn blocks_by_cycles(g: &Graph) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..g.m()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        fn cycles(g: &Graph, start: usize, v: usize, used: u64, trail: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            for w in g.neighbors(v) {
                let e = g.edge_id(v, w).unwrap();
                if w == start && trail.len() >= 2 {
                    let mut c = trail.clone();
                    c.push(e);
                    out.push(c);
                } else if w > start && used >> w & 1 == 0 {
                    trail.push(e);
                    cycles(g, start, w, used | 1 << w, trail, out);
                    trail.pop();
                }
            }
        }
        let mut all = Vec::new();
        for s in 0..g.n() {
            cycles(g, s, s, 1 << s, &mut Vec::new(), &mut all);
        }
        for c in all {
            for w in c.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for e in 0..g.m() {
            let r = find(&mut parent, e);
            match groups.iter_mut().find(|grp| find(&mut parent, grp[0]) == r) {
                Some(grp) => grp.push(e),
                None => groups.push(vec![e]),
            }
        }
        groups.sort_unstable();
        groups
    }

    #[test]
    fn examples() {
        assert_eq!(biconnected_blocks(&path(4).unwrap()).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(biconnected_blocks(&cycle(5).unwrap()).unwrap().len(), 1);
        assert_eq!(biconnected_blocks(&build_family(&GraphFamily::G1).unwrap()).unwrap().len(), 3);
        let g8 = build_family(&GraphFamily::GN { n: 8 }).unwrap();
        let sizes: Vec<usize> = biconnected_blocks(&g8).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 10);
        assert_eq!(sizes.len(), 4);
        assert!(biconnected_blocks(&Graph::empty(1).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn matches_cycle_oracle() {
        for n in 2..=6 {
            for g in enumerate_connected(n).unwrap() {
                assert_eq!(biconnected_blocks(g).unwrap(), blocks_by_cycles(g), "{g:?}");
            }
        }
    }
}
