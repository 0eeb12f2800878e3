use crate::graph::{bits, Graph};
use crate::Result;
use serde::Serialize;

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    bridges: Vec<usize>,
}

impl LowLink<'_> {
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
                self.visit(v, Some(e));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] > self.disc[u] {
                    self.bridges.push(e);
                }
            } else {
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Edge ids of all cut-edges, ascending.
pub fn find_bridges(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    let mut ll = LowLink {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        bridges: Vec::new(),
    };
    ll.visit(0, None);
    ll.bridges.sort_unstable();
    Ok(ll.bridges)
}

/// Components of `g` with its bridges deleted, each sorted, ordered by
/// smallest vertex.
pub fn two_edge_connected_components(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let bridges = find_bridges(g)?;
    Ok(components_without(g, &bridges))
}

fn components_without(g: &Graph, bridges: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = g.adjacency().to_vec();
    for &e in bridges {
        let (u, v) = g.edge(e);
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
    }
    let stripped = Graph::from_adjacency(g.n(), adj).expect("subgraph of a valid graph");
    let mut left = g.vertex_mask();
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = stripped.reach_within(start, left);
        out.push(bits(comp).collect());
        left &= !comp;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Singleton,
    BridgelessBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeNode {
    pub kind: NodeKind,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    /// Edge id of the bridge in the original graph.
    pub bridge: usize,
    pub a: usize,
    pub b: usize,
}

/// The tree obtained by contracting every bridgeless component to a node;
/// its edges are exactly the bridges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeTree {
    pub nodes: Vec<BridgeNode>,
    pub edges: Vec<TreeEdge>,
    pub node_of: Vec<usize>,
    pub max_degree: usize,
}

impl BridgeTree {
    pub fn bridge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.a == node || e.b == node).count()
    }
}

pub fn build_bridge_tree(g: &Graph) -> Result<BridgeTree> {
    let bridges = find_bridges(g)?;
    let comps = components_without(g, &bridges);
    let mut node_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            node_of[v] = i;
        }
    }
    let nodes: Vec<BridgeNode> = comps
        .into_iter()
        .map(|vertices| BridgeNode {
            kind: if vertices.len() == 1 {
                NodeKind::Singleton
            } else {
                NodeKind::BridgelessBlock
            },
            vertices,
        })
        .collect();
    let edges: Vec<TreeEdge> = bridges
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            TreeEdge {
                bridge: e,
                a: node_of[u],
                b: node_of[v],
            }
        })
        .collect();
    let mut deg = vec![0; nodes.len()];
    for e in &edges {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    Ok(BridgeTree {
        max_degree: deg.into_iter().max().unwrap_or(0),
        nodes,
        edges,
        node_of,
    })
}

/// Largest number of bridges sharing one endpoint.
pub fn max_bridges_at_vertex(g: &Graph, bridges: &[usize]) -> usize {
    let mut count = vec![0; g.n()];
    for &e in bridges {
        let (u, v) = g.edge(e);
        count[u] += 1;
        count[v] += 1;
    }
    count.into_iter().max().unwrap_or(0)
}
