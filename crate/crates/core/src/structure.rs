//! Connectivity, blocks, cactus recognition and pendant-tree pruning.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, SignedGraph};

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
pub fn connected_components(g: &SignedGraph) -> Vec<Vec<usize>> {
    let adj = g.adjacency_lists();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Exactly one component; the empty graph is not connected.
pub fn is_connected(g: &SignedGraph) -> bool {
    g.n() > 0 && connected_components(g).len() == 1
}

/// Induced subgraphs on the components, with their label maps.
pub fn component_graphs(g: &SignedGraph) -> Vec<(SignedGraph, Vec<usize>)> {
    connected_components(g)
        .iter()
        .map(|c| g.induced_subgraph(c).expect("component vertices are in range"))
        .collect()
}

fn require_connected(g: &SignedGraph, what: &str) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::Input(format!("{what} needs a connected graph, got {g}")));
    }
    Ok(())
}

/// A maximal 2-connected subgraph or a bridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeRef>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block is a cycle iff it has as many edges as vertices.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Ordered by least edge index.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Block-cut tree edges as `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, usize)>,
}

struct Lowpoint {
    blocks: Vec<Vec<usize>>,
    cut_vertex: Vec<bool>,
    bridges: Vec<usize>,
}

/// One iterative lowpoint DFS per component.
fn lowpoint_dfs(g: &SignedGraph) -> Lowpoint {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out = Lowpoint { blocks: Vec::new(), cut_vertex: vec![false; n], bridges: Vec::new() };

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, edge to parent, next adjacency position)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, pos) = *top;
            if pos < adj[v].len() {
                top.2 += 1;
                let (w, ei) = adj[v][pos];
                if Some(ei) == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(ei);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(ei), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(ei);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else {
                continue;
            };
            let tree_edge = parent_edge.expect("non-root vertices have a parent edge");
            low[u] = low[u].min(low[v]);
            if u == root {
                root_children += 1;
            }
            if low[v] >= disc[u] {
                if u != root {
                    out.cut_vertex[u] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == tree_edge {
                        break;
                    }
                }
                block.sort_unstable();
                out.blocks.push(block);
            }
            if low[v] > disc[u] {
                out.bridges.push(tree_edge);
            }
        }
        if root_children >= 2 {
            out.cut_vertex[root] = true;
        }
    }
    out.blocks.sort_unstable();
    out.bridges.sort_unstable();
    out
}

/// Edges whose removal increases the number of components.
pub fn cut_edges(g: &SignedGraph) -> Vec<EdgeRef> {
    lowpoint_dfs(g).bridges.into_iter().map(EdgeRef).collect()
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &SignedGraph) -> Vec<usize> {
    let lp = lowpoint_dfs(g);
    (0..g.n()).filter(|&v| lp.cut_vertex[v]).collect()
}

pub fn block_decomposition(g: &SignedGraph) -> Result<BlockDecomposition> {
    require_connected(g, "block_decomposition")?;
    let lp = lowpoint_dfs(g);
    let blocks: Vec<Block> = lp
        .blocks
        .iter()
        .map(|edges| {
            let mut vertices: Vec<usize> = edges
                .iter()
                .flat_map(|&i| {
                    let e = g.edges()[i];
                    [e.u, e.v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { vertices, edges: edges.iter().map(|&i| EdgeRef(i)).collect() }
        })
        .collect();
    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| lp.cut_vertex[v]).collect();
    let mut tree_edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if lp.cut_vertex[v] {
                tree_edges.push((bi, v));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices, tree_edges })
}

/// `β = |E| − |V| + 1` for a connected graph.
pub fn cyclomatic_number(g: &SignedGraph) -> Result<usize> {
    require_connected(g, "cyclomatic_number")?;
    Ok(g.edge_count() + 1 - g.n())
}

/// `|E| − |V| + c`, the cycle-space dimension of any graph.
pub fn cycle_space_dimension(g: &SignedGraph) -> usize {
    g.edge_count() + connected_components(g).len() - g.n()
}

/// First block that is neither a bridge nor a cycle, if any.
pub fn non_cactus_block(g: &SignedGraph) -> Result<Option<Block>> {
    let d = block_decomposition(g)?;
    Ok(d.blocks.into_iter().find(|b| !b.is_bridge() && !b.is_cycle()))
}

/// Connected, and every block is an edge or a cycle.
pub fn is_cactus(g: &SignedGraph) -> Result<bool> {
    Ok(non_cactus_block(g)?.is_none())
}

/// A cycle of a cactus with its sign counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    /// Starts at the least vertex and proceeds toward its smaller neighbour.
    pub vertices: Vec<usize>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
    pub edges: Vec<EdgeRef>,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `m⁺(C) = m⁻(C)`.
    pub fn is_balanced_count(&self) -> bool {
        self.m_plus == self.m_minus
    }
}

/// Traces a cycle given as an edge set into canonical vertex order.
pub fn trace_cycle(g: &SignedGraph, edges: &[EdgeRef]) -> Result<CycleInfo> {
    let mut incident: std::collections::BTreeMap<usize, Vec<(usize, EdgeRef)>> = Default::default();
    for &r in edges {
        let e = g.edge(r)?;
        incident.entry(e.u).or_default().push((e.v, r));
        incident.entry(e.v).or_default().push((e.u, r));
    }
    if edges.len() < 3 || incident.len() != edges.len() || incident.values().any(|l| l.len() != 2) {
        return Err(Error::Input(format!("edge set {edges:?} is not a cycle")));
    }
    for list in incident.values_mut() {
        list.sort_unstable();
    }
    let start = *incident.keys().next().expect("nonempty cycle");
    let mut vertices = vec![start];
    let mut order = Vec::with_capacity(edges.len());
    let (mut prev, mut cur, first_edge) = (start, incident[&start][0].0, incident[&start][0].1);
    order.push(first_edge);
    while cur != start {
        vertices.push(cur);
        let &(next, via) = incident[&cur].iter().find(|&&(w, _)| w != prev).expect("degree two");
        order.push(via);
        prev = cur;
        cur = next;
    }
    if order.len() != edges.len() {
        return Err(Error::Input(format!("edge set {edges:?} is not a single cycle")));
    }
    let m_plus = order.iter().filter(|&&r| g.edges()[r.0].sign.is_positive()).count();
    Ok(CycleInfo { vertices, m_minus: order.len() - m_plus, edges: order, m_plus })
}

/// One [`CycleInfo`] per cycle block of a cactus, in block order.
pub fn cactus_cycles(g: &SignedGraph) -> Result<Vec<CycleInfo>> {
    let d = block_decomposition(g)?;
    if let Some(b) = d.blocks.iter().find(|b| !b.is_bridge() && !b.is_cycle()) {
        return Err(Error::Inapplicable(format!(
            "not a cactus: block on vertices {:?} has {} edges, so cycles share edges",
            b.vertices,
            b.edges.len()
        )));
    }
    d.blocks.iter().filter(|b| b.is_cycle()).map(|b| trace_cycle(g, &b.edges)).collect()
}

/// Strips pendant trees by repeatedly deleting degree-1 vertices.
///
/// A tree reduces to its least vertex. Returns the pruned graph and the map
/// from its labels to the original ones.
pub fn prune_pendant_trees(g: &SignedGraph) -> Result<(SignedGraph, Vec<usize>)> {
    require_connected(g, "prune_pendant_trees")?;
    if cyclomatic_number(g)? == 0 {
        return g.induced_subgraph(&[0]);
    }
    let adj = g.adjacency_lists();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n()];
    let mut queue: Vec<usize> = (0..g.n()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if removed[v] || degree[v] != 1 {
            continue;
        }
        removed[v] = true;
        for &(w, _) in &adj[v] {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    g.induced_subgraph(&keep)
}
