//! The comaximal subgroup graph: vertices are the non-trivial proper
//! subgroups, and `H ~ K` exactly when the set product `HK` is all of `G`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{product_size, Subgroup, SubgroupLattice};
use crate::par;

/// Undirected simple graph with one adjacency bit mask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    adj: Vec<FixedBitSet>,
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list; self-loops are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u != v {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub(crate) fn from_rows(adj: Vec<FixedBitSet>) -> Self {
        Self { adj }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn isolated(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_clear())
            .collect()
    }

    /// Edges `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_symmetric_irreflexive(&self) -> bool {
        (0..self.vertex_count()).all(|u| {
            !self.adj[u].contains(u) && self.adj[u].ones().all(|v| self.adj[v].contains(u))
        })
    }

    /// Subgraph induced on `keep`, re-indexed `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> BitGraph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let m = keep.len();
        let adj = keep
            .iter()
            .map(|&v| {
                let mut row = FixedBitSet::with_capacity(m);
                for w in self.adj[v].ones() {
                    if pos[w] != usize::MAX {
                        row.insert(pos[w]);
                    }
                }
                row
            })
            .collect();
        BitGraph { adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.put(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].ones() {
                    if !seen.put(v) {
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-colouring by BFS; `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("coloured on push");
                for v in self.adj[u].ones() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_dominating(&self, set: &[usize]) -> bool {
        let mut covered = FixedBitSet::with_capacity(self.vertex_count());
        for &v in set {
            covered.insert(v);
            covered.union_with(&self.adj[v]);
        }
        covered.is_full()
    }
}

/// Summary of a graph's shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSignature {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub isolated_count: usize,
    /// Component sizes, largest first (isolated vertices count as size 1).
    pub component_sizes: Vec<usize>,
    pub bipartite: bool,
    /// `(a, b)` with `a ≤ b` when the non-isolated part is a single `K_{a,b}`.
    pub complete_bipartite_parts: Option<(usize, usize)>,
}

pub fn signature(graph: &BitGraph) -> GraphSignature {
    let comps = graph.components();
    let mut component_sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let coloring = graph.two_coloring();
    let edge_count = graph.edge_count();
    let isolated_count = graph.isolated().len();

    let big: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() > 1).collect();
    let complete_bipartite_parts = match (&coloring, big.as_slice()) {
        (Some(color), [only]) => {
            let a = only.iter().filter(|&&v| color[v]).count();
            let b = only.len() - a;
            (a * b == edge_count).then_some((a.min(b), a.max(b)))
        }
        _ => None,
    };
    GraphSignature {
        vertex_count: graph.vertex_count(),
        edge_count,
        isolated_count,
        component_sizes,
        bipartite: coloring.is_some(),
        complete_bipartite_parts,
    }
}

/// `Γ(G)` with its vertices' subgroups and lattice positions.
#[derive(Debug, Clone)]
pub struct ComaximalGraph {
    group_order: usize,
    /// Lattice index of each vertex.
    lattice_indices: Vec<usize>,
    subgroups: Vec<Subgroup>,
    graph: BitGraph,
}

impl ComaximalGraph {
    /// Builds `Γ(G)`. A group of prime or unit order yields the empty graph.
    pub fn build(group: &Group, lattice: &SubgroupLattice) -> Self {
        let n = group.order();
        let lattice_indices: Vec<usize> = (0..lattice.count())
            .filter(|&i| {
                let s = lattice.get(i);
                !s.is_trivial() && s.order() < n
            })
            .collect();
        let subgroups: Vec<Subgroup> = lattice_indices
            .iter()
            .map(|&i| lattice.get(i).clone())
            .collect();
        let m = subgroups.len();
        let rows = par::map_range(m, |u| {
            let mut row = FixedBitSet::with_capacity(m);
            let h = &subgroups[u];
            for (v, k) in subgroups.iter().enumerate() {
                if v != u && h.order() * k.order() >= n && product_size(h, k) == n {
                    row.insert(v);
                }
            }
            row
        });
        Self {
            group_order: n,
            lattice_indices,
            subgroups,
            graph: BitGraph::from_rows(rows),
        }
    }

    /// As [`ComaximalGraph::build`], but a vertex-free result is an error.
    pub fn build_strict(group: &Group, lattice: &SubgroupLattice) -> Result<Self> {
        let g = Self::build(group, lattice);
        if g.vertex_count() == 0 {
            return Err(Error::NoVertices);
        }
        Ok(g)
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn subgroup(&self, v: usize) -> &Subgroup {
        &self.subgroups[v]
    }

    pub fn lattice_index(&self, v: usize) -> usize {
        self.lattice_indices[v]
    }

    /// `Γ*(G)`: the subgraph on vertices of positive degree.
    pub fn deleted(&self) -> ComaximalGraph {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.graph.degree(v) > 0)
            .collect();
        Self {
            group_order: self.group_order,
            lattice_indices: keep.iter().map(|&v| self.lattice_indices[v]).collect(),
            subgroups: keep.iter().map(|&v| self.subgroups[v].clone()).collect(),
            graph: self.graph.induced(&keep),
        }
    }

    pub fn signature(&self) -> GraphSignature {
        signature(&self.graph)
    }

    /// Whether this graph is `K_{5,12}` plus 40 isolated vertices, which is
    /// `Γ(A₅)` up to isomorphism. Graphs of the form `K_{a,b} + m·K₁` are
    /// determined by `(a, b, m)`, so comparing signatures suffices.
    pub fn matches_a5_signature(&self) -> bool {
        let s = self.signature();
        s.vertex_count == 57
            && s.isolated_count == 40
            && s.edge_count == 60
            && s.complete_bipartite_parts == Some((5, 12))
    }

    /// `# vertices N` header then one `u v` line per edge, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# vertices {}\n", self.vertex_count());
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz rendering; each vertex is labelled `<order>#<vertex index>`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {v} [label=\"{}#{v}\"];", self.subgroups[v].order());
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
