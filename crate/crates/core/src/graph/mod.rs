//! Simple undirected graphs in compressed adjacency form.

mod backbone;
mod bridges;
mod generate;
mod parse;
mod scu;

pub use backbone::{backbone, Backbone};
pub use bridges::find_bridges;
pub use generate::{generate, generate_tree, FamilySpec, TreeLayout};
pub use parse::{parse_edge_list, write_edge_list, ParsedEdgeList, MAX_VERTEX_ID};
pub use scu::scu_truncation;

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Immutable simple undirected graph.
///
/// Vertices are dense ids `0..n`. Neighbour lists are sorted and stored
/// back to back (`offsets[v]..offsets[v + 1]`). Every adjacency slot also
/// records the id of the undirected edge it belongs to; edge ids follow the
/// canonical edge list, sorted lexicographically with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    slot_edge: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects self-loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a, b));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, list))
    }

    /// `edges` must already be sorted, unique and have `u < v < n`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0; 2 * edges.len()];
        let mut slot_edge = vec![0; 2 * edges.len()];
        // Edges are sorted by (u, v), so pushing in edge order leaves every
        // neighbour list sorted: for vertex w, neighbours x < w arrive as
        // the second endpoint of (x, w) in increasing x, before any (w, y).
        for (id, &(u, v)) in edges.iter().enumerate() {
            neighbors[fill[u]] = v;
            slot_edge[fill[u]] = id;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            slot_edge[fill[v]] = id;
            fill[v] += 1;
        }
        Graph {
            offsets,
            neighbors,
            slot_edge,
            edges,
        }
    }

    pub fn empty() -> Graph {
        Self::from_canonical(0, Vec::new())
    }

    /// Graph order.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Undirected edge ids incident to `v`, aligned with [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.slot_edge[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Id of the undirected edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        let pos = self.neighbors(u).binary_search(&v).ok()?;
        Some(self.incident_edges(u)[pos])
    }

    /// Component label of every vertex, labels numbered by smallest member.
    pub fn components(&self) -> Components {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let c = sizes.len();
            label[start] = c;
            queue.push_back(start);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = c;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        Components { label, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().count() == 1
    }

    /// True when every component is a finite tree.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().count() == self.n()
    }

    /// Subgraph induced by `vertices` (which must be distinct), relabelled in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        Self::from_canonical(vertices.len(), edges)
    }

    /// Splits the graph into its connected components, each relabelled
    /// densely. The second element of every pair lists original ids.
    pub fn split_components(&self) -> Vec<(Graph, Vec<usize>)> {
        let comps = self.components();
        let mut members = vec![Vec::new(); comps.count()];
        for (v, &c) in comps.label.iter().enumerate() {
            members[c].push(v);
        }
        members
            .into_iter()
            .map(|vs| (self.induced_subgraph(&vs), vs))
            .collect()
    }
}

/// Connected-component decomposition.
#[derive(Debug, Clone)]
pub struct Components {
    pub label: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

/// Arithmetic mean of `d_v^power` over all vertices.
pub fn degree_moment(g: &Graph, power: u32) -> Result<f64> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if power == 0 {
        return Err(Error::InvalidParameter("power must be positive".into()));
    }
    let total: f64 = g.degrees().map(|d| (d as f64).powi(power as i32)).sum();
    Ok(total / g.n() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(5, [(4, 0), (2, 1), (0, 2), (3, 1), (1, 4)]).unwrap();
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &w in nb {
                assert!(g.neighbors(w).contains(&v));
            }
        }
        assert_eq!(g.degrees().sum::<usize>(), 2 * g.m());
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 2), (1, 3), (1, 4)]);
    }

    #[test]
    fn edge_ids_follow_canonical_order() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (1, 2)]).unwrap();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(u, v), Some(id));
            assert_eq!(g.edge_id(v, u), Some(id));
        }
        assert_eq!(g.edge_id(0, 3), None);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(Error::LoopEdge(1, 1))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn forest_detection() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(tree.is_forest());
        let two = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(two.is_forest());
        assert_eq!(two.components().count(), 2);
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_forest());
    }
    #[test]
    fn moments() {
        let c6 = super::generate(&super::FamilySpec::Cycle { n: 6 }).unwrap();
        assert_eq!(degree_moment(&c6, 2).unwrap(), 4.0);
        let star = super::generate(&super::FamilySpec::RegularTree { d: 4, depth: 1 }).unwrap();
        assert_eq!(degree_moment(&star, 1).unwrap(), 1.6);
        assert!(matches!(
            degree_moment(&Graph::empty(), 1),
            Err(Error::EmptyGraph)
        ));
    }
}
