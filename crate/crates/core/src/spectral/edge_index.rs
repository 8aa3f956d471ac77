use crate::error::{Error, Result};
use crate::graph::Graph;

/// The `2m` directed edges of a simple graph, i.e. the vertex set of its
/// oriented line graph.
///
/// Undirected edge `i = (u, v)` with `u < v` yields directed edge `2i`
/// (`u -> v`) and `2i + 1` (`v -> u`), so the reverse of `e` is `e ^ 1`.
/// A directed edge `e = (t -> h)` has tail `t` and head `h`.
#[derive(Debug, Clone)]
pub struct DirectedEdgeIndex {
    tail: Vec<usize>,
    head: Vec<usize>,
    out_offsets: Vec<usize>,
    out_edges: Vec<usize>,
}

impl DirectedEdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let count = 2 * g.m();
        let mut tail = Vec::with_capacity(count);
        let mut head = Vec::with_capacity(count);
        for &(u, v) in g.edges() {
            tail.extend([u, v]);
            head.extend([v, u]);
        }
        let mut out_offsets = Vec::with_capacity(g.n() + 1);
        out_offsets.push(0);
        let mut out_edges = Vec::with_capacity(count);
        for v in 0..g.n() {
            let mut ids: Vec<usize> = g
                .incident_edges(v)
                .iter()
                .map(|&e| {
                    if g.edges()[e].0 == v {
                        2 * e
                    } else {
                        2 * e + 1
                    }
                })
                .collect();
            ids.sort_unstable();
            out_edges.extend(ids);
            out_offsets.push(out_edges.len());
        }
        DirectedEdgeIndex {
            tail,
            head,
            out_offsets,
            out_edges,
        }
    }

    /// Number of directed edges, `2m`.
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn head(&self, e: usize) -> usize {
        self.head[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        self.tail[e]
    }

    #[inline]
    pub fn rev(&self, e: usize) -> usize {
        e ^ 1
    }

    /// Directed edges leaving `v`, in increasing id order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// `y = B x` without bounds checks on the length (callers check).
    pub(crate) fn apply_into(&self, x: &[f64], sums: &mut [f64], y: &mut [f64]) {
        for (v, s) in sums.iter_mut().enumerate() {
            *s = self.out_edges(v).iter().map(|&f| x[f]).sum();
        }
        for (e, ye) in y.iter_mut().enumerate() {
            *ye = sums[self.head[e]] - x[e ^ 1];
        }
    }
}

/// Applies the Hashimoto (non-backtracking) matrix:
/// `(Bx)[e] = sum over f leaving head(e) of x[f], minus x[rev(e)]`.
///
/// Work is `O(n + m)`; the per-vertex sums run in out-edge id order, so the
/// result is bit-for-bit reproducible.
pub fn hashimoto_apply(idx: &DirectedEdgeIndex, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != idx.len() {
        return Err(Error::LengthMismatch {
            expected: idx.len(),
            got: x.len(),
        });
    }
    let mut sums = vec![0.0; idx.vertex_count()];
    let mut y = vec![0.0; idx.len()];
    idx.apply_into(x, &mut sums, &mut y);
    Ok(y)
}
