use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Finite section of the single-cycle unwrapping of `g` at the non-bridge
/// edge `b = (u, v)`.
///
/// The result holds `copies` disjoint copies of `g - b` (copy `i` occupies
/// vertices `i*n..(i+1)*n`), with the source `v` of copy `i` joined to the
/// sink `u` of copy `i + 1`. The chain ends are left open, so the graph has
/// `copies * n` vertices and `copies * m - 1` edges.
pub fn scu_truncation(g: &Graph, b: (usize, usize), copies: usize) -> Result<Graph> {
    if copies < 1 {
        return Err(Error::InvalidParameter("copies must be at least 1".into()));
    }
    let (sink, source) = b;
    let cut = g
        .edge_id(sink, source)
        .ok_or(Error::NotAnEdge(sink, source))?;
    let components = g.components().count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    if !connected_without(g, cut, source, sink) {
        return Err(Error::Bridge(sink.min(source), sink.max(source)));
    }

    let n = g.n();
    let mut edges = Vec::with_capacity(copies * g.m());
    for i in 0..copies {
        let shift = i * n;
        edges.extend(
            g.edges()
                .iter()
                .enumerate()
                .filter(|&(id, _)| id != cut)
                .map(|(_, &(x, y))| (x + shift, y + shift)),
        );
        if i + 1 < copies {
            let (a, c) = (source + shift, sink + shift + n);
            edges.push((a.min(c), a.max(c)));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(copies * n, edges))
}

fn connected_without(g: &Graph, cut: usize, from: usize, to: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            return true;
        }
        for (&y, &e) in g.neighbors(x).iter().zip(g.incident_edges(x)) {
            if e != cut && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_bridges, generate, FamilySpec};

    #[test]
    fn unrolled_square_is_a_path() {
        let g = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let t = scu_truncation(&g, (0, 1), 3).unwrap();
        assert_eq!((t.n(), t.m()), (12, 11));
        assert!(t.is_connected() && t.is_forest());
        assert_eq!(t.max_degree(), 2);
    }

    #[test]
    fn triangle_two_copies() {
        let g = generate(&FamilySpec::Cycle { n: 3 }).unwrap();
        let t = scu_truncation(&g, (1, 2), 2).unwrap();
        assert_eq!((t.n(), t.m()), (6, 5));
        // two 2-paths 2-0-1 joined in series through the image of b
        assert!(t.is_connected() && t.is_forest());
    }

    #[test]
    fn single_copy_drops_the_edge() {
        let g = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let t = scu_truncation(&g, (0, 3), 1).unwrap();
        assert_eq!((t.n(), t.m()), (4, 5));
        assert!(!t.has_edge(0, 3));
    }

    #[test]
    fn bridge_and_missing_edge_rejected() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(find_bridges(&g).unwrap(), vec![(2, 3)]);
        assert!(matches!(
            scu_truncation(&g, (2, 3), 2),
            Err(Error::Bridge(2, 3))
        ));
        assert!(matches!(
            scu_truncation(&g, (0, 5), 2),
            Err(Error::NotAnEdge(0, 5))
        ));
        assert!(scu_truncation(&g, (0, 1), 0).is_err());
    }
}
