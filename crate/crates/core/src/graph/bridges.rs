use super::Graph;
use crate::error::{Error, Result};

/// All bridges of a connected graph, as canonical `(u, v)` pairs in edge-id
/// order. Iterative lowlink depth-first search, linear time.
pub fn find_bridges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let components = g.components().count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }

    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_bridge = vec![false; g.m()];
    // (vertex, edge id used to enter it, next adjacency position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    order[0] = 0;
    low[0] = 0;
    let mut timer = 1;

    while let Some(top) = stack.last_mut() {
        let (v, parent_edge, pos) = *top;
        if pos < g.degree(v) {
            top.2 += 1;
            let w = g.neighbors(v)[pos];
            let e = g.incident_edges(v)[pos];
            if e == parent_edge {
                continue;
            }
            if order[w] == usize::MAX {
                order[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(order[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent] = low[parent].min(low[v]);
                if low[v] > order[parent] {
                    is_bridge[parent_edge] = true;
                }
            }
        }
    }

    Ok(g.edges()
        .iter()
        .zip(&is_bridge)
        .filter(|(_, &b)| b)
        .map(|(&e, _)| e)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn every_path_edge_is_a_bridge() {
        let g = generate(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(find_bridges(&g).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_has_no_bridges() {
        let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert!(find_bridges(&g).unwrap().is_empty());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            find_bridges(&g),
            Err(Error::Disconnected { components: 2 })
        ));
    }
}
