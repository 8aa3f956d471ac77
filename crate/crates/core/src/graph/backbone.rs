use super::Graph;

/// Backbone of a graph together with the original id of every survivor.
#[derive(Debug, Clone)]
pub struct Backbone {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Repeatedly strips vertices of degree at most one. The result has minimum
/// degree two or is empty; it is empty exactly when `g` is a forest.
pub fn backbone(g: &Graph) -> Backbone {
    let n = g.n();
    let mut degree: Vec<usize> = g.degrees().collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    Backbone {
        graph: g.induced_subgraph(&vertices),
        vertices,
    }
}
