//! Generators for the graph families used throughout the crate.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Upper bound on pairing-model restarts for `RandomRegular`.
const MAX_PAIRING_ATTEMPTS: usize = 1_000_000;

/// A graph family together with its parameters.
///
/// Tree families are finite truncations: `depth` counts generations of the
/// backbone tree grown from a root.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    /// Ball of radius `depth` in the `d`-regular tree.
    RegularTree {
        d: usize,
        depth: usize,
    },
    /// `d`-regular backbone truncated at `depth`, with `r` pendant chains of
    /// `len` vertices attached to every backbone vertex (boundary included).
    ChainTree {
        d: usize,
        r: usize,
        len: usize,
        depth: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Uniform simple `d`-regular graph from the pairing model.
    RandomRegular {
        d: usize,
        n: usize,
        seed: u64,
    },
    /// Erdos-Renyi `G(n, p)`.
    BinomialRandom {
        n: usize,
        p: f64,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::RegularTree { d, .. } if d < 1 => {
                bad(format!("regular_tree needs d >= 1, got {d}"))
            }
            FamilySpec::ChainTree { d, r, len, .. } => {
                if d < 3 {
                    bad(format!("chain_tree needs d >= 3, got {d}"))
                } else if r < 1 {
                    bad(format!("chain_tree needs r >= 1, got {r}"))
                } else if len < 1 {
                    bad(format!("chain_tree needs L >= 1, got {len}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete { n } if n < 1 => bad("complete needs n >= 1".into()),
            FamilySpec::Path { n } if n < 1 => bad("path needs n >= 1".into()),
            FamilySpec::RandomRegular { d, n, .. } => {
                if d < 1 || d >= n {
                    bad(format!("random_regular needs 1 <= d < n, got d={d}, n={n}"))
                } else if (d * n) % 2 == 1 {
                    bad(format!("random_regular needs d*n even, got d={d}, n={n}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::BinomialRandom { n, p, .. } => {
                if n < 1 {
                    bad("binomial_random needs n >= 1".into())
                } else if !(0.0..=1.0).contains(&p) {
                    bad(format!("binomial_random needs 0 <= p <= 1, got {p}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn is_tree_family(&self) -> bool {
        matches!(
            self,
            FamilySpec::RegularTree { .. } | FamilySpec::ChainTree { .. } | FamilySpec::Path { .. }
        )
    }

    /// Same family with the truncation depth replaced; `None` for non-tree
    /// families.
    pub fn with_depth(&self, depth: usize) -> Option<FamilySpec> {
        match *self {
            FamilySpec::RegularTree { d, .. } => Some(FamilySpec::RegularTree { d, depth }),
            FamilySpec::ChainTree { d, r, len, .. } => {
                Some(FamilySpec::ChainTree { d, r, len, depth })
            }
            _ => None,
        }
    }
}

/// A generated tree with its root and the backbone generation of every
/// vertex (`None` for pendant-chain vertices).
#[derive(Debug, Clone)]
pub struct TreeLayout {
    pub graph: Graph,
    pub root: usize,
    pub depth: usize,
    pub backbone_depth: Vec<Option<usize>>,
}

impl TreeLayout {
    /// Backbone vertices at the truncation depth.
    pub fn boundary(&self) -> Vec<usize> {
        self.backbone_depth
            .iter()
            .enumerate()
            .filter(|(_, g)| **g == Some(self.depth))
            .map(|(v, _)| v)
            .collect()
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::RegularTree { .. } | FamilySpec::ChainTree { .. } => {
            Ok(generate_tree(spec)?.graph)
        }
        FamilySpec::Cycle { n } => Ok(Graph::from_canonical(n, cycle_edges(n))),
        FamilySpec::Complete { n } => {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Ok(Graph::from_canonical(n, edges))
        }
        FamilySpec::Path { n } => Ok(Graph::from_canonical(
            n,
            (1..n).map(|v| (v - 1, v)).collect(),
        )),
        FamilySpec::RandomRegular { d, n, seed } => random_regular(d, n, seed),
        FamilySpec::BinomialRandom { n, p, seed } => Ok(binomial_random(n, p, seed)),
    }
}

/// Tree families with layout information. `Path { n }` is rooted at vertex 0
/// with the far end as its only boundary vertex.
pub fn generate_tree(spec: &FamilySpec) -> Result<TreeLayout> {
    spec.validate()?;
    match *spec {
        FamilySpec::RegularTree { d, depth } => Ok(decorated_tree(d, 0, 0, depth)),
        FamilySpec::ChainTree { d, r, len, depth } => Ok(decorated_tree(d, r, len, depth)),
        FamilySpec::Path { n } => {
            let graph = generate(spec)?;
            let backbone_depth = (0..n).map(Some).collect();
            Ok(TreeLayout {
                graph,
                root: 0,
                depth: n - 1,
                backbone_depth,
            })
        }
        _ => Err(Error::InvalidParameter(format!(
            "{spec:?} is not a tree family"
        ))),
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    edges
}

fn decorated_tree(d: usize, r: usize, len: usize, depth: usize) -> TreeLayout {
    let mut edges = Vec::new();
    let mut backbone_depth = vec![Some(0)];
    let mut frontier = vec![0usize];
    for generation in 1..=depth {
        let mut next = Vec::with_capacity(frontier.len() * d.saturating_sub(1).max(1));
        for &v in &frontier {
            let children = if v == 0 { d } else { d - 1 };
            for _ in 0..children {
                let c = backbone_depth.len();
                backbone_depth.push(Some(generation));
                edges.push((v, c));
                next.push(c);
            }
        }
        frontier = next;
    }
    let backbone_count = backbone_depth.len();
    for v in 0..backbone_count {
        for _ in 0..r {
            let mut prev = v;
            for _ in 0..len {
                let c = backbone_depth.len();
                backbone_depth.push(None);
                edges.push((prev, c));
                prev = c;
            }
        }
    }
    edges.sort_unstable();
    TreeLayout {
        graph: Graph::from_canonical(backbone_depth.len(), edges),
        root: 0,
        depth,
        backbone_depth,
    }
}

/// Pairing model with rejection: stubs are matched one pair at a time and
/// the attempt is restarted as soon as a loop or a repeated edge appears,
/// which yields the uniform distribution over simple `d`-regular graphs.
fn random_regular(d: usize, n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs = Vec::with_capacity(n * d);
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(d); n];
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        stubs.clear();
        for v in 0..n {
            stubs.extend(std::iter::repeat_n(v, d));
        }
        adj.iter_mut().for_each(Vec::clear);
        while let Some(a) = stubs.pop() {
            let j = rng.gen_range(0..stubs.len());
            let b = stubs.swap_remove(j);
            if a == b || adj[a].contains(&b) {
                continue 'attempt;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut edges: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        edges.sort_unstable();
        return Ok(Graph::from_canonical(n, edges));
    }
    Err(Error::Generation(format!(
        "no simple {d}-regular pairing on {n} vertices after {MAX_PAIRING_ATTEMPTS} attempts"
    )))
}

/// `G(n, p)` by geometric skipping over the lower triangle.
fn binomial_random(n: usize, p: f64, seed: u64) -> Graph {
    let mut edges = Vec::new();
    if p >= 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|w| (w, v)));
        }
    } else if p > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_q = (1.0 - p).ln();
        let (mut v, mut w) = (1usize, -1i64);
        while v < n {
            let u: f64 = rng.gen();
            w += 1 + ((1.0 - u).ln() / log_q).floor() as i64;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as usize, v));
            }
        }
    }
    edges.sort_unstable();
    Graph::from_canonical(n, edges)
}
