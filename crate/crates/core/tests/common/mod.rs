#![allow(dead_code)]

use percbound::graph::generate;
use percbound::{FamilySpec, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

/// Largest connected component, relabelled.
pub fn giant(g: &Graph) -> Graph {
    g.split_components()
        .into_iter()
        .max_by_key(|(c, _)| c.n())
        .map(|(c, _)| c)
        .unwrap()
}

/// Uniform random labelled tree from a Pruefer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n < 2 {
        return Graph::from_edges(n, []).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// `g` with a pendant path of length `len` hung on every `every`-th vertex.
pub fn decorate(g: &Graph, every: usize, len: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut next = g.n();
    for v in (0..g.n()).step_by(every) {
        let mut prev = v;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges).unwrap()
}

/// Two triangles joined by a path of `len` edges.
pub fn dumbbell(len: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut prev = 2;
    for i in 0..len {
        edges.push((prev, 3 + i));
        prev = 3 + i;
    }
    let b = prev;
    edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
    Graph::from_edges(b + 3, edges).unwrap()
}

/// Theta graph: two hub vertices joined by three internally disjoint
/// paths with `a`, `b`, `c` interior vertices.
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(next, edges).unwrap()
}

/// Connected graphs with at least one cycle.
pub fn non_forest_corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(named(
            format!("cycle({n})"),
            generate(&FamilySpec::Cycle { n }).unwrap(),
        ));
    }
    for n in 4..=9 {
        out.push(named(
            format!("complete({n})"),
            generate(&FamilySpec::Complete { n }).unwrap(),
        ));
    }
    for (d, n) in [(3, 20), (3, 50), (4, 30), (5, 24), (3, 100), (4, 60)] {
        for seed in 1..=3 {
            let g = generate(&FamilySpec::RandomRegular { d, n, seed }).unwrap();
            out.push(named(
                format!("random_regular({d},{n},seed={seed})"),
                giant(&g),
            ));
        }
    }
    for (n, c) in [(60, 3.0), (80, 2.5), (120, 4.0)] {
        for seed in 1..=3 {
            let g = generate(&FamilySpec::BinomialRandom {
                n,
                p: c / (n - 1) as f64,
                seed,
            })
            .unwrap();
            let g = giant(&g);
            if !g.is_forest() {
                out.push(named(
                    format!("binomial_random({n},{c},seed={seed}) giant"),
                    g,
                ));
            }
        }
    }
    for n in [5, 8] {
        let c = generate(&FamilySpec::Cycle { n }).unwrap();
        out.push(named(format!("decorated cycle({n})"), decorate(&c, 1, 2)));
    }
    let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
    out.push(named("decorated complete(5)", decorate(&k5, 2, 3)));
    let rr = generate(&FamilySpec::RandomRegular {
        d: 3,
        n: 30,
        seed: 9,
    })
    .unwrap();
    out.push(named("decorated random_regular(3,30)", decorate(&rr, 3, 2)));
    for len in [0, 1, 4] {
        out.push(named(format!("dumbbell({len})"), dumbbell(len)));
    }
    for (a, b, c) in [(1, 1, 1), (1, 2, 3), (0, 2, 5)] {
        out.push(named(format!("theta({a},{b},{c})"), theta(a, b, c)));
    }
    out
}

pub fn forest_corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in [2, 3, 7, 20] {
        out.push(named(
            format!("path({n})"),
            generate(&FamilySpec::Path { n }).unwrap(),
        ));
    }
    for (d, depth) in [(3, 1), (3, 4), (4, 3), (2, 6)] {
        out.push(named(
            format!("regular_tree({d},{depth})"),
            generate(&FamilySpec::RegularTree { d, depth }).unwrap(),
        ));
    }
    for (d, r, len, depth) in [(3, 1, 1, 3), (3, 2, 2, 3), (4, 3, 2, 2)] {
        out.push(named(
            format!("chain_tree({d},{r},{len},{depth})"),
            generate(&FamilySpec::ChainTree { d, r, len, depth }).unwrap(),
        ));
    }
    for seed in 0..6 {
        out.push(named(
            format!("random_tree(40,seed={seed})"),
            random_tree(40, seed),
        ));
    }
    let two = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (4, 6)]).unwrap();
    out.push(named("two trees", two));
    out
}
