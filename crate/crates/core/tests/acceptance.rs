//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{forest_corpus, non_forest_corpus};
use percbound::graph::{degree_moment, generate, scu_truncation};
use percbound::sim::{estimate_threshold, site_percolation_sweep, Criterion};
use percbound::spectral::{
    adjacency_spectral_radius_with, companion_spectral_radius, dense, nb_spectral_radius,
    DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use percbound::thresholds::{
    pattern_threshold, tree_threshold_estimate, DEFAULT_BISECTION_TOL, DEFAULT_ETA,
};
use percbound::{FamilySpec, Graph, QuotientPattern};

type Check = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within_budget(elapsed: Duration, secs: u64) -> bool {
    elapsed <= Duration::from_secs(secs)
}

fn regular_exactness() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for d in [3usize, 4, 6] {
        let start = Instant::now();
        let g = generate(&FamilySpec::RandomRegular {
            d,
            n: 2000,
            seed: 1,
        })
        .unwrap();
        let r = nb_spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER);
        let elapsed = start.elapsed();
        let err = (r.rho - (d - 1) as f64).abs();
        let ok = err <= 1e-9 && r.converged && within_budget(elapsed, 5);
        pass &= ok;
        lines.push(format!(
            "d={d}: rho={:.12} err={err:.1e} {:.2?}",
            r.rho, elapsed
        ));
    }
    outcome(pass, lines.join("; "))
}

fn example_one_family() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut pass = true;
    for (d, r, len) in [(3u32, 1u32, 1usize), (3, 2, 2), (4, 3, 2)] {
        let p = QuotientPattern::chain_tree(d, r, len).unwrap();
        let t = pattern_threshold(&p).unwrap();
        let err = (t - 1.0 / (d - 1) as f64).abs();
        pass &= err <= 1e-9;
        lines.push(format!("T({d};{r},{len}) threshold={t:.12} err={err:.1e}"));
    }

    let target = 1.5 + (2.25f64 + 1.0).sqrt();
    let p = QuotientPattern::chain_tree(3, 1, 1).unwrap();
    lines.push(format!(
        "target={target:.6} quotient growth rate={:.6}",
        p.adjacency_rho()
    ));
    let mut deepest = 0.0;
    for depth in [4usize, 8, 12, 16] {
        let g = generate(&FamilySpec::ChainTree {
            d: 3,
            r: 1,
            len: 1,
            depth,
        })
        .unwrap();
        let a = adjacency_spectral_radius_with(&g, 1e-9, DEFAULT_MAX_ITER).unwrap();
        lines.push(format!(
            "depth {depth}: n={} rho(A)={:.6} in [{:.6}, {:.6}]",
            g.n(),
            a.rho,
            a.lower,
            a.upper
        ));
        deepest = a.rho;
    }
    let err = (deepest - target).abs();
    pass &= err <= 1e-3;
    let elapsed = start.elapsed();
    pass &= within_budget(elapsed, 10);
    lines.push(format!("depth-16 gap to target {err:.4} {elapsed:.2?}"));
    outcome(pass, lines.join("; "))
}

fn strict_inequality() -> Outcome {
    let corpus = non_forest_corpus();
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    for g in &corpus {
        assert!(g.graph.is_connected() && !g.graph.is_forest(), "{}", g.name);
        let nb = nb_spectral_radius(&g.graph, DEFAULT_TOL, DEFAULT_MAX_ITER);
        let a = adjacency_spectral_radius_with(&g.graph, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let margin = a.rho - nb.rho;
        min_margin = min_margin.min(margin);
        if margin <= 10.0 * DEFAULT_TOL * a.rho || !nb.converged || !a.converged {
            violations.push(format!("{} margin={margin:.3e}", g.name));
        }
    }
    let pass = corpus.len() >= 50 && violations.is_empty();
    outcome(
        pass,
        format!(
            "{} graphs, min margin {min_margin:.4}, violations: {}",
            corpus.len(),
            if violations.is_empty() {
                "none".into()
            } else {
                violations.join(", ")
            }
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    let mut worst_dense = 0.0f64;
    let mut worst_companion = 0.0f64;
    let mut failures = Vec::new();
    let all = non_forest_corpus().into_iter().chain(forest_corpus());
    for g in all {
        if 2 * g.graph.m() > 400 {
            continue;
        }
        checked += 1;
        let nb = nb_spectral_radius(&g.graph, DEFAULT_TOL, DEFAULT_MAX_ITER).rho;
        let d = dense::hashimoto_spectral_radius(&g.graph).unwrap();
        worst_dense = worst_dense.max((nb - d).abs());
        if (nb - d).abs() > 1e-8 {
            failures.push(format!("{} dense {d:.12} vs {nb:.12}", g.name));
        }
        if !g.graph.is_forest() {
            let c = companion_spectral_radius(&g.graph).unwrap();
            worst_companion = worst_companion.max((nb - c).abs());
            if (nb - c).abs() > 1e-8 {
                failures.push(format!("{} companion {c:.12} vs {nb:.12}", g.name));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} graphs, worst |dense| {worst_dense:.1e}, worst |companion| {worst_companion:.1e}{}",
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join(", ")) }
        ),
    )
}

fn forest_nilpotency() -> Outcome {
    let corpus = forest_corpus();
    let mut failures = Vec::new();
    for g in &corpus {
        let r = nb_spectral_radius(&g.graph, DEFAULT_TOL, DEFAULT_MAX_ITER);
        if !(r.rho == 0.0 && r.nilpotent && r.iterations <= 2 * g.graph.m()) {
            failures.push(format!(
                "{} rho={} iterations={}",
                g.name, r.rho, r.iterations
            ));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} forests; failures: {}",
            corpus.len(),
            if failures.is_empty() {
                "none".into()
            } else {
                failures.join(", ")
            }
        ),
    )
}

fn tree_recursion() -> Outcome {
    let start = Instant::now();
    let regular = tree_threshold_estimate(
        &FamilySpec::RegularTree { d: 3, depth: 1 },
        &[6, 8, 10, 12, 14],
        DEFAULT_ETA,
        DEFAULT_BISECTION_TOL,
    )
    .unwrap();
    let chain = tree_threshold_estimate(
        &FamilySpec::ChainTree {
            d: 3,
            r: 2,
            len: 2,
            depth: 1,
        },
        &[6, 8, 10, 12],
        DEFAULT_ETA,
        DEFAULT_BISECTION_TOL,
    )
    .unwrap();
    let elapsed = start.elapsed();
    let e1 = (regular.estimate - 0.5).abs();
    let e2 = (chain.estimate - 0.5).abs();
    outcome(
        e1 <= 0.02 && e2 <= 0.03 && within_budget(elapsed, 30),
        format!(
            "regular_tree(3): {:.4} (deepest raw {:.4}, err {e1:.4}); chain_tree(3,2,2): {:.4} (deepest raw {:.4}, err {e2:.4}); {elapsed:.2?}",
            regular.estimate, regular.deepest, chain.estimate, chain.deepest
        ),
    )
}

fn monte_carlo_ordering() -> Outcome {
    let start = Instant::now();
    let n = 10_000;
    let graphs = [
        (
            "random_regular(3)",
            generate(&FamilySpec::RandomRegular { d: 3, n, seed: 1 }).unwrap(),
        ),
        (
            "binomial_random(<d>=4)",
            generate(&FamilySpec::BinomialRandom {
                n,
                p: 4.0 / (n - 1) as f64,
                seed: 1,
            })
            .unwrap(),
        ),
    ];
    let mut pass = true;
    let mut lines = Vec::new();
    for (name, g) in &graphs {
        let bound = 1.0 / nb_spectral_radius(g, DEFAULT_TOL, DEFAULT_MAX_ITER).rho;
        let sweep = site_percolation_sweep(g, 200, 1).unwrap();
        let est = estimate_threshold(&sweep, Criterion::SusceptibilityPeak).unwrap();
        let ordered = est.p_hat + 2.0 * est.uncertainty >= bound;
        let rel = (est.p_hat - bound).abs() / bound;
        pass &= ordered && rel <= 0.15;
        lines.push(format!(
            "{name}: p_hat={:.4} +- {:.4}, 1/rho(F)={bound:.4}, rel dev {:.1}%",
            est.p_hat,
            est.uncertainty,
            100.0 * rel
        ));
    }
    let elapsed = start.elapsed();
    pass &= within_budget(elapsed, 120);
    lines.push(format!("{elapsed:.2?}"));
    outcome(pass, lines.join("; "))
}

fn uncorrelated_formula() -> Outcome {
    let n = 10_000;
    let g = generate(&FamilySpec::BinomialRandom {
        n,
        p: 4.0 / (n - 1) as f64,
        seed: 1,
    })
    .unwrap();
    let rho = nb_spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER).rho;
    let d1 = degree_moment(&g, 1).unwrap();
    let d2 = degree_moment(&g, 2).unwrap();
    let formula = d2 / d1 - 1.0;
    let rel = (rho - formula).abs() / rho;
    outcome(
        rel <= 0.05,
        format!(
            "rho(F)={rho:.4}, <d^2>/<d>-1={formula:.4}, rel dev {:.2}%",
            100.0 * rel
        ),
    )
}

fn scu_convergence() -> Outcome {
    let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
    let mut rhos = Vec::new();
    let mut pass = true;
    let mut worst = 0.0f64;
    for k in 1..=8 {
        let t = scu_truncation(&c4, (0, 1), k).unwrap();
        let is_path = t.n() == 4 * k && t.is_forest() && t.is_connected() && t.max_degree() == 2;
        pass &= is_path;
        let rho = adjacency_spectral_radius_with(&t, DEFAULT_TOL, DEFAULT_MAX_ITER)
            .unwrap()
            .rho;
        let path = generate(&FamilySpec::Path { n: 4 * k }).unwrap();
        let oracle = dense::adjacency_spectral_radius(&path).unwrap();
        worst = worst.max((rho - oracle).abs());
        rhos.push(rho);
    }
    let monotone = rhos.windows(2).all(|w| w[1] >= w[0]);
    let last = *rhos.last().unwrap();
    pass &= monotone && (last - 2.0).abs() <= 0.01 && worst <= 1e-8;
    outcome(
        pass,
        format!(
            "rho(A) k=1..8: [{}]; monotone={monotone}; |rho_8 - 2|={:.4}; worst dense deviation {worst:.1e}",
            rhos.iter().map(|r| format!("{r:.6}")).collect::<Vec<_>>().join(", "),
            (last - 2.0).abs()
        ),
    )
}

/// Largest open cluster of `g` restricted to the vertex mask.
fn largest_open_cluster(g: &Graph, mask: u32) -> usize {
    let open = |v: usize| mask >> v & 1 == 1;
    let mut seen = vec![false; g.n()];
    let mut best = 0;
    for s in 0..g.n() {
        if !open(s) || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if open(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        best = best.max(size);
    }
    best
}

fn exhaustive_check() -> Outcome {
    let g = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
    let sweep = site_percolation_sweep(&g, 200, 7).unwrap();
    let mut worst_sigma = 0.0f64;
    let mut failures = 0;
    for (i, &p) in sweep.grid.iter().enumerate() {
        let exact: f64 = (0u32..16)
            .map(|mask| {
                let k = mask.count_ones() as i32;
                p.powi(k) * (1.0 - p).powi(4 - k) * largest_open_cluster(&g, mask) as f64 / 4.0
            })
            .sum();
        let mean = sweep.canonical_largest_fraction.mean[i];
        let se = sweep.canonical_largest_fraction.stderr[i];
        let diff = (mean - exact).abs();
        if se == 0.0 {
            if diff > 1e-12 {
                failures += 1;
            }
        } else {
            worst_sigma = worst_sigma.max(diff / se);
            if diff > 3.0 * se {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!(
            "{} grid points, worst deviation {worst_sigma:.2} standard errors, {failures} outside",
            sweep.grid.len()
        ),
    )
}

fn main() {
    let criteria: [Check; 10] = [
        ("regular-graph exactness", regular_exactness),
        ("quasi-regular tree family", example_one_family),
        ("strict inequality", strict_inequality),
        ("oracle equivalence", oracle_equivalence),
        ("finite-tree nilpotency", forest_nilpotency),
        ("tree recursion convergence", tree_recursion),
        ("bound ordering vs Monte Carlo", monte_carlo_ordering),
        ("uncorrelated-graph formula", uncorrelated_formula),
        ("SCU convergence", scu_convergence),
        ("exhaustive simulation check", exhaustive_check),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
