use std::fmt::Write as _;

use percbound::graph::{
    find_bridges, generate as build, parse_edge_list, scu_truncation, write_edge_list,
};
use percbound::sim::{
    estimate_threshold, site_percolation_sweep_with_grid, Criterion, ThresholdEstimate,
};
use percbound::spectral::{
    adjacency_spectral_radius_with, nb_spectral_radius, pattern_hashimoto, DEFAULT_MAX_ITER,
};
use percbound::thresholds::{
    bounds_report_with, tree_threshold_estimate, BoundsReport, DEFAULT_BISECTION_TOL, DEFAULT_ETA,
};
use percbound::{Error, FamilySpec, Graph, QuotientPattern};
use serde::Serialize;
use serde_json::json;

use crate::output::{cell, emit, json, read_file, Failure, Status};
use crate::{AnalyzeArgs, Family, Format, GenerateArgs, PatternArgs, ScuArgs, SimulateArgs};

type Outcome = Result<Status, Failure>;

fn load_graph(path: &std::path::Path) -> Result<Graph, Failure> {
    let parsed = parse_edge_list(&read_file(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if parsed.duplicates > 0 {
        eprintln!("warning: {} duplicate edges collapsed", parsed.duplicates);
    }
    Ok(parsed.graph)
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(Failure::input(format!(
            "--tol must lie in (0, 1), got {tol}"
        )))
    }
}

pub fn analyze(args: AnalyzeArgs) -> Outcome {
    check_tol(args.tol)?;
    let g = load_graph(&args.input)?;
    let report = bounds_report_with(&g, args.tol, args.max_iter)?;
    let bytes = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Text => analyze_text(&report).into_bytes(),
        Format::Csv => analyze_csv(&report).into_bytes(),
    };
    emit(args.common.output.as_deref(), &bytes)?;
    if report.converged {
        Ok(Status::Ok)
    } else {
        eprintln!("warning: power iteration did not converge; values are best estimates");
        Ok(Status::Numeric)
    }
}

fn analyze_rows(r: &BoundsReport) -> [(&'static str, Option<f64>, Option<&str>); 4] {
    [
        (
            "estimate_random",
            r.estimate_random,
            r.estimate_random_reason.as_deref(),
        ),
        (
            "bound_maxdeg",
            r.bound_maxdeg,
            r.bound_maxdeg_reason.as_deref(),
        ),
        ("bound_nb", r.bound_nb, r.bound_nb_reason.as_deref()),
        (
            "bound_adjacency",
            r.bound_adjacency,
            r.bound_adjacency_reason.as_deref(),
        ),
    ]
}

fn analyze_text(r: &BoundsReport) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph: n={} m={} d_min={} d_max={} components={} forest={}",
        r.n,
        r.m,
        r.d_min,
        r.d_max,
        r.components,
        yes(r.forest)
    );
    let _ = writeln!(
        s,
        "rho(B) = {:.6}   rho(A) = {:.6}   converged = {}",
        r.nb_rho,
        r.adjacency_rho,
        yes(r.converged)
    );
    let _ = writeln!(s);
    let labels = [
        "<d>/(<d^2>-<d>)  heuristic",
        "1/(d_max-1)",
        "1/rho(B)         lower bound",
        "1/rho(A)         lower bound",
    ];
    let _ = writeln!(s, "{:<30} {:>10}  note", "quantity", "value");
    for (label, (_, value, reason)) in labels.iter().zip(analyze_rows(r)) {
        let line = format!("{label:<30} {:>10}  {}", cell(value), reason.unwrap_or(""));
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let _ = writeln!(s);
    let chain = match (r.bound_nb, r.bound_adjacency, r.strict_chain) {
        (Some(nb), Some(a), Some(strict)) => format!(
            "p_c >= 1/rho(B) > 1/rho(A): {nb:.6} > {a:.6} {}",
            if strict { "holds" } else { "VIOLATED" }
        ),
        _ => "p_c >= 1/rho(B) > 1/rho(A): not comparable (1/rho(B) undefined)".to_string(),
    };
    let _ = writeln!(s, "chain: {chain}");
    s
}

fn analyze_csv(r: &BoundsReport) -> String {
    let mut s = String::from("quantity,value\n");
    for (name, value, _) in analyze_rows(r) {
        let _ = writeln!(
            s,
            "{name},{}",
            value.map(|v| v.to_string()).unwrap_or_default()
        );
    }
    let _ = writeln!(s, "nb_rho,{}", r.nb_rho);
    let _ = writeln!(s, "adjacency_rho,{}", r.adjacency_rho);
    s
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::input(format!("{family} needs --{flag}")))
}

fn family_spec(args: &GenerateArgs) -> Result<FamilySpec, Failure> {
    Ok(match args.family {
        Family::RegularTree => FamilySpec::RegularTree {
            d: need(args.d, "d", "regular-tree")?,
            depth: need(args.depth, "depth", "regular-tree")?,
        },
        Family::ChainTree => FamilySpec::ChainTree {
            d: need(args.d, "d", "chain-tree")?,
            r: need(args.r, "r", "chain-tree")?,
            len: need(args.len, "len", "chain-tree")?,
            depth: need(args.depth, "depth", "chain-tree")?,
        },
        Family::Cycle => FamilySpec::Cycle {
            n: need(args.n, "n", "cycle")?,
        },
        Family::Complete => FamilySpec::Complete {
            n: need(args.n, "n", "complete")?,
        },
        Family::Path => FamilySpec::Path {
            n: need(args.n, "n", "path")?,
        },
        Family::RandomRegular => FamilySpec::RandomRegular {
            d: need(args.d, "d", "random-regular")?,
            n: need(args.n, "n", "random-regular")?,
            seed: args.seed,
        },
        Family::BinomialRandom => {
            let n = need(args.n, "n", "binomial-random")?;
            let p = match (args.p, args.mean_degree) {
                (Some(p), _) => p,
                (None, Some(c)) if n > 1 => c / (n - 1) as f64,
                (None, Some(_)) => 0.0,
                (None, None) => {
                    return Err(Failure::input("binomial-random needs --p or --mean-degree"))
                }
            };
            FamilySpec::BinomialRandom {
                n,
                p,
                seed: args.seed,
            }
        }
    })
}

pub fn generate(args: GenerateArgs) -> Outcome {
    let spec = family_spec(&args)?;
    let g = build(&spec)?;
    let mut bytes = Vec::new();
    write_edge_list(&g, &mut bytes).expect("writing to memory");
    emit(args.output.as_deref(), &bytes)?;
    eprintln!("n={} m={}", g.n(), g.m());
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct PatternReport {
    pattern: QuotientPattern,
    states: Vec<(usize, usize)>,
    rho: f64,
    threshold: Option<f64>,
    adjacency_rho: f64,
    tree_estimate: Option<percbound::thresholds::TreeThresholdEstimate>,
}

pub fn pattern(args: PatternArgs) -> Outcome {
    let (pattern, family) = match (&args.input, args.regular_tree, args.chain_tree) {
        (Some(path), _, _) => (
            QuotientPattern::from_json(&read_file(path)?)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
            None,
        ),
        (None, Some(d), _) => (
            QuotientPattern::regular_tree(d)?,
            Some(FamilySpec::RegularTree {
                d: d as usize,
                depth: 1,
            }),
        ),
        (None, None, Some((d, r, len))) => {
            let to_u32 = |x: usize| {
                u32::try_from(x).map_err(|_| Failure::input(format!("{x} is too large")))
            };
            (
                QuotientPattern::chain_tree(to_u32(d)?, to_u32(r)?, len)?,
                Some(FamilySpec::ChainTree {
                    d,
                    r,
                    len,
                    depth: 1,
                }),
            )
        }
        (None, None, None) => {
            return Err(Failure::input(
                "give a pattern file, --regular-tree or --chain-tree",
            ))
        }
    };
    let spectrum = pattern_hashimoto(&pattern)?;
    let infinite = spectrum.rho >= 1.0 - 1e-9;

    let tree_estimate = match (&args.depths, family) {
        (None, _) => None,
        (Some(_), None) => {
            return Err(Failure::input(
                "--depths needs --regular-tree or --chain-tree",
            ))
        }
        (Some(depths), Some(spec)) => Some(tree_threshold_estimate(
            &spec,
            depths,
            DEFAULT_ETA,
            DEFAULT_BISECTION_TOL,
        )?),
    };
    let report = PatternReport {
        adjacency_rho: pattern.adjacency_rho(),
        states: spectrum.states.clone(),
        rho: spectrum.rho,
        threshold: infinite.then(|| 1.0 / spectrum.rho),
        pattern,
        tree_estimate,
    };
    let bytes = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Text => pattern_text(&report).into_bytes(),
        Format::Csv => {
            let mut s = String::from("quantity,value\n");
            let _ = writeln!(s, "rho,{}", report.rho);
            let _ = writeln!(
                s,
                "threshold,{}",
                report.threshold.map(|t| t.to_string()).unwrap_or_default()
            );
            let _ = writeln!(s, "adjacency_rho,{}", report.adjacency_rho);
            s.into_bytes()
        }
    };
    emit(args.common.output.as_deref(), &bytes)?;
    if infinite {
        Ok(Status::Ok)
    } else {
        eprintln!(
            "error: non-backtracking spectral radius {} is below 1; the pattern does not describe an infinite tree",
            report.rho
        );
        Ok(Status::InvalidPattern)
    }
}

fn pattern_text(r: &PatternReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "classes: {}   class-pair states: {}",
        r.pattern.classes,
        r.states.len()
    );
    let _ = writeln!(s, "rho(B)          {:.9}", r.rho);
    let _ = writeln!(s, "threshold       {}", cell(r.threshold));
    let _ = writeln!(s, "growth rate     {:.9}", r.adjacency_rho);
    if let Some(t) = &r.tree_estimate {
        let _ = writeln!(s, "\nfinite-tree recursion (eta = {}):", t.eta);
        for (depth, p) in &t.sequence {
            let _ = writeln!(s, "  depth {depth:>3}   p = {p:.6}");
        }
        let _ = writeln!(
            s,
            "  extrapolated   {:.6}   monotone = {}",
            t.estimate, t.monotone
        );
    }
    s
}

fn estimate_or_reason(
    r: &percbound::sim::SimulationResult,
    criterion: Criterion,
) -> (Option<ThresholdEstimate>, Option<String>, bool) {
    match estimate_threshold(r, criterion) {
        Ok(e) => (Some(e), None, false),
        Err(e) => {
            let flat = matches!(e, Error::FlatCurve(_));
            (None, Some(e.to_string()), flat)
        }
    }
}

pub fn simulate(args: SimulateArgs) -> Outcome {
    check_tol(args.tol)?;
    let g = load_graph(&args.input)?;
    let sweep = site_percolation_sweep_with_grid(&g, args.trials, args.seed, args.grid)?;
    let (peak, peak_reason, flat) = estimate_or_reason(&sweep, Criterion::SusceptibilityPeak);
    let (crossing, crossing_reason, _) =
        estimate_or_reason(&sweep, Criterion::FractionCrossing { level: args.level });
    let nb = nb_spectral_radius(&g, args.tol, DEFAULT_MAX_ITER);
    let bound_nb = (!nb.nilpotent).then(|| 1.0 / nb.rho);

    let summary = match &peak {
        Some(e) => format!(
            "susceptibility peak p_hat = {:.4} +- {:.4}; 1/rho(B) = {}",
            e.p_hat,
            e.uncertainty,
            cell(bound_nb)
        ),
        None => format!(
            "no susceptibility estimate: {}",
            peak_reason.as_deref().unwrap_or("")
        ),
    };
    let bytes = match args.common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            if args.microcanonical {
                sweep.write_csv(&mut buf)
            } else {
                sweep.write_canonical_csv(&mut buf)
            }
            .expect("writing to memory");
            eprintln!("{summary}");
            buf
        }
        Format::Text => format!(
            "n={} trials={} seed={}\n{summary}\nfraction crossing ({}) p_hat = {}\n",
            sweep.n,
            sweep.trials,
            sweep.master_seed,
            args.level,
            crossing
                .as_ref()
                .map(|e| format!("{:.4} +- {:.4}", e.p_hat, e.uncertainty))
                .unwrap_or_else(|| crossing_reason.clone().unwrap_or_default())
        )
        .into_bytes(),
        Format::Json => {
            let doc = json!({
                "n": sweep.n,
                "trials": sweep.trials,
                "master_seed": sweep.master_seed,
                "bound_nb": bound_nb,
                "susceptibility_peak": peak,
                "susceptibility_peak_reason": peak_reason,
                "fraction_crossing": crossing,
                "fraction_crossing_reason": crossing_reason,
                "grid": sweep.grid,
                "mean_largest_fraction": sweep.canonical_largest_fraction.mean,
                "stderr_largest_fraction": sweep.canonical_largest_fraction.stderr,
                "mean_susceptibility": sweep.canonical_susceptibility.mean,
                "stderr_susceptibility": sweep.canonical_susceptibility.stderr,
            });
            json(&doc)
        }
    };
    emit(args.common.output.as_deref(), &bytes)?;
    Ok(if flat { Status::Numeric } else { Status::Ok })
}

#[derive(Serialize)]
struct ScuStep {
    copies: usize,
    n: usize,
    m: usize,
    adjacency_rho: f64,
    converged: bool,
}

#[derive(Serialize)]
struct ScuReport {
    edge: (usize, usize),
    n: usize,
    m: usize,
    adjacency_rho: f64,
    steps: Vec<ScuStep>,
    monotone: bool,
}

pub fn scu(args: ScuArgs) -> Outcome {
    check_tol(args.tol)?;
    if args.copies == 0 {
        return Err(Failure::input("--copies must be at least 1"));
    }
    let g = load_graph(&args.input)?;
    let edge = match args.edge {
        Some(e) => e,
        None => {
            let bridges = find_bridges(&g)?;
            *g.edges()
                .iter()
                .find(|e| !bridges.contains(e))
                .ok_or_else(|| Failure::input("every edge is a bridge; the graph is a tree"))?
        }
    };
    let base = adjacency_spectral_radius_with(&g, args.tol, DEFAULT_MAX_ITER)?;
    let mut steps = Vec::with_capacity(args.copies);
    let mut last = None;
    for k in 1..=args.copies {
        let t = scu_truncation(&g, edge, k)?;
        let a = adjacency_spectral_radius_with(&t, args.tol, DEFAULT_MAX_ITER)?;
        steps.push(ScuStep {
            copies: k,
            n: t.n(),
            m: t.m(),
            adjacency_rho: a.rho,
            converged: a.converged,
        });
        last = Some(t);
    }
    if let (Some(path), Some(t)) = (&args.graph_output, &last) {
        let mut bytes = Vec::new();
        write_edge_list(t, &mut bytes).expect("writing to memory");
        emit(Some(path), &bytes)?;
    }
    let converged = base.converged && steps.iter().all(|s| s.converged);
    let report = ScuReport {
        edge,
        n: g.n(),
        m: g.m(),
        adjacency_rho: base.rho,
        monotone: steps
            .windows(2)
            .all(|w| w[1].adjacency_rho >= w[0].adjacency_rho - args.tol * w[0].adjacency_rho),
        steps,
    };
    let bytes = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("copies,n,m,adjacency_rho\n");
            for st in &report.steps {
                let _ = writeln!(s, "{},{},{},{}", st.copies, st.n, st.m, st.adjacency_rho);
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!(
                "unrolling along edge {}-{}: rho(A) of the original graph = {:.6}\n\n{:>6} {:>8} {:>8} {:>12}\n",
                edge.0, edge.1, report.adjacency_rho, "copies", "n", "m", "rho(A)"
            );
            for st in &report.steps {
                let _ = writeln!(
                    s,
                    "{:>6} {:>8} {:>8} {:>12.6}",
                    st.copies, st.n, st.m, st.adjacency_rho
                );
            }
            let _ = writeln!(
                s,
                "\nmonotone: {}",
                if report.monotone { "yes" } else { "no" }
            );
            s.into_bytes()
        }
    };
    emit(args.common.output.as_deref(), &bytes)?;
    Ok(if converged {
        Status::Ok
    } else {
        Status::Numeric
    })
}
