//! Workbench CLI: loads a config, dispatches one subcommand, writes JSON or
//! CSV artifacts to the output directory and a summary to stdout.
//!
//! Exit codes: 0 on success, 1 when a verification subcommand found a
//! violation, 2 on errors (bad config, parse errors, precondition failures).

mod config;
mod output;

use anyhow::{Context, Result, anyhow, bail};
use clap::{Parser, Subcommand};
use config::{OutputFormat, WorkbenchConfig};
use graphprod::enumeration::{
    Ball, BallSpec, factorisations, factorisations_clique, ff_empirical, left_divisor_ideals,
    left_divisors, lemma_p1_bound, p2_decompose, right_divisors,
};
use graphprod::rd::{
    AlsOptions, ScanParams, clique_rd_constants, mix, rd_scan, vanishing_check,
};
use graphprod::{NormalForm, PresentationGraph};
use output::{OutDir, real};
use serde::Serialize;
use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "graphprod",
    version,
    about = "Graph products of groups: normal forms, factorisations, and rapid-decay checks"
)]
struct Cli {
    /// Workbench config file
    #[arg(long, value_name = "PATH")]
    config: PathBuf,

    /// Output directory (overrides the config)
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Random seed (overrides the config)
    #[arg(long)]
    seed: Option<u64>,

    /// Worker threads (defaults to machine parallelism)
    #[arg(long)]
    threads: Option<usize>,

    /// Artifact format (overrides the config)
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form, λ and ℓ of an expression
    NormalForm { expr: String },
    /// List the windowed sphere Λ_k
    Sphere { k: usize },
    /// List the length-k divisors of an element
    Divisors {
        expr: String,
        k: usize,
        /// left or right divisors
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// List Factors_{k,l}(g), optionally through a clique subgroup
    Factor {
        expr: String,
        k: usize,
        l: usize,
        /// comma-separated vertex ids, e.g. --clique 0,2
        #[arg(long)]
        clique: Option<String>,
    },
    /// Decompose a product h1·h2 into g1·s1·w · w⁻¹·s2·g2
    P2 { expr1: String, expr2: String },
    /// Exhaustively check the factorisation bound, FF symmetry and
    /// unconstrained-syllable injectivity on the window
    VerifyLemma1,
    /// Exhaustively check the two-sided decomposition on window pairs
    VerifyLemma2,
    /// Check that off-band restricted convolutions vanish identically
    Vanishing,
    /// Full scan: clique constants, trilinear ratios, growth fits
    RdScan,
    /// Report empirical RD constants per clique subgroup
    CliqueConstants,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Side {
    Left,
    Right,
}

struct Workbench {
    graph: PresentationGraph,
    spec: BallSpec,
    rd: config::RdConfig,
    out: OutDir,
    format: OutputFormat,
    seed: u64,
}

impl Workbench {
    fn ball(&self) -> Ball {
        Ball::build(&self.graph, self.spec)
    }

    fn parse(&self, expr: &str) -> Result<NormalForm> {
        Ok(self.graph.parse_normal_form(expr)?)
    }

    fn als_options(&self) -> AlsOptions {
        AlsOptions {
            restarts: self.rd.restarts,
            max_iters: self.rd.max_iters,
            tol: self.rd.tol,
        }
    }

    fn check_window(&self, what: &str, requested: u64, max: u64) -> Result<()> {
        if requested > max {
            bail!(
                "window too small for {what}: requested {requested}, enumerated {max}; \
                 raise ball.lambda_max / ball.ell_max instead of truncating silently"
            );
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build();
            match pool {
                Ok(pool) => pool.install(|| run(&cli)),
                Err(e) => Err(anyhow!(e)),
            }
        }
        None => run(&cli),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let config = WorkbenchConfig::load(&cli.config)?;
    let graph = config.build_graph()?;
    let spec = config.ball_spec(&graph)?;
    let out_dir = cli.out.clone().unwrap_or_else(|| config.output.dir.clone());
    let bench = Workbench {
        graph,
        spec,
        rd: config.rd.clone(),
        out: OutDir::create(&out_dir)?,
        format: cli.format.unwrap_or(config.output.format),
        seed: cli.seed.unwrap_or(config.rd.seed),
    };
    match &cli.command {
        Command::NormalForm { expr } => cmd_normal_form(&bench, expr),
        Command::Sphere { k } => cmd_sphere(&bench, *k),
        Command::Divisors { expr, k, side } => cmd_divisors(&bench, expr, *k, *side),
        Command::Factor { expr, k, l, clique } => {
            cmd_factor(&bench, expr, *k, *l, clique.as_deref())
        }
        Command::P2 { expr1, expr2 } => cmd_p2(&bench, expr1, expr2),
        Command::VerifyLemma1 => cmd_verify_lemma1(&bench),
        Command::VerifyLemma2 => cmd_verify_lemma2(&bench),
        Command::Vanishing => cmd_vanishing(&bench),
        Command::RdScan => cmd_rd_scan(&bench),
        Command::CliqueConstants => cmd_clique_constants(&bench),
    }
}

fn display(g: &NormalForm) -> String {
    if g.is_identity() {
        "(identity)".into()
    } else {
        g.to_text()
    }
}

#[derive(Serialize)]
struct NormalFormReport {
    input: String,
    canonical: String,
    lambda: usize,
    ell: u64,
}

fn cmd_normal_form(bench: &Workbench, expr: &str) -> Result<bool> {
    let g = bench.parse(expr)?;
    let report = NormalFormReport {
        input: expr.to_string(),
        canonical: g.to_text(),
        lambda: g.syllable_length(),
        ell: g.ell(),
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("normal_form", &report)?,
        OutputFormat::Csv => bench.out.write_csv(
            "normal_form",
            &["input", "canonical", "lambda", "ell"],
            &[vec![
                report.input.clone(),
                report.canonical.clone(),
                report.lambda.to_string(),
                report.ell.to_string(),
            ]],
        )?,
    };
    println!(
        "normal form: {}  (lambda = {}, ell = {})",
        display(&g),
        g.syllable_length(),
        g.ell()
    );
    Ok(true)
}

fn element_rows(elements: &[NormalForm]) -> Vec<Vec<String>> {
    elements
        .iter()
        .map(|g| {
            vec![
                g.to_text(),
                g.syllable_length().to_string(),
                g.ell().to_string(),
            ]
        })
        .collect()
}

#[derive(Serialize)]
struct ElementReport {
    element: String,
    lambda: usize,
    ell: u64,
}

fn element_report(elements: &[NormalForm]) -> Vec<ElementReport> {
    elements
        .iter()
        .map(|g| ElementReport {
            element: g.to_text(),
            lambda: g.syllable_length(),
            ell: g.ell(),
        })
        .collect()
}

fn cmd_sphere(bench: &Workbench, k: usize) -> Result<bool> {
    let ball = bench.ball();
    if !ball.lambda_level_is_complete(k) {
        bench.check_window("sphere level", k as u64, bench.spec.lambda_max as u64)?;
    }
    let sphere = ball.sphere(k);
    let name = format!("sphere_{k}");
    match bench.format {
        OutputFormat::Json => bench.out.write_json(&name, &element_report(sphere))?,
        OutputFormat::Csv => {
            bench
                .out
                .write_csv(&name, &["element", "lambda", "ell"], &element_rows(sphere))?
        }
    };
    println!(
        "sphere λ = {k} within window (lambda_max = {}, ell_max = {}): {} elements",
        bench.spec.lambda_max,
        bench.spec.ell_max,
        sphere.len()
    );
    Ok(true)
}

fn cmd_divisors(bench: &Workbench, expr: &str, k: usize, side: Side) -> Result<bool> {
    let g = bench.parse(expr)?;
    if k > g.syllable_length() {
        bail!(
            "divisor length k = {k} exceeds lambda(g) = {}",
            g.syllable_length()
        );
    }
    let divisors = match side {
        Side::Left => left_divisors(&bench.graph, &g, k),
        Side::Right => right_divisors(&bench.graph, &g, k),
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("divisors", &element_report(&divisors))?,
        OutputFormat::Csv => bench.out.write_csv(
            "divisors",
            &["element", "lambda", "ell"],
            &element_rows(&divisors),
        )?,
    };
    println!(
        "{:?} divisors of {} with lambda = {k}: {}",
        side,
        display(&g),
        divisors.len()
    );
    for d in &divisors {
        println!("  {}", display(d));
    }
    Ok(true)
}

#[derive(Serialize)]
struct FactorReport {
    g1: String,
    s: String,
    g2: String,
}

fn cmd_factor(bench: &Workbench, expr: &str, k: usize, l: usize, clique: Option<&str>) -> Result<bool> {
    let g = bench.parse(expr)?;
    let triples: Vec<FactorReport> = match clique {
        None => factorisations(&bench.graph, &g, k, l)?
            .into_iter()
            .map(|(g1, g2)| FactorReport {
                g1: g1.to_text(),
                s: String::new(),
                g2: g2.to_text(),
            })
            .collect(),
        Some(text) => {
            let vertices = parse_vertex_list(text)?;
            let clique = bench.graph.clique_from_vertices(vertices)?;
            factorisations_clique(&bench.graph, &g, k, l, &clique)?
                .into_iter()
                .map(|f| FactorReport {
                    g1: f.g1.to_text(),
                    s: f.s.to_text(),
                    g2: f.g2.to_text(),
                })
                .collect()
        }
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("factor", &triples)?,
        OutputFormat::Csv => bench.out.write_csv(
            "factor",
            &["g1", "s", "g2"],
            &triples
                .iter()
                .map(|f| vec![f.g1.clone(), f.s.clone(), f.g2.clone()])
                .collect::<Vec<_>>(),
        )?,
    };
    println!(
        "factorisations of {} with (k, l) = ({k}, {l}){}: {}",
        display(&g),
        clique.map(|c| format!(", clique {{{c}}}")).unwrap_or_default(),
        triples.len()
    );
    Ok(true)
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad vertex id `{t}` in clique list"))
        })
        .collect()
}

#[derive(Serialize)]
struct P2Report {
    h1: String,
    h2: String,
    g1: String,
    s1: String,
    w: String,
    s2: String,
    g2: String,
    clique: Vec<usize>,
    q: usize,
}

fn cmd_p2(bench: &Workbench, expr1: &str, expr2: &str) -> Result<bool> {
    let h1 = bench.parse(expr1)?;
    let h2 = bench.parse(expr2)?;
    let d = p2_decompose(&bench.graph, &h1, &h2);
    let report = P2Report {
        h1: h1.to_text(),
        h2: h2.to_text(),
        g1: d.g1.to_text(),
        s1: d.s1.to_text(),
        w: d.w.to_text(),
        s2: d.s2.to_text(),
        g2: d.g2.to_text(),
        clique: d.clique.vertices(),
        q: d.q,
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("p2", &report)?,
        OutputFormat::Csv => bench.out.write_csv(
            "p2",
            &["h1", "h2", "g1", "s1", "w", "s2", "g2", "clique", "q"],
            &[vec![
                report.h1.clone(),
                report.h2.clone(),
                report.g1.clone(),
                report.s1.clone(),
                report.w.clone(),
                report.s2.clone(),
                report.g2.clone(),
                report
                    .clique
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                report.q.to_string(),
            ]],
        )?,
    };
    println!("h1 = g1·s1·w  with g1 = {}, s1 = {}, w = {}", display(&d.g1), display(&d.s1), display(&d.w));
    println!("h2 = w⁻¹·s2·g2 with s2 = {}, g2 = {}", display(&d.s2), display(&d.g2));
    println!(
        "clique J = {{{}}}, q = {} = |J| + 2·lambda(w)",
        d.clique
            .vertices()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(","),
        d.q
    );
    Ok(true)
}

#[derive(Serialize)]
struct Lemma1Row {
    clique: Vec<usize>,
    k: usize,
    l: usize,
    ff: u64,
    bound: u128,
    ok: bool,
}

#[derive(Serialize)]
struct Lemma1Report {
    rows: Vec<Lemma1Row>,
    ff_symmetric: bool,
    injective: bool,
    violations: usize,
}

fn cmd_verify_lemma1(bench: &Workbench) -> Result<bool> {
    let graph = &bench.graph;
    let ball = bench.ball();
    let (k_max, l_max) = (bench.rd.k_max as usize, bench.rd.l_max as usize);
    let target = k_max + l_max + graph.max_clique_size();
    if !ball.lambda_level_is_complete(target) {
        bench.check_window(
            "factorisation targets k_max + l_max + max clique",
            target as u64,
            bench.spec.lambda_max as u64,
        )?;
    }
    let mut rows = Vec::new();
    let mut ff_symmetric = true;
    let mut violations = 0;
    for clique in graph.cliques() {
        for k in 0..=k_max {
            for l in 0..=l_max {
                let ff = ff_empirical(graph, &ball, k, l, clique);
                let bound = lemma_p1_bound(k, graph.vertex_count(), clique.size());
                let ok = u128::from(ff.value) <= bound;
                if !ok {
                    violations += 1;
                }
                let mirrored = ff_empirical(graph, &ball, l, k, clique);
                if ff.value != mirrored.value {
                    ff_symmetric = false;
                    violations += 1;
                }
                rows.push(Lemma1Row {
                    clique: clique.vertices(),
                    k,
                    l,
                    ff: ff.value,
                    bound,
                    ok,
                });
            }
        }
    }

    // injectivity of the unconstrained-syllable map on every windowed element
    let mut injective = true;
    'outer: for g in ball.iter() {
        let word = g.syllables();
        for k in 0..=g.syllable_length() {
            let mut seen: HashMap<Vec<usize>, NormalForm> = HashMap::new();
            for ideal in left_divisor_ideals(graph, g, k) {
                let divisor = graph.reduce(&graphprod::Expression::from_syllables(
                    ideal.iter().map(|&i| word[i]).collect(),
                ));
                let unconstrained: Vec<usize> = ideal
                    .iter()
                    .enumerate()
                    .filter(|&(i, &p)| {
                        ideal[i + 1..].iter().all(|&q| {
                            let (u, v) = (word[p].vertex, word[q].vertex);
                            u != v && graph.adjacent(u, v)
                        })
                    })
                    .map(|(_, &p)| p)
                    .collect();
                if let Some(prev) = seen.insert(unconstrained, divisor.clone())
                    && prev != divisor
                {
                    injective = false;
                    violations += 1;
                    break 'outer;
                }
            }
        }
    }

    let report = Lemma1Report {
        rows,
        ff_symmetric,
        injective,
        violations,
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("verify_lemma1", &report)?,
        OutputFormat::Csv => bench.out.write_csv(
            "verify_lemma1",
            &["clique", "k", "l", "ff", "bound", "ok"],
            &report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.clique
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(";"),
                        r.k.to_string(),
                        r.l.to_string(),
                        r.ff.to_string(),
                        r.bound.to_string(),
                        r.ok.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    };
    println!(
        "factorisation bound rows: {}, FF symmetric: {}, unconstrained-syllable map injective: {}, violations: {}",
        report.rows.len(),
        report.ff_symmetric,
        report.injective,
        report.violations
    );
    Ok(report.violations == 0)
}

#[derive(Serialize)]
struct Lemma2Report {
    pairs_checked: u64,
    q_histogram: Vec<(usize, u64)>,
    violations: u64,
}

fn cmd_verify_lemma2(bench: &Workbench) -> Result<bool> {
    let graph = &bench.graph;
    let ball = bench.ball();
    let cap = bench.rd.p2_max.min(bench.spec.lambda_max);
    let elements: Vec<NormalForm> = (0..=cap)
        .flat_map(|k| ball.sphere(k).to_vec())
        .collect();
    let mut histogram: HashMap<usize, u64> = HashMap::new();
    let mut violations = 0u64;
    let mut pairs = 0u64;
    for h1 in &elements {
        for h2 in &elements {
            pairs += 1;
            let d = p2_decompose(graph, h1, h2);
            let ok = graph.multiply(&graph.multiply(&d.g1, &d.s1), &d.w) == *h1
                && graph.multiply(&graph.multiply(&graph.invert(&d.w), &d.s2), &d.g2) == *h2
                && d.s1.syllable_length() == d.clique.size()
                && d.s2.syllable_length() == d.clique.size()
                && graph.multiply(&d.s1, &d.s2).syllable_length() == d.clique.size()
                && d.q == d.clique.size() + 2 * d.w.syllable_length();
            if !ok {
                violations += 1;
            }
            *histogram.entry(d.q).or_insert(0) += 1;
        }
    }
    let mut q_histogram: Vec<(usize, u64)> = histogram.into_iter().collect();
    q_histogram.sort();
    let report = Lemma2Report {
        pairs_checked: pairs,
        q_histogram,
        violations,
    };
    match bench.format {
        OutputFormat::Json => bench.out.write_json("verify_lemma2", &report)?,
        OutputFormat::Csv => bench.out.write_csv(
            "verify_lemma2",
            &["q", "pairs"],
            &report
                .q_histogram
                .iter()
                .map(|(q, n)| vec![q.to_string(), n.to_string()])
                .collect::<Vec<_>>(),
        )?,
    };
    println!(
        "decomposition checked on {} pairs (lambda ≤ {cap}), violations: {}",
        report.pairs_checked, report.violations
    );
    Ok(report.violations == 0)
}

fn cmd_vanishing(bench: &Workbench) -> Result<bool> {
    let ball = bench.ball();
    let report = vanishing_check(
        &bench.graph,
        &ball,
        bench.rd.k_max,
        bench.rd.l_max,
        bench.rd.trials,
        bench.seed,
    );
    match bench.format {
        OutputFormat::Json => bench.out.write_json("vanishing", &report)?,
        OutputFormat::Csv => bench.out.write_csv(
            "vanishing",
            &["mode", "k", "l", "m", "norm"],
            &report
                .violations
                .iter()
                .map(|v| {
                    vec![
                        v.mode.clone(),
                        v.k.to_string(),
                        v.l.to_string(),
                        v.m.to_string(),
                        real(v.norm),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    };
    println!(
        "vanishing: {} restricted pairs checked over {} random (φ,ψ), max off-band norm = {}, violations: {}",
        report.pairs_checked,
        report.trials,
        real(report.max_offband_norm),
        report.violations.len()
    );
    Ok(report.passed())
}

fn scan_params(bench: &Workbench) -> ScanParams {
    ScanParams {
        k_max: bench.rd.k_max,
        l_max: bench.rd.l_max,
        als: bench.als_options(),
        samples: bench.rd.samples,
        r_grid: bench.rd.r_grid.clone(),
        seed: bench.seed,
    }
}

fn cmd_rd_scan(bench: &Workbench) -> Result<bool> {
    let ball = bench.ball();
    let report = rd_scan(&bench.graph, &ball, &scan_params(bench))?;
    match bench.format {
        OutputFormat::Json => {
            bench.out.write_json("rd_scan", &report)?;
        }
        OutputFormat::Csv => {
            bench.out.write_csv(
                "rd_scan",
                &[
                    "k",
                    "l",
                    "m",
                    "mode",
                    "ratio",
                    "bound",
                    "ratio_over_bound",
                    "samples",
                    "seed",
                ],
                &report
                    .rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.k.to_string(),
                            r.l.to_string(),
                            r.m.to_string(),
                            r.mode.clone(),
                            real(r.ratio),
                            real(r.bound),
                            real(r.ratio_over_bound),
                            r.samples.to_string(),
                            r.seed.to_string(),
                        ]
                    })
                    .collect::<Vec<_>>(),
            )?;
            bench.out.write_csv(
                "rd_scan_fits",
                &["family_l_minus_k", "family_m_offset", "slope", "intercept", "rms_residual", "points", "small_k_fallback"],
                &report
                    .fits
                    .iter()
                    .map(|f| {
                        let (a, b) = match f.family {
                            Some((a, b)) => (a.to_string(), b.to_string()),
                            None => ("pooled".into(), "pooled".into()),
                        };
                        vec![
                            a,
                            b,
                            real(f.fit.slope),
                            real(f.fit.intercept),
                            real(f.fit.rms_residual),
                            f.fit.points_used.to_string(),
                            f.fit.small_k_fallback.to_string(),
                        ]
                    })
                    .collect::<Vec<_>>(),
            )?;
            write_constants_csv(bench, &report.constants)?;
        }
    };
    let worst = report
        .rows
        .iter()
        .filter(|r| r.mode == "sobolev")
        .map(|r| r.ratio_over_bound)
        .fold(0.0, f64::max);
    println!(
        "scan: {} rows, c = {}, r = {}, worst sobolev ratio/bound = {}, violations: {}",
        report.rows.len(),
        real(report.c),
        report.r,
        real(worst),
        report.violations.len()
    );
    for fit in &report.fits {
        match fit.family {
            None => println!(
                "  pooled plain-ratio fit: slope {:+.4} over {} points{}",
                fit.fit.slope,
                fit.fit.points_used,
                if fit.fit.small_k_fallback { " (small-k fallback)" } else { "" }
            ),
            Some((dk, dm)) => println!(
                "  family (l-k = {dk}, m-|k-l| = {dm}): slope {:+.4} over {} points",
                fit.fit.slope, fit.fit.points_used
            ),
        }
    }
    Ok(report.passed())
}

fn write_constants_csv(
    bench: &Workbench,
    constants: &[graphprod::rd::RdConstants],
) -> Result<()> {
    bench.out.write_csv(
        "clique_constants",
        &["clique", "c", "r", "lambda_max", "ell_max", "restarts"],
        &constants
            .iter()
            .map(|k| {
                let scope = match &k.scope {
                    graphprod::rd::RdScope::FullGroup => "full".to_string(),
                    graphprod::rd::RdScope::Clique(v) => v
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(";"),
                };
                vec![
                    scope,
                    real(k.c),
                    real(k.r),
                    k.lambda_max.to_string(),
                    k.ell_max.to_string(),
                    k.restarts.to_string(),
                ]
            })
            .collect::<Vec<_>>(),
    )?;
    Ok(())
}

fn cmd_clique_constants(bench: &Workbench) -> Result<bool> {
    let ball = bench.ball();
    let opts = bench.als_options();
    let constants: Vec<graphprod::rd::RdConstants> = bench
        .graph
        .cliques()
        .iter()
        .enumerate()
        .map(|(i, clique)| {
            clique_rd_constants(
                &bench.graph,
                &ball,
                clique,
                &bench.rd.r_grid,
                &opts,
                mix(bench.seed, 1000 + i as u64),
            )
        })
        .collect();
    match bench.format {
        OutputFormat::Json => {
            bench.out.write_json("clique_constants", &constants)?;
        }
        OutputFormat::Csv => write_constants_csv(bench, &constants)?,
    };
    for k in &constants {
        let scope = match &k.scope {
            graphprod::rd::RdScope::FullGroup => "full group".to_string(),
            graphprod::rd::RdScope::Clique(v) if v.is_empty() => "J = {}".to_string(),
            graphprod::rd::RdScope::Clique(v) => format!(
                "J = {{{}}}",
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
        };
        println!("{scope}: c = {}, r = {}", real(k.c), k.r);
    }
    Ok(true)
}
