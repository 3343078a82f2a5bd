//! Numerical verification of the rapid-decay inequalities: the vanishing
//! condition, trilinear norm estimation, per-clique RD constants, the
//! factorisation-sum bound, and growth-exponent fitting.

use crate::enumeration::{Ball, ff_empirical, lemma_p1_bound};
use crate::error::{Error, Result};
use crate::graph::{Clique, PresentationGraph};
use crate::group_function::{GroupFunction, convolve};
use crate::normal_form::NormalForm;
use crate::rd::tensor::{AlsOptions, MultiplicationTensor, mix};
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Which length function grades the level sets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LevelMode {
    /// Syllable-length spheres Λ_k.
    Lambda,
    /// Weighted-length spheres C_k.
    Ell,
}

impl std::fmt::Display for LevelMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LevelMode::Lambda => write!(f, "lambda"),
            LevelMode::Ell => write!(f, "ell"),
        }
    }
}

/// The windowed level set of the given mode.
pub fn level_set(ball: &Ball, mode: LevelMode, k: u64) -> Vec<NormalForm> {
    match mode {
        LevelMode::Lambda => ball.sphere(k as usize).to_vec(),
        LevelMode::Ell => ball.level_ell(k),
    }
}

// ---------------------------------------------------------------------------
// vanishing condition
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct VanishingViolation {
    pub mode: String,
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub norm: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub trials: usize,
    pub pairs_checked: u64,
    pub max_offband_norm: f64,
    pub violations: Vec<VanishingViolation>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that (φ_k ⋆ ψ_l)_m is identically zero whenever m lies outside
/// [|k−l|, k+l], in both the λ- and ℓ-graded versions, for `trials` random
/// sparsely supported pairs. The check walks the exact support of each
/// convolution, so every off-band level is covered at once and the expected
/// norm is literal zero.
pub fn vanishing_check(
    graph: &PresentationGraph,
    ball: &Ball,
    k_max: u64,
    l_max: u64,
    trials: usize,
    seed: u64,
) -> VanishingReport {
    let elements: Vec<NormalForm> = ball.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VanishingReport {
        trials,
        pairs_checked: 0,
        max_offband_norm: 0.0,
        violations: Vec::new(),
    };
    for _ in 0..trials {
        let phi = random_sparse(&mut rng, &elements, 16);
        let psi = random_sparse(&mut rng, &elements, 16);
        for k in 0..=k_max {
            for l in 0..=l_max {
                for mode in [LevelMode::Lambda, LevelMode::Ell] {
                    let (phi_k, psi_l) = match mode {
                        LevelMode::Lambda => (
                            phi.restrict_by_lambda(k as usize),
                            psi.restrict_by_lambda(l as usize),
                        ),
                        LevelMode::Ell => (phi.restrict_by_ell(k), psi.restrict_by_ell(l)),
                    };
                    if phi_k.is_zero() || psi_l.is_zero() {
                        continue;
                    }
                    report.pairs_checked += 1;
                    let conv = convolve(graph, &phi_k, &psi_l);
                    let lo = k.abs_diff(l);
                    let hi = k + l;
                    // partition the convolution support by level and demand
                    // zero mass outside the band
                    let mut offband: std::collections::BTreeMap<u64, f64> =
                        std::collections::BTreeMap::new();
                    for (g, z) in conv.iter() {
                        let level = match mode {
                            LevelMode::Lambda => g.syllable_length() as u64,
                            LevelMode::Ell => g.ell(),
                        };
                        if level < lo || level > hi {
                            *offband.entry(level).or_insert(0.0) += z.norm_sqr();
                        }
                    }
                    for (m, sq) in offband {
                        let norm = sq.sqrt();
                        report.max_offband_norm = report.max_offband_norm.max(norm);
                        if norm != 0.0 {
                            report.violations.push(VanishingViolation {
                                mode: mode.to_string(),
                                k,
                                l,
                                m,
                                norm,
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

fn random_sparse(
    rng: &mut ChaCha8Rng,
    elements: &[NormalForm],
    max_support: usize,
) -> GroupFunction {
    let size = rng.random_range(1..=max_support.min(elements.len()));
    GroupFunction::from_pairs((0..size).map(|_| {
        let g = elements[rng.random_range(0..elements.len())].clone();
        let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        (g, z)
    }))
}

// ---------------------------------------------------------------------------
// trilinear ratio estimation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct TrilinearEstimate {
    pub ratio: f64,
    /// Set when one of the three level sets was empty in the window.
    pub empty_level: bool,
    pub restarts: usize,
    /// The best feasible pair found, over the level-set indexing.
    #[serde(skip)]
    pub phi: Vec<f64>,
    #[serde(skip)]
    pub psi: Vec<f64>,
}

/// Estimates sup ‖(φ_k ⋆ ψ_l)_m‖₂ over unit ψ (ℓ²) and unit φ — in the ℓ²
/// ball for `sobolev_r = None`, in the Sobolev-r ball with respect to ℓ
/// otherwise — by alternating power iteration on the multiplication tensor
/// of the level sets. The returned value is a certified lower bound of the
/// supremum.
#[allow(clippy::too_many_arguments)]
pub fn trilinear_ratio(
    graph: &PresentationGraph,
    ball: &Ball,
    k: u64,
    l: u64,
    m: u64,
    mode: LevelMode,
    sobolev_r: Option<f64>,
    opts: &AlsOptions,
    seed: u64,
) -> TrilinearEstimate {
    let level_a = level_set(ball, mode, k);
    let level_b = level_set(ball, mode, l);
    let level_c = level_set(ball, mode, m);
    let tensor = MultiplicationTensor::from_levels(
        graph,
        &level_a,
        &level_b,
        &level_c,
        sobolev_r.unwrap_or(0.0),
    );
    let out = tensor.spectral_norm_lower_bound(opts, seed);
    TrilinearEstimate {
        ratio: out.sigma,
        empty_level: out.empty,
        restarts: opts.restarts,
        phi: out.phi,
        psi: out.psi,
    }
}

// ---------------------------------------------------------------------------
// per-clique RD constants
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub enum RdScope {
    FullGroup,
    Clique(Vec<usize>),
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderPoint {
    pub ell_cap: u64,
    pub subgroup_size: usize,
    pub c: f64,
}

/// Empirical RD constants: on the sampled window, every pair (α, β)
/// supported in scope satisfies ‖α⋆β‖₂ ≤ c·‖α‖_{2,r,ℓ}·‖β‖₂. Sufficient
/// for the window that produced them, not proven globally.
#[derive(Clone, Debug, Serialize)]
pub struct RdConstants {
    pub c: f64,
    pub r: f64,
    pub scope: RdScope,
    pub lambda_max: usize,
    pub ell_max: u64,
    pub restarts: usize,
    /// c as a function of the ℓ cap at the chosen r; the stability evidence.
    pub ladder: Vec<LadderPoint>,
}

/// Windowed convolution-norm constant of a set of elements at Sobolev
/// order r: the spectral norm of the multiplication tensor with codomain
/// closed over all pairwise products, so the ℓ² norm of α⋆β is complete.
fn windowed_constant(
    graph: &PresentationGraph,
    elements: &[NormalForm],
    r: f64,
    opts: &AlsOptions,
    seed: u64,
) -> f64 {
    if elements.is_empty() {
        return 0.0;
    }
    let mut products: Vec<NormalForm> = Vec::new();
    for a in elements {
        for b in elements {
            products.push(graph.multiply(a, b));
        }
    }
    products.sort();
    products.dedup();
    let tensor = MultiplicationTensor::from_levels(graph, elements, elements, &products, r);
    tensor.spectral_norm_lower_bound(opts, seed).sigma
}

/// Scans the r grid (ascending) and reports the smallest order whose
/// windowed constant is stable across an ℓ-graded ladder of sub-windows:
/// RD failing at order r shows up as c still growing as the window grows,
/// so stability is judged by the relative growth of c over the upper half
/// of the ladder (subgroups that saturate are flat there).
pub fn clique_rd_constants(
    graph: &PresentationGraph,
    ball: &Ball,
    clique: &Clique,
    r_grid: &[f64],
    opts: &AlsOptions,
    seed: u64,
) -> RdConstants {
    assert!(!r_grid.is_empty(), "r grid must be non-empty");
    let all = ball.subgroup_elements(graph, clique);
    let ell_max = ball.spec().ell_max;

    // one rung per ℓ cap; nested caps with equal counts denote the same set
    let mut rungs: Vec<(u64, Vec<NormalForm>)> = (1..=ell_max)
        .map(|cap| {
            let sub: Vec<NormalForm> = all.iter().filter(|g| g.ell() <= cap).cloned().collect();
            (cap, sub)
        })
        .collect();
    if rungs.is_empty() {
        rungs.push((ell_max, all.clone()));
    }

    const STABLE_TAIL_GROWTH: f64 = 0.1;
    let mut chosen_r = *r_grid.last().unwrap();
    let mut chosen_ladder: Option<Vec<LadderPoint>> = None;
    for (ri, &r) in r_grid.iter().enumerate() {
        let mut by_size: std::collections::HashMap<usize, f64> = std::collections::HashMap::new();
        let ladder: Vec<LadderPoint> = rungs
            .iter()
            .map(|(cap, sub)| {
                let c = *by_size.entry(sub.len()).or_insert_with(|| {
                    windowed_constant(graph, sub, r, opts, mix(seed, mix(ri as u64, *cap)))
                });
                LadderPoint {
                    ell_cap: *cap,
                    subgroup_size: sub.len(),
                    c,
                }
            })
            .collect();
        let stable = if ladder.len() < 3 {
            true
        } else {
            let mid = ladder[ladder.len() / 2].c;
            let last = ladder.last().unwrap().c;
            mid == 0.0 || last <= mid * (1.0 + STABLE_TAIL_GROWTH)
        };
        if stable || ri == r_grid.len() - 1 {
            chosen_r = r;
            chosen_ladder = Some(ladder);
            break;
        }
    }
    let ladder = chosen_ladder.expect("grid is non-empty");
    let c = ladder.last().map(|p| p.c).unwrap_or(0.0).max(1.0);
    RdConstants {
        c,
        r: chosen_r,
        scope: RdScope::Clique(clique.vertices()),
        lambda_max: ball.spec().lambda_max,
        ell_max,
        restarts: opts.restarts,
        ladder,
    }
}

/// (c, r) = (max c_J, max r_J) over the clique catalogue; valid for every
/// clique subgroup at once since the Sobolev norm is monotone in r.
pub fn combined_constants(per_clique: &[RdConstants]) -> (f64, f64) {
    let c = per_clique.iter().map(|k| k.c).fold(1.0, f64::max);
    let r = per_clique.iter().map(|k| k.r).fold(0.0, f64::max);
    (c, r)
}

// ---------------------------------------------------------------------------
// the factorisation-sum bound MF(k,q,l) ≤ Q(k)
// ---------------------------------------------------------------------------

/// MF(k,q,l): the sum over cancellation depths p = 0..⌊q/2⌋ and cliques
/// J ∈ 𝒦_{q−2p} of the empirical FF_{k−q+p, l−q+p}(J); terms with a
/// negative sphere index contribute nothing.
pub fn mf_empirical(graph: &PresentationGraph, ball: &Ball, k: usize, q: usize, l: usize) -> u128 {
    let mut total = 0u128;
    for p in 0..=q / 2 {
        let (Some(kk), Some(ll)) = ((k + p).checked_sub(q), (l + p).checked_sub(q)) else {
            continue;
        };
        for clique in graph.cliques_of_size(q - 2 * p) {
            total += u128::from(ff_empirical(graph, ball, kk, ll, clique).value);
        }
    }
    total
}

/// Q(k): the same double sum with each FF term replaced by the
/// factorisation bound (k+1)^|V| (|J|+1)^|J|.
pub fn mf_bound(graph: &PresentationGraph, k: usize, q: usize, l: usize) -> u128 {
    let mut total = 0u128;
    for p in 0..=q / 2 {
        if (k + p).checked_sub(q).is_none() || (l + p).checked_sub(q).is_none() {
            continue;
        }
        for clique in graph.cliques_of_size(q - 2 * p) {
            total += lemma_p1_bound(k, graph.vertex_count(), clique.size());
        }
    }
    total
}

// ---------------------------------------------------------------------------
// growth fitting
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    pub points_used: usize,
    /// Set when there were too few k ≥ 2 points and the fit fell back to
    /// the whole k range (finite groups have no large-k data).
    pub small_k_fallback: bool,
}

/// Least-squares fit of log(ratio) against log(k+1). Zero ratios (empty
/// levels) are dropped; k ≤ 1 points are excluded unless that leaves too
/// few points to fit.
pub fn fit_growth(points: &[(usize, f64)]) -> Result<GrowthFit> {
    let usable: Vec<(usize, f64)> = points
        .iter()
        .filter(|(_, r)| r.is_finite() && *r > 0.0)
        .copied()
        .collect();
    if usable.is_empty() {
        return Err(Error::DegenerateFit("all ratios are zero".into()));
    }
    let large_k: Vec<(usize, f64)> = usable.iter().filter(|(k, _)| *k >= 2).copied().collect();
    let distinct = |pts: &[(usize, f64)]| {
        let mut ks: Vec<usize> = pts.iter().map(|(k, _)| *k).collect();
        ks.sort_unstable();
        ks.dedup();
        ks.len()
    };
    let (selected, fallback) = if large_k.len() >= 4 && distinct(&large_k) >= 2 {
        (large_k, false)
    } else {
        (usable, true)
    };
    if selected.len() < 4 {
        return Err(Error::NotEnoughData {
            needed: 4,
            got: selected.len(),
        });
    }
    let logpoints: Vec<(f64, f64)> = selected
        .iter()
        .map(|(k, r)| ((*k as f64 + 1.0).ln(), r.ln()))
        .collect();
    let (slope, intercept) = least_squares(&logpoints)
        .ok_or_else(|| Error::DegenerateFit("no variation in k".into()))?;
    let rms = (logpoints
        .iter()
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum::<f64>()
        / logpoints.len() as f64)
        .sqrt();
    Ok(GrowthFit {
        slope,
        intercept,
        rms_residual: rms,
        points_used: selected.len(),
        small_k_fallback: fallback,
    })
}

fn least_squares(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let n = points.len() as f64;
    if points.is_empty() {
        return None;
    }
    let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
    let var: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    if var == 0.0 {
        return None;
    }
    let cov: f64 = points
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = cov / var;
    Some((slope, mean_y - slope * mean_x))
}

// ---------------------------------------------------------------------------
// the proposition scan
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub element: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanViolation {
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub ratio: f64,
    pub bound: f64,
    pub phi: Vec<WitnessEntry>,
    pub psi: Vec<WitnessEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub mode: String,
    pub ratio: f64,
    pub bound: f64,
    pub ratio_over_bound: f64,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyFit {
    /// None: pooled over all plain rows. Some((l−k, m−|k−l|)): one family.
    pub family: Option<(i64, i64)>,
    pub fit: GrowthFit,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub constants: Vec<RdConstants>,
    pub c: f64,
    pub r: f64,
    pub rows: Vec<ScanRow>,
    pub fits: Vec<FamilyFit>,
    pub violations: Vec<ScanViolation>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ScanParams {
    pub k_max: u64,
    pub l_max: u64,
    pub als: AlsOptions,
    /// Random (φ,ψ) pairs folded into each row's estimate through the exact
    /// convolution pipeline.
    pub samples: usize,
    pub r_grid: Vec<f64>,
    pub seed: u64,
}

/// Allowed tolerance when comparing a ratio against its bound: ratios are
/// certified lower bounds, so only accumulated rounding can push a true
/// pass above the bound.
pub const PROPOSITION_TOLERANCE: f64 = 1e-9;

/// One proposition row: estimates the Sobolev-weighted trilinear ratio at
/// (k,l,m) and compares it against the combined clique constant.
#[allow(clippy::too_many_arguments)]
pub fn proposition_check(
    graph: &PresentationGraph,
    ball: &Ball,
    k: u64,
    l: u64,
    m: u64,
    c: f64,
    r: f64,
    opts: &AlsOptions,
    samples: usize,
    seed: u64,
) -> (ScanRow, Option<ScanViolation>) {
    let estimate = trilinear_ratio(
        graph,
        ball,
        k,
        l,
        m,
        LevelMode::Lambda,
        Some(r),
        opts,
        seed,
    );
    let mut best = estimate.ratio;
    let mut witness: Option<(GroupFunction, GroupFunction)> = None;

    // independent random feasible pairs through the exact convolution path
    let level_k = ball.sphere(k as usize).to_vec();
    let level_l = ball.sphere(l as usize).to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, 0xFEED));
    for _ in 0..samples {
        if level_k.is_empty() || level_l.is_empty() {
            break;
        }
        let phi = random_sparse(&mut rng, &level_k, level_k.len().min(12));
        let psi = random_sparse(&mut rng, &level_l, level_l.len().min(12));
        let denom = phi.sobolev_norm(r) * psi.l2_norm();
        if denom == 0.0 {
            continue;
        }
        let ratio = convolve(graph, &phi, &psi)
            .restrict_by_lambda(m as usize)
            .l2_norm()
            / denom;
        if ratio > best {
            best = ratio;
            witness = Some((phi, psi));
        }
    }

    let row = ScanRow {
        k,
        l,
        m,
        mode: "sobolev".into(),
        ratio: best,
        bound: c,
        ratio_over_bound: best / c,
        samples: (opts.restarts + samples) as u64,
        seed,
    };
    let violation = if row.ratio_over_bound > 1.0 + PROPOSITION_TOLERANCE {
        let (phi, psi) = match witness {
            Some((phi, psi)) => (dump_function(&phi), dump_function(&psi)),
            None => (
                dump_vector(&level_k, &estimate.phi),
                dump_vector(&level_l, &estimate.psi),
            ),
        };
        Some(ScanViolation {
            k,
            l,
            m,
            ratio: best,
            bound: c,
            phi,
            psi,
        })
    } else {
        None
    };
    (row, violation)
}

fn dump_function(f: &GroupFunction) -> Vec<WitnessEntry> {
    f.iter()
        .map(|(g, z)| WitnessEntry {
            element: g.to_text(),
            re: z.re,
            im: z.im,
        })
        .collect()
}

fn dump_vector(level: &[NormalForm], values: &[f64]) -> Vec<WitnessEntry> {
    level
        .iter()
        .zip(values)
        .filter(|&(_, &x)| x != 0.0)
        .map(|(g, &x)| WitnessEntry {
            element: g.to_text(),
            re: x,
            im: 0.0,
        })
        .collect()
}

/// The full scan: per-clique constants, one plain and one Sobolev row per
/// admissible (k, l, m), growth fits of the plain ratios, and the list of
/// proposition violations (expected empty). Deterministic for a fixed seed.
pub fn rd_scan(graph: &PresentationGraph, ball: &Ball, params: &ScanParams) -> Result<ScanReport> {
    let window = ball.spec();
    if !ball.lambda_level_is_complete((params.k_max + params.l_max) as usize) {
        return Err(Error::WindowExceeded {
            what: "k_max + l_max (products reach beyond lambda_max)".into(),
            requested: params.k_max + params.l_max,
            max: window.lambda_max as u64,
        });
    }
    let constants: Vec<RdConstants> = graph
        .cliques()
        .iter()
        .enumerate()
        .map(|(i, clique)| {
            clique_rd_constants(
                graph,
                ball,
                clique,
                &params.r_grid,
                &params.als,
                mix(params.seed, 1000 + i as u64),
            )
        })
        .collect();
    let (c, r) = combined_constants(&constants);

    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for k in 0..=params.k_max {
        for l in 0..=params.l_max {
            for m in k.abs_diff(l)..=(k + l) {
                let seed_plain = mix(params.seed, mix(k, mix(l, mix(m, 1))));
                let plain = trilinear_ratio(
                    graph,
                    ball,
                    k,
                    l,
                    m,
                    LevelMode::Lambda,
                    None,
                    &params.als,
                    seed_plain,
                );
                rows.push(ScanRow {
                    k,
                    l,
                    m,
                    mode: "plain".into(),
                    ratio: plain.ratio,
                    bound: c,
                    ratio_over_bound: plain.ratio / c,
                    samples: params.als.restarts as u64,
                    seed: seed_plain,
                });
                let seed_sob = mix(params.seed, mix(k, mix(l, mix(m, 2))));
                let (row, violation) = proposition_check(
                    graph,
                    ball,
                    k,
                    l,
                    m,
                    c,
                    r,
                    &params.als,
                    params.samples,
                    seed_sob,
                );
                rows.push(row);
                violations.extend(violation);
            }
        }
    }

    let plain_points = |filter: &dyn Fn(&ScanRow) -> bool| -> Vec<(usize, f64)> {
        rows.iter()
            .filter(|row| row.mode == "plain" && filter(row))
            .map(|row| (row.k as usize, row.ratio))
            .collect()
    };
    let mut fits = Vec::new();
    if let Ok(fit) = fit_growth(&plain_points(&|_| true)) {
        fits.push(FamilyFit { family: None, fit });
    }
    let mut families: Vec<(i64, i64)> = rows
        .iter()
        .filter(|row| row.mode == "plain")
        .map(|row| {
            (
                row.l as i64 - row.k as i64,
                row.m as i64 - (row.k as i64 - row.l as i64).abs(),
            )
        })
        .collect();
    families.sort();
    families.dedup();
    for family in families {
        let points = plain_points(&|row: &ScanRow| {
            row.l as i64 - row.k as i64 == family.0
                && row.m as i64 - (row.k as i64 - row.l as i64).abs() == family.1
        });
        if let Ok(fit) = fit_growth(&points) {
            fits.push(FamilyFit {
                family: Some(family),
                fit,
            });
        }
    }

    Ok(ScanReport {
        constants,
        c,
        r,
        rows,
        fits,
        violations,
    })
}
