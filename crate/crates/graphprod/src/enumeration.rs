//! Finite enumeration: λ-spheres with an ℓ cap, left/right divisors,
//! factorisation sets, empirical FF suprema, unconstrained syllables, and
//! the two-sided cancellation decomposition of products.
//!
//! Everything here is breadth-first by λ over canonical normal forms, so
//! deduplication is exact and output orders are deterministic.

use crate::error::{Error, Result};
use crate::graph::{Clique, PresentationGraph, VertexSet};
use crate::normal_form::{Expression, NormalForm, Syllable};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Finite window of the (generally infinite) group: elements g with
/// λ(g) ≤ `lambda_max` and ℓ(g) ≤ `ell_max`.
///
/// The ℓ cap is what keeps windows over infinite vertex groups finite; for
/// graphs whose vertex groups are all finite it is conventionally set large
/// enough not to bite (`BallSpec::saturating`), so that spheres are the full
/// Λ_k.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallSpec {
    pub lambda_max: usize,
    pub ell_max: u64,
}

impl BallSpec {
    pub fn new(lambda_max: usize, ell_max: u64) -> Self {
        BallSpec { lambda_max, ell_max }
    }

    /// A spec whose ℓ cap cannot exclude any element of λ ≤ `lambda_max`.
    /// Only available when every vertex group is finite.
    pub fn saturating(graph: &PresentationGraph, lambda_max: usize) -> Result<Self> {
        if graph.has_infinite_vertex_group() {
            return Err(Error::Precondition(
                "saturating ball spec requires all vertex groups finite".into(),
            ));
        }
        let max_len = graph
            .groups()
            .iter()
            .map(|g| {
                g.enumerate_up_to_length(u64::MAX)
                    .iter()
                    .map(|&a| g.length(a))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0);
        Ok(BallSpec {
            lambda_max,
            ell_max: max_len * lambda_max as u64,
        })
    }
}

/// The enumerated window: spheres Λ_0, Λ_1, …, Λ_{lambda_max} intersected
/// with {ℓ ≤ ell_max}, each sorted and duplicate-free.
#[derive(Clone, Debug)]
pub struct Ball {
    spec: BallSpec,
    spheres: Vec<Vec<NormalForm>>,
}

impl Ball {
    /// Breadth-first construction: sphere k is obtained by right-multiplying
    /// sphere k−1 by all candidate syllables and keeping the products whose
    /// syllable length grew to k, deduplicated through canonical forms.
    pub fn build(graph: &PresentationGraph, spec: BallSpec) -> Ball {
        let candidates: Vec<Syllable> = (0..graph.vertex_count())
            .flat_map(|v| {
                graph
                    .group(v)
                    .nontrivial_up_to_length(spec.ell_max)
                    .into_iter()
                    .map(move |y| Syllable { vertex: v, value: y })
            })
            .collect();
        let mut spheres = vec![vec![NormalForm::identity()]];
        for k in 1..=spec.lambda_max {
            let mut next: BTreeSet<NormalForm> = BTreeSet::new();
            for g in &spheres[k - 1] {
                for &syl in &candidates {
                    let h = graph.append_syllable(g, syl);
                    if h.syllable_length() == k && h.ell() <= spec.ell_max {
                        next.insert(h);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            spheres.push(next.into_iter().collect());
        }
        Ball { spec, spheres }
    }

    pub fn spec(&self) -> &BallSpec {
        &self.spec
    }

    /// The windowed sphere Λ_k; empty beyond the built range.
    pub fn sphere(&self, k: usize) -> &[NormalForm] {
        self.spheres.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Largest k with a non-empty windowed sphere.
    pub fn last_nonempty_sphere(&self) -> usize {
        self.spheres.len() - 1
    }

    /// True when the breadth-first construction stopped on an empty sphere
    /// before reaching `lambda_max`: every sphere above the last built one
    /// is then genuinely empty within the ℓ window, so the enumeration is
    /// complete at every λ level.
    pub fn is_exhaustive(&self) -> bool {
        self.spheres.len() <= self.spec.lambda_max
    }

    /// Whether the windowed sphere Λ_k is the whole level set of the
    /// window (as opposed to a truncation at `lambda_max`).
    pub fn lambda_level_is_complete(&self, k: usize) -> bool {
        k <= self.spec.lambda_max || self.is_exhaustive()
    }

    pub fn contains(&self, g: &NormalForm) -> bool {
        let k = g.syllable_length();
        k < self.spheres.len() && self.spheres[k].binary_search(g).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &NormalForm> {
        self.spheres.iter().flatten()
    }

    pub fn element_count(&self) -> usize {
        self.spheres.iter().map(Vec::len).sum()
    }

    /// The windowed ℓ-level C_k = {g : ℓ(g) = k}, sorted. Complete as a
    /// subset of the group exactly when `ell_level_is_complete(k)`.
    pub fn level_ell(&self, k: u64) -> Vec<NormalForm> {
        let mut out: Vec<NormalForm> = self.iter().filter(|g| g.ell() == k).cloned().collect();
        out.sort();
        out
    }

    /// Whether every group element with ℓ(g) = k lies inside the window:
    /// since every vertex length is ≥ 1, ℓ(g) = k forces λ(g) ≤ k.
    pub fn ell_level_is_complete(&self, k: u64) -> bool {
        k <= self.spec.ell_max && k <= self.spec.lambda_max as u64
    }

    /// Elements of the window supported inside the clique J (the windowed
    /// G_J). Such elements have λ ≤ |J|, one syllable per used vertex.
    pub fn subgroup_elements(&self, graph: &PresentationGraph, clique: &Clique) -> Vec<NormalForm> {
        let mut out = Vec::new();
        for k in 0..=clique.size().min(self.last_nonempty_sphere()) {
            out.extend(
                self.sphere(k)
                    .iter()
                    .filter(|g| graph.support_in_clique(g, clique))
                    .cloned(),
            );
        }
        out
    }
}

/// Order ideals of the syllable-occurrence dependence poset of `g`, of size
/// `k`, as sorted position lists into `g`'s canonical word. Each ideal is
/// the occurrence set of exactly one left divisor of length k: a position
/// may be taken only if every earlier occurrence it does not commute past
/// was taken too.
pub fn left_divisor_ideals(
    graph: &PresentationGraph,
    g: &NormalForm,
    k: usize,
) -> Vec<Vec<usize>> {
    let word = g.syllables();
    let n = word.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = Vec::with_capacity(k);
    descend(graph, word, 0, k, VertexSet::EMPTY, &mut current, &mut out);
    out
}

fn descend(
    graph: &PresentationGraph,
    word: &[Syllable],
    pos: usize,
    need: usize,
    blocked: VertexSet,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if need == 0 {
        out.push(current.clone());
        return;
    }
    if word.len() - pos < need {
        return;
    }
    let v = word[pos].vertex;
    let can_take = blocked.iter().all(|u| u != v && graph.adjacent(u, v));
    if can_take {
        current.push(pos);
        descend(graph, word, pos + 1, need - 1, blocked, current, out);
        current.pop();
    }
    let mut blocked = blocked;
    blocked.insert(v);
    descend(graph, word, pos + 1, need, blocked, current, out);
}

/// All left divisors h of g with λ(h) = k, sorted. Distinct ideals yield
/// distinct divisors, so no deduplication is required.
pub fn left_divisors(graph: &PresentationGraph, g: &NormalForm, k: usize) -> Vec<NormalForm> {
    let word = g.syllables();
    let mut out: Vec<NormalForm> = left_divisor_ideals(graph, g, k)
        .into_iter()
        .map(|ideal| {
            let sub: Vec<Syllable> = ideal.iter().map(|&i| word[i]).collect();
            let h = graph.reduce(&Expression::from_syllables(sub));
            debug_assert_eq!(h.syllable_length(), k);
            h
        })
        .collect();
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}

/// All right divisors h of g with λ(h) = k: h is a right divisor of g iff
/// h⁻¹ is a left divisor of g⁻¹.
pub fn right_divisors(graph: &PresentationGraph, g: &NormalForm, k: usize) -> Vec<NormalForm> {
    let ginv = graph.invert(g);
    let mut out: Vec<NormalForm> = left_divisors(graph, &ginv, k)
        .iter()
        .map(|h| graph.invert(h))
        .collect();
    out.sort();
    out
}

/// Factors_{k,l}(g): all pairs (g1, g2) with g = g1·g2, λ(g1) = k,
/// λ(g2) = l. Requires λ(g) = k + l.
pub fn factorisations(
    graph: &PresentationGraph,
    g: &NormalForm,
    k: usize,
    l: usize,
) -> Result<Vec<(NormalForm, NormalForm)>> {
    if g.syllable_length() != k + l {
        return Err(Error::Precondition(format!(
            "factorisations requires λ(g) = k + l; got λ(g)={}, k={k}, l={l}",
            g.syllable_length()
        )));
    }
    Ok(left_divisors(graph, g, k)
        .into_iter()
        .map(|g1| {
            let g2 = graph.multiply(&graph.invert(&g1), g);
            debug_assert_eq!(g2.syllable_length(), l);
            (g1, g2)
        })
        .collect())
}

/// One factorisation g = g1 · s · g2 through the clique subgroup G_J with
/// λ(s) = |J| (so s uses every vertex of J exactly once).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorisation {
    pub g1: NormalForm,
    pub s: NormalForm,
    pub g2: NormalForm,
    pub clique: Clique,
}

/// Factors_{k,l}(J, g): all triples (g1, s, g2) with g = g1·s·g2,
/// λ(g1) = k, λ(g2) = l, s ∈ G_J with λ(s) = |J|. Requires
/// λ(g) = k + l + |J|.
pub fn factorisations_clique(
    graph: &PresentationGraph,
    g: &NormalForm,
    k: usize,
    l: usize,
    clique: &Clique,
) -> Result<Vec<Factorisation>> {
    let j = clique.size();
    if g.syllable_length() != k + l + j {
        return Err(Error::Precondition(format!(
            "factorisations_clique requires λ(g) = k + l + |J|; got λ(g)={}, k={k}, l={l}, |J|={j}",
            g.syllable_length()
        )));
    }
    let mut out = Vec::new();
    for g1 in left_divisors(graph, g, k) {
        let rest = graph.multiply(&graph.invert(&g1), g);
        for s in left_divisors(graph, &rest, j) {
            if s.support() != clique.vertex_set() {
                continue;
            }
            let g2 = graph.multiply(&graph.invert(&s), &rest);
            debug_assert_eq!(g2.syllable_length(), l);
            out.push(Factorisation {
                g1: g1.clone(),
                s,
                g2,
                clique: *clique,
            });
        }
    }
    Ok(out)
}

/// Empirical FF_{k,l}(J): the maximum of |Factors_{k,l}(J, g)| over the
/// enumerated window of Λ_{k+l+|J|}. A lower bound for the true
/// supremum over the whole (usually infinite) sphere.
#[derive(Clone, Debug)]
pub struct FfEstimate {
    pub value: u64,
    pub witness: Option<NormalForm>,
}

pub fn ff_empirical(
    graph: &PresentationGraph,
    ball: &Ball,
    k: usize,
    l: usize,
    clique: &Clique,
) -> FfEstimate {
    let mut best = FfEstimate {
        value: 0,
        witness: None,
    };
    for g in ball.sphere(k + l + clique.size()) {
        let count = factorisations_clique(graph, g, k, l, clique)
            .expect("sphere elements satisfy the length precondition")
            .len() as u64;
        if count > best.value {
            best = FfEstimate {
                value: count,
                witness: Some(g.clone()),
            };
        }
    }
    best
}

/// The factorisation-count bound (k+1)^|V| · (|J|+1)^|J|.
pub fn lemma_p1_bound(k: usize, vertex_count: usize, clique_size: usize) -> u128 {
    (k as u128 + 1).pow(vertex_count as u32) * (clique_size as u128 + 1).pow(clique_size as u32)
}

/// Positions p < k (0-indexed) of a reduced word whose vertex group
/// commutes with the vertex groups of all later positions < k. The final
/// position k−1 is always unconstrained.
pub fn unconstrained_syllables(
    graph: &PresentationGraph,
    word: &[Syllable],
    k: usize,
) -> Vec<usize> {
    assert!(k <= word.len(), "k exceeds the word length");
    (0..k)
        .filter(|&p| {
            (p + 1..k).all(|q| {
                let (u, v) = (word[p].vertex, word[q].vertex);
                u != v && graph.adjacent(u, v)
            })
        })
        .collect()
}

/// The two-sided decomposition of a product h1·h2: h1 = g1·s1·w and
/// h2 = w⁻¹·s2·g2, where w is a maximal cancelling part, s1, s2 and s1·s2
/// all have syllable length |J| for a single clique J, and the syllable
/// defect satisfies q = |J| + 2λ(w).
#[derive(Clone, Debug)]
pub struct P2Decomposition {
    pub g1: NormalForm,
    pub s1: NormalForm,
    pub w: NormalForm,
    pub s2: NormalForm,
    pub g2: NormalForm,
    pub clique: Clique,
    pub q: usize,
}

/// Computes a canonical witness for the decomposition. `w` is chosen of
/// maximal syllable length among right divisors of h1 whose inverse left-
/// divides h2; ties, and the choice of (J, s1, s2), break towards the
/// lexicographically least canonical forms.
pub fn p2_decompose(
    graph: &PresentationGraph,
    h1: &NormalForm,
    h2: &NormalForm,
) -> P2Decomposition {
    let product = graph.multiply(h1, h2);
    let q = h1.syllable_length() + h2.syllable_length() - product.syllable_length();

    let mut w = NormalForm::identity();
    let max_j = h1.syllable_length().min(h2.syllable_length()).min(q / 2);
    for j in (0..=max_j).rev() {
        let mut candidates: Vec<NormalForm> = right_divisors(graph, h1, j)
            .into_iter()
            .filter(|cand| graph.is_left_divisor(&graph.invert(cand), h2))
            .collect();
        if !candidates.is_empty() {
            candidates.sort();
            w = candidates.swap_remove(0);
            break;
        }
    }

    let j = w.syllable_length();
    let h1p = graph.multiply(h1, &graph.invert(&w));
    let h2p = graph.multiply(&w, h2);
    debug_assert_eq!(h1p.syllable_length(), h1.syllable_length() - j);
    debug_assert_eq!(h2p.syllable_length(), h2.syllable_length() - j);
    let qp = q - 2 * j;

    if qp == 0 {
        return P2Decomposition {
            g1: h1p,
            s1: NormalForm::identity(),
            w,
            s2: NormalForm::identity(),
            g2: h2p,
            clique: Clique::EMPTY,
            q,
        };
    }

    // No cancellation remains between h1' and h2', so the q' lost syllables
    // are pairwise merges across a single clique: find the canonical pair.
    let mut candidates: Vec<(VertexSet, NormalForm, NormalForm)> = Vec::new();
    for s1 in right_divisors(graph, &h1p, qp) {
        let support = s1.support();
        if support.len() != qp || !graph.is_clique(support) {
            continue;
        }
        for s2 in left_divisors(graph, &h2p, qp) {
            if s2.support() != support {
                continue;
            }
            if graph.multiply(&s1, &s2).syllable_length() == qp {
                candidates.push((support, s1.clone(), s2));
            }
        }
    }
    candidates.sort();
    let (support, s1, s2) = candidates
        .into_iter()
        .next()
        .expect("a merge decomposition must exist once no cancellation remains");
    let clique = graph.clique(support).expect("support was checked");
    let g1 = graph.multiply(&h1p, &graph.invert(&s1));
    let g2 = graph.multiply(&graph.invert(&s2), &h2p);
    P2Decomposition {
        g1,
        s1,
        w,
        s2,
        g2,
        clique,
        q,
    }
}
