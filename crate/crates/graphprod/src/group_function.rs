//! Finitely supported complex functions on the group: restrictions,
//! sparse convolution (full group and clique subgroup), ℓ²/Sobolev norms,
//! and the one-sided square-summed projections used by the norm estimates.
//!
//! Supports are ordered maps keyed by canonical normal forms, so equality
//! of keys is exact and every iteration (hence every floating-point
//! accumulation) happens in one deterministic order.

use crate::enumeration::{Ball, left_divisors};
use crate::error::{Error, Result};
use crate::graph::{Clique, PresentationGraph};
use crate::normal_form::NormalForm;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// An element of ℂG with finite support. Explicit zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GroupFunction {
    values: BTreeMap<NormalForm, Complex64>,
}

impl GroupFunction {
    pub fn zero() -> Self {
        GroupFunction::default()
    }

    /// The delta function at `g`.
    pub fn delta(g: NormalForm) -> Self {
        let mut values = BTreeMap::new();
        values.insert(g, Complex64::new(1.0, 0.0));
        GroupFunction { values }
    }

    pub fn from_pairs<I: IntoIterator<Item = (NormalForm, Complex64)>>(pairs: I) -> Self {
        let mut values = BTreeMap::new();
        for (g, z) in pairs {
            if z != ZERO {
                *values.entry(g).or_insert(ZERO) += z;
            }
        }
        values.retain(|_, z| *z != ZERO);
        GroupFunction { values }
    }

    pub fn get(&self, g: &NormalForm) -> Complex64 {
        self.values.get(g).copied().unwrap_or(ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NormalForm, &Complex64)> {
        self.values.iter()
    }

    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, a: Complex64) -> Self {
        GroupFunction::from_pairs(self.values.iter().map(|(g, z)| (g.clone(), z * a)))
    }

    /// Pointwise restriction to the ℓ-level {g : ℓ(g) = k}.
    pub fn restrict_by_ell(&self, k: u64) -> Self {
        GroupFunction {
            values: self
                .values
                .iter()
                .filter(|(g, _)| g.ell() == k)
                .map(|(g, z)| (g.clone(), *z))
                .collect(),
        }
    }

    /// Pointwise restriction to the λ-sphere {g : λ(g) = k}.
    pub fn restrict_by_lambda(&self, k: usize) -> Self {
        GroupFunction {
            values: self
                .values
                .iter()
                .filter(|(g, _)| g.syllable_length() == k)
                .map(|(g, z)| (g.clone(), *z))
                .collect(),
        }
    }

    pub fn l1_norm(&self) -> f64 {
        self.values.values().map(|z| z.norm()).sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.values
            .values()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Sobolev norm of order r with respect to ℓ:
    /// sqrt( Σ |φ(g)|² (1 + ℓ(g))^{2r} ).
    pub fn sobolev_norm(&self, r: f64) -> f64 {
        assert!(r >= 0.0, "Sobolev order must be nonnegative");
        self.values
            .iter()
            .map(|(g, z)| z.norm_sqr() * (1.0 + g.ell() as f64).powf(2.0 * r))
            .sum::<f64>()
            .sqrt()
    }

    /// Sobolev norm with respect to ℓ_J on a clique subgroup; ℓ restricts
    /// to ℓ_J on G_J, so the weight is the same once the support is
    /// verified to lie in G_J.
    pub fn sobolev_norm_clique(
        &self,
        graph: &PresentationGraph,
        r: f64,
        clique: &Clique,
    ) -> Result<f64> {
        self.check_support_in_clique(graph, clique)?;
        Ok(self.sobolev_norm(r))
    }

    fn check_support_in_clique(&self, graph: &PresentationGraph, clique: &Clique) -> Result<()> {
        if self
            .values
            .keys()
            .all(|g| graph.support_in_clique(g, clique))
        {
            Ok(())
        } else {
            Err(Error::SupportOutsideClique {
                clique: clique.vertices(),
            })
        }
    }

    fn check_support_in_sphere(&self, ball: &Ball, k: usize) -> Result<()> {
        for g in self.values.keys() {
            if g.syllable_length() != k || !ball.contains(g) {
                return Err(Error::SupportOutsideWindow(format!(
                    "expected support inside the windowed Λ_{k}, found {g}"
                )));
            }
        }
        Ok(())
    }

    /// The interchange representation: one record per support element,
    /// in canonical order. Serializes to the wire schema
    /// `[{element, re, im}, …]` (or CSV with the same columns).
    pub fn to_records(&self) -> Vec<GroupFunctionRecord> {
        self.values
            .iter()
            .map(|(g, z)| GroupFunctionRecord {
                element: g.to_text(),
                re: z.re,
                im: z.im,
            })
            .collect()
    }

    /// Rebuilds a function from records, validating every element literal
    /// against the graph. Values at equal elements accumulate.
    pub fn from_records(
        graph: &PresentationGraph,
        records: &[GroupFunctionRecord],
    ) -> Result<GroupFunction> {
        let mut pairs = Vec::with_capacity(records.len());
        for record in records {
            let g = graph.parse_normal_form(&record.element)?;
            pairs.push((g, Complex64::new(record.re, record.im)));
        }
        Ok(GroupFunction::from_pairs(pairs))
    }
}

/// One row of the serialized form of a [`GroupFunction`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupFunctionRecord {
    pub element: String,
    pub re: f64,
    pub im: f64,
}

/// Sparse convolution φ*ψ(g) = Σ_h φ(h) ψ(h⁻¹g), exact over the product
/// of the supports.
pub fn convolve(
    graph: &PresentationGraph,
    phi: &GroupFunction,
    psi: &GroupFunction,
) -> GroupFunction {
    let mut acc: BTreeMap<NormalForm, Complex64> = BTreeMap::new();
    for (h, a) in phi.iter() {
        for (x, b) in psi.iter() {
            let g = graph.multiply(h, x);
            *acc.entry(g).or_insert(ZERO) += a * b;
        }
    }
    acc.retain(|_, z| *z != ZERO);
    GroupFunction { values: acc }
}

/// Convolution inside the clique subgroup G_J. Validates that both supports
/// lie in G_J; the sum then agrees with the full-group convolution because
/// G_J is closed under multiplication.
pub fn convolve_in_clique(
    graph: &PresentationGraph,
    alpha: &GroupFunction,
    beta: &GroupFunction,
    clique: &Clique,
) -> Result<GroupFunction> {
    alpha.check_support_in_clique(graph, clique)?;
    beta.check_support_in_clique(graph, clique)?;
    Ok(convolve(graph, alpha, beta))
}

/// φ^{(p)}_{(k−p)}(u) = sqrt( Σ_{w ∈ Λ_p} |φ_{(k)}(u·w)|² ), supported on
/// Λ_{k−p}. Computed by summing |φ(h)|² over the length-(k−p) left divisors
/// u of each support element h, which equals the defining sum over the
/// enumerated Λ_p because φ must be supported inside the window's Λ_k
/// (divisors of window elements stay inside the window).
pub fn derived_right(
    graph: &PresentationGraph,
    ball: &Ball,
    phi: &GroupFunction,
    k: usize,
    p: usize,
) -> Result<GroupFunction> {
    if p > k {
        return Err(Error::Precondition(format!("derived function needs p <= k, got p={p}, k={k}")));
    }
    phi.check_support_in_sphere(ball, k)?;
    let mut squares: BTreeMap<NormalForm, f64> = BTreeMap::new();
    for (h, z) in phi.iter() {
        for u in left_divisors(graph, h, k - p) {
            *squares.entry(u).or_insert(0.0) += z.norm_sqr();
        }
    }
    Ok(GroupFunction {
        values: squares
            .into_iter()
            .map(|(u, s)| (u, Complex64::new(s.sqrt(), 0.0)))
            .collect(),
    })
}

/// The mirror ^{(p)}φ_{(k−p)}(u) = sqrt( Σ_{w ∈ Λ_p} |φ_{(k)}(w⁻¹·u)|² ):
/// here h = w⁻¹·u ranges over the support with w⁻¹ a length-p left divisor
/// of h, and u = w·h the corresponding right part.
pub fn derived_left(
    graph: &PresentationGraph,
    ball: &Ball,
    phi: &GroupFunction,
    k: usize,
    p: usize,
) -> Result<GroupFunction> {
    if p > k {
        return Err(Error::Precondition(format!("derived function needs p <= k, got p={p}, k={k}")));
    }
    phi.check_support_in_sphere(ball, k)?;
    let mut squares: BTreeMap<NormalForm, f64> = BTreeMap::new();
    for (h, z) in phi.iter() {
        for winv in left_divisors(graph, h, p) {
            let u = graph.multiply(&graph.invert(&winv), h);
            *squares.entry(u).or_insert(0.0) += z.norm_sqr();
        }
    }
    Ok(GroupFunction {
        values: squares
            .into_iter()
            .map(|(u, s)| (u, Complex64::new(s.sqrt(), 0.0)))
            .collect(),
    })
}

/// The right slice φ^g_{(i)}(v) = φ_{(k)}(v·g) when v·g ∈ Λ_k, supported on
/// Λ_i with i = k − λ(g).
pub fn slice_right(
    graph: &PresentationGraph,
    phi: &GroupFunction,
    k: usize,
    g: &NormalForm,
) -> Result<GroupFunction> {
    let i = k.checked_sub(g.syllable_length()).ok_or_else(|| {
        Error::Precondition(format!(
            "slice needs λ(g) <= k, got λ(g)={}, k={k}",
            g.syllable_length()
        ))
    })?;
    let ginv = graph.invert(g);
    Ok(GroupFunction {
        values: phi
            .iter()
            .filter(|(h, _)| h.syllable_length() == k)
            .filter_map(|(h, z)| {
                let v = graph.multiply(h, &ginv);
                (v.syllable_length() == i).then_some((v, *z))
            })
            .collect(),
    })
}

/// The left slice ^gφ_{(i)}(v) = φ_{(k)}(g·v) when g·v ∈ Λ_k.
pub fn slice_left(
    graph: &PresentationGraph,
    phi: &GroupFunction,
    k: usize,
    g: &NormalForm,
) -> Result<GroupFunction> {
    let i = k.checked_sub(g.syllable_length()).ok_or_else(|| {
        Error::Precondition(format!(
            "slice needs λ(g) <= k, got λ(g)={}, k={k}",
            g.syllable_length()
        ))
    })?;
    let ginv = graph.invert(g);
    Ok(GroupFunction {
        values: phi
            .iter()
            .filter(|(h, _)| h.syllable_length() == k)
            .filter_map(|(h, z)| {
                let v = graph.multiply(&ginv, h);
                (v.syllable_length() == i).then_some((v, *z))
            })
            .collect(),
    })
}

/// (Σ aᵢ)² ≤ M Σ aᵢ² for M summands: the Cauchy–Schwarz helper the norm
/// estimates lean on.
pub fn sum_square_bound(values: &[f64]) -> (f64, f64) {
    let sum: f64 = values.iter().sum();
    let bound = values.len() as f64 * values.iter().map(|a| a * a).sum::<f64>();
    (sum * sum, bound)
}
