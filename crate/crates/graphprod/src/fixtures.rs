//! The standard desk-scale test graphs used across the test suites, the
//! benchmarks and the bundled configs, with their conventional windows.

use crate::enumeration::BallSpec;
use crate::graph::PresentationGraph;
use crate::rd::tensor::MultiplicationTensor;
use crate::vertex_group::VertexGroup;

fn z2() -> VertexGroup {
    VertexGroup::cyclic(2).expect("order 2")
}

/// Two Z/2 vertices, no edge: the infinite dihedral group.
pub fn edgeless_z2() -> PresentationGraph {
    PresentationGraph::new(vec![z2(), z2()], &[]).expect("valid graph")
}

/// Two Z/2 vertices, one edge: Z/2 × Z/2.
pub fn edge_z2() -> PresentationGraph {
    PresentationGraph::new(vec![z2(), z2()], &[(0, 1)]).expect("valid graph")
}

/// Path a–b–c with Z/2 vertices: infinite, one commuting middle vertex.
pub fn path_z2() -> PresentationGraph {
    PresentationGraph::new(vec![z2(), z2(), z2()], &[(0, 1), (1, 2)]).expect("valid graph")
}

/// Path a–b–c with integer vertices: a right-angled Artin group.
pub fn path_integers() -> PresentationGraph {
    PresentationGraph::new(
        vec![
            VertexGroup::Integers,
            VertexGroup::Integers,
            VertexGroup::Integers,
        ],
        &[(0, 1), (1, 2)],
    )
    .expect("valid graph")
}

/// Triangle with cyclic(3) vertices: the finite group (Z/3)³.
pub fn triangle_cyclic3() -> PresentationGraph {
    let c3 = VertexGroup::cyclic(3).expect("order 3");
    PresentationGraph::new(vec![c3.clone(), c3.clone(), c3], &[(0, 1), (1, 2), (0, 2)])
        .expect("valid graph")
}

/// The five standard fixtures with their windows. Graphs whose vertex
/// groups are all finite get a saturating ℓ cap; the integer path is capped
/// at ℓ ≤ 4 to keep its window desk-sized.
pub fn standard() -> Vec<(&'static str, PresentationGraph, BallSpec)> {
    let mut out = Vec::new();
    for (name, graph, lambda_max) in [
        ("edgeless-z2", edgeless_z2(), 10),
        ("edge-z2", edge_z2(), 10),
        ("path-z2", path_z2(), 10),
        ("triangle-c3", triangle_cyclic3(), 10),
    ] {
        let spec = BallSpec::saturating(&graph, lambda_max).expect("finite vertex groups");
        out.push((name, graph, spec));
    }
    out.push(("path-int", path_integers(), BallSpec::new(8, 4)));
    out
}

/// A synthetic tensor family with spectral norm exactly k+1: the all-ones
/// (k+1)×(k+1) bilinear form into a single output coordinate. Used to check
/// that the growth fitter recovers a known linear exponent.
pub fn linear_growth_tensor(k: usize) -> MultiplicationTensor {
    let n = k + 1;
    let entries = (0..n as u32)
        .flat_map(|a| (0..n as u32).map(move |b| (a, b, 0)))
        .collect();
    MultiplicationTensor::from_raw((n, n, 1), entries, vec![1.0; n])
}
