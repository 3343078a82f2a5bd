//! Graph products of groups on a finite simplicial graph: canonical normal
//! forms, syllable and weighted length functions, divisor and factorisation
//! enumeration over finite windows, group-algebra convolution, and numerical
//! verification of the rapid-decay norm inequalities.

pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod group_function;
pub mod normal_form;
pub mod rd;
pub mod vertex_group;

pub use enumeration::{
    Ball, BallSpec, Factorisation, FfEstimate, P2Decomposition, factorisations,
    factorisations_clique, ff_empirical, left_divisor_ideals, left_divisors, lemma_p1_bound,
    p2_decompose, right_divisors, unconstrained_syllables,
};
pub use error::{Error, Result};
pub use graph::{Clique, PresentationGraph, VertexId, VertexSet};
pub use group_function::{
    GroupFunction, GroupFunctionRecord, convolve, convolve_in_clique, derived_left, derived_right,
    slice_left, slice_right, sum_square_bound,
};
pub use normal_form::{Expression, NormalForm, Syllable};
pub use num_complex::Complex64;
pub use vertex_group::{CayleyTable, GroupElem, IDENTITY, VertexGroup};
