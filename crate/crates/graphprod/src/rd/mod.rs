//! Numerical rapid-decay verification: multiplication tensors, alternating
//! power iteration, per-clique constants, and the proposition scan.

pub mod tensor;
pub mod verifier;

pub use tensor::{AlsOptions, AlsResult, MultiplicationTensor, mix};
pub use verifier::{
    FamilyFit, GrowthFit, LadderPoint, LevelMode, PROPOSITION_TOLERANCE, RdConstants, RdScope,
    ScanParams, ScanReport, ScanRow, ScanViolation, TrilinearEstimate, VanishingReport,
    VanishingViolation, WitnessEntry, clique_rd_constants, combined_constants, fit_growth,
    level_set, mf_bound, mf_empirical, proposition_check, rd_scan, trilinear_ratio,
    vanishing_check,
};
