//! Lee-metric covering radius of repetition codes over `Z/mZ`, admissible
//! vectors and their explicit extremal constructions, and exact Waring
//! numbers of small finite fields.
//!
//! The largest admissible norm of a vector in `(Z/mZ)^r` (the minimum norm
//! over all shifts by the all-ones vector) is given in closed form by
//! [`g_bound`] for the least-residue norm and [`h_bound`] for the Lee norm.
//! [`construct_max_norm1`] and [`construct_max_lee`] produce vectors
//! attaining them, and [`brute_max_admissible`] checks both by enumeration.

pub mod admissible;
pub mod bounds;
pub mod construct;
pub mod error;
pub mod ffwaring;
pub mod modring;
pub mod oracle;

pub use admissible::{
    canonical_shift, extremal_values, is_admissible, is_balanced, m_sequence, norm_sequence,
    predicted_m_diffs, Extremum, ExtremumKind, NormSeq,
};
pub use bounds::{band_c, covering_radius, g_bound, h_bound, h_bound_with_case, BoundCase};
pub use construct::{
    construct_even_dim, construct_max_lee, construct_max_norm1, construct_odd_modulus,
    even_vector_for_odd_modulus, full_cycle, optimal_pair, plan_even_modulus, plan_even_vector,
    vector_from_m_diffs, MDiffPlan,
};
pub use error::{Error, Result};
pub use modring::{
    abs_least_residue, concat, double_embed, halve, least_residue, least_residue_signed, norm,
    shift, ModVec, Modulus, NormKind,
};
pub use oracle::{
    brute_covering_radius, brute_max_admissible, coset_count, OracleResult, DEFAULT_BUDGET,
};
