//! Semistandard Young tableaux, row insertion, and the content-restricted
//! insertion bijection behind the Kostka number identity
//!
//! ```text
//! Σ_{μ ⊢ n, μ ⪰ ρ} K(μ, λ) = Σ_{γ ⊢ n-1, γ ⪯ λ} c(λ, γ) K(ρ, γ)
//! ```
//!
//! together with an exhaustive verifier for the identity and an analyzer for
//! the "remove the extra box" map, which is not a bijection in general.

pub mod error;
pub mod insertion;
pub mod shapes;
pub mod tableaux;
pub mod vershik;

pub use error::{Error, Result};
pub use insertion::{
    pieri_backward, pieri_forward, reverse_insert, row_insert, InsertionResult, InsertionSource,
    PieriPair, ReverseResult,
};
pub use shapes::{is_sub_partition, Cell, Composition, Partition, Partitions};
pub use tableaux::{
    enumerate_ssyt, enumerate_ssyt_bounded, is_semistandard, kostka, kostka_oracle, Tableau,
};
pub use vershik::{
    build_l, build_r_prime, removal_map_analysis, sweep_identity, verify_identity,
    vershik_bijection, BijectionPair, BijectionTable, Fiber, IdentityRecord, RPrimeElement,
    RemovalPair, RemovalReport, Witness,
};
