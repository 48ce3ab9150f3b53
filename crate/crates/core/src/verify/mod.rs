//! Oracles and property checks cross-validating the engine.

pub mod oracles;
pub mod probe;
pub mod suite;

pub use oracles::{
    monomial_dicritical_oracle, monomial_dicritical_oracle_poly, noether_intersection, resultant_intersection,
};
pub use probe::{fingerprints, invariance_probe, ProbeRound, ProbeVerdict, ValuationFingerprint};
pub use suite::{property_suite, run_checks, Check, Status};
