//! Orbits of the base points under g = σ∘α, and the symbolic degree oracle.

pub mod degree;
pub mod forms;
pub mod random;
pub mod trace;

pub use degree::{degree_growth, degree_growth_capped, dynamical_degree_estimate, DegreeEstimate};
pub use random::{random_involution, seeded_involutions};
pub use trace::{
    default_bound, sigma_apply, trace_orbits, ArmLength, Collision, EventKind, IndeterminateReason, OrbitAnalysis,
    OrbitEvent, OrbitProfile, OrbitTrace, Seed,
};
