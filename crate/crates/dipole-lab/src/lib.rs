//! Desk-scale radiation laboratory for an oscillating point charge.
//!
//! The power and angular distribution radiated by a charge on the trajectory
//! z = z0·cos(ωt) are computed three independent ways:
//!
//! - a photon-counting estimate (α photons per unit bandwidth per formation
//!   time, β²-suppressed for the bounded nonrelativistic motion),
//! - the exact analytic Hertzian dipole formulas,
//! - a first-principles Liénard-Wiechert simulation (retarded-time solve,
//!   full fields, Poynting flux, spherical quadrature).
//!
//! The comparison report quantifies where the estimate lands relative to the
//! exact result (a constant factor 3/2π) and how well the numeric pattern
//! follows sin²θ.
//!
//! All modules are pure functions over immutable values and safe to call
//! concurrently.

pub mod analytic;
pub mod error;
pub mod kinematics;
pub mod lw;
pub mod quadrature;
pub mod radiometry;
pub mod report;
pub mod retarded;
pub mod units;
pub mod vec3;
pub mod ww;

pub use error::{Error, Result};
pub use kinematics::{DipoleConfig, KinematicState};
pub use lw::FieldSample;
pub use radiometry::{AngularDistribution, HarmonicSpectrum, Provenance};
pub use report::{ComparisonReport, NumericParams, PatternRow};
pub use retarded::{ObservationPoint, RetardedSolution};
pub use units::{UnitMode, UnitSystem};
pub use ww::{Normalization, WWEstimate};
