//! The oscillating-charge trajectory z = z0·cos(ωt) and its exact
//! derivatives. Everything here is analytic; no finite differencing enters
//! any downstream field evaluation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::UnitSystem;

/// Charge, oscillation amplitude and angular frequency of the dipole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DipoleConfig {
    q: f64,
    z0: f64,
    omega: f64,
}

/// Trajectory state at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState {
    pub t: f64,
    /// Position along the z axis.
    pub z: f64,
    /// Velocity dz/dt.
    pub v: f64,
    /// Acceleration d²z/dt².
    pub a: f64,
    /// Jerk d³z/dt³.
    pub jerk: f64,
}

impl DipoleConfig {
    /// Validates q ≠ 0, z0 > 0, ω > 0 and β = z0ω/c < 1.
    pub fn new(q: f64, z0: f64, omega: f64, units: &UnitSystem) -> Result<Self> {
        if q == 0.0 || !q.is_finite() {
            return Err(Error::invalid(format!("charge must be nonzero, got {q}")));
        }
        if !(z0 > 0.0) || !z0.is_finite() {
            return Err(Error::invalid(format!("z0 must be positive, got {z0}")));
        }
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::invalid(format!("omega must be positive, got {omega}")));
        }
        let beta = z0 * omega / units.c;
        if beta >= 1.0 {
            return Err(Error::invalid(format!(
                "beta = z0*omega/c = {beta} must be below 1"
            )));
        }
        Ok(DipoleConfig { q, z0, omega })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn z0(&self) -> f64 {
        self.z0
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Peak speed relative to c: β = z0·ω/c.
    pub fn beta_max(&self, units: &UnitSystem) -> f64 {
        self.z0 * self.omega / units.c
    }

    /// Maximum dipole moment p0 = q·z0.
    pub fn dipole_moment(&self) -> f64 {
        self.q * self.z0
    }

    /// Oscillation period 2π/ω.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega
    }

    /// Radiated wavelength λ = 2πc/ω.
    pub fn wavelength(&self, units: &UnitSystem) -> f64 {
        2.0 * PI * units.c / self.omega
    }

    /// The nonrelativistic photon-counting estimate degrades once β is no
    /// longer small; reports flag such configurations instead of rejecting
    /// them (the simulation path stays valid).
    pub fn strains_nonrelativistic(&self, units: &UnitSystem) -> bool {
        self.beta_max(units) > 0.1
    }

    /// Exact trajectory state at time `t`.
    pub fn kinematics(&self, t: f64) -> KinematicState {
        let (s, c) = (self.omega * t).sin_cos();
        let w = self.omega;
        KinematicState {
            t,
            z: self.z0 * c,
            v: -self.z0 * w * s,
            a: -self.z0 * w * w * c,
            jerk: self.z0 * w * w * w * s,
        }
    }
}
