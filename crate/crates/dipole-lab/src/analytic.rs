//! Exact analytic baseline: Hertzian time-averaged power, the sin²θ angular
//! distribution, the instantaneous Larmor power, and the Abraham-Lorentz
//! radiation-reaction balance on the prescribed trajectory. The trajectory is
//! never evolved under the reaction force, so the runaway pathologies of the
//! Abraham-Lorentz equation do not arise.

use std::f64::consts::PI;

use crate::kinematics::DipoleConfig;
use crate::units::UnitSystem;
use crate::vec3::Vec3;
use crate::ww::Normalization;

/// Abraham-Lorentz force and the power it delivers at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReactionSample {
    pub t: f64,
    /// (2q²/3c³)·jerk, along the motion axis.
    pub f_react: Vec3,
    /// F_react·v.
    pub p_react: f64,
}

/// Time-averaged Hertzian dipole power p0²ω⁴/(3c³).
pub fn exact_average_power(config: &DipoleConfig, units: &UnitSystem) -> f64 {
    let p0 = config.dipole_moment();
    p0 * p0 * config.omega().powi(4) / (3.0 * units.c.powi(3))
}

/// Exact angular distribution.
///
/// Literal: (p0²ω⁴/4πc³)·sin²θ. Self-consistent: (p0²ω⁴/8πc³)·sin²θ, which
/// integrates to the time-averaged power.
pub fn exact_angular(
    theta: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
    normalization: Normalization,
) -> f64 {
    let p0 = config.dipole_moment();
    let s2 = theta.sin().powi(2);
    let base = p0 * p0 * config.omega().powi(4) / units.c.powi(3);
    match normalization {
        Normalization::Literal => base / (4.0 * PI) * s2,
        Normalization::SelfConsistent => base / (8.0 * PI) * s2,
    }
}

/// Instantaneous Larmor power (2q²/3c³)·a(t)².
pub fn instantaneous_larmor_power(config: &DipoleConfig, units: &UnitSystem, t: f64) -> f64 {
    let a = config.kinematics(t).a;
    2.0 * config.q() * config.q() * a * a / (3.0 * units.c.powi(3))
}

/// Abraham-Lorentz reaction force and power at time `t`.
pub fn reaction_power(config: &DipoleConfig, units: &UnitSystem, t: f64) -> ReactionSample {
    let state = config.kinematics(t);
    let coeff = 2.0 * config.q() * config.q() / (3.0 * units.c.powi(3));
    let f_z = coeff * state.jerk;
    ReactionSample {
        t,
        f_react: Vec3::new(0.0, 0.0, f_z),
        p_react: f_z * state.v,
    }
}
