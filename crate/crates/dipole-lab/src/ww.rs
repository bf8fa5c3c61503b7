//! Photon-counting estimate of the radiation: α photons per unit bandwidth
//! per formation time, β²-suppressed for the bounded nonrelativistic
//! oscillator, with the line squeezed to the fundamental at ω.
//!
//! The literal sin²θ angular coefficient from this route integrates to twice
//! the estimated total power; both that verbatim form and a self-consistent
//! renormalization are exposed, and reports carry the two side by side.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::kinematics::DipoleConfig;
use crate::units::UnitSystem;

/// Choice between the verbatim angular coefficient and the form rescaled so
/// its solid-angle integral equals the corresponding total power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    Literal,
    SelfConsistent,
}

/// The full estimation chain for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WWEstimate {
    /// Photons per unit bandwidth per formation time; equals α.
    pub photon_spectral_density: f64,
    /// One period, 2π/ω.
    pub formation_time: f64,
    /// α·β²·ω/(2π).
    pub photon_rate: f64,
    /// ħω × photon_rate = p0²ω⁴/(2πc³).
    pub power: f64,
    pub beta: f64,
}

impl WWEstimate {
    pub fn evaluate(config: &DipoleConfig, units: &UnitSystem) -> Self {
        WWEstimate {
            photon_spectral_density: photon_spectral_density(units),
            formation_time: formation_time(config),
            photon_rate: ww_photon_rate(config, units),
            power: ww_power(config, units),
            beta: config.beta_max(units),
        }
    }
}

/// Photons per unit bandwidth per formation time: the coupling α.
pub fn photon_spectral_density(units: &UnitSystem) -> f64 {
    units.alpha
}

/// Formation time of the bounded oscillator: one period.
pub fn formation_time(config: &DipoleConfig) -> f64 {
    2.0 * PI / config.omega()
}

/// Photons radiated per unit time: α·β²·ω/(2π).
pub fn ww_photon_rate(config: &DipoleConfig, units: &UnitSystem) -> f64 {
    let beta = config.beta_max(units);
    units.alpha * beta * beta * config.omega() / (2.0 * PI)
}

/// Estimated radiated power p0²ω⁴/(2πc³); equals ħω × the photon rate.
pub fn ww_power(config: &DipoleConfig, units: &UnitSystem) -> f64 {
    let p0 = config.dipole_moment();
    p0 * p0 * config.omega().powi(4) / (2.0 * PI * units.c.powi(3))
}

/// Angular distribution of the estimate.
///
/// Literal: (3p0²ω⁴/8π²c³)·sin²θ. Self-consistent: ww_power·(3/8π)·sin²θ,
/// whose solid-angle integral is exactly the estimated power.
pub fn ww_angular(
    theta: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
    normalization: Normalization,
) -> f64 {
    let s2 = theta.sin().powi(2);
    match normalization {
        Normalization::Literal => {
            let p0 = config.dipole_moment();
            3.0 * p0 * p0 * config.omega().powi(4) / (8.0 * PI * PI * units.c.powi(3)) * s2
        }
        Normalization::SelfConsistent => ww_power(config, units) * 3.0 / (8.0 * PI) * s2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::exact_average_power;
    use crate::quadrature::gauss_legendre;
    use std::f64::consts::FRAC_PI_2;

    fn units() -> UnitSystem {
        UnitSystem::dimensionless_default()
    }

    fn config(z0: f64, omega: f64) -> DipoleConfig {
        DipoleConfig::new(1.0, z0, omega, &units()).unwrap()
    }

    #[test]
    fn spectral_density_is_alpha() {
        assert_eq!(photon_spectral_density(&units()), 7.2973525693e-3);
        let custom = UnitSystem::dimensionless(0.01, 1.0).unwrap();
        assert_eq!(photon_spectral_density(&custom), 0.01);
        let cgs = UnitSystem::gaussian();
        let q = crate::units::E_CHARGE_CGS;
        assert!(
            (photon_spectral_density(&cgs) - q * q / (cgs.hbar * cgs.c)).abs()
                < 1e-12 * cgs.alpha
        );
    }

    #[test]
    fn formation_time_is_one_period() {
        assert!((formation_time(&config(0.01, 1.0)) - 2.0 * PI).abs() < 1e-15);
        assert!((formation_time(&config(0.01, 2.0 * PI)) - 1.0).abs() < 1e-15);
        assert!((formation_time(&config(0.01, 3.0)) - 2.0 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn photon_rate_value() {
        // alpha * 1e-4 / (2*pi), frozen from a high-precision evaluation
        let rate = ww_photon_rate(&config(0.01, 1.0), &units());
        assert!((rate - 1.1614097328884377e-7).abs() < 1e-12);
    }

    #[test]
    fn photon_rate_scaling() {
        let u = units();
        let tiny = DipoleConfig::new(1.0, 1e-300, 1.0, &u).unwrap();
        assert!(ww_photon_rate(&tiny, &u) < 1e-300);
        let ratio = ww_photon_rate(&config(0.02, 1.0), &u) / ww_photon_rate(&config(0.01, 1.0), &u);
        assert!((ratio - 4.0).abs() < 1e-14);
    }

    #[test]
    fn power_value_and_chain_identity() {
        let u = units();
        let cfg = config(0.01, 1.0);
        let p = ww_power(&cfg, &u);
        assert!((p - 1e-4 / (2.0 * PI)).abs() < 1e-19);
        let chain = u.hbar * cfg.omega() * ww_photon_rate(&cfg, &u);
        assert!((p - chain).abs() <= 1e-14 * p);
    }

    #[test]
    fn ratio_to_exact_power_is_three_over_two_pi() {
        let u = units();
        for (z0, omega, q) in [(0.01, 1.0, 1.0), (0.3, 0.1, 2.0), (1e-5, 100.0, -1.0)] {
            let cfg = DipoleConfig::new(q, z0, omega, &u).unwrap();
            let ratio = ww_power(&cfg, &u) / exact_average_power(&cfg, &u);
            assert!((ratio - 3.0 / (2.0 * PI)).abs() < 1e-14);
        }
    }

    #[test]
    fn angular_values() {
        let u = units();
        let cfg = config(0.01, 1.0);
        let literal = ww_angular(FRAC_PI_2, &cfg, &u, Normalization::Literal);
        assert!((literal - 3e-4 / (8.0 * PI * PI)).abs() < 1e-18);
        assert_eq!(ww_angular(0.0, &cfg, &u, Normalization::Literal), 0.0);
        assert_eq!(ww_angular(0.0, &cfg, &u, Normalization::SelfConsistent), 0.0);
    }

    #[test]
    fn self_consistent_integrates_to_power() {
        let u = units();
        let cfg = config(0.01, 1.0);
        let integral: f64 = gauss_legendre(16)
            .iter()
            .map(|&(x, w)| {
                let theta = x.clamp(-1.0, 1.0).acos();
                w * ww_angular(theta, &cfg, &u, Normalization::SelfConsistent)
            })
            .sum::<f64>()
            * 2.0
            * PI;
        let p = ww_power(&cfg, &u);
        assert!((integral - p).abs() <= 1e-12 * p);
    }

    #[test]
    fn literal_integrates_to_twice_power() {
        let u = units();
        let cfg = config(0.01, 1.0);
        let integral: f64 = gauss_legendre(16)
            .iter()
            .map(|&(x, w)| {
                let theta = x.clamp(-1.0, 1.0).acos();
                w * ww_angular(theta, &cfg, &u, Normalization::Literal)
            })
            .sum::<f64>()
            * 2.0
            * PI;
        let p = ww_power(&cfg, &u);
        assert!((integral - 2.0 * p).abs() <= 1e-10 * p);
    }
}
