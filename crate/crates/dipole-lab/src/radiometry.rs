//! From field samples to observables: period-averaged Poynting flux, angular
//! power distribution, total power by spherical quadrature, and the harmonic
//! line spectrum.
//!
//! Period averaging runs at fixed observer time over exactly one period with
//! uniform samples; for a periodic integrand this is spectrally accurate and
//! no retarded-time Jacobian is needed (full-period averages of received and
//! emitted power coincide).

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::DipoleConfig;
use crate::lw::{lw_field, radiation_field, FieldSample};
use crate::quadrature::gauss_legendre;
use crate::retarded::ObservationPoint;
use crate::units::UnitSystem;
use crate::vec3::Vec3;

/// Which computation path produced an angular distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Ww,
    Exact,
    Numeric,
}

/// dP/dΩ sampled on a polar-angle grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularDistribution {
    pub thetas: Vec<f64>,
    pub dp_domega: Vec<f64>,
    pub provenance: Provenance,
    pub beta: f64,
    /// Measurement sphere radius in wavelengths; numeric provenance only.
    pub radius_lambdas: Option<f64>,
}

impl AngularDistribution {
    pub fn new(
        thetas: Vec<f64>,
        dp_domega: Vec<f64>,
        provenance: Provenance,
        beta: f64,
        radius_lambdas: Option<f64>,
    ) -> Result<Self> {
        if thetas.len() != dp_domega.len() {
            return Err(Error::invalid("theta grid and values differ in length"));
        }
        if thetas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("theta grid must be strictly increasing"));
        }
        if let (Some(first), Some(last)) = (thetas.first(), thetas.last()) {
            if *first < 0.0 || *last > PI + 1e-15 {
                return Err(Error::invalid("theta grid must lie within [0, pi]"));
            }
        }
        if dp_domega.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(Error::invalid("dP/dOmega must be finite and non-negative"));
        }
        Ok(AngularDistribution {
            thetas,
            dp_domega,
            provenance,
            beta,
            radius_lambdas,
        })
    }
}

/// Power per harmonic of the motion's fundamental frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSpectrum {
    /// Leading (harmonic index, power) pairs; index 1 sits at ω.
    pub harmonics: Vec<(usize, f64)>,
    /// Power summed over every resolved harmonic.
    pub total: f64,
}

impl HarmonicSpectrum {
    pub fn fraction(&self, n: usize) -> f64 {
        self.harmonics
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, p)| p / self.total)
            .unwrap_or(0.0)
    }

    pub fn fundamental_fraction(&self) -> f64 {
        self.fraction(1)
    }
}

/// Poynting vector S = (c/4π)·E×B in the Gaussian convention.
pub fn poynting(sample: &FieldSample, units: &UnitSystem) -> Vec3 {
    sample.e.cross(sample.b) * (units.c / (4.0 * PI))
}

/// ⟨r²·S·r̂⟩ at polar angle `theta`, averaged over one full period of
/// observer time with `n_time` uniform samples (trapezoid rule on a periodic
/// integrand, i.e. the plain mean).
pub fn angular_power(
    theta: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
    radius_lambdas: f64,
    n_time: usize,
) -> Result<f64> {
    if radius_lambdas < 10.0 {
        return Err(Error::invalid(format!(
            "radius must be at least 10 wavelengths, got {radius_lambdas}"
        )));
    }
    if n_time < 16 {
        return Err(Error::invalid(format!(
            "n_time must be at least 16, got {n_time}"
        )));
    }
    let r = radius_lambdas * config.wavelength(units);
    let obs = ObservationPoint::new(r, theta, 0.0)?;
    let r_hat = obs.radial_unit();
    let period = config.period();
    let mut acc = 0.0;
    for i in 0..n_time {
        let t = period * i as f64 / n_time as f64;
        let sample = lw_field(&obs, t, config, units)?;
        acc += poynting(&sample, units).dot(r_hat);
    }
    Ok(r * r * acc / n_time as f64)
}

/// Total radiated power through a far sphere: 2π × Gauss-Legendre quadrature
/// of the angular power over cos θ (azimuthal symmetry handled analytically).
pub fn total_power_numeric(
    config: &DipoleConfig,
    units: &UnitSystem,
    radius_lambdas: f64,
    n_theta: usize,
    n_time: usize,
) -> Result<f64> {
    if n_theta < 8 {
        return Err(Error::invalid(format!(
            "n_theta must be at least 8, got {n_theta}"
        )));
    }
    let mut acc = 0.0;
    for (u, w) in gauss_legendre(n_theta) {
        let theta = u.clamp(-1.0, 1.0).acos();
        acc += w * angular_power(theta, config, units, radius_lambdas, n_time)?;
    }
    Ok(2.0 * PI * acc)
}

/// Numeric dP/dΩ on the given theta grid.
pub fn numeric_pattern(
    config: &DipoleConfig,
    units: &UnitSystem,
    thetas: &[f64],
    radius_lambdas: f64,
    n_time: usize,
) -> Result<AngularDistribution> {
    let values = thetas
        .iter()
        .map(|&theta| angular_power(theta, config, units, radius_lambdas, n_time))
        .collect::<Result<Vec<_>>>()?;
    AngularDistribution::new(
        thetas.to_vec(),
        values,
        Provenance::Numeric,
        config.beta_max(units),
        Some(radius_lambdas),
    )
}

/// Harmonic decomposition of the radiation field over exactly one period.
///
/// `n_time` must be a power of two ≥ 64 and the observer must sit in the far
/// zone (r ≥ 10λ). Per-harmonic power is formed from the squared Fourier
/// amplitudes of the Cartesian radiation-field components (the radiation
/// field is transverse by construction, so this sums both polarizations) and
/// scaled to power per solid angle at the observation direction.
pub fn harmonic_spectrum(
    config: &DipoleConfig,
    units: &UnitSystem,
    obs: &ObservationPoint,
    n_time: usize,
) -> Result<HarmonicSpectrum> {
    if n_time < 64 || !n_time.is_power_of_two() {
        return Err(Error::invalid(format!(
            "n_time must be a power of two >= 64, got {n_time}"
        )));
    }
    if obs.r < 10.0 * config.wavelength(units) {
        return Err(Error::invalid(
            "harmonic spectrum requires a far-zone observer (r >= 10 wavelengths)",
        ));
    }
    let period = config.period();
    let mut components = [
        Vec::with_capacity(n_time),
        Vec::with_capacity(n_time),
        Vec::with_capacity(n_time),
    ];
    for i in 0..n_time {
        let t = period * i as f64 / n_time as f64;
        let e = radiation_field(obs, t, config, units)?;
        components[0].push(Complex64::new(e.x, 0.0));
        components[1].push(Complex64::new(e.y, 0.0));
        components[2].push(Complex64::new(e.z, 0.0));
    }
    let fft = FftPlanner::new().plan_fft_forward(n_time);
    for comp in components.iter_mut() {
        fft.process(comp);
    }

    // mean-square field per harmonic: for a real signal the bins n and N-n
    // pair up, giving 2|X_n|^2/N^2 (half that at Nyquist)
    let n = n_time as f64;
    let scale = units.c * obs.r * obs.r / (8.0 * PI);
    let mut powers = Vec::with_capacity(n_time / 2);
    for k in 1..=n_time / 2 {
        let sq: f64 = components.iter().map(|c| c[k].norm_sqr()).sum();
        let pair_factor = if k == n_time / 2 { 1.0 } else { 2.0 };
        powers.push((k, scale * pair_factor * sq / (n * n)));
    }
    let total: f64 = powers.iter().map(|(_, p)| p).sum();
    powers.truncate(16);
    Ok(HarmonicSpectrum {
        harmonics: powers,
        total,
    })
}

/// Least-squares fit of a pattern to A·sin²θ. Returns the fitted amplitude
/// and the maximum residual relative to the fitted peak A.
pub fn fit_sin_squared(dist: &AngularDistribution) -> (f64, f64) {
    let mut num = 0.0;
    let mut den = 0.0;
    for (&theta, &v) in dist.thetas.iter().zip(&dist.dp_domega) {
        let s = theta.sin().powi(2);
        num += v * s;
        den += s * s;
    }
    let a = num / den;
    let max_residual = dist
        .thetas
        .iter()
        .zip(&dist.dp_domega)
        .map(|(&theta, &v)| (v - a * theta.sin().powi(2)).abs())
        .fold(0.0, f64::max);
    (a, max_residual / a)
}
