//! Report assembly: orchestrates the three computation paths and carries the
//! results in serializable form for the CLI front end.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::analytic::{exact_angular, exact_average_power};
use crate::error::{Error, Result};
use crate::kinematics::DipoleConfig;
use crate::radiometry::{
    fit_sin_squared, harmonic_spectrum, numeric_pattern, total_power_numeric,
};
use crate::retarded::ObservationPoint;
use crate::units::UnitSystem;
use crate::ww::{ww_angular, ww_power, Normalization};

pub const BETA_WARNING: &str = "nonrelativistic assumption strained";

/// Resolution knobs for the numeric path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericParams {
    pub radius_lambdas: f64,
    pub n_theta: usize,
    pub n_time: usize,
}

impl Default for NumericParams {
    fn default() -> Self {
        NumericParams {
            radius_lambdas: 200.0,
            n_theta: 32,
            n_time: 64,
        }
    }
}

/// The three total powers, their ratios, and the numeric quality measures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub q: f64,
    pub z0: f64,
    pub omega: f64,
    pub beta: f64,
    pub p0: f64,
    pub p_ww: f64,
    pub p_exact: f64,
    pub p_numeric: f64,
    pub ratio_ww_exact: f64,
    pub ratio_numeric_exact: f64,
    /// Constant 2π/3: the bandwidth squeeze between the estimate and the
    /// exact average.
    pub bandwidth_ratio: f64,
    /// Max relative deviation of the numeric pattern from its sin²θ fit.
    pub pattern_residual: f64,
    /// Share of the radiated power in the fundamental harmonic.
    pub fundamental_fraction: f64,
    pub numeric_params: NumericParams,
    pub warnings: Vec<String>,
}

/// One row of the angular-pattern table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PatternRow {
    pub theta_rad: f64,
    pub ww_literal: f64,
    pub ww_selfcons: f64,
    pub exact_literal: f64,
    pub exact_selfcons: f64,
    pub numeric: f64,
}

/// Runs all three paths and populates every report field.
pub fn run_compare(
    config: &DipoleConfig,
    units: &UnitSystem,
    params: &NumericParams,
) -> Result<ComparisonReport> {
    let p_ww = ww_power(config, units);
    let p_exact = exact_average_power(config, units);
    let p_numeric =
        total_power_numeric(config, units, params.radius_lambdas, params.n_theta, params.n_time)?;

    let thetas: Vec<f64> = (0..=params.n_theta)
        .map(|i| PI * i as f64 / params.n_theta as f64)
        .collect();
    let dist = numeric_pattern(config, units, &thetas, params.radius_lambdas, params.n_time)?;
    let (_, pattern_residual) = fit_sin_squared(&dist);

    let obs = ObservationPoint::new(
        params.radius_lambdas * config.wavelength(units),
        FRAC_PI_4,
        0.0,
    )?;
    let n_fft = params.n_time.next_power_of_two().max(64);
    let spectrum = harmonic_spectrum(config, units, &obs, n_fft)?;

    let mut warnings = Vec::new();
    if config.strains_nonrelativistic(units) {
        warnings.push(BETA_WARNING.to_string());
    }

    Ok(ComparisonReport {
        q: config.q(),
        z0: config.z0(),
        omega: config.omega(),
        beta: config.beta_max(units),
        p0: config.dipole_moment(),
        p_ww,
        p_exact,
        p_numeric,
        ratio_ww_exact: p_ww / p_exact,
        ratio_numeric_exact: p_numeric / p_exact,
        bandwidth_ratio: 2.0 * PI / 3.0,
        pattern_residual,
        fundamental_fraction: spectrum.fundamental_fraction(),
        numeric_params: *params,
        warnings,
    })
}

/// Builds the angular-pattern table over a uniform θ grid of `n_theta + 1`
/// points spanning [0, π].
pub fn emit_pattern(
    config: &DipoleConfig,
    units: &UnitSystem,
    params: &NumericParams,
) -> Result<Vec<PatternRow>> {
    if params.n_theta < 2 {
        return Err(Error::invalid(format!(
            "pattern needs at least 2 theta intervals, got {}",
            params.n_theta
        )));
    }
    let thetas: Vec<f64> = (0..=params.n_theta)
        .map(|i| PI * i as f64 / params.n_theta as f64)
        .collect();
    let dist = numeric_pattern(config, units, &thetas, params.radius_lambdas, params.n_time)?;
    Ok(thetas
        .iter()
        .zip(&dist.dp_domega)
        .map(|(&theta, &numeric)| PatternRow {
            theta_rad: theta,
            ww_literal: ww_angular(theta, config, units, Normalization::Literal),
            ww_selfcons: ww_angular(theta, config, units, Normalization::SelfConsistent),
            exact_literal: exact_angular(theta, config, units, Normalization::Literal),
            exact_selfcons: exact_angular(theta, config, units, Normalization::SelfConsistent),
            numeric,
        })
        .collect())
}

/// Revalidates the internal ratios of a previously emitted JSON report.
pub fn check_report(report: &ComparisonReport) -> Result<()> {
    let tol = 1e-12;
    let expect = 3.0 / (2.0 * PI);
    if (report.ratio_ww_exact - expect).abs() > tol * expect {
        return Err(Error::invalid(format!(
            "ratio_ww_exact {} deviates from 3/(2pi) = {expect}",
            report.ratio_ww_exact
        )));
    }
    if report.p_ww < 0.0 || report.p_exact < 0.0 || report.p_numeric < 0.0 {
        return Err(Error::invalid("powers must be non-negative"));
    }
    let ratio = report.p_ww / report.p_exact;
    if (ratio - report.ratio_ww_exact).abs() > tol * report.ratio_ww_exact {
        return Err(Error::invalid("p_ww/p_exact disagrees with ratio_ww_exact"));
    }
    let ratio = report.p_numeric / report.p_exact;
    if (ratio - report.ratio_numeric_exact).abs() > tol * report.ratio_numeric_exact.abs() {
        return Err(Error::invalid(
            "p_numeric/p_exact disagrees with ratio_numeric_exact",
        ));
    }
    let expect = 2.0 * PI / 3.0;
    if (report.bandwidth_ratio - expect).abs() > tol * expect {
        return Err(Error::invalid(format!(
            "bandwidth_ratio {} deviates from 2pi/3",
            report.bandwidth_ratio
        )));
    }
    if !(0.0..=1.0 + 1e-12).contains(&report.fundamental_fraction) {
        return Err(Error::invalid("fundamental_fraction outside [0, 1]"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn units() -> UnitSystem {
        UnitSystem::dimensionless_default()
    }

    #[test]
    fn compare_report_fields() {
        let u = units();
        let cfg = DipoleConfig::new(1.0, 0.01, 1.0, &u).unwrap();
        let report = run_compare(&cfg, &u, &NumericParams::default()).unwrap();
        assert!((report.ratio_ww_exact - 0.477464829275686).abs() < 1e-12);
        assert!((report.ratio_numeric_exact - 1.0).abs() < 1e-3);
        assert!(report.pattern_residual <= 0.01);
        assert!(report.fundamental_fraction >= 0.999);
        assert!(report.warnings.is_empty());
        check_report(&report).unwrap();
    }

    #[test]
    fn beta_warning_is_flagged() {
        let u = units();
        let cfg = DipoleConfig::new(1.0, 0.2, 1.0, &u).unwrap();
        let report = run_compare(&cfg, &u, &NumericParams::default()).unwrap();
        assert_eq!(report.warnings, vec![BETA_WARNING.to_string()]);
    }

    #[test]
    fn pattern_rows() {
        let u = units();
        let cfg = DipoleConfig::new(1.0, 0.01, 1.0, &u).unwrap();
        let rows = emit_pattern(&cfg, &u, &NumericParams::default()).unwrap();
        assert_eq!(rows.len(), 33);

        let first = &rows[0];
        assert_eq!(first.ww_literal, 0.0);
        assert_eq!(first.exact_literal, 0.0);
        let peak = rows[16].numeric;
        assert!(first.numeric <= 1e-6 * peak);

        // theta = pi/2 sits at the middle of the even grid
        let mid = &rows[16];
        assert!((mid.theta_rad - FRAC_PI_2).abs() < 1e-15);
        assert!((mid.exact_literal - 7.957747154594767e-6).abs() < 1e-18);
        assert!((mid.exact_selfcons - 3.978873577297384e-6).abs() < 1e-18);
        for row in &rows {
            assert!((row.numeric - row.exact_selfcons).abs() <= 0.01 * rows[16].exact_selfcons);
        }
    }

    #[test]
    fn pattern_needs_grid() {
        let u = units();
        let cfg = DipoleConfig::new(1.0, 0.01, 1.0, &u).unwrap();
        let params = NumericParams {
            n_theta: 1,
            ..NumericParams::default()
        };
        assert!(emit_pattern(&cfg, &u, &params).is_err());
    }

    #[test]
    fn check_rejects_tampered_report() {
        let u = units();
        let cfg = DipoleConfig::new(1.0, 0.01, 1.0, &u).unwrap();
        let mut report = run_compare(&cfg, &u, &NumericParams::default()).unwrap();
        report.ratio_ww_exact = 0.5;
        assert!(check_report(&report).is_err());
    }
}
