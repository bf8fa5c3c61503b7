//! Retarded-time solver: the kernel beneath every Liénard-Wiechert
//! evaluation. Finds the root of
//!
//!   g(s) = c·(t_obs − s) − |x_obs − x(s)|
//!
//! which is strictly decreasing for v < c, so the root is unique. Bracketed
//! bisection narrows the interval, then Newton polishes with the analytic
//! derivative g′(s) = −c + n̂·v(s).

use crate::error::{Error, Result};
use crate::kinematics::DipoleConfig;
use crate::units::UnitSystem;
use crate::vec3::Vec3;

/// Relative residual tolerance: residual ≤ DEFAULT_TOLERANCE · r (length units).
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

const BISECTION_BUDGET: usize = 200;
const NEWTON_BUDGET: usize = 20;

/// Observer location in standard physics spherical coordinates, dipole axis
/// along +z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservationPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl ObservationPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::invalid(format!("r must be positive, got {r}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::invalid(format!(
                "theta must lie in [0, pi], got {theta}"
            )));
        }
        Ok(ObservationPoint { r, theta, phi })
    }

    pub fn cartesian(&self) -> Vec3 {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vec3::new(self.r * st * cp, self.r * st * sp, self.r * ct)
    }

    /// Outward unit normal of the observation sphere.
    pub fn radial_unit(&self) -> Vec3 {
        self.cartesian() * (1.0 / self.r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RetardedSolution {
    pub t_ret: f64,
    /// |x_obs − x(t_ret)|.
    pub separation: f64,
    /// |c·(t_obs − t_ret) − separation| in length units.
    pub residual: f64,
}

fn separation(obs_cart: Vec3, config: &DipoleConfig, s: f64) -> f64 {
    let z = config.kinematics(s).z;
    (obs_cart - Vec3::new(0.0, 0.0, z)).norm()
}

/// Solves c·(t_obs − t_ret) = |x_obs − x(t_ret)| with the default residual
/// tolerance 1e-12·r.
pub fn solve_retarded_time(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
) -> Result<RetardedSolution> {
    solve_retarded_time_with_tolerance(obs, t_obs, config, units, DEFAULT_TOLERANCE)
}

/// As [`solve_retarded_time`] with a caller-chosen relative tolerance
/// (residual ≤ tol_rel·r, length units).
pub fn solve_retarded_time_with_tolerance(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
    tol_rel: f64,
) -> Result<RetardedSolution> {
    if obs.r <= config.z0() {
        return Err(Error::invalid(format!(
            "observer radius {} must exceed oscillation amplitude {}",
            obs.r,
            config.z0()
        )));
    }
    let c = units.c;
    let x_obs = obs.cartesian();
    let tol_len = tol_rel * obs.r;

    let g = |s: f64| c * (t_obs - s) - separation(x_obs, config, s);

    // The source never leaves |z| <= z0, so the light-travel time is bracketed
    // by the nearest and farthest possible source positions.
    let mut lo = t_obs - (obs.r + config.z0()) / c;
    let mut hi = t_obs - (obs.r - config.z0()) / c;
    let mut g_lo = g(lo);

    // Bisect down to a narrow interval, then hand over to Newton.
    let coarse = (hi - lo).max(tol_len / c) * 1e-3;
    for _ in 0..BISECTION_BUDGET {
        if hi - lo <= coarse {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid);
        if g_lo * g_mid > 0.0 {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }

    let mut s = 0.5 * (lo + hi);
    let mut residual = g(s).abs();
    for _ in 0..NEWTON_BUDGET {
        if residual <= tol_len {
            break;
        }
        let state = config.kinematics(s);
        let r_vec = x_obs - Vec3::new(0.0, 0.0, state.z);
        let sep = r_vec.norm();
        let n_hat = r_vec * (1.0 / sep);
        let v = Vec3::new(0.0, 0.0, state.v);
        let g_val = c * (t_obs - s) - sep;
        let g_prime = -c + n_hat.dot(v);
        // keep the bracket shrinking (g is strictly decreasing) and clamp
        // the step into it; the root can sit within a few ulp of an endpoint
        if g_val > 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let next = s - g_val / g_prime;
        s = if next.is_finite() {
            next.clamp(lo, hi)
        } else {
            0.5 * (lo + hi)
        };
        residual = g(s).abs();
    }

    if residual > tol_len {
        return Err(Error::NoConvergence {
            t_obs,
            residual,
            tolerance: tol_len,
        });
    }
    Ok(RetardedSolution {
        t_ret: s,
        separation: separation(x_obs, config, s),
        residual,
    })
}
