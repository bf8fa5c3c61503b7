//! Exact Liénard-Wiechert fields of the oscillating point charge, the
//! first-principles reference every estimate in this crate is tested
//! against. Both the velocity (1/R²) and acceleration (1/R) terms are always
//! computed; far-field behavior is verified by tests, never assumed here.
//!
//! Gaussian units:
//!
//!   E = q(n̂−β)(1−β²) / ((1−n̂·β)³ R²)  +  (q/c)·n̂×((n̂−β)×β̇) / ((1−n̂·β)³ R)
//!   B = n̂ × E

use crate::error::Result;
use crate::kinematics::DipoleConfig;
use crate::retarded::{solve_retarded_time, ObservationPoint};
use crate::units::UnitSystem;
use crate::vec3::Vec3;

/// Fields at one observation point and time, with the retarded data that
/// produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub e: Vec3,
    pub b: Vec3,
    pub t_obs: f64,
    pub t_ret: f64,
    /// Unit vector from the retarded charge position to the observer.
    pub n_hat: Vec3,
}

struct RetardedGeometry {
    n_hat: Vec3,
    separation: f64,
    beta: Vec3,
    beta_dot: Vec3,
    doppler: f64,
    t_ret: f64,
}

fn retarded_geometry(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
) -> Result<RetardedGeometry> {
    let sol = solve_retarded_time(obs, t_obs, config, units)?;
    let state = config.kinematics(sol.t_ret);
    let r_vec = obs.cartesian() - Vec3::new(0.0, 0.0, state.z);
    let separation = r_vec.norm();
    let n_hat = r_vec * (1.0 / separation);
    let beta = Vec3::new(0.0, 0.0, state.v / units.c);
    let beta_dot = Vec3::new(0.0, 0.0, state.a / units.c);
    let doppler = 1.0 - n_hat.dot(beta);
    Ok(RetardedGeometry {
        n_hat,
        separation,
        beta,
        beta_dot,
        doppler,
        t_ret: sol.t_ret,
    })
}

fn velocity_term(geo: &RetardedGeometry, q: f64) -> Vec3 {
    let gamma_factor = 1.0 - geo.beta.dot(geo.beta);
    (geo.n_hat - geo.beta)
        * (q * gamma_factor / (geo.doppler.powi(3) * geo.separation * geo.separation))
}

fn acceleration_term(geo: &RetardedGeometry, q: f64, c: f64) -> Vec3 {
    let inner = (geo.n_hat - geo.beta).cross(geo.beta_dot);
    geo.n_hat.cross(inner) * (q / (c * geo.doppler.powi(3) * geo.separation))
}

/// Full Liénard-Wiechert field sample (velocity + acceleration terms), with
/// B = n̂ × E as the point-charge identity.
pub fn lw_field(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
) -> Result<FieldSample> {
    let geo = retarded_geometry(obs, t_obs, config, units)?;
    let e = velocity_term(&geo, config.q()) + acceleration_term(&geo, config.q(), units.c);
    Ok(FieldSample {
        e,
        b: geo.n_hat.cross(e),
        t_obs,
        t_ret: geo.t_ret,
        n_hat: geo.n_hat,
    })
}

/// The acceleration (1/R) part of E alone: the radiation field.
pub fn radiation_field(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
) -> Result<Vec3> {
    let geo = retarded_geometry(obs, t_obs, config, units)?;
    Ok(acceleration_term(&geo, config.q(), units.c))
}

/// Radiation field packaged as a [`FieldSample`] (B = n̂ × E_rad). Used where
/// only the radiated part of the flux is wanted.
pub fn radiation_sample(
    obs: &ObservationPoint,
    t_obs: f64,
    config: &DipoleConfig,
    units: &UnitSystem,
) -> Result<FieldSample> {
    let geo = retarded_geometry(obs, t_obs, config, units)?;
    let e = acceleration_term(&geo, config.q(), units.c);
    Ok(FieldSample {
        e,
        b: geo.n_hat.cross(e),
        t_obs,
        t_ret: geo.t_ret,
        n_hat: geo.n_hat,
    })
}
