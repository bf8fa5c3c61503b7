//! Property-based invariants over randomized configurations.

use proptest::prelude::*;
use std::f64::consts::PI;

use dipole_lab::analytic::exact_average_power;
use dipole_lab::kinematics::DipoleConfig;
use dipole_lab::retarded::{solve_retarded_time, ObservationPoint};
use dipole_lab::units::UnitSystem;
use dipole_lab::ww::{ww_photon_rate, ww_power};

fn units() -> UnitSystem {
    UnitSystem::dimensionless_default()
}

prop_compose! {
    fn arb_config()(
        beta in 1e-4..0.5f64,
        omega in 0.05..20.0f64,
        q in prop_oneof![(-3.0..-0.1f64), (0.1..3.0f64)],
    ) -> DipoleConfig {
        let u = units();
        DipoleConfig::new(q, beta * u.c / omega, omega, &u).unwrap()
    }
}

proptest! {
    #[test]
    fn kinematics_is_periodic(cfg in arb_config(), phase in 0.0..1.0f64) {
        let t = phase * cfg.period();
        let a = cfg.kinematics(t);
        let b = cfg.kinematics(t + cfg.period());
        let scale = cfg.z0();
        prop_assert!((a.z - b.z).abs() <= 1e-11 * scale);
        prop_assert!((a.v - b.v).abs() <= 1e-11 * scale * cfg.omega());
    }

    #[test]
    fn trajectory_stays_bounded(cfg in arb_config(), t in -100.0..100.0f64) {
        let s = cfg.kinematics(t);
        prop_assert!(s.z.abs() <= cfg.z0() * (1.0 + 1e-15));
        prop_assert!(s.v.abs() <= cfg.z0() * cfg.omega() * (1.0 + 1e-15));
    }

    #[test]
    fn retarded_solution_is_causal_and_tight(
        cfg in arb_config(),
        r_over_z0 in 2.0..1e3f64,
        theta in 0.0..PI,
        t_phase in -3.0..3.0f64,
    ) {
        let u = units();
        let obs = ObservationPoint::new(cfg.z0() * r_over_z0, theta, 0.0).unwrap();
        let t_obs = t_phase * cfg.period();
        let sol = solve_retarded_time(&obs, t_obs, &cfg, &u).unwrap();
        prop_assert!(sol.t_ret < t_obs);
        prop_assert!(sol.residual <= 1e-12 * obs.r);
        // the light-cone condition itself
        let travel = u.c * (t_obs - sol.t_ret);
        prop_assert!((travel - sol.separation).abs() <= 1e-12 * obs.r);
    }

    #[test]
    fn photon_chain_identity(cfg in arb_config()) {
        // hbar is derived from the oscillator's own charge so the chain
        // closes exactly
        let u = UnitSystem::dimensionless(units().alpha, cfg.q()).unwrap();
        let power = ww_power(&cfg, &u);
        let chain = u.hbar * cfg.omega() * ww_photon_rate(&cfg, &u);
        prop_assert!((power - chain).abs() <= 1e-14 * power);
    }

    #[test]
    fn ww_to_exact_ratio_is_universal(cfg in arb_config()) {
        let u = units();
        let ratio = ww_power(&cfg, &u) / exact_average_power(&cfg, &u);
        prop_assert!((ratio - 3.0 / (2.0 * PI)).abs() <= 1e-13);
    }

    #[test]
    fn powers_are_nonnegative(cfg in arb_config()) {
        let u = units();
        prop_assert!(ww_power(&cfg, &u) >= 0.0);
        prop_assert!(exact_average_power(&cfg, &u) >= 0.0);
    }
}
