//! Unit conventions shared by every formula in the crate.
//!
//! Gaussian CGS is the native convention; a dimensionless mode (c = 1) is
//! provided for tests and examples. In dimensionless mode ħ is derived from
//! the chosen coupling constant and charge so that P = ħω·(dN/dt) holds as
//! an exact identity rather than an approximation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA fine-structure constant, used as the dimensionless-mode default.
pub const ALPHA_CODATA: f64 = 7.297_352_569_3e-3;

/// Speed of light in cm/s.
pub const C_CGS: f64 = 2.997_924_58e10;

/// Reduced Planck constant in erg·s.
pub const HBAR_CGS: f64 = 1.054_571_817e-27;

/// Elementary charge in esu (statcoulomb).
pub const E_CHARGE_CGS: f64 = 4.803_204_712e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitMode {
    Gaussian,
    Dimensionless,
}

/// Physical constants every formula evaluates under.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    pub mode: UnitMode,
    /// Speed of light (length/time).
    pub c: f64,
    /// Reduced Planck constant (energy·time).
    pub hbar: f64,
    /// Fine-structure coupling q²/(ħc) for the system's reference charge.
    pub alpha: f64,
}

impl UnitSystem {
    /// Gaussian CGS constants. α is derived from the elementary charge so
    /// that α = q_e²/(ħc) holds to machine precision.
    pub fn gaussian() -> Self {
        UnitSystem {
            mode: UnitMode::Gaussian,
            c: C_CGS,
            hbar: HBAR_CGS,
            alpha: E_CHARGE_CGS * E_CHARGE_CGS / (HBAR_CGS * C_CGS),
        }
    }

    /// Dimensionless mode: c = 1, α supplied, ħ derived as q²/(α·c) for the
    /// charge `q` carried by the oscillator.
    pub fn dimensionless(alpha: f64, q: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::invalid(format!("alpha must be positive, got {alpha}")));
        }
        if q == 0.0 || !q.is_finite() {
            return Err(Error::invalid(format!("charge must be nonzero, got {q}")));
        }
        let c = 1.0;
        Ok(UnitSystem {
            mode: UnitMode::Dimensionless,
            c,
            hbar: q * q / (alpha * c),
            alpha,
        })
    }

    /// Dimensionless mode with the CODATA α and unit charge.
    pub fn dimensionless_default() -> Self {
        Self::dimensionless(ALPHA_CODATA, 1.0).expect("default constants are valid")
    }
}
