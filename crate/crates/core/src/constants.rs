//! Physical constants (CODATA 2018) and unit conversion helpers.
//!
//! Internal unit conventions used across the crate:
//! frequencies and energies are linear-frequency equivalents in GHz
//! (E/h), capacitances in fF, critical currents in nA at the API
//! boundary, inductances in henry, external flux in units of the flux
//! quantum. SI base units are used inside the decoherence rate
//! formulas where `hbar`/`k_B` appear.

/// Elementary charge, C (exact since the 2019 SI redefinition).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Planck constant, J s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant h/2π, J s.
pub const HBAR: f64 = PLANCK / (2.0 * std::f64::consts::PI);

/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Magnetic flux quantum Φ₀ = h/2e, Wb.
pub const FLUX_QUANTUM: f64 = PLANCK / (2.0 * ELEMENTARY_CHARGE);

/// Reduced flux quantum φ₀ = Φ₀/2π, Wb.
pub const REDUCED_FLUX_QUANTUM: f64 = FLUX_QUANTUM / (2.0 * std::f64::consts::PI);

/// Resistance quantum R_Q = h/e², Ω.
pub const RESISTANCE_QUANTUM: f64 = PLANCK / (ELEMENTARY_CHARGE * ELEMENTARY_CHARGE);

/// Snapshot of the constants above as a value record, convenient for
/// reporting and for cross-checking derived quantities in tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Flux quantum Φ₀, Wb.
    pub flux_quantum: f64,
    /// Reduced flux quantum φ₀ = Φ₀/2π, Wb.
    pub reduced_flux_quantum: f64,
    /// Elementary charge e, C.
    pub electron_charge: f64,
    /// Planck constant h, J s.
    pub planck: f64,
    /// Reduced Planck constant ħ, J s.
    pub reduced_planck: f64,
    /// Boltzmann constant k_B, J/K.
    pub boltzmann: f64,
    /// Resistance quantum h/e², Ω.
    pub resistance_quantum: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            flux_quantum: FLUX_QUANTUM,
            reduced_flux_quantum: REDUCED_FLUX_QUANTUM,
            electron_charge: ELEMENTARY_CHARGE,
            planck: PLANCK,
            reduced_planck: HBAR,
            boltzmann: BOLTZMANN,
            resistance_quantum: RESISTANCE_QUANTUM,
        }
    }
}

/// E_J/h in GHz for a critical current of 1 nA: φ₀·(1 nA)/h.
pub const EJ_GHZ_PER_NA: f64 = REDUCED_FLUX_QUANTUM * 1e-9 / PLANCK / 1e9;

/// e²/2h in GHz·fF: charging energy prefactor for capacitance in fF.
pub const EC_GHZ_FF: f64 =
    ELEMENTARY_CHARGE * ELEMENTARY_CHARGE / (2.0 * PLANCK) / 1e9 * 1e15;

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn resistance_quantum_near_25813() {
        assert_relative_eq!(RESISTANCE_QUANTUM, 25813.0, max_relative = 1e-4);
    }

    #[test]
    fn reduced_flux_quantum_is_phi0_over_2pi() {
        let c = PhysicalConstants::default();
        assert_eq!(c.reduced_flux_quantum, c.flux_quantum / (2.0 * std::f64::consts::PI));
    }

    #[test]
    fn flux_quantum_against_independent_route() {
        // Φ₀ = h/2e recomputed from scratch, not through the constant chain.
        let phi0 = 6.62607015e-34 / (2.0 * 1.602176634e-19);
        assert_relative_eq!(FLUX_QUANTUM, phi0, max_relative = 1e-15);
    }

    #[test]
    fn ej_prefactor_matches_quarter_pi_e_route() {
        // φ₀/h = 1/(4π e); an algebraically independent expression.
        let per_na = 1e-9 / (4.0 * std::f64::consts::PI * 1.602176634e-19) / 1e9;
        assert_relative_eq!(EJ_GHZ_PER_NA, per_na, max_relative = 1e-14);
    }
}
