//! Circuit, bias-circuit and environment parameter records with validation.

use crate::constants::{EC_GHZ_FF, EJ_GHZ_PER_NA};
use crate::error::{Result, WtqError};

/// Josephson energy as a frequency, E_J/h in GHz, from a critical
/// current in nA.
pub fn josephson_energy_ghz(ic_na: f64) -> Result<f64> {
    if !(ic_na >= 0.0) {
        return Err(WtqError::Domain(format!(
            "critical current must be non-negative, got {ic_na} nA"
        )));
    }
    Ok(ic_na * EJ_GHZ_PER_NA)
}

/// Inverse of [`josephson_energy_ghz`]: critical current in nA for a
/// Josephson energy E_J/h in GHz.
pub fn critical_current_na(ej_ghz: f64) -> f64 {
    ej_ghz / EJ_GHZ_PER_NA
}

/// Charging energy as a frequency, E_C/h = e²/2hC in GHz, from a
/// capacitance in fF.
pub fn charging_energy_ghz(c_ff: f64) -> Result<f64> {
    if !(c_ff > 0.0) {
        return Err(WtqError::Domain(format!(
            "capacitance must be positive, got {c_ff} fF"
        )));
    }
    Ok(EC_GHZ_FF / c_ff)
}

/// Inverse of [`charging_energy_ghz`].
pub fn capacitance_ff(ec_ghz: f64) -> f64 {
    EC_GHZ_FF / ec_ghz
}

/// Junction inductance L_J = φ₀/I_c in henry, current in nA.
pub fn junction_inductance_h(ic_na: f64) -> f64 {
    crate::constants::REDUCED_FLUX_QUANTUM / (ic_na * 1e-9)
}

/// WTQ circuit parameters.
///
/// Primed capacitances follow the shunt convention: `c1p` = C₁′ = C₁+C_J1
/// and `c2p` = C₂′ = C₂+C_J2+C_J3 already include the junction
/// self-capacitances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WtqCircuitParams {
    /// Critical current of the single (qubit) junction, nA.
    pub ic1_na: f64,
    /// Critical current of the small SQUID junction, nA.
    pub ic2_na: f64,
    /// Critical current of the large SQUID junction, nA.
    pub ic3_na: f64,
    /// Total shunt capacitance of the qubit mode C₁′, fF.
    pub c1p_ff: f64,
    /// Total shunt capacitance of the SQUID mode C₂′, fF.
    pub c2p_ff: f64,
    /// Coupling capacitance C_c, fF.
    pub cc_ff: f64,
    /// Junction self-capacitances, fF.
    pub cj1_ff: f64,
    /// Small SQUID junction self-capacitance, fF.
    pub cj2_ff: f64,
    /// Large SQUID junction self-capacitance, fF.
    pub cj3_ff: f64,
}

impl WtqCircuitParams {
    /// SQUID junction asymmetry αJ = I_c3/I_c2.
    pub fn alpha_j(&self) -> f64 {
        self.ic3_na / self.ic2_na
    }

    /// Josephson energies (E_J1, E_J2, E_J3)/h in GHz.
    pub fn josephson_energies_ghz(&self) -> (f64, f64, f64) {
        (
            self.ic1_na * EJ_GHZ_PER_NA,
            self.ic2_na * EJ_GHZ_PER_NA,
            self.ic3_na * EJ_GHZ_PER_NA,
        )
    }

    /// SQUID asymmetry d = (E_J3−E_J2)/(E_J2+E_J3).
    pub fn squid_asymmetry_d(&self) -> f64 {
        (self.ic3_na - self.ic2_na) / (self.ic2_na + self.ic3_na)
    }

    /// The example device of the reference calculation: 26/26/91 nA
    /// junctions, 50/20/20 fF shunts, 1/1/3.5 fF junction capacitances.
    /// Maximum frequency near 5 GHz, anharmonicity near 300 MHz,
    /// tunability near 50 MHz.
    pub fn example_device() -> Self {
        Self {
            ic1_na: 26.0,
            ic2_na: 26.0,
            ic3_na: 91.0,
            c1p_ff: 50.0,
            c2p_ff: 20.0,
            cc_ff: 20.0,
            cj1_ff: 1.0,
            cj2_ff: 1.0,
            cj3_ff: 3.5,
        }
    }
}

/// Flux-bias circuit parameters: SQUID-loop partial inductances, bias
/// coil, mutuals and the dissipative bath they expose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiasCircuitParams {
    /// Partial loop inductance on the small-junction branch, H.
    pub l1_h: f64,
    /// Partial loop inductance on the large-junction branch, H.
    pub l2_h: f64,
    /// Bias coil inductance, H.
    pub lc_h: f64,
    /// Mutual inductance coil ↔ branch 1, H.
    pub m1_h: f64,
    /// Mutual inductance coil ↔ branch 2, H.
    pub m2_h: f64,
    /// Bath resistance Re[Z], Ω.
    pub r_ohm: f64,
    /// Bath temperature, K.
    pub t_bath_k: f64,
}

impl BiasCircuitParams {
    /// Inductive coupling coefficients (k₁, k₂).
    pub fn coupling_coefficients(&self) -> (f64, f64) {
        (
            self.m1_h / (self.lc_h * self.l1_h).sqrt(),
            self.m2_h / (self.lc_h * self.l2_h).sqrt(),
        )
    }

    /// Total mutual inductance M₁+M₂, H.
    pub fn total_mutual_h(&self) -> f64 {
        self.m1_h + self.m2_h
    }
}

impl Default for BiasCircuitParams {
    /// Defaults consistent with the measured hardware scale: L₁ = L₂ =
    /// 10 pH, M₁ = M₂ = 0.5 pH (total mutual 1 pH), L_c = 5.5 mH coil,
    /// R = 0.1 Ω at 0.02 K.
    fn default() -> Self {
        Self {
            l1_h: 10e-12,
            l2_h: 10e-12,
            lc_h: 5.5e-3,
            m1_h: 0.5e-12,
            m2_h: 0.5e-12,
            r_ohm: 0.1,
            t_bath_k: 0.02,
        }
    }
}

/// Flux-independent caps and readout/heating/flux-noise inputs used by
/// the coherence models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvironmentParams {
    /// Flux-independent T₁ ceiling, µs.
    pub t1_cap_us: f64,
    /// T₂ ceiling as a multiple of the T₁ ceiling (≤ 2).
    pub t2_cap_ratio: f64,
    /// Readout linewidth κ/2π, MHz.
    pub kappa_mhz: f64,
    /// Dispersive shift χ/2π, MHz.
    pub chi_mhz: f64,
    /// Readout resonator frequency, GHz.
    pub f_r_ghz: f64,
    /// Feedline effective temperature at zero bias current, mK.
    pub te_base_mk: f64,
    /// Heating coefficient Θ, mK/mA².
    pub theta_mk_per_ma2: f64,
    /// Coil effective temperature at zero bias current, K.
    pub tm_base_k: f64,
    /// Optional experimental bound on dispersive dephasing, µs
    /// (disabled when `None`).
    pub tphi_d0_us: Option<f64>,
    /// 1/f flux-noise amplitude √A_Φ at 1 Hz, µΦ₀.
    pub flux_noise_sqrt_a_uphi0: f64,
    /// Infrared cutoff of the 1/f noise, Hz.
    pub f_ir_hz: f64,
    /// Ramsey reference time entering the log factor, µs.
    pub t_ref_us: f64,
}

impl EnvironmentParams {
    /// Pure-dephasing ceiling implied by the T₁/T₂ caps through
    /// 1/T₂ = 1/2T₁ + 1/Tφ, µs. Infinite when the ratio is exactly 2.
    pub fn tphi_cap_us(&self) -> f64 {
        let inv = 1.0 / (self.t2_cap_ratio * self.t1_cap_us) - 0.5 / self.t1_cap_us;
        if inv <= 0.0 {
            f64::INFINITY
        } else {
            1.0 / inv
        }
    }
}

impl Default for EnvironmentParams {
    /// Defaults reproduce the reference coherence plots: T₁ capped at
    /// 100 µs, T₂ cap 1.5·T₁, conservative flux-noise amplitude
    /// 2 µΦ₀ at 1 Hz with a 1 Hz infrared cutoff and 10 µs Ramsey time.
    fn default() -> Self {
        Self {
            t1_cap_us: 100.0,
            t2_cap_ratio: 1.5,
            kappa_mhz: 0.82,
            chi_mhz: 0.51,
            f_r_ghz: 6.9567,
            te_base_mk: 78.0,
            theta_mk_per_ma2: 5.0,
            tm_base_k: 0.02,
            tphi_d0_us: None,
            flux_noise_sqrt_a_uphi0: 2.0,
            f_ir_hz: 1.0,
            t_ref_us: 10.0,
        }
    }
}

/// A circuit/bias pair that passed [`validate`].
#[derive(Debug, Clone)]
pub struct CheckedParams {
    pub circuit: WtqCircuitParams,
    pub bias: BiasCircuitParams,
    /// Non-fatal advisories (e.g. αJ below one).
    pub warnings: Vec<&'static str>,
}

/// Validate a circuit/bias parameter pair.
///
/// Fails with a list of violations naming each offending field. Warns
/// (non-fatally) when αJ < 1, since the intended regime makes the
/// third junction the larger one.
pub fn validate(
    circuit: WtqCircuitParams,
    bias: BiasCircuitParams,
) -> Result<CheckedParams> {
    let mut violations = Vec::new();
    let mut warnings = Vec::new();

    let pos = [
        (circuit.ic1_na, "ic1_na"),
        (circuit.ic2_na, "ic2_na"),
        (circuit.ic3_na, "ic3_na"),
        (circuit.c1p_ff, "c1p_ff"),
        (circuit.c2p_ff, "c2p_ff"),
        (circuit.cc_ff, "cc_ff"),
        (circuit.cj1_ff, "cj1_ff"),
        (circuit.cj2_ff, "cj2_ff"),
        (circuit.cj3_ff, "cj3_ff"),
    ];
    for (v, name) in pos {
        if !(v > 0.0) {
            violations.push(format!("{name} must be strictly positive, got {v}"));
        }
    }

    if circuit.c1p_ff < circuit.cj1_ff {
        violations.push(format!(
            "c1p_ff = {} must include cj1_ff = {} (primed capacitance)",
            circuit.c1p_ff, circuit.cj1_ff
        ));
    }
    if circuit.c2p_ff < circuit.cj2_ff + circuit.cj3_ff {
        violations.push(format!(
            "c2p_ff = {} must include cj2_ff + cj3_ff = {} (primed capacitance)",
            circuit.c2p_ff,
            circuit.cj2_ff + circuit.cj3_ff
        ));
    }

    for (v, name) in [
        (bias.l1_h, "l1_h"),
        (bias.l2_h, "l2_h"),
        (bias.lc_h, "lc_h"),
    ] {
        if !(v > 0.0) {
            violations.push(format!("{name} must be strictly positive, got {v}"));
        }
    }
    if !(bias.r_ohm >= 0.0) {
        violations.push(format!("r_ohm must be non-negative, got {}", bias.r_ohm));
    }
    if !(bias.t_bath_k >= 0.0) {
        violations.push(format!("t_bath_k must be non-negative, got {}", bias.t_bath_k));
    }

    if violations.is_empty() {
        let (k1, k2) = bias.coupling_coefficients();
        if k1.abs() >= 0.1 {
            violations.push(format!(
                "coupling coefficient k1 = {k1:.3} outside the small-coupling regime (|k| < 0.1)"
            ));
        }
        if k2.abs() >= 0.1 {
            violations.push(format!(
                "coupling coefficient k2 = {k2:.3} outside the small-coupling regime (|k| < 0.1)"
            ));
        }
        if circuit.alpha_j() < 1.0 {
            warnings.push("alphaJ = ic3/ic2 < 1: junction 3 is expected to be the larger one");
        }
    }

    if violations.is_empty() {
        Ok(CheckedParams {
            circuit,
            bias,
            warnings,
        })
    } else {
        Err(WtqError::Validation(violations))
    }
}

/// Validate environment parameters.
pub fn validate_environment(env: &EnvironmentParams) -> Result<()> {
    let mut violations = Vec::new();
    if !(env.t1_cap_us > 0.0) {
        violations.push(format!("t1_cap_us must be positive, got {}", env.t1_cap_us));
    }
    if !(env.t2_cap_ratio > 0.0 && env.t2_cap_ratio <= 2.0) {
        violations.push(format!(
            "t2_cap_ratio must lie in (0, 2] (T2 <= 2 T1), got {}",
            env.t2_cap_ratio
        ));
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(WtqError::Validation(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn josephson_energy_examples() {
        // Frozen from the independent 1/(4πe) route.
        assert_relative_eq!(
            josephson_energy_ghz(26.0).unwrap(),
            12.913771280193563,
            max_relative = 1e-12
        );
        assert_eq!(josephson_energy_ghz(0.0).unwrap(), 0.0);
        assert_relative_eq!(
            josephson_energy_ghz(20.0).unwrap(),
            9.933670215533513,
            max_relative = 1e-12
        );
        // ~0.4967 GHz per nA
        assert_relative_eq!(josephson_energy_ghz(1.0).unwrap(), 0.4967, max_relative = 1e-3);
        assert!(josephson_energy_ghz(-1.0).is_err());
    }

    #[test]
    fn charging_energy_examples() {
        assert_relative_eq!(
            charging_energy_ghz(70.0).unwrap(),
            0.27671756178084456,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            charging_energy_ghz(40.0).unwrap(),
            0.484255733116478,
            max_relative = 1e-12
        );
        // inverse scaling: 1e6 fF is 70 fF value times 7e-5
        assert_relative_eq!(
            charging_energy_ghz(1e6).unwrap(),
            charging_energy_ghz(70.0).unwrap() * 7e-5,
            max_relative = 1e-12
        );
        assert!(charging_energy_ghz(0.0).is_err());
        assert!(charging_energy_ghz(-3.0).is_err());
    }

    #[test]
    fn unit_round_trips() {
        for ic in [0.5, 26.0, 91.0, 400.0] {
            let ej = josephson_energy_ghz(ic).unwrap();
            assert_relative_eq!(critical_current_na(ej), ic, max_relative = 1e-12);
        }
        for c in [1.0, 40.0, 70.0, 1e6] {
            let ec = charging_energy_ghz(c).unwrap();
            assert_relative_eq!(capacitance_ff(ec), c, max_relative = 1e-12);
        }
    }

    #[test]
    fn monotonicity() {
        let mut last_ej = -1.0;
        let mut last_ec = f64::INFINITY;
        for i in 1..100 {
            let x = i as f64;
            let ej = josephson_energy_ghz(x).unwrap();
            let ec = charging_energy_ghz(x).unwrap();
            assert!(ej > last_ej);
            assert!(ec < last_ec);
            last_ej = ej;
            last_ec = ec;
        }
    }

    #[test]
    fn example_device_is_valid() {
        let checked = validate(WtqCircuitParams::example_device(), BiasCircuitParams::default())
            .expect("example device validates");
        assert!(checked.warnings.is_empty());
        assert_relative_eq!(checked.circuit.alpha_j(), 3.5, max_relative = 1e-9);
    }

    #[test]
    fn negative_cc_rejected_by_name() {
        let mut p = WtqCircuitParams::example_device();
        p.cc_ff = -1.0;
        let err = validate(p, BiasCircuitParams::default()).unwrap_err();
        match err {
            WtqError::Validation(v) => {
                assert!(v.iter().any(|m| m.contains("cc_ff")), "messages: {v:?}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn oversized_coupling_rejected() {
        let mut b = BiasCircuitParams::default();
        // k1 = M1/sqrt(Lc L1) = 0.5 requires M1 = 0.5*sqrt(Lc*L1)
        b.m1_h = 0.5 * (b.lc_h * b.l1_h).sqrt();
        let err = validate(WtqCircuitParams::example_device(), b).unwrap_err();
        match err {
            WtqError::Validation(v) => {
                assert!(v.iter().any(|m| m.contains("k1")), "messages: {v:?}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn alpha_j_below_one_warns() {
        let mut p = WtqCircuitParams::example_device();
        std::mem::swap(&mut p.ic2_na, &mut p.ic3_na);
        std::mem::swap(&mut p.cj2_ff, &mut p.cj3_ff);
        let checked = validate(p, BiasCircuitParams::default()).unwrap();
        assert_eq!(checked.warnings.len(), 1);
    }

    #[test]
    fn tphi_cap_from_t2_ratio() {
        let env = EnvironmentParams::default();
        // 1/150 - 1/200 = 1/600
        assert_relative_eq!(env.tphi_cap_us(), 600.0, max_relative = 1e-12);
        let loose = EnvironmentParams {
            t2_cap_ratio: 2.0,
            ..EnvironmentParams::default()
        };
        assert!(loose.tphi_cap_us().is_infinite());
    }
}
