//! Simulation and analysis toolkit for weakly flux-tunable transmon
//! qubits (WTQs): three-junction circuit reduction, flux-dependent
//! spectra (closed-form and exact charge-basis diagonalization),
//! relaxation/dephasing estimates for the flux-bias circuit, heating
//! and flux-noise phenomenology, spectroscopy fitting, and
//! frequency-collision yield.

pub mod constants;
pub mod error;
pub mod network;
pub mod spectrum;
pub mod params;

pub use error::{Result, WtqError};
pub use network::{
    dc_flux_biases, effective_two_mode, offsets_for_phix, reduce, sine_coupling, PhaseOffsets,
    ReducedNetwork, SineCoupling, TwoModeSpec,
};
pub use params::{
    charging_energy_ghz, josephson_energy_ghz, validate, validate_environment, BiasCircuitParams,
    CheckedParams, EnvironmentParams, WtqCircuitParams,
};
