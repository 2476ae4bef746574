//! Exact spectra of the effective two-mode Hamiltonian in the charge
//! basis, with physical labelling of the eigenlevels.
//!
//! The Hamiltonian (in GHz, per h)
//!
//! H = 4·Σ_ij EC_ij n_i n_j − E_J1 cos(φ₁+θ₁) − E₂ cos(φ₂+θ₂)
//!
//! is represented on the product charge basis |n₁, n₂⟩ with
//! n ∈ [−ncut, +ncut]; cos(φ+θ) acts as ½(e^{iθ}·raise + e^{−iθ}·lower)
//! on each mode's charge ladder. Offsets are retained (no gauge
//! shortcut) so the eigenvectors can be reused for bath matrix
//! elements; gauge invariance of the spectrum is checked in tests
//! rather than exploited.

use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Result, WtqError};
use crate::network::{self, ReducedNetwork, TwoModeSpec};
use crate::params::{BiasCircuitParams, WtqCircuitParams};

/// Charge cutoffs per mode; basis n ∈ [−ncut, +ncut].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeBasisConfig {
    pub ncut1: usize,
    pub ncut2: usize,
}

impl ChargeBasisConfig {
    /// Validated constructor: cutoffs of at least 3 keep the transmon
    /// levels of interest converged at the supported circuit scales.
    pub fn new(ncut1: usize, ncut2: usize) -> Result<Self> {
        if ncut1 < 3 || ncut2 < 3 {
            return Err(WtqError::Config(format!(
                "charge cutoffs must be at least 3, got ({ncut1}, {ncut2})"
            )));
        }
        let cfg = Self { ncut1, ncut2 };
        cfg.check_dimension()?;
        Ok(cfg)
    }

    /// Basis dimension (2·ncut1+1)(2·ncut2+1).
    pub fn dim(&self) -> usize {
        (2 * self.ncut1 + 1) * (2 * self.ncut2 + 1)
    }

    fn check_dimension(&self) -> Result<()> {
        if self.dim() > 40_000 {
            return Err(WtqError::Config(format!(
                "basis dimension {} exceeds the dense-solver limit of 40000",
                self.dim()
            )));
        }
        Ok(())
    }
}

impl Default for ChargeBasisConfig {
    fn default() -> Self {
        Self { ncut1: 10, ncut2: 10 }
    }
}

/// Which of the two modes an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Qubit (single-junction) mode.
    Qubit,
    /// SQUID (high-frequency) mode.
    Squid,
}

/// Physical role assigned to an eigenlevel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelLabel {
    Ground,
    /// n-th excitation of the qubit mode (SQUID in its ground state).
    Qubit(u8),
    /// First excitation of the SQUID mode.
    SquidOne,
}

/// One labelled eigenlevel.
#[derive(Debug, Clone, Copy)]
pub struct LevelAssignment {
    pub label: LevelLabel,
    /// Index into the ascending eigenvalue list.
    pub eigen_index: usize,
    /// Absolute eigenvalue, GHz.
    pub energy_ghz: f64,
    /// |⟨trial|eigenvector⟩| of the winning level.
    pub confidence: f64,
    /// Second-best overlap and where it occurred.
    pub runner_up_index: usize,
    pub runner_up_confidence: f64,
    /// True when the two best overlaps are within 5% of each other.
    pub ambiguous: bool,
}

/// Transition frequencies and labelling data at one flux point.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// Qubit 0→1 transition, GHz.
    pub f01_ghz: f64,
    /// Qubit 1→2 transition, GHz.
    pub f12_ghz: f64,
    /// Qubit 0→2 transition, GHz.
    pub f02_ghz: f64,
    /// SQUID-mode transition from the ground state, GHz.
    pub f10_ghz: f64,
    /// Anharmonicity f12 − f01, GHz.
    pub anharmonicity_ghz: f64,
    /// Ascending eigenvalues, GHz.
    pub levels_ghz: Vec<f64>,
    /// Labelled levels (ground, qubit 1..3, SQUID 1).
    pub assignments: Vec<LevelAssignment>,
}

impl SpectrumResult {
    pub fn assignment(&self, label: LevelLabel) -> Option<&LevelAssignment> {
        self.assignments.iter().find(|a| a.label == label)
    }
}

/// Full eigendecomposition of the two-mode Hamiltonian.
pub struct Diagonalization {
    pub cfg: ChargeBasisConfig,
    /// Ascending eigenvalues, GHz.
    pub levels_ghz: Vec<f64>,
    /// Eigenvectors as columns, ordered like `levels_ghz`.
    pub vectors: Mat<Complex64>,
}

fn raising_phase(theta: f64) -> Complex64 {
    Complex64::from_polar(0.5, theta)
}

/// Dense Hermitian two-mode Hamiltonian in the charge basis, GHz.
pub fn build_hamiltonian(spec: &TwoModeSpec, cfg: &ChargeBasisConfig) -> Result<Mat<Complex64>> {
    cfg.check_dimension()?;
    let (d1, d2) = (2 * cfg.ncut1 + 1, 2 * cfg.ncut2 + 1);
    let dim = d1 * d2;
    let ec = spec.ec_matrix_ghz();
    let (ec11, ec12, ec22) = (ec[(0, 0)], ec[(0, 1)], ec[(1, 1)]);
    let theta1 = spec.offsets.phix1_0;
    let theta2 = spec.offsets.phix_2;
    let hop1 = -spec.ej1_ghz * raising_phase(theta1);
    let hop2 = -spec.e2_ghz * raising_phase(theta2);

    let mut h = Mat::<Complex64>::zeros(dim, dim);
    for i1 in 0..d1 {
        let n1 = i1 as f64 - cfg.ncut1 as f64;
        for i2 in 0..d2 {
            let n2 = i2 as f64 - cfg.ncut2 as f64;
            let row = i1 * d2 + i2;
            h[(row, row)] = Complex64::new(
                4.0 * (ec11 * n1 * n1 + 2.0 * ec12 * n1 * n2 + ec22 * n2 * n2),
                0.0,
            );
            // raise mode 1: |n1+1, n2><n1, n2|
            if i1 + 1 < d1 {
                let up = (i1 + 1) * d2 + i2;
                h[(up, row)] = hop1;
                h[(row, up)] = hop1.conj();
            }
            // raise mode 2
            if i2 + 1 < d2 {
                let up = i1 * d2 + (i2 + 1);
                h[(up, row)] = hop2;
                h[(row, up)] = hop2.conj();
            }
        }
    }
    Ok(h)
}

/// Single-mode charge-basis Hamiltonian (used for the uncoupled trial
/// states of the level assignment).
fn single_mode_hamiltonian(ec_ghz: f64, ej_ghz: f64, theta: f64, ncut: usize) -> Mat<Complex64> {
    let d = 2 * ncut + 1;
    let hop = -ej_ghz * raising_phase(theta);
    let mut h = Mat::<Complex64>::zeros(d, d);
    for i in 0..d {
        let n = i as f64 - ncut as f64;
        h[(i, i)] = Complex64::new(4.0 * ec_ghz * n * n, 0.0);
        if i + 1 < d {
            h[(i + 1, i)] = hop;
            h[(i, i + 1)] = hop.conj();
        }
    }
    h
}

fn hermitian_eigen(h: &Mat<Complex64>) -> Result<(Vec<f64>, Mat<Complex64>)> {
    let eig = h.self_adjoint_eigen(Side::Lower).map_err(|e| {
        WtqError::Numeric(format!(
            "eigensolver failed: {e:?} (dim {}, max |H| = {:.3e})",
            h.nrows(),
            h.norm_max()
        ))
    })?;
    let dim = h.nrows();
    let mut order: Vec<usize> = (0..dim).collect();
    let s = eig.S();
    order.sort_by(|&a, &b| s[a].re.partial_cmp(&s[b].re).unwrap());
    let levels: Vec<f64> = order.iter().map(|&i| s[i].re).collect();
    let u = eig.U();
    let mut vectors = Mat::<Complex64>::zeros(dim, dim);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..dim {
            vectors[(row, col)] = u[(row, src)];
        }
    }
    Ok((levels, vectors))
}

/// Diagonalize the two-mode Hamiltonian (values and vectors).
pub fn diagonalize(spec: &TwoModeSpec, cfg: &ChargeBasisConfig) -> Result<Diagonalization> {
    let h = build_hamiltonian(spec, cfg)?;
    let (levels_ghz, vectors) = hermitian_eigen(&h)?;
    Ok(Diagonalization {
        cfg: *cfg,
        levels_ghz,
        vectors,
    })
}

/// Ascending eigenvalues of the two-mode Hamiltonian, GHz.
pub fn exact_levels(spec: &TwoModeSpec, cfg: &ChargeBasisConfig) -> Result<Vec<f64>> {
    let h = build_hamiltonian(spec, cfg)?;
    h.self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| {
            WtqError::Numeric(format!(
                "eigensolver failed: {e:?} (dim {}, max |H| = {:.3e})",
                h.nrows(),
                h.norm_max()
            ))
        })
        .map(|mut v| {
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v
        })
}

impl Diagonalization {
    /// ⟨ψ_i| sin(φ_mode + θ) |ψ_j⟩ between two eigenstates.
    pub fn sin_element(&self, mode: Mode, theta: f64, i: usize, j: usize) -> Complex64 {
        let (d1, d2) = (2 * self.cfg.ncut1 + 1, 2 * self.cfg.ncut2 + 1);
        // sin(φ+θ) = (e^{iθ}·raise − e^{−iθ}·lower)/(2i)
        let up = Complex64::from_polar(1.0, theta) / Complex64::new(0.0, 2.0);
        let dn = -Complex64::from_polar(1.0, -theta) / Complex64::new(0.0, 2.0);
        let vi = self.vectors.col(i);
        let vj = self.vectors.col(j);
        let mut acc = Complex64::new(0.0, 0.0);
        match mode {
            Mode::Qubit => {
                for n1 in 0..d1 - 1 {
                    for n2 in 0..d2 {
                        let lo = n1 * d2 + n2;
                        let hi = (n1 + 1) * d2 + n2;
                        acc += vi[hi].conj() * up * vj[lo];
                        acc += vi[lo].conj() * dn * vj[hi];
                    }
                }
            }
            Mode::Squid => {
                for n1 in 0..d1 {
                    for n2 in 0..d2 - 1 {
                        let lo = n1 * d2 + n2;
                        let hi = n1 * d2 + (n2 + 1);
                        acc += vi[hi].conj() * up * vj[lo];
                        acc += vi[lo].conj() * dn * vj[hi];
                    }
                }
            }
        }
        acc
    }

    fn best_overlaps(&self, trial: &[Complex64]) -> (usize, f64, usize, f64) {
        let dim = trial.len();
        let mut best = (0usize, -1.0f64);
        let mut second = (0usize, -1.0f64);
        for col in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            let v = self.vectors.col(col);
            for row in 0..dim {
                acc += v[row].conj() * trial[row];
            }
            let ov = acc.norm();
            if ov > best.1 {
                second = best;
                best = (col, ov);
            } else if ov > second.1 {
                second = (col, ov);
            }
        }
        (best.0, best.1, second.0, second.1)
    }
}

/// Label eigenlevels by overlap with uncoupled-product trial states.
///
/// The trial states come from the same Hamiltonian with the charging
/// off-diagonal (the C_c-induced EC₁₂) zeroed, so each is a Kronecker
/// product of single-mode eigenstates. Sorted order is not used for
/// labelling: the SQUID level crosses the third qubit level within the
/// flux sweep.
pub fn assign_levels(diag: &Diagonalization, spec: &TwoModeSpec) -> Result<SpectrumResult> {
    if diag.levels_ghz.len() < 6 {
        return Err(WtqError::Precondition(format!(
            "need at least 6 levels to assign, got {}",
            diag.levels_ghz.len()
        )));
    }
    let cfg = diag.cfg;
    let ec = spec.ec_matrix_ghz();
    let h1 = single_mode_hamiltonian(ec[(0, 0)], spec.ej1_ghz, spec.offsets.phix1_0, cfg.ncut1);
    let h2 = single_mode_hamiltonian(ec[(1, 1)], spec.e2_ghz, spec.offsets.phix_2, cfg.ncut2);
    let (_, v1) = hermitian_eigen(&h1)?;
    let (_, v2) = hermitian_eigen(&h2)?;
    let (d1, d2) = (2 * cfg.ncut1 + 1, 2 * cfg.ncut2 + 1);

    let trial = |q: usize, s: usize| -> Vec<Complex64> {
        let mut t = vec![Complex64::new(0.0, 0.0); d1 * d2];
        for n1 in 0..d1 {
            for n2 in 0..d2 {
                t[n1 * d2 + n2] = v1[(n1, q)] * v2[(n2, s)];
            }
        }
        t
    };

    let roles = [
        (LevelLabel::Ground, 0usize, 0usize),
        (LevelLabel::Qubit(1), 1, 0),
        (LevelLabel::Qubit(2), 2, 0),
        (LevelLabel::Qubit(3), 3, 0),
        (LevelLabel::SquidOne, 0, 1),
    ];
    let mut assignments = Vec::with_capacity(roles.len());
    for (label, q, s) in roles {
        let t = trial(q, s);
        let (idx, conf, ridx, rconf) = diag.best_overlaps(&t);
        assignments.push(LevelAssignment {
            label,
            eigen_index: idx,
            energy_ghz: diag.levels_ghz[idx],
            confidence: conf,
            runner_up_index: ridx,
            runner_up_confidence: rconf,
            ambiguous: rconf >= 0.95 * conf,
        });
    }

    let energy = |label: LevelLabel| -> f64 {
        assignments
            .iter()
            .find(|a| a.label == label)
            .map(|a| a.energy_ghz)
            .unwrap()
    };
    let e_g = energy(LevelLabel::Ground);
    let f01 = energy(LevelLabel::Qubit(1)) - e_g;
    let f12 = energy(LevelLabel::Qubit(2)) - energy(LevelLabel::Qubit(1));
    let f02 = energy(LevelLabel::Qubit(2)) - e_g;
    let f10 = energy(LevelLabel::SquidOne) - e_g;

    Ok(SpectrumResult {
        f01_ghz: f01,
        f12_ghz: f12,
        f02_ghz: f02,
        f10_ghz: f10,
        anharmonicity_ghz: f12 - f01,
        levels_ghz: diag.levels_ghz.clone(),
        assignments,
    })
}

/// Exact spectrum at one reduced flux φx.
pub fn spectrum_at_phix(
    params: &WtqCircuitParams,
    net: &ReducedNetwork,
    phix: f64,
    cfg: &ChargeBasisConfig,
) -> Result<SpectrumResult> {
    let offsets = network::offsets_for_phix(net, phix);
    let spec = network::effective_two_mode(params, net, offsets);
    let diag = diagonalize(&spec, cfg)?;
    assign_levels(&diag, &spec)
}

/// One point of a flux sweep.
#[derive(Debug, Clone)]
pub struct SpectrumPoint {
    /// External flux in units of Φ₀.
    pub flux_phi0: f64,
    pub result: SpectrumResult,
}

/// Exact spectra over a flux grid plus the derived tunability figures.
#[derive(Debug, Clone)]
pub struct SpectrumCurve {
    pub points: Vec<SpectrumPoint>,
    /// Tunability δ = f01(0) − f01(Φ₀/2), GHz.
    pub tunability_ghz: f64,
    /// |α(0)| − |α(Φ₀/2)|, GHz.
    pub anharmonicity_variation_ghz: f64,
}

/// Sweep the exact spectrum over `flux_grid` (units of Φ₀, each within
/// [−1, 1]). The sweet-spot values entering the tunability figures are
/// always evaluated, whether or not the grid contains them.
pub fn sweep_flux(
    params: &WtqCircuitParams,
    bias: &BiasCircuitParams,
    flux_grid: &[f64],
    cfg: &ChargeBasisConfig,
) -> Result<SpectrumCurve> {
    if let Some(bad) = flux_grid.iter().find(|f| !(-1.0..=1.0).contains(*f)) {
        return Err(WtqError::Config(format!(
            "flux grid value {bad} outside [-1, 1] (units of Phi0)"
        )));
    }
    let net = network::reduce(params, bias)?;
    let mut points = Vec::with_capacity(flux_grid.len());
    for &flux in flux_grid {
        let result = spectrum_at_phix(params, &net, 2.0 * std::f64::consts::PI * flux, cfg)?;
        points.push(SpectrumPoint {
            flux_phi0: flux,
            result,
        });
    }
    let at_zero = spectrum_at_phix(params, &net, 0.0, cfg)?;
    let at_half = spectrum_at_phix(params, &net, std::f64::consts::PI, cfg)?;
    Ok(SpectrumCurve {
        points,
        tunability_ghz: at_zero.f01_ghz - at_half.f01_ghz,
        anharmonicity_variation_ghz: at_zero.anharmonicity_ghz.abs()
            - at_half.anharmonicity_ghz.abs(),
    })
}

/// Where the SQUID level crosses the third qubit level.
#[derive(Debug, Clone, Copy)]
pub struct CrossingInfo {
    /// Flux (Φ₀ units) of the smallest SQUID/qubit-3 gap on the grid.
    pub flux_phi0: f64,
    /// f10 at that point, GHz.
    pub f10_ghz: f64,
    /// Minimum |E(SQUID) − E(qubit 3)| gap, GHz.
    pub gap_ghz: f64,
    /// Runner-up overlap of the SQUID assignment there (hybridization
    /// indicator; ≈ best overlap at a strong avoided crossing).
    pub runner_up_confidence: f64,
}

impl SpectrumCurve {
    /// Locate the avoided crossing between the SQUID level and the
    /// third qubit level, as the grid point of minimum gap.
    pub fn squid_crossing(&self) -> Option<CrossingInfo> {
        let mut best: Option<CrossingInfo> = None;
        for p in &self.points {
            let s1 = p.result.assignment(LevelLabel::SquidOne)?;
            let q3 = p.result.assignment(LevelLabel::Qubit(3))?;
            let gap = (s1.energy_ghz - q3.energy_ghz).abs();
            if best.as_ref().map_or(true, |b| gap < b.gap_ghz) {
                best = Some(CrossingInfo {
                    flux_phi0: p.flux_phi0,
                    f10_ghz: p.result.f10_ghz,
                    gap_ghz: gap,
                    runner_up_confidence: s1.runner_up_confidence,
                });
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{effective_two_mode, offsets_for_phix, reduce, PhaseOffsets};
    use crate::params::{BiasCircuitParams, WtqCircuitParams};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn example_net() -> (WtqCircuitParams, ReducedNetwork) {
        let p = WtqCircuitParams::example_device();
        let net = reduce(&p, &BiasCircuitParams::default()).unwrap();
        (p, net)
    }

    fn spec_at(phix: f64) -> TwoModeSpec {
        let (p, net) = example_net();
        effective_two_mode(&p, &net, offsets_for_phix(&net, phix))
    }

    #[test]
    fn hamiltonian_is_hermitian() {
        let spec = spec_at(1.1);
        let cfg = ChargeBasisConfig::new(4, 4).unwrap();
        let h = build_hamiltonian(&spec, &cfg).unwrap();
        let mut max_dev: f64 = 0.0;
        let mut max_abs: f64 = 0.0;
        for i in 0..h.nrows() {
            for j in 0..h.ncols() {
                max_dev = max_dev.max((h[(i, j)] - h[(j, i)].conj()).norm());
                max_abs = max_abs.max(h[(i, j)].norm());
            }
        }
        assert!(max_dev < 1e-12 * max_abs);
    }

    #[test]
    fn diagonal_hamiltonian_without_josephson_terms() {
        let mut spec = spec_at(0.0);
        spec.ej1_ghz = 0.0;
        spec.e2_ghz = 0.0;
        let cfg = ChargeBasisConfig::new(3, 3).unwrap();
        let h = build_hamiltonian(&spec, &cfg).unwrap();
        let ec = spec.ec_matrix_ghz();
        for i1 in 0..7 {
            for i2 in 0..7 {
                let n1 = i1 as f64 - 3.0;
                let n2 = i2 as f64 - 3.0;
                let row = i1 * 7 + i2;
                let expect =
                    4.0 * (ec[(0, 0)] * n1 * n1 + 2.0 * ec[(0, 1)] * n1 * n2 + ec[(1, 1)] * n2 * n2);
                assert_relative_eq!(h[(row, row)].re, expect, max_relative = 1e-12);
            }
        }
        for i in 0..49 {
            for j in 0..49 {
                if i != j {
                    assert_eq!(h[(i, j)], num_complex::Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn nine_by_nine_matches_hand_oracle() {
        // Independent hand assembly for ncut = 1 (dimension 9), compared
        // through the eigenvalues of an nalgebra Hermitian solve.
        let spec = spec_at(0.9);
        let cfg = ChargeBasisConfig { ncut1: 1, ncut2: 1 };
        let h = build_hamiltonian(&spec, &cfg).unwrap();
        assert_eq!(h.nrows(), 9);

        let ec = spec.ec_matrix_ghz();
        let th1 = spec.offsets.phix1_0;
        let th2 = spec.offsets.phix_2;
        let e1 = spec.ej1_ghz;
        let e2 = spec.e2_ghz;
        let mut oracle = nalgebra::DMatrix::<num_complex::Complex64>::zeros(9, 9);
        let charge = [-1.0f64, 0.0, 1.0];
        for a in 0..3usize {
            for b in 0..3usize {
                let i = a * 3 + b;
                oracle[(i, i)] = num_complex::Complex64::new(
                    4.0 * (ec[(0, 0)] * charge[a] * charge[a]
                        + 2.0 * ec[(0, 1)] * charge[a] * charge[b]
                        + ec[(1, 1)] * charge[b] * charge[b]),
                    0.0,
                );
                for ap in 0..3usize {
                    for bp in 0..3usize {
                        let j = ap * 3 + bp;
                        let mut v = num_complex::Complex64::new(0.0, 0.0);
                        if b == bp && ap + 1 == a {
                            v += -e1 * num_complex::Complex64::from_polar(0.5, th1);
                        }
                        if b == bp && a + 1 == ap {
                            v += -e1 * num_complex::Complex64::from_polar(0.5, -th1);
                        }
                        if a == ap && bp + 1 == b {
                            v += -e2 * num_complex::Complex64::from_polar(0.5, th2);
                        }
                        if a == ap && b + 1 == bp {
                            v += -e2 * num_complex::Complex64::from_polar(0.5, -th2);
                        }
                        if v.norm() > 0.0 {
                            oracle[(i, j)] = v;
                        }
                    }
                }
            }
        }
        for i in 0..9 {
            for j in 0..9 {
                assert_abs_diff_eq!(h[(i, j)].re, oracle[(i, j)].re, epsilon = 1e-12);
                assert_abs_diff_eq!(h[(i, j)].im, oracle[(i, j)].im, epsilon = 1e-12);
            }
        }
        let exact = exact_levels(&spec, &cfg).unwrap();
        let mut oracle_levels: Vec<f64> = nalgebra::SymmetricEigen::new(oracle)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        oracle_levels.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (a, b) in exact.iter().zip(oracle_levels.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12 * exact.last().unwrap().abs().max(1.0));
        }
    }

    #[test]
    fn gauge_invariance_of_levels() {
        let spec = spec_at(0.7);
        let cfg = ChargeBasisConfig::new(6, 6).unwrap();
        let base = exact_levels(&spec, &cfg).unwrap();
        let mut shifted = spec;
        shifted.offsets = PhaseOffsets {
            phix1_0: spec.offsets.phix1_0 + 0.83,
            phix_2: spec.offsets.phix_2 - 1.21,
            ..spec.offsets
        };
        let gauged = exact_levels(&shifted, &cfg).unwrap();
        for (a, b) in base.iter().zip(gauged.iter()).take(12) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn example_device_frequency_and_anharmonicity() {
        let (p, net) = example_net();
        let cfg = ChargeBasisConfig::default();
        let r0 = spectrum_at_phix(&p, &net, 0.0, &cfg).unwrap();
        // Frozen from an independent dense diagonalization (numpy eigh).
        assert_relative_eq!(r0.f01_ghz, 4.994555821580732, max_relative = 1e-8);
        assert_relative_eq!(r0.f12_ghz, 4.691637046287283, max_relative = 1e-8);
        assert_relative_eq!(r0.f10_ghz, 15.77548410091461, max_relative = 1e-8);
        // f01 ≈ 5.0 GHz, anharmonicity < 0 in the transmon regime
        assert_relative_eq!(r0.f01_ghz, 5.0, max_relative = 0.02);
        assert!(r0.anharmonicity_ghz < 0.0);
        assert_relative_eq!(r0.f02_ghz, r0.f01_ghz + r0.f12_ghz, epsilon = 1e-9);
    }

    #[test]
    fn uncoupled_assignment_is_certain() {
        let (p, net) = example_net();
        let mut p0 = p;
        p0.cc_ff = 1e-9; // effectively uncoupled
        let net0 = reduce(&p0, &BiasCircuitParams::default()).unwrap();
        let cfg = ChargeBasisConfig::new(6, 6).unwrap();
        let r = spectrum_at_phix(&p0, &net0, 0.6, &cfg).unwrap();
        for a in &r.assignments {
            assert!(a.confidence > 0.999999, "{:?}", a);
            assert!(!a.ambiguous);
        }
        let _ = net;
    }

    #[test]
    fn assignment_matches_sorted_levels_away_from_crossings() {
        let (p, net) = example_net();
        let cfg = ChargeBasisConfig::default();
        let r = spectrum_at_phix(&p, &net, 0.4, &cfg).unwrap();
        assert_relative_eq!(
            r.f01_ghz,
            r.levels_ghz[1] - r.levels_ghz[0],
            max_relative = 1e-12
        );
    }

    #[test]
    fn flux_mirror_symmetry() {
        let (p, net) = example_net();
        let cfg = ChargeBasisConfig::default();
        for flux in [0.15, 0.35] {
            let plus = spectrum_at_phix(&p, &net, 2.0 * std::f64::consts::PI * flux, &cfg).unwrap();
            let minus =
                spectrum_at_phix(&p, &net, -2.0 * std::f64::consts::PI * flux, &cfg).unwrap();
            assert_abs_diff_eq!(plus.f01_ghz, minus.f01_ghz, epsilon = 1e-9);
            assert_abs_diff_eq!(plus.f10_ghz, minus.f10_ghz, epsilon = 1e-9);
        }
    }

    #[test]
    fn cutoff_convergence() {
        let (p, net) = example_net();
        let lo = spectrum_at_phix(&p, &net, 1.9, &ChargeBasisConfig::new(10, 10).unwrap()).unwrap();
        let hi = spectrum_at_phix(&p, &net, 1.9, &ChargeBasisConfig::new(14, 14).unwrap()).unwrap();
        assert_abs_diff_eq!(lo.f01_ghz, hi.f01_ghz, epsilon = 1e-6);
        assert_abs_diff_eq!(lo.f12_ghz, hi.f12_ghz, epsilon = 1e-6);
        assert_abs_diff_eq!(lo.f10_ghz, hi.f10_ghz, epsilon = 1e-6);
    }

    #[test]
    fn sweep_reports_tunability() {
        let p = WtqCircuitParams::example_device();
        let b = BiasCircuitParams::default();
        let grid: Vec<f64> = (0..11).map(|i| i as f64 * 0.05).collect();
        let curve = sweep_flux(&p, &b, &grid, &ChargeBasisConfig::default()).unwrap();
        // δ ≈ 50 MHz, anharmonicity variation ≈ 17-19 MHz
        assert_relative_eq!(curve.tunability_ghz, 0.0505, max_relative = 0.05);
        assert!(curve.anharmonicity_variation_ghz > 0.012);
        assert!(curve.anharmonicity_variation_ghz < 0.022);
        let crossing = curve.squid_crossing().unwrap();
        assert!(
            (crossing.f10_ghz - 14.0).abs() < 1.5,
            "crossing at {} GHz",
            crossing.f10_ghz
        );
    }

    #[test]
    fn grid_outside_unit_range_rejected() {
        let p = WtqCircuitParams::example_device();
        let b = BiasCircuitParams::default();
        let err = sweep_flux(&p, &b, &[0.0, 1.2], &ChargeBasisConfig::default()).unwrap_err();
        assert!(matches!(err, WtqError::Config(_)));
    }

    #[test]
    fn dimension_guard() {
        assert!(ChargeBasisConfig::new(120, 120).is_err());
        assert!(ChargeBasisConfig::new(2, 5).is_err());
    }
}
