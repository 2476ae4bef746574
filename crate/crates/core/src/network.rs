//! Lumped-element reduction of the three-junction WTQ circuit.
//!
//! Starting from the circuit parameters this module builds the
//! transformed capacitance network (Belevitch transformer with one
//! capacitor eliminated), the inverse-inductance matrix of the
//! SQUID-loop/bias-coil network, the coupling vectors to the bias
//! current source and to the dissipative impedance, and the combined
//! coordinate transformation that rescales the capacitance matrix to
//! the identity. Eliminating the two stiff loop coordinates then
//! yields the effective two-transmon Hamiltonian data ([`TwoModeSpec`])
//! and the sine-expansion coefficients ([`SineCoupling`]) that the
//! decoherence rates are built from.
//!
//! Closed forms are used throughout; generic matrix inversion appears
//! only in validation cross-checks. Capacitances are carried in fF,
//! inductances in henry; the mixed products that reach the public
//! surface (turns ratios, phase offsets, sine coefficients) are
//! dimensionless.

use nalgebra::{Matrix2, Matrix4, Matrix4x2, SMatrix, Vector2, Vector3, Vector4};

use crate::constants::REDUCED_FLUX_QUANTUM;
use crate::error::{Result, WtqError};
use crate::params::{junction_inductance_h, BiasCircuitParams, WtqCircuitParams};

/// Junction-phase coefficient matrix: φ_Ji = Σ_j alpha[(i, j)]·f_j.
pub type JunctionPhaseMap = SMatrix<f64, 3, 4>;

/// Everything derived from the circuit/bias parameters by [`reduce`].
#[derive(Debug, Clone)]
pub struct ReducedNetwork {
    /// Diagonal capacitance matrix after the transformer stage:
    /// diag(C_A, C_J2, C_J3, C_B), fF.
    pub c0_ff: Matrix4<f64>,
    /// Transformer turns ratios.
    pub t11: f64,
    /// Off-diagonal turns ratio C_c/(C₂+C_c).
    pub t12: f64,
    pub t21: f64,
    pub t22: f64,
    /// Fundamental loop matrix (4 capacitor branches × 2 loop inductors).
    pub f_cl: Matrix4x2<f64>,
    /// Inverse-inductance matrix F_CL·diag(1/L₁,1/L₂)·F_CLᵀ, 1/H.
    pub m0_per_h: Matrix4<f64>,
    /// Coupling vector to the bias current source (dimensionless M/L ratios).
    pub s0: Vector4<f64>,
    /// Small-coupling (k₁,k₂ → 0) approximation of `s0`.
    pub s0_simplified: Vector4<f64>,
    /// Coupling vector to the bath impedance: m̄₀ = −S₀.
    pub mbar0: Vector4<f64>,
    /// Impedance coupling in the rescaled frame, Rtᵀ·m̄₀ (1/√fF).
    pub mbar: Vector4<f64>,
    /// Stage transforms and their product Rt = R₀R₁R₂A⁻¹.
    pub r0: Matrix4<f64>,
    pub r1: Matrix4<f64>,
    pub r2: Matrix4<f64>,
    /// Capacitance-rescaling stage (√fF on the diagonal).
    pub a_rescale: Matrix4<f64>,
    /// Total transform; satisfies Rtᵀ·C₀·Rt = 𝟙.
    pub rt: Matrix4<f64>,

    /// Derived capacitances, fF.
    pub cap_a_ff: f64,
    /// C_B = C₂ + C_c.
    pub cap_b_ff: f64,
    /// C_a = C₁′ + C₂′C_c/(C₂′+C_c).
    pub ca_ff: f64,
    /// C_b = C₂ + C_c + C_J2 + C_J3.
    pub cb_ff: f64,
    pub c_alpha3_ff: f64,
    pub c_beta3_ff: f64,
    pub c_alpha2_ff: f64,
    pub c_beta2_ff: f64,
    pub c11_ff: f64,
    pub c22_ff: f64,
    /// Rescaling shear coefficient β (dimensionless).
    pub beta: f64,

    /// Junction-phase coefficients in the rescaled frame (rows = J₁..J₃).
    pub alpha: JunctionPhaseMap,
    /// Fast-sector (stiff loop coordinates) quadratic form, 1/(fF·H).
    pub b_fast: Matrix2<f64>,
    /// Fast-sector linear source coefficients per unit I_B/φ₀.
    pub a_fast_per_ib: Vector2<f64>,
    /// Fast-coordinate displacement per unit I_B/φ₀: −b⁻¹a.
    pub fmin0_per_ib: Vector2<f64>,
    /// Relative difference between `fmin0_per_ib` and the same quantity
    /// computed from the exact (all k orders) source coupling.
    pub fmin0_k_exact_rel_diff: f64,
    /// DC junction-phase offsets (φx₁⁰, φx₂⁰, φx₃⁰) per unit I_B/φ₀.
    pub phix0_per_ib: Vector3<f64>,

    /// Josephson energies E_Ji/h, GHz.
    pub ej_ghz: (f64, f64, f64),
    /// Junction inductances, H.
    pub lj_h: (f64, f64, f64),
    /// SQUID energy asymmetry d = (E_J3−E_J2)/(E_J2+E_J3).
    pub d: f64,
    /// Sine-expansion coefficients of the bath coupling operator.
    pub sine: SineCoupling,
}

/// DC flux biases developed across the junctions at a given bias
/// current, plus the derived operator phases. All angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseOffsets {
    /// Offset of the qubit-junction phase.
    pub phix1_0: f64,
    /// Offset of the small SQUID junction phase.
    pub phix2_0: f64,
    /// Offset of the large SQUID junction phase.
    pub phix3_0: f64,
    /// Total reduced SQUID flux φx = φx₂⁰ − φx₃⁰ = (M₁+M₂)I_B/φ₀.
    pub phix: f64,
    /// Effective offset of the combined SQUID cosine:
    /// (φx₂⁰+φx₃⁰)/2 − arctan(d·tan(φx/2)).
    pub phix_2: f64,
    /// Offset of the combined SQUID sine in the bath coupling:
    /// (φx₂⁰+φx₃⁰)/2 + arctan(d_s·tan(φx/2)).
    pub phix_s: f64,
    /// Dephasing phase φΔ = arctan(d·tan(φx/2)) + arctan(d_s·tan(φx/2)).
    pub phi_delta: f64,
}

/// Coefficients of sin(φ_Ji) in the bath-coupling operator m̄ᵀf
/// (dimensionless, reduced-phase form).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineCoupling {
    pub as1: f64,
    pub as2: f64,
    pub as3: f64,
    /// Combined amplitude A = A_s2 + A_s3.
    pub a_sum: f64,
    /// Sine asymmetry (A_s2−A_s3)/(A_s2+A_s3); `None` when A = 0.
    pub ds: Option<f64>,
}

impl SineCoupling {
    /// Amplitude of the combined SQUID sine term at reduced flux φx:
    /// |A_s2·e^{iφx/2} + A_s3·e^{−iφx/2}| expressed pole-free.
    pub fn squid_amplitude(&self, phix: f64) -> f64 {
        let h = 0.5 * phix;
        let c = (self.a_sum * h.cos()).powi(2);
        let s = ((self.as2 - self.as3) * h.sin()).powi(2);
        (c + s).sqrt()
    }

    /// True when the combined-sine asymmetry d_s is undefined (A = 0).
    pub fn degenerate(&self) -> bool {
        self.ds.is_none()
    }
}

/// Effective two-transmon Hamiltonian data at one flux point.
#[derive(Debug, Clone, Copy)]
pub struct TwoModeSpec {
    /// Capacitance matrix 𝒞 = [[C₁′+C_c, −C_c], [−C_c, C₂′+C_c]], fF.
    pub cmat_ff: Matrix2<f64>,
    /// Qubit-junction Josephson energy, GHz.
    pub ej1_ghz: f64,
    /// Flux-dependent SQUID Josephson energy E₂(φx) ≥ 0, GHz.
    pub e2_ghz: f64,
    /// SQUID energy asymmetry d.
    pub d: f64,
    /// Phase offsets this spec was evaluated at.
    pub offsets: PhaseOffsets,
}

impl TwoModeSpec {
    /// E_C matrix e²𝒞⁻¹/2h in GHz (2×2, symmetric).
    pub fn ec_matrix_ghz(&self) -> Matrix2<f64> {
        let det = self.cmat_ff[(0, 0)] * self.cmat_ff[(1, 1)]
            - self.cmat_ff[(0, 1)] * self.cmat_ff[(1, 0)];
        let inv = Matrix2::new(
            self.cmat_ff[(1, 1)],
            -self.cmat_ff[(0, 1)],
            -self.cmat_ff[(1, 0)],
            self.cmat_ff[(0, 0)],
        ) / det;
        inv * crate::constants::EC_GHZ_FF
    }
}

/// SQUID Josephson energy magnitude at reduced flux φx, GHz.
///
/// Pole-free evaluation of (E_J2+E_J3)·|cos(φx/2)|·√(1+d²tan²(φx/2)).
pub fn squid_energy_ghz(ej2_ghz: f64, ej3_ghz: f64, phix: f64) -> f64 {
    let h = 0.5 * phix;
    let c = ((ej2_ghz + ej3_ghz) * h.cos()).powi(2);
    let s = ((ej3_ghz - ej2_ghz) * h.sin()).powi(2);
    (c + s).sqrt()
}

fn closed_form_caps(p: &WtqCircuitParams) -> Result<CapSet> {
    let c2 = p.c2p_ff - p.cj2_ff - p.cj3_ff;
    let cb_denom = c2 + p.cc_ff;
    if cb_denom.abs() < 1e-12 {
        return Err(WtqError::Reduction(format!(
            "C2 + Cc = {cb_denom} fF is singular (C2 = C2' - CJ2 - CJ3 = {c2} fF)"
        )));
    }
    Ok(CapSet {
        c2,
        cap_a: p.c1p_ff + p.cc_ff * c2 / cb_denom,
        cap_b: c2 + p.cc_ff,
        ca: p.c1p_ff + p.c2p_ff * p.cc_ff / (p.c2p_ff + p.cc_ff),
        cb: c2 + p.cc_ff + p.cj2_ff + p.cj3_ff,
        c_alpha3: p.c1p_ff + p.cc_ff * (c2 + p.cj3_ff) / (c2 + p.cc_ff + p.cj3_ff),
        c_beta3: c2 + p.cc_ff + p.cj3_ff,
        c_alpha2: p.c1p_ff + p.cc_ff * (c2 + p.cj2_ff) / (c2 + p.cc_ff + p.cj2_ff),
        c_beta2: c2 + p.cc_ff + p.cj2_ff,
    })
}

struct CapSet {
    c2: f64,
    cap_a: f64,
    cap_b: f64,
    ca: f64,
    cb: f64,
    c_alpha3: f64,
    c_beta3: f64,
    c_alpha2: f64,
    c_beta2: f64,
}

/// Reduce the WTQ circuit to its effective description.
///
/// Builds every matrix of the reduction chain and checks the
/// structural identity Rtᵀ·C₀·Rt = 𝟙 before returning.
pub fn reduce(params: &WtqCircuitParams, bias: &BiasCircuitParams) -> Result<ReducedNetwork> {
    let p = params;
    let caps = closed_form_caps(p)?;
    let CapSet {
        c2,
        cap_a,
        cap_b,
        ca,
        cb,
        c_alpha3,
        c_beta3,
        c_alpha2,
        c_beta2,
    } = caps;

    let t12 = p.cc_ff / (c2 + p.cc_ff);
    let c11 = p.cj2_ff * c_alpha3 * c_beta3 / (ca * cb);
    let c22 = p.cj3_ff * cap_a * cap_b / (c_alpha3 * c_beta3);
    let beta = (p.cj2_ff * p.cj3_ff / (ca * cb)).sqrt() * (p.c1p_ff + p.cc_ff)
        / (cap_a * cap_b).sqrt();

    for (v, name) in [
        (cap_a, "C_A"),
        (cap_b, "C_B"),
        (ca, "C_a"),
        (cb, "C_b"),
        (c_alpha3, "C_alpha3"),
        (c_beta3, "C_beta3"),
        (c11, "C_11"),
        (c22, "C_22"),
    ] {
        if !(v > 0.0) {
            return Err(WtqError::Reduction(format!(
                "derived capacitance {name} = {v} fF is not positive"
            )));
        }
    }

    let c0 = Matrix4::from_diagonal(&Vector4::new(cap_a, p.cj2_ff, p.cj3_ff, cap_b));

    #[rustfmt::skip]
    let f_cl = Matrix4x2::new(
        -t12, t12,
         1.0, 0.0,
         0.0, -1.0,
        -1.0, 1.0,
    );
    let l_inv = Matrix2::new(1.0 / bias.l1_h, 0.0, 0.0, 1.0 / bias.l2_h);
    let m0 = f_cl * l_inv * f_cl.transpose();

    // Exact source coupling: S0 = -F_CL · L̄⁻¹ · (M1, M2)ᵀ · (1 − k1² − k2²),
    // with L̄ the coil-eliminated loop inductance matrix.
    let (k1, k2) = bias.coupling_coefficients();
    let lbar = Matrix2::new(
        bias.l1_h - bias.m1_h * bias.m1_h / bias.lc_h,
        -bias.m1_h * bias.m2_h / bias.lc_h,
        -bias.m1_h * bias.m2_h / bias.lc_h,
        bias.l2_h - bias.m2_h * bias.m2_h / bias.lc_h,
    );
    let mvec = Vector2::new(bias.m1_h, bias.m2_h);
    let lbar_inv_m = lbar
        .try_inverse()
        .ok_or_else(|| WtqError::Reduction("loop inductance matrix is singular".into()))?
        * mvec;
    let s0 = -(f_cl * lbar_inv_m) * (1.0 - k1 * k1 - k2 * k2);
    let s0_simplified = f_cl * Vector2::new(-bias.m1_h / bias.l1_h, -bias.m2_h / bias.l2_h);
    let mbar0 = -s0;

    #[rustfmt::skip]
    let r0 = Matrix4::new(
        1.0, 0.0, 0.0, 0.0,
        t12, 1.0, 0.0, 1.0,
        t12, 0.0, 1.0, 1.0,
        0.0, 0.0, 0.0, 1.0,
    );
    #[rustfmt::skip]
    let r1 = Matrix4::new(
        1.0, 0.0, 0.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 1.0, 0.0,
        -t12 * (p.cj2_ff + p.cj3_ff) / cb, -p.cj2_ff / cb, -p.cj3_ff / cb, 1.0,
    );
    #[rustfmt::skip]
    let r2 = Matrix4::new(
        1.0, -p.cj2_ff * p.cc_ff / (ca * cb), -p.cj3_ff * p.cc_ff / (ca * cb), 0.0,
        0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
    );
    let (sq_ca, sq_c11, sq_c22, sq_cb) = (ca.sqrt(), c11.sqrt(), c22.sqrt(), cb.sqrt());
    #[rustfmt::skip]
    let a_rescale = Matrix4::new(
        sq_ca, 0.0, 0.0, 0.0,
        0.0, sq_c11, -beta * sq_c22, 0.0,
        0.0, 0.0, sq_c22, 0.0,
        0.0, 0.0, 0.0, sq_cb,
    );
    // Closed-form inverse of the triangular rescaling stage.
    #[rustfmt::skip]
    let a_inv = Matrix4::new(
        1.0 / sq_ca, 0.0, 0.0, 0.0,
        0.0, 1.0 / sq_c11, beta / sq_c11, 0.0,
        0.0, 0.0, 1.0 / sq_c22, 0.0,
        0.0, 0.0, 0.0, 1.0 / sq_cb,
    );
    let rt = r0 * r1 * r2 * a_inv;

    let identity_residual = (rt.transpose() * c0 * rt - Matrix4::identity()).abs().max();
    if identity_residual > 1e-8 {
        return Err(WtqError::Reduction(format!(
            "capacitance rescaling failed: max |RtᵀC0Rt − 1| = {identity_residual:.3e}"
        )));
    }

    let mbar = rt.transpose() * mbar0;

    // Junction-phase coefficients in the rescaled frame.
    let sab = (ca * cb * c_alpha3 * c_beta3).sqrt();
    let sab_big = (cap_a * cap_b * c_alpha3 * c_beta3).sqrt();
    #[rustfmt::skip]
    let alpha = JunctionPhaseMap::new(
        1.0 / sq_ca, -p.cc_ff * p.cj2_ff.sqrt() / sab, -p.cc_ff * p.cj3_ff.sqrt() / sab_big, 0.0,
        (p.cc_ff / cb) / sq_ca, (1.0 / p.cj2_ff.sqrt()) * (c_alpha3 * c_beta3 / (ca * cb)).sqrt(), 0.0, 1.0 / sq_cb,
        (p.cc_ff / cb) / sq_ca, -(p.c1p_ff + p.cc_ff) * p.cj2_ff.sqrt() / sab, (1.0 / p.cj3_ff.sqrt()) * (cap_a * cap_b / (c_alpha3 * c_beta3)).sqrt(), 1.0 / sq_cb,
    );

    let alpha22 = alpha[(1, 1)];
    let alpha33 = alpha[(2, 2)];

    // Fast-sector quadratic form (stiff loop coordinates f2, f3).
    let b12 = (p.cj3_ff * ca * cb / (p.cj2_ff * cap_a * cap_b)).sqrt() * (p.c1p_ff + p.cc_ff)
        / (c_alpha3 * c_beta3 * bias.l1_h);
    let b_fast = Matrix2::new(
        1.0 / (alpha22 * alpha22 * p.cj2_ff * p.cj2_ff * bias.l1_h),
        b12,
        b12,
        1.0 / (alpha33 * alpha33 * p.cj3_ff * p.cj3_ff * bias.l2_h)
            + (p.c1p_ff + p.cc_ff).powi(2) * p.cj3_ff
                / (cap_a * cap_b * c_alpha3 * c_beta3 * bias.l1_h),
    );

    // Linear source coefficients per unit I_B/φ₀.
    let a_fast = Vector2::new(
        -bias.m1_h / (alpha22 * p.cj2_ff * bias.l1_h),
        -(p.c1p_ff + p.cc_ff) * p.cj3_ff.sqrt() * bias.m1_h / (sab_big * bias.l1_h)
            + bias.m2_h / (alpha33 * p.cj3_ff * bias.l2_h),
    );
    let b_inv = b_fast
        .try_inverse()
        .ok_or_else(|| WtqError::Reduction("fast-sector matrix is singular".into()))?;
    let fmin0 = -(b_inv * a_fast);

    // Same displacement from the exact source coupling (all k orders);
    // the relative difference quantifies the dropped k² terms.
    let s_fast_exact = {
        let s = rt.transpose() * s0;
        Vector2::new(s[1], s[2])
    };
    let fmin0_exact = -(b_inv * s_fast_exact);
    let fmin0_k_exact_rel_diff = {
        let num = (fmin0_exact - fmin0).norm();
        let den = fmin0.norm().max(f64::MIN_POSITIVE);
        num / den
    };

    // DC junction-phase offsets per unit I_B/φ₀.
    let phix0 = Vector3::new(
        p.cc_ff * (p.cj3_ff * bias.m2_h - p.cj2_ff * bias.m1_h) / (ca * cb),
        (c_alpha3 * c_beta3 * bias.m1_h + (p.c1p_ff + p.cc_ff) * p.cj3_ff * bias.m2_h) / (ca * cb),
        -((p.c1p_ff + p.cc_ff) * p.cj2_ff * bias.m1_h + c_alpha2 * c_beta2 * bias.m2_h) / (ca * cb),
    );

    let lj = (
        junction_inductance_h(p.ic1_na),
        junction_inductance_h(p.ic2_na),
        junction_inductance_h(p.ic3_na),
    );
    let as1 = p.cc_ff * (p.cj2_ff * bias.m1_h - p.cj3_ff * bias.m2_h) / (ca * cb) / lj.0;
    let as2 = -(c_alpha3 * c_beta3 * bias.m1_h + (p.c1p_ff + p.cc_ff) * p.cj3_ff * bias.m2_h)
        / (ca * cb)
        / lj.1;
    let as3 = ((p.c1p_ff + p.cc_ff) * p.cj2_ff * bias.m1_h + c_alpha2 * c_beta2 * bias.m2_h)
        / (ca * cb)
        / lj.2;
    let a_sum = as2 + as3;
    let ds = if a_sum == 0.0 {
        None
    } else {
        Some((as2 - as3) / a_sum)
    };
    let sine = SineCoupling {
        as1,
        as2,
        as3,
        a_sum,
        ds,
    };

    let ej = params.josephson_energies_ghz();
    let d = params.squid_asymmetry_d();

    Ok(ReducedNetwork {
        c0_ff: c0,
        t11: 1.0,
        t12,
        t21: 0.0,
        t22: 1.0,
        f_cl,
        m0_per_h: m0,
        s0,
        s0_simplified,
        mbar0,
        mbar,
        r0,
        r1,
        r2,
        a_rescale,
        rt,
        cap_a_ff: cap_a,
        cap_b_ff: cap_b,
        ca_ff: ca,
        cb_ff: cb,
        c_alpha3_ff: c_alpha3,
        c_beta3_ff: c_beta3,
        c_alpha2_ff: c_alpha2,
        c_beta2_ff: c_beta2,
        c11_ff: c11,
        c22_ff: c22,
        beta,
        alpha,
        b_fast,
        a_fast_per_ib: a_fast,
        fmin0_per_ib: fmin0,
        fmin0_k_exact_rel_diff,
        phix0_per_ib: phix0,
        ej_ghz: ej,
        lj_h: lj,
        d,
        sine,
    })
}

impl ReducedNetwork {
    /// Reduced SQUID flux per ampere of bias current, rad/A.
    pub fn phix_per_amp(&self) -> f64 {
        (self.phix0_per_ib[1] - self.phix0_per_ib[2]) / REDUCED_FLUX_QUANTUM
    }

    /// Bias current in mA that produces the requested reduced SQUID flux.
    pub fn ib_ma_for_phix(&self, phix: f64) -> f64 {
        phix / self.phix_per_amp() * 1e3
    }

    /// Structured text dump of every derived matrix, for inspection.
    pub fn debug_dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let mut mat4 = |name: &str, m: &Matrix4<f64>| {
            let _ = writeln!(out, "[{name}]");
            for i in 0..4 {
                let _ = writeln!(
                    out,
                    "  {:+.9e} {:+.9e} {:+.9e} {:+.9e}",
                    m[(i, 0)],
                    m[(i, 1)],
                    m[(i, 2)],
                    m[(i, 3)]
                );
            }
        };
        mat4("C0_fF", &self.c0_ff);
        mat4("M0_per_H", &self.m0_per_h);
        mat4("R0", &self.r0);
        mat4("R1", &self.r1);
        mat4("R2", &self.r2);
        mat4("A", &self.a_rescale);
        mat4("Rt", &self.rt);
        let _ = writeln!(
            out,
            "[turns_ratios]\n  t11 = {} t12 = {:.12} t21 = {} t22 = {}",
            self.t11, self.t12, self.t21, self.t22
        );
        let _ = writeln!(
            out,
            "[S0]\n  {:+.9e} {:+.9e} {:+.9e} {:+.9e}",
            self.s0[0], self.s0[1], self.s0[2], self.s0[3]
        );
        let _ = writeln!(
            out,
            "[mbar]\n  {:+.9e} {:+.9e} {:+.9e} {:+.9e}",
            self.mbar[0], self.mbar[1], self.mbar[2], self.mbar[3]
        );
        let _ = writeln!(
            out,
            "[caps_fF]\n  CA = {:.9} CB = {:.9} Ca = {:.9} Cb = {:.9}\n  Calpha3 = {:.9} Cbeta3 = {:.9} Calpha2 = {:.9} Cbeta2 = {:.9}\n  C11 = {:.9} C22 = {:.9} beta = {:.9}",
            self.cap_a_ff, self.cap_b_ff, self.ca_ff, self.cb_ff,
            self.c_alpha3_ff, self.c_beta3_ff, self.c_alpha2_ff, self.c_beta2_ff,
            self.c11_ff, self.c22_ff, self.beta,
        );
        let _ = writeln!(
            out,
            "[b_fast]\n  {:+.9e} {:+.9e}\n  {:+.9e} {:+.9e}",
            self.b_fast[(0, 0)],
            self.b_fast[(0, 1)],
            self.b_fast[(1, 0)],
            self.b_fast[(1, 1)]
        );
        let _ = writeln!(
            out,
            "[a_fast_per_ib]\n  {:+.9e} {:+.9e}",
            self.a_fast_per_ib[0], self.a_fast_per_ib[1]
        );
        let _ = writeln!(
            out,
            "[phix0_per_ib]\n  {:+.9e} {:+.9e} {:+.9e}",
            self.phix0_per_ib[0], self.phix0_per_ib[1], self.phix0_per_ib[2]
        );
        let _ = writeln!(
            out,
            "[sine_coupling]\n  As1 = {:+.9e} As2 = {:+.9e} As3 = {:+.9e} A = {:+.9e} ds = {:?}",
            self.sine.as1, self.sine.as2, self.sine.as3, self.sine.a_sum, self.sine.ds
        );
        let _ = writeln!(
            out,
            "[fmin0]\n  per_ib = ({:+.9e}, {:+.9e}) k_exact_rel_diff = {:.3e}",
            self.fmin0_per_ib[0], self.fmin0_per_ib[1], self.fmin0_k_exact_rel_diff
        );
        out
    }
}

/// DC flux biases at bias current `ib_ma` (mA).
pub fn dc_flux_biases(net: &ReducedNetwork, ib_ma: f64) -> PhaseOffsets {
    let ib_over_phi0 = ib_ma * 1e-3 / REDUCED_FLUX_QUANTUM;
    let phix1_0 = net.phix0_per_ib[0] * ib_over_phi0;
    let phix2_0 = net.phix0_per_ib[1] * ib_over_phi0;
    let phix3_0 = net.phix0_per_ib[2] * ib_over_phi0;
    let phix = phix2_0 - phix3_0;
    offsets_from_parts(net, phix1_0, phix2_0, phix3_0, phix)
}

/// Offsets for a directly-specified reduced flux φx (the per-junction
/// DC parts are reconstructed through the equivalent bias current).
pub fn offsets_for_phix(net: &ReducedNetwork, phix: f64) -> PhaseOffsets {
    let ib_over_phi0 = phix / (net.phix0_per_ib[1] - net.phix0_per_ib[2]);
    let phix1_0 = net.phix0_per_ib[0] * ib_over_phi0;
    let phix2_0 = net.phix0_per_ib[1] * ib_over_phi0;
    let phix3_0 = net.phix0_per_ib[2] * ib_over_phi0;
    offsets_from_parts(net, phix1_0, phix2_0, phix3_0, phix)
}

fn offsets_from_parts(
    net: &ReducedNetwork,
    phix1_0: f64,
    phix2_0: f64,
    phix3_0: f64,
    phix: f64,
) -> PhaseOffsets {
    let mid = 0.5 * (phix2_0 + phix3_0);
    let t = (0.5 * phix).tan();
    let chi_d = (net.d * t).atan();
    let chi_s = match net.sine.ds {
        Some(ds) => (ds * t).atan(),
        None => 0.0,
    };
    PhaseOffsets {
        phix1_0,
        phix2_0,
        phix3_0,
        phix,
        phix_2: mid - chi_d,
        phix_s: mid + chi_s,
        phi_delta: chi_d + chi_s,
    }
}

/// Effective two-transmon Hamiltonian data at the given offsets.
pub fn effective_two_mode(
    params: &WtqCircuitParams,
    net: &ReducedNetwork,
    offsets: PhaseOffsets,
) -> TwoModeSpec {
    let cmat = Matrix2::new(
        params.c1p_ff + params.cc_ff,
        -params.cc_ff,
        -params.cc_ff,
        params.c2p_ff + params.cc_ff,
    );
    let (ej1, ej2, ej3) = net.ej_ghz;
    TwoModeSpec {
        cmat_ff: cmat,
        ej1_ghz: ej1,
        e2_ghz: squid_energy_ghz(ej2, ej3, offsets.phix),
        d: net.d,
        offsets,
    }
}

/// Sine-expansion coefficients of the bath coupling operator.
pub fn sine_coupling(net: &ReducedNetwork) -> SineCoupling {
    net.sine
}
