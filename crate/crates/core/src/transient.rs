//! One-sided transient model: qubit A couples to the Unruh bath while the
//! auxiliary qubit B is isolated.

use crate::error::{Error, Result};
use crate::state::{c, kron, pauli, Mat2, Mat4, PauliCoeffs};
use crate::superop::Superoperator16;

/// Closed-form evolution of the Pauli coefficients at proper time `tau`.
///
/// `decay` is `A = γ₊ + γ₋`, `bias` is `B` (see
/// [`crate::spectrum::BiasOrientation`]), `gap` is the effective gap `Ω`.
/// For every column `j`:
///
/// ```text
/// ρ_0j(τ) = ρ_0j(0)
/// ρ_1j(τ) = e^{−Aτ/2} [ρ_1j(0) cos Ωτ − ρ_2j(0) sin Ωτ]
/// ρ_2j(τ) = e^{−Aτ/2} [ρ_1j(0) sin Ωτ + ρ_2j(0) cos Ωτ]
/// ρ_3j(τ) = ρ_3j(0) e^{−Aτ} − (B/A) ρ_0j(0) (1 − e^{−Aτ})
/// ```
pub fn transient_evolution(p0: &PauliCoeffs, decay: f64, bias: f64, gap: f64, tau: f64) -> Result<PauliCoeffs> {
    if !(decay.is_finite() && decay > 0.0) {
        return Err(Error::Domain(format!("decay rate A must be positive, got {decay}")));
    }
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(Error::Domain(format!("time must be non-negative, got {tau}")));
    }
    let r0 = p0.as_array();
    let half = (-0.5 * decay * tau).exp();
    let full = (-decay * tau).exp();
    let (sin, cos) = (gap * tau).sin_cos();
    let drift = -(bias / decay) * (-(decay * tau)).exp_m1();
    let mut rho = [[0.0; 4]; 4];
    for j in 0..4 {
        rho[0][j] = r0[0][j];
        rho[1][j] = half * (r0[1][j] * cos - r0[2][j] * sin);
        rho[2][j] = half * (r0[1][j] * sin + r0[2][j] * cos);
        rho[3][j] = r0[3][j] * full - drift * r0[0][j];
    }
    PauliCoeffs::new(rho)
}

/// Long-time limit of [`transient_evolution`].
pub fn transient_asymptote(p0: &PauliCoeffs, decay: f64, bias: f64) -> Result<PauliCoeffs> {
    if !(decay.is_finite() && decay > 0.0) {
        return Err(Error::Domain(format!("decay rate A must be positive, got {decay}")));
    }
    let r0 = p0.as_array();
    let mut rho = [[0.0; 4]; 4];
    for j in 0..4 {
        rho[0][j] = r0[0][j];
        rho[3][j] = -(bias / decay) * r0[0][j];
    }
    PauliCoeffs::new(rho)
}

/// `−i[Ω/2 σ_z ⊗ 𝟙, ρ] + γ₋ D[σ₋ ⊗ 𝟙] + γ₊ D[σ₊ ⊗ 𝟙]` with
/// `D[L]ρ = LρL† − ½{L†L, ρ}`.
pub fn build_one_sided_liouvillian(gamma_minus: f64, gamma_plus: f64, gap: f64) -> Superoperator16 {
    let id = Mat2::identity();
    let lowering = (pauli(1) - pauli(2) * c(0.0, 1.0)).scale(0.5);
    let raising = lowering.adjoint();
    let h: Mat4 = kron(&pauli(3), &id).scale(gap / 2.0);
    Superoperator16::commutator(&h)
        + Superoperator16::dissipator(&kron(&lowering, &id), gamma_minus)
        + Superoperator16::dissipator(&kron(&raising, &id), gamma_plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::concurrence;
    use crate::spectrum::{dissipation_coeffs, BathSpectrum, BiasOrientation};
    use crate::state::{density_to_pauli, pauli_to_density, DensityMatrix4};
    use crate::superop::integrate_rk4;

    #[test]
    fn identity_at_time_zero() {
        let p0 = PauliCoeffs::bell_phi_plus();
        let p = transient_evolution(&p0, 0.3, 0.2, 0.1, 0.0).unwrap();
        assert!(p.max_abs_diff(&p0) < 1e-16);
    }

    #[test]
    fn rejects_bad_rates() {
        let p0 = PauliCoeffs::bell_phi_plus();
        assert!(transient_evolution(&p0, 0.0, 0.0, 0.1, 1.0).is_err());
        assert!(transient_evolution(&p0, 0.1, 0.0, 0.1, -1.0).is_err());
    }

    #[test]
    fn bell_limit_is_uncorrelated_product() {
        let c = dissipation_coeffs(&BathSpectrum::unruh(0.25).unwrap(), 0.1, 0.01).unwrap();
        let (a, b) = c.transient_rates(BiasOrientation::Thermal);
        let p0 = PauliCoeffs::bell_phi_plus();
        let late = transient_evolution(&p0, a, b, 0.1, 80.0 / a).unwrap();
        let limit = transient_asymptote(&p0, a, b).unwrap();
        assert!(late.max_abs_diff(&limit) < 1e-15);
        let rho = pauli_to_density(&limit).unwrap();
        // Gibbs qubit A times maximally mixed B
        let gibbs_z = -c.ratio;
        assert!((rho.expectation(3, 0) - gibbs_z).abs() < 1e-14);
        for i in 1..4 {
            for j in 1..4 {
                assert!(rho.expectation(i, j).abs() < 1e-15);
            }
        }
        assert_eq!(concurrence(&rho), 0.0);
    }

    #[test]
    fn printed_orientation_inverts_population() {
        let c = dissipation_coeffs(&BathSpectrum::unruh(0.25).unwrap(), 0.1, 0.01).unwrap();
        let (a, b) = c.transient_rates(BiasOrientation::AsPrinted);
        let limit = pauli_to_density(&transient_asymptote(&PauliCoeffs::bell_phi_plus(), a, b).unwrap()).unwrap();
        // excited state (σ_z = +1) dominates
        assert!(limit.expectation(3, 0) > 0.0);
    }

    #[test]
    fn matches_integrated_generator_short_horizon() {
        let c = dissipation_coeffs(&BathSpectrum::unruh(0.4).unwrap(), 0.1, 0.05).unwrap();
        let (a, b) = c.transient_rates(BiasOrientation::Thermal);
        let l = build_one_sided_liouvillian(c.gamma_minus, c.gamma_plus, 0.1);
        assert!(l.trace_defect() < 1e-16);
        let rho0 = DensityMatrix4::bell_phi_plus();
        let times: Vec<f64> = (0..=10).map(|k| k as f64 * 20.0).collect();
        let traj = integrate_rk4(&l, rho0.matrix(), 0.05, &times).unwrap();
        for (t, m) in times.iter().zip(&traj) {
            let closed = transient_evolution(&PauliCoeffs::bell_phi_plus(), a, b, 0.1, *t).unwrap();
            let numeric = density_to_pauli(&DensityMatrix4::from_hermitian_part(m).unwrap());
            assert!(closed.max_abs_diff(&numeric) < 1e-9, "t = {t}");
        }
    }
}
