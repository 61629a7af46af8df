//! Two detectors at the same point, sharing one Unruh bath.
//!
//! The Kossakowski matrix is `C_ij = A δ_ij − i B ε_ijk n_k + C n_i n_j`,
//! identical for every pair of detectors (zero separation), and the
//! generator is
//! `L[ρ] = Σ_{αβ} Σ_{ij} C_ij (σ_j^β ρ σ_i^α − ½{σ_i^α σ_j^β, ρ})`.
//! Lamb-shift and free-Hamiltonian terms are not part of this generator.

use nalgebra::{Unit, Vector3};

use crate::error::{Error, Result};
use crate::spectrum::DissipationCoeffs;
use crate::state::{c, pauli_product, Mat4, PauliCoeffs, C64};
use crate::superop::Superoperator16;

pub type Direction = Unit<Vector3<f64>>;

pub fn z_axis() -> Direction {
    Vector3::z_axis()
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `C_ij` for `i, j ∈ {1, 2, 3}` (stored zero-based).
pub fn kossakowski_matrix(coeffs: &DissipationCoeffs, n: &Direction) -> [[C64; 3]; 3] {
    let mut k = [[c(0.0, 0.0); 3]; 3];
    for (i, row) in k.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let delta = if i == j { coeffs.a } else { 0.0 };
            let eps: f64 = (0..3).map(|l| levi_civita(i, j, l) * n[l]).sum();
            *entry = c(delta + coeffs.c * n[i] * n[j], -coeffs.b * eps);
        }
    }
    k
}

/// Dissipative generator of the common-bath model.
pub fn build_common_bath_liouvillian(coeffs: &DissipationCoeffs, n: &Direction) -> Superoperator16 {
    let k = kossakowski_matrix(coeffs, n);
    // σ_i^α for α ∈ {A, B}
    let ops: Vec<[Mat4; 3]> = vec![
        [pauli_product(1, 0), pauli_product(2, 0), pauli_product(3, 0)],
        [pauli_product(0, 1), pauli_product(0, 2), pauli_product(0, 3)],
    ];
    Superoperator16::from_map(|rho| {
        let mut out = Mat4::zeros();
        for a in &ops {
            for b in &ops {
                for i in 0..3 {
                    for j in 0..3 {
                        let w = k[i][j];
                        if w == c(0.0, 0.0) {
                            continue;
                        }
                        let prod = a[i] * b[j];
                        out += (b[j] * rho * a[i] - (prod * rho + rho * prod).scale(0.5)) * w;
                    }
                }
            }
        }
        out
    })
}

/// Closed-form stationary state of the common-bath generator for
/// `R = B/A` and conserved `τ* = Σ_i Tr(ρ σ_i⊗σ_i)`, in correlation-tensor
/// form:
///
/// `t_0i = t_i0 = −R(τ* + 3) n_i / (3 + R²)`,
/// `t_ij = [(τ* − R²) δ_ij + R²(τ* + 3) n_i n_j] / (3 + R²)`.
pub fn equilibrium_steady_state(ratio: f64, tau_star: f64, n: &Direction) -> Result<PauliCoeffs> {
    if !(-3.0..=1.0).contains(&tau_star) {
        return Err(Error::Domain(format!("tau* must lie in [-3, 1], got {tau_star}")));
    }
    if !ratio.is_finite() {
        return Err(Error::Domain(format!("R must be finite, got {ratio}")));
    }
    let r2 = ratio * ratio;
    let denom = 3.0 + r2;
    let mut t = [[0.0; 4]; 4];
    t[0][0] = 1.0;
    for i in 0..3 {
        let local = -ratio * (tau_star + 3.0) * n[i] / denom;
        t[0][i + 1] = local;
        t[i + 1][0] = local;
        for j in 0..3 {
            let delta = if i == j { tau_star - r2 } else { 0.0 };
            t[i + 1][j + 1] = (delta + r2 * (tau_star + 3.0) * n[i] * n[j]) / denom;
        }
    }
    PauliCoeffs::from_correlations(t)
}
