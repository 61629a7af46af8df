use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::state::{hermitian_part, DensityMatrix4, Mat2, Mat4, PSD_TOL};

/// `−Σ λ log₂ λ` over a spectrum, after clipping rounding-level negative
/// eigenvalues to zero and renormalizing.
pub fn entropy_from_eigenvalues(eigenvalues: &[f64]) -> Result<f64> {
    let mut clipped = Vec::with_capacity(eigenvalues.len());
    for &l in eigenvalues {
        if !(l >= -PSD_TOL) {
            return Err(Error::InvalidState(format!("negative eigenvalue {l:e}")));
        }
        clipped.push(l.max(0.0));
    }
    let total: f64 = clipped.iter().sum();
    if !(total > 0.0) {
        return Err(Error::InvalidState("spectrum has zero weight".into()));
    }
    Ok(clipped
        .iter()
        .map(|l| l / total)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum::<f64>()
        .max(0.0))
}

/// Binary entropy `h(p)` in bits.
pub fn binary_entropy(p: f64) -> f64 {
    [p, 1.0 - p].iter().filter(|&&x| x > 0.0).map(|x| -x * x.log2()).sum()
}

/// Entropy of a qubit with Bloch vector length `r`.
pub(crate) fn qubit_entropy(r: f64) -> f64 {
    binary_entropy((1.0 + r.min(1.0)) / 2.0)
}

pub(crate) fn eigenvalues_2x2(m: &Mat2) -> [f64; 2] {
    let mean = (m[(0, 0)].re + m[(1, 1)].re) / 2.0;
    let half_gap = ((m[(0, 0)].re - m[(1, 1)].re) / 2.0).hypot(m[(0, 1)].norm());
    [mean - half_gap, mean + half_gap]
}

pub fn vn_entropy(rho: &DensityMatrix4) -> Result<f64> {
    entropy_from_eigenvalues(&rho.eigenvalues())
}

/// Von Neumann entropy of a one-qubit density matrix.
pub fn vn_entropy_qubit(m: &Mat2) -> Result<f64> {
    entropy_from_eigenvalues(&eigenvalues_2x2(m))
}

/// `S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information(rho: &DensityMatrix4) -> Result<f64> {
    let sa = vn_entropy_qubit(&rho.reduced_a())?;
    let sb = vn_entropy_qubit(&rho.reduced_b())?;
    Ok((sa + sb - vn_entropy(rho)?).max(0.0))
}

/// `Σ_{i≠j} |ρ_ij|` in the computational basis.
pub fn l1_coherence(rho: &DensityMatrix4) -> f64 {
    off_diagonal_sum(rho.matrix())
}

/// l1 coherence in the basis given by the columns of the unitary `basis`.
pub fn l1_coherence_in_basis(rho: &DensityMatrix4, basis: &Mat4) -> f64 {
    off_diagonal_sum(&(basis.adjoint() * rho.matrix() * basis))
}

fn off_diagonal_sum(m: &Mat4) -> f64 {
    let mut sum = 0.0;
    for r in 0..4 {
        for s in 0..4 {
            if r != s {
                sum += m[(r, s)].norm();
            }
        }
    }
    sum
}

/// Quantum relative entropy `S(ρ‖σ) = Tr ρ log₂ ρ − Tr ρ log₂ σ`.
///
/// Returns `f64::INFINITY` when the support of `ρ` is not contained in that
/// of `σ`.
pub fn relative_entropy(rho: &DensityMatrix4, sigma: &DensityMatrix4) -> Result<f64> {
    let neg_entropy = -vn_entropy(rho)?;
    let eig = SymmetricEigen::new(hermitian_part(sigma.matrix()));
    let mut cross = 0.0;
    for (k, &l) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(k);
        let weight = (v.adjoint() * rho.matrix() * v)[(0, 0)].re;
        if l <= PSD_TOL {
            if weight > PSD_TOL {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        cross += weight * l.log2();
    }
    Ok((neg_entropy - cross).max(0.0))
}
