use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::state::{hermitian_part, pauli_product, DensityMatrix4, Mat4, C64};

/// Entries outside the X pattern must be below this for the shortcut.
pub const X_SHAPE_TOL: f64 = 1e-12;

/// Eigenvalues of `ρ` below this are rounding noise and are set to zero
/// before taking square roots.
const EIGEN_FLOOR: f64 = 1e-14;

/// Wootters concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`, where `λ_i` are the
/// descending square roots of the eigenvalues of `√ρ ρ̃ √ρ` and
/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
///
/// The `λ_i` are taken as the singular values of `√ρ (σ_y⊗σ_y) √ρ*`, whose
/// Gram matrix is `√ρ ρ̃ √ρ`; this avoids a second square root, which
/// would amplify rounding to `~1e−8` on rank-deficient states.
pub fn concurrence(rho: &DensityMatrix4) -> f64 {
    let yy = pauli_product(2, 2);
    let eig = SymmetricEigen::new(hermitian_part(rho.matrix()));
    let roots = eig.eigenvalues.map(|l| C64::new(if l > EIGEN_FLOOR { l.sqrt() } else { 0.0 }, 0.0));
    let sqrt_rho: Mat4 = eig.eigenvectors * Mat4::from_diagonal(&roots) * eig.eigenvectors.adjoint();
    let m = sqrt_rho * yy * sqrt_rho.conjugate();
    let mut lambdas: Vec<f64> = m.singular_values().iter().copied().collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0)
}

/// True when every entry off the main and anti-diagonal is below
/// [`X_SHAPE_TOL`].
pub fn is_x_state(rho: &DensityMatrix4) -> bool {
    let m = rho.matrix();
    (0..4).all(|r| (0..4).all(|s| r == s || r + s == 3 || m[(r, s)].norm() < X_SHAPE_TOL))
}

/// Closed form for X states:
/// `2 max(0, |ρ₀₃| − √(ρ₁₁ρ₂₂), |ρ₁₂| − √(ρ₀₀ρ₃₃))`.
pub fn concurrence_xstate(rho: &DensityMatrix4) -> Result<f64> {
    if !is_x_state(rho) {
        return Err(Error::InvalidState("state is not X-shaped".into()));
    }
    let m = rho.matrix();
    let p = |k: usize| m[(k, k)].re.max(0.0);
    let outer = m[(0, 3)].norm() - (p(1) * p(2)).sqrt();
    let inner = m[(1, 2)].norm() - (p(0) * p(3)).sqrt();
    Ok((2.0 * outer.max(inner).max(0.0)).min(1.0))
}
