//! Two-qubit states: the Hermitian density matrix and its real
//! Pauli-product expansion `ρ = Σ ρ_ij σ_i ⊗ σ_j`.
//!
//! Computational basis ordering is `|00⟩, |01⟩, |10⟩, |11⟩` with the first
//! factor being qubit A, and `σ₃ = diag(1, −1)`.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues down to `-PSD_TOL` are treated as rounding noise.
pub const PSD_TOL: f64 = 1e-10;

pub(crate) const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `σ₀ … σ₃`.
pub fn pauli(i: usize) -> Mat2 {
    let (o, l, j) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match i {
        0 => Mat2::new(l, o, o, l),
        1 => Mat2::new(o, l, l, o),
        2 => Mat2::new(o, -j, j, o),
        3 => Mat2::new(l, o, o, -l),
        _ => panic!("Pauli index out of range: {i}"),
    }
}

pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, s| a[(r / 2, s / 2)] * b[(r % 2, s % 2)])
}

/// `σ_i ⊗ σ_j`.
pub fn pauli_product(i: usize, j: usize) -> Mat4 {
    kron(&pauli(i), &pauli(j))
}

/// Largest entry of `m − m†`.
pub fn hermiticity_error(m: &Mat4) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermitian_part(m: &Mat4) -> Mat4 {
    (m + m.adjoint()).scale(0.5)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &Mat4) -> [f64; 4] {
    let mut e: Vec<f64> = SymmetricEigen::new(hermitian_part(m)).eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    [e[0], e[1], e[2], e[3]]
}

/// A validated two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    m: Mat4,
}

impl DensityMatrix4 {
    /// Checks Hermiticity, unit trace and positivity at the crate tolerances.
    pub fn new(m: Mat4) -> Result<Self> {
        let herm = hermiticity_error(&m);
        if !(herm <= HERMITIAN_TOL) {
            return Err(Error::InvalidState(format!("not Hermitian (defect {herm:e})")));
        }
        let tr = m.trace();
        if !((tr.re - 1.0).abs() <= TRACE_TOL && tr.im.abs() <= TRACE_TOL) {
            return Err(Error::InvalidState(format!("trace {tr} is not 1")));
        }
        let min = hermitian_eigenvalues(&m)[0];
        if !(min >= -PSD_TOL) {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { m })
    }

    /// Symmetrizes `m` before validating; for outputs of numerical routines
    /// whose anti-Hermitian part is pure rounding.
    pub fn from_hermitian_part(m: &Mat4) -> Result<Self> {
        Self::new(hermitian_part(m))
    }

    pub fn pure(psi: [C64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        let v: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        Self::from_hermitian_part(&Mat4::from_fn(|r, s| v[r] * v[s].conj()))
    }

    pub fn maximally_mixed() -> Self {
        Self { m: Mat4::identity().scale(0.25) }
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus() -> Self {
        let h = c(0.5, 0.0);
        let mut m = Mat4::zeros();
        m[(0, 0)] = h;
        m[(0, 3)] = h;
        m[(3, 0)] = h;
        m[(3, 3)] = h;
        Self { m }
    }

    /// `p |ψ⁻⟩⟨ψ⁻| + (1 − p) 𝟙/4`.
    pub fn werner(p: f64) -> Result<Self> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = Self::pure([c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)])?;
        Self::new(singlet.m.scale(p) + Mat4::identity().scale((1.0 - p) / 4.0))
    }

    pub fn product(a: &Mat2, b: &Mat2) -> Result<Self> {
        Self::new(kron(a, b))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn into_matrix(self) -> Mat4 {
        self.m
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues(&self.m)
    }

    /// Reduced state of qubit A (trace over B).
    pub fn reduced_a(&self) -> Mat2 {
        Mat2::from_fn(|r, s| self.m[(2 * r, 2 * s)] + self.m[(2 * r + 1, 2 * s + 1)])
    }

    /// Reduced state of qubit B (trace over A).
    pub fn reduced_b(&self) -> Mat2 {
        Mat2::from_fn(|r, s| self.m[(r, s)] + self.m[(r + 2, s + 2)])
    }

    /// `Tr(ρ σ_i ⊗ σ_j)`.
    pub fn expectation(&self, i: usize, j: usize) -> f64 {
        (self.m * pauli_product(i, j)).trace().re
    }

    /// `Σ_i Tr(ρ σ_i ⊗ σ_i)`, conserved by the common-bath dynamics.
    pub fn tau_star(&self) -> f64 {
        (1..4).map(|i| self.expectation(i, i)).sum()
    }

    /// Conjugate by a unitary: `U ρ U†`.
    pub fn rotated(&self, u: &Mat4) -> Result<Self> {
        Self::from_hermitian_part(&(u * self.m * u.adjoint()))
    }
}

/// Real coefficients of `ρ = Σ_{ij} ρ_ij σ_i ⊗ σ_j` with `ρ_ij = Tr(ρ σ_i⊗σ_j)/4`,
/// so `ρ_00 = 1/4`.
///
/// Correlation-tensor values `Tr(ρ σ_i⊗σ_j)` are exposed through
/// [`PauliCoeffs::correlation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoeffs {
    rho: [[f64; 4]; 4],
}

impl PauliCoeffs {
    pub fn new(rho: [[f64; 4]; 4]) -> Result<Self> {
        if (rho[0][0] - 0.25).abs() > 1e-14 {
            return Err(Error::InvalidState(format!("rho_00 = {} is not 1/4", rho[0][0])));
        }
        if rho.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidState("non-finite Pauli coefficient".into()));
        }
        let mut rho = rho;
        rho[0][0] = 0.25;
        Ok(Self { rho })
    }

    /// From correlation-tensor values `t_ij = Tr(ρ σ_i⊗σ_j)`; `t_00` must be 1.
    pub fn from_correlations(t: [[f64; 4]; 4]) -> Result<Self> {
        let mut rho = [[0.0; 4]; 4];
        for (i, row) in t.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                rho[i][j] = v / 4.0;
            }
        }
        Self::new(rho)
    }

    pub fn maximally_mixed() -> Self {
        let mut rho = [[0.0; 4]; 4];
        rho[0][0] = 0.25;
        Self { rho }
    }

    /// `(|00⟩ + |11⟩)/√2`: `ρ_00 = ρ_11 = −ρ_22 = ρ_33 = 1/4`.
    pub fn bell_phi_plus() -> Self {
        let mut rho = [[0.0; 4]; 4];
        rho[0][0] = 0.25;
        rho[1][1] = 0.25;
        rho[2][2] = -0.25;
        rho[3][3] = 0.25;
        Self { rho }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rho[i][j]
    }

    pub fn as_array(&self) -> &[[f64; 4]; 4] {
        &self.rho
    }

    /// `Tr(ρ σ_i⊗σ_j) = 4 ρ_ij`.
    pub fn correlation(&self, i: usize, j: usize) -> f64 {
        4.0 * self.rho[i][j]
    }

    pub fn tau_star(&self) -> f64 {
        (1..4).map(|i| self.correlation(i, i)).sum()
    }

    pub fn to_matrix(&self) -> Mat4 {
        let mut m = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                if self.rho[i][j] != 0.0 {
                    m += pauli_product(i, j).scale(self.rho[i][j]);
                }
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.rho
            .iter()
            .flatten()
            .zip(other.rho.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

pub fn pauli_to_density(p: &PauliCoeffs) -> Result<DensityMatrix4> {
    DensityMatrix4::new(p.to_matrix())
}

pub fn density_to_pauli(m: &DensityMatrix4) -> PauliCoeffs {
    let mut rho = [[0.0; 4]; 4];
    for (i, row) in rho.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = m.expectation(i, j) / 4.0;
        }
    }
    rho[0][0] = 0.25;
    PauliCoeffs { rho }
}
