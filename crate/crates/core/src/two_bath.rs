//! Two interacting qubits, each coupled to its own Unruh bath.
//!
//! `H = ω₁/2 σ_z⊗𝟙 + ω₂/2 𝟙⊗σ_z + K (σ₊⊗σ₋ + σ₋⊗σ₊)`. With `σ_z = diag(1, −1)`
//! the excited single-qubit state is `|0⟩`, so the ground state `|λ₁⟩` is
//! `|11⟩` in the computational basis. The eigenstates are
//!
//! ```text
//! |λ₁⟩ = |gg⟩                               E₁ = −(ω₁ + ω₂)/2
//! |λ₂⟩ = |ee⟩                               E₂ =  (ω₁ + ω₂)/2
//! |λ₃⟩ =  cos(θ/2)|eg⟩ + sin(θ/2)|ge⟩       E₃ =  κ
//! |λ₄⟩ = −sin(θ/2)|eg⟩ + cos(θ/2)|ge⟩       E₄ = −κ
//! ```
//!
//! with `κ = √(K² + (ω₁ − ω₂)²/4)` and `tan θ = 2K/(ω₁ − ω₂)`.

use nalgebra::Vector4;

use crate::error::{Error, Result};
use crate::spectrum::{BathSpectrum, VacuumKind};
use crate::state::{c, hermiticity_error, DensityMatrix4, Mat4, C64};
use crate::superop::Superoperator16;

/// Computational-basis indices of `|ee⟩, |eg⟩, |ge⟩, |gg⟩`.
const EE: usize = 0;
const EG: usize = 1;
const GE: usize = 2;
const GG: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitHamiltonian {
    pub omega1: f64,
    pub omega2: f64,
    pub coupling: f64,
}

impl TwoQubitHamiltonian {
    pub fn new(omega1: f64, omega2: f64, coupling: f64) -> Result<Self> {
        if !(omega1.is_finite() && omega1 > 0.0 && omega2.is_finite() && omega2 > 0.0) {
            return Err(Error::Domain(format!("gaps must be positive, got {omega1}, {omega2}")));
        }
        if !coupling.is_finite() {
            return Err(Error::Domain("coupling must be finite".into()));
        }
        Ok(Self { omega1, omega2, coupling })
    }

    pub fn symmetric(omega: f64, coupling: f64) -> Result<Self> {
        Self::new(omega, omega, coupling)
    }

    pub fn is_symmetric(&self) -> bool {
        self.omega1 == self.omega2
    }

    /// Matrix in the computational basis.
    pub fn matrix(&self) -> Mat4 {
        let mut h = Mat4::zeros();
        let (w1, w2) = (self.omega1, self.omega2);
        h[(EE, EE)] = c((w1 + w2) / 2.0, 0.0);
        h[(EG, EG)] = c((w1 - w2) / 2.0, 0.0);
        h[(GE, GE)] = c((w2 - w1) / 2.0, 0.0);
        h[(GG, GG)] = c(-(w1 + w2) / 2.0, 0.0);
        h[(EG, GE)] = c(self.coupling, 0.0);
        h[(GE, EG)] = c(self.coupling, 0.0);
        h
    }
}

/// Spectrum of [`TwoQubitHamiltonian`] with the `λ₁…λ₄` labelling above.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenStructure {
    /// `E₁ … E₄`
    pub energies: [f64; 4],
    pub theta: f64,
    pub kappa_mix: f64,
    /// `Ω₁ = E₂ − E₃`
    pub omega1: f64,
    /// `Ω₂ = E₂ + E₃`
    pub omega2: f64,
    /// `|λ₁⟩ … |λ₄⟩` in the computational basis.
    pub vectors: [Vector4<C64>; 4],
}

impl EigenStructure {
    /// Unitary whose columns are `|λ₁⟩ … |λ₄⟩`.
    pub fn basis_change(&self) -> Mat4 {
        Mat4::from_columns(&self.vectors)
    }

    pub fn hamiltonian(&self) -> Mat4 {
        let u = self.basis_change();
        let d = Mat4::from_diagonal(&Vector4::from_iterator(self.energies.iter().map(|e| c(*e, 0.0))));
        u * d * u.adjoint()
    }

    /// `|λ_a⟩⟨λ_b|` (zero-based labels).
    pub fn transition(&self, a: usize, b: usize) -> Mat4 {
        self.vectors[a] * self.vectors[b].adjoint()
    }
}

pub fn eigen_structure(h: &TwoQubitHamiltonian) -> Result<EigenStructure> {
    let detuning = h.omega1 - h.omega2;
    if h.coupling == 0.0 && detuning == 0.0 {
        return Err(Error::Domain("degenerate single-excitation doublet: K = 0 and ω₁ = ω₂".into()));
    }
    let kappa_mix = (h.coupling * h.coupling + detuning * detuning / 4.0).sqrt();
    let theta = (2.0 * h.coupling).atan2(detuning);
    let mean = (h.omega1 + h.omega2) / 2.0;
    if !(mean > kappa_mix) {
        return Err(Error::Domain(format!(
            "coupling too strong: κ = {kappa_mix} is not below (ω₁ + ω₂)/2 = {mean}"
        )));
    }
    let (s, co) = (theta / 2.0).sin_cos();
    let unit = |k: usize| {
        let mut v = Vector4::zeros();
        v[k] = c(1.0, 0.0);
        v
    };
    let lambda3 = unit(EG).scale(co) + unit(GE).scale(s);
    let lambda4 = unit(EG).scale(-s) + unit(GE).scale(co);
    Ok(EigenStructure {
        energies: [-mean, mean, kappa_mix, -kappa_mix],
        theta,
        kappa_mix,
        omega1: mean - kappa_mix,
        omega2: mean + kappa_mix,
        vectors: [unit(GG), unit(EE), lambda3, lambda4],
    })
}

/// Jump operators in the eigenbasis: `ops[j][μ]` for qubit `j` and channel
/// `μ`, where channel 0 lowers the energy by `Ω₁` and channel 1 by `Ω₂`.
///
/// Qubit 1: `s(|λ₃⟩⟨λ₂| − |λ₁⟩⟨λ₄|)` at `Ω₁`, `c(|λ₁⟩⟨λ₃| + |λ₄⟩⟨λ₂|)` at `Ω₂`.
/// Qubit 2: `c(|λ₃⟩⟨λ₂| + |λ₁⟩⟨λ₄|)` at `Ω₁`, `s(|λ₁⟩⟨λ₃| − |λ₄⟩⟨λ₂|)` at `Ω₂`.
/// Each pair sums to that qubit's lowering operator.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionOps {
    pub ops: [[Mat4; 2]; 2],
    pub frequencies: [f64; 2],
}

pub fn transition_ops(es: &EigenStructure) -> TransitionOps {
    let (s, co) = (es.theta / 2.0).sin_cos();
    let t = |a: usize, b: usize| es.transition(a - 1, b - 1);
    let slow_1 = (t(3, 2) - t(1, 4)).scale(s);
    let fast_1 = (t(1, 3) + t(4, 2)).scale(co);
    let slow_2 = (t(3, 2) + t(1, 4)).scale(co);
    let fast_2 = (t(1, 3) - t(4, 2)).scale(s);
    TransitionOps {
        ops: [[slow_1, fast_1], [slow_2, fast_2]],
        frequencies: [es.omega1, es.omega2],
    }
}

/// Generator of the two-bath model, kept split into its parts so that
/// per-bath heat flows can be evaluated.
#[derive(Debug, Clone)]
pub struct TwoBathGenerator {
    pub hamiltonian: Mat4,
    pub coherent: Superoperator16,
    pub dissipators: [Superoperator16; 2],
    pub total: Superoperator16,
}

fn require_unruh(spec: &BathSpectrum) -> Result<()> {
    if spec.kind() != VacuumKind::Unruh {
        return Err(Error::NoDissipation);
    }
    Ok(())
}

/// `−i[H, ρ] + 𝓛₁[ρ] + 𝓛₂[ρ]`, where bath `j` drives each channel `μ` with
/// emission rate `2πμ² 𝒢_j(Ω_μ)` on `V_jμ` and absorption rate
/// `2πμ² 𝒢_j(−Ω_μ)` on `V_jμ†`.
pub fn build_two_bath_liouvillian(
    es: &EigenStructure,
    ops: &TransitionOps,
    spec1: &BathSpectrum,
    spec2: &BathSpectrum,
    mu: f64,
) -> Result<TwoBathGenerator> {
    require_unruh(spec1)?;
    require_unruh(spec2)?;
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Domain(format!("coupling must be positive, got {mu}")));
    }
    let scale = 2.0 * std::f64::consts::PI * mu * mu;
    let bath = |j: usize, spec: &BathSpectrum| {
        let mut l = Superoperator16::zero();
        for (v, w) in ops.ops[j].iter().zip(ops.frequencies) {
            l = l + Superoperator16::dissipator(v, scale * spec.wightman_fourier(w));
            l = l + Superoperator16::dissipator(&v.adjoint(), scale * spec.wightman_fourier(-w));
        }
        l
    };
    let hamiltonian = es.hamiltonian();
    let coherent = Superoperator16::commutator(&hamiltonian);
    let dissipators = [bath(0, spec1), bath(1, spec2)];
    let total = &(&coherent + &dissipators[0]) + &dissipators[1];
    Ok(TwoBathGenerator { hamiltonian, coherent, dissipators, total })
}

/// Heat currents into the system at a (putative) steady state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxReport {
    /// `I_j = Tr[𝓛_j(ρ) H]`, positive when bath `j` feeds energy in.
    pub inflow: [f64; 2],
    /// Largest entry of `𝓛(ρ)`.
    pub residual: f64,
    /// `false` when `residual` exceeds [`STEADY_RESIDUAL_TOL`].
    pub steady: bool,
}

pub const STEADY_RESIDUAL_TOL: f64 = 1e-8;

/// `Tr[𝓛_j(ρ) H]`.
pub fn flux(dissipator: &Superoperator16, rho: &DensityMatrix4, h: &Mat4) -> f64 {
    (dissipator.apply(rho.matrix()) * h).trace().re
}

impl TwoBathGenerator {
    pub fn fluxes(&self, rho: &DensityMatrix4) -> FluxReport {
        let residual = self.total.apply(rho.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        FluxReport {
            inflow: [
                flux(&self.dissipators[0], rho, &self.hamiltonian),
                flux(&self.dissipators[1], rho, &self.hamiltonian),
            ],
            residual,
            steady: residual <= STEADY_RESIDUAL_TOL,
        }
    }
}

/// Closed-form nonequilibrium steady state: diagonal in the eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct NeqSteadyState {
    /// Occupations of `|λ₁⟩ … |λ₄⟩`.
    pub populations: [f64; 4],
    basis_change: Mat4,
}

impl NeqSteadyState {
    pub fn in_eigenbasis(&self) -> Result<DensityMatrix4> {
        DensityMatrix4::new(Mat4::from_diagonal(&Vector4::from_iterator(
            self.populations.iter().map(|p| c(*p, 0.0)),
        )))
    }

    pub fn in_bare_basis(&self) -> Result<DensityMatrix4> {
        let u = &self.basis_change;
        let m = u * self.in_eigenbasis()?.matrix() * u.adjoint();
        debug_assert!(hermiticity_error(&m) < 1e-14);
        DensityMatrix4::from_hermitian_part(&m)
    }
}

/// Stationary occupations as products of two independent two-level
/// factors:
///
/// ```text
/// X^± = 2c² 𝒢₁(±Ω₂) + 2s² 𝒢₂(±Ω₂)      (transitions λ₃→λ₁, λ₂→λ₄)
/// Y^± = 2s² 𝒢₁(±Ω₁) + 2c² 𝒢₂(±Ω₁)      (transitions λ₂→λ₃, λ₄→λ₁)
/// p₁ = X⁺Y⁺/(XY), p₂ = X⁻Y⁻/(XY), p₃ = X⁻Y⁺/(XY), p₄ = X⁺Y⁻/(XY)
/// ```
///
/// with `c = cos(θ/2)`, `s = sin(θ/2)`, `X = X⁺ + X⁻`, `Y = Y⁺ + Y⁻`.
pub fn neq_steady_state_closed_form(
    es: &EigenStructure,
    spec1: &BathSpectrum,
    spec2: &BathSpectrum,
) -> Result<NeqSteadyState> {
    require_unruh(spec1)?;
    require_unruh(spec2)?;
    let (s, co) = (es.theta / 2.0).sin_cos();
    let (c2, s2) = (co * co, s * s);
    let g1 = |w: f64| spec1.wightman_fourier(w);
    let g2 = |w: f64| spec2.wightman_fourier(w);
    let x_down = 2.0 * c2 * g1(es.omega2) + 2.0 * s2 * g2(es.omega2);
    let x_up = 2.0 * c2 * g1(-es.omega2) + 2.0 * s2 * g2(-es.omega2);
    let y_down = 2.0 * s2 * g1(es.omega1) + 2.0 * c2 * g2(es.omega1);
    let y_up = 2.0 * s2 * g1(-es.omega1) + 2.0 * c2 * g2(-es.omega1);
    let x = x_down + x_up;
    let y = y_down + y_up;
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain("both baths have vanishing spectra".into()));
    }
    let norm = x * y;
    Ok(NeqSteadyState {
        populations: [
            x_down * y_down / norm,
            x_up * y_up / norm,
            x_up * y_down / norm,
            x_down * y_up / norm,
        ],
        basis_change: es.basis_change(),
    })
}
