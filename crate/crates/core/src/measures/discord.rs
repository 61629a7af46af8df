use nalgebra::{Matrix2, Matrix3, Vector3};

use super::entropy::{mutual_information, qubit_entropy};
use crate::error::{Error, Result};
use crate::state::{c, pauli_product, DensityMatrix4, Mat4};

/// Off-pattern Bloch and correlation components must be below this for the
/// X-state discord formula.
pub const X_BLOCH_TOL: f64 = 1e-10;

/// Clipping threshold for rounding-level negative discord.
pub const DISCORD_CLIP: f64 = 1e-9;

/// Bloch-diagonal form
/// `ρ = ¼ (𝟙 + a σ₃⊗𝟙 + b 𝟙⊗σ₃ + Σ_i C_i σ_i⊗σ_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateParams {
    pub a: f64,
    pub b: f64,
    pub c: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discord {
    pub discord: f64,
    pub classical_corr: f64,
}

struct Bloch {
    a: Vector3<f64>,
    b: Vector3<f64>,
    t: Matrix3<f64>,
}

fn bloch(rho: &DensityMatrix4) -> Bloch {
    Bloch {
        a: Vector3::from_fn(|i, _| rho.expectation(i + 1, 0)),
        b: Vector3::from_fn(|j, _| rho.expectation(0, j + 1)),
        t: Matrix3::from_fn(|i, j| rho.expectation(i + 1, j + 1)),
    }
}

impl XStateParams {
    /// Brings an X state to Bloch-diagonal form with local rotations about
    /// the z axis, which diagonalize the transverse correlation block.
    pub fn from_state(rho: &DensityMatrix4) -> Result<Self> {
        let bl = bloch(rho);
        let off = [bl.a.x, bl.a.y, bl.b.x, bl.b.y, bl.t[(0, 2)], bl.t[(1, 2)], bl.t[(2, 0)], bl.t[(2, 1)]];
        if let Some(bad) = off.iter().find(|v| v.abs() > X_BLOCH_TOL) {
            return Err(Error::InvalidState(format!(
                "correlation block is not reducible to Bloch-diagonal form (component {bad:e})"
            )));
        }
        let block = Matrix2::new(bl.t[(0, 0)], bl.t[(0, 1)], bl.t[(1, 0)], bl.t[(1, 1)]);
        let mut s: Vec<f64> = block.singular_values().iter().copied().collect();
        s.sort_by(|x, y| y.total_cmp(x));
        let sign = if block.determinant() < 0.0 { -1.0 } else { 1.0 };
        Ok(Self { a: bl.a.z, b: bl.b.z, c: [s[0], sign * s[1], bl.t[(2, 2)]] })
    }

    pub fn to_density(&self) -> Result<DensityMatrix4> {
        let mut m: Mat4 = pauli_product(0, 0)
            + pauli_product(3, 0).scale(self.a)
            + pauli_product(0, 3).scale(self.b);
        for (i, ci) in self.c.iter().enumerate() {
            m += pauli_product(i + 1, i + 1).scale(*ci);
        }
        DensityMatrix4::new(m * c(0.25, 0.0))
    }
}

/// Entropy of A conditioned on a projective measurement of B along `n`.
fn conditional_entropy(bl: &Bloch, n: &Vector3<f64>) -> f64 {
    let bn = bl.b.dot(n);
    let tn = bl.t * n;
    [1.0, -1.0]
        .iter()
        .map(|s| {
            let weight = 1.0 + s * bn;
            if weight <= 0.0 {
                return 0.0;
            }
            let r = (bl.a + tn * *s).norm() / weight;
            weight / 2.0 * qubit_entropy(r)
        })
        .sum()
}

fn finish(rho: &DensityMatrix4, entropy_a: f64, min_conditional: f64) -> Result<Discord> {
    let classical_corr = (entropy_a - min_conditional).max(0.0);
    let discord = mutual_information(rho)? - classical_corr;
    if discord < -DISCORD_CLIP {
        return Err(Error::Numerical(format!("negative discord {discord:e}")));
    }
    Ok(Discord { discord: discord.max(0.0), classical_corr })
}

/// Discord of an X state with the measurement on B restricted to the two
/// families `σ_z` (entropy `S₁`) and transverse directions (entropy `S₂`):
/// `CC = S(ρ_A) − min(S₁, S₂)`.
pub fn discord_xstate(rho: &DensityMatrix4) -> Result<Discord> {
    let x = XStateParams::from_state(rho)?;
    let bl = bloch(rho);
    let s1 = conditional_entropy(&bl, &Vector3::z());
    let transverse = x.c[0].abs().max(x.c[1].abs());
    let s2 = qubit_entropy(x.a.hypot(transverse));
    finish(rho, qubit_entropy(x.a.abs()), s1.min(s2))
}

/// Brute-force discord over a grid of measurement directions on B: polar
/// angle in `[0, π/2]` (inclusive) and azimuth in `[0, π)`. Valid for any
/// two-qubit state; meant for cross-checking [`discord_xstate`].
pub fn discord_measurement_grid(rho: &DensityMatrix4, n_theta: usize, n_phi: usize) -> Result<Discord> {
    if n_theta < 2 || n_phi < 1 {
        return Err(Error::Domain("measurement grid needs n_theta ≥ 2 and n_phi ≥ 1".into()));
    }
    let bl = bloch(rho);
    let mut best = f64::INFINITY;
    for i in 0..n_theta {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / (n_theta - 1) as f64;
        for k in 0..n_phi {
            let phi = std::f64::consts::PI * k as f64 / n_phi as f64;
            let n = Vector3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
            best = best.min(conditional_entropy(&bl, &n));
        }
    }
    finish(rho, qubit_entropy(bl.a.norm()), best)
}
