#![allow(dead_code)]

use kerr_qcorr::state::{DensityMatrix4, Mat2, Mat4, C64};
use nalgebra::{Vector4, QR};
use rand::Rng;

pub fn random_unitary<R: Rng>(rng: &mut R) -> Mat4 {
    let g = Mat4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    QR::new(g).q()
}

/// Random full-rank state: random spectrum in a random basis.
pub fn random_state<R: Rng>(rng: &mut R) -> DensityMatrix4 {
    let w: Vec<f64> = (0..4).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = w.iter().sum();
    let d = Mat4::from_diagonal(&Vector4::from_iterator(w.iter().map(|x| C64::new(x / total, 0.0))));
    let u = random_unitary(rng);
    DensityMatrix4::from_hermitian_part(&(u * d * u.adjoint())).unwrap()
}

/// Random X state: arbitrary populations with coherences inside the
/// positivity bounds `|ρ₀₃|² ≤ ρ₀₀ρ₃₃`, `|ρ₁₂|² ≤ ρ₁₁ρ₂₂`.
pub fn random_x_state<R: Rng>(rng: &mut R) -> DensityMatrix4 {
    let w: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..1.0)).collect();
    let total: f64 = w.iter().sum();
    let p: Vec<f64> = w.iter().map(|x| x / total).collect();
    let coherence = |a: f64, b: f64, rng: &mut R| {
        C64::from_polar(rng.gen_range(0.0..1.0) * (a * b).sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))
    };
    let outer = coherence(p[0], p[3], rng);
    let inner = coherence(p[1], p[2], rng);
    let mut m = Mat4::from_diagonal(&Vector4::from_iterator(p.iter().map(|x| C64::new(*x, 0.0))));
    m[(0, 3)] = outer;
    m[(3, 0)] = outer.conj();
    m[(1, 2)] = inner;
    m[(2, 1)] = inner.conj();
    DensityMatrix4::new(m).unwrap()
}

pub fn random_qubit<R: Rng>(rng: &mut R, pure: bool) -> Mat2 {
    let (r, theta, phi) = (
        if pure { 1.0 } else { rng.gen_range(0.0..1.0) },
        rng.gen_range(0.0..std::f64::consts::PI),
        rng.gen_range(0.0..std::f64::consts::TAU),
    );
    let (x, y, z) = (r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos());
    Mat2::new(
        C64::new((1.0 + z) / 2.0, 0.0),
        C64::new(x / 2.0, -y / 2.0),
        C64::new(x / 2.0, y / 2.0),
        C64::new((1.0 - z) / 2.0, 0.0),
    )
}

pub fn max_entry_diff(a: &Mat4, b: &Mat4) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
