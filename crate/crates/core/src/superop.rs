//! Linear maps on two-qubit operators, represented as 16×16 matrices on
//! column-stacked `vec(ρ)`, with the steady-state null-space solver and a
//! fixed-step fourth-order propagator.

use nalgebra::{DMatrix, DVector, SMatrix, SVector};

use crate::error::{Error, Result};
use crate::state::{c, pauli_product, DensityMatrix4, Mat4, C64};

pub type Mat16 = SMatrix<C64, 16, 16>;
pub type Vec16 = SVector<C64, 16>;

/// Singular values below this fraction of the largest count as zero.
pub const NULL_SPACE_RTOL: f64 = 1e-9;

pub fn vectorize(m: &Mat4) -> Vec16 {
    Vec16::from_iterator(m.iter().copied())
}

pub fn unvectorize(v: &Vec16) -> Mat4 {
    Mat4::from_iterator(v.iter().copied())
}

fn basis_matrix(k: usize) -> Mat4 {
    let mut e = Mat4::zeros();
    e[(k % 4, k / 4)] = c(1.0, 0.0);
    e
}

/// A generator (or any linear map) acting on vectorized 4×4 operators.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator16 {
    m: Mat16,
}

impl Superoperator16 {
    pub fn zero() -> Self {
        Self { m: Mat16::zeros() }
    }

    pub fn from_matrix(m: Mat16) -> Self {
        Self { m }
    }

    /// Tabulates a linear map by applying it to the 16 matrix units.
    pub fn from_map(f: impl Fn(&Mat4) -> Mat4) -> Self {
        let mut m = Mat16::zeros();
        for k in 0..16 {
            m.set_column(k, &vectorize(&f(&basis_matrix(k))));
        }
        Self { m }
    }

    /// `−i[H, ·]`.
    pub fn commutator(h: &Mat4) -> Self {
        let mi = c(0.0, -1.0);
        Self::from_map(|rho| (h * rho - rho * h) * mi)
    }

    /// `D[L]ρ = LρL† − ½{L†L, ρ}` scaled by `rate`.
    pub fn dissipator(l: &Mat4, rate: f64) -> Self {
        let ld = l.adjoint();
        let ldl = ld * l;
        Self::from_map(|rho| (l * rho * ld - (ldl * rho + rho * ldl).scale(0.5)).scale(rate))
    }

    pub fn matrix(&self) -> &Mat16 {
        &self.m
    }

    pub fn apply(&self, rho: &Mat4) -> Mat4 {
        unvectorize(&(self.m * vectorize(rho)))
    }

    /// `max_k |Σ_d L[d, k]|` over the diagonal rows `d`: how far `Tr ∘ L`
    /// is from the zero functional.
    pub fn trace_defect(&self) -> f64 {
        (0..16)
            .map(|k| (0..4).map(|d| self.m[(5 * d, k)]).sum::<C64>().norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Add for &Superoperator16 {
    type Output = Superoperator16;
    fn add(self, rhs: &Superoperator16) -> Superoperator16 {
        Superoperator16 { m: self.m + rhs.m }
    }
}

impl std::ops::Add for Superoperator16 {
    type Output = Superoperator16;
    fn add(self, rhs: Superoperator16) -> Superoperator16 {
        &self + &rhs
    }
}

/// Orthonormal basis of the numerical null space of `L`, as matrices.
pub fn null_space(l: &Superoperator16) -> Vec<Mat4> {
    let dm = DMatrix::from_iterator(16, 16, l.m.iter().copied());
    let svd = dm.svd(false, true);
    let v_t = svd.v_t.as_ref().expect("right singular vectors requested");
    let largest = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = NULL_SPACE_RTOL * largest;
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, s)| largest == 0.0 || **s <= cutoff)
        .map(|(k, _)| {
            let row = v_t.row(k);
            Mat4::from_iterator(row.iter().map(|z| z.conj()))
        })
        .collect()
}

/// Stationary state of `L`: the unit-trace element of its null space.
///
/// When the null space is two-dimensional because `τ* = Σ_i Tr(ρσ_i⊗σ_i)`
/// is conserved, `tau_star` picks the member with that value.
pub fn steady_state_nullspace(l: &Superoperator16, tau_star: Option<f64>) -> Result<DensityMatrix4> {
    let basis = null_space(l);
    if basis.is_empty() {
        return Err(Error::Numerical(format!(
            "no null vector within relative tolerance {NULL_SPACE_RTOL:e}"
        )));
    }
    let swap_like: Mat4 = (1..4).map(|i| pauli_product(i, i)).sum();
    let constraints = 1 + usize::from(tau_star.is_some());
    let dim = basis.len();
    if dim > constraints {
        return Err(Error::DegenerateNullSpace { dimension: dim });
    }

    let mut rows = vec![basis.iter().map(|n| n.trace()).collect::<Vec<_>>()];
    let mut rhs = vec![c(1.0, 0.0)];
    if let (Some(t), 2) = (tau_star, dim) {
        rows.push(basis.iter().map(|n| (n * swap_like).trace()).collect());
        rhs.push(c(t, 0.0));
    }
    let system = DMatrix::from_fn(dim, dim, |r, s| rows[r][s]);
    let coeffs = system
        .lu()
        .solve(&DVector::from_vec(rhs))
        .ok_or_else(|| Error::Numerical("null space cannot satisfy the normalization".into()))?;
    let rho: Mat4 = basis.iter().zip(coeffs.iter()).map(|(n, k)| n * *k).sum();
    let state = DensityMatrix4::from_hermitian_part(&rho)?;

    if let (Some(t), 1) = (tau_star, dim) {
        let found = state.tau_star();
        if (found - t).abs() > 1e-8 {
            return Err(Error::Numerical(format!(
                "unique steady state has tau* = {found}, not the requested {t}"
            )));
        }
    }
    Ok(state)
}

/// One classical fourth-order Runge–Kutta step in stage form.
pub fn rk4_step(l: &Superoperator16, rho: &Mat4, h: f64) -> Mat4 {
    let k1 = l.apply(rho);
    let k2 = l.apply(&(rho + k1.scale(h / 2.0)));
    let k3 = l.apply(&(rho + k2.scale(h / 2.0)));
    let k4 = l.apply(&(rho + k3.scale(h)));
    rho + (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0)
}

/// Fixed-step RK4 for the autonomous linear system `dρ/dt = Lρ`.
///
/// For a linear generator one RK4 step is exactly the matrix
/// `P = 𝟙 + hL + (hL)²/2 + (hL)³/6 + (hL)⁴/24`; `n` steps are `Pⁿ`,
/// evaluated by repeated squaring so that very long horizons with small
/// steps stay cheap.
///
/// When the generator is trace preserving, each product is re-projected
/// onto trace-preserving maps so rounding cannot accumulate in the trace.
#[derive(Debug, Clone)]
pub struct Rk4Propagator {
    step: f64,
    one_step: Mat16,
    trace_preserving: bool,
}

/// Positions of the diagonal entries in a vectorized 4×4 matrix.
const DIAGONAL: [usize; 4] = [0, 5, 10, 15];

/// `P ← P + ¼ t (tᵀ − tᵀP)` with `t` the vectorized identity, so that
/// `tᵀP = tᵀ` afterwards.
fn restore_trace(p: &mut Mat16) {
    for k in 0..16 {
        let target = if DIAGONAL.contains(&k) { 1.0 } else { 0.0 };
        let defect = (c(target, 0.0) - DIAGONAL.iter().map(|&d| p[(d, k)]).sum::<C64>()) / 4.0;
        for &d in &DIAGONAL {
            p[(d, k)] += defect;
        }
    }
}

impl Rk4Propagator {
    pub fn new(l: &Superoperator16, step: f64) -> Self {
        let hl = l.m.scale(step);
        let mut term = Mat16::identity();
        let mut p = Mat16::identity();
        for k in 1..=4 {
            term = (term * hl).unscale(k as f64);
            p += term;
        }
        let trace_preserving = l.trace_defect() <= 1e-12 * l.m.norm().max(1.0);
        if trace_preserving {
            restore_trace(&mut p);
        }
        Self { step, one_step: p, trace_preserving }
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn one_step(&self) -> &Mat16 {
        &self.one_step
    }

    /// `Pⁿ`.
    pub fn steps(&self, mut n: u64) -> Mat16 {
        let mut result = Mat16::identity();
        let mut base = self.one_step;
        while n > 0 {
            if n & 1 == 1 {
                result = base * result;
                if self.trace_preserving {
                    restore_trace(&mut result);
                }
            }
            n >>= 1;
            if n > 0 {
                base = base * base;
                if self.trace_preserving {
                    restore_trace(&mut base);
                }
            }
        }
        result
    }
}

/// Samples the RK4 trajectory from `rho0` (at `t = 0`) at each requested
/// time. Times must be non-decreasing and non-negative; each interval is
/// split into `ceil(Δt / max_step)` equal steps.
pub fn integrate_rk4(l: &Superoperator16, rho0: &Mat4, max_step: f64, times: &[f64]) -> Result<Vec<Mat4>> {
    if !(max_step > 0.0) {
        return Err(Error::Domain(format!("step must be positive, got {max_step}")));
    }
    let mut out = Vec::with_capacity(times.len());
    let mut v = vectorize(rho0);
    let mut t_prev = 0.0;
    let mut cached: Option<(f64, Mat16)> = None;
    for &t in times {
        let dt = t - t_prev;
        if !(dt >= 0.0) {
            return Err(Error::Domain("sample times must be non-decreasing from 0".into()));
        }
        if dt > 0.0 {
            let n = (dt / max_step).ceil().max(1.0);
            let prop = match cached {
                Some((cached_dt, ref p)) if (cached_dt - dt).abs() <= 1e-12 * dt => *p,
                _ => {
                    let p = Rk4Propagator::new(l, dt / n).steps(n as u64);
                    cached = Some((dt, p));
                    p
                }
            };
            v = prop * v;
        }
        out.push(unvectorize(&v));
        t_prev = t;
    }
    Ok(out)
}
