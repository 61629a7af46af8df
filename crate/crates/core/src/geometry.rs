//! Kerr horizon scalars that parameterize the detector bath.
//!
//! Geometric units `G = c = ħ = k_B = 1`. A detector sits at a fixed
//! multiple of the outer horizon radius, `r = radial_factor · r₊`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Kerr black hole: mass `M` and angular momentum per unit mass `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlackHoleParams {
    mass: f64,
    spin: f64,
}

impl BlackHoleParams {
    /// Accepts `0 ≤ a ≤ M`. The extremal case `a = M` is allowed and
    /// reported through [`BlackHoleParams::is_extremal`].
    pub fn new(mass: f64, spin: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(spin.is_finite() && spin >= 0.0) {
            return Err(Error::Domain(format!("spin must be non-negative, got {spin}")));
        }
        if spin > mass {
            return Err(Error::NakedSingularity { mass, spin });
        }
        Ok(Self { mass, spin })
    }

    pub fn schwarzschild(mass: f64) -> Result<Self> {
        Self::new(mass, 0.0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spin(&self) -> f64 {
        self.spin
    }

    pub fn is_extremal(&self) -> bool {
        self.spin == self.mass
    }
}

/// Horizon radii, surface gravity and horizon angular speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizonData {
    pub r_plus: f64,
    pub r_minus: f64,
    pub kappa: f64,
    pub omega_plus: f64,
}

/// Detector radius as a multiple of `r₊`; must exceed 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorPosition {
    radial_factor: f64,
}

impl DetectorPosition {
    pub fn new(radial_factor: f64) -> Result<Self> {
        if !(radial_factor.is_finite() && radial_factor > 1.0) {
            return Err(Error::Domain(format!(
                "radial factor must exceed 1, got {radial_factor}"
            )));
        }
        Ok(Self { radial_factor })
    }

    pub fn radial_factor(&self) -> f64 {
        self.radial_factor
    }

    pub fn radius(&self, bh: &BlackHoleParams) -> f64 {
        self.radial_factor * horizons(bh).r_plus
    }
}

pub fn horizons(bh: &BlackHoleParams) -> HorizonData {
    let (m, a) = (bh.mass, bh.spin);
    let a2 = a * a;
    let (r_plus, r_minus, kappa) = if bh.is_extremal() {
        (m, m, 0.0)
    } else {
        let root = (m * m - a2).max(0.0).sqrt();
        let r_plus = m + root;
        // r₋ = a²/r₊ avoids the cancellation in M − √(M² − a²) for a ≪ M
        let r_minus = a2 / r_plus;
        let kappa = (r_plus - r_minus) / (2.0 * (r_plus * r_plus + a2));
        (r_plus, r_minus, kappa)
    };
    HorizonData {
        r_plus,
        r_minus,
        kappa,
        omega_plus: a / (r_plus * r_plus + a2),
    }
}

/// `F(r) = Δ/(r² + a²)` with `Δ = (r − r₊)(r − r₋)`. Negative inside `r₊`.
pub fn metric_function(bh: &BlackHoleParams, r: f64) -> f64 {
    let h = horizons(bh);
    (r - h.r_plus) * (r - h.r_minus) / (r * r + bh.spin * bh.spin)
}

/// Local acceleration `κ_r = κ/√F(r)` at the detector. Zero for an
/// extremal hole.
pub fn local_acceleration(bh: &BlackHoleParams, pos: &DetectorPosition) -> Result<f64> {
    if bh.is_extremal() {
        return Ok(0.0);
    }
    let r = pos.radius(bh);
    let f = metric_function(bh, r);
    if !(f > 0.0) {
        return Err(Error::Domain(format!("F(r) = {f} is not positive at r = {r}")));
    }
    Ok(horizons(bh).kappa / f.sqrt())
}

/// Effective bath temperature `κ_r/(2π)`.
pub fn effective_temperature(bh: &BlackHoleParams, pos: &DetectorPosition) -> Result<f64> {
    Ok(local_acceleration(bh, pos)? / (2.0 * PI))
}

/// Tortoise coordinate with the integration constant set to zero.
pub fn tortoise(bh: &BlackHoleParams, r: f64) -> Result<f64> {
    if bh.is_extremal() {
        return Err(Error::Domain("tortoise coordinate undefined for an extremal hole".into()));
    }
    let h = horizons(bh);
    if !(r > h.r_plus) {
        return Err(Error::Domain(format!(
            "tortoise coordinate needs r > r+ = {}, got {r}",
            h.r_plus
        )));
    }
    let a2 = bh.spin * bh.spin;
    let width = h.r_plus - h.r_minus;
    let outer = (h.r_plus * h.r_plus + a2) / width * (r - h.r_plus).ln();
    // vanishes identically for a = 0 (r₋ = 0), where ln(r) is harmless
    let inner = (h.r_minus * h.r_minus + a2) / width * (r - h.r_minus).ln();
    Ok(r + outer - inner)
}

/// Spring-constant picture of Kerr surface gravity: `1/(4M) − M Ω₊²`.
pub fn kerr_spring_gravity(bh: &BlackHoleParams) -> f64 {
    let omega = horizons(bh).omega_plus;
    1.0 / (4.0 * bh.mass) - bh.mass * omega * omega
}
