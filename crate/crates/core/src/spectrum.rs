//! Fourier-transformed Wightman functions of the near-horizon field and
//! the dissipative coefficients they induce on a two-level detector.

use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VacuumKind {
    Boulware,
    Unruh,
}

/// Field vacuum seen by a detector with local acceleration `κ_r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpectrum {
    kind: VacuumKind,
    kappa_r: f64,
}

impl BathSpectrum {
    pub fn unruh(kappa_r: f64) -> Result<Self> {
        if !(kappa_r.is_finite() && kappa_r >= 0.0) {
            return Err(Error::Domain(format!(
                "local acceleration must be non-negative, got {kappa_r}"
            )));
        }
        Ok(Self { kind: VacuumKind::Unruh, kappa_r })
    }

    pub fn boulware() -> Self {
        Self { kind: VacuumKind::Boulware, kappa_r: 0.0 }
    }

    pub fn kind(&self) -> VacuumKind {
        self.kind
    }

    pub fn kappa_r(&self) -> f64 {
        self.kappa_r
    }

    /// `κ_r/(2π)`; zero for the Boulware vacuum.
    pub fn temperature(&self) -> f64 {
        match self.kind {
            VacuumKind::Boulware => 0.0,
            VacuumKind::Unruh => self.kappa_r / (2.0 * PI),
        }
    }

    /// `𝒢(ω)`. For the Unruh vacuum this is `ω/(2π) · 1/(1 − e^{−2πω/κ_r})`,
    /// continued to `κ_r/(4π²)` at `ω = 0`; the Boulware transform vanishes.
    pub fn wightman_fourier(&self, omega: f64) -> f64 {
        match self.kind {
            VacuumKind::Boulware => 0.0,
            VacuumKind::Unruh => {
                if self.kappa_r == 0.0 {
                    return if omega > 0.0 { omega / (2.0 * PI) } else { 0.0 };
                }
                let x = 2.0 * PI * omega / self.kappa_r;
                if x == 0.0 {
                    return self.kappa_r / (4.0 * PI * PI);
                }
                omega / (2.0 * PI) / -(-x).exp_m1()
            }
        }
    }
}

/// Which sign convention to use for the single-qubit bias `B`.
///
/// `Thermal` orients `B = γ₋ − γ₊` so that `B/A = tanh(πω/κ_r) > 0` and the
/// coupled qubit relaxes to its Gibbs state. `AsPrinted` keeps
/// `B = γ₊ − γ₋`, which drives the qubit towards population inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BiasOrientation {
    #[default]
    Thermal,
    AsPrinted,
}

/// Dissipative coefficients for gap `ω` and coupling `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DissipationCoeffs {
    /// `A = μ²/4 (𝒢(ω) + 𝒢(−ω))`
    pub a: f64,
    /// `B = μ²/4 (𝒢(ω) − 𝒢(−ω))`
    pub b: f64,
    /// `C = 𝒢(0) − A`
    pub c: f64,
    /// `R = B/A`
    pub ratio: f64,
    /// absorption rate `2πμ²𝒢(−ω)`
    pub gamma_plus: f64,
    /// emission rate `2πμ²𝒢(ω)`
    pub gamma_minus: f64,
    pub mu: f64,
    pub omega: f64,
}

impl DissipationCoeffs {
    /// `(A, B)` in the normalization of the one-sided transient model,
    /// `A = γ₊ + γ₋`.
    pub fn transient_rates(&self, orientation: BiasOrientation) -> (f64, f64) {
        let decay = self.gamma_plus + self.gamma_minus;
        let bias = match orientation {
            BiasOrientation::Thermal => self.gamma_minus - self.gamma_plus,
            BiasOrientation::AsPrinted => self.gamma_plus - self.gamma_minus,
        };
        (decay, bias)
    }
}

pub fn dissipation_coeffs(spec: &BathSpectrum, omega: f64, mu: f64) -> Result<DissipationCoeffs> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!("gap must be positive, got {omega}")));
    }
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Domain(format!("coupling must be positive, got {mu}")));
    }
    if spec.kind == VacuumKind::Boulware {
        return Err(Error::NoDissipation);
    }
    let up = spec.wightman_fourier(omega);
    let down = spec.wightman_fourier(-omega);
    let scale = mu * mu / 4.0;
    let a = scale * (up + down);
    let b = scale * (up - down);
    Ok(DissipationCoeffs {
        a,
        b,
        c: spec.wightman_fourier(0.0) - a,
        ratio: b / a,
        gamma_plus: 2.0 * PI * mu * mu * down,
        gamma_minus: 2.0 * PI * mu * mu * up,
        mu,
        omega,
    })
}

/// Closed form of `B/A` for the Unruh spectrum.
pub fn thermal_ratio(omega: f64, kappa_r: f64) -> f64 {
    if kappa_r == 0.0 {
        return 1.0;
    }
    (PI * omega / kappa_r).tanh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_frequency_limit() {
        let s = BathSpectrum::unruh(0.25).unwrap();
        assert_relative_eq!(s.wightman_fourier(0.0), 0.25 / (4.0 * PI * PI), max_relative = 1e-15);
        assert_relative_eq!(s.wightman_fourier(0.0), 0.0063326, epsilon = 1e-7);
        for w in [1e-8, -1e-8] {
            assert!((s.wightman_fourier(w) - 0.25 / (4.0 * PI * PI)).abs() < 1e-9);
        }
    }

    #[test]
    fn unruh_direct_value() {
        let s = BathSpectrum::unruh(0.251247).unwrap();
        let x: f64 = 2.0 * PI * 0.1 / 0.251247;
        let expected = 0.1 / (2.0 * PI) / (1.0 - (-x).exp());
        assert_relative_eq!(s.wightman_fourier(0.1), expected, max_relative = 1e-14);
        assert_relative_eq!(s.wightman_fourier(0.1), 0.017338, epsilon = 1e-6);
    }

    #[test]
    fn boulware_vanishes() {
        let s = BathSpectrum::boulware();
        for w in [-1.0, 0.0, 0.3, 5.0] {
            assert_eq!(s.wightman_fourier(w), 0.0);
        }
        assert_eq!(dissipation_coeffs(&s, 0.1, 0.01), Err(Error::NoDissipation));
    }

    #[test]
    fn zero_temperature_limits() {
        let s = BathSpectrum::unruh(0.0).unwrap();
        assert_relative_eq!(s.wightman_fourier(0.3), 0.3 / (2.0 * PI));
        assert_eq!(s.wightman_fourier(-0.3), 0.0);
        assert_eq!(s.wightman_fourier(0.0), 0.0);
        let c = dissipation_coeffs(&s, 0.1, 0.01).unwrap();
        assert_eq!(c.ratio, 1.0);
        let tiny = dissipation_coeffs(&BathSpectrum::unruh(1e-4).unwrap(), 0.1, 0.01).unwrap();
        assert_eq!(tiny.ratio, 1.0);
    }

    #[test]
    fn huge_negative_argument_is_finite() {
        let s = BathSpectrum::unruh(1e-3).unwrap();
        let v = s.wightman_fourier(-5.0);
        assert!(v >= 0.0 && v.is_finite());
    }

    #[test]
    fn ratio_matches_tanh() {
        let s = BathSpectrum::unruh(0.251247).unwrap();
        let c = dissipation_coeffs(&s, 0.1, 0.01).unwrap();
        assert_relative_eq!(c.ratio, thermal_ratio(0.1, 0.251247), max_relative = 1e-12);
        assert_relative_eq!(c.ratio, (1.250_42_f64).tanh(), epsilon = 1e-5);
    }

    #[test]
    fn detailed_balance_of_rates() {
        let kr = 0.4;
        let c = dissipation_coeffs(&BathSpectrum::unruh(kr).unwrap(), 0.2, 0.01).unwrap();
        assert_relative_eq!(
            c.gamma_plus / c.gamma_minus,
            (-2.0 * PI * 0.2 / kr).exp(),
            max_relative = 1e-12
        );
        assert!(c.gamma_minus >= c.gamma_plus && c.gamma_plus >= 0.0);
        assert!(c.a >= c.b.abs());
        let g0 = BathSpectrum::unruh(kr).unwrap().wightman_fourier(0.0);
        assert_eq!(c.c, g0 - c.a);
    }

    #[test]
    fn transient_orientation() {
        let c = dissipation_coeffs(&BathSpectrum::unruh(0.3).unwrap(), 0.1, 0.01).unwrap();
        let (a, b) = c.transient_rates(BiasOrientation::Thermal);
        assert_relative_eq!(b / a, c.ratio, max_relative = 1e-12);
        let (a2, b2) = c.transient_rates(BiasOrientation::AsPrinted);
        assert_eq!(a, a2);
        assert_eq!(b, -b2);
    }

    #[test]
    fn rejects_bad_arguments() {
        let s = BathSpectrum::unruh(0.3).unwrap();
        assert!(dissipation_coeffs(&s, 0.0, 0.01).is_err());
        assert!(dissipation_coeffs(&s, 0.1, -0.01).is_err());
        assert!(BathSpectrum::unruh(-1.0).is_err());
    }
}
