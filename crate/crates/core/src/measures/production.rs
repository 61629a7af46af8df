use crate::error::{Error, Result};

/// Tolerance on the sign of the entropy-production bound.
pub const BOUND_TOL: f64 = 1e-9;

/// Lower bound on entropy production between two instants: the loss of
/// mutual information `I(t_i) − I(t_f)`.
pub fn entropy_production_bound(mi_initial: f64, mi_final: f64) -> Result<f64> {
    let bound = mi_initial - mi_final;
    if bound < -BOUND_TOL {
        return Err(Error::Numerical(format!("mutual information grew by {:e}", -bound)));
    }
    Ok(bound.max(0.0))
}

/// `(I(0) − I(t))/t` at every sample; the `t = 0` entry is `NaN`.
pub fn epr(mi_series: &[f64], times: &[f64]) -> Result<Vec<f64>> {
    if mi_series.len() != times.len() || times.is_empty() {
        return Err(Error::Domain("series and time grid must be equally long and non-empty".into()));
    }
    if times[0] != 0.0 || times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("times must increase strictly from 0".into()));
    }
    Ok(mi_series.iter().zip(times).map(|(mi, t)| if *t == 0.0 { f64::NAN } else { (mi_series[0] - mi) / t }).collect())
}

/// `(QC(0) − QC(t))/t`; negative for quantities that grow.
pub fn decay_rate(qc0: f64, qct: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("decay rate needs t > 0, got {t}")));
    }
    Ok((qc0 - qct) / t)
}

/// `I₁ (1/T₂ − 1/T₁)` where `I₁` is the heat flowing from bath 1 into the
/// system: non-negative whenever heat runs from the hotter bath.
pub fn effective_epr(flux: f64, t1: f64, t2: f64) -> Result<f64> {
    if !(t1 > 0.0 && t2 > 0.0) {
        return Err(Error::Domain(format!("temperatures must be positive, got {t1}, {t2}")));
    }
    Ok(flux * (1.0 / t2 - 1.0 / t1))
}
