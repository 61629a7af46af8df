//! Entropic and entanglement measures of two-qubit states. Entropies are in
//! bits.

mod concurrence;
mod discord;
mod entropy;
mod production;

pub use concurrence::{concurrence, concurrence_xstate, is_x_state, X_SHAPE_TOL};
pub use discord::{discord_measurement_grid, discord_xstate, Discord, XStateParams, DISCORD_CLIP, X_BLOCH_TOL};
pub use entropy::{
    binary_entropy, entropy_from_eigenvalues, l1_coherence, l1_coherence_in_basis, mutual_information,
    relative_entropy, vn_entropy, vn_entropy_qubit,
};
pub use production::{decay_rate, effective_epr, entropy_production_bound, epr, BOUND_TOL};

use crate::error::Result;
use crate::state::DensityMatrix4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub concurrence: f64,
    pub coherence_l1: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub vn_entropy: f64,
    pub entropy_a: f64,
    pub entropy_b: f64,
}

impl CorrelationReport {
    pub const COLUMNS: [&'static str; 8] = [
        "concurrence",
        "coherence_l1",
        "mutual_info",
        "classical_corr",
        "discord",
        "vn_entropy",
        "entropy_a",
        "entropy_b",
    ];

    pub fn values(&self) -> [f64; 8] {
        [
            self.concurrence,
            self.coherence_l1,
            self.mutual_info,
            self.classical_corr,
            self.discord,
            self.vn_entropy,
            self.entropy_a,
            self.entropy_b,
        ]
    }
}

/// Every measure for one state. Discord uses the X-state formula, so the
/// state must be X-shaped.
pub fn correlation_report(rho: &DensityMatrix4) -> Result<CorrelationReport> {
    let d = discord_xstate(rho)?;
    Ok(CorrelationReport {
        concurrence: concurrence(rho),
        coherence_l1: l1_coherence(rho),
        mutual_info: mutual_information(rho)?,
        classical_corr: d.classical_corr,
        discord: d.discord,
        vn_entropy: vn_entropy(rho)?,
        entropy_a: vn_entropy_qubit(&rho.reduced_a())?,
        entropy_b: vn_entropy_qubit(&rho.reduced_b())?,
    })
}
