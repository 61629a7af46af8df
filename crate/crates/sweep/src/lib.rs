//! Reproducible parameter sweeps over the Kerr-horizon detector models.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod range;
pub mod runners;
pub mod svg;
pub mod table;

pub use config::{Family, Model, ScenarioConfig};
pub use range::GridRange;
pub use runners::{run, SweepError, SweepOutput};
pub use table::{Row, Table};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `#` metadata lines written ahead of the CSV header.
pub fn metadata(model: Model, cfg: &ScenarioConfig) -> Vec<String> {
    let mut lines = vec![format!("kerr-sweep {VERSION}"), format!("model={}", model.name())];
    lines.extend(cfg.echo());
    lines
}
