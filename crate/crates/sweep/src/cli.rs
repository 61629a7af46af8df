//! Command-line front end.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{build_config, read_config_file, Family, Model, ScenarioConfig};
use crate::range::GridRange;
use crate::{metadata, runners, svg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kerr-sweep", version, about = "Parameter sweeps over Kerr-horizon detector models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Horizon radii, surface gravity and local acceleration over (M, a)
    Geometry(SweepArgs),
    /// Common-bath stationary state and its correlations over (M, a)
    Equilibrium(SweepArgs),
    /// One-sided relaxation of a Bell pair in time, per (M, a)
    Transient(SweepArgs),
    /// Two-bath steady state, heat flux and effective EPR over Δr
    NeqSteady(SweepArgs),
}

impl Command {
    pub fn split(&self) -> (Model, &SweepArgs) {
        match self {
            Command::Geometry(a) => (Model::Geometry, a),
            Command::Equilibrium(a) => (Model::Equilibrium, a),
            Command::Transient(a) => (Model::Transient, a),
            Command::NeqSteady(a) => (Model::NeqSteady, a),
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Flat key=value file; flags override its entries
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// CSV destination (stdout when absent)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Preset (mass, spin) grid
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Black-hole masses M
    #[arg(long, value_name = "LO:HI:N")]
    pub mass_range: Option<GridRange>,
    /// Spin parameters a (angular momentum per unit mass)
    #[arg(long, value_name = "LO:HI:N")]
    pub spin_range: Option<GridRange>,
    /// Separation of the second two-bath qubit, in units of r₊
    #[arg(long, value_name = "LO:HI:N")]
    pub dr_range: Option<GridRange>,
    /// Sample times as μ²t
    #[arg(long, value_name = "LO:HI:N")]
    pub time_range: Option<GridRange>,
    /// Qubit energy gap ω (default 0.1)
    #[arg(long)]
    pub omega: Option<f64>,
    /// Qubit-field coupling μ (default 0.01)
    #[arg(long)]
    pub mu: Option<f64>,
    /// Inter-qubit coupling K (default 0.05·omega)
    #[arg(long, allow_negative_numbers = true)]
    pub coupling_k: Option<f64>,
    /// Detector radius in units of r₊ (default 1.01)
    #[arg(long)]
    pub radial_factor: Option<f64>,
    /// Radius of the first two-bath qubit in units of r₊ (default 1.006)
    #[arg(long)]
    pub base_factor: Option<f64>,
    /// Conserved Σ_i ⟨σ_i⊗σ_i⟩ of the common-bath model (default −1)
    #[arg(long, allow_negative_numbers = true)]
    pub tau_star: Option<f64>,
    /// Also write an SVG line plot next to the CSV
    #[arg(long)]
    pub svg: bool,
    /// Evaluate grid points on one thread
    #[arg(long)]
    pub serial: bool,
}

impl SweepArgs {
    fn overrides(&self) -> Vec<(String, String)> {
        let mut v = Vec::new();
        let mut push = |k: &str, val: Option<String>| {
            if let Some(val) = val {
                v.push((k.to_string(), val));
            }
        };
        push("family", self.family.map(|f| format!("{f:?}").to_lowercase()));
        push("mass-range", self.mass_range.map(|r| r.to_string()));
        push("spin-range", self.spin_range.map(|r| r.to_string()));
        push("dr-range", self.dr_range.map(|r| r.to_string()));
        push("time-range", self.time_range.map(|r| r.to_string()));
        push("omega", self.omega.map(|x| x.to_string()));
        push("mu", self.mu.map(|x| x.to_string()));
        push("coupling-k", self.coupling_k.map(|x| x.to_string()));
        push("radial-factor", self.radial_factor.map(|x| x.to_string()));
        push("base-factor", self.base_factor.map(|x| x.to_string()));
        push("tau-star", self.tau_star.map(|x| x.to_string()));
        push("out", self.out.as_ref().map(|p| p.display().to_string()));
        push("svg", self.svg.then(|| "true".to_string()));
        push("serial", self.serial.then(|| "true".to_string()));
        v
    }

    pub fn resolve(&self) -> Result<ScenarioConfig, String> {
        let file = match &self.config {
            Some(path) => read_config_file(path)?,
            None => Vec::new(),
        };
        let cfg = build_config(&file, &self.overrides())?;
        if cfg.svg && cfg.out.is_none() {
            return Err("--svg needs --out to place the plot".into());
        }
        Ok(cfg)
    }
}

/// Runs the tool and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let (model, args) = cli.command.split();
    let cfg = match args.resolve() {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return EXIT_CONFIG;
        }
    };
    let output = match runners::run(model, &cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_NUMERICAL;
        }
    };
    let csv = output.table.to_csv(&metadata(model, &cfg));
    let Some(out) = &cfg.out else {
        print!("{csv}");
        return EXIT_OK;
    };
    if let Err(e) = std::fs::write(out, csv) {
        eprintln!("cannot write {}: {e}", out.display());
        return EXIT_IO;
    }
    if cfg.svg {
        let path = out.with_extension("svg");
        let written = svg::line_plot(&output.table, &runners::plot_spec(model, &cfg))
            .map_err(|e| e.to_string())
            .and_then(|s| std::fs::write(&path, s).map_err(|e| e.to_string()));
        if let Err(e) = written {
            eprintln!("cannot write {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    EXIT_OK
}
