//! Scenario configuration: defaults, flat `key=value` files and overrides.

use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::range::GridRange;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Geometry,
    Equilibrium,
    Transient,
    NeqSteady,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Geometry => "geometry",
            Model::Equilibrium => "equilibrium",
            Model::Transient => "transient",
            Model::NeqSteady => "neq-steady",
        }
    }
}

/// Preset (mass, spin) grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// a = 10, M ∈ [10, 50]
    Mass,
    /// M = 10.01, a ∈ [0.1, 10]
    Spin,
}

impl Family {
    fn ranges(self) -> (GridRange, GridRange) {
        match self {
            Family::Mass => (GridRange { lo: 10.0, hi: 50.0, n: 80 }, GridRange::single(10.0)),
            Family::Spin => (GridRange::single(10.01), GridRange { lo: 0.1, hi: 10.0, n: 80 }),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Mass => "mass",
            Family::Spin => "spin",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub family: Family,
    pub mass_range: GridRange,
    pub spin_range: GridRange,
    pub dr_range: GridRange,
    pub time_range: GridRange,
    pub omega: f64,
    pub mu: f64,
    /// Inter-qubit coupling; `None` means `0.05 ω`.
    pub coupling_k: Option<f64>,
    pub radial_factor: f64,
    /// Position of the first qubit of the two-bath model, in units of `r₊`.
    pub base_factor: f64,
    pub tau_star: f64,
    pub out: Option<PathBuf>,
    pub svg: bool,
    pub serial: bool,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self::for_family(Family::Mass)
    }
}

/// Keys accepted in configuration files, matching the long CLI flags.
pub const KEYS: [&str; 14] = [
    "family",
    "mass-range",
    "spin-range",
    "dr-range",
    "time-range",
    "omega",
    "mu",
    "coupling-k",
    "radial-factor",
    "base-factor",
    "tau-star",
    "out",
    "svg",
    "serial",
];

impl ScenarioConfig {
    pub fn for_family(family: Family) -> Self {
        let (mass_range, spin_range) = family.ranges();
        Self {
            family,
            mass_range,
            spin_range,
            dr_range: GridRange { lo: 0.0, hi: 0.5, n: 100 },
            time_range: GridRange { lo: 0.0, hi: 100.0, n: 200 },
            omega: 0.1,
            mu: 0.01,
            coupling_k: None,
            radial_factor: 1.01,
            base_factor: 1.006,
            tau_star: -1.0,
            out: None,
            svg: false,
            serial: false,
        }
    }

    pub fn coupling_k(&self) -> f64 {
        self.coupling_k.unwrap_or(0.05 * self.omega)
    }

    /// Applies one `key=value` setting. `family` resets both mass and spin
    /// ranges, so it should come first.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let value = value.trim();
        let num = || value.parse::<f64>().map_err(|e| format!("{key}: bad number '{value}': {e}"));
        let range = || value.parse::<GridRange>().map_err(|e| format!("{key}: {e}"));
        let flag = || match value {
            "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            _ => Err(format!("{key}: expected true or false, got '{value}'")),
        };
        match key {
            "family" => {
                let family = Family::from_str(value, true).map_err(|e| format!("family: {e}"))?;
                let (m, s) = family.ranges();
                self.family = family;
                self.mass_range = m;
                self.spin_range = s;
            }
            "mass-range" => self.mass_range = range()?,
            "spin-range" => self.spin_range = range()?,
            "dr-range" => self.dr_range = range()?,
            "time-range" => self.time_range = range()?,
            "omega" => self.omega = num()?,
            "mu" => self.mu = num()?,
            "coupling-k" => self.coupling_k = Some(num()?),
            "radial-factor" => self.radial_factor = num()?,
            "base-factor" => self.base_factor = num()?,
            "tau-star" => self.tau_star = num()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "svg" => self.svg = flag()?,
            "serial" => self.serial = flag()?,
            _ => return Err(format!("unknown configuration key '{key}'")),
        }
        Ok(())
    }

    /// Checks everything the domain modules do not: positivity of the
    /// scalar parameters and the time grid.
    pub fn validate(&self) -> Result<(), String> {
        let positive = [("omega", self.omega), ("mu", self.mu)];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{name} must be positive, got {v}"));
            }
        }
        for (name, v) in [("radial-factor", self.radial_factor), ("base-factor", self.base_factor)] {
            if !(v.is_finite() && v > 1.0) {
                return Err(format!("{name} must exceed 1, got {v}"));
            }
        }
        if !self.coupling_k().is_finite() {
            return Err("coupling-k must be finite".into());
        }
        if !(-3.0..=1.0).contains(&self.tau_star) {
            return Err(format!("tau-star must lie in [-3, 1], got {}", self.tau_star));
        }
        if self.time_range.lo < 0.0 {
            return Err("time-range must start at or after 0".into());
        }
        if self.dr_range.lo < 0.0 {
            return Err("dr-range must be non-negative".into());
        }
        Ok(())
    }

    /// `key=value` lines reproducing this configuration (output options
    /// excluded, so the CSV does not depend on where it is written).
    pub fn echo(&self) -> Vec<String> {
        vec![
            format!("family={}", self.family.name()),
            format!("mass-range={}", self.mass_range),
            format!("spin-range={}", self.spin_range),
            format!("dr-range={}", self.dr_range),
            format!("time-range={}", self.time_range),
            format!("omega={}", self.omega),
            format!("mu={}", self.mu),
            format!("coupling-k={}", self.coupling_k()),
            format!("radial-factor={}", self.radial_factor),
            format!("base-factor={}", self.base_factor),
            format!("tau-star={}", self.tau_star),
        ]
    }
}

/// Parses a flat `key=value` file; blank lines and `#` comments are skipped.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {}: expected key=value, got '{line}'", lineno + 1));
        };
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(format!("line {}: unknown key '{key}'", lineno + 1));
        }
        pairs.push((key.to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}

pub fn read_config_file(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_config_text(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Builds a configuration from file settings followed by overrides; a
/// `family` key anywhere is applied before the individual settings.
pub fn build_config(file: &[(String, String)], overrides: &[(String, String)]) -> Result<ScenarioConfig, String> {
    let mut cfg = ScenarioConfig::default();
    let all: Vec<&(String, String)> = file.iter().chain(overrides).collect();
    if let Some((_, family)) = all.iter().rev().find(|(k, _)| k == "family") {
        cfg.set("family", family)?;
    }
    for (k, v) in all.iter().filter(|(k, _)| k != "family") {
        cfg.set(k, v)?;
    }
    cfg.validate()?;
    Ok(cfg)
}
