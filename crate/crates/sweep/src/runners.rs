//! Grid evaluation for the four scenario families.

use rayon::prelude::*;

use kerr_qcorr::common_bath::{equilibrium_steady_state, z_axis};
use kerr_qcorr::geometry::{
    effective_temperature, horizons, kerr_spring_gravity, local_acceleration, BlackHoleParams, DetectorPosition,
};
use kerr_qcorr::measures::{correlation_report, decay_rate, effective_epr, l1_coherence_in_basis, CorrelationReport};
use kerr_qcorr::spectrum::{dissipation_coeffs, BathSpectrum, BiasOrientation};
use kerr_qcorr::state::{pauli_to_density, DensityMatrix4, PauliCoeffs};
use kerr_qcorr::transient::transient_evolution;
use kerr_qcorr::two_bath::{
    build_two_bath_liouvillian, eigen_structure, neq_steady_state_closed_form, transition_ops, TwoQubitHamiltonian,
};
use kerr_qcorr::Error;

use crate::config::{Model, ScenarioConfig};
use crate::svg::PlotSpec;
use crate::table::{Row, Table};

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("numerical failure at {point}: {source}")]
    Numerical { point: String, source: Error },
}

/// A finished sweep. `states` holds every density matrix the sweep
/// produced, in row order, for validation.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub table: Table,
    pub states: Vec<DensityMatrix4>,
}

#[derive(Debug, Clone, Copy)]
struct Point {
    mass: f64,
    spin: f64,
    dr: f64,
}

impl Point {
    fn describe(&self, model: Model) -> String {
        match model {
            Model::NeqSteady => format!("M={}, a={}, dr={}", self.mass, self.spin, self.dr),
            _ => format!("M={}, a={}", self.mass, self.spin),
        }
    }
}

#[derive(Default)]
struct PointOutput {
    rows: Vec<Row>,
    states: Vec<DensityMatrix4>,
}

/// Domain errors become flagged rows; everything else aborts the sweep.
fn is_flaggable(e: &Error) -> bool {
    matches!(e, Error::Domain(_) | Error::NakedSingularity { .. } | Error::NoDissipation)
}

fn join_flags(flags: &[&str]) -> String {
    flags.iter().filter(|f| !f.is_empty()).copied().collect::<Vec<_>>().join(";")
}

pub const REPORT_COLUMNS: [&str; 8] = CorrelationReport::COLUMNS;

const DECAY_COLUMNS: [&str; 6] = [
    "decay_concurrence",
    "decay_coherence_l1",
    "decay_mutual_info",
    "decay_classical_corr",
    "decay_discord",
    "decay_vn_entropy",
];

pub fn columns(model: Model) -> Vec<String> {
    let mut cols: Vec<&str> = match model {
        Model::Geometry => vec![
            "mass", "spin", "r_plus", "r_minus", "kappa", "kappa_4m", "omega_plus", "kappa_kerr", "kappa_r",
            "temperature",
        ],
        Model::Equilibrium => vec!["mass", "spin", "kappa_r", "temperature", "ratio"],
        Model::Transient => vec!["mass", "spin", "kappa_r", "ratio", "time"],
        Model::NeqSteady => vec![
            "mass", "spin", "dr", "kappa_r1", "kappa_r2", "temperature1", "temperature2", "p_lambda1", "p_lambda2",
            "p_lambda3", "p_lambda4",
        ],
    };
    if model != Model::Geometry {
        cols.extend(REPORT_COLUMNS);
    }
    match model {
        Model::Equilibrium => cols.push("tau_star"),
        Model::Transient => {
            cols.push("epr");
            cols.extend(DECAY_COLUMNS);
        }
        Model::NeqSteady => cols.extend([
            "coherence_l1_eigen",
            "flux_1",
            "flux_2",
            "flux_sum",
            "steady_residual",
            "effective_epr",
        ]),
        Model::Geometry => {}
    }
    cols.into_iter().map(String::from).collect()
}

fn grid(model: Model, cfg: &ScenarioConfig) -> Vec<Point> {
    let drs = if model == Model::NeqSteady { cfg.dr_range.values() } else { vec![0.0] };
    let mut points = Vec::new();
    for &mass in &cfg.mass_range.values() {
        for &spin in &cfg.spin_range.values() {
            for &dr in &drs {
                points.push(Point { mass, spin, dr });
            }
        }
    }
    points
}

fn extremal_flag(bh: &BlackHoleParams) -> &'static str {
    if bh.is_extremal() {
        "extremal"
    } else {
        ""
    }
}

fn geometry_point(cfg: &ScenarioConfig, p: &Point) -> kerr_qcorr::Result<PointOutput> {
    let bh = BlackHoleParams::new(p.mass, p.spin)?;
    let pos = DetectorPosition::new(cfg.radial_factor)?;
    let h = horizons(&bh);
    let values = vec![
        p.mass,
        p.spin,
        h.r_plus,
        h.r_minus,
        h.kappa,
        4.0 * p.mass * h.kappa,
        h.omega_plus,
        kerr_spring_gravity(&bh),
        local_acceleration(&bh, &pos)?,
        effective_temperature(&bh, &pos)?,
    ];
    Ok(PointOutput { rows: vec![Row::flagged(values, extremal_flag(&bh))], states: vec![] })
}

fn equilibrium_point(cfg: &ScenarioConfig, p: &Point) -> kerr_qcorr::Result<PointOutput> {
    let bh = BlackHoleParams::new(p.mass, p.spin)?;
    let pos = DetectorPosition::new(cfg.radial_factor)?;
    let kappa_r = local_acceleration(&bh, &pos)?;
    let spec = BathSpectrum::unruh(kappa_r)?;
    let coeffs = dissipation_coeffs(&spec, cfg.omega, cfg.mu)?;
    let rho = pauli_to_density(&equilibrium_steady_state(coeffs.ratio, cfg.tau_star, &z_axis())?)?;
    let report = correlation_report(&rho)?;
    let mut values = vec![p.mass, p.spin, kappa_r, spec.temperature(), coeffs.ratio];
    values.extend(report.values());
    values.push(rho.tau_star());
    Ok(PointOutput { rows: vec![Row::flagged(values, extremal_flag(&bh))], states: vec![rho] })
}

fn transient_point(cfg: &ScenarioConfig, p: &Point) -> kerr_qcorr::Result<PointOutput> {
    let bh = BlackHoleParams::new(p.mass, p.spin)?;
    let pos = DetectorPosition::new(cfg.radial_factor)?;
    let kappa_r = local_acceleration(&bh, &pos)?;
    let coeffs = dissipation_coeffs(&BathSpectrum::unruh(kappa_r)?, cfg.omega, cfg.mu)?;
    let (decay, bias) = coeffs.transient_rates(BiasOrientation::Thermal);
    let p0 = PauliCoeffs::bell_phi_plus();
    let initial = correlation_report(&pauli_to_density(&p0)?)?.values();
    let mut out = PointOutput::default();
    for s in cfg.time_range.values() {
        // `s` is μ²t; the generator runs in proper time
        let tau = s / (cfg.mu * cfg.mu);
        let rho = pauli_to_density(&transient_evolution(&p0, decay, bias, cfg.omega, tau)?)?;
        let report = correlation_report(&rho)?.values();
        let rate = |k: usize| if s == 0.0 { Ok(f64::NAN) } else { decay_rate(initial[k], report[k], s) };
        let mut values = vec![p.mass, p.spin, kappa_r, coeffs.ratio, s];
        values.extend(report);
        // EPR is the decay rate of the mutual information
        values.push(rate(2)?);
        for k in [0, 1, 2, 3, 4, 5] {
            values.push(rate(k)?);
        }
        out.rows.push(Row::flagged(values, extremal_flag(&bh)));
        out.states.push(rho);
    }
    Ok(out)
}

fn neq_point(cfg: &ScenarioConfig, p: &Point) -> kerr_qcorr::Result<PointOutput> {
    let bh = BlackHoleParams::new(p.mass, p.spin)?;
    let kappa_r1 = local_acceleration(&bh, &DetectorPosition::new(cfg.base_factor)?)?;
    let kappa_r2 = local_acceleration(&bh, &DetectorPosition::new(cfg.base_factor + p.dr)?)?;
    let spec1 = BathSpectrum::unruh(kappa_r1)?;
    let spec2 = BathSpectrum::unruh(kappa_r2)?;
    let es = eigen_structure(&TwoQubitHamiltonian::symmetric(cfg.omega, cfg.coupling_k())?)?;
    let generator = build_two_bath_liouvillian(&es, &transition_ops(&es), &spec1, &spec2, cfg.mu)?;
    let steady = neq_steady_state_closed_form(&es, &spec1, &spec2)?;
    let rho = steady.in_bare_basis()?;
    let report = correlation_report(&rho)?;
    let flux = generator.fluxes(&rho);
    let (t1, t2) = (spec1.temperature(), spec2.temperature());
    let epr = if bh.is_extremal() { f64::NAN } else { effective_epr(flux.inflow[0], t1, t2)? };

    let mut values = vec![p.mass, p.spin, p.dr, kappa_r1, kappa_r2, t1, t2];
    values.extend(steady.populations);
    values.extend(report.values());
    values.extend([
        l1_coherence_in_basis(&rho, &es.basis_change()),
        flux.inflow[0],
        flux.inflow[1],
        flux.inflow[0] + flux.inflow[1],
        flux.residual,
        epr,
    ]);
    let flag = join_flags(&[extremal_flag(&bh), if flux.steady { "" } else { "unsteady" }]);
    Ok(PointOutput { rows: vec![Row::flagged(values, flag)], states: vec![rho] })
}

/// Rows standing in for a point whose parameters are outside the model's
/// domain: swept parameters filled in, everything else `NaN`.
fn flagged_rows(model: Model, cfg: &ScenarioConfig, p: &Point, ncols: usize, reason: &str) -> Vec<Row> {
    let pad = |mut v: Vec<f64>| {
        v.resize(ncols, f64::NAN);
        Row::flagged(v, reason)
    };
    match model {
        Model::Transient => cfg
            .time_range
            .values()
            .into_iter()
            .map(|s| pad(vec![p.mass, p.spin, f64::NAN, f64::NAN, s]))
            .collect(),
        Model::NeqSteady => vec![pad(vec![p.mass, p.spin, p.dr])],
        _ => vec![pad(vec![p.mass, p.spin])],
    }
}

pub fn run(model: Model, cfg: &ScenarioConfig) -> Result<SweepOutput, SweepError> {
    let columns = columns(model);
    let ncols = columns.len();
    let points = grid(model, cfg);
    let eval = |p: &Point| -> Result<PointOutput, SweepError> {
        let result = match model {
            Model::Geometry => geometry_point(cfg, p),
            Model::Equilibrium => equilibrium_point(cfg, p),
            Model::Transient => transient_point(cfg, p),
            Model::NeqSteady => neq_point(cfg, p),
        };
        match result {
            Ok(out) => {
                debug_assert!(out.rows.iter().all(|r| r.values.len() == ncols));
                Ok(out)
            }
            Err(e) if is_flaggable(&e) => {
                Ok(PointOutput { rows: flagged_rows(model, cfg, p, ncols, &e.to_string()), states: vec![] })
            }
            Err(source) => Err(SweepError::Numerical { point: p.describe(model), source }),
        }
    };
    // collect preserves grid order in both modes
    let outputs: Vec<Result<PointOutput, SweepError>> = if cfg.serial {
        points.iter().map(eval).collect()
    } else {
        points.par_iter().map(eval).collect()
    };
    let mut rows = Vec::new();
    let mut states = Vec::new();
    for out in outputs {
        let out = out?;
        rows.extend(out.rows);
        states.extend(out.states);
    }
    Ok(SweepOutput { table: Table { columns, rows }, states })
}

/// The default figure for a model.
pub fn plot_spec(model: Model, cfg: &ScenarioConfig) -> PlotSpec {
    let (x, other) = if cfg.mass_range.n > 1 || cfg.spin_range.n == 1 { ("mass", "spin") } else { ("spin", "mass") };
    let strings = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match model {
        Model::Geometry => PlotSpec {
            title: "local acceleration and surface gravity".into(),
            x: x.into(),
            ys: strings(&["kappa_r", "kappa", "kappa_kerr"]),
            group_by: strings(&[other]),
        },
        Model::Equilibrium => PlotSpec {
            title: "equilibrium correlations".into(),
            x: x.into(),
            ys: strings(&["concurrence", "coherence_l1", "mutual_info", "discord", "vn_entropy"]),
            group_by: strings(&[other]),
        },
        Model::Transient => PlotSpec {
            title: "transient correlations vs time".into(),
            x: "time".into(),
            ys: strings(&["concurrence", "coherence_l1", "mutual_info", "discord", "vn_entropy"]),
            group_by: strings(&["mass", "spin"]),
        },
        Model::NeqSteady => PlotSpec {
            title: "nonequilibrium steady state vs separation".into(),
            x: "dr".into(),
            ys: strings(&["concurrence", "coherence_l1", "mutual_info", "discord"]),
            group_by: strings(&["mass", "spin"]),
        },
    }
}
