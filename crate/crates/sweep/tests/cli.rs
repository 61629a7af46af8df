use std::process::Command;

use kerr_sweep::config::{build_config, parse_config_text};
use kerr_sweep::{metadata, run, Model, ScenarioConfig};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kerr-sweep"))
}

fn small(model: Model) -> ScenarioConfig {
    let mut cfg = ScenarioConfig::default();
    cfg.set("mass-range", "10:20:6").unwrap();
    cfg.set("dr-range", "0:0.5:5").unwrap();
    cfg.set("time-range", "0:100:7").unwrap();
    if model == Model::Geometry {
        cfg.set("spin-range", "0:12:4").unwrap();
    }
    cfg
}

#[test]
fn parallel_and_serial_runs_are_byte_identical() {
    for model in [Model::Geometry, Model::Equilibrium, Model::Transient, Model::NeqSteady] {
        let cfg = small(model);
        let mut serial = cfg.clone();
        serial.serial = true;
        let a = run(model, &cfg).unwrap().table.to_csv(&metadata(model, &cfg));
        let b = run(model, &serial).unwrap().table.to_csv(&metadata(model, &cfg));
        let c = run(model, &cfg).unwrap().table.to_csv(&metadata(model, &cfg));
        assert_eq!(a, b, "{model:?}");
        assert_eq!(a, c, "{model:?}");
    }
}

#[test]
fn metadata_echo_reproduces_the_configuration() {
    let cfg = small(Model::Transient);
    let csv = run(Model::Transient, &cfg).unwrap().table.to_csv(&metadata(Model::Transient, &cfg));
    let echoed: String = csv
        .lines()
        .filter_map(|l| l.strip_prefix("# "))
        .filter(|l| l.contains('='))
        .filter(|l| !l.starts_with("model="))
        .map(|l| format!("{l}\n"))
        .collect();
    let back = build_config(&parse_config_text(&echoed).unwrap(), &[]).unwrap();
    assert_eq!(back.echo(), cfg.echo());
}

#[test]
fn geometry_columns() {
    let mut cfg = ScenarioConfig::default();
    cfg.set("mass-range", "5:15:3").unwrap();
    cfg.set("spin-range", "0:10:2").unwrap();
    let t = run(Model::Geometry, &cfg).unwrap().table;
    let spin = t.series("spin").unwrap();
    let k4m = t.series("kappa_4m").unwrap();
    for (s, v) in spin.iter().zip(&k4m) {
        if *s == 0.0 {
            assert!((v - 1.0).abs() < 1e-15);
        }
    }
    // (M, a) = (5, 10) is a naked singularity, (10, 10) is extremal
    let flags: Vec<&str> = t.rows.iter().map(|r| r.flag.as_str()).collect();
    assert!(flags[1].contains("naked singularity"));
    assert!(t.rows[1].values[2].is_nan());
    assert_eq!(flags[3], "extremal");
    assert_eq!(flags[4], "");
}

#[test]
fn equilibrium_kappa_matches_geometry_bit_for_bit() {
    let cfg = small(Model::Equilibrium);
    let g = run(Model::Geometry, &cfg).unwrap().table.series("kappa_r").unwrap();
    let e = run(Model::Equilibrium, &cfg).unwrap().table.series("kappa_r").unwrap();
    assert_eq!(g.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), e.iter().map(|x| x.to_bits()).collect::<Vec<_>>());
}

#[test]
fn transient_starts_from_a_bell_pair() {
    let t = run(Model::Transient, &small(Model::Transient)).unwrap().table;
    let get = |name: &str, row: usize| t.rows[row].values[t.column(name).unwrap()];
    for row in (0..t.rows.len()).step_by(7) {
        assert_eq!(get("time", row), 0.0);
        assert!((get("concurrence", row) - 1.0).abs() < 1e-10);
        assert!((get("mutual_info", row) - 2.0).abs() < 1e-10);
        assert!(get("vn_entropy", row).abs() < 1e-10);
        assert!(get("epr", row).is_nan());
        assert!(get("vn_entropy", row + 6) > 0.5);
        assert!(get("decay_vn_entropy", row + 6) < 0.0);
    }
}

#[test]
fn neq_equal_positions_carry_no_flux() {
    let t = run(Model::NeqSteady, &small(Model::NeqSteady)).unwrap().table;
    let dr = t.series("dr").unwrap();
    let flux = t.series("flux_1").unwrap();
    let epr = t.series("effective_epr").unwrap();
    let sum = t.series("flux_sum").unwrap();
    for i in 0..dr.len() {
        assert!(sum[i].abs() < 1e-10);
        if dr[i] == 0.0 {
            assert!(flux[i].abs() < 1e-18);
            assert!(epr[i].abs() < 1e-15 || epr[i].is_nan());
        }
    }
}

#[test]
fn cli_writes_csv_and_svg_with_flags_overriding_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("scan.cfg");
    std::fs::write(&config, "# small scan\nmass-range=10:30:5\nomega=0.2\n").unwrap();
    let out = dir.path().join("eq.csv");
    let status = bin()
        .args(["equilibrium", "--config"])
        .arg(&config)
        .args(["--omega", "0.15", "--tau-star", "-1", "--svg", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.contains("# omega=0.15\n"));
    assert!(csv.contains("# mass-range=10:30:5\n"));
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 6);
    let svg = std::fs::read_to_string(out.with_extension("svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn cli_prints_to_stdout_without_out() {
    let output = bin().args(["geometry", "--mass-range", "10:11:2"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.starts_with("# kerr-sweep "));
    assert!(text.contains("mass,spin,r_plus"));
}

#[test]
fn configuration_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad_file = dir.path().join("bad.cfg");
    std::fs::write(&bad_file, "omgea=0.1\n").unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["equilibrium".into(), "--mass-range".into(), "10:5:3".into()],
        vec!["equilibrium".into(), "--omega".into(), "-0.1".into()],
        vec!["transient".into(), "--tau-star".into(), "4".into()],
        vec!["equilibrium".into(), "--svg".into()],
        vec!["equilibrium".into(), "--config".into(), bad_file.display().to_string()],
        vec!["equilibrium".into(), "--config".into(), dir.path().join("missing.cfg").display().to_string()],
        vec!["no-such-model".into()],
    ];
    for args in cases {
        let status = bin().args(&args).output().unwrap().status;
        assert_eq!(status.code(), Some(2), "{args:?}");
    }
}
