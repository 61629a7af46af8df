mod common;

use common::{max_entry_diff, random_state};
use kerr_qcorr::common_bath::{build_common_bath_liouvillian, equilibrium_steady_state, z_axis};
use kerr_qcorr::geometry::{local_acceleration, BlackHoleParams, DetectorPosition};
use kerr_qcorr::measures::{discord_measurement_grid, discord_xstate, l1_coherence, l1_coherence_in_basis};
use kerr_qcorr::spectrum::{dissipation_coeffs, thermal_ratio, BathSpectrum, BiasOrientation};
use kerr_qcorr::state::{density_to_pauli, pauli_to_density, PauliCoeffs};
use kerr_qcorr::superop::{integrate_rk4, steady_state_nullspace};
use kerr_qcorr::transient::{build_one_sided_liouvillian, transient_evolution};
use kerr_qcorr::two_bath::{
    build_two_bath_liouvillian, eigen_structure, neq_steady_state_closed_form, transition_ops, TwoQubitHamiltonian,
};
use rand::{rngs::StdRng, SeedableRng};

const OMEGA: f64 = 0.1;
const MU: f64 = 0.01;

fn kappa_r(mass: f64, spin: f64, factor: f64) -> f64 {
    local_acceleration(&BlackHoleParams::new(mass, spin).unwrap(), &DetectorPosition::new(factor).unwrap()).unwrap()
}

#[test]
fn equilibrium_closed_form_matches_null_space_over_spins() {
    for k in 0..12 {
        let spin = 0.1 + 0.8 * k as f64;
        let kr = kappa_r(10.01, spin, 1.01);
        let coeffs = dissipation_coeffs(&BathSpectrum::unruh(kr).unwrap(), OMEGA, MU).unwrap();
        assert!((coeffs.ratio - thermal_ratio(OMEGA, kr)).abs() < 1e-12);
        let l = build_common_bath_liouvillian(&coeffs, &z_axis());
        for tau_star in [-3.0, -1.0, 0.5] {
            let oracle = steady_state_nullspace(&l, Some(tau_star)).unwrap();
            let closed = pauli_to_density(&equilibrium_steady_state(coeffs.ratio, tau_star, &z_axis()).unwrap()).unwrap();
            assert!(max_entry_diff(oracle.matrix(), closed.matrix()) < 1e-8, "a = {spin}, tau* = {tau_star}");
        }
    }
}

#[test]
fn transient_closed_form_matches_rk4_for_generic_initial_states() {
    let mut rng = StdRng::seed_from_u64(5);
    for (mass, spin) in [(10.0, 0.0), (12.0, 10.0), (30.0, 10.0)] {
        let kr = kappa_r(mass, spin, 1.01);
        let coeffs = dissipation_coeffs(&BathSpectrum::unruh(kr).unwrap(), OMEGA, MU).unwrap();
        let (decay, bias) = coeffs.transient_rates(BiasOrientation::Thermal);
        let l = build_one_sided_liouvillian(coeffs.gamma_minus, coeffs.gamma_plus, OMEGA);
        let rho0 = random_state(&mut rng);
        let p0 = density_to_pauli(&rho0);
        // μ²t up to 10, i.e. τ up to 10⁵
        let times: Vec<f64> = (0..=10).map(|k| k as f64 / (MU * MU)).collect();
        let traj = integrate_rk4(&l, rho0.matrix(), 0.02, &times).unwrap();
        for (t, m) in times.iter().zip(&traj) {
            let closed = transient_evolution(&p0, decay, bias, OMEGA, *t).unwrap().to_matrix();
            assert!(max_entry_diff(&closed, m) < 1e-7, "M = {mass}, t = {t}");
        }
    }
}

#[test]
fn rk4_converges_at_fourth_order() {
    let coeffs = dissipation_coeffs(&BathSpectrum::unruh(0.25).unwrap(), OMEGA, MU).unwrap();
    let (decay, bias) = coeffs.transient_rates(BiasOrientation::Thermal);
    let l = build_one_sided_liouvillian(coeffs.gamma_minus, coeffs.gamma_plus, OMEGA);
    let p0 = PauliCoeffs::bell_phi_plus();
    let rho0 = pauli_to_density(&p0).unwrap();
    let t = 2000.0;
    let exact = transient_evolution(&p0, decay, bias, OMEGA, t).unwrap().to_matrix();
    let err = |h: f64| max_entry_diff(&integrate_rk4(&l, rho0.matrix(), h, &[t]).unwrap()[0], &exact);
    let (coarse, fine) = (err(2.0), err(1.0));
    let order = (coarse / fine).log2();
    assert!((3.7..4.3).contains(&order), "observed order {order}");
}

#[test]
fn two_bath_closed_form_matches_null_space_for_asymmetric_qubits() {
    let es = eigen_structure(&TwoQubitHamiltonian::new(0.11, 0.09, 0.004).unwrap()).unwrap();
    let ops = transition_ops(&es);
    for (k1, k2) in [(0.25, 0.05), (0.04, 0.2), (0.1, 0.1)] {
        let s1 = BathSpectrum::unruh(k1).unwrap();
        let s2 = BathSpectrum::unruh(k2).unwrap();
        let g = build_two_bath_liouvillian(&es, &ops, &s1, &s2, MU).unwrap();
        let oracle = steady_state_nullspace(&g.total, None).unwrap();
        let closed = neq_steady_state_closed_form(&es, &s1, &s2).unwrap().in_bare_basis().unwrap();
        assert!(max_entry_diff(oracle.matrix(), closed.matrix()) < 1e-8);
    }
}

#[test]
fn two_bath_coherence_lives_only_in_the_bare_basis() {
    let es = eigen_structure(&TwoQubitHamiltonian::symmetric(OMEGA, 0.005).unwrap()).unwrap();
    let s1 = BathSpectrum::unruh(0.3).unwrap();
    let s2 = BathSpectrum::unruh(0.05).unwrap();
    let ss = neq_steady_state_closed_form(&es, &s1, &s2).unwrap();
    assert!((ss.populations[2] - ss.populations[3]).abs() > 1e-6);
    let rho = ss.in_bare_basis().unwrap();
    assert!(l1_coherence_in_basis(&rho, &es.basis_change()) < 1e-15);
    assert!(l1_coherence(&rho) > 1e-6);
}

#[test]
fn discord_formula_matches_measurement_grid_at_half_ratio() {
    let rho = pauli_to_density(&equilibrium_steady_state(0.5, -1.0, &z_axis()).unwrap()).unwrap();
    let x = discord_xstate(&rho).unwrap();
    let g = discord_measurement_grid(&rho, 100, 100).unwrap();
    assert!((x.discord - g.discord).abs() < 1e-4, "{} vs {}", x.discord, g.discord);
}
