//! Acceptance gate: one test per shipping criterion, each printing a
//! `[PASS]` line with the measured worst case (run with `--nocapture` to
//! see them). Tolerances are pinned here, not configured.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use anisowave::hermiticity::{classify, example1_conditions, Example1Params};
use anisowave::matrix::{parallel_residual, vnorm, vsub};
use anisowave::oracle::{
    eigenvalues3, rk4_evolve, sample_conditioned_medium, sample_symmetric_params,
    series_propagator, spectrum_distance,
};
use anisowave::propagate::{
    evolve, gauss_invariants, propagator_pair, time_harmonic_modes, FieldState,
};
use anisowave::scenarios::{
    example1_medium, example1_reference_state, example2_lambda0, example2_medium,
    example2_special, example3_medium, example3_reference_fields, InitialCondition,
};
use anisowave::spectral::{build_wave_operator, jordan_decompose_default, JordanCase};
use anisowave::wave::outer_kk;
use anisowave::{MaterialPair, WaveVector};

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn axial_k() -> WaveVector {
    WaveVector::new(0.0, 0.0, 1.0, 1.0).unwrap()
}

fn named_hermitian() -> Example1Params {
    Example1Params {
        eps1: 2.0,
        alpha: 1.0,
        ..Default::default()
    }
}

fn named_quasi() -> Example1Params {
    Example1Params {
        eps1: 2.0,
        alpha: 1.0,
        beta: 0.5,
        gamma_eps: 1.0,
        gamma_mu: -0.5,
        ..Default::default()
    }
}

fn named_pseudo() -> Example1Params {
    Example1Params {
        alpha: 1.0,
        beta: -1.0,
        gamma_eps: 1.0,
        gamma_mu: -1.0,
        ..Default::default()
    }
}

/// Stratified draw: 0 unconstrained, 1 lossless, 2 balanced-real (quasi),
/// 3 balanced loss/gain (pseudo-only).
fn random_set<R: Rng>(rng: &mut R, stratum: u8) -> Example1Params {
    loop {
        let mut p = Example1Params {
            eps1: rng.gen_range(0.7..2.5),
            mu1: rng.gen_range(0.7..2.5),
            alpha: rng.gen_range(-1.5..1.5),
            beta: rng.gen_range(-1.5..1.5),
            gamma_eps: rng.gen_range(-0.8..0.8),
            gamma_mu: rng.gen_range(-0.8..0.8),
            ..Default::default()
        };
        match stratum {
            1 => {
                p.gamma_eps = 0.0;
                p.gamma_mu = 0.0;
            }
            2 => {
                p.beta = p.mu1 * p.alpha / p.eps1;
                p.gamma_mu = -p.mu1 * p.gamma_eps / p.eps1;
            }
            3 => {
                if p.alpha.abs() < 0.2 {
                    p.alpha = 0.4_f64.copysign(p.alpha);
                }
                if p.gamma_eps.abs() < 0.2 {
                    p.gamma_eps = 0.4_f64.copysign(p.gamma_eps);
                }
                p.beta = -p.mu1 * p.alpha / p.eps1;
                p.gamma_mu = -p.mu1 * p.gamma_eps / p.eps1;
            }
            _ => {}
        }
        if example1_medium(&p).is_err() {
            continue;
        }
        // Keep the transverse factors away from zero and the exponential
        // envelopes moderate, so absolute 1e-10 comparisons stay meaningful.
        let (lm, lp) = p.lambda_pm();
        let factors_ok = [
            c64(p.eps1 - p.alpha, p.gamma_eps),
            c64(p.eps1 + p.alpha, p.gamma_eps),
            c64(p.mu1 - p.beta, p.gamma_mu),
            c64(p.mu1 + p.beta, p.gamma_mu),
        ]
        .iter()
        .all(|z| z.norm() >= 0.1);
        let growth_ok = lm.sqrt().im.abs() <= 0.3 && lp.sqrt().im.abs() <= 0.3;
        if factors_ok && growth_ok {
            return p;
        }
    }
}

// ---------------------------------------------------------------------
// 1. Uniaxial-medium regression: pipeline fields match the closed-form
//    envelopes for the named and random parameter sets.
// ---------------------------------------------------------------------
#[test]
fn criterion_01_uniaxial_field_regression() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let k = axial_k();
    let mut sets = vec![named_hermitian(), named_quasi(), named_pseudo()];
    for i in 0..20 {
        sets.push(random_set(&mut rng, (i % 4) as u8));
    }
    let amp = c64(0.8, -0.4);
    let mut worst = 0.0f64;
    for p in &sets {
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let m = example1_medium(p).unwrap();
        let op = build_wave_operator(&m, &k);
        let d = jordan_decompose_default(&op).unwrap();
        let init = InitialCondition::Polarized {
            amplitude: amp,
            angle: phi,
        }
        .state(&k);
        for i in 0..200 {
            let t = 20.0 * i as f64 / 199.0;
            let got = evolve(&init, &d, &m, t);
            let want = example1_reference_state(p, amp, phi, &k, t);
            worst = worst
                .max(vnorm(&vsub(&got.e, &want.e)))
                .max(vnorm(&vsub(&got.b, &want.b)));
        }
    }
    assert!(worst <= 1e-10, "worst field deviation {worst:.3e}");
    println!("[PASS] criterion 01: uniaxial regression, worst deviation {worst:.3e}");
}

// ---------------------------------------------------------------------
// 2. Balanced loss/gain media conserve the total phase: both envelopes
//    stay real.
// ---------------------------------------------------------------------
#[test]
fn criterion_02_phase_conservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut sets = vec![named_pseudo()];
    for _ in 0..10 {
        sets.push(random_set(&mut rng, 3));
    }
    let mut worst = 0.0f64;
    for p in &sets {
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        for i in 0..200 {
            let theta = 20.0 * i as f64 / 199.0;
            let (n_e, n_b) = anisowave::example1_reference_fields(p, phi, 1.0, 1.0, theta);
            for z in n_e.iter().chain(n_b.iter()) {
                worst = worst.max(z.im.abs());
            }
        }
    }
    assert!(worst <= 1e-10, "worst imaginary part {worst:.3e}");
    println!("[PASS] criterion 02: phase conservation, worst Im {worst:.3e}");
}

// ---------------------------------------------------------------------
// 3. Quasi-Hermitian media: real positive eigenvalues and envelopes
//    bounded by one over a long horizon.
// ---------------------------------------------------------------------
#[test]
fn criterion_03_quasi_boundedness() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let k = axial_k();
    let mut sets = vec![named_quasi()];
    for i in 0..10 {
        sets.push(random_set(&mut rng, if i % 2 == 0 { 1 } else { 2 }));
    }
    let mut worst_im = 0.0f64;
    let mut worst_bound = 0.0f64;
    for p in &sets {
        let m = example1_medium(p).unwrap();
        let op = build_wave_operator(&m, &k);
        let d = jordan_decompose_default(&op).unwrap();
        let eigs = d.eigenvalues();
        for lam in &eigs[1..] {
            worst_im = worst_im.max(lam.im.abs());
            assert!(lam.re > 0.0, "non-positive eigenvalue {lam} for {p:?}");
        }
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        for i in 0..10_000 {
            let theta = 1000.0 * i as f64 / 9999.0;
            let (n_e, _) = anisowave::example1_reference_fields(p, phi, 1.0, 1.0, theta);
            for z in &n_e {
                worst_bound = worst_bound.max(z.norm());
            }
        }
    }
    assert!(worst_im <= 1e-10, "eigenvalue reality defect {worst_im:.3e}");
    assert!(
        worst_bound <= 1.0 + 1e-12,
        "envelope bound violated: {worst_bound}"
    );
    println!(
        "[PASS] criterion 03: quasi boundedness, |Im λ| ≤ {worst_im:.3e}, max envelope {worst_bound}"
    );
}

// ---------------------------------------------------------------------
// 4. Closed-form parameter conditions agree with the matrix pipeline on
//    200 of 200 stratified random parameter sets.
// ---------------------------------------------------------------------
#[test]
fn criterion_04_classification_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let k = axial_k();
    let mut agreements = 0;
    let mut total = 0;
    while total < 200 {
        let p = random_set(&mut rng, (total % 4) as u8);
        let m = example1_medium(&p).unwrap();
        let op = build_wave_operator(&m, &k);
        let d = match jordan_decompose_default(&op) {
            Ok(d) => d,
            Err(_) => continue,
        };
        total += 1;
        if classify(&d, &op).verdict == example1_conditions(&p) {
            agreements += 1;
        } else {
            panic!("verdict mismatch for {p:?}");
        }
    }
    assert_eq!(agreements, 200);
    println!("[PASS] criterion 04: classification equivalence 200/200");
}

// ---------------------------------------------------------------------
// 5. Shared-tensor medium: the constrained family collapses to c^2, and
//    the general closed-form eigenvalue matches a numeric eigensolve with
//    a doubly degenerate eigenspace.
// ---------------------------------------------------------------------
#[test]
fn criterion_05_shared_tensor_eigenvalue() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let k = axial_k();
    let mut worst_special = 0.0f64;
    let mut n = 0;
    while n < 20 {
        let c = c64(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0..1.0));
        let u = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if c.norm() < 0.4 {
            continue;
        }
        let p = match example2_special(c, u) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let lam0 = match example2_lambda0(&p, &k) {
            Ok(l) => l,
            Err(_) => continue,
        };
        worst_special = worst_special.max((lam0 - c * c).norm() / (c * c).norm());
        n += 1;
    }
    assert!(worst_special <= 1e-10, "special-family error {worst_special:.3e}");

    let mut worst_general = 0.0f64;
    let mut worst_degeneracy = 0.0f64;
    let mut count = 0;
    while count < 50 {
        let p = sample_symmetric_params(&mut rng);
        let m = match example2_medium(&p) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let kk = anisowave::oracle::random_wavevector(&mut rng);
        let lam0 = match example2_lambda0(&p, &kk) {
            Ok(l) => l,
            Err(_) => continue,
        };
        let op = build_wave_operator(&m, &kk);
        let eigs = eigenvalues3(op.matrix());
        // Order by distance from zero; the two furthest carry the double
        // eigenvalue. A root finder splits a double root by O(sqrt(eps)),
        // so once the degeneracy is confirmed the accurate numeric value
        // comes from the trace identity tr = 0 + 2*lambda.
        let mut by_mag = eigs;
        by_mag.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
        let pair_gap = (by_mag[1] - by_mag[2]).norm();
        let scale = lam0.norm().max(1.0);
        assert!(by_mag[0].norm() <= 1e-10 * scale, "structural zero missing");
        let numeric = (op.matrix().trace() - by_mag[0]) * 0.5;
        worst_general = worst_general.max((numeric - lam0).norm() / scale);
        worst_degeneracy = worst_degeneracy.max(pair_gap / scale);

        // Two independent eigenvectors at the degenerate eigenvalue.
        let d = match jordan_decompose_default(&op) {
            Ok(d) => d,
            Err(_) => continue,
        };
        assert!(!d.is_defective(), "degenerate eigenvalue must stay diagonalizable");
        for (lam, v) in d.eigenpairs() {
            assert!((lam - lam0).norm() <= 1e-9 * scale);
            assert!(
                anisowave::spectral::eigenpair_residual(op.matrix(), lam, &v) <= 1e-9
            );
        }
        count += 1;
    }
    assert!(worst_general <= 1e-9, "general-family error {worst_general:.3e}");
    assert!(worst_degeneracy <= 1e-6, "splitting {worst_degeneracy:.3e}");
    println!(
        "[PASS] criterion 05: shared-tensor eigenvalue, special {worst_special:.3e}, general {worst_general:.3e}"
    );
}

// ---------------------------------------------------------------------
// 6. Defective medium: detection, the lone circular polarization, field
//    regression, and linear secular growth.
// ---------------------------------------------------------------------
#[test]
fn criterion_06_defective_medium() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let k = axial_k();
    let circ = [c64(1.0, 0.0), c64(0.0, 1.0), c64(0.0, 0.0)];
    let mut worst_lambda = 0.0f64;
    let mut worst_pol = 0.0f64;
    let mut worst_field = 0.0f64;
    let mut n = 0;
    while n < 20 {
        let f = c64(rng.gen_range(0.5..2.0), rng.gen_range(-0.5..0.5));
        let g = c64(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        if g.norm() < 0.1 || f.sqrt().im.abs() > 0.3 {
            continue;
        }
        let m = example3_medium(f, g).unwrap();
        let op = build_wave_operator(&m, &k);
        let d = jordan_decompose_default(&op).unwrap();
        let lambda = match d.case() {
            JordanCase::Defective { lambda } => lambda,
            other => panic!("expected defective case, got {other:?} for f={f}, g={g}"),
        };
        worst_lambda = worst_lambda.max((lambda - f).norm());
        let v1 = d.s_inv().col(1);
        let v2 = d.s_inv().col(2);
        assert!(
            anisowave::spectral::chain_residual(op.matrix(), lambda, &v1, &v2) <= 1e-9,
            "generalized-eigenvector residual too large"
        );

        let modes = time_harmonic_modes(&d, &k);
        assert_eq!(modes.len(), 2);
        for mode in &modes {
            worst_pol = worst_pol.max(parallel_residual(&circ, &mode.polarization));
        }

        let amp = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let init = InitialCondition::Circular { amplitude: amp }.state(&k);
        for i in 0..200 {
            let t = 20.0 * i as f64 / 199.0;
            let got = evolve(&init, &d, &m, t);
            let (e_ref, b_ref) = example3_reference_fields(amp, f, g, k.k3(), k.speed(), t);
            worst_field = worst_field
                .max(vnorm(&vsub(&got.e, &e_ref)))
                .max(vnorm(&vsub(&got.b, &b_ref)));
        }
        n += 1;
    }
    assert!(worst_lambda <= 1e-9, "lambda error {worst_lambda:.3e}");
    assert!(worst_pol <= 1e-9, "polarization residual {worst_pol:.3e}");
    assert!(worst_field <= 1e-10, "field deviation {worst_field:.3e}");

    // Real coupling: ||E|| / (omega0 t) converges to a positive constant;
    // sampled at the carrier peaks it is exactly constant.
    for _ in 0..5 {
        let f: f64 = rng.gen_range(0.5..2.0);
        let g: f64 = rng.gen_range(0.2..1.5);
        let root_f = f.sqrt();
        let expected = g * 2.0_f64.sqrt() / root_f;
        let mut ratios = Vec::new();
        let mut n_peak = 0;
        loop {
            let theta = (n_peak as f64 + 0.5) * std::f64::consts::PI / root_f;
            n_peak += 1;
            if theta < 10.0 {
                continue;
            }
            if theta > 100.0 {
                break;
            }
            let (e, _) =
                example3_reference_fields(c64(1.0, 0.0), c64(f, 0.0), c64(g, 0.0), 1.0, 1.0, theta);
            ratios.push(vnorm(&e) / theta);
        }
        assert!(ratios.len() >= 10);
        for r in &ratios {
            assert!((r - expected).abs() <= 1e-6 * expected, "ratio {r} vs {expected}");
            assert!(*r > 0.0);
        }
    }
    println!(
        "[PASS] criterion 06: defective medium, λ err {worst_lambda:.3e}, field err {worst_field:.3e}"
    );
}

// ---------------------------------------------------------------------
// 7. Oracle equivalence: defining series, RK4, and the RK4 order check.
// ---------------------------------------------------------------------
#[test]
fn criterion_07_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut worst_series = 0.0f64;
    let mut worst_rk4 = 0.0f64;
    let mut order_factor = 0.0f64;
    for i in 0..100 {
        let (m, k, d) = sample_conditioned_medium(&mut rng);
        let op = build_wave_operator(&m, &k);
        let theta = rng.gen_range(0.2..2.0);
        let series = series_propagator(&op, theta, 1e-12, 300).unwrap();
        let pair = propagator_pair(&d, k.omega0(), theta / k.omega0());
        worst_series = worst_series
            .max((series.c - pair.c).fro_norm())
            .max((series.sf - pair.sf).fro_norm());

        let init = FieldState::initial(
            [c64(1.0, 0.0), c64(0.3, -0.6), c64(-0.2, 0.1)],
            [c64(0.0, 0.4), c64(0.2, 0.0), c64(0.1, -0.3)],
            k,
        );
        let t_end = 5.0 / k.omega0();
        let closed = evolve(&init, &d, &m, t_end);
        let stepped = rk4_evolve(&m, &k, init.e, init.b, t_end, 1e-3 / k.omega0());
        let scale = vnorm(&closed.e) + vnorm(&closed.b);
        worst_rk4 = worst_rk4.max(
            (vnorm(&vsub(&closed.e, &stepped.e)) + vnorm(&vsub(&closed.b, &stepped.b))) / scale,
        );

        if i == 0 {
            let want = closed.clone();
            let err = |h: f64| {
                let got = rk4_evolve(&m, &k, init.e, init.b, t_end, h);
                (vnorm(&vsub(&got.e, &want.e)) + vnorm(&vsub(&got.b, &want.b))) / scale
            };
            let h = 0.02 / k.omega0();
            order_factor = err(h) / err(h / 2.0);
        }
    }
    assert!(worst_series <= 1e-10, "series error {worst_series:.3e}");
    assert!(worst_rk4 <= 1e-6, "rk4 error {worst_rk4:.3e}");
    assert!(
        (12.0..=20.0).contains(&order_factor),
        "order factor {order_factor}"
    );
    println!(
        "[PASS] criterion 07: oracle equivalence, series {worst_series:.3e}, rk4 {worst_rk4:.3e}, order {order_factor:.1}"
    );
}

// ---------------------------------------------------------------------
// 8. Conservation: the divergence invariants stay constant for presets
//    and random media.
// ---------------------------------------------------------------------
#[test]
fn criterion_08_gauss_conservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let k = axial_k();
    let mut cases: Vec<(MaterialPair, WaveVector, FieldState)> = Vec::new();
    for p in [named_hermitian(), named_quasi(), named_pseudo()] {
        let m = example1_medium(&p).unwrap();
        let init = InitialCondition::Polarized {
            amplitude: c64(1.0, 0.0),
            angle: 0.3,
        }
        .state(&k);
        cases.push((m, k, init));
    }
    {
        let m = example2_medium(&example2_special(c64(2.0, 0.0), c64(1.0, 0.0)).unwrap()).unwrap();
        let init = InitialCondition::Polarized {
            amplitude: c64(1.0, 0.0),
            angle: 0.0,
        }
        .state(&k);
        cases.push((m, k, init));
        let m3 = example3_medium(c64(1.0, 0.0), c64(1.0, 0.0)).unwrap();
        let init3 = InitialCondition::Circular {
            amplitude: c64(1.0, 0.0),
        }
        .state(&k);
        cases.push((m3, k, init3));
    }
    for _ in 0..50 {
        let (m, kk, _) = sample_conditioned_medium(&mut rng);
        let mut z = || c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let init = FieldState::initial([z(), z(), z()], [z(), z(), z()], kk);
        cases.push((m, kk, init));
    }

    let mut worst = 0.0f64;
    for (m, kk, init) in &cases {
        let op = build_wave_operator(m, kk);
        let d = jordan_decompose_default(&op).unwrap();
        let (ge0, gb0) = gauss_invariants(init, m);
        for i in 1..=25 {
            let t = (50.0 * i as f64 / 25.0) / kk.omega0();
            let state = evolve(init, &d, m, t);
            let (ge, gb) = gauss_invariants(&state, m);
            // Growing solutions are normalized by the instantaneous field size.
            let field_scale = vnorm(&init.e)
                .max(vnorm(&state.e))
                .max(vnorm(&state.b))
                .max(vnorm(&init.b))
                .max(1e-30);
            let e_scale = kk.norm() * m.eps().fro_norm() * field_scale;
            let b_scale = kk.norm() * field_scale;
            worst = worst
                .max((ge - ge0).norm() / e_scale)
                .max((gb - gb0).norm() / b_scale);
        }
    }
    assert!(worst <= 1e-9, "normalized Gauss drift {worst:.3e}");
    println!("[PASS] criterion 08: conservation, worst normalized drift {worst:.3e}");
}

// ---------------------------------------------------------------------
// 9. Gauge invariance: k-aligned additions to the inverse tensors leave
//    the nonzero spectrum unchanged.
// ---------------------------------------------------------------------
#[test]
fn criterion_09_gauge_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let mut worst = 0.0f64;
    let mut count = 0;
    while count < 50 {
        let (m, k, d) = sample_conditioned_medium(&mut rng);
        let kk = outer_kk(&k);
        let z_eps = c64(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let z_mu = c64(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let m2 = match MaterialPair::from_inverses(
            *m.eps_inv() + kk.scale(z_eps),
            *m.mu_inv() + kk.scale(z_mu),
        ) {
            Ok(m2) => m2,
            Err(_) => continue,
        };
        let op2 = build_wave_operator(&m2, &k);
        let d2 = match jordan_decompose_default(&op2) {
            Ok(d2) => d2,
            Err(_) => continue,
        };
        let e1 = d.eigenvalues();
        let e2 = d2.eigenvalues();
        let scale = e1.iter().map(|z| z.norm()).fold(1.0, f64::max);
        worst = worst.max(spectrum_distance(&e1, &e2) / scale);
        count += 1;
    }
    assert!(worst <= 1e-10, "spectrum moved by {worst:.3e}");
    println!("[PASS] criterion 09: gauge invariance, worst spectral shift {worst:.3e}");
}

// ---------------------------------------------------------------------
// 10. CLI determinism and the verification command.
// ---------------------------------------------------------------------
#[test]
fn criterion_10_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("run.toml");
    std::fs::write(
        &cfg_path,
        r#"
[medium]
preset = "example1"

[medium.parameters]
eps1 = 2.0
alpha = 1.0
beta = 0.5
gamma_eps = 1.0
gamma_mu = -0.5

[wavevector]
k = [0.0, 0.0, 1.0]

[time]
t_max = 20.0
dt = 0.1
"#,
    )
    .unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for out in [&out_a, &out_b] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_anisowave"))
            .args(["propagate", "--config"])
            .arg(&cfg_path)
            .arg("--out")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(
        std::fs::read(&out_a).unwrap(),
        std::fs::read(&out_b).unwrap(),
        "propagate output must be byte-identical"
    );

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_anisowave"))
        .args(["verify", "--seed", "20260801", "--instances", "5"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "verify exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );
    println!("[PASS] criterion 10: CLI determinism and verification");
}
