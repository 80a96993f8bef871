//! Cross-module invariants: closed-form conditions vs the matrix pipeline,
//! gauge invariance, conjugation closure, and the shared-tensor medium.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use anisowave::hermiticity::{classify, example1_conditions, Example1Params, Verdict};
use anisowave::matrix::ComplexMatrix3;
use anisowave::oracle::{eigenvalues3, sample_conditioned_medium, sample_symmetric_params};
use anisowave::spectral::{build_wave_operator, jordan_decompose_default};
use anisowave::wave::outer_kk;
use anisowave::{example2_lambda0, example2_medium, example1_medium, MaterialPair, WaveVector};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Stratified draw: 0 unconstrained, 1 lossless, 2 balanced-real
/// (quasi without hermiticity), 3 balanced loss/gain (pseudo-only).
fn random_example1_set<R: Rng>(rng: &mut R, stratum: u8) -> Example1Params {
    loop {
        let eps1 = rng.gen_range(0.7..2.5);
        let mu1 = rng.gen_range(0.7..2.5);
        let mut p = Example1Params {
            eps1,
            mu1,
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
                // Nonzero alpha and gamma keep the spectrum off the real axis.
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
        if example1_medium(&p).is_ok() {
            return p;
        }
    }
}

#[test]
fn closed_form_verdicts_match_matrix_pipeline() {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    let k = WaveVector::new(0.0, 0.0, 1.0, 1.0).unwrap();
    let mut seen = [false; 3];
    for trial in 0..200 {
        let p = random_example1_set(&mut rng, (trial % 4) as u8);
        let m = example1_medium(&p).unwrap();
        let op = build_wave_operator(&m, &k);
        let d = match jordan_decompose_default(&op) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let matrix_verdict = classify(&d, &op).verdict;
        let formula_verdict = example1_conditions(&p);
        assert_eq!(
            matrix_verdict, formula_verdict,
            "verdicts disagree for {p:?} (trial {trial})"
        );
        seen[match matrix_verdict {
            Verdict::QuasiHermitian => 0,
            Verdict::PseudoHermitianOnly => 1,
            Verdict::NonPseudoHermitian => 2,
        }] = true;
    }
    assert!(seen.iter().all(|&s| s), "all three verdicts must occur");
}

#[test]
fn metric_pseudo_implies_conjugation_closed_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(302);
    let mut hermitian_draws = 0;
    for _ in 0..60 {
        // Hermitian tensors by construction: the metric test holds, so the
        // implication is exercised rather than vacuous.
        let (m0, k, _) = sample_conditioned_medium(&mut rng);
        let eps = m0.eps().hermitian_part() + ComplexMatrix3::identity().scale_re(2.0);
        let mu = m0.mu().hermitian_part() + ComplexMatrix3::identity().scale_re(2.0);
        let m = match MaterialPair::new(eps, mu) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let op = build_wave_operator(&m, &k);
        let (is_pseudo, _) = anisowave::check_pseudo_hermitian(&op);
        if !is_pseudo {
            continue;
        }
        hermitian_draws += 1;
        let eigs = eigenvalues3(op.matrix());
        let mut worst = 0.0f64;
        for z in &eigs {
            let zc = z.conj();
            let nearest = eigs
                .iter()
                .map(|w| (w - zc).norm())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(nearest);
        }
        assert!(worst <= 1e-8, "conjugation defect {worst}");
    }
    assert!(hermitian_draws >= 30);
}

#[test]
fn shared_tensor_medium_is_never_pseudo_only() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut count = 0;
    while count < 50 {
        let p = sample_symmetric_params(&mut rng);
        let m = match example2_medium(&p) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let k = anisowave::oracle::random_wavevector(&mut rng);
        let lam0 = match example2_lambda0(&p, &k) {
            Ok(l) => l,
            Err(_) => continue,
        };
        let op = build_wave_operator(&m, &k);
        let d = match jordan_decompose_default(&op) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let cls = classify(&d, &op);
        assert_ne!(cls.verdict, Verdict::PseudoHermitianOnly, "params {p:?}");
        // Closed-form eigenvalue matches the decomposition.
        let eigs = d.eigenvalues();
        assert!((eigs[1] - lam0).norm() <= 1e-9 * lam0.norm().max(1.0));
        assert!((eigs[2] - lam0).norm() <= 1e-9 * lam0.norm().max(1.0));
        count += 1;
    }
}

#[test]
fn k_aligned_tensor_parts_leave_spectrum_unchanged() {
    let mut rng = ChaCha8Rng::seed_from_u64(304);
    let mut count = 0;
    while count < 40 {
        let (m, k, _) = sample_conditioned_medium(&mut rng);
        let op = build_wave_operator(&m, &k);
        let eigs0 = eigenvalues3(op.matrix());

        let kk = outer_kk(&k);
        let z_eps = c(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let z_mu = c(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let eps_inv = *m.eps_inv() + kk.scale(z_eps);
        let mu_inv = *m.mu_inv() + kk.scale(z_mu);
        let m2 = match MaterialPair::from_inverses(eps_inv, mu_inv) {
            Ok(m2) => m2,
            Err(_) => continue,
        };
        let op2 = build_wave_operator(&m2, &k);
        let eigs2 = eigenvalues3(op2.matrix());

        let scale = eigs0.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let dist = anisowave::oracle::spectrum_distance(&eigs0, &eigs2);
        assert!(
            dist <= 1e-10 * scale,
            "spectrum moved by {dist} under k-aligned additions"
        );
        count += 1;
    }
}

#[test]
fn decompositions_of_random_media_satisfy_residual_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(306);
    for _ in 0..60 {
        let (m, k, d) = sample_conditioned_medium(&mut rng);
        let op = build_wave_operator(&m, &k);
        let scale = op.matrix().fro_norm().max(1.0);

        // Structural null directions.
        let (right, left) = anisowave::spectral::null_residuals(&op);
        assert!(right <= 1e-10);
        assert!(left <= 1e-10);

        // Similarity reconstruction and inverse pairing.
        let rec = (*d.s_inv() * *d.j() * *d.s() - *op.matrix()).fro_norm();
        assert!(rec <= 1e-9 * scale, "reconstruction {rec:.3e}");
        let ident = (*d.s() * *d.s_inv() - ComplexMatrix3::identity()).fro_norm();
        assert!(ident <= 1e-9 * scale);

        // Eigenpair residuals.
        for (lam, v) in d.eigenpairs() {
            assert!(anisowave::spectral::eigenpair_residual(op.matrix(), lam, &v) <= 1e-9);
        }

        // The structural zero shows up in an independent eigensolve too.
        let min_eig = eigenvalues3(op.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(min_eig <= 1e-10 * scale);
    }
}

#[test]
fn balanced_sets_conserve_phase_and_quasi_sets_stay_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(305);
    for _ in 0..10 {
        let p = random_example1_set(&mut rng, 3);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        for i in 0..=100 {
            let theta = 0.2 * i as f64;
            let (n_e, n_b) =
                anisowave::example1_reference_fields(&p, phi, 1.0, 1.0, theta);
            for z in n_e.iter().chain(n_b.iter()) {
                assert!(z.im.abs() <= 1e-10, "phase drift for {p:?}");
            }
        }
    }
    for _ in 0..10 {
        let p = random_example1_set(&mut rng, 2);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        for i in 0..=200 {
            let theta = 5.0 * i as f64;
            let (n_e, _) = anisowave::example1_reference_fields(&p, phi, 1.0, 1.0, theta);
            for z in &n_e {
                assert!(z.norm() <= 1.0 + 1e-12, "unbounded envelope for {p:?}");
            }
        }
    }
}
