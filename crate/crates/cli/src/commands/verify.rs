use std::process::ExitCode;

use anyhow::bail;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use anisowave::matrix::{vnorm, vsub};
use anisowave::oracle::{
    quadrature_integral, rk4_evolve, sample_conditioned_medium, series_propagator,
};
use anisowave::propagate::{evolve, integral_pair, propagator_pair, FieldState};
use anisowave::spectral::build_wave_operator;

use crate::config::RunConfig;
use crate::{VerifyArgs, EXIT_VERIFY};

const TOL_SERIES: f64 = 1e-10;
const TOL_RK4: f64 = 1e-6;
const TOL_QUAD: f64 = 1e-8;
const ORDER_RANGE: (f64, f64) = (12.0, 20.0);

struct InstanceErrors {
    series: f64,
    rk4: f64,
    quad: f64,
}

pub fn run(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let cfg_verify = match &args.config {
        Some(path) => RunConfig::load(path)?.verify,
        None => None,
    };
    let seed = args
        .seed
        .or_else(|| cfg_verify.as_ref().and_then(|v| v.seed))
        .unwrap_or(20260801);
    let instances = args
        .instances
        .or_else(|| cfg_verify.as_ref().and_then(|v| v.instances))
        .unwrap_or(20);
    if instances == 0 {
        bail!("--instances must be at least 1");
    }

    // Corruption hook: shrink the tolerances far below reachable accuracy.
    let corrupt = if args.inject_failure { 1e-12 } else { 1.0 };
    let tol_series = TOL_SERIES * corrupt;
    let tol_rk4 = TOL_RK4 * corrupt;
    let tol_quad = TOL_QUAD * corrupt;

    // Draw all instances up front so worker threads stay deterministic.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<_> = (0..instances)
        .map(|_| sample_conditioned_medium(&mut rng))
        .collect();

    let errors: Vec<InstanceErrors> = draws
        .par_iter()
        .map(|(m, k, d)| {
            let op = build_wave_operator(m, k);
            let omega0 = k.omega0();

            // Defining series vs closed-form propagators at omega0*t = 1.7.
            let theta = 1.7;
            let series = series_propagator(&op, theta, 1e-12, 300)
                .expect("series convergence at moderate phase");
            let pair = propagator_pair(d, omega0, theta / omega0);
            let series_err = (series.c - pair.c)
                .fro_norm()
                .max((series.sf - pair.sf).fro_norm());

            // RK4 vs closed-form evolution at omega0*t = 5.
            let init = FieldState::initial(
                [
                    num_complex::Complex64::new(1.0, 0.0),
                    num_complex::Complex64::new(0.3, -0.6),
                    num_complex::Complex64::new(-0.2, 0.1),
                ],
                [
                    num_complex::Complex64::new(0.0, 0.4),
                    num_complex::Complex64::new(0.2, 0.0),
                    num_complex::Complex64::new(0.1, -0.3),
                ],
                *k,
            );
            let t_end = 5.0 / omega0;
            let closed = evolve(&init, d, m, t_end);
            let stepped = rk4_evolve(m, k, init.e, init.b, t_end, 1e-3 / omega0);
            let scale = vnorm(&closed.e) + vnorm(&closed.b);
            let rk4_err = (vnorm(&vsub(&closed.e, &stepped.e))
                + vnorm(&vsub(&closed.b, &stepped.b)))
                / scale;

            // Simpson quadrature vs closed-form integrals at omega0*t = 1.3.
            // The integrand's fourth derivative scales with the squared
            // operator norm, so the panel count carries margin for badly
            // scaled draws.
            let t_int = 1.3 / omega0;
            let (ic, isf) = integral_pair(d, omega0, t_int);
            let (qc, qsf) = quadrature_integral(d, omega0, t_int, 2000);
            let quad_err = (ic - qc).fro_norm().max((isf - qsf).fro_norm());

            InstanceErrors {
                series: series_err,
                rk4: rk4_err,
                quad: quad_err,
            }
        })
        .collect();

    let max_series = errors.iter().map(|e| e.series).fold(0.0, f64::max);
    let max_rk4 = errors.iter().map(|e| e.rk4).fold(0.0, f64::max);
    let max_quad = errors.iter().map(|e| e.quad).fold(0.0, f64::max);

    // RK4 order factor under step halving on the first instance.
    let (m, k, d) = &draws[0];
    let init = FieldState::initial(
        [
            num_complex::Complex64::new(1.0, 0.0),
            num_complex::Complex64::new(0.2, -0.4),
            num_complex::Complex64::new(-0.3, 0.0),
        ],
        [
            num_complex::Complex64::new(0.0, 0.1),
            num_complex::Complex64::new(0.25, 0.0),
            num_complex::Complex64::new(0.0, 0.0),
        ],
        *k,
    );
    let t_end = 5.0 / k.omega0();
    let want = evolve(&init, d, m, t_end);
    let err_at = |h: f64| -> f64 {
        let got = rk4_evolve(m, k, init.e, init.b, t_end, h);
        let scale = vnorm(&want.e) + vnorm(&want.b);
        (vnorm(&vsub(&got.e, &want.e)) + vnorm(&vsub(&got.b, &want.b))) / scale
    };
    let h = 0.02 / k.omega0();
    let order_factor = err_at(h) / err_at(h / 2.0);

    println!("instances: {instances} (seed {seed})");
    println!("series max error:     {max_series:.3e} (tolerance {tol_series:.1e})");
    println!("rk4 max rel error:    {max_rk4:.3e} (tolerance {tol_rk4:.1e})");
    println!("quadrature max error: {max_quad:.3e} (tolerance {tol_quad:.1e})");
    println!(
        "rk4 order factor:     {order_factor:.2} (expected {:.0}..{:.0})",
        ORDER_RANGE.0, ORDER_RANGE.1
    );

    let ok = max_series <= tol_series
        && max_rk4 <= tol_rk4
        && max_quad <= tol_quad
        && order_factor >= ORDER_RANGE.0
        && order_factor <= ORDER_RANGE.1;
    if ok {
        println!("verify: PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verify: FAIL");
        Ok(ExitCode::from(EXIT_VERIFY))
    }
}
