use std::process::ExitCode;

use anyhow::{bail, Context};
use rayon::prelude::*;

use anisowave::scenarios::Preset;
use anisowave::spectral::{jordan_decompose_default, JordanCase};
use anisowave::{build_wave_operator, classify, principal_sqrt};

use super::Pipeline;
use crate::output::{emit, fmt_f64, CsvTable};
use crate::{Format, SweepArgs};

const COLUMNS: [&str; 11] = [
    "value",
    "verdict",
    "case",
    "lambda_minus_re",
    "lambda_minus_im",
    "lambda_plus_re",
    "lambda_plus_im",
    "sqrt_lambda_minus_re",
    "sqrt_lambda_minus_im",
    "sqrt_lambda_plus_re",
    "sqrt_lambda_plus_im",
];

pub fn run(args: &SweepArgs) -> anyhow::Result<ExitCode> {
    let pipe = Pipeline::build(&args.common)?;
    let values = parse_range(&args.range)?;

    let rows: Vec<Vec<String>> = values
        .par_iter()
        .map(|&value| sweep_row(&pipe.scenario.preset, &args.param, value, &pipe.scenario.k))
        .collect::<anyhow::Result<Vec<_>>>()?;

    let mut table = CsvTable::new(COLUMNS.to_vec());
    super::propagate::write_common_meta(&mut table, &pipe);
    table.meta("param", &args.param);
    table.meta("range", &args.range);
    for row in rows {
        table.row(row);
    }

    let format = pipe.format_or(args.common.format, Format::Csv);
    emit(pipe.out_path(&args.common).as_deref(), &table.render(format))?;
    Ok(ExitCode::SUCCESS)
}

fn sweep_row(
    preset: &Preset,
    param: &str,
    value: f64,
    k: &anisowave::WaveVector,
) -> anyhow::Result<Vec<String>> {
    let varied = set_param(preset, param, value)?;
    let scenario = anisowave::ScenarioConfig::new(
        varied,
        *k,
        anisowave::InitialCondition::Polarized {
            amplitude: num_complex::Complex64::new(1.0, 0.0),
            angle: 0.0,
        },
    )?;
    let medium = scenario.medium()?;
    let op = build_wave_operator(&medium, k);
    let decomp = jordan_decompose_default(&op)?;
    let class = classify(&decomp, &op);
    let (case, lm, lp) = match decomp.case() {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => ("diagonalizable", lambda_minus, lambda_plus),
        JordanCase::Defective { lambda } => ("defective", lambda, lambda),
    };
    let rm = principal_sqrt(lm).sqrt_lambda;
    let rp = principal_sqrt(lp).sqrt_lambda;
    Ok(vec![
        fmt_f64(value),
        class.verdict.as_str().to_string(),
        case.to_string(),
        fmt_f64(lm.re),
        fmt_f64(lm.im),
        fmt_f64(lp.re),
        fmt_f64(lp.im),
        fmt_f64(rm.re),
        fmt_f64(rm.im),
        fmt_f64(rp.re),
        fmt_f64(rp.im),
    ])
}

/// `LO:HI:STEP` with inclusive endpoints; an inverted range is empty.
fn parse_range(text: &str) -> anyhow::Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        bail!("range must be LO:HI:STEP");
    }
    let lo: f64 = parts[0].parse().context("bad LO")?;
    let hi: f64 = parts[1].parse().context("bad HI")?;
    let step: f64 = parts[2].parse().context("bad STEP")?;
    if !step.is_finite() || step <= 0.0 {
        bail!("STEP must be positive");
    }
    let mut values = Vec::new();
    let mut i = 0usize;
    loop {
        let v = lo + i as f64 * step;
        if v > hi + 1e-9 * step {
            break;
        }
        values.push(v);
        i += 1;
    }
    Ok(values)
}

fn set_complex_part(z: &mut num_complex::Complex64, part: &str, value: f64) {
    if part == "re" {
        z.re = value;
    } else {
        z.im = value;
    }
}

/// Returns a copy of the preset with one named scalar replaced.
///
/// Complex entries are addressed as `name_re` / `name_im`. The uniaxial
/// preset additionally understands `gamma_linked`, which sets
/// `gamma_eps = v` and `gamma_mu = -v * mu1 / eps1` together (the balance
/// that keeps the spectrum conjugation-closed).
fn set_param(preset: &Preset, name: &str, value: f64) -> anyhow::Result<Preset> {
    match preset {
        Preset::Example1(p) => {
            let mut p = *p;
            match name {
                "eps1" => p.eps1 = value,
                "eps3" => p.eps3 = value,
                "mu1" => p.mu1 = value,
                "mu3" => p.mu3 = value,
                "alpha" => p.alpha = value,
                "beta" => p.beta = value,
                "gamma_eps" => p.gamma_eps = value,
                "gamma_mu" => p.gamma_mu = value,
                "gamma_linked" => {
                    p.gamma_eps = value;
                    p.gamma_mu = -value * p.mu1 / p.eps1;
                }
                _ => bail!("example1 has no parameter `{name}`"),
            }
            Ok(Preset::Example1(p))
        }
        Preset::Example2(p) => {
            let mut p = *p;
            let (field, part) = split_complex_name(name)?;
            match field {
                "a" => set_complex_part(&mut p.a, part, value),
                "b" => set_complex_part(&mut p.b, part, value),
                "c" => set_complex_part(&mut p.c, part, value),
                "g" => set_complex_part(&mut p.g, part, value),
                "h" => set_complex_part(&mut p.h, part, value),
                "u" => set_complex_part(&mut p.u, part, value),
                _ => bail!("example2 has no parameter `{name}`"),
            }
            Ok(Preset::Example2(p))
        }
        Preset::Example2Special { c, u } => {
            let mut c = *c;
            let mut u = *u;
            let (field, part) = split_complex_name(name)?;
            match field {
                "c" => set_complex_part(&mut c, part, value),
                "u" => set_complex_part(&mut u, part, value),
                _ => bail!("example2_special has no parameter `{name}`"),
            }
            Ok(Preset::Example2Special { c, u })
        }
        Preset::Example3 { f, g } => {
            let mut f = *f;
            let mut g = *g;
            let (field, part) = split_complex_name(name)?;
            match field {
                "f" => set_complex_part(&mut f, part, value),
                "g" => set_complex_part(&mut g, part, value),
                _ => bail!("example3 has no parameter `{name}`"),
            }
            Ok(Preset::Example3 { f, g })
        }
        Preset::Custom { .. } => bail!("the custom preset has no named parameters to sweep"),
    }
}

fn split_complex_name(name: &str) -> anyhow::Result<(&str, &str)> {
    if let Some(base) = name.strip_suffix("_re") {
        Ok((base, "re"))
    } else if let Some(base) = name.strip_suffix("_im") {
        Ok((base, "im"))
    } else {
        bail!("complex parameter must be addressed as `{name}_re` or `{name}_im`")
    }
}
