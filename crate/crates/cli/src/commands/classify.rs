use std::process::ExitCode;

use serde::Serialize;

use anisowave::spectral::JordanCase;
use anisowave::{example1_conditions, principal_sqrt};

use super::Pipeline;
use crate::output::{emit, render_report};
use crate::{CommonArgs, Format};

#[derive(Serialize)]
struct ClassifyReport {
    verdict: String,
    case: String,
    diagonalizable: bool,
    pseudo_residual: f64,
    eigenvalue_reality_defect: f64,
    metric_pseudo: bool,
    spectrum_conjugation_closed: bool,
    omega0: f64,
    polarizations: usize,
    lambda: Vec<[f64; 2]>,
    sqrt_lambda: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_verdict: Option<String>,
}

pub fn run(args: &CommonArgs) -> anyhow::Result<ExitCode> {
    let pipe = Pipeline::build(args)?;
    let (case, lambdas): (&str, Vec<[f64; 2]>) = match pipe.decomp.case() {
        JordanCase::Diagonalizable {
            lambda_minus,
            lambda_plus,
        } => (
            "diagonalizable",
            vec![
                [lambda_minus.re, lambda_minus.im],
                [lambda_plus.re, lambda_plus.im],
            ],
        ),
        JordanCase::Defective { lambda } => ("defective", vec![[lambda.re, lambda.im]]),
    };
    let sqrt_lambda = lambdas
        .iter()
        .map(|l| {
            let root = principal_sqrt(num_complex::Complex64::new(l[0], l[1])).sqrt_lambda;
            [root.re, root.im]
        })
        .collect();
    let closed_form_verdict = match pipe.cfg.medium.preset.as_str() {
        "example1" => Some(
            example1_conditions(&pipe.cfg.example1_params())
                .as_str()
                .to_string(),
        ),
        _ => None,
    };
    let report = ClassifyReport {
        verdict: pipe.class.verdict.as_str().to_string(),
        case: case.to_string(),
        diagonalizable: pipe.class.diagonalizable,
        pseudo_residual: pipe.class.pseudo_residual,
        eigenvalue_reality_defect: pipe.class.eigenvalue_reality_defect,
        metric_pseudo: pipe.class.metric_pseudo,
        spectrum_conjugation_closed: pipe.class.spectrum_conjugation_closed,
        omega0: pipe.scenario.k.omega0(),
        polarizations: lambdas.len(),
        lambda: lambdas,
        sqrt_lambda,
        closed_form_verdict,
    };
    let format = pipe.format_or(args.format, Format::Json);
    let text = render_report(&report, format)?;
    emit(pipe.out_path(args).as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}
