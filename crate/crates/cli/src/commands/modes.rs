use std::process::ExitCode;

use anisowave::time_harmonic_modes;

use super::propagate::write_common_meta;
use super::Pipeline;
use crate::output::{emit, fmt_f64, CsvTable};
use crate::{CommonArgs, Format};

const COLUMNS: [&str; 13] = [
    "index",
    "sense",
    "lambda_re",
    "lambda_im",
    "sqrt_lambda_re",
    "sqrt_lambda_im",
    "growth_rate",
    "pol1_re",
    "pol1_im",
    "pol2_re",
    "pol2_im",
    "pol3_re",
    "pol3_im",
];

pub fn run(args: &CommonArgs) -> anyhow::Result<ExitCode> {
    let pipe = Pipeline::build(args)?;
    let modes = time_harmonic_modes(&pipe.decomp, &pipe.scenario.k);

    let mut table = CsvTable::new(COLUMNS.to_vec());
    write_common_meta(&mut table, &pipe);
    table.meta("modes", modes.len());

    for (i, mode) in modes.iter().enumerate() {
        let mut row = vec![
            i.to_string(),
            mode.sense.as_str().to_string(),
            fmt_f64(mode.lambda.re),
            fmt_f64(mode.lambda.im),
            fmt_f64(mode.sqrt_lambda.re),
            fmt_f64(mode.sqrt_lambda.im),
            fmt_f64(mode.growth_rate),
        ];
        for z in &mode.polarization {
            row.push(fmt_f64(z.re));
            row.push(fmt_f64(z.im));
        }
        table.row(row);
    }

    let format = pipe.format_or(args.format, Format::Csv);
    emit(pipe.out_path(args).as_deref(), &table.render(format))?;
    Ok(ExitCode::SUCCESS)
}
