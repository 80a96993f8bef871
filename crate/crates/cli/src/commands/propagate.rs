use std::process::ExitCode;

use anyhow::bail;

use anisowave::evolve;

use super::Pipeline;
use crate::output::{emit, fmt_f64, CsvTable};
use crate::{Format, PropagateArgs};

const COLUMNS: [&str; 13] = [
    "t", "E1_re", "E1_im", "E2_re", "E2_im", "E3_re", "E3_im", "B1_re", "B1_im", "B2_re",
    "B2_im", "B3_re", "B3_im",
];

pub fn run(args: &PropagateArgs) -> anyhow::Result<ExitCode> {
    let pipe = Pipeline::build(&args.common)?;
    let time = pipe.cfg.time.clone();
    let t_max = args
        .t_max
        .or_else(|| time.as_ref().map(|t| t.t_max))
        .ok_or_else(|| anyhow::anyhow!("propagate needs --t-max or a [time] section"))?;
    let dt = args
        .dt
        .or_else(|| time.as_ref().map(|t| t.dt))
        .ok_or_else(|| anyhow::anyhow!("propagate needs --dt or a [time] section"))?;
    if !dt.is_finite() || dt <= 0.0 || !t_max.is_finite() || t_max < 0.0 {
        bail!("time grid requires dt > 0 and t_max >= 0");
    }

    let initial = pipe.scenario.initial_state();
    let n_steps = (t_max / dt).round() as usize;

    let mut table = CsvTable::new(COLUMNS.to_vec());
    write_common_meta(&mut table, &pipe);
    table.meta("t_max", fmt_f64(t_max));
    table.meta("dt", fmt_f64(dt));

    for i in 0..=n_steps {
        let t = i as f64 * dt;
        let state = evolve(&initial, &pipe.decomp, &pipe.medium, t);
        let mut row = Vec::with_capacity(13);
        row.push(fmt_f64(t));
        for z in state.e.iter().chain(state.b.iter()) {
            row.push(fmt_f64(z.re));
            row.push(fmt_f64(z.im));
        }
        table.row(row);
    }

    let format = pipe.format_or(args.common.format, Format::Csv);
    emit(pipe.out_path(&args.common).as_deref(), &table.render(format))?;
    Ok(ExitCode::SUCCESS)
}

pub(super) fn write_common_meta(table: &mut CsvTable, pipe: &Pipeline) {
    table.meta("preset", &pipe.cfg.medium.preset);
    let params = pipe.cfg.parameter_summary();
    if !params.is_empty() {
        table.meta("parameters", params);
    }
    let [k1, k2, k3] = pipe.scenario.k.components();
    table.meta("k", format!("{} {} {}", fmt_f64(k1), fmt_f64(k2), fmt_f64(k3)));
    table.meta("c", fmt_f64(pipe.scenario.k.speed()));
    table.meta("omega0", fmt_f64(pipe.scenario.k.omega0()));
    table.meta(
        "case",
        if pipe.decomp.is_defective() {
            "defective"
        } else {
            "diagonalizable"
        },
    );
    table.meta("verdict", pipe.class.verdict.as_str());
}
