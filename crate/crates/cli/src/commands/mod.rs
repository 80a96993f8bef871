pub mod classify;
pub mod modes;
pub mod propagate;
pub mod sweep;
pub mod verify;

use anisowave::hermiticity::HermiticityClass;
use anisowave::scenarios::ScenarioConfig;
use anisowave::spectral::{jordan_decompose_default, SpectralDecomposition};
use anisowave::{build_wave_operator, Error, MaterialPair};

use crate::config::RunConfig;
use crate::{CommonArgs, Format, EXIT_CONFIG, EXIT_NUMERIC};

/// Everything the table-producing subcommands need.
pub struct Pipeline {
    pub cfg: RunConfig,
    pub scenario: ScenarioConfig,
    pub medium: MaterialPair,
    pub decomp: SpectralDecomposition,
    pub class: HermiticityClass,
}

impl Pipeline {
    pub fn build(args: &CommonArgs) -> anyhow::Result<Self> {
        let cfg = RunConfig::load(&args.config)?;
        let scenario = cfg.scenario()?;
        let medium = scenario.medium()?;
        let op = build_wave_operator(&medium, &scenario.k);
        let decomp = jordan_decompose_default(&op)?;
        let class = anisowave::classify(&decomp, &op);
        Ok(Self {
            cfg,
            scenario,
            medium,
            decomp,
            class,
        })
    }

    pub fn format_or(&self, requested: Option<Format>, default: Format) -> Format {
        requested.or_else(|| self.config_format()).unwrap_or(default)
    }

    fn config_format(&self) -> Option<Format> {
        match self
            .cfg
            .output
            .as_ref()
            .and_then(|o| o.format.as_deref())
        {
            Some("csv") => Some(Format::Csv),
            Some("json") => Some(Format::Json),
            _ => None,
        }
    }

    pub fn out_path(&self, args: &CommonArgs) -> Option<std::path::PathBuf> {
        args.out.clone().or_else(|| {
            self.cfg
                .output
                .as_ref()
                .and_then(|o| o.path.clone())
                .map(std::path::PathBuf::from)
        })
    }
}

/// Numeric preconditions (singular tensors, degenerate denominators,
/// failed decompositions) exit 3; everything else is a config error.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::SingularMatrix { .. })
        | Some(Error::DegenerateDenominator)
        | Some(Error::DecompositionFailure { .. }) => EXIT_NUMERIC,
        _ => EXIT_CONFIG,
    }
}
