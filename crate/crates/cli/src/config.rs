//! TOML run configuration.
//!
//! Complex numbers are always two-element `[re, im]` arrays; custom tensors
//! are 3x3 arrays of those.

use anyhow::{bail, Context};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use anisowave::hermiticity::Example1Params;
use anisowave::scenarios::{Example2Params, InitialCondition, Preset, ScenarioConfig};
use anisowave::{ComplexMatrix3, WaveVector};

pub type CNum = [f64; 2];

fn to_c(v: CNum) -> Complex64 {
    Complex64::new(v[0], v[1])
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub medium: MediumConfig,
    pub wavevector: WaveConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<InitialConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time: Option<TimeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MediumConfig {
    pub preset: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<MediumParams>,
    /// Explicit relative permittivity for the custom preset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<[[CNum; 3]; 3]>,
    /// Explicit relative permeability for the custom preset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<[[CNum; 3]; 3]>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MediumParams {
    // example1 (real scalars)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps3: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu3: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    // example2 / example2_special / example3 (complex scalars)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<CNum>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WaveConfig {
    pub k: [f64; 3],
    #[serde(default = "default_speed")]
    pub c: f64,
}

fn default_speed() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InitialConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitude: Option<CNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e0: Option<[CNum; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b0: Option<[CNum; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TimeConfig {
    pub t_max: f64,
    pub dt: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
}

impl RunConfig {
    pub fn load(path: &std::path::Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let cfg: RunConfig = toml::from_str(&text).context("cannot parse config")?;
        Ok(cfg)
    }

    pub fn wavevector(&self) -> anyhow::Result<WaveVector> {
        let [k1, k2, k3] = self.wavevector.k;
        Ok(WaveVector::new(k1, k2, k3, self.wavevector.c)?)
    }

    fn params(&self) -> MediumParams {
        self.medium.parameters.clone().unwrap_or_default()
    }

    pub fn example1_params(&self) -> Example1Params {
        let p = self.params();
        Example1Params {
            eps1: p.eps1.unwrap_or(1.0),
            eps3: p.eps3.unwrap_or(1.0),
            mu1: p.mu1.unwrap_or(1.0),
            mu3: p.mu3.unwrap_or(1.0),
            gamma_eps: p.gamma_eps.unwrap_or(0.0),
            gamma_mu: p.gamma_mu.unwrap_or(0.0),
            alpha: p.alpha.unwrap_or(0.0),
            beta: p.beta.unwrap_or(0.0),
        }
    }

    pub fn preset(&self) -> anyhow::Result<Preset> {
        let p = self.params();
        let cnum = |v: Option<CNum>, name: &str| -> anyhow::Result<Complex64> {
            v.map(to_c)
                .ok_or_else(|| anyhow::anyhow!("preset parameter `{name}` is required"))
        };
        match self.medium.preset.as_str() {
            "example1" => Ok(Preset::Example1(self.example1_params())),
            "example2" => Ok(Preset::Example2(Example2Params {
                a: cnum(p.a, "a")?,
                b: cnum(p.b, "b")?,
                c: cnum(p.c, "c")?,
                g: cnum(p.g, "g")?,
                h: cnum(p.h, "h")?,
                u: cnum(p.u, "u")?,
            })),
            "example2_special" => Ok(Preset::Example2Special {
                c: cnum(p.c, "c")?,
                u: cnum(p.u, "u")?,
            }),
            "example3" => Ok(Preset::Example3 {
                f: cnum(p.f, "f")?,
                g: cnum(p.g, "g")?,
            }),
            "custom" => {
                let eps = self
                    .medium
                    .eps
                    .ok_or_else(|| anyhow::anyhow!("custom preset requires medium.eps"))?;
                let mu = self
                    .medium
                    .mu
                    .ok_or_else(|| anyhow::anyhow!("custom preset requires medium.mu"))?;
                Ok(Preset::Custom {
                    eps: tensor_from(eps),
                    mu: tensor_from(mu),
                })
            }
            other => bail!("unknown preset `{other}`"),
        }
    }

    pub fn initial_condition(&self) -> anyhow::Result<InitialCondition> {
        let init = self.initial.clone().unwrap_or(InitialConfig {
            amplitude: None,
            angle: None,
            e0: None,
            b0: None,
        });
        if let (Some(e0), b0) = (init.e0, init.b0) {
            let b0 = b0.unwrap_or([[0.0, 0.0]; 3]);
            return Ok(InitialCondition::Explicit {
                e0: [to_c(e0[0]), to_c(e0[1]), to_c(e0[2])],
                b0: [to_c(b0[0]), to_c(b0[1]), to_c(b0[2])],
            });
        }
        if init.b0.is_some() {
            bail!("initial.b0 requires initial.e0");
        }
        let amplitude = init.amplitude.map(to_c).unwrap_or(Complex64::new(1.0, 0.0));
        // The defective preset is exercised with its counter-rotating
        // circular amplitude unless an angle is requested explicitly.
        if self.medium.preset == "example3" && init.angle.is_none() {
            return Ok(InitialCondition::Circular { amplitude });
        }
        Ok(InitialCondition::Polarized {
            amplitude,
            angle: init.angle.unwrap_or(0.0),
        })
    }

    pub fn scenario(&self) -> anyhow::Result<ScenarioConfig> {
        let preset = self.preset()?;
        let k = self.wavevector()?;
        let initial = self.initial_condition()?;
        Ok(ScenarioConfig::new(preset, k, initial)?)
    }

    pub fn parameter_summary(&self) -> String {
        match toml::to_string(&self.params()) {
            Ok(s) => s
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" "),
            Err(_) => String::new(),
        }
    }
}

fn tensor_from(rows: [[CNum; 3]; 3]) -> ComplexMatrix3 {
    let conv = |r: [CNum; 3]| [to_c(r[0]), to_c(r[1]), to_c(r[2])];
    ComplexMatrix3::from_rows([conv(rows[0]), conv(rows[1]), conv(rows[2])])
}
