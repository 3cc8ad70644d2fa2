//! Command-line flags and the optional TOML config they override.
//!
//! Every setting is optional at both layers; a flag beats the config file,
//! which beats the built-in default.

use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "cespot",
    version,
    about = "Exact scattering for the partner potentials V± = W² ± W'",
    disable_help_flag = true,
    disable_version_flag = true
)]
pub struct Cli {
    /// Print help
    #[arg(long, global = true, action = ArgAction::Help)]
    help: Option<bool>,

    /// Print version
    #[arg(long, action = ArgAction::Version)]
    version: Option<bool>,

    /// TOML file with one table per subcommand, keys named like the flags
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Write the CSV here (plus a JSON run manifest next to it) instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate V+, V-, W (and the matched step) on an x grid
    Potential(PotentialArgs),
    /// Reflection and transmission coefficients on an ω grid
    Scatter(ScatterArgs),
    /// Closed-form quasinormal frequencies with their pole residuals
    Qnm(QnmArgs),
    /// Run the self-check suites and print a residual table
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// V+, V-, W only
    Partner,
    /// Adds V_S
    Step,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScatterKind {
    Plus,
    Minus,
    Step,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QnmKind {
    Step,
    Partner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub kind: Option<TableKind>,
    /// Coupling; negative values are allowed here (W mirrors in sign)
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub n_points: Option<usize>,
    /// Step height, default m²
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<f64>,
    /// Step width, default 1
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ScatterArgs {
    #[arg(long, value_enum)]
    pub kind: Option<ScatterKind>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<f64>,
    #[arg(long)]
    pub omega_min: Option<f64>,
    #[arg(long)]
    pub omega_max: Option<f64>,
    #[arg(long)]
    pub n_points: Option<usize>,
    /// Add numerically integrated coefficients and the gap to the step
    #[arg(long)]
    #[serde(default)]
    pub with_oracle: bool,
    /// Left end of the integration domain
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    /// Right end of the integration domain
    #[arg(long)]
    pub x_max: Option<f64>,
    /// Integration step
    #[arg(long)]
    pub step: Option<f64>,
    /// Length of the boundary fitting window
    #[arg(long)]
    pub match_window: Option<f64>,
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct QnmArgs {
    #[arg(long, value_enum)]
    pub kind: Option<QnmKind>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<f64>,
    #[arg(long)]
    pub n_max: Option<u32>,
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub level: Option<Level>,
    /// Offset added to every exact target; any nonzero value should fail
    #[arg(long, allow_hyphen_values = true)]
    pub perturb: Option<f64>,
}

/// Contents of `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub potential: PotentialArgs,
    #[serde(default)]
    pub scatter: ScatterArgs,
    #[serde(default)]
    pub qnm: QnmArgs,
    #[serde(default)]
    pub verify: VerifyArgs,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

/// Settings after merging flags, config and defaults.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PotentialSettings {
    pub kind: TableKind,
    pub m: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub v0: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterSettings {
    pub kind: ScatterKind,
    pub m: f64,
    pub omega_min: f64,
    pub omega_max: f64,
    pub n_points: usize,
    pub with_oracle: bool,
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
    pub match_window: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QnmSettings {
    pub kind: QnmKind,
    pub m: f64,
    pub n_max: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySettings {
    pub level: Level,
    pub perturb: f64,
}

impl PotentialArgs {
    pub fn resolve(self, file: PotentialArgs) -> PotentialSettings {
        let m = self.m.or(file.m).unwrap_or(1.0);
        PotentialSettings {
            kind: self.kind.or(file.kind).unwrap_or(TableKind::Partner),
            m,
            x_min: self.x_min.or(file.x_min).unwrap_or(-10.0),
            x_max: self.x_max.or(file.x_max).unwrap_or(10.0),
            n_points: self.n_points.or(file.n_points).unwrap_or(201),
            v0: self.v0.or(file.v0).unwrap_or(m * m),
            alpha: self.alpha.or(file.alpha).unwrap_or(1.0),
        }
    }
}

impl ScatterArgs {
    pub fn resolve(self, file: ScatterArgs) -> ScatterSettings {
        let m = self.m.or(file.m).unwrap_or(1.0);
        let oracle = cespot::IntegrationConfig::default();
        ScatterSettings {
            kind: self.kind.or(file.kind).unwrap_or(ScatterKind::Plus),
            m,
            omega_min: self.omega_min.or(file.omega_min).unwrap_or(1.05 * m),
            omega_max: self.omega_max.or(file.omega_max).unwrap_or(3.0 * m),
            n_points: self.n_points.or(file.n_points).unwrap_or(200),
            with_oracle: self.with_oracle || file.with_oracle,
            x_min: self.x_min.or(file.x_min).unwrap_or(oracle.x_min),
            x_max: self.x_max.or(file.x_max).unwrap_or(oracle.x_max),
            step: self.step.or(file.step).unwrap_or(oracle.step),
            match_window: self
                .match_window
                .or(file.match_window)
                .unwrap_or(oracle.match_window),
        }
    }
}

impl QnmArgs {
    pub fn resolve(self, file: QnmArgs) -> QnmSettings {
        QnmSettings {
            kind: self.kind.or(file.kind).unwrap_or(QnmKind::Partner),
            m: self.m.or(file.m).unwrap_or(1.0),
            n_max: self.n_max.or(file.n_max).unwrap_or(10),
        }
    }
}

impl VerifyArgs {
    pub fn resolve(self, file: VerifyArgs) -> VerifySettings {
        VerifySettings {
            level: self.level.or(file.level).unwrap_or(Level::Quick),
            perturb: self.perturb.or(file.perturb).unwrap_or(0.0),
        }
    }
}
