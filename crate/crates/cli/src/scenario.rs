//! Scenario files: beam, solution family, radial grid and output settings.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use vortspin::bilinear::VelocityDefinition;
use vortspin::{Beam, Complex, Solution, WaveField};

use crate::error::{CliError, CliResult};

/// Electron rest energy, the default display mass.
pub const ELECTRON_KEV: f64 = 510.998_95;
/// hbar c in keV pm.
pub const HBAR_C_KEV_PM: f64 = 197.326_980_4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub beam: BeamInput,
    pub solution: SolutionInput,
    pub radii: RadialGrid,
    pub definitions: Vec<DefinitionName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub windows: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fd_step: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass_kev: Option<f64>,
    pub output: OutputSpec,
}

/// Either `{kappa, k_z, mass}` or `{k, theta, mass}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BeamInput {
    Components { kappa: f64, k_z: f64, mass: f64 },
    Pitch { k: f64, theta: f64, mass: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum SolutionInput {
    Helicity { j_z: f64, lambda: f64, a0: Complex },
    Bb { j_z: f64, a: Complex, b: Complex, a0: Complex },
    Barnett { ell: i32, a: Complex, b: Complex, a0: Complex },
    BarnettSmallRho { ell: i32, a: Complex, b: Complex, a0: Complex },
    PlaneWave,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadialGrid {
    pub min: f64,
    pub max: f64,
    pub per_decade: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefinitionName {
    Dirac,
    Canonical,
    Belinfante,
}

impl DefinitionName {
    pub fn definition(self) -> VelocityDefinition {
        match self {
            DefinitionName::Dirac => VelocityDefinition::DiracCurrent,
            DefinitionName::Canonical => VelocityDefinition::Canonical,
            DefinitionName::Belinfante => VelocityDefinition::Belinfante,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationInput {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

/// Minimum grid density accepted in a scenario.
pub const MIN_PER_DECADE: usize = 12;

impl Scenario {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| CliError::config(format!("scenario: {e}")))?;
        s.check()?;
        Ok(s)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn check(&self) -> CliResult<()> {
        let g = &self.radii;
        if !(g.min > 0.0 && g.max > g.min && g.max.is_finite()) {
            return Err(CliError::config(format!("radii: need 0 < min < max, got [{}, {}]", g.min, g.max)));
        }
        if g.per_decade < MIN_PER_DECADE {
            return Err(CliError::config(format!(
                "radii.per_decade must be >= {MIN_PER_DECADE}, got {}",
                g.per_decade
            )));
        }
        if self.definitions.is_empty() {
            return Err(CliError::config("definitions: list at least one of dirac, canonical, belinfante"));
        }
        if let Some(step) = self.fd_step {
            if !(step > 0.0) {
                return Err(CliError::config(format!("fd_step must be > 0, got {step}")));
            }
        }
        if let Some(ws) = &self.windows {
            if ws.iter().any(|w| !(w[0] > 0.0 && w[1] > w[0])) {
                return Err(CliError::config("windows: each window needs 0 < lo < hi"));
            }
        }
        if let Some(v) = self.validation {
            if v.points == 0 {
                return Err(CliError::config("validation.points must be >= 1"));
            }
        }
        if let Some(m) = self.mass_kev {
            if !(m > 0.0) {
                return Err(CliError::config(format!("mass_kev must be > 0, got {m}")));
            }
        }
        self.beam()?;
        self.solution()?;
        Ok(())
    }

    pub fn beam(&self) -> CliResult<Beam> {
        let b = match self.beam {
            BeamInput::Components { kappa, k_z, mass } => Beam::new(kappa, k_z, mass),
            BeamInput::Pitch { k, theta, mass } => Beam::from_momentum_and_pitch(k, theta, mass),
        };
        b.map_err(|e| CliError::config(format!("beam: {e}")))
    }

    pub fn solution(&self) -> CliResult<Solution> {
        let s = match self.solution {
            SolutionInput::Helicity { j_z, lambda, a0 } => Solution::helicity(j_z, lambda, a0),
            SolutionInput::Bb { j_z, a, b, a0 } => Solution::bialynicki_birula(j_z, a, b, a0),
            SolutionInput::Barnett { ell, a, b, a0 } => Solution::barnett(ell, a, b, a0),
            SolutionInput::BarnettSmallRho { ell, a, b, a0 } => Solution::barnett_small_rho(ell, a, b, a0),
            SolutionInput::PlaneWave => Ok(Solution::plane_wave()),
        };
        s.map_err(|e| CliError::config(format!("solution: {e}")))
    }

    pub fn field(&self) -> CliResult<WaveField> {
        WaveField::new(self.solution()?, self.beam()?).map_err(|e| CliError::config(format!("solution: {e}")))
    }

    pub fn definitions(&self) -> Vec<VelocityDefinition> {
        // fixed order, duplicates dropped
        VelocityDefinition::ALL
            .into_iter()
            .filter(|d| self.definitions.iter().any(|n| n.definition() == *d))
            .collect()
    }

    pub fn phi(&self) -> f64 {
        self.phi.unwrap_or(0.0)
    }

    pub fn mass_kev(&self) -> f64 {
        self.mass_kev.unwrap_or(ELECTRON_KEV)
    }

    /// Energy in keV for a value in natural units.
    pub fn to_kev(&self, energy: f64, mass: f64) -> f64 {
        energy / mass * self.mass_kev()
    }

    /// Length in picometres for a value in natural units (inverse mass).
    pub fn to_pm(&self, length: f64, mass: f64) -> f64 {
        length * mass * HBAR_C_KEV_PM / self.mass_kev()
    }
}
