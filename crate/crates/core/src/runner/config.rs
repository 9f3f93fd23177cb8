use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fermion::{Mapping, RemovedQubit, Sector, SectorLayout};
use crate::hamiltonian::{Schedule, ScheduleShape, SyntheticModel};
use crate::propagate::{PropagationPlan, Propagator};

/// Where the three Hamiltonians come from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Synthetic(SyntheticModel),
    /// Three integral files compiled with the configured layout.
    Integrals {
        left: PathBuf,
        middle: PathBuf,
        right: PathBuf,
    },
    /// Three Pauli-sum files, already on the final register.
    Pauli {
        left: PathBuf,
        middle: PathBuf,
        right: PathBuf,
    },
    /// Three random Hermitian sums drawn from the run seed.
    Random {
        qubits: usize,
        terms: usize,
        #[serde(default = "unit")]
        scale: f64,
    },
}

fn unit() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutConfig {
    pub electron_modes: usize,
    pub nuclear_modes: usize,
    #[serde(default = "jordan_wigner")]
    pub electron_mapping: Mapping,
    #[serde(default = "jordan_wigner")]
    pub nuclear_mapping: Mapping,
    #[serde(default)]
    pub electron_removed: Vec<RemovedQubit>,
    #[serde(default)]
    pub nuclear_removed: Vec<RemovedQubit>,
}

fn jordan_wigner() -> Mapping {
    Mapping::JordanWigner
}

impl LayoutConfig {
    pub fn build(&self) -> Result<SectorLayout> {
        let layout = SectorLayout::new(self.electron_modes, self.nuclear_modes)
            .map_err(|e| Error::Config(e.to_string()))?
            .with_mapping(Sector::Electron, self.electron_mapping)
            .with_mapping(Sector::Nuclear, self.nuclear_mapping);
        let layout = if self.electron_removed.is_empty() {
            layout
        } else {
            layout.with_tapering(Sector::Electron, self.electron_removed.clone())?
        };
        if self.nuclear_removed.is_empty() {
            Ok(layout)
        } else {
            layout.with_tapering(Sector::Nuclear, self.nuclear_removed.clone())
        }
    }

    fn describe(layout: &SectorLayout) -> Self {
        let e = layout.spec(Sector::Electron);
        let n = layout.spec(Sector::Nuclear);
        LayoutConfig {
            electron_modes: e.modes,
            nuclear_modes: n.modes,
            electron_mapping: e.mapping,
            nuclear_mapping: n.mapping,
            electron_removed: e.removed.clone(),
            nuclear_removed: n.removed.clone(),
        }
    }
}

/// Particle numbers selecting the sector in which ground states are sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Particles {
    pub electrons: usize,
    pub nuclei: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleConfig {
    pub t_final: f64,
    #[serde(default = "pairwise_linear")]
    pub shape: ScheduleShape,
}

fn pairwise_linear() -> ScheduleShape {
    ScheduleShape::PairwiseLinear
}

impl ScheduleConfig {
    pub fn build(&self) -> Result<Schedule> {
        Schedule::new(self.t_final, self.shape).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanConfig {
    pub dt: f64,
    /// Optional; when given it must satisfy `dt * steps = t_final`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(default = "trotter1")]
    pub propagator: Propagator,
    #[serde(default = "one")]
    pub stride: usize,
}

fn trotter1() -> Propagator {
    Propagator::Trotter1
}

fn one() -> usize {
    1
}

impl PlanConfig {
    pub fn build(&self, schedule: &Schedule) -> Result<PropagationPlan> {
        match self.steps {
            Some(n) => {
                let plan = PropagationPlan::new(self.dt, n, self.propagator, self.stride)?;
                plan.check(schedule)?;
                Ok(plan)
            }
            None => PropagationPlan::for_schedule(schedule, self.dt, self.propagator, self.stride),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceConfig {
    #[serde(default = "yes")]
    pub enabled: bool,
    #[serde(default = "rk4")]
    pub propagator: Propagator,
    pub dt: f64,
    /// Defaults to the stride that lands on the main run's record times when possible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stride: Option<usize>,
}

fn yes() -> bool {
    true
}

fn rk4() -> Propagator {
    Propagator::Rk4
}

impl ReferenceConfig {
    pub fn build(&self, schedule: &Schedule, main: &PropagationPlan) -> Result<PropagationPlan> {
        let stride = match self.stride {
            Some(s) => s,
            None => {
                let ratio = main.stride() as f64 * main.dt() / self.dt;
                if ratio >= 1.0 && (ratio - ratio.round()).abs() < 1e-9 {
                    ratio.round() as usize
                } else {
                    1
                }
            }
        };
        PropagationPlan::for_schedule(schedule, self.dt, self.propagator, stride)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservablesConfig {
    /// Electron modes whose occupations get a CSV column; defaults to all.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tracked_modes: Option<Vec<usize>>,
    /// Nuclear modes of the L, M and R sites.
    #[serde(default = "default_sites")]
    pub sites: [usize; 3],
}

fn default_sites() -> [usize; 3] {
    [0, 1, 2]
}

impl Default for ObservablesConfig {
    fn default() -> Self {
        ObservablesConfig {
            tracked_modes: None,
            sites: default_sites(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<PathBuf>,
    /// Directory for ground-state files.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<PathBuf>,
}

/// A complete run description, read from one TOML file.
///
/// Relative paths are resolved against the directory of the file they appear in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub seed: u64,
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<LayoutConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particles: Option<Particles>,
    pub schedule: ScheduleConfig,
    pub propagation: PlanConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceConfig>,
    #[serde(default)]
    pub observables: ObservablesConfig,
    #[serde(default)]
    pub output: OutputConfig,
    /// Written into metadata sidecars; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run_info: Option<toml::Table>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let line = e
                .span()
                .map(|s| text[..s.start.min(text.len())].matches('\n').count() + 1)
                .unwrap_or(0);
            Error::parse(line, e.message().to_string())
        })
    }

    /// Read a config and make every relative path absolute with respect to its directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = RunConfig::parse(&text)?;
        let base = path
            .parent()
            .map(|p| if p.as_os_str().is_empty() { Path::new(".") } else { p })
            .unwrap_or(Path::new("."));
        let base = std::path::absolute(base)?;
        cfg.resolve_paths(&base);
        Ok(cfg)
    }

    pub fn resolve_paths(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        match &mut self.source {
            Source::Integrals { left, middle, right } | Source::Pauli { left, middle, right } => {
                fix(left);
                fix(middle);
                fix(right);
            }
            Source::Synthetic(_) | Source::Random { .. } => {}
        }
        let o = &mut self.output;
        for p in [
            &mut o.csv,
            &mut o.metadata,
            &mut o.reference_csv,
            &mut o.sweep,
            &mut o.states,
        ]
        .into_iter()
        .flatten()
        {
            fix(p);
        }
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(format!("cannot serialize config: {e}")))
    }

    /// The register layout: explicit, or implied by the source.
    pub fn resolved_layout(&self) -> Result<SectorLayout> {
        if let Some(l) = &self.layout {
            return l.build();
        }
        match &self.source {
            Source::Synthetic(m) => Ok(m.layout()),
            Source::Random { qubits, .. } if *qubits >= 2 => {
                SectorLayout::new(1, qubits - 1).map_err(|e| Error::Config(e.to_string()))
            }
            _ => Err(Error::Config("a [layout] section is required for this source".into())),
        }
    }

    /// Fill in every default so the config fully describes the run.
    pub fn resolved(&self) -> Result<RunConfig> {
        let mut out = self.clone();
        out.run_info = None;
        out.layout = Some(LayoutConfig::describe(&self.resolved_layout()?));
        if out.particles.is_none() {
            if let Source::Synthetic(m) = &self.source {
                let (electrons, nuclei) = m.particle_numbers();
                out.particles = Some(Particles { electrons, nuclei });
            }
        }
        if out.observables.tracked_modes.is_none() {
            let modes = out.layout.as_ref().map_or(0, |l| l.electron_modes);
            out.observables.tracked_modes = Some((0..modes).collect());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SLOW: &str = r#"
seed = 3

[source]
kind = "synthetic"
coupling = 0.004

[schedule]
t_final = 4000.0

[propagation]
dt = 1.0
stride = 10

[reference]
dt = 0.1

[output]
csv = "out/slow.csv"
"#;

    #[test]
    fn parses_synthetic_with_defaults() {
        let cfg = RunConfig::parse(SLOW).unwrap();
        match &cfg.source {
            Source::Synthetic(m) => {
                assert_eq!(m.coupling, 0.004);
                assert_eq!(m.detuning, SyntheticModel::default().detuning);
            }
            other => panic!("unexpected source {other:?}"),
        }
        assert_eq!(cfg.propagation.propagator, Propagator::Trotter1);
        assert_eq!(cfg.reference.as_ref().unwrap().propagator, Propagator::Rk4);
        let resolved = cfg.resolved().unwrap();
        assert_eq!(resolved.layout.as_ref().unwrap().electron_modes, 4);
        assert_eq!(
            resolved.particles,
            Some(Particles {
                electrons: 2,
                nuclei: 1
            })
        );
        assert_eq!(resolved.observables.tracked_modes.as_deref(), Some(&[0, 1, 2, 3][..]));
    }

    #[test]
    fn resolved_config_round_trips() {
        let cfg = RunConfig::parse(SLOW).unwrap().resolved().unwrap();
        let again = RunConfig::parse(&cfg.to_toml().unwrap()).unwrap();
        assert_eq!(again, cfg);
    }

    #[test]
    fn unknown_keys_are_parse_errors_with_lines() {
        let text = SLOW.replace("stride = 10", "stride = 10\nbogus = 1");
        match RunConfig::parse(&text) {
            Err(Error::Parse { line, .. }) => assert!(line >= 14, "line {line}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_steps_are_config_errors() {
        let text = SLOW.replace("stride = 10", "stride = 10\nsteps = 3999");
        let cfg = RunConfig::parse(&text).unwrap();
        let schedule = cfg.schedule.build().unwrap();
        assert!(matches!(cfg.propagation.build(&schedule), Err(Error::Config(_))));
    }

    #[test]
    fn relative_paths_resolve_against_base() {
        let mut cfg = RunConfig::parse(SLOW).unwrap();
        cfg.resolve_paths(Path::new("/data/runs"));
        assert_eq!(cfg.output.csv.as_deref(), Some(Path::new("/data/runs/out/slow.csv")));
    }
}
