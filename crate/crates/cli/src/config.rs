//! Run configuration: TOML ingestion, preset expansion, and validation.
//!
//! A config file describes a curve, an optional force, and command-specific
//! settings.  The `preset` key expands to a full built-in setup; any field
//! the file (or the command line) sets explicitly overrides the preset.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use stokes_tension::curve::{build_curve, perturbed_circle, ClosedCurve, PerturbationSpec};
use stokes_tension::spectral::{PeriodicGrid, VectorGridFunction};
use stokes_tension::tension::{ForceDensity, SolveMode};

use crate::Failure;

/// Raw deserialization target; every field optional so presets and CLI
/// flags can fill the gaps.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub preset: Option<String>,
    pub n: Option<usize>,
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Vec<String>>,
    pub curve: Option<RawCurve>,
    pub force: Option<RawForce>,
    pub sweep: Option<RawSweep>,
    pub verify: Option<RawVerify>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCurve {
    pub kind: String,
    // kind = "perturbed_circle"
    pub g0: Option<f64>,
    pub modes: Option<Vec<[f64; 2]>>,
    pub epsilon: Option<f64>,
    // kind = "fourier": cosine/sine series per coordinate, index = wavenumber
    pub x_cos: Option<Vec<f64>>,
    pub x_sin: Option<Vec<f64>>,
    pub y_cos: Option<Vec<f64>>,
    pub y_sin: Option<Vec<f64>>,
    // kind = "samples": positions at equispaced parameter values
    pub x: Option<Vec<f64>>,
    pub y: Option<Vec<f64>>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawForce {
    pub kind: String,
    // kind = "frame": coefficients of cos nθ / sin nθ against the radial and
    // tangential circle directions, index = n
    pub radial_cos: Option<Vec<f64>>,
    pub radial_sin: Option<Vec<f64>>,
    pub tangential_cos: Option<Vec<f64>>,
    pub tangential_sin: Option<Vec<f64>>,
    // kind = "raw": components at the grid nodes
    pub fx: Option<Vec<f64>>,
    pub fy: Option<Vec<f64>>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSweep {
    pub epsilons: Option<Vec<f64>>,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawVerify {
    pub level: Option<String>,
}

/// Command-line overrides that beat both the file and the preset.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub n: Option<usize>,
    pub format: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct Formats {
    pub csv: bool,
    pub json: bool,
}

/// Fully resolved settings for one command invocation.
#[derive(Debug, Clone)]
pub struct Settings {
    pub n: usize,
    pub mode: SolveMode,
    pub seed: u64,
    pub out: PathBuf,
    pub formats: Formats,
    pub curve: Option<CurveSpec>,
    pub force: Option<ForceSpec>,
    pub epsilons: Option<Vec<f64>>,
    pub verify_level: VerifyLevel,
    /// Set by the circle benchmark preset: the summary additionally reports
    /// errors against the known exact tension and velocity.
    pub benchmark: bool,
}

#[derive(Debug, Clone)]
pub enum CurveSpec {
    PerturbedCircle { g0: f64, modes: Vec<[f64; 2]>, epsilon: f64 },
    Fourier { x_cos: Vec<f64>, x_sin: Vec<f64>, y_cos: Vec<f64>, y_sin: Vec<f64> },
    Samples { x: Vec<f64>, y: Vec<f64> },
}

#[derive(Debug, Clone)]
pub enum ForceSpec {
    Frame {
        radial_cos: Vec<f64>,
        radial_sin: Vec<f64>,
        tangential_cos: Vec<f64>,
        tangential_sin: Vec<f64>,
    },
    Raw { fx: Vec<f64>, fy: Vec<f64> },
}

pub fn load(path: &Path) -> Result<RawConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Config(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn preset(name: &str) -> Result<RawConfig, Failure> {
    // The three built-in setups: the circle benchmark with exactly known
    // tension, and the two eigenvalue-sweep shape families (one with a
    // vanishing second-order coefficient, one without).
    let text = match name {
        "table1" => {
            r#"
            mode = "mean_zero"
            [curve]
            kind = "perturbed_circle"
            [force]
            kind = "frame"
            radial_cos = [4.0]
            radial_sin = [0.0, 1.0]
            tangential_cos = [4.0, -1.0]
            "#
        }
        "example1" => {
            r#"
            n = 128
            [curve]
            kind = "perturbed_circle"
            modes = [[1.0, 0.0]]
            epsilon = 0.02
            [sweep]
            epsilons = [0.005, 0.01, 0.02]
            "#
        }
        "example2" => {
            r#"
            n = 128
            [curve]
            kind = "perturbed_circle"
            g0 = 0.5
            modes = [[0.0, 0.0], [0.5, 0.0]]
            epsilon = 0.02
            [sweep]
            epsilons = [0.005, 0.01, 0.02]
            "#
        }
        other => {
            return Err(Failure::Config(format!(
                "unknown preset {other:?}; available: table1, example1, example2"
            )))
        }
    };
    Ok(toml::from_str(text).expect("built-in preset parses"))
}

fn merge_curve(user: Option<RawCurve>, base: Option<RawCurve>) -> Option<RawCurve> {
    match (user, base) {
        (Some(u), Some(b)) if u.kind == b.kind => Some(RawCurve {
            kind: u.kind,
            g0: u.g0.or(b.g0),
            modes: u.modes.or(b.modes),
            epsilon: u.epsilon.or(b.epsilon),
            x_cos: u.x_cos.or(b.x_cos),
            x_sin: u.x_sin.or(b.x_sin),
            y_cos: u.y_cos.or(b.y_cos),
            y_sin: u.y_sin.or(b.y_sin),
            x: u.x.or(b.x),
            y: u.y.or(b.y),
        }),
        (Some(u), _) => Some(u),
        (None, b) => b,
    }
}

fn merge_force(user: Option<RawForce>, base: Option<RawForce>) -> Option<RawForce> {
    match (user, base) {
        (Some(u), Some(b)) if u.kind == b.kind => Some(RawForce {
            kind: u.kind,
            radial_cos: u.radial_cos.or(b.radial_cos),
            radial_sin: u.radial_sin.or(b.radial_sin),
            tangential_cos: u.tangential_cos.or(b.tangential_cos),
            tangential_sin: u.tangential_sin.or(b.tangential_sin),
            fx: u.fx.or(b.fx),
            fy: u.fy.or(b.fy),
        }),
        (Some(u), _) => Some(u),
        (None, b) => b,
    }
}

/// Applies preset defaults and CLI overrides, then validates.
pub fn resolve(user: RawConfig, overrides: &Overrides) -> Result<Settings, Failure> {
    let benchmark = user.preset.as_deref() == Some("table1");
    let base = match &user.preset {
        Some(name) => preset(name)?,
        None => RawConfig::default(),
    };
    let merged = RawConfig {
        preset: None,
        n: overrides.n.or(user.n).or(base.n),
        mode: user.mode.or(base.mode),
        seed: user.seed.or(base.seed),
        out: overrides.out.clone().or(user.out).or(base.out),
        format: overrides.format.clone().or(user.format).or(base.format),
        curve: merge_curve(user.curve, base.curve),
        force: merge_force(user.force, base.force),
        sweep: user.sweep.or(base.sweep),
        verify: user.verify.or(base.verify),
    };

    let curve = merged.curve.map(parse_curve).transpose()?;
    let n = match merged.n {
        Some(n) => {
            if n < 8 || n % 2 != 0 {
                return Err(Failure::Config(format!("n must be even and at least 8, got {n}")));
            }
            if let Some(CurveSpec::Samples { x, .. }) = &curve {
                if x.len() != n {
                    return Err(Failure::Config(format!(
                        "n = {n} conflicts with {} curve samples",
                        x.len()
                    )));
                }
            }
            n
        }
        None => match &curve {
            Some(CurveSpec::Samples { x, .. }) => x.len(),
            _ => 64,
        },
    };

    let mode = match merged.mode.as_deref() {
        None | Some("auto") => SolveMode::Auto,
        Some("plain") => SolveMode::Plain,
        Some("mean_zero") => SolveMode::MeanZero,
        Some(other) => {
            return Err(Failure::Config(format!(
                "unknown mode {other:?}; expected auto, plain, or mean_zero"
            )))
        }
    };

    let formats = match &merged.format {
        None => Formats { csv: true, json: true },
        Some(list) => {
            let mut formats = Formats { csv: false, json: false };
            for entry in list {
                match entry.as_str() {
                    "csv" => formats.csv = true,
                    "json" => formats.json = true,
                    other => {
                        return Err(Failure::Config(format!(
                            "unknown format {other:?}; expected csv or json"
                        )))
                    }
                }
            }
            formats
        }
    };

    let epsilons = merged.sweep.and_then(|s| s.epsilons);
    if let Some(eps) = &epsilons {
        if eps.iter().any(|&e| !(e > 0.0) || !e.is_finite()) {
            return Err(Failure::Config(format!(
                "sweep epsilons must be strictly positive and finite, got {eps:?}"
            )));
        }
    }

    let verify_level = match merged.verify.and_then(|v| v.level).as_deref() {
        None | Some("quick") => VerifyLevel::Quick,
        Some("full") => VerifyLevel::Full,
        Some(other) => {
            return Err(Failure::Config(format!(
                "unknown verify level {other:?}; expected quick or full"
            )))
        }
    };

    Ok(Settings {
        n,
        mode,
        seed: merged.seed.unwrap_or(12345),
        out: merged.out.unwrap_or_else(|| PathBuf::from(".")),
        formats,
        curve,
        force: merged.force.map(parse_force).transpose()?,
        epsilons,
        verify_level,
        benchmark,
    })
}

fn parse_curve(raw: RawCurve) -> Result<CurveSpec, Failure> {
    match raw.kind.as_str() {
        "perturbed_circle" => Ok(CurveSpec::PerturbedCircle {
            g0: raw.g0.unwrap_or(0.0),
            modes: raw.modes.unwrap_or_default(),
            epsilon: raw.epsilon.unwrap_or(0.0),
        }),
        "fourier" => Ok(CurveSpec::Fourier {
            x_cos: raw.x_cos.unwrap_or_default(),
            x_sin: raw.x_sin.unwrap_or_default(),
            y_cos: raw.y_cos.unwrap_or_default(),
            y_sin: raw.y_sin.unwrap_or_default(),
        }),
        "samples" => {
            let x = raw.x.ok_or_else(|| Failure::Config("samples curve needs x".into()))?;
            let y = raw.y.ok_or_else(|| Failure::Config("samples curve needs y".into()))?;
            if x.len() != y.len() {
                return Err(Failure::Config(format!(
                    "curve samples have mismatched lengths {} and {}",
                    x.len(),
                    y.len()
                )));
            }
            Ok(CurveSpec::Samples { x, y })
        }
        other => Err(Failure::Config(format!(
            "unknown curve kind {other:?}; expected perturbed_circle, fourier, or samples"
        ))),
    }
}

fn parse_force(raw: RawForce) -> Result<ForceSpec, Failure> {
    match raw.kind.as_str() {
        "frame" => Ok(ForceSpec::Frame {
            radial_cos: raw.radial_cos.unwrap_or_default(),
            radial_sin: raw.radial_sin.unwrap_or_default(),
            tangential_cos: raw.tangential_cos.unwrap_or_default(),
            tangential_sin: raw.tangential_sin.unwrap_or_default(),
        }),
        "raw" => {
            let fx = raw.fx.ok_or_else(|| Failure::Config("raw force needs fx".into()))?;
            let fy = raw.fy.ok_or_else(|| Failure::Config("raw force needs fy".into()))?;
            Ok(ForceSpec::Raw { fx, fy })
        }
        other => Err(Failure::Config(format!(
            "unknown force kind {other:?}; expected frame or raw"
        ))),
    }
}

impl CurveSpec {
    pub fn build(&self, n: usize) -> Result<ClosedCurve<f64>, Failure> {
        let grid = PeriodicGrid::new(n)?;
        match self {
            CurveSpec::PerturbedCircle { g0, modes, epsilon } => {
                let spec = PerturbationSpec::new(*g0, modes.clone(), *epsilon);
                Ok(perturbed_circle(&spec, grid)?)
            }
            CurveSpec::Fourier { x_cos, x_sin, y_cos, y_sin } => {
                let series = |cos: &[f64], sin: &[f64], t: f64| {
                    let c: f64 = cos
                        .iter()
                        .enumerate()
                        .map(|(k, &a)| a * (k as f64 * t).cos())
                        .sum();
                    let s: f64 = sin
                        .iter()
                        .enumerate()
                        .map(|(k, &b)| b * (k as f64 * t).sin())
                        .sum();
                    c + s
                };
                let position = VectorGridFunction::from_fn(grid, |t: f64| {
                    [series(x_cos, x_sin, t), series(y_cos, y_sin, t)]
                });
                Ok(build_curve(&position)?)
            }
            CurveSpec::Samples { x, y } => {
                let position = VectorGridFunction::from_components(
                    stokes_tension::spectral::GridFunction::new(grid, x.clone())?,
                    stokes_tension::spectral::GridFunction::new(grid, y.clone())?,
                )?;
                Ok(build_curve(&position)?)
            }
        }
    }

    pub fn perturbation(&self) -> Result<PerturbationSpec<f64>, Failure> {
        match self {
            CurveSpec::PerturbedCircle { g0, modes, epsilon } => {
                Ok(PerturbationSpec::new(*g0, modes.clone(), *epsilon))
            }
            _ => Err(Failure::Config(
                "sweeps need a perturbed_circle curve so the amplitude can vary".into(),
            )),
        }
    }
}

impl ForceSpec {
    pub fn density(&self, n: usize) -> Result<ForceDensity<f64>, Failure> {
        match self {
            ForceSpec::Frame { radial_cos, radial_sin, tangential_cos, tangential_sin } => {
                Ok(ForceDensity::Frame {
                    radial_cos: radial_cos.clone(),
                    radial_sin: radial_sin.clone(),
                    tangential_cos: tangential_cos.clone(),
                    tangential_sin: tangential_sin.clone(),
                })
            }
            ForceSpec::Raw { fx, fy } => {
                let grid = PeriodicGrid::new(n)?;
                let force = VectorGridFunction::from_components(
                    stokes_tension::spectral::GridFunction::new(grid, fx.clone())?,
                    stokes_tension::spectral::GridFunction::new(grid, fy.clone())?,
                )?;
                Ok(ForceDensity::Raw(force))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolve_text(text: &str) -> Result<Settings, Failure> {
        resolve(toml::from_str(text).unwrap(), &Overrides::default())
    }

    #[test]
    fn benchmark_preset_expands_to_circle_and_frame_force() {
        let settings = resolve_text(r#"preset = "table1""#).unwrap();
        assert!(settings.benchmark);
        assert_eq!(settings.n, 64);
        assert!(matches!(settings.mode, SolveMode::MeanZero));
        assert!(matches!(settings.curve, Some(CurveSpec::PerturbedCircle { .. })));
        assert!(matches!(settings.force, Some(ForceSpec::Frame { .. })));
    }

    #[test]
    fn explicit_fields_override_preset() {
        let settings = resolve_text(
            r#"
            preset = "example2"
            n = 64
            [sweep]
            epsilons = [0.1]
            "#,
        )
        .unwrap();
        assert_eq!(settings.n, 64);
        assert_eq!(settings.epsilons.unwrap(), vec![0.1]);
        // The preset's shape survives the override.
        match settings.curve.unwrap() {
            CurveSpec::PerturbedCircle { g0, .. } => assert_eq!(g0, 0.5),
            other => panic!("unexpected curve {other:?}"),
        }
    }

    #[test]
    fn odd_grid_size_is_rejected() {
        let err = resolve_text("n = 65").unwrap_err();
        assert!(matches!(err, Failure::Config(_)));
    }

    #[test]
    fn nonpositive_sweep_amplitude_is_rejected() {
        let err = resolve_text(
            r#"
            [sweep]
            epsilons = [0.01, -0.02]
            "#,
        )
        .unwrap_err();
        assert!(matches!(err, Failure::Config(_)));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let raw: Result<RawConfig, _> = toml::from_str("unknown_key = 3");
        assert!(raw.is_err());
    }

    #[test]
    fn cli_overrides_beat_config_values() {
        let overrides = Overrides {
            out: Some(PathBuf::from("elsewhere")),
            n: Some(32),
            format: Some(vec!["csv".into()]),
        };
        let raw: RawConfig = toml::from_str(r#"n = 64"#).unwrap();
        let settings = resolve(raw, &overrides).unwrap();
        assert_eq!(settings.n, 32);
        assert_eq!(settings.out, PathBuf::from("elsewhere"));
        assert!(settings.formats.csv && !settings.formats.json);
    }
}
