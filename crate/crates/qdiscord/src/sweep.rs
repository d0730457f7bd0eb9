//! Parameter sweeps. Grid points are evaluated in parallel and collected in
//! grid order, so output does not depend on scheduling.

use std::f64::consts::PI;
use std::path::PathBuf;

use qdiscord_core::discord::{discord_min, discord_quasi_closed, werner_discord_closed, zurek_discord};
use qdiscord_core::entanglement::entanglement_closed;
use qdiscord_core::werner::werner_density;
use qdiscord_core::{DiscordEvaluator, MeasurementBasis, Mixing, StateFamily, WernerSpec, MIN_MEAN_PHOTON};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::format::{Cell, Format, Record};

pub const DEFAULT_A_STEPS: usize = 101;
pub const DEFAULT_THETA_STEPS: usize = 181;
pub const DEFAULT_ZUREK_THETA_STEPS: usize = 361;
pub const DEFAULT_MEAN_PHOTONS: [f64; 8] = [0.01, 0.02, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0];

/// `n` evenly spaced points on `[lo, hi]`, both ends included exactly.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub a_grid: Vec<f64>,
    pub theta_grid: Vec<f64>,
    pub mean_photon_list: Vec<f64>,
    pub family: StateFamily,
    /// `None` writes to stdout.
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            a_grid: linspace(0.0, 1.0, DEFAULT_A_STEPS),
            theta_grid: linspace(0.0, PI, DEFAULT_THETA_STEPS),
            mean_photon_list: DEFAULT_MEAN_PHOTONS.to_vec(),
            family: StateFamily::PsiPlus,
            output_path: None,
            format: Format::Csv,
        }
    }
}

fn ascending(name: &str, v: &[f64]) -> Result<(), CliError> {
    if v.is_empty() {
        return Err(CliError::Invalid(format!("{name} is empty")));
    }
    if let Some(bad) = v.iter().find(|x| !x.is_finite()) {
        return Err(CliError::Invalid(format!("{name} contains {bad}")));
    }
    if v.windows(2).any(|w| w[1] < w[0]) {
        return Err(CliError::Invalid(format!("{name} is not sorted ascending")));
    }
    Ok(())
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        ascending("a grid", &self.a_grid)?;
        ascending("theta grid", &self.theta_grid)?;
        ascending("mean photon list", &self.mean_photon_list)?;
        if self.a_grid[0] < 0.0 || *self.a_grid.last().unwrap() > 1.0 {
            return Err(CliError::Invalid("mixing weight a must lie in [0, 1]".into()));
        }
        if self.mean_photon_list[0] < MIN_MEAN_PHOTON {
            return Err(CliError::Invalid(format!(
                "mean photon number {} is below {MIN_MEAN_PHOTON}",
                self.mean_photon_list[0]
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZurekRow {
    pub a: f64,
    pub theta: f64,
    #[serde(rename = "D")]
    pub d: f64,
}

impl Record for ZurekRow {
    const COLUMNS: &'static [&'static str] = &["a", "theta", "D"];

    fn cells(&self) -> Vec<Cell> {
        vec![Cell::Num(self.a), Cell::Num(self.theta), Cell::Num(self.d)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuasiSurfaceRow {
    pub mean_photon: f64,
    pub a: f64,
    pub theta: f64,
    #[serde(rename = "D_closed")]
    pub d_closed: f64,
    #[serde(rename = "D_pipeline")]
    pub d_pipeline: f64,
    pub abs_diff: f64,
    /// Whether `D(theta)` is larger than `D(0)` at the same `(mean_photon, a)`,
    /// i.e. whether the computational basis does better than this one.
    pub exceeds_theta0: bool,
}

impl Record for QuasiSurfaceRow {
    const COLUMNS: &'static [&'static str] = &[
        "mean_photon",
        "a",
        "theta",
        "D_closed",
        "D_pipeline",
        "abs_diff",
        "exceeds_theta0",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Num(self.mean_photon),
            Cell::Num(self.a),
            Cell::Num(self.theta),
            Cell::Num(self.d_closed),
            Cell::Num(self.d_pipeline),
            Cell::Num(self.abs_diff),
            Cell::Bool(self.exceeds_theta0),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WernerRow {
    pub a: f64,
    #[serde(rename = "E")]
    pub e: f64,
    pub delta: f64,
    #[serde(rename = "delta_minus_E")]
    pub delta_minus_e: f64,
}

impl Record for WernerRow {
    const COLUMNS: &'static [&'static str] = &["a", "E", "delta", "delta_minus_E"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Num(self.a),
            Cell::Num(self.e),
            Cell::Num(self.delta),
            Cell::Num(self.delta_minus_e),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuasiCurveRow {
    pub mean_photon: f64,
    pub a: f64,
    #[serde(rename = "E")]
    pub e: f64,
    pub delta: f64,
    #[serde(rename = "delta_minus_E")]
    pub delta_minus_e: f64,
}

impl Record for QuasiCurveRow {
    const COLUMNS: &'static [&'static str] = &["mean_photon", "a", "E", "delta", "delta_minus_E"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Num(self.mean_photon),
            Cell::Num(self.a),
            Cell::Num(self.e),
            Cell::Num(self.delta),
            Cell::Num(self.delta_minus_e),
        ]
    }
}

fn mixing(a: f64) -> Result<Mixing, CliError> {
    Ok(Mixing::new(a)?)
}

/// Discord of the Zurek state over `a_grid x theta_grid`.
pub fn zurek_surface(cfg: &SweepConfig) -> Result<Vec<ZurekRow>, CliError> {
    cfg.validate()?;
    let rows = cfg
        .a_grid
        .par_iter()
        .map(|&a| {
            let m = mixing(a)?;
            Ok(cfg
                .theta_grid
                .iter()
                .map(|&theta| ZurekRow {
                    a,
                    theta,
                    d: zurek_discord(m, theta),
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Quasi-Werner discord over `mean_photon x a x theta`, by closed form and by
/// the density-matrix pipeline.
pub fn quasi_surface(cfg: &SweepConfig) -> Result<Vec<QuasiSurfaceRow>, CliError> {
    cfg.validate()?;
    if cfg.family.is_maximally_entangled() {
        return Err(CliError::Invalid(format!(
            "quasi-surface needs psi+ or phi+, got {}",
            cfg.family
        )));
    }
    let points: Vec<(f64, f64)> = cfg
        .mean_photon_list
        .iter()
        .flat_map(|&m| cfg.a_grid.iter().map(move |&a| (m, a)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(mean_photon, a)| {
            let spec = WernerSpec::new(cfg.family, a, mean_photon)?;
            let eval = DiscordEvaluator::new(&werner_density(&spec))?;
            let at_zero = discord_quasi_closed(spec.mixing, &spec.params, 0.0);
            Ok(cfg
                .theta_grid
                .iter()
                .map(|&theta| {
                    let d_closed = discord_quasi_closed(spec.mixing, &spec.params, theta);
                    let d_pipeline = eval.at(&MeasurementBasis::new(theta, 0.0)).value;
                    QuasiSurfaceRow {
                        mean_photon,
                        a,
                        theta,
                        d_closed,
                        d_pipeline,
                        abs_diff: (d_closed - d_pipeline).abs(),
                        exceeds_theta0: d_closed > at_zero,
                    }
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Entanglement of formation and discord of the perfect Werner state over
/// `a_grid`. The state does not depend on the amplitude or on which of
/// `psi-`/`phi-` is used.
pub fn werner_curves(cfg: &SweepConfig) -> Result<Vec<WernerRow>, CliError> {
    cfg.validate()?;
    cfg.a_grid
        .par_iter()
        .map(|&a| {
            let spec = WernerSpec::new(StateFamily::PsiMinus, a, 1.0)?;
            let e = entanglement_closed(&spec).eof;
            let delta = werner_discord_closed(spec.mixing);
            Ok(WernerRow {
                a,
                e,
                delta,
                delta_minus_e: delta - e,
            })
        })
        .collect()
}

/// Entanglement of formation and minimum discord of the configured family
/// over `mean_photon x a`. The minimum is taken by the pipeline.
pub fn quasi_curves(cfg: &SweepConfig) -> Result<Vec<QuasiCurveRow>, CliError> {
    cfg.validate()?;
    let points: Vec<(f64, f64)> = cfg
        .mean_photon_list
        .iter()
        .flat_map(|&m| cfg.a_grid.iter().map(move |&a| (m, a)))
        .collect();
    points
        .par_iter()
        .map(|&(mean_photon, a)| {
            let spec = WernerSpec::new(cfg.family, a, mean_photon)?;
            let e = entanglement_closed(&spec).eof;
            let delta = discord_min(&werner_density(&spec))?.value;
            Ok(QuasiCurveRow {
                mean_photon,
                a,
                e,
                delta,
                delta_minus_e: delta - e,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cfg(a: Vec<f64>, theta: Vec<f64>, m: Vec<f64>) -> SweepConfig {
        SweepConfig {
            a_grid: a,
            theta_grid: theta,
            mean_photon_list: m,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn linspace_endpoints() {
        let v = linspace(-PI, PI, 361);
        assert_eq!(v.len(), 361);
        assert_eq!(v[0], -PI);
        assert_eq!(v[360], PI);
        assert_eq!(v[180], 0.0);
        assert_eq!(linspace(0.3, 0.9, 1), vec![0.3]);
    }

    #[test]
    fn validation() {
        assert!(SweepConfig::default().validate().is_ok());
        assert!(cfg(vec![], vec![0.0], vec![1.0]).validate().is_err());
        assert!(cfg(vec![0.5, 0.2], vec![0.0], vec![1.0]).validate().is_err());
        assert!(cfg(vec![0.0, 1.2], vec![0.0], vec![1.0]).validate().is_err());
        assert!(cfg(vec![0.5], vec![0.0], vec![1e-4]).validate().is_err());
        assert!(cfg(vec![0.5], vec![f64::NAN], vec![1.0]).validate().is_err());
    }

    #[test]
    fn zurek_surface_shape_and_endpoints() {
        let c = cfg(linspace(0.0, 1.0, 11), linspace(-PI, PI, 361), vec![1.0]);
        let rows = zurek_surface(&c).unwrap();
        assert_eq!(rows.len(), 11 * 361);
        for r in rows.iter().filter(|r| r.a == 1.0) {
            assert_abs_diff_eq!(r.d, 1.0, epsilon = 1e-12);
        }
        let quarter = rows
            .iter()
            .find(|r| r.a == 0.0 && (r.theta - PI / 2.0).abs() < 1e-12)
            .unwrap();
        assert_abs_diff_eq!(quarter.d, 0.0, epsilon = 1e-12);
        // grid order: a outer, theta inner
        assert_eq!(rows[361].a, 0.1);
        assert_eq!(rows[361].theta, -PI);
    }

    #[test]
    fn quasi_surface_agrees_with_pipeline() {
        let c = cfg(linspace(0.0, 1.0, 6), linspace(0.0, PI, 19), vec![0.01, 1.0, 5.0]);
        let rows = quasi_surface(&c).unwrap();
        assert_eq!(rows.len(), 3 * 6 * 19);
        assert!(rows.iter().all(|r| r.abs_diff < 1e-9));
    }

    #[test]
    fn quasi_surface_flags_basis_dependence_at_small_amplitude() {
        let c = cfg(vec![0.9], vec![0.0, PI / 4.0], vec![0.01]);
        let rows = quasi_surface(&c).unwrap();
        assert!(!rows[0].exceeds_theta0);
        assert!(rows[1].exceeds_theta0);
        assert!(rows[1].d_closed > rows[0].d_closed);
    }

    #[test]
    fn quasi_surface_rejects_werner_families() {
        let c = SweepConfig {
            family: StateFamily::PhiMinus,
            ..SweepConfig::default()
        };
        assert!(matches!(quasi_surface(&c), Err(CliError::Invalid(_))));
    }

    #[test]
    fn werner_curve_landmarks() {
        let c = cfg(vec![0.0, 1.0 / 3.0, 1.0], vec![0.0], vec![1.0]);
        let rows = werner_curves(&c).unwrap();
        assert_abs_diff_eq!(rows[0].e, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[0].delta, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[1].e, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(rows[1].delta, 0.125_814_583_693_911_4, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].e, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].delta, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].delta_minus_e, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quasi_curves_peak_and_ordering() {
        let c = cfg(linspace(0.0, 1.0, 101), vec![0.0], vec![2.0]);
        let rows = quasi_curves(&c).unwrap();
        let peak = rows
            .iter()
            .max_by(|x, y| x.delta_minus_e.total_cmp(&y.delta_minus_e))
            .unwrap();
        assert!(peak.a > 0.4 && peak.a < 0.5, "peak at {}", peak.a);
        assert!(rows.iter().all(|r| r.delta >= -1e-9));

        let c = cfg(vec![0.8], vec![0.0], vec![0.1, 0.5, 1.0, 2.0, 5.0]);
        let deltas: Vec<f64> = quasi_curves(&c).unwrap().iter().map(|r| r.delta).collect();
        assert!(deltas.windows(2).all(|w| w[1] >= w[0]), "{deltas:?}");
    }

    #[test]
    fn sweeps_are_deterministic() {
        let c = cfg(linspace(0.0, 1.0, 21), linspace(0.0, PI, 7), vec![0.1, 2.0]);
        assert_eq!(quasi_surface(&c).unwrap(), quasi_surface(&c).unwrap());
        assert_eq!(quasi_curves(&c).unwrap(), quasi_curves(&c).unwrap());
    }
}
