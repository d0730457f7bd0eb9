//! Quantum discord with projective measurements on subsystem Y.
//!
//! ```text
//! I(X:Y) = S(rho_X) + S(rho_Y) - S(rho_XY)
//! J(X:Y) = S(rho_X) - sum_j p_j S(rho_X|j)
//! D      = I - J = S(rho_Y) - S(rho_XY) + sum_j p_j S(rho_X|j)
//! ```
//!
//! The measurement basis is `|pi0> = cos t |+> + e^{i phi} sin t |->`,
//! `|pi1> = sin t |+> - e^{i phi} cos t |->`.
//!
//! [`discord_at`] and [`discord_min`] work on any valid 4x4 density matrix;
//! the `*_closed` functions and [`zurek_discord`] are the analytic forms for
//! the specific families and serve as an independent check on the pipeline.

use core::f64::consts::PI;

use crate::catstates::CatParams;
use crate::error::{Error, Result};
use crate::math::{self, xlog2x};
use crate::minimize::{golden_section, grid_min};
use crate::qmatrix::{
    check_density, eigvals_hermitian, entropy_of_spectrum, partial_trace, ComplexMatrix, Subsystem, C64,
};
use crate::werner::Mixing;

/// Outcome probabilities below this mark a measure-zero branch whose entropy
/// contribution is dropped.
pub const DEGENERATE_PROBABILITY: f64 = 1e-14;
/// Coarse theta samples on `[0, pi]` before golden-section refinement.
pub const THETA_GRID_SAMPLES: usize = 181;
/// Golden-section stopping width in theta.
pub const THETA_TOL: f64 = 1e-8;
/// Largest tolerated change of discord under a change of measurement phase.
pub const PHASE_SENSITIVITY_TOL: f64 = 1e-8;

const PHASE_PROBES: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
const PHASE_PROBE_THETAS: [f64; 3] = [0.3, 0.7, 1.1];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// The `{|+>, |->}` basis.
    pub fn computational() -> Self {
        Self::new(0.0, 0.0)
    }

    /// `[|pi0>, |pi1>]` as amplitude pairs over `{|+>, |->}`.
    pub fn vectors(&self) -> [[C64; 2]; 2] {
        let (c, s) = (math::cos(self.theta), math::sin(self.theta));
        let phase = C64::new(math::cos(self.phi), math::sin(self.phi));
        [[C64::new(c, 0.0), phase * s], [C64::new(s, 0.0), -phase * c]]
    }
}

/// One measurement outcome: the post-measurement state of X and its
/// probability. A degenerate branch keeps its unnormalized state.
#[derive(Clone, Copy, Debug)]
pub struct Branch {
    pub state: ComplexMatrix,
    pub probability: f64,
    pub degenerate: bool,
}

impl Branch {
    /// `p S(rho_X|j)`, zero for a degenerate branch.
    fn weighted_entropy(&self) -> f64 {
        if self.degenerate {
            return 0.0;
        }
        let spectrum = eigvals_hermitian(&self.state.hermitian_part()).expect("2x2 Hermitian");
        self.probability * entropy_of_spectrum(&spectrum)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordResult {
    pub value: f64,
    /// Measurement angle the value was obtained at.
    pub theta_min: f64,
    pub phi: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub probabilities: [f64; 2],
}

fn validate_two_qubit(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    check_density(rho)
}

fn branches_unchecked(rho: &ComplexMatrix, basis: &MeasurementBasis) -> [Branch; 2] {
    basis.vectors().map(|pi| {
        let mut state = ComplexMatrix::zeros(2).expect("2x2");
        for x in 0..2 {
            for xp in 0..2 {
                let mut acc = C64::new(0.0, 0.0);
                for y in 0..2 {
                    for yp in 0..2 {
                        acc += pi[y].conj() * rho[(2 * x + y, 2 * xp + yp)] * pi[yp];
                    }
                }
                state[(x, xp)] = acc;
            }
        }
        let probability = state.trace().re;
        if probability < DEGENERATE_PROBABILITY {
            Branch {
                state,
                probability: probability.max(0.0),
                degenerate: true,
            }
        } else {
            Branch {
                state: state.scale(1.0 / probability),
                probability,
                degenerate: false,
            }
        }
    })
}

/// Post-measurement states of X for each outcome of a projective
/// measurement of Y, with their probabilities.
pub fn conditional_states(rho: &ComplexMatrix, basis: &MeasurementBasis) -> Result<[Branch; 2]> {
    validate_two_qubit(rho)?;
    Ok(branches_unchecked(rho, basis))
}

/// `I(X:Y)` in bits.
pub fn mutual_information(rho: &ComplexMatrix) -> Result<f64> {
    Ok(DiscordEvaluator::new(rho)?.mutual_information())
}

/// Discord evaluation for one state, caching the basis-independent
/// entropies across measurement bases.
#[derive(Clone, Copy, Debug)]
pub struct DiscordEvaluator {
    rho: ComplexMatrix,
    s_x: f64,
    s_y: f64,
    s_xy: f64,
}

impl DiscordEvaluator {
    pub fn new(rho: &ComplexMatrix) -> Result<Self> {
        validate_two_qubit(rho)?;
        let entropy = |m: &ComplexMatrix| -> Result<f64> {
            let spectrum = eigvals_hermitian(m)?.clamp_nonnegative()?;
            Ok(entropy_of_spectrum(&spectrum))
        };
        Ok(Self {
            rho: *rho,
            s_x: entropy(&partial_trace(rho, Subsystem::X)?)?,
            s_y: entropy(&partial_trace(rho, Subsystem::Y)?)?,
            s_xy: entropy(rho)?,
        })
    }

    pub fn mutual_information(&self) -> f64 {
        self.s_x + self.s_y - self.s_xy
    }

    pub fn at(&self, basis: &MeasurementBasis) -> DiscordResult {
        let branches = branches_unchecked(&self.rho, basis);
        let conditional: f64 = branches.iter().map(Branch::weighted_entropy).sum();
        let mutual_info = self.mutual_information();
        let classical_corr = self.s_x - conditional;
        DiscordResult {
            value: mutual_info - classical_corr,
            theta_min: basis.theta,
            phi: basis.phi,
            mutual_info,
            classical_corr,
            probabilities: [branches[0].probability, branches[1].probability],
        }
    }

    /// Largest `|D(theta, phi) - D(theta, 0)|` over the fixed probe set.
    pub fn phase_sensitivity(&self) -> f64 {
        let mut worst = 0.0f64;
        for &theta in &PHASE_PROBE_THETAS {
            let reference = self.at(&MeasurementBasis::new(theta, 0.0)).value;
            for &phi in &PHASE_PROBES {
                let d = self.at(&MeasurementBasis::new(theta, phi)).value;
                worst = worst.max((d - reference).abs());
            }
        }
        worst
    }

    /// Minimum over theta at `phi = 0`, after checking phase insensitivity.
    pub fn minimize(&self) -> Result<DiscordResult> {
        let deviation = self.phase_sensitivity();
        if deviation.is_nan() || deviation > PHASE_SENSITIVITY_TOL {
            return Err(Error::PhaseSensitive { deviation });
        }
        let mut objective = |theta: f64| self.at(&MeasurementBasis::new(theta, 0.0)).value;
        let coarse = grid_min(&mut objective, 0.0, PI, THETA_GRID_SAMPLES);
        let step = PI / (THETA_GRID_SAMPLES - 1) as f64;
        let refined = golden_section(&mut objective, coarse.x - step, coarse.x + step, THETA_TOL);
        let best = if refined.value < coarse.value {
            refined
        } else {
            coarse
        };
        let theta = wrap_half_turn(best.x);
        let mut result = self.at(&MeasurementBasis::new(theta, 0.0));
        // Re-evaluating at the wrapped angle can differ in the last ulp.
        result.value = result.value.min(best.value);
        Ok(result)
    }
}

/// Maps an angle into `[0, pi)`.
fn wrap_half_turn(theta: f64) -> f64 {
    let t = theta % PI;
    if t < 0.0 {
        t + PI
    } else {
        t
    }
}

/// Discord for the measurement `basis` on Y.
pub fn discord_at(rho: &ComplexMatrix, basis: &MeasurementBasis) -> Result<DiscordResult> {
    Ok(DiscordEvaluator::new(rho)?.at(basis))
}

/// Discord minimized over projective measurements on Y.
///
/// The phase is fixed at 0 once a probe confirms the state's discord does not
/// depend on it; the angle is found by a 181-point scan of `[0, pi]` and
/// golden-section refinement around the best sample.
pub fn discord_min(rho: &ComplexMatrix) -> Result<DiscordResult> {
    DiscordEvaluator::new(rho)?.minimize()
}

/// `1/2 (|00><00| + |11><11|) + a/2 (|00><11| + |11><00|)`.
#[rustfmt::skip]
pub fn zurek_state(a: Mixing) -> ComplexMatrix {
    let h = a.value() / 2.0;
    ComplexMatrix::from_real(
        4,
        &[
            0.5, 0.0, 0.0, h,
            0.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 0.0, 0.0,
            h, 0.0, 0.0, 0.5,
        ],
    )
    .expect("4x4")
}

/// Closed-form discord of [`zurek_state`]; depends on theta only through
/// `sin^2 2 theta` and not on the phase.
pub fn zurek_discord(a: Mixing, theta: f64) -> f64 {
    let a = a.value();
    let s2 = math::sin(2.0 * theta);
    let root = math::sqrt((1.0 - (1.0 - a * a) * s2 * s2).max(0.0));
    1.0 + (xlog2x((1.0 + a) / 2.0) + xlog2x((1.0 - a) / 2.0))
        - (xlog2x((1.0 + root) / 2.0) + xlog2x((1.0 - root) / 2.0))
}

/// Outcome probabilities `(P0, P1)` of measuring Y on the `psi+`/`phi+`
/// quasi-Werner state.
pub fn quasi_probabilities(a: Mixing, p: &CatParams, theta: f64) -> [f64; 2] {
    let half = 2.0 * a.noise_quarter();
    let (even, odd) = (a.value() * p.weight_even(), a.value() * p.weight_odd());
    let (c, s) = (math::cos(theta), math::sin(theta));
    let (c2, s2) = (c * c, s * s);
    [half + even * c2 + odd * s2, half + even * s2 + odd * c2]
}

/// Closed-form discord of the `psi+` (equivalently `phi+`) quasi-Werner
/// state for the measurement angle `theta`.
pub fn discord_quasi_closed(a: Mixing, p: &CatParams, theta: f64) -> f64 {
    let q = a.noise_quarter();
    let av = a.value();
    let reduced_entropy = -xlog2x(2.0 * q + av * p.weight_even()) - xlog2x(2.0 * q + av * p.weight_odd());
    let joint_entropy = -(3.0 * xlog2x(q) + xlog2x((1.0 + 3.0 * av) / 4.0));
    let conditional: f64 = quasi_probabilities(a, p, theta)
        .iter()
        .filter(|&&pj| pj >= DEGENERATE_PROBABILITY)
        .map(|&pj| {
            let low = q / pj;
            -pj * (xlog2x(low) + xlog2x(1.0 - low))
        })
        .sum();
    reduced_entropy - joint_entropy + conditional
}

/// Closed-form discord of the perfect Werner state (`psi-` or `phi-`),
/// independent of the measurement basis and the amplitude. The leading
/// constant is `+1 = S(rho_Y)`.
pub fn werner_discord_closed(a: Mixing) -> f64 {
    let a = a.value();
    1.0 + 3.0 * xlog2x((1.0 - a) / 4.0) + xlog2x((1.0 + 3.0 * a) / 4.0)
        - xlog2x((1.0 - a) / 2.0)
        - xlog2x((1.0 + a) / 2.0)
}
