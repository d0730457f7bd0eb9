//! Closed forms against the density-matrix pipeline, reported as maximum
//! deviations per check.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use qdiscord_core::discord::{discord_quasi_closed, werner_discord_closed, zurek_discord};
use qdiscord_core::entanglement::{concurrence_mixed, entanglement_onset, wootters_lambdas};
use qdiscord_core::math::xlog2x;
use qdiscord_core::qmatrix::{eigvals_hermitian, partial_trace};
use qdiscord_core::werner::{spectrum_closed, werner_density, wootters_lambdas_closed};
use qdiscord_core::{
    CatParams, DiscordEvaluator, MeasurementBasis, Mixing, Spectrum, StateFamily, Subsystem, WernerSpec,
};

use crate::error::CliError;
use crate::sweep::linspace;

pub const GRID_MEAN_PHOTONS: [f64; 6] = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0];
pub const GRID_A_STEPS: usize = 11;
pub const GRID_THETA_STEPS: usize = 19;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
    /// D'(0) with the leading constant read as +1 and as -1.
    pub werner_constant: (f64, f64),
    /// Largest lambda deviation from the numerical spectrum with the
    /// geometric-mean exponent read as +1/2 and as -1/2.
    pub lambda_exponent: (f64, f64),
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name)
            .collect()
    }

    pub fn into_result(self) -> Result<Self, CliError> {
        if self.passed() {
            Ok(self)
        } else {
            Err(CliError::Verification(self.failures().join(", ")))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{:4}  {:<44} max dev {:.3e}  (tol {:.0e})",
                if c.passed() { "ok" } else { "FAIL" },
                c.name,
                c.max_deviation,
                c.tolerance
            )?;
        }
        writeln!(f)?;
        let (plus, minus) = self.werner_constant;
        writeln!(
            f,
            "note: Werner discord leading constant. +1 gives D'(0) = {plus:.3e}; \
             -1 gives D'(0) = {minus:.15}. Discord is non-negative, so +1 is used."
        )?;
        let (half, neg_half) = self.lambda_exponent;
        writeln!(
            f,
            "note: Wootters lambdas use sqrt(d1 d4) +- r. Max deviation from the numerical \
             spectrum: exponent +1/2 {half:.3e}, exponent -1/2 {neg_half:.3e}."
        )?;
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed".to_string()
            } else {
                format!("failed: {}", self.failures().join(", "))
            }
        )
    }
}

fn specs(families: &'static [StateFamily]) -> impl Iterator<Item = WernerSpec> {
    families.iter().flat_map(|&f| {
        GRID_MEAN_PHOTONS.into_iter().flat_map(move |m| {
            linspace(0.0, 1.0, GRID_A_STEPS)
                .into_iter()
                .map(move |a| WernerSpec::new(f, a, m).expect("grid spec"))
        })
    })
}

const WERNER: &[StateFamily] = &[StateFamily::PsiMinus, StateFamily::PhiMinus];

fn mix(a: f64) -> Mixing {
    Mixing::new(a).expect("mixing in range")
}

fn zurek_endpoints() -> f64 {
    let mut worst = 0.0f64;
    for theta in linspace(-PI, PI, 361) {
        worst = worst.max((zurek_discord(mix(1.0), theta) - 1.0).abs());
    }
    for theta in [0.0, FRAC_PI_2, -FRAC_PI_2, PI, -PI] {
        worst = worst.max(zurek_discord(mix(0.0), theta).abs());
    }
    worst
}

fn spectra() -> Result<f64, CliError> {
    let mut worst = 0.0f64;
    for spec in specs(&StateFamily::ALL) {
        let rho = werner_density(&spec);
        let closed = spectrum_closed(&spec);
        worst = worst.max(closed.joint.max_abs_diff(&eigvals_hermitian(&rho)?));
        let reduced = eigvals_hermitian(&partial_trace(&rho, Subsystem::Y)?)?;
        worst = worst.max(closed.reduced_y.max_abs_diff(&reduced));
    }
    Ok(worst)
}

/// The lambdas with the geometric mean `(d1 d4)^(-1/2)`.
fn lambdas_negative_exponent(spec: &WernerSpec) -> Spectrum {
    let q = spec.mixing.noise_quarter();
    let a = spec.a();
    let p = &spec.params;
    let d1 = q + a * p.weight_even();
    let d4 = q + a * p.weight_odd();
    let r = a * p.weight_cross();
    let g = 1.0 / (d1 * d4).sqrt();
    Spectrum::from_values(&[g + r, q, q, g - r])
}

fn lambdas() -> Result<(f64, f64), CliError> {
    let (mut plus, mut minus) = (0.0f64, 0.0f64);
    for spec in specs(&StateFamily::ALL) {
        let numeric = wootters_lambdas(&werner_density(&spec))?;
        plus = plus.max(wootters_lambdas_closed(&spec).max_abs_diff(&numeric));
        if !spec.family.is_maximally_entangled() {
            minus = minus.max(lambdas_negative_exponent(&spec).max_abs_diff(&numeric));
        }
    }
    Ok((plus, minus))
}

fn concurrence() -> Result<f64, CliError> {
    let mut worst = 0.0f64;
    for spec in specs(&StateFamily::ALL) {
        let numeric = concurrence_mixed(&werner_density(&spec))?.concurrence;
        let closed = qdiscord_core::entanglement::entanglement_closed(&spec).concurrence;
        worst = worst.max((numeric - closed).abs());
    }
    Ok(worst)
}

/// `(closed vs pipeline, psi+ vs phi+)` over the grid and 19 angles.
fn quasi_discord() -> Result<(f64, f64), CliError> {
    let thetas = linspace(0.0, PI, GRID_THETA_STEPS);
    let (mut oracle, mut pair) = (0.0f64, 0.0f64);
    for spec in specs(&[StateFamily::PsiPlus]) {
        let twin = WernerSpec::new(StateFamily::PhiPlus, spec.a(), spec.params.mean_photon())?;
        let eval = DiscordEvaluator::new(&werner_density(&spec))?;
        let twin_eval = DiscordEvaluator::new(&werner_density(&twin))?;
        for &theta in &thetas {
            let basis = MeasurementBasis::new(theta, 0.0);
            let closed = discord_quasi_closed(spec.mixing, &spec.params, theta);
            let d = eval.at(&basis).value;
            let d_twin = twin_eval.at(&basis).value;
            oracle = oracle.max((d - closed).abs()).max((d_twin - closed).abs());
            pair = pair.max((d - d_twin).abs());
        }
    }
    Ok((oracle, pair))
}

/// `(closed vs pipeline, spread over theta and phi)` for the perfect Werner
/// states.
fn werner_discord() -> Result<(f64, f64), CliError> {
    let thetas = linspace(0.0, PI, GRID_THETA_STEPS);
    let (mut oracle, mut spread) = (0.0f64, 0.0f64);
    for spec in specs(WERNER) {
        let eval = DiscordEvaluator::new(&werner_density(&spec))?;
        let closed = werner_discord_closed(spec.mixing);
        let reference = eval.at(&MeasurementBasis::computational()).value;
        for &theta in &thetas {
            for phi in [0.0, 0.7, 2.1, 4.0] {
                let d = eval.at(&MeasurementBasis::new(theta, phi)).value;
                oracle = oracle.max((d - closed).abs());
                spread = spread.max((d - reference).abs());
            }
        }
    }
    Ok((oracle, spread))
}

/// D'(a) with an arbitrary leading constant.
fn werner_discord_with_constant(a: f64, constant: f64) -> f64 {
    constant + 3.0 * xlog2x((1.0 - a) / 4.0) + xlog2x((1.0 + 3.0 * a) / 4.0)
        - xlog2x((1.0 - a) / 2.0)
        - xlog2x((1.0 + a) / 2.0)
}

fn werner_endpoints() -> f64 {
    werner_discord_closed(mix(0.0))
        .abs()
        .max((werner_discord_closed(mix(1.0)) - 1.0).abs())
}

fn werner_concurrence() -> Result<f64, CliError> {
    let mut worst = 0.0f64;
    for spec in specs(WERNER) {
        let numeric = concurrence_mixed(&werner_density(&spec))?.concurrence;
        let expected = ((3.0 * spec.a() - 1.0) / 2.0).max(0.0);
        worst = worst.max((numeric - expected).abs());
    }
    Ok(worst)
}

/// Smallest `a` at which the numerically computed concurrence of the `psi+`
/// quasi-Werner state is positive, by bisection.
pub fn onset_by_bisection(mean_photon: f64) -> Result<f64, CliError> {
    let entangled = |a: f64| -> Result<bool, CliError> {
        let spec = WernerSpec::new(StateFamily::PsiPlus, a, mean_photon)?;
        Ok(concurrence_mixed(&werner_density(&spec))?.concurrence > 0.0)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if entangled(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn onset() -> Result<f64, CliError> {
    let formula = entanglement_onset(&CatParams::new(1.0)?);
    Ok((onset_by_bisection(1.0)? - formula).abs())
}

fn large_amplitude() -> Result<f64, CliError> {
    let p = CatParams::new(5.0)?;
    let mut worst = 0.0f64;
    for a in linspace(0.0, 1.0, 101) {
        for theta in linspace(0.0, PI, 181) {
            let d = discord_quasi_closed(mix(a), &p, theta);
            worst = worst.max((d - werner_discord_closed(mix(a))).abs());
        }
    }
    Ok(worst)
}

pub fn run() -> Result<Report, CliError> {
    let (lambda_plus, lambda_minus) = lambdas()?;
    let (quasi_oracle, quasi_pair) = quasi_discord()?;
    let (werner_oracle, werner_spread) = werner_discord()?;
    let checks = vec![
        Check {
            name: "zurek endpoints",
            max_deviation: zurek_endpoints(),
            tolerance: 1e-12,
        },
        Check {
            name: "joint and reduced spectra",
            max_deviation: spectra()?,
            tolerance: 1e-10,
        },
        Check {
            name: "wootters lambdas",
            max_deviation: lambda_plus,
            tolerance: 1e-9,
        },
        Check {
            name: "concurrence closed vs numeric",
            max_deviation: concurrence()?,
            tolerance: 1e-9,
        },
        Check {
            name: "quasi-werner discord closed vs pipeline",
            max_deviation: quasi_oracle,
            tolerance: 1e-9,
        },
        Check {
            name: "psi+ vs phi+ discord",
            max_deviation: quasi_pair,
            tolerance: 1e-12,
        },
        Check {
            name: "werner discord endpoints",
            max_deviation: werner_endpoints(),
            tolerance: 1e-12,
        },
        Check {
            name: "werner discord closed vs pipeline",
            max_deviation: werner_oracle,
            tolerance: 1e-9,
        },
        Check {
            name: "werner discord basis independence",
            max_deviation: werner_spread,
            tolerance: 1e-10,
        },
        Check {
            name: "werner concurrence (3a-1)/2",
            max_deviation: werner_concurrence()?,
            tolerance: 1e-10,
        },
        Check {
            name: "entanglement onset at |alpha|^2 = 1",
            max_deviation: onset()?,
            tolerance: 1e-6,
        },
        Check {
            name: "|alpha|^2 = 5 quasi-werner vs werner discord",
            max_deviation: large_amplitude()?,
            tolerance: 1e-6,
        },
    ];
    Ok(Report {
        checks,
        werner_constant: (
            werner_discord_with_constant(0.0, 1.0),
            werner_discord_with_constant(0.0, -1.0),
        ),
        lambda_exponent: (lambda_plus, lambda_minus),
    })
}
