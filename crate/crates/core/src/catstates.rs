//! Coherent-state parameter layer.
//!
//! With `x = exp(-|alpha|^2)` the even/odd cat states
//! `|+-> = N+-(|alpha> +- |-alpha>)` form an orthonormal qubit basis, and the
//! four entangled coherent states
//!
//! ```text
//! |psi+-> = n+- (|alpha, alpha> +- |-alpha, -alpha>)
//! |phi+-> = n+- (|alpha, -alpha> +- |-alpha, alpha>)
//! ```
//!
//! have four-component amplitude vectors in that basis. Only `|alpha|^2`
//! enters, so `alpha` is taken real and positive and the Fock expansion is
//! never built.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::math;
use crate::qmatrix::{ComplexMatrix, C64};

/// Smallest accepted mean photon number. The odd cat normalization
/// diverges as `|alpha|^2 -> 0`.
pub const MIN_MEAN_PHOTON: f64 = 1e-3;

/// Scalars derived from the mean photon number `|alpha|^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatParams {
    mean_photon: f64,
    x: f64,
    one_minus_x2: f64,
    one_minus_x4: f64,
}

impl CatParams {
    pub fn new(mean_photon: f64) -> Result<Self> {
        if !(mean_photon.is_finite() && mean_photon >= MIN_MEAN_PHOTON) {
            return Err(Error::MeanPhotonTooSmall {
                value: mean_photon,
                min: MIN_MEAN_PHOTON,
            });
        }
        Ok(Self {
            mean_photon,
            x: math::exp(-mean_photon),
            // expm1 keeps 1 - x^2 accurate when |alpha|^2 is small
            one_minus_x2: -math::expm1(-2.0 * mean_photon),
            one_minus_x4: -math::expm1(-4.0 * mean_photon),
        })
    }

    /// `|alpha|^2`.
    pub fn mean_photon(&self) -> f64 {
        self.mean_photon
    }

    /// `x = exp(-|alpha|^2)`, the overlap scale `<alpha|-alpha> = x^2`.
    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn x2(&self) -> f64 {
        self.x * self.x
    }

    pub fn x4(&self) -> f64 {
        let x2 = self.x2();
        x2 * x2
    }

    /// Even cat normalization `N+ = [2(1 + x^2)]^(-1/2)`.
    pub fn cat_plus(&self) -> f64 {
        1.0 / math::sqrt(2.0 * (1.0 + self.x2()))
    }

    /// Odd cat normalization `N- = [2(1 - x^2)]^(-1/2)`.
    pub fn cat_minus(&self) -> f64 {
        1.0 / math::sqrt(2.0 * self.one_minus_x2)
    }

    /// `n+ = [2(1 + x^4)]^(-1/2)`.
    pub fn ecs_plus(&self) -> f64 {
        1.0 / math::sqrt(2.0 * (1.0 + self.x4()))
    }

    /// `n- = [2(1 - x^4)]^(-1/2)`.
    pub fn ecs_minus(&self) -> f64 {
        1.0 / math::sqrt(2.0 * self.one_minus_x4)
    }

    /// `1 / N+^2 = 2(1 + x^2)`.
    pub fn inv_cat_plus_sq(&self) -> f64 {
        2.0 * (1.0 + self.x2())
    }

    /// `1 / N-^2 = 2(1 - x^2)`.
    pub fn inv_cat_minus_sq(&self) -> f64 {
        2.0 * self.one_minus_x2
    }

    /// Weight `n+^2 / (4 N+^4)` of `|++>` in `|psi+>` (squared amplitude).
    pub fn weight_even(&self) -> f64 {
        let n = self.ecs_plus();
        let inv = self.inv_cat_plus_sq();
        n * n * inv * inv / 4.0
    }

    /// Weight `n+^2 / (4 N-^4)` of `|-->` in `|psi+>`.
    pub fn weight_odd(&self) -> f64 {
        let n = self.ecs_plus();
        let inv = self.inv_cat_minus_sq();
        n * n * inv * inv / 4.0
    }

    /// Cross term `n+^2 / (4 N+^2 N-^2)`.
    pub fn weight_cross(&self) -> f64 {
        let n = self.ecs_plus();
        n * n * self.inv_cat_plus_sq() * self.inv_cat_minus_sq() / 4.0
    }

    /// Pure-state concurrence `(1 - x^4) / (1 + x^4)` of `|psi+>` and `|phi+>`.
    pub fn concurrence_plus(&self) -> f64 {
        self.one_minus_x4 / (1.0 + self.x4())
    }
}

/// The four bipartite entangled coherent states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateFamily {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl StateFamily {
    pub const ALL: [StateFamily; 4] = [
        StateFamily::PsiPlus,
        StateFamily::PsiMinus,
        StateFamily::PhiPlus,
        StateFamily::PhiMinus,
    ];

    /// `psi-` and `phi-` are maximally entangled for every amplitude and give
    /// perfect Werner states; `psi+` and `phi+` give quasi-Werner states.
    pub fn is_maximally_entangled(self) -> bool {
        matches!(self, StateFamily::PsiMinus | StateFamily::PhiMinus)
    }

    pub fn label(self) -> &'static str {
        match self {
            StateFamily::PsiPlus => "psi+",
            StateFamily::PsiMinus => "psi-",
            StateFamily::PhiPlus => "phi+",
            StateFamily::PhiMinus => "phi-",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of psi+, psi-, phi+, phi-")
    }
}

impl FromStr for StateFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownFamily> {
        match s {
            "psi+" => Ok(StateFamily::PsiPlus),
            "psi-" => Ok(StateFamily::PsiMinus),
            "phi+" => Ok(StateFamily::PhiPlus),
            "phi-" => Ok(StateFamily::PhiMinus),
            _ => Err(UnknownFamily),
        }
    }
}

/// Normalized two-qubit pure state in the cat basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureStateVector {
    amplitudes: [C64; 4],
}

impl PureStateVector {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(amplitudes: [C64; 4]) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > Self::NORM_TOL || norm_sqr.is_nan() {
            return Err(Error::NotUnitNorm { norm_sqr });
        }
        Ok(Self { amplitudes })
    }

    pub fn from_real(amplitudes: [f64; 4]) -> Result<Self> {
        Self::new(amplitudes.map(|a| C64::new(a, 0.0)))
    }

    pub fn amplitudes(&self) -> &[C64; 4] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureStateVector) -> C64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&self.amplitudes).expect("4 amplitudes")
    }
}

/// Amplitudes of an entangled coherent state in the cat basis.
///
/// `psi+ = n+ (1 + x^2, 0, 0, 1 - x^2)`, which is `(n+/2)(1/N+^2, 0, 0, 1/N-^2)`;
/// `phi+` flips the sign of the last entry; `psi-`/`phi-` are the
/// `(|+-> +- |-+>)/sqrt 2` Bell-like states.
pub fn ecs_vector(family: StateFamily, p: &CatParams) -> PureStateVector {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let half_n = 0.5 * p.ecs_plus();
    let even = half_n * p.inv_cat_plus_sq();
    let odd = half_n * p.inv_cat_minus_sq();
    let amps = match family {
        StateFamily::PsiPlus => [even, 0.0, 0.0, odd],
        StateFamily::PhiPlus => [even, 0.0, 0.0, -odd],
        StateFamily::PsiMinus => [0.0, h, h, 0.0],
        StateFamily::PhiMinus => [0.0, h, -h, 0.0],
    };
    PureStateVector {
        amplitudes: amps.map(|a| C64::new(a, 0.0)),
    }
}

/// Concurrence `2 |c1 c4 - c2 c3|` of a two-qubit pure state.
pub fn concurrence_pure(v: &PureStateVector) -> f64 {
    let [c1, c2, c3, c4] = v.amplitudes;
    (2.0 * (c1 * c4 - c2 * c3).norm()).min(1.0)
}
