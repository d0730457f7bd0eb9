//! Werner-form mixtures `rho = (1 - a) I/4 + a |v><v|` of white noise and an
//! entangled coherent state, with their closed-form spectra.
//!
//! `I` is the identity on the orthonormal cat basis. For `psi+`/`phi+` the
//! state is an X-state with diagonal `(d1, (1-a)/4, (1-a)/4, d4)` and corner
//! entries `+-r`, where
//!
//! ```text
//! d1 = (1-a)/4 + a n+^2/(4 N+^4)
//! d4 = (1-a)/4 + a n+^2/(4 N-^4)
//! r  =           a n+^2/(4 N+^2 N-^2)
//! ```

use crate::catstates::{ecs_vector, CatParams, StateFamily};
use crate::error::{Error, Result};
use crate::math;
use crate::qmatrix::{ComplexMatrix, Spectrum};

/// Mixing weight `a` of the pure component, in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Mixing(f64);

impl Mixing {
    pub fn new(a: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&a) {
            Ok(Self(a))
        } else {
            Err(Error::MixingOutOfRange(a))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Weight `(1 - a)/4` of each white-noise eigenvector.
    #[inline]
    pub fn noise_quarter(self) -> f64 {
        (1.0 - self.0) / 4.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WernerSpec {
    pub family: StateFamily,
    pub mixing: Mixing,
    pub params: CatParams,
}

impl WernerSpec {
    pub fn new(family: StateFamily, a: f64, mean_photon: f64) -> Result<Self> {
        Ok(Self {
            family,
            mixing: Mixing::new(a)?,
            params: CatParams::new(mean_photon)?,
        })
    }

    pub fn a(&self) -> f64 {
        self.mixing.value()
    }
}

/// Joint (4 values) and reduced-Y (2 values) spectra.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WernerSpectra {
    pub joint: Spectrum,
    pub reduced_y: Spectrum,
}

/// `(d1, d4, r)` of the quasi-Werner X-state.
pub(crate) fn quasi_entries(a: Mixing, p: &CatParams) -> (f64, f64, f64) {
    let q = a.noise_quarter();
    let a = a.value();
    (
        q + a * p.weight_even(),
        q + a * p.weight_odd(),
        a * p.weight_cross(),
    )
}

/// Density matrix of the Werner-form mixture as an explicit 4x4 matrix.
pub fn werner_density(spec: &WernerSpec) -> ComplexMatrix {
    let v = ecs_vector(spec.family, &spec.params);
    let noise = ComplexMatrix::identity(4)
        .expect("4x4")
        .scale(spec.mixing.noise_quarter());
    noise + v.projector().scale(spec.a())
}

/// Closed-form joint and reduced-Y spectra.
pub fn spectrum_closed(spec: &WernerSpec) -> WernerSpectra {
    let q = spec.mixing.noise_quarter();
    let a = spec.a();
    let joint = Spectrum::from_values(&[q, q, q, (1.0 + 3.0 * a) / 4.0]);
    let reduced_y = if spec.family.is_maximally_entangled() {
        Spectrum::from_values(&[0.5, 0.5])
    } else {
        let half = (1.0 - a) / 2.0;
        Spectrum::from_values(&[
            half + a * spec.params.weight_even(),
            half + a * spec.params.weight_odd(),
        ])
    };
    WernerSpectra { joint, reduced_y }
}

/// Closed-form Wootters `lambda_i` (square roots of the spectrum of
/// `rho rho~`), descending.
///
/// For `psi+`/`phi+` these are `sqrt(d1 d4) +- r` and `(1-a)/4` twice. The
/// geometric mean carries exponent `+1/2`; only that reading matches the
/// numerical spectrum and reduces to the Werner values as `x -> 0`.
pub fn wootters_lambdas_closed(spec: &WernerSpec) -> Spectrum {
    let q = spec.mixing.noise_quarter();
    if spec.family.is_maximally_entangled() {
        return Spectrum::from_values(&[(1.0 + 3.0 * spec.a()) / 4.0, q, q, q]);
    }
    let (d1, d4, r) = quasi_entries(spec.mixing, &spec.params);
    let g = math::sqrt(d1 * d4);
    Spectrum::from_values(&[g + r, q, q, (g - r).max(0.0)])
}
