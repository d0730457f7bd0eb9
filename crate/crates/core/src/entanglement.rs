//! Wootters concurrence and entanglement of formation.

use crate::catstates::CatParams;
use crate::error::{Error, Result};
use crate::math;
use crate::qmatrix::{check_density, eigvals_general_product, tensor, ComplexMatrix, Spectrum};
use crate::werner::{wootters_lambdas_closed, WernerSpec};

/// Excursions of a concurrence outside `[0, 1]` up to this size are clamped.
pub const CONCURRENCE_TOL: f64 = 1e-10;
/// Eigenvalues of `rho rho~` below this are roundoff and set to zero before
/// taking square roots (a roundoff value of 1e-17 would otherwise become a
/// `lambda` of 3e-9).
pub const PRODUCT_SPECTRUM_FLOOR: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntanglementResult {
    pub concurrence: f64,
    /// Entanglement of formation in bits.
    pub eof: f64,
    /// Square roots of the spectrum of `rho rho~`, descending.
    pub lambdas: Spectrum,
}

impl EntanglementResult {
    fn from_lambdas(lambdas: Spectrum) -> Self {
        let concurrence = concurrence_from_lambdas(&lambdas);
        Self {
            concurrence,
            eof: eof_unchecked(concurrence),
            lambdas,
        }
    }
}

/// `rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)`.
pub fn spin_flip(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let y = ComplexMatrix::pauli_y();
    let yy = tensor(&y, &y)?;
    Ok(yy * rho.conj() * yy)
}

/// Numerical Wootters `lambda_i`, descending.
pub fn wootters_lambdas(rho: &ComplexMatrix) -> Result<Spectrum> {
    check_density(rho)?;
    let flipped = spin_flip(rho)?;
    let squares = eigvals_general_product(rho, &flipped)?;
    Ok(squares.map(|v| {
        if v < PRODUCT_SPECTRUM_FLOOR {
            0.0
        } else {
            math::sqrt(v)
        }
    }))
}

/// `max(0, l1 - l2 - l3 - l4)` for a descending list.
pub fn concurrence_from_lambdas(lambdas: &Spectrum) -> f64 {
    let l = lambdas.values();
    let c = l[0] - l[1..].iter().sum::<f64>();
    c.clamp(0.0, 1.0)
}

/// Concurrence and entanglement of formation of a two-qubit density matrix.
pub fn concurrence_mixed(rho: &ComplexMatrix) -> Result<EntanglementResult> {
    Ok(EntanglementResult::from_lambdas(wootters_lambdas(rho)?))
}

/// Closed-form concurrence and entanglement of formation of a Werner-form
/// state, from the closed-form `lambda_i`.
pub fn entanglement_closed(spec: &WernerSpec) -> EntanglementResult {
    EntanglementResult::from_lambdas(wootters_lambdas_closed(spec))
}

/// Mixing weight at which the `psi+`/`phi+` quasi-Werner state becomes
/// entangled: `a* = 1 / (1 + 2 C0)` with `C0` the pure-state concurrence.
/// For perfect Werner states `C0 = 1` and `a* = 1/3`.
pub fn entanglement_onset(p: &CatParams) -> f64 {
    1.0 / (1.0 + 2.0 * p.concurrence_plus())
}

fn eof_unchecked(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    math::binary_entropy((1.0 + math::sqrt(1.0 - c * c)) / 2.0)
}

/// Entanglement of formation `H((1 + sqrt(1 - C^2)) / 2)` in bits.
pub fn eof(concurrence: f64) -> Result<f64> {
    if !(-CONCURRENCE_TOL..=1.0 + CONCURRENCE_TOL).contains(&concurrence) {
        return Err(Error::ConcurrenceOutOfRange(concurrence));
    }
    Ok(eof_unchecked(concurrence))
}
