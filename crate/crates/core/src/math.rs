//! Scalar helpers: `libm` wrappers (so results do not depend on whether
//! `std` is linked) and the Shannon-entropy primitives shared by every
//! entropy in the crate.

/// Probabilities below this are treated as exactly zero in `p log p`.
pub const ZERO_PROBABILITY: f64 = 1e-15;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}

#[inline]
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// `p log2 p` with the `0 log 0 = 0` convention.
#[inline]
pub fn xlog2x(p: f64) -> f64 {
    if p < ZERO_PROBABILITY {
        0.0
    } else {
        p * log2(p)
    }
}

/// Shannon entropy in bits of a (not necessarily normalized) list of
/// probabilities.
pub fn shannon(probabilities: &[f64]) -> f64 {
    // 0.0 - x rather than -x so a certain outcome gives +0, not -0
    0.0 - probabilities.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// Binary entropy `H(p) = -p log2 p - (1-p) log2 (1-p)`.
pub fn binary_entropy(p: f64) -> f64 {
    0.0 - (xlog2x(p) + xlog2x(1.0 - p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn certain_outcome_has_positive_zero_entropy() {
        assert!(binary_entropy(1.0).is_sign_positive());
        assert!(shannon(&[1.0, 0.0]).is_sign_positive());
    }

    #[test]
    fn binary_entropy_endpoints() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn shannon_uniform() {
        assert_abs_diff_eq!(shannon(&[0.25; 4]), 2.0, epsilon = 1e-15);
        assert_eq!(shannon(&[1.0, 0.0, 1e-17]), 0.0);
    }
}
