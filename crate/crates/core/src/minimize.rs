//! One-dimensional minimization: uniform grid scan followed by golden-section
//! refinement.

/// `(sqrt 5 - 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Evaluates `f` at `samples` evenly spaced points on `[lo, hi]` (endpoints
/// included) and returns the smallest. The first of equal minima wins.
pub fn grid_min(f: &mut impl FnMut(f64) -> f64, lo: f64, hi: f64, samples: usize) -> Minimum {
    assert!(samples >= 2, "grid needs at least two samples");
    let step = (hi - lo) / (samples - 1) as f64;
    let mut best = Minimum { x: lo, value: f(lo) };
    for i in 1..samples {
        let x = if i == samples - 1 {
            hi
        } else {
            lo + step * i as f64
        };
        let value = f(x);
        if value < best.value {
            best = Minimum { x, value };
        }
    }
    best
}

/// Golden-section search on `[lo, hi]` until the bracket is narrower than
/// `tol`. Assumes `f` is unimodal on the bracket.
pub fn golden_section(f: &mut impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Minimum {
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while (hi - lo).abs() > tol {
        if fc <= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }
    if fc <= fd {
        Minimum { x: c, value: fc }
    } else {
        Minimum { x: d, value: fd }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn golden_finds_parabola_vertex() {
        let m = golden_section(&mut |x| (x - 0.3) * (x - 0.3) + 2.0, -1.0, 1.0, 1e-10);
        // a flat vertex only pins x to about sqrt(machine epsilon)
        assert_abs_diff_eq!(m.x, 0.3, epsilon = 1e-7);
        assert_abs_diff_eq!(m.value, 2.0, epsilon = 1e-15);
    }

    #[test]
    fn golden_handles_minimum_at_bracket_edge() {
        let m = golden_section(&mut |x| x, 0.0, 1.0, 1e-9);
        assert!(m.x < 1e-8);
    }

    #[test]
    fn grid_includes_endpoints() {
        let m = grid_min(&mut |x| -x, 0.0, 2.0, 5);
        assert_eq!(m, Minimum { x: 2.0, value: -2.0 });
        let m = grid_min(&mut |x: f64| (x - 1.0).abs(), 0.0, 2.0, 5);
        assert_eq!(m.x, 1.0);
    }
}
