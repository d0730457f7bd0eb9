//! Dense complex matrices of dimension 2 or 4.
//!
//! Two-qubit states use the basis ordering `|xy>` with index `2x + y`, i.e.
//! `{|++>, |+->, |-+>, |-->}` in the cat basis, subsystem X first.

use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::math;

pub type C64 = Complex<f64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Hermiticity tolerance for eigensolver and entropy inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Trace tolerance for density-matrix inputs.
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues in `[-NEGATIVE_FLOOR, 0)` are roundoff and clamped to 0;
/// anything lower is an integrity error.
pub const NEGATIVE_FLOOR: f64 = 1e-10;
/// Largest imaginary part tolerated in a product spectrum.
pub const IMAGINARY_TOL: f64 = 1e-8;

pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const JACOBI_THRESHOLD: f64 = 1e-14;

/// Square complex matrix of dimension 2 or 4, stored row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [C64; 16],
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        match dim {
            2 | 4 => Ok(Self {
                dim,
                data: [ZERO; 16],
            }),
            _ => Err(Error::UnsupportedDimension(dim)),
        }
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_row_major(dim: usize, entries: &[C64]) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        m.data[..entries.len()].copy_from_slice(entries);
        Ok(m)
    }

    /// Real matrix from row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        for (slot, &v) in m.data.iter_mut().zip(entries) {
            *slot = C64::new(v, 0.0);
        }
        Ok(m)
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(values.len())?;
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        Ok(m)
    }

    /// `|v><v|` for a vector of length 2 or 4.
    pub fn projector(v: &[C64]) -> Result<Self> {
        let mut m = Self::zeros(v.len())?;
        for i in 0..v.len() {
            for j in 0..v.len() {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        Ok(m)
    }

    pub fn pauli_x() -> Self {
        Self::from_real(2, &[0.0, 1.0, 1.0, 0.0]).expect("2x2")
    }

    pub fn pauli_y() -> Self {
        let i = C64::new(0.0, 1.0);
        Self::from_row_major(2, &[ZERO, -i, i, ZERO]).expect("2x2")
    }

    pub fn pauli_z() -> Self {
        Self::from_real(2, &[1.0, 0.0, 0.0, -1.0]).expect("2x2")
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries, `dim * dim` of them.
    pub fn entries(&self) -> &[C64] {
        &self.data[..self.dim * self.dim]
    }

    pub fn dagger(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = *self;
        out.data.iter_mut().for_each(|z| *z = z.conj());
        out
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = *self;
        out.data.iter_mut().for_each(|z| *z *= factor);
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `max |M_ij - N_ij|`; dimensions must agree.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |M - M^dagger|` entrywise.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `(M + M^dagger) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let d = self.dagger();
        let mut out = *self;
        for (z, w) in out.data.iter_mut().zip(d.data.iter()) {
            *z = (*z + *w) * 0.5;
        }
        out
    }

    fn frobenius(&self) -> f64 {
        math::sqrt(self.entries().iter().map(|z| z.norm_sqr()).sum())
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        math::sqrt(s)
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on a dimension mismatch.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix {
            dim: n,
            data: [ZERO; 16],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        Mul::mul(&self, &rhs)
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sum dimension mismatch");
        for (z, w) in self.data.iter_mut().zip(rhs.data.iter()) {
            *z += *w;
        }
        self
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix difference dimension mismatch");
        for (z, w) in self.data.iter_mut().zip(rhs.data.iter()) {
            *z -= *w;
        }
        self
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6e}{:+.6e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Real eigenvalues sorted in descending order (at most four).
#[derive(Clone, Copy, PartialEq)]
pub struct Spectrum {
    len: usize,
    values: [f64; 4],
}

impl Spectrum {
    /// Sorts `values` descending. Panics if more than four values are given.
    pub fn from_values(values: &[f64]) -> Self {
        assert!(values.len() <= 4, "spectrum holds at most four values");
        let mut buf = [0.0; 4];
        buf[..values.len()].copy_from_slice(values);
        buf[..values.len()].sort_unstable_by(|a, b| b.total_cmp(a));
        Self {
            len: values.len(),
            values: buf,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values[..self.len]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sum(&self) -> f64 {
        self.values().iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.values().first().copied().unwrap_or(f64::NAN)
    }

    pub fn min(&self) -> f64 {
        self.values().last().copied().unwrap_or(f64::NAN)
    }

    /// Largest elementwise difference; both spectra must have equal length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.len, other.len, "spectrum length mismatch");
        self.values()
            .iter()
            .zip(other.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        let mut out = *self;
        out.values[..out.len].iter_mut().for_each(|v| *v = f(*v));
        Spectrum::from_values(out.values())
    }

    /// Clamps roundoff negatives to zero; fails below `-NEGATIVE_FLOOR`.
    pub fn clamp_nonnegative(&self) -> Result<Spectrum> {
        let mut out = *self;
        for v in out.values[..out.len].iter_mut() {
            if *v < -NEGATIVE_FLOOR {
                return Err(Error::NegativeEigenvalue { value: *v });
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values()).finish()
    }
}

/// Eigendecomposition `M = V diag(values) V^dagger`; column `k` of `vectors`
/// belongs to `values.values()[k]`.
#[derive(Clone, Copy, Debug)]
pub struct HermitianEigen {
    pub values: Spectrum,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::diagonal(self.values.values()).expect("same dim");
        self.vectors * d * self.vectors.dagger()
    }
}

/// Which qubit of a two-qubit state to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    X,
    Y,
}

/// Kronecker product. Only 2x2 (x) 2x2 fits the fixed-size carrier.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dim = a.dim * b.dim;
    if dim > 4 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut out = ComplexMatrix::zeros(dim)?;
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in 0..b.dim {
                for l in 0..b.dim {
                    out[(i * b.dim + k, j * b.dim + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Reduced state of one qubit of a 4x4 two-qubit operator.
pub fn partial_trace(rho: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if rho.dim != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim,
        });
    }
    let mut out = ComplexMatrix::zeros(2)?;
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = match keep {
                Subsystem::X => rho[(2 * i, 2 * j)] + rho[(2 * i + 1, 2 * j + 1)],
                Subsystem::Y => rho[(i, j)] + rho[(2 + i, 2 + j)],
            };
        }
    }
    Ok(out)
}

fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL || defect.is_nan() {
        Err(Error::NotHermitian { defect })
    } else {
        Ok(())
    }
}

/// Checks the density-matrix preconditions shared by entropy and discord
/// routines: Hermitian to `HERMITIAN_TOL`, unit trace to `TRACE_TOL`.
pub fn check_density(rho: &ComplexMatrix) -> Result<()> {
    check_hermitian(rho)?;
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > TRACE_TOL || trace.is_nan() {
        return Err(Error::NotNormalized { trace });
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix, descending.
///
/// 2x2 inputs use the closed form; 4x4 inputs use cyclic Jacobi.
pub fn eigvals_hermitian(m: &ComplexMatrix) -> Result<Spectrum> {
    check_hermitian(m)?;
    if m.dim == 2 {
        let a = m[(0, 0)].re;
        let d = m[(1, 1)].re;
        let mean = 0.5 * (a + d);
        let radius = math::hypot(0.5 * (a - d), m[(0, 1)].norm());
        return Ok(Spectrum::from_values(&[mean + radius, mean - radius]));
    }
    Ok(jacobi(m)?.values)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, descending.
pub fn eigh(m: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(m)?;
    jacobi(m)
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of the
/// pivot `a_pq` and then applies the real symmetric Jacobi rotation.
fn jacobi(m: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = m.dim;
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n)?;
    let threshold = JACOBI_THRESHOLD * a.frobenius().max(1.0);

    let mut converged = a.off_diagonal_norm() <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = a.off_diagonal_norm() <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps,
            off_diagonal: a.off_diagonal_norm(),
        });
    }

    let mut order = [0usize, 1, 2, 3];
    let order = &mut order[..n];
    order.sort_unstable_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let mut values = [0.0; 4];
    let mut vectors = ComplexMatrix::zeros(n)?;
    for (k, &src) in order.iter().enumerate() {
        values[k] = a[(src, src)].re;
        for row in 0..n {
            vectors[(row, k)] = v[(row, src)];
        }
    }
    Ok(HermitianEigen {
        values: Spectrum::from_values(&values[..n]),
        vectors,
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim;
    let apq = a[(p, q)];
    let magnitude = apq.norm();
    if magnitude == 0.0 {
        return;
    }
    let phase = apq / magnitude;
    let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * magnitude);
    let t = if tau >= 0.0 {
        1.0 / (tau + math::hypot(1.0, tau))
    } else {
        -1.0 / (-tau + math::hypot(1.0, tau))
    };
    let c = 1.0 / math::hypot(1.0, t);
    let s = t * c;

    // Unitary J equal to the identity outside the (p, q) block:
    // J_pp = c, J_pq = s, J_qp = -s conj(phase), J_qq = c conj(phase).
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    // A <- A J and V <- V J
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
    // A <- J^dagger A
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Roundoff negatives are clamped to zero.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eigh(m)?;
    let roots = eig.values.clamp_nonnegative()?.map(math::sqrt);
    // `map` re-sorts; the square root is monotone so the order is unchanged.
    let d = ComplexMatrix::diagonal(roots.values())?;
    Ok(eig.vectors * d * eig.vectors.dagger())
}

/// Spectrum of the product `A B` for positive semidefinite Hermitian `A`
/// and Hermitian `B`, computed as the spectrum of the Hermitian matrix
/// `sqrt(A) B sqrt(A)` (same eigenvalues as `A B`). Results are clamped at
/// zero from below.
pub fn eigvals_general_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Spectrum> {
    a.check_same_dim(b)?;
    check_hermitian(b)?;
    let root = sqrt_psd(a)?;
    let product = root * *b * root;
    let defect = product.hermiticity_defect();
    if defect > IMAGINARY_TOL || defect.is_nan() {
        return Err(Error::ComplexEigenvalue { imag: defect });
    }
    let product = product.hermitian_part();
    let spectrum = if product.dim == 2 {
        eigvals_hermitian(&product)?
    } else {
        jacobi(&product)?.values
    };
    spectrum.clamp_nonnegative()
}

/// Von Neumann entropy `-Tr(rho log2 rho)` in bits.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    check_density(rho)?;
    let spectrum = eigvals_hermitian(rho)?.clamp_nonnegative()?;
    Ok(entropy_of_spectrum(&spectrum))
}

/// Shannon entropy of an eigenvalue list after clamping each value to `[0, 1]`.
pub fn entropy_of_spectrum(spectrum: &Spectrum) -> f64 {
    let mut clamped = [0.0; 4];
    for (slot, &v) in clamped.iter_mut().zip(spectrum.values()) {
        *slot = v.clamp(0.0, 1.0);
    }
    math::shannon(&clamped[..spectrum.len()]).max(0.0)
}
