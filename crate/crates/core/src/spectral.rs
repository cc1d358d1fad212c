//! Spectra, intervals, eigenvalue computation and the counting function.
//!
//! All intervals follow one global convention: closed on the left, open on
//! the right, so `[y, ∞)` counts eigenvalues `λ >= y`. Complex Hermitian
//! matrices are eigensolved through the real-symmetric doubling embedding
//! `[[A, -B], [B, A]]`, whose spectrum is that of `A + iB` with every value
//! doubled; the pairing step checks the duplicates agree before halving.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("interval endpoints invalid: lower={lower}, upper={upper}")]
    BadInterval { lower: f64, upper: f64 },
    #[error("matrix departs from Hermitian symmetry by {deviation:e} at entry ({row}, {col})")]
    NotHermitian { row: usize, col: usize, deviation: f64 },
    #[error("embedded eigenvalue pair differs by {gap:e} at position {index}")]
    PairMismatch { index: usize, gap: f64 },
    #[error("spectrum values must be sorted ascending and finite")]
    UnsortedSpectrum,
    #[error("eigenvalue index {i} outside 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("threshold {0} ties an eigenvalue exactly; the duality relation assumes no ties")]
    ExactTie(f64),
}

/// Whether eigenvalues are on the raw matrix scale or divided by `sqrt(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scale {
    Raw,
    Normalized,
}

/// A sorted set of real eigenvalues together with its scale tag.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    scale: Scale,
}

impl Spectrum {
    /// Wrap already-sorted values; rejects unsorted or non-finite input.
    pub fn from_sorted(values: Vec<f64>, scale: Scale) -> Result<Self, SpectralError> {
        if values.iter().any(|v| !v.is_finite()) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(SpectralError::UnsortedSpectrum);
        }
        Ok(Spectrum { values, scale })
    }

    /// Sort and wrap.
    pub fn from_unsorted(mut values: Vec<f64>, scale: Scale) -> Result<Self, SpectralError> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(SpectralError::UnsortedSpectrum);
        }
        values.sort_by(|a, b| a.total_cmp(b));
        Ok(Spectrum { values, scale })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    /// 1-indexed eigenvalue access, `1 <= i <= n`.
    pub fn eigenvalue(&self, i: usize) -> Result<f64, SpectralError> {
        if i < 1 || i > self.values.len() {
            return Err(SpectralError::IndexOutOfRange { i, n: self.values.len() });
        }
        Ok(self.values[i - 1])
    }

    /// Divide a raw spectrum by `sqrt(n)`.
    pub fn normalized(&self) -> Spectrum {
        match self.scale {
            Scale::Normalized => self.clone(),
            Scale::Raw => {
                let root = (self.values.len() as f64).sqrt();
                Spectrum {
                    values: self.values.iter().map(|v| v / root).collect(),
                    scale: Scale::Normalized,
                }
            }
        }
    }
}

/// Half-open interval `[lower, upper)`; either endpoint may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lower: f64,
    upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self, SpectralError> {
        if lower.is_nan() || upper.is_nan() || lower > upper {
            return Err(SpectralError::BadInterval { lower, upper });
        }
        Ok(Interval { lower, upper })
    }

    /// `[y, ∞)`
    pub fn half_line(y: f64) -> Self {
        Interval { lower: y, upper: f64::INFINITY }
    }

    /// `(-∞, ∞)`
    pub fn whole_line() -> Self {
        Interval { lower: f64::NEG_INFINITY, upper: f64::INFINITY }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lower && x < self.upper
    }

    pub fn is_empty(&self) -> bool {
        self.lower >= self.upper
    }

    /// Scale both endpoints by `c > 0` (used to move between the normalized
    /// and raw eigenvalue scales).
    pub fn scaled(&self, c: f64) -> Interval {
        Interval { lower: self.lower * c, upper: self.upper * c }
    }
}

/// A real-symmetric or complex-Hermitian matrix ready for eigensolving.
#[derive(Debug, Clone)]
pub enum HermitianMatrix {
    Real(DMatrix<f64>),
    Complex(DMatrix<Complex64>),
}

impl HermitianMatrix {
    pub fn dim(&self) -> usize {
        match self {
            HermitianMatrix::Real(m) => m.nrows(),
            HermitianMatrix::Complex(m) => m.nrows(),
        }
    }

    pub fn trace(&self) -> f64 {
        match self {
            HermitianMatrix::Real(m) => m.trace(),
            HermitianMatrix::Complex(m) => m.trace().re,
        }
    }

    fn check_hermitian(&self, tol: f64) -> Result<(), SpectralError> {
        match self {
            HermitianMatrix::Real(m) => {
                for i in 0..m.nrows() {
                    for j in (i + 1)..m.ncols() {
                        let dev = (m[(i, j)] - m[(j, i)]).abs();
                        if dev > tol {
                            return Err(SpectralError::NotHermitian { row: i, col: j, deviation: dev });
                        }
                    }
                }
            }
            HermitianMatrix::Complex(m) => {
                for i in 0..m.nrows() {
                    for j in i..m.ncols() {
                        let dev = (m[(i, j)] - m[(j, i)].conj()).norm();
                        if dev > tol {
                            return Err(SpectralError::NotHermitian { row: i, col: j, deviation: dev });
                        }
                    }
                }
            }
        }
    }
}

/// All eigenvalues of a Hermitian/symmetric matrix, sorted ascending, on the
/// raw scale. Complex input goes through the `[[A, -B], [B, A]]` embedding.
pub fn eigenvalues(matrix: &HermitianMatrix) -> Result<Spectrum, SpectralError> {
    matrix.check_hermitian(1e-12)?;
    let values = match matrix {
        HermitianMatrix::Real(m) => {
            let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
            v.sort_by(|a, b| a.total_cmp(b));
            v
        }
        HermitianMatrix::Complex(m) => {
            let n = m.nrows();
            let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    let z = m[(i, j)];
                    big[(i, j)] = z.re;
                    big[(n + i, n + j)] = z.re;
                    big[(i, n + j)] = -z.im;
                    big[(n + i, j)] = z.im;
                }
            }
            let mut doubled: Vec<f64> = big.symmetric_eigenvalues().iter().copied().collect();
            doubled.sort_by(|a, b| a.total_cmp(b));
            let mut v = Vec::with_capacity(n);
            let scale = doubled.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
            for k in 0..n {
                let gap = (doubled[2 * k + 1] - doubled[2 * k]).abs();
                if gap > 1e-9 * scale.max(1.0) {
                    return Err(SpectralError::PairMismatch { index: k, gap });
                }
                v.push(0.5 * (doubled[2 * k] + doubled[2 * k + 1]));
            }
            v
        }
    };
    Spectrum::from_sorted(values, Scale::Raw)
}

/// Number of eigenvalues in `interval` under the `[lower, upper)` convention.
pub fn counting(spectrum: &Spectrum, interval: &Interval) -> usize {
    let v = spectrum.values();
    let below_lower = if interval.lower() == f64::NEG_INFINITY {
        0
    } else {
        v.partition_point(|&x| x < interval.lower())
    };
    let below_upper = if interval.upper() == f64::INFINITY {
        v.len()
    } else {
        v.partition_point(|&x| x < interval.upper())
    };
    below_upper - below_lower
}

/// The counting/eigenvalue duality: `N_{[y,∞)} <= n - i` exactly when
/// `λ_i <= y`. Returns whether the equivalence holds (a correct
/// implementation always returns `true`); exact ties at `y` are rejected.
pub fn duality_check(spectrum: &Spectrum, y: f64, i: usize) -> Result<bool, SpectralError> {
    let n = spectrum.n();
    if i < 1 || i > n {
        return Err(SpectralError::IndexOutOfRange { i, n });
    }
    if spectrum.values().iter().any(|&v| v == y) {
        return Err(SpectralError::ExactTie(y));
    }
    let count = counting(spectrum, &Interval::half_line(y));
    let left = count <= n - i;
    let right = spectrum.eigenvalue(i)? <= y;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::dmatrix;

    #[test]
    fn real_two_by_two() {
        let m = HermitianMatrix::Real(dmatrix![0.0, 1.0; 1.0, 0.0]);
        let s = eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(s.values()[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values()[1], 1.0, epsilon = 1e-12);
        assert_eq!(s.scale(), Scale::Raw);
    }

    #[test]
    fn pauli_type_complex_matrix() {
        let i = Complex64::new(0.0, 1.0);
        let zero = Complex64::new(0.0, 0.0);
        let m = HermitianMatrix::Complex(dmatrix![zero, i; -i, zero]);
        let s = eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(s.values()[0], -1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(s.values()[1], 1.0, epsilon = 1e-10);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = HermitianMatrix::Real(dmatrix![0.0, 1.0; 0.5, 0.0]);
        assert!(matches!(eigenvalues(&m), Err(SpectralError::NotHermitian { .. })));
        let z = Complex64::new(0.3, 0.2);
        let m = HermitianMatrix::Complex(dmatrix![Complex64::new(0.0, 0.4), z; z.conj(), Complex64::new(1.0, 0.0)]);
        // complex diagonal entry breaks hermiticity
        assert!(eigenvalues(&m).is_err());
    }

    #[test]
    fn counting_conventions() {
        let s = Spectrum::from_sorted(vec![-1.0, 0.0, 2.0], Scale::Raw).unwrap();
        assert_eq!(counting(&s, &Interval::half_line(0.5)), 1);
        assert_eq!(counting(&s, &Interval::whole_line()), 3);
        // closed-left, open-right: 0 in, 2 out
        assert_eq!(counting(&s, &Interval::new(0.0, 2.0).unwrap()), 1);
        assert_eq!(counting(&s, &Interval::new(5.0, 9.0).unwrap()), 0);
        assert_eq!(counting(&s, &Interval::half_line(-1.0)), 3);
    }

    #[test]
    fn counting_monotone_in_interval() {
        let s = Spectrum::from_sorted(vec![-2.0, -0.5, 0.1, 0.7, 3.0], Scale::Raw).unwrap();
        let inner = Interval::new(-0.4, 0.8).unwrap();
        let outer = Interval::new(-1.0, 2.0).unwrap();
        assert!(counting(&s, &inner) <= counting(&s, &outer));
    }

    #[test]
    fn duality_examples() {
        let s = Spectrum::from_sorted(vec![-1.0, 0.0, 2.0], Scale::Raw).unwrap();
        assert!(duality_check(&s, 0.5, 2).unwrap());
        assert!(duality_check(&s, -2.0, 1).unwrap());
        assert!(matches!(duality_check(&s, 0.0, 2), Err(SpectralError::ExactTie(_))));
        assert!(duality_check(&s, 0.5, 4).is_err());
    }

    #[test]
    fn spectrum_normalization_is_exact_division() {
        let s = Spectrum::from_sorted(vec![-3.0, 0.0, 1.0, 5.0], Scale::Raw).unwrap();
        let w = s.normalized();
        let root = 4.0f64.sqrt();
        for (a, b) in s.values().iter().zip(w.values()) {
            assert_eq!(*b, *a / root);
        }
        assert_eq!(w.scale(), Scale::Normalized);
    }

    #[test]
    fn rejects_unsorted_or_nonfinite() {
        assert!(Spectrum::from_sorted(vec![1.0, 0.0], Scale::Raw).is_err());
        assert!(Spectrum::from_sorted(vec![0.0, f64::NAN], Scale::Raw).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }
}
