//! Hermitian matrix Jordan algebras `h_n(K)` over `R, C, H, O` and `C⊗O`.
//!
//! Every entry is stored as a [`Bioctonion`]; the ground tag restricts which
//! coordinates may be nonzero (`C` uses `e1` as its imaginary unit, `H` uses
//! `e1, e2, e3`). Only the diagonal and the strict upper triangle are stored,
//! so Hermiticity `x_ji = tilde(x_ij)` holds by construction.
//!
//! Scalars of the algebra are complex: they are real for every division
//! algebra ground and genuinely complex only over `C⊗O`.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::division::{Bioctonion, Octonion};
use crate::error::{Error, Result};
use crate::{scaled_tolerance, ABS_TOLERANCE_FLOOR};

/// The algebra the matrix entries are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ground {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "O")]
    Octonion,
    #[serde(rename = "CO", alias = "C⊗O", alias = "CxO")]
    Bioctonion,
}

impl Ground {
    pub const ALL: [Ground; 5] = [
        Ground::Real,
        Ground::Complex,
        Ground::Quaternion,
        Ground::Octonion,
        Ground::Bioctonion,
    ];

    pub const DIVISION: [Ground; 4] = [
        Ground::Real,
        Ground::Complex,
        Ground::Quaternion,
        Ground::Octonion,
    ];

    /// Number of octonion coordinates the ground may occupy.
    pub fn units(self) -> usize {
        match self {
            Ground::Real => 1,
            Ground::Complex => 2,
            Ground::Quaternion => 4,
            Ground::Octonion | Ground::Bioctonion => 8,
        }
    }

    pub fn has_complex_coefficients(self) -> bool {
        self == Ground::Bioctonion
    }

    pub fn is_division(self) -> bool {
        self != Ground::Bioctonion
    }

    /// Whether the entries multiply associatively.
    pub fn is_associative(self) -> bool {
        matches!(self, Ground::Real | Ground::Complex | Ground::Quaternion)
    }

    pub fn label(self) -> &'static str {
        match self {
            Ground::Real => "R",
            Ground::Complex => "C",
            Ground::Quaternion => "H",
            Ground::Octonion => "O",
            Ground::Bioctonion => "CO",
        }
    }

    /// Whether `x` lies in the subalgebra this ground denotes.
    pub fn contains(self, x: &Bioctonion) -> bool {
        let k = self.units();
        let re_ok = x.re.0[k..].iter().all(|&c| c == 0.0);
        let im_ok = if self.has_complex_coefficients() {
            true
        } else {
            x.im.is_zero()
        };
        re_ok && im_ok
    }
}

impl fmt::Display for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Ground {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(Ground::Real),
            "C" | "c" | "complex" => Ok(Ground::Complex),
            "H" | "h" | "quaternion" => Ok(Ground::Quaternion),
            "O" | "o" | "octonion" => Ok(Ground::Octonion),
            "CO" | "co" | "C⊗O" | "CxO" | "bioctonion" => Ok(Ground::Bioctonion),
            other => Err(Error::Invalid(format!("unknown ground algebra {other:?}"))),
        }
    }
}

#[inline]
fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// An `n x n` Hermitian matrix over a ground algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianElement {
    ground: Ground,
    n: usize,
    diag: Vec<Complex64>,
    upper: Vec<Bioctonion>,
}

impl HermitianElement {
    /// Builds an element from its diagonal and its upper triangle in
    /// row-major order `(1,2), (1,3), .., (n-1,n)`.
    pub fn new(ground: Ground, diag: Vec<Complex64>, upper: Vec<Bioctonion>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::Invalid("Hermitian element needs n >= 1".into()));
        }
        if !ground.is_associative() && n > 3 {
            return Err(Error::NotJordan { ground, n });
        }
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(Error::WrongLength {
                field: "upper",
                expected,
                found: upper.len(),
            });
        }
        for (i, z) in diag.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite("diagonal"));
            }
            if z.im != 0.0 && !ground.has_complex_coefficients() {
                return Err(Error::OutsideGround {
                    ground,
                    position: format!("({0},{0})", i + 1),
                });
            }
        }
        let out = HermitianElement {
            ground,
            n,
            diag,
            upper,
        };
        for i in 0..n {
            for j in i + 1..n {
                let x = &out.upper[upper_index(n, i, j)];
                if !x.is_finite() {
                    return Err(Error::NonFinite("upper triangle"));
                }
                if !ground.contains(x) {
                    return Err(Error::OutsideGround {
                        ground,
                        position: format!("({},{})", i + 1, j + 1),
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn zero(ground: Ground, n: usize) -> Self {
        HermitianElement {
            ground,
            n,
            diag: vec![Complex64::new(0.0, 0.0); n],
            upper: vec![Bioctonion::ZERO; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn identity(ground: Ground, n: usize) -> Self {
        let mut x = Self::zero(ground, n);
        x.diag.fill(Complex64::new(1.0, 0.0));
        x
    }

    /// Real diagonal matrix.
    pub fn diagonal(ground: Ground, values: &[f64]) -> Self {
        let mut x = Self::zero(ground, values.len());
        for (d, &v) in x.diag.iter_mut().zip(values) {
            *d = Complex64::new(v, 0.0);
        }
        x
    }

    /// Matrix unit `E_kk` (0-based).
    pub fn matrix_unit(ground: Ground, n: usize, k: usize) -> Self {
        let mut x = Self::zero(ground, n);
        x.diag[k] = Complex64::new(1.0, 0.0);
        x
    }

    /// Returns a copy with entry `(i, j)` (0-based, `i != j`) set to `value`
    /// and `(j, i)` to its tilde conjugate. Diagonal positions take the
    /// scalar part.
    pub fn with_entry(mut self, i: usize, j: usize, value: Bioctonion) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::Invalid(format!(
                "entry ({}, {}) outside a {}x{} matrix",
                i + 1,
                j + 1,
                self.n,
                self.n
            )));
        }
        if !self.ground.contains(&value) {
            return Err(Error::OutsideGround {
                ground: self.ground,
                position: format!("({},{})", i + 1, j + 1),
            });
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.diag[i] = value.scalar_part(),
            std::cmp::Ordering::Less => self.upper[upper_index(self.n, i, j)] = value,
            std::cmp::Ordering::Greater => self.upper[upper_index(self.n, j, i)] = value.tilde(),
        }
        Ok(self)
    }

    #[inline]
    pub fn ground(&self) -> Ground {
        self.ground
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diag(&self) -> &[Complex64] {
        &self.diag
    }

    /// Upper triangle in row-major order.
    pub fn upper(&self) -> &[Bioctonion] {
        &self.upper
    }

    /// Entry `(i, j)`, 0-based.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Bioctonion {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Bioctonion::scalar(self.diag[i]),
            std::cmp::Ordering::Less => self.upper[upper_index(self.n, i, j)],
            std::cmp::Ordering::Greater => self.upper[upper_index(self.n, j, i)].tilde(),
        }
    }

    /// Dense row-major copy of all entries.
    pub fn to_dense(&self) -> Vec<Bioctonion> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.entry(i, j));
            }
        }
        out
    }

    /// Rebuilds an element from per-entry values for `i <= j`.
    pub fn from_fn(
        ground: Ground,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Bioctonion,
    ) -> Self {
        let mut x = Self::zero(ground, n);
        for i in 0..n {
            x.diag[i] = f(i, i).scalar_part();
            for j in i + 1..n {
                x.upper[upper_index(n, i, j)] = f(i, j);
            }
        }
        x
    }

    /// Largest absolute real coordinate over all stored entries.
    pub fn max_norm(&self) -> f64 {
        let d = self
            .diag
            .iter()
            .fold(0.0_f64, |m, z| m.max(z.re.abs()).max(z.im.abs()));
        self.upper.iter().fold(d, |m, x| m.max(x.max_abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.diag
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
            && self.upper.iter().all(Bioctonion::is_finite)
    }

    /// Rejects complex diagonal entries, matching real-diagonal `C⊗O`
    /// matrices.
    pub fn check_real_diagonal(&self) -> Result<()> {
        for (index, z) in self.diag.iter().enumerate() {
            if z.im != 0.0 {
                return Err(Error::ComplexDiagonal { index, imag: z.im });
            }
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.ground != other.ground {
            return Err(Error::ShapeMismatch {
                left_n: self.n,
                left_ground: self.ground,
                right_n: other.n,
                right_ground: other.ground,
            });
        }
        Ok(())
    }

    fn require_n(&self, op: &'static str, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::UnsupportedSize {
                op,
                expected: n,
                found: self.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_map(other, |a, b| a + b, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_map(other, |a, b| a - b, |a, b| a - b))
    }

    fn zip_map(
        &self,
        other: &Self,
        fd: impl Fn(Complex64, Complex64) -> Complex64,
        fu: impl Fn(Bioctonion, Bioctonion) -> Bioctonion,
    ) -> Self {
        HermitianElement {
            ground: self.ground,
            n: self.n,
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(&a, &b)| fd(a, b))
                .collect(),
            upper: self
                .upper
                .iter()
                .zip(&other.upper)
                .map(|(&a, &b)| fu(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        HermitianElement {
            ground: self.ground,
            n: self.n,
            diag: self.diag.iter().map(|z| z * s).collect(),
            upper: self.upper.iter().map(|x| x.scale(s)).collect(),
        }
    }

    /// Multiplies by an algebra scalar. A nonzero imaginary part is only
    /// meaningful over `C⊗O`.
    pub fn scale_complex(&self, z: Complex64) -> Result<Self> {
        if z.im != 0.0 && !self.ground.has_complex_coefficients() {
            return Err(Error::UnsupportedGround {
                op: "complex scaling",
                ground: self.ground,
            });
        }
        Ok(self.scale_complex_unchecked(z))
    }

    fn scale_complex_unchecked(&self, z: Complex64) -> Self {
        HermitianElement {
            ground: self.ground,
            n: self.n,
            diag: self.diag.iter().map(|d| d * z).collect(),
            upper: self.upper.iter().map(|x| x.scale_complex(z)).collect(),
        }
    }

    /// `self + s·I`.
    pub fn shift(&self, s: Complex64) -> Self {
        let mut x = self.clone();
        for d in &mut x.diag {
            *d += s;
        }
        x
    }

    pub fn trace(&self) -> Complex64 {
        self.diag.iter().sum()
    }

    /// Trace as a real number; the imaginary part is dropped, so only use on
    /// division algebra grounds.
    pub fn trace_real(&self) -> f64 {
        self.trace().re
    }

    /// Jordan product `a∘b = ½(ab + ba)` computed entrywise without forming
    /// associative matrix powers.
    pub fn jordan(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.jordan_unchecked(other))
    }

    pub(crate) fn jordan_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let a = self.to_dense();
        let b = other.to_dense();
        // each term is a_ik b_kj + b_ik a_kj so swapping a and b is bitwise exact
        let entry = |i: usize, j: usize| -> Bioctonion {
            let mut s = Bioctonion::ZERO;
            for k in 0..n {
                s += a[i * n + k] * b[k * n + j] + b[i * n + k] * a[k * n + j];
            }
            s.scale(0.5)
        };
        let mut out = Self::zero(self.ground, n);
        for i in 0..n {
            let d = entry(i, i);
            debug_assert!(
                {
                    let mut resid = d;
                    resid.re.0[0] = 0.0;
                    resid.im.0[0] = 0.0;
                    resid.max_abs() <= 1e-9 * (1.0 + self.max_norm() * other.max_norm() * n as f64)
                },
                "diagonal of a Jordan product left the scalars"
            );
            out.diag[i] = if self.ground.has_complex_coefficients() {
                d.scalar_part()
            } else {
                Complex64::new(d.re.0[0], 0.0)
            };
            for j in i + 1..n {
                out.upper[upper_index(n, i, j)] = entry(i, j);
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.jordan_unchecked(self)
    }

    /// `tr(a∘b)` through the entrywise pairing
    /// `Σ a_ii b_ii + 2 Σ_{i<j} <a_ij, b_ij>`.
    pub fn trace_pairing(&self, other: &Self) -> Result<Complex64> {
        self.check_same_shape(other)?;
        let d: Complex64 = self.diag.iter().zip(&other.diag).map(|(a, b)| a * b).sum();
        let off: Complex64 = self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(x, y)| {
                let rr = x.re.dot(&y.re) - x.im.dot(&y.im);
                let ri = x.re.dot(&y.im) + x.im.dot(&y.re);
                Complex64::new(rr, ri)
            })
            .sum();
        Ok(d + off * 2.0)
    }

    /// Freudenthal product
    /// `a∗b = a∘b − ½ tr(b) a − ½ tr(a) b − ½ (tr(a∘b) − tr(a) tr(b)) I`,
    /// defined for `n = 3`.
    pub fn freudenthal(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        self.require_n("Freudenthal product", 3)?;
        let ab = self.jordan_unchecked(other);
        let ta = self.trace();
        let tb = other.trace();
        let tab = ab.trace();
        let half = Complex64::new(0.5, 0.0);
        let mut out = ab;
        out = out.sub_scaled(self, tb * half);
        out = out.sub_scaled(other, ta * half);
        Ok(out.shift(-(tab - ta * tb) * half))
    }

    fn sub_scaled(&self, other: &Self, z: Complex64) -> Self {
        let scaled = other.scale_complex_unchecked(z);
        self.zip_map(&scaled, |a, b| a - b, |a, b| a - b)
    }

    /// Jordan adjugate `a∗a`.
    pub fn sharp(&self) -> Result<Self> {
        self.freudenthal(self)
    }

    /// Characteristic data over the algebra scalars: `(tr, σ, det)` with
    /// `σ = tr(Φ∗Φ)` and `det = ⅓ tr((Φ∗Φ)∘Φ)`.
    pub fn characteristic_complex(&self) -> Result<[Complex64; 3]> {
        self.require_n("characteristic coefficients", 3)?;
        let sharp = self.freudenthal(self)?;
        let sigma = sharp.trace();
        let det = sharp.jordan_unchecked(self).trace() / 3.0;
        Ok([self.trace(), sigma, det])
    }

    /// Real characteristic coefficients of an element over a division
    /// algebra.
    pub fn characteristic(&self) -> Result<Characteristic> {
        if !self.ground.is_division() {
            return Err(Error::UnsupportedGround {
                op: "real characteristic coefficients",
                ground: self.ground,
            });
        }
        let [t, s, d] = self.characteristic_complex()?;
        Ok(Characteristic {
            trace: t.re,
            sigma: s.re,
            det: d.re,
        })
    }

    /// Determinant for `n = 2` (`αβ − N(φ)`), `n = 3` (cubic norm) and
    /// any `n` over `R` or `C`.
    pub fn determinant(&self) -> Result<Complex64> {
        match self.n {
            1 => Ok(self.diag[0]),
            2 => Ok(self.diag[0] * self.diag[1] - self.upper[0].norm_form()),
            3 => Ok(self.characteristic_complex()?[2]),
            _ => {
                let m = self.to_complex_matrix()?;
                Ok(m.determinant())
            }
        }
    }

    /// Complex matrix of an element over `R` or `C`, mapping `e1` to `i`.
    pub fn to_complex_matrix(&self) -> Result<DMatrix<Complex64>> {
        if !matches!(self.ground, Ground::Real | Ground::Complex) {
            return Err(Error::UnsupportedGround {
                op: "complex matrix representation",
                ground: self.ground,
            });
        }
        let n = self.n;
        Ok(DMatrix::from_fn(n, n, |i, j| {
            let x = self.entry(i, j);
            Complex64::new(x.re.0[0], x.re.0[1])
        }))
    }

    /// Inverse of [`to_complex_matrix`](Self::to_complex_matrix). The input
    /// must be Hermitian within `tol` (relative to its largest entry).
    pub fn from_complex_matrix(m: &DMatrix<Complex64>, tol: f64) -> Result<Self> {
        let n = m.nrows();
        if m.ncols() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: m.ncols(),
            });
        }
        let scale = m.iter().fold(0.0_f64, |a, z| a.max(z.norm()));
        let limit = scaled_tolerance(tol, scale);
        for i in 0..n {
            if m[(i, i)].im.abs() > limit {
                return Err(Error::Invalid(format!(
                    "matrix is not Hermitian: diagonal ({0},{0}) has imaginary part {1:e}",
                    i + 1,
                    m[(i, i)].im
                )));
            }
            for j in i + 1..n {
                if (m[(i, j)] - m[(j, i)].conj()).norm() > limit {
                    return Err(Error::Invalid(format!(
                        "matrix is not Hermitian at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::from_fn(Ground::Complex, n, |i, j| {
            if i == j {
                Bioctonion::scalar(Complex64::new(m[(i, i)].re, 0.0))
            } else {
                let z = m[(i, j)];
                let mut c = [0.0; 8];
                c[0] = z.re;
                c[1] = z.im;
                Octonion(c).into()
            }
        }))
    }

    /// Largest entrywise difference, suitable for tolerance checks.
    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.max_norm())
    }

    /// Maps an element to the same matrix read over a larger ground.
    pub fn embed(&self, ground: Ground) -> Result<Self> {
        if ground.units() < self.ground.units()
            || (self.ground.has_complex_coefficients() && !ground.has_complex_coefficients())
        {
            return Err(Error::UnsupportedGround {
                op: "embedding into a smaller ground",
                ground,
            });
        }
        let mut x = self.clone();
        x.ground = ground;
        if !ground.is_associative() && x.n > 3 {
            return Err(Error::NotJordan { ground, n: x.n });
        }
        Ok(x)
    }
}

/// Coefficients of `λ³ − tr·λ² + σ·λ − det`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Characteristic {
    pub trace: f64,
    pub sigma: f64,
    pub det: f64,
}

/// `a∘b`.
pub fn jordan_product(a: &HermitianElement, b: &HermitianElement) -> Result<HermitianElement> {
    a.jordan(b)
}

/// `a∗b`, `n = 3` only.
pub fn freudenthal_product(a: &HermitianElement, b: &HermitianElement) -> Result<HermitianElement> {
    a.freudenthal(b)
}

pub fn characteristic_coefficients(x: &HermitianElement) -> Result<Characteristic> {
    x.characteristic()
}

/// Invariant trilinear form `t(a, b, c) = tr(a∘(b∘c))` on `h_3` over a
/// division algebra.
pub fn trilinear_form(
    a: &HermitianElement,
    b: &HermitianElement,
    c: &HermitianElement,
) -> Result<f64> {
    a.check_same_shape(b)?;
    a.check_same_shape(c)?;
    a.require_n("trilinear form", 3)?;
    if !a.ground.is_division() {
        return Err(Error::UnsupportedGround {
            op: "real trilinear form",
            ground: a.ground,
        });
    }
    Ok(a.trace_pairing(&b.jordan_unchecked(c))?.re)
}

/// Full polarization of the determinant, normalized so `c(a, a, a) = det(a)`.
pub fn cubic_form(
    a: &HermitianElement,
    b: &HermitianElement,
    c: &HermitianElement,
) -> Result<Complex64> {
    a.check_same_shape(b)?;
    a.check_same_shape(c)?;
    a.require_n("cubic form", 3)?;
    let det = |x: &HermitianElement| -> Result<Complex64> { x.determinant() };
    let ab = a.add(b)?;
    let bc = b.add(c)?;
    let ac = a.add(c)?;
    let abc = ab.add(c)?;
    let s = det(&abc)? - det(&ab)? - det(&bc)? - det(&ac)? + det(a)? + det(b)? + det(c)?;
    Ok(s / 6.0)
}

/// Block split of an `(n+1) x (n+1)` element along its last row and column.
#[derive(Clone, Debug, PartialEq)]
pub struct Peeled {
    /// Leading `n x n` block.
    pub block: HermitianElement,
    /// Last column above the corner, `x_{i, n+1}` for `i = 1..n`.
    pub column: Vec<Bioctonion>,
    /// Corner entry `x_{n+1, n+1}`.
    pub corner: Complex64,
}

pub fn peel(x: &HermitianElement) -> Result<Peeled> {
    let m = x.n;
    if m < 2 {
        return Err(Error::Invalid(
            "peel needs a matrix of size at least 2".into(),
        ));
    }
    let n = m - 1;
    let block = HermitianElement::from_fn(x.ground, n, |i, j| x.entry(i, j));
    let column = (0..n).map(|i| x.entry(i, n)).collect();
    Ok(Peeled {
        block,
        column,
        corner: x.diag[n],
    })
}

pub fn unpeel(p: &Peeled) -> Result<HermitianElement> {
    let n = p.block.n;
    if p.column.len() != n {
        return Err(Error::WrongLength {
            field: "column",
            expected: n,
            found: p.column.len(),
        });
    }
    let ground = p.block.ground;
    let mut diag = p.block.diag.clone();
    diag.push(p.corner);
    let mut upper = Vec::with_capacity((n + 1) * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            upper.push(p.block.entry(i, j));
        }
        upper.push(p.column[i]);
    }
    HermitianElement::new(ground, diag, upper)
}

/// Congruence `g x g†` of a complex Hermitian matrix.
pub fn congruence_action(g: &DMatrix<Complex64>, x: &HermitianElement) -> Result<HermitianElement> {
    if x.ground != Ground::Complex {
        return Err(Error::UnsupportedGround {
            op: "congruence action",
            ground: x.ground,
        });
    }
    if g.nrows() != x.n || g.ncols() != x.n {
        return Err(Error::DimensionMismatch {
            left: g.nrows().max(g.ncols()),
            right: x.n,
        });
    }
    let m = x.to_complex_matrix()?;
    let y = g * m * g.adjoint();
    // symmetrize away rounding before reading back the upper triangle
    let y = (&y + y.adjoint()) * Complex64::new(0.5, 0.0);
    HermitianElement::from_complex_matrix(&y, ABS_TOLERANCE_FLOOR)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(k: usize) -> Bioctonion {
        Bioctonion::unit(k)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Brute-force ½(ab + ba) on dense octonionic matrices.
    fn dense_jordan(a: &HermitianElement, b: &HermitianElement) -> Vec<Bioctonion> {
        let n = a.n();
        let (a, b) = (a.to_dense(), b.to_dense());
        let mut out = vec![Bioctonion::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut ab = Bioctonion::ZERO;
                let mut ba = Bioctonion::ZERO;
                for k in 0..n {
                    ab += a[i * n + k] * b[k * n + j];
                    ba += b[i * n + k] * a[k * n + j];
                }
                out[i * n + j] = (ab + ba).scale(0.5);
            }
        }
        out
    }

    #[test]
    fn upper_triangle_order() {
        assert_eq!(upper_index(3, 0, 1), 0);
        assert_eq!(upper_index(3, 0, 2), 1);
        assert_eq!(upper_index(3, 1, 2), 2);
        assert_eq!(upper_index(4, 2, 3), 5);
    }

    #[test]
    fn rejects_entries_outside_ground() {
        let err = HermitianElement::zero(Ground::Complex, 3).with_entry(0, 1, o(2));
        assert!(matches!(err, Err(Error::OutsideGround { .. })));
        let err =
            HermitianElement::new(Ground::Octonion, vec![c(1.0); 4], vec![Bioctonion::ZERO; 6]);
        assert!(matches!(err, Err(Error::NotJordan { .. })));
        let err = HermitianElement::new(
            Ground::Real,
            vec![Complex64::new(1.0, 1.0), c(0.0)],
            vec![Bioctonion::ZERO],
        );
        assert!(matches!(err, Err(Error::OutsideGround { .. })));
    }

    #[test]
    fn hermiticity_by_construction() {
        let x = HermitianElement::zero(Ground::Octonion, 3)
            .with_entry(2, 0, o(5) + o(0))
            .unwrap();
        assert_eq!(x.entry(2, 0), o(5) + o(0));
        assert_eq!(x.entry(0, 2), (o(5) + o(0)).tilde());
    }

    #[test]
    fn diagonal_product() {
        let a = HermitianElement::diagonal(Ground::Octonion, &[1.0, 2.0, 3.0]);
        let b = HermitianElement::diagonal(Ground::Octonion, &[4.0, -1.0, 0.5]);
        assert_eq!(
            a.jordan(&b).unwrap(),
            HermitianElement::diagonal(Ground::Octonion, &[4.0, -2.0, 1.5])
        );
    }

    #[test]
    fn off_diagonal_octonionic_pair_matches_dense_product() {
        let a = HermitianElement::zero(Ground::Octonion, 3)
            .with_entry(0, 1, o(1))
            .unwrap();
        let b = HermitianElement::zero(Ground::Octonion, 3)
            .with_entry(1, 2, o(2))
            .unwrap();
        let ab = a.jordan(&b).unwrap();
        let dense = dense_jordan(&a, &b);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(ab.entry(i, j), dense[i * 3 + j], "({i},{j})");
            }
        }
        // ½(e1 e2) at (1,3), nothing on the diagonal
        assert_eq!(ab.entry(0, 2), o(3).scale(0.5));
        assert_eq!(ab.diag(), &[c(0.0); 3]);
    }

    #[test]
    fn freudenthal_examples() {
        let i3 = HermitianElement::identity(Ground::Octonion, 3);
        assert_eq!(i3.freudenthal(&i3).unwrap(), i3);
        let p = HermitianElement::matrix_unit(Ground::Octonion, 3, 0);
        assert_eq!(p.sharp().unwrap().max_norm(), 0.0);
        let d = HermitianElement::diagonal(Ground::Real, &[2.0, 3.0, 5.0]);
        assert_eq!(
            d.sharp().unwrap(),
            HermitianElement::diagonal(Ground::Real, &[15.0, 10.0, 6.0])
        );
        let two = HermitianElement::identity(Ground::Real, 2);
        assert!(matches!(two.sharp(), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn characteristic_examples() {
        let d = HermitianElement::diagonal(Ground::Octonion, &[1.0, 2.0, 3.0]);
        let ch = d.characteristic().unwrap();
        assert_eq!((ch.trace, ch.sigma, ch.det), (6.0, 11.0, 6.0));
        let p = HermitianElement::matrix_unit(Ground::Octonion, 3, 0);
        let ch = p.characteristic().unwrap();
        assert_eq!((ch.trace, ch.sigma, ch.det), (1.0, 0.0, 0.0));
        // eigenvalues ±1, 0 of the embedded 2x2 block [[0, 1], [1, 0]]
        let x = HermitianElement::zero(Ground::Octonion, 3)
            .with_entry(0, 1, o(1))
            .unwrap();
        let ch = x.characteristic().unwrap();
        assert_eq!((ch.trace, ch.sigma, ch.det), (0.0, -1.0, 0.0));
    }

    #[test]
    fn trilinear_and_cubic_examples() {
        let i3 = HermitianElement::identity(Ground::Octonion, 3);
        let p = HermitianElement::matrix_unit(Ground::Octonion, 3, 0);
        assert_eq!(trilinear_form(&i3, &i3, &i3).unwrap(), 3.0);
        assert_eq!(trilinear_form(&p, &p, &p).unwrap(), 1.0);
        assert_eq!(cubic_form(&i3, &i3, &i3).unwrap(), c(1.0));
        let e = |k| HermitianElement::matrix_unit(Ground::Octonion, 3, k);
        let v = cubic_form(&e(0), &e(1), &e(2)).unwrap();
        assert!((v.re - 1.0 / 6.0).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn two_by_two_determinant() {
        let x = HermitianElement::identity(Ground::Octonion, 2)
            .with_entry(0, 1, o(1))
            .unwrap();
        assert_eq!(x.determinant().unwrap(), c(0.0));
    }

    #[test]
    fn peel_examples() {
        let d = HermitianElement::diagonal(Ground::Octonion, &[1.0, 2.0, 3.0]);
        let p = peel(&d).unwrap();
        assert_eq!(p.corner, c(3.0));
        assert_eq!(
            p.block,
            HermitianElement::diagonal(Ground::Octonion, &[1.0, 2.0])
        );
        assert_eq!(p.column, vec![Bioctonion::ZERO; 2]);
        assert_eq!(unpeel(&p).unwrap(), d);
    }

    #[test]
    fn peel_of_five_by_five_complex() {
        // (α ψ; ψ* a) with α in h_4(C), ψ in C^4, a real
        let mut x = HermitianElement::diagonal(Ground::Complex, &[1.0, 2.0, 3.0, 4.0, 7.0]);
        x = x.with_entry(0, 1, o(1)).unwrap();
        for i in 0..4 {
            let mut z = [0.0; 8];
            z[0] = i as f64;
            z[1] = -(i as f64) - 1.0;
            x = x.with_entry(i, 4, Octonion(z).into()).unwrap();
        }
        let p = peel(&x).unwrap();
        assert_eq!(p.corner, c(7.0));
        assert_eq!(p.block.n(), 4);
        assert_eq!(p.block.entry(0, 1), o(1));
        for i in 0..4 {
            assert_eq!(p.column[i].re.0[1], -(i as f64) - 1.0);
        }
        assert_eq!(unpeel(&p).unwrap(), x);
    }

    #[test]
    fn congruence_identity_and_phases() {
        let x = HermitianElement::diagonal(Ground::Complex, &[1.0, 2.0, 3.0])
            .with_entry(
                0,
                2,
                Octonion([0.5, -0.25, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).into(),
            )
            .unwrap();
        let id = DMatrix::<Complex64>::identity(3, 3);
        assert!(congruence_action(&id, &x).unwrap().max_diff(&x).unwrap() < 1e-15);

        let g = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::from_polar(1.0, 0.3),
            Complex64::from_polar(1.0, -1.1),
            Complex64::from_polar(1.0, 2.0),
        ]));
        let y = congruence_action(&g, &x).unwrap();
        let dx = x.determinant().unwrap();
        let dy = y.determinant().unwrap();
        assert!((dx - dy).norm() < 1e-12);
        assert!(matches!(
            congruence_action(&id, &x.embed(Ground::Octonion).unwrap()),
            Err(Error::UnsupportedGround { .. })
        ));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = HermitianElement::identity(Ground::Octonion, 3);
        let b = HermitianElement::identity(Ground::Quaternion, 3);
        assert!(matches!(a.jordan(&b), Err(Error::ShapeMismatch { .. })));
    }
}
