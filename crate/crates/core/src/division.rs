//! Octonions and bioctonions via Cayley–Dickson doubling.
//!
//! The basis is `{1, e1, .., e7}` with the quaternions `{1, e1, e2, e3}` as
//! the first half and `e4` as the doubling unit, so `e5 = e1 e4`,
//! `e6 = e2 e4`, `e7 = e3 e4`. Doubling uses
//! `(p, q)(r, s) = (pr - s̄q, sp + qr̄)`.
//!
//! The reals, complexes and quaternions are the subalgebras spanned by
//! `{1}`, `{1, e1}` and `{1, e1, e2, e3}`. Bioctonions carry a complex
//! coefficient on every basis element; the complex unit `i` commutes with
//! every `e_k` and is unrelated to `e1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

/// Sign and target index of the product `e_i e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub sign: i8,
    pub index: u8,
}

/// Product of basis units `e_i e_j` inside an algebra of dimension `dim`
/// (a power of two), following the doubling recursion.
// conj(e_k) = -e_k for k != 0
const fn conj_sign(k: usize) -> i8 {
    if k == 0 {
        1
    } else {
        -1
    }
}

const fn unit_product(i: usize, j: usize, dim: usize) -> (i8, usize) {
    if dim == 1 {
        return (1, 0);
    }
    let half = dim / 2;
    match (i < half, j < half) {
        // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
        (true, true) => unit_product(i, j, half),
        // (e_i, 0)(0, e_j') = (0, e_j' e_i)
        (true, false) => {
            let (s, k) = unit_product(j - half, i, half);
            (s, k + half)
        }
        // (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
        (false, true) => {
            let (s, k) = unit_product(i - half, j, half);
            (s * conj_sign(j), k + half)
        }
        // (0, e_i')(0, e_j') = (-conj(e_j') e_i', 0)
        (false, false) => {
            let (s, k) = unit_product(j - half, i - half, half);
            (-s * conj_sign(j - half), k)
        }
    }
}

const fn build_table() -> [[TableEntry; 8]; 8] {
    let mut table = [[TableEntry { sign: 0, index: 0 }; 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let (sign, index) = unit_product(i, j, 8);
            table[i][j] = TableEntry {
                sign,
                index: index as u8,
            };
            j += 1;
        }
        i += 1;
    }
    table
}

/// `MULTIPLICATION_TABLE[i][j]` gives `e_i e_j = sign · e_index`.
pub const MULTIPLICATION_TABLE: [[TableEntry; 8]; 8] = build_table();

/// Real octonion with coordinates over `{1, e1, .., e7}`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub fn new(coeffs: [f64; 8]) -> Self {
        Octonion(coeffs)
    }

    /// Basis unit `e_k` (`e_0 = 1`).
    pub fn unit(k: usize) -> Self {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Octonion(c)
    }

    pub fn scalar(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    #[inline]
    pub fn coeffs(&self) -> &[f64; 8] {
        &self.0
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.0[0]
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Octonion conjugation: negates the imaginary coordinates.
    #[inline]
    pub fn conj(&self) -> Self {
        let mut c = self.0;
        for x in &mut c[1..] {
            *x = -*x;
        }
        Octonion(c)
    }

    /// Norm form `N(a) = a ā`, the sum of squared coordinates.
    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product of coordinate vectors, `Re(a b̄)`.
    pub fn dot(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut c = self.0;
        for x in &mut c {
            *x *= s;
        }
        Octonion(c)
    }

    /// `(ab)c - a(bc)`.
    pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
        (*a * *b) * *c - *a * (*b * *c)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    #[inline]
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    #[inline]
    fn add_assign(&mut self, rhs: Octonion) {
        for (x, y) in self.0.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    #[inline]
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x -= y;
        }
        Octonion(c)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    #[inline]
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    #[inline]
    fn mul(self, rhs: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let row = &MULTIPLICATION_TABLE[i];
            for (j, &b) in rhs.0.iter().enumerate() {
                let e = row[j];
                out[e.index as usize] += f64::from(e.sign) * a * b;
            }
        }
        Octonion(out)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    #[inline]
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &x) in self.0.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if x < 0.0 { '-' } else { '+' })?;
            } else if x < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", x.abs())?;
            } else {
                write!(f, "{}e{}", x.abs(), k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Which involution [`Bioctonion::conjugate`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// Octonion conjugation, complex-linear (the tilde involution).
    Octonionic,
    /// Coefficientwise complex conjugation.
    Complex,
    /// Both involutions composed.
    Both,
}

/// Octonion with complex coefficients, stored as `re + i·im` with
/// `re, im` real octonions and `i` central.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bioctonion {
    pub re: Octonion,
    pub im: Octonion,
}

impl Bioctonion {
    pub const ZERO: Bioctonion = Bioctonion {
        re: Octonion::ZERO,
        im: Octonion::ZERO,
    };
    pub const ONE: Bioctonion = Bioctonion {
        re: Octonion::ONE,
        im: Octonion::ZERO,
    };

    pub fn new(re: Octonion, im: Octonion) -> Self {
        Bioctonion { re, im }
    }

    pub fn from_coeffs(coeffs: [Complex64; 8]) -> Self {
        let mut re = [0.0; 8];
        let mut im = [0.0; 8];
        for (k, z) in coeffs.iter().enumerate() {
            re[k] = z.re;
            im[k] = z.im;
        }
        Bioctonion {
            re: Octonion(re),
            im: Octonion(im),
        }
    }

    pub fn unit(k: usize) -> Self {
        Octonion::unit(k).into()
    }

    pub fn scalar(z: Complex64) -> Self {
        Bioctonion {
            re: Octonion::scalar(z.re),
            im: Octonion::scalar(z.im),
        }
    }

    /// The complex unit `i` (times the octonion identity).
    pub fn i() -> Self {
        Bioctonion {
            re: Octonion::ZERO,
            im: Octonion::ONE,
        }
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        Complex64::new(self.re.0[k], self.im.0[k])
    }

    pub fn coeffs(&self) -> [Complex64; 8] {
        std::array::from_fn(|k| self.coeff(k))
    }

    /// Scalar (`e_0`) coordinate.
    #[inline]
    pub fn scalar_part(&self) -> Complex64 {
        self.coeff(0)
    }

    #[inline]
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conjugate(&self, mode: Conjugation) -> Self {
        match mode {
            Conjugation::Octonionic => self.tilde(),
            Conjugation::Complex => self.complex_conj(),
            Conjugation::Both => self.tilde().complex_conj(),
        }
    }

    /// Octonion conjugation applied to both real components.
    #[inline]
    pub fn tilde(&self) -> Self {
        Bioctonion {
            re: self.re.conj(),
            im: self.im.conj(),
        }
    }

    #[inline]
    pub fn complex_conj(&self) -> Self {
        Bioctonion {
            re: self.re,
            im: -self.im,
        }
    }

    /// Complex-valued norm form `Σ c_k²`, the scalar part of `a · tilde(a)`.
    pub fn norm_form(&self) -> Complex64 {
        Complex64::new(
            self.re.norm_sqr() - self.im.norm_sqr(),
            2.0 * self.re.dot(&self.im),
        )
    }

    /// Hermitian size `Σ |c_k|²`, used for tolerances.
    pub fn modulus_sqr(&self) -> f64 {
        self.re.norm_sqr() + self.im.norm_sqr()
    }

    pub fn max_abs(&self) -> f64 {
        self.re.max_abs().max(self.im.max_abs())
    }

    pub fn scale(&self, s: f64) -> Self {
        Bioctonion {
            re: self.re.scale(s),
            im: self.im.scale(s),
        }
    }

    /// Multiplication by a complex scalar.
    #[inline]
    pub fn scale_complex(&self, z: Complex64) -> Self {
        if z.im == 0.0 && self.im.is_zero() {
            return Bioctonion {
                re: self.re.scale(z.re),
                im: Octonion::ZERO,
            };
        }
        Bioctonion {
            re: self.re.scale(z.re) - self.im.scale(z.im),
            im: self.re.scale(z.im) + self.im.scale(z.re),
        }
    }

    pub fn associator(a: &Bioctonion, b: &Bioctonion, c: &Bioctonion) -> Bioctonion {
        (*a * *b) * *c - *a * (*b * *c)
    }
}

impl From<Octonion> for Bioctonion {
    fn from(re: Octonion) -> Self {
        Bioctonion {
            re,
            im: Octonion::ZERO,
        }
    }
}

impl Add for Bioctonion {
    type Output = Bioctonion;
    #[inline]
    fn add(self, rhs: Bioctonion) -> Bioctonion {
        Bioctonion {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign for Bioctonion {
    #[inline]
    fn add_assign(&mut self, rhs: Bioctonion) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Bioctonion {
    type Output = Bioctonion;
    #[inline]
    fn sub(self, rhs: Bioctonion) -> Bioctonion {
        Bioctonion {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for Bioctonion {
    type Output = Bioctonion;
    #[inline]
    fn neg(self) -> Bioctonion {
        Bioctonion {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for Bioctonion {
    type Output = Bioctonion;
    #[inline]
    fn mul(self, rhs: Bioctonion) -> Bioctonion {
        // real-coefficient operands skip three of the four octonion products
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => (self.re * rhs.re).into(),
            (true, false) => Bioctonion {
                re: self.re * rhs.re,
                im: self.re * rhs.im,
            },
            (false, true) => Bioctonion {
                re: self.re * rhs.re,
                im: self.im * rhs.re,
            },
            (false, false) => Bioctonion {
                re: self.re * rhs.re - self.im * rhs.im,
                im: self.re * rhs.im + self.im * rhs.re,
            },
        }
    }
}

impl Mul<f64> for Bioctonion {
    type Output = Bioctonion;
    #[inline]
    fn mul(self, rhs: f64) -> Bioctonion {
        self.scale(rhs)
    }
}
