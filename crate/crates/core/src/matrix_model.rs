//! Cubic matrix-model actions over `h_3(O)` and `h_3(C⊗O)`, the cyclic
//! triality generator `ρ`, and the `R ⊕ h_2(O) ⊕ O²` split.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::division::{Bioctonion, Octonion};
use crate::error::{Error, Result};
use crate::jordan::{cubic_form, peel, trilinear_form, unpeel, Ground, HermitianElement, Peeled};
use crate::spin::SpinFactorElement;

/// Totally antisymmetric real structure constants `f_ijk`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeAlgebra {
    dim: usize,
    f: Vec<f64>,
}

impl GaugeAlgebra {
    /// Builds the algebra from generators `(i, j, k, value)` with
    /// `1 <= i < j < k <= dim`; the remaining entries follow by antisymmetry.
    pub fn from_generators(dim: usize, entries: &[(usize, usize, usize, f64)]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("gauge algebra needs dim >= 1".into()));
        }
        let mut f = vec![0.0; dim * dim * dim];
        for &(i, j, k, value) in entries {
            for index in [i, j, k] {
                if index == 0 || index > dim {
                    return Err(Error::GaugeIndex { index, dim });
                }
            }
            if !(i < j && j < k) {
                return Err(Error::Invalid(format!(
                    "structure constant generators must satisfy i < j < k, got ({i}, {j}, {k})"
                )));
            }
            if !value.is_finite() {
                return Err(Error::NonFinite("structure constants"));
            }
            let (i, j, k) = (i - 1, j - 1, k - 1);
            for (a, b, c, s) in [
                (i, j, k, 1.0),
                (j, k, i, 1.0),
                (k, i, j, 1.0),
                (j, i, k, -1.0),
                (i, k, j, -1.0),
                (k, j, i, -1.0),
            ] {
                f[(a * dim + b) * dim + c] = s * value;
            }
        }
        Ok(GaugeAlgebra { dim, f })
    }

    /// Dense constants indexed `f[(i·dim + j)·dim + k]` (0-based), checked
    /// for exact antisymmetry.
    pub fn from_dense(dim: usize, f: Vec<f64>) -> Result<Self> {
        if f.len() != dim * dim * dim {
            return Err(Error::WrongLength {
                field: "structure constants",
                expected: dim * dim * dim,
                found: f.len(),
            });
        }
        let g = GaugeAlgebra { dim, f };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = g.get(i, j, k);
                    if g.get(j, i, k) != -v || g.get(i, k, j) != -v || g.get(k, j, i) != -v {
                        return Err(Error::NotAntisymmetric {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(g)
    }

    /// `su(2)`: `f_ijk = ε_ijk`.
    pub fn su2() -> Self {
        Self::from_generators(3, &[(1, 2, 3, 1.0)]).expect("valid generator")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f_ijk`, 0-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f[(i * self.dim + j) * self.dim + k]
    }

    /// Generators with `i < j < k` (1-based) and nonzero value.
    pub fn generators(&self) -> Vec<(usize, usize, usize, f64)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let v = self.get(i, j, k);
                    if v != 0.0 {
                        out.push((i + 1, j + 1, k + 1, v));
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries `(i, j, k, f_ijk)`, 0-based, in lexicographic order.
    fn nonzero(&self) -> Vec<(usize, usize, usize, f64)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.get(i, j, k);
                    if v != 0.0 {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    /// Largest violation of the Jacobi identity
    /// `Σ_m f_ijm f_mkl + f_jkm f_mil + f_kim f_mjl = 0`.
    pub fn jacobi_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let s: f64 = (0..d)
                            .map(|m| {
                                self.get(i, j, m) * self.get(m, k, l)
                                    + self.get(j, k, m) * self.get(m, i, l)
                                    + self.get(k, i, m) * self.get(m, j, l)
                            })
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// `Σ |f_ijk|` over all index triples.
    pub fn abs_sum(&self) -> f64 {
        self.f.iter().map(|v| v.abs()).sum()
    }
}

/// Matrix degrees of freedom `X^i`, one per gauge generator.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeConfiguration {
    pub coupling: f64,
    elements: Vec<HermitianElement>,
}

impl GaugeConfiguration {
    pub fn new(coupling: f64, elements: Vec<HermitianElement>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::Invalid("gauge configuration has no elements".into()))?;
        for x in &elements[1..] {
            if x.n() != first.n() || x.ground() != first.ground() {
                return Err(Error::ShapeMismatch {
                    left_n: first.n(),
                    left_ground: first.ground(),
                    right_n: x.n(),
                    right_ground: x.ground(),
                });
            }
        }
        if !coupling.is_finite() {
            return Err(Error::NonFinite("coupling"));
        }
        Ok(GaugeConfiguration { coupling, elements })
    }

    pub fn elements(&self) -> &[HermitianElement] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn ground(&self) -> Ground {
        self.elements[0].ground()
    }

    /// Same configuration with every element multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        GaugeConfiguration {
            coupling: self.coupling,
            elements: self.elements.iter().map(|x| x.scale(c)).collect(),
        }
    }

    fn max_norm(&self) -> f64 {
        self.elements.iter().fold(0.0, |m, x| m.max(x.max_norm()))
    }

    fn check(&self, g: &GaugeAlgebra) -> Result<()> {
        if self.dim() != g.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: g.dim(),
            });
        }
        if self.elements[0].n() != 3 {
            return Err(Error::UnsupportedSize {
                op: "matrix model action",
                expected: 3,
                found: self.elements[0].n(),
            });
        }
        Ok(())
    }
}

/// Cyclic generator `ρ`: relabels `(a1, a2, a3; φ1, φ2, φ3)` as
/// `(a2, a3, a1; φ3, φ1, φ2)`, i.e. `ρ(Φ)_ij = Φ_{σ(i)σ(j)}` with
/// `σ = (1 2 3)`. `power` is taken mod 3.
pub fn rho(phi: &HermitianElement, power: u32) -> Result<HermitianElement> {
    if phi.n() != 3 {
        return Err(Error::UnsupportedSize {
            op: "triality generator",
            expected: 3,
            found: phi.n(),
        });
    }
    let mut x = phi.clone();
    for _ in 0..power % 3 {
        let y = &x;
        x = HermitianElement::from_fn(y.ground(), 3, |i, j| y.entry((i + 1) % 3, (j + 1) % 3));
    }
    Ok(x)
}

/// Rayon-parallel sum over indexed terms with a fixed left-to-right
/// reduction, so the result does not depend on the thread split.
fn ordered_sum<T, F>(terms: &[(usize, usize, usize, f64)], eval: F) -> Result<T>
where
    T: Send + std::iter::Sum<T>,
    F: Fn(usize, usize, usize, f64) -> Result<T> + Sync,
{
    let values: Vec<T> = terms
        .par_iter()
        .map(|&(i, j, k, f)| eval(i, j, k, f))
        .collect::<Result<_>>()?;
    Ok(values.into_iter().sum())
}

/// `S = (k/4π) Σ f_ijk t(X^i, ρX^j, ρ²X^k)` over `h_3` of a division
/// algebra.
pub fn smolin_action(cfg: &GaugeConfiguration, g: &GaugeAlgebra) -> Result<f64> {
    cfg.check(g)?;
    if !cfg.ground().is_division() {
        return Err(Error::UnsupportedGround {
            op: "exceptional cubic action",
            ground: cfg.ground(),
        });
    }
    let r1: Vec<_> = cfg
        .elements
        .iter()
        .map(|x| rho(x, 1))
        .collect::<Result<_>>()?;
    let r2: Vec<_> = r1.iter().map(|x| rho(x, 1)).collect::<Result<_>>()?;
    let sum: f64 = ordered_sum(&g.nonzero(), |i, j, k, f| {
        Ok(f * trilinear_form(&cfg.elements[i], &r1[j], &r2[k])?)
    })?;
    Ok(cfg.coupling / (4.0 * PI) * sum)
}

/// `S = Σ f_ijk c(Ω^[i, ρΩ^j, ρ²Ω^k])` with unit-weight antisymmetrization,
/// as a complex number.
///
/// Contracting with totally antisymmetric `f` already antisymmetrizes the
/// integrand, so the sum runs over the nonzero `f_ijk` directly.
pub fn ohwashi_action_complex(cfg: &GaugeConfiguration, g: &GaugeAlgebra) -> Result<Complex64> {
    cfg.check(g)?;
    let r1: Vec<_> = cfg
        .elements
        .iter()
        .map(|x| rho(x, 1))
        .collect::<Result<_>>()?;
    let r2: Vec<_> = r1.iter().map(|x| rho(x, 1)).collect::<Result<_>>()?;
    ordered_sum(&g.nonzero(), |i, j, k, f| {
        Ok(cubic_form(&cfg.elements[i], &r1[j], &r2[k])? * f)
    })
}

/// Real value of the E6 action. With `strict`, diagonals must be real and
/// the imaginary part must vanish to within `tol` relative to
/// `Σ|f| · max‖Ω‖³`; otherwise the real part is returned as is.
pub fn ohwashi_action(
    cfg: &GaugeConfiguration,
    g: &GaugeAlgebra,
    strict: bool,
    tol: f64,
) -> Result<f64> {
    if strict {
        for x in &cfg.elements {
            x.check_real_diagonal()?;
        }
    }
    let s = ohwashi_action_complex(cfg, g)?;
    if strict {
        let limit = tol * (g.abs_sum() * cfg.max_norm().powi(3)).max(1.0);
        if s.im.abs() > limit {
            return Err(Error::ImaginaryResidue { imag: s.im, limit });
        }
    }
    Ok(s.re)
}

/// `h_3(O) ≅ R ⊕ h_2(O) ⊕ O²`.
///
/// `x` is the leading 2x2 block, `a` the corner and `theta` the last column
/// above it, `(Φ_13, Φ_23)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BfssSplit {
    pub x: HermitianElement,
    pub a: f64,
    pub theta: [Octonion; 2],
}

pub fn bfss_split(phi: &HermitianElement) -> Result<BfssSplit> {
    if phi.n() != 3 || phi.ground() != Ground::Octonion {
        return Err(Error::Invalid(format!(
            "BFSS split needs an element of h_3(O), got {}x{} over {}",
            phi.n(),
            phi.n(),
            phi.ground()
        )));
    }
    let Peeled {
        block,
        column,
        corner,
    } = peel(phi)?;
    Ok(BfssSplit {
        x: block,
        a: corner.re,
        theta: [column[0].re, column[1].re],
    })
}

pub fn bfss_unsplit(s: &BfssSplit) -> Result<HermitianElement> {
    if s.x.n() != 2 || s.x.ground() != Ground::Octonion {
        return Err(Error::Invalid(
            "BFSS block must be a 2x2 octonionic element".into(),
        ));
    }
    unpeel(&Peeled {
        block: s.x.clone(),
        column: s.theta.iter().map(|&t| Bioctonion::from(t)).collect(),
        corner: Complex64::new(s.a, 0.0),
    })
}

/// 9+1-dimensional coordinates of `X = ((α, φ), (φ̃, β))` in `h_2(O)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkowskiPoint {
    /// `(α + β)/2`.
    pub time: f64,
    /// The eight coordinates of `φ`, then `(α − β)/2`.
    pub space: [f64; 9],
    /// `det X = αβ − N(φ)`.
    pub det: f64,
}

impl MinkowskiPoint {
    /// `t² − ‖space‖²`, computed from the coordinates.
    pub fn quadratic_form(&self) -> f64 {
        self.time * self.time - self.space.iter().map(|x| x * x).sum::<f64>()
    }

    pub fn to_spin_factor(&self) -> SpinFactorElement {
        SpinFactorElement::new(self.space.to_vec(), self.time)
    }
}

pub fn minkowski_coordinates(x: &HermitianElement) -> Result<MinkowskiPoint> {
    if x.n() != 2 || !x.ground().is_division() {
        return Err(Error::Invalid(format!(
            "Minkowski coordinates need a 2x2 element over a division algebra, got {}x{} over {}",
            x.n(),
            x.n(),
            x.ground()
        )));
    }
    let alpha = x.diag()[0].re;
    let beta = x.diag()[1].re;
    let phi = x.upper()[0].re;
    let mut space = [0.0; 9];
    space[..8].copy_from_slice(phi.coeffs());
    space[8] = (alpha - beta) / 2.0;
    Ok(MinkowskiPoint {
        time: (alpha + beta) / 2.0,
        space,
        det: alpha * beta - phi.norm_sqr(),
    })
}
