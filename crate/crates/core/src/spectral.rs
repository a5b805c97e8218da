//! Eigenvalues and eigenprojections of `h_3` elements over a division
//! algebra, from the characteristic cubic `λ³ − tr λ² + σ λ − det`.
//!
//! Projections are Lagrange polynomials in `Φ` evaluated with the Jordan
//! product only. The subalgebra generated by a single element is
//! associative, so this needs no associativity of the ground.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jordan::HermitianElement;

/// Relative gap below which two eigenvalues are treated as one.
pub const CLUSTER_THRESHOLD: f64 = 1e-7;

/// Limit on the negative discriminant, in units of the coefficient scale.
const DISCRIMINANT_LIMIT: f64 = 1e-12;

/// Largest positive depressed coefficient `p` (scaled) accepted as a
/// rounding artifact of a triple root.
const TRIPLE_ROOT_LIMIT: f64 = 1e-14;

/// Real roots of `λ³ − trace·λ² + sigma·λ − det`, ascending.
///
/// Uses the trigonometric form of the depressed cubic followed by one
/// guarded Newton step per root.
pub fn solve_characteristic_cubic(trace: f64, sigma: f64, det: f64) -> Result<[f64; 3]> {
    if !(trace.is_finite() && sigma.is_finite() && det.is_finite()) {
        return Err(Error::NonFinite("characteristic coefficients"));
    }
    let m = trace.abs().max(sigma.abs().sqrt()).max(det.abs().cbrt());
    if m == 0.0 {
        return Ok([0.0; 3]);
    }
    let t = trace / m;
    let s = sigma / m / m;
    let d = det / m / m / m;

    let shift = t / 3.0;
    let p = s - t * t / 3.0;
    let q = -2.0 * t * t * t / 27.0 + t * s / 3.0 - d;
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    if disc < -DISCRIMINANT_LIMIT {
        return Err(Error::NegativeDiscriminant {
            discriminant: disc * m.powi(6),
            limit: -DISCRIMINANT_LIMIT * m.powi(6),
        });
    }

    let mut roots = if p >= 0.0 {
        if p > TRIPLE_ROOT_LIMIT {
            return Err(Error::NegativeDiscriminant {
                discriminant: disc * m.powi(6),
                limit: -DISCRIMINANT_LIMIT * m.powi(6),
            });
        }
        [shift; 3]
    } else {
        let r = (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        [0.0, 1.0, 2.0].map(|k| shift + 2.0 * r * (phi - 2.0 * PI * k / 3.0).cos())
    };

    let f = |x: f64| ((x - t) * x + s) * x - d;
    let df = |x: f64| (3.0 * x - 2.0 * t) * x + s;
    for x in &mut roots {
        let fx = f(*x);
        let dfx = df(*x);
        if dfx != 0.0 {
            let y = *x - fx / dfx;
            if y.is_finite() && f(y).abs() < fx.abs() {
                *x = y;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots.map(|x| x * m))
}

/// Eigenvalues with orthogonal eigenprojections.
///
/// `eigenvalues`, `multiplicities` and `projections` are parallel; a
/// clustered eigenvalue appears once with its multiplicity and a projection
/// of matching trace.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralFrame {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub projections: Vec<HermitianElement>,
}

impl SpectralFrame {
    /// All three roots, repeated by multiplicity.
    pub fn roots(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&l, &m)| std::iter::repeat_n(l, m))
            .collect()
    }

    /// `Σ λ_i p_i`.
    pub fn reconstruct(&self) -> Result<HermitianElement> {
        let first = &self.projections[0];
        let mut acc = HermitianElement::zero(first.ground(), first.n());
        for (l, p) in self.eigenvalues.iter().zip(&self.projections) {
            acc = acc.add(&p.scale(*l))?;
        }
        Ok(acc)
    }
}

/// Solves `Φ∘p = λp` for `n = 3` over `R`, `C`, `H` or `O`.
pub fn spectral_decompose(phi: &HermitianElement) -> Result<SpectralFrame> {
    if !phi.ground().is_division() {
        return Err(Error::UnsupportedGround {
            op: "spectral decomposition",
            ground: phi.ground(),
        });
    }
    if phi.n() != 3 {
        return Err(Error::UnsupportedSize {
            op: "spectral decomposition",
            expected: 3,
            found: phi.n(),
        });
    }
    if !phi.is_finite() {
        return Err(Error::NonFinite("element"));
    }
    let ch = phi.characteristic()?;
    let roots = solve_characteristic_cubic(ch.trace, ch.sigma, ch.det)?;

    let scale = roots.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for &r in &roots {
        match clusters.last_mut() {
            Some(c) if r - c[c.len() - 1] <= CLUSTER_THRESHOLD * scale => c.push(r),
            _ => clusters.push(vec![r]),
        }
    }
    let values: Vec<f64> = clusters
        .iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect();
    let multiplicities: Vec<usize> = clusters.iter().map(Vec::len).collect();

    let ground = phi.ground();
    let id = HermitianElement::identity(ground, 3);
    let shifted = |l: f64| phi.shift(Complex64::new(-l, 0.0));
    let projections = match values.as_slice() {
        [_] => vec![id],
        &[a, b] => vec![
            shifted(b).scale(1.0 / (a - b)),
            shifted(a).scale(1.0 / (b - a)),
        ],
        &[a, b, c] => {
            let sq = phi.square();
            let lagrange = |li: f64, lj: f64, lk: f64| -> Result<HermitianElement> {
                // (Φ − λj)∘(Φ − λk) = Φ² − (λj + λk)Φ + λjλk I
                let num = sq
                    .sub(&phi.scale(lj + lk))?
                    .shift(Complex64::new(lj * lk, 0.0));
                Ok(num.scale(1.0 / ((li - lj) * (li - lk))))
            };
            vec![lagrange(a, b, c)?, lagrange(b, a, c)?, lagrange(c, a, b)?]
        }
        _ => unreachable!("a cubic has at most three roots"),
    };

    Ok(SpectralFrame {
        eigenvalues: values,
        multiplicities,
        projections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::Bioctonion;
    use crate::jordan::Ground;

    #[test]
    fn cubic_fixtures() {
        let r = solve_characteristic_cubic(6.0, 11.0, 6.0).unwrap();
        for (x, e) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((x - e).abs() < 1e-14, "{r:?}");
        }
        assert_eq!(solve_characteristic_cubic(3.0, 3.0, 1.0).unwrap(), [1.0; 3]);
        let r = solve_characteristic_cubic(0.0, -1.0, 0.0).unwrap();
        for (x, e) in r.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((x - e).abs() < 1e-15, "{r:?}");
        }
        assert_eq!(solve_characteristic_cubic(0.0, 0.0, 0.0).unwrap(), [0.0; 3]);
    }

    #[test]
    fn cubic_double_root() {
        // (λ−1)²(λ−4): tr 6, σ 9, det 4
        let r = solve_characteristic_cubic(6.0, 9.0, 4.0).unwrap();
        assert!((r[0] - 1.0).abs() < 1e-7 && (r[1] - 1.0).abs() < 1e-7);
        assert!((r[2] - 4.0).abs() < 1e-14);
    }

    #[test]
    fn cubic_rejects_complex_roots() {
        // λ³ + λ = λ(λ² + 1)
        let err = solve_characteristic_cubic(0.0, 1.0, 0.0);
        assert!(matches!(err, Err(Error::NegativeDiscriminant { .. })));
        let err = solve_characteristic_cubic(0.0, 0.0, 1.0);
        assert!(matches!(err, Err(Error::NegativeDiscriminant { .. })));
        assert!(solve_characteristic_cubic(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn cubic_large_scale() {
        assert!(solve_characteristic_cubic(6e150, 11e300, f64::INFINITY).is_err());
        let r = solve_characteristic_cubic(6e100, 11e200, 6e300).unwrap();
        assert!((r[2] / 3e100 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_frame() {
        let d = HermitianElement::diagonal(Ground::Octonion, &[3.0, 1.0, 2.0]);
        let f = spectral_decompose(&d).unwrap();
        assert_eq!(f.multiplicities, vec![1, 1, 1]);
        for (l, e) in f.eigenvalues.iter().zip([1.0, 2.0, 3.0]) {
            assert!((l - e).abs() < 1e-14);
        }
        for (p, k) in f.projections.iter().zip([1, 2, 0]) {
            let e = HermitianElement::matrix_unit(Ground::Octonion, 3, k);
            assert!(p.max_diff(&e).unwrap() < 1e-14);
        }
    }

    #[test]
    fn off_diagonal_unit_frame() {
        let x = HermitianElement::zero(Ground::Octonion, 3)
            .with_entry(0, 1, Bioctonion::unit(1))
            .unwrap();
        let f = spectral_decompose(&x).unwrap();
        assert_eq!(f.eigenvalues.len(), 3);
        let [lm, l0, lp] = [f.eigenvalues[0], f.eigenvalues[1], f.eigenvalues[2]];
        assert!((lm + 1.0).abs() < 1e-15 && l0.abs() < 1e-15 && (lp - 1.0).abs() < 1e-15);
        // p_{+1} = ½[[1, e1], [-e1, 1]] in the upper block, p_0 = E33
        let plus = HermitianElement::diagonal(Ground::Octonion, &[0.5, 0.5, 0.0])
            .with_entry(0, 1, Bioctonion::unit(1).scale(0.5))
            .unwrap();
        assert!(f.projections[2].max_diff(&plus).unwrap() < 1e-15);
        let e33 = HermitianElement::matrix_unit(Ground::Octonion, 3, 2);
        assert!(f.projections[1].max_diff(&e33).unwrap() < 1e-15);
    }

    #[test]
    fn clustered_frames() {
        let d = HermitianElement::diagonal(Ground::Quaternion, &[2.0, 5.0, 2.0]);
        let f = spectral_decompose(&d).unwrap();
        assert_eq!(f.multiplicities, vec![2, 1]);
        assert!((f.projections[0].trace_real() - 2.0).abs() < 1e-12);
        assert!(f.reconstruct().unwrap().max_diff(&d).unwrap() < 1e-12);
        assert_eq!(f.roots().len(), 3);

        let s = HermitianElement::identity(Ground::Octonion, 3).scale(-4.0);
        let f = spectral_decompose(&s).unwrap();
        assert_eq!(f.multiplicities, vec![3]);
        assert_eq!(f.eigenvalues, vec![-4.0]);
        assert_eq!(
            f.projections,
            vec![HermitianElement::identity(Ground::Octonion, 3)]
        );
    }

    #[test]
    fn rejects_bioctonions_and_wrong_size() {
        let b = HermitianElement::identity(Ground::Bioctonion, 3);
        assert!(matches!(
            spectral_decompose(&b),
            Err(Error::UnsupportedGround { .. })
        ));
        let r = HermitianElement::identity(Ground::Real, 2);
        assert!(matches!(
            spectral_decompose(&r),
            Err(Error::UnsupportedSize { .. })
        ));
    }
}
