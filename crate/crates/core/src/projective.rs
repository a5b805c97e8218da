//! Projective spaces `KP^n` realized inside `h_{n+1}(K)`: points are trace-one
//! projections, lines are trace-two projections.
//!
//! Incidence is containment, `p∘ℓ = p`, equivalently `p∘(I − ℓ) = 0`
//! against the dual point of the line. The literal annihilation test
//! `p∘ℓ = 0` is kept as [`Incidence::PaperLiteral`] for comparison.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::division::Bioctonion;
use crate::error::{Error, Result};
use crate::jordan::{Ground, HermitianElement};

/// Default tolerance for projection invariants and predicates.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Trace distance `tr((p−q)∘(p−q))` at or below which two points coincide.
pub const COINCIDENCE_THRESHOLD: f64 = 1e-16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Incidence {
    /// `p∘ℓ = p`.
    #[default]
    Containment,
    /// `p∘ℓ = 0`.
    PaperLiteral,
}

impl std::str::FromStr for Incidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "containment" => Ok(Incidence::Containment),
            "paper-literal" => Ok(Incidence::PaperLiteral),
            other => Err(Error::Invalid(format!(
                "unknown incidence convention {other:?}"
            ))),
        }
    }
}

/// Checks `x∘x = x` and `tr(x) = trace`, plus the rank-one conditions
/// `x∗x = 0`, `det(x) = 0` for points in `h_3`.
fn check_projection(x: &HermitianElement, trace: f64, tol: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::NonFinite("projection"));
    }
    let residual = x.square().max_diff(x)?;
    if residual > tol {
        return Err(Error::NotIdempotent { residual });
    }
    let tr = x.trace();
    if (tr - Complex64::new(trace, 0.0)).norm() > tol {
        return Err(Error::WrongTrace {
            expected: trace,
            found: tr.re,
        });
    }
    if x.n() == 3 {
        let point = if trace == 1.0 {
            x.clone()
        } else {
            HermitianElement::identity(x.ground(), 3).sub(x)?
        };
        let sharp = point.sharp()?.max_norm();
        if sharp > tol {
            return Err(Error::Invalid(format!(
                "rank-one condition p∗p = 0 fails by {sharp:e}"
            )));
        }
        let det = point.determinant()?.norm();
        if det > tol {
            return Err(Error::Invalid(format!("det(p) = {det:e} is not zero")));
        }
    }
    Ok(())
}

/// A trace-one projection.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint(HermitianElement);

/// A trace-two projection.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveLine(HermitianElement);

impl ProjectivePoint {
    pub fn new(p: HermitianElement, tol: f64) -> Result<Self> {
        check_projection(&p, 1.0, tol)?;
        Ok(ProjectivePoint(p))
    }

    pub fn element(&self) -> &HermitianElement {
        &self.0
    }

    pub fn into_element(self) -> HermitianElement {
        self.0
    }

    /// The line `I − p`.
    pub fn dual(&self) -> ProjectiveLine {
        ProjectiveLine(complement(&self.0))
    }

    /// `tr((p−q)∘(p−q))`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        let d = self.0.sub(&other.0)?;
        Ok(d.trace_pairing(&d)?.norm())
    }
}

impl ProjectiveLine {
    pub fn new(l: HermitianElement, tol: f64) -> Result<Self> {
        check_projection(&l, 2.0, tol)?;
        Ok(ProjectiveLine(l))
    }

    pub fn element(&self) -> &HermitianElement {
        &self.0
    }

    pub fn into_element(self) -> HermitianElement {
        self.0
    }

    /// The point `I − ℓ`.
    pub fn dual(&self) -> ProjectivePoint {
        ProjectivePoint(complement(&self.0))
    }
}

fn complement(x: &HermitianElement) -> HermitianElement {
    HermitianElement::identity(x.ground(), x.n())
        .sub(x)
        .expect("same shape")
}

/// `v v† / N(v)` for a nonzero vector of ground-algebra entries.
///
/// Octonionic vectors of length 3 must associate, `(φ1φ2)φ3 = φ1(φ2φ3)`;
/// otherwise the outer product is not idempotent.
pub fn point_from_vector(ground: Ground, v: &[Bioctonion], tol: f64) -> Result<ProjectivePoint> {
    if v.len() < 2 {
        return Err(Error::Invalid(format!(
            "a point of a projective space needs at least 2 coordinates, got {}",
            v.len()
        )));
    }
    for (i, x) in v.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite("vector"));
        }
        if !ground.contains(x) {
            return Err(Error::OutsideGround {
                ground,
                position: format!("({})", i + 1),
            });
        }
    }
    let norm: Complex64 = v.iter().map(Bioctonion::norm_form).sum();
    let size: f64 = v.iter().map(Bioctonion::modulus_sqr).sum();
    if size == 0.0 || norm.norm() <= f64::EPSILON * size {
        return Err(Error::ZeroVector);
    }
    if !ground.is_associative() && v.len() == 3 {
        let s = 1.0 / size.sqrt();
        let [a, b, c] = [v[0].scale(s), v[1].scale(s), v[2].scale(s)];
        let assoc = Bioctonion::associator(&a, &b, &c).modulus_sqr().sqrt();
        if assoc > tol {
            return Err(Error::AssociatorViolation { norm: assoc });
        }
    }
    ProjectivePoint::new(outer_product(ground, v)?, tol)
}

/// The raw `v v† / N(v)` without any projection checks.
pub fn outer_product(ground: Ground, v: &[Bioctonion]) -> Result<HermitianElement> {
    let norm: Complex64 = v.iter().map(Bioctonion::norm_form).sum();
    if norm.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let inv = norm.inv();
    let p = HermitianElement::from_fn(ground, v.len(), |i, j| {
        (v[i] * v[j].tilde()).scale_complex(inv)
    });
    if !ground.has_complex_coefficients() {
        // N(v) is real, so the diagonal is real up to rounding in v_i ṽ_i
        let diag = p.diag().iter().map(|z| Complex64::new(z.re, 0.0)).collect();
        return HermitianElement::new(ground, diag, p.upper().to_vec());
    }
    Ok(p)
}

pub fn incident(
    p: &ProjectivePoint,
    l: &ProjectiveLine,
    convention: Incidence,
    tol: f64,
) -> Result<bool> {
    let prod = p.0.jordan(&l.0)?;
    let residual = match convention {
        Incidence::Containment => prod.max_diff(&p.0)?,
        Incidence::PaperLiteral => prod.max_norm(),
    };
    Ok(residual <= tol)
}

/// The unique line through two distinct points of a plane:
/// `I − w / tr(w)` with `w = p∗q`.
pub fn join(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectiveLine> {
    if p.trace_distance(q)? <= COINCIDENCE_THRESHOLD {
        return Err(Error::CoincidentPoints);
    }
    let w = p.0.freudenthal(&q.0)?;
    let tr = w.trace();
    if tr.norm() == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(ProjectivePoint(w.scale_complex(tr.inv())?).dual())
}

/// The unique point on two distinct lines of a plane:
/// `r / tr(r)` with `r = (I − ℓ1)∗(I − ℓ2)`.
pub fn meet(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<ProjectivePoint> {
    let (a, b) = (l1.dual(), l2.dual());
    if a.trace_distance(&b)? <= COINCIDENCE_THRESHOLD {
        return Err(Error::CoincidentLines);
    }
    let r = a.0.freudenthal(&b.0)?;
    let tr = r.trace();
    if tr.norm() == 0.0 {
        return Err(Error::CoincidentLines);
    }
    Ok(ProjectivePoint(r.scale_complex(tr.inv())?))
}

/// `Π = tr(p∘q)` for points over a division algebra.
pub fn transition_probability(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<f64> {
    if !p.0.ground().is_division() {
        return Err(Error::UnsupportedGround {
            op: "real transition probability",
            ground: p.0.ground(),
        });
    }
    Ok(p.0.trace_pairing(&q.0)?.re)
}

/// `tr(Ω1∘Ω2)` for arbitrary elements, complex over `C⊗O`.
pub fn transition_amplitude(a: &HermitianElement, b: &HermitianElement) -> Result<Complex64> {
    a.trace_pairing(b)
}

/// Nonzero and rank at most one: `Φ∗Φ = 0` for `n = 3`, `det Φ = 0` for
/// `n = 2`, relative to `‖Φ‖²`.
pub fn is_lightlike(phi: &HermitianElement, tol: f64) -> Result<bool> {
    let scale = phi.max_norm();
    if scale == 0.0 {
        return Ok(false);
    }
    let residual = match phi.n() {
        3 => phi.sharp()?.max_norm(),
        2 => phi.determinant()?.norm(),
        n => {
            return Err(Error::UnsupportedSize {
                op: "lightcone predicate",
                expected: 3,
                found: n,
            })
        }
    };
    Ok(residual <= tol * scale * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::Octonion;

    const TOL: f64 = DEFAULT_TOLERANCE;

    fn real(x: f64) -> Bioctonion {
        Octonion::scalar(x).into()
    }

    fn diag(v: &[f64]) -> HermitianElement {
        HermitianElement::diagonal(Ground::Octonion, v)
    }

    fn point(v: &[f64]) -> ProjectivePoint {
        ProjectivePoint::new(diag(v), TOL).unwrap()
    }

    fn line(v: &[f64]) -> ProjectiveLine {
        ProjectiveLine::new(diag(v), TOL).unwrap()
    }

    #[test]
    fn points_from_vectors() {
        let p =
            point_from_vector(Ground::Octonion, &[real(1.0), real(0.0), real(0.0)], TOL).unwrap();
        assert_eq!(p.element(), &diag(&[1.0, 0.0, 0.0]));

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let p = point_from_vector(Ground::Real, &[real(h), real(h), real(0.0)], TOL).unwrap();
        let e = p.element();
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((e.entry(i, j).re.0[0] - 0.5).abs() < 1e-15);
        }
        assert_eq!(e.entry(2, 2), Bioctonion::ZERO);
    }

    #[test]
    fn non_associating_vector_is_rejected() {
        let v = [
            Bioctonion::unit(1),
            Bioctonion::unit(2),
            Bioctonion::unit(4),
        ];
        let err = point_from_vector(Ground::Octonion, &v, TOL);
        assert!(
            matches!(err, Err(Error::AssociatorViolation { .. })),
            "{err:?}"
        );
        let raw = outer_product(Ground::Octonion, &v).unwrap();
        assert!(raw.square().max_diff(&raw).unwrap() > 0.1);
    }

    #[test]
    fn zero_vector() {
        let err = point_from_vector(Ground::Real, &[real(0.0), real(0.0)], TOL);
        assert!(matches!(err, Err(Error::ZeroVector)));
    }

    #[test]
    fn projection_validation() {
        assert!(matches!(
            ProjectivePoint::new(diag(&[1.0, 1.0, 0.0]), TOL),
            Err(Error::WrongTrace { .. })
        ));
        assert!(matches!(
            ProjectivePoint::new(diag(&[0.5, 0.5, 0.0]), TOL),
            Err(Error::NotIdempotent { .. })
        ));
        assert!(ProjectiveLine::new(diag(&[1.0, 0.0, 0.0]), TOL).is_err());
    }

    #[test]
    fn incidence_examples() {
        let p = point(&[1.0, 0.0, 0.0]);
        assert!(incident(&p, &line(&[1.0, 1.0, 0.0]), Incidence::Containment, TOL).unwrap());
        assert!(!incident(&p, &line(&[0.0, 1.0, 1.0]), Incidence::Containment, TOL).unwrap());
        // the literal annihilation reading says the opposite on both
        assert!(!incident(&p, &line(&[1.0, 1.0, 0.0]), Incidence::PaperLiteral, TOL).unwrap());
        assert!(incident(&p, &line(&[0.0, 1.0, 1.0]), Incidence::PaperLiteral, TOL).unwrap());

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let q = point_from_vector(Ground::Octonion, &[real(h), real(h), real(0.0)], TOL).unwrap();
        assert!(incident(&q, &line(&[1.0, 1.0, 0.0]), Incidence::Containment, TOL).unwrap());
    }

    #[test]
    fn duality() {
        let l = line(&[1.0, 1.0, 0.0]);
        assert_eq!(l.dual().element(), &diag(&[0.0, 0.0, 1.0]));
        assert_eq!(l.dual().dual(), l);
    }

    #[test]
    fn join_and_meet_fixtures() {
        let l = join(&point(&[1.0, 0.0, 0.0]), &point(&[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(l.element(), &diag(&[1.0, 1.0, 0.0]));
        let m = meet(&line(&[1.0, 1.0, 0.0]), &line(&[0.0, 1.0, 1.0])).unwrap();
        assert_eq!(m.element(), &diag(&[0.0, 1.0, 0.0]));
        let p = point(&[0.0, 0.0, 1.0]);
        assert!(matches!(join(&p, &p), Err(Error::CoincidentPoints)));
        let l = line(&[0.0, 1.0, 1.0]);
        assert!(matches!(meet(&l, &l), Err(Error::CoincidentLines)));
    }

    #[test]
    fn transition_probability_fixtures() {
        let p = point(&[1.0, 0.0, 0.0]);
        assert_eq!(transition_probability(&p, &p).unwrap(), 1.0);
        assert_eq!(
            transition_probability(&p, &point(&[0.0, 1.0, 0.0])).unwrap(),
            0.0
        );
    }

    #[test]
    fn lightcone_examples() {
        assert!(is_lightlike(point(&[0.0, 1.0, 0.0]).element(), TOL).unwrap());
        assert!(!is_lightlike(&HermitianElement::identity(Ground::Octonion, 3), TOL).unwrap());
        assert!(is_lightlike(&diag(&[0.0, -7.5, 0.0]), TOL).unwrap());
        assert!(!is_lightlike(&diag(&[0.0, 0.0, 0.0]), TOL).unwrap());
        let x = HermitianElement::identity(Ground::Octonion, 2)
            .with_entry(0, 1, Bioctonion::unit(3))
            .unwrap();
        assert!(is_lightlike(&x, TOL).unwrap());
        assert!(is_lightlike(&HermitianElement::identity(Ground::Real, 4), TOL).is_err());
    }
}
