//! Seeded property suites.
//!
//! Each suite groups the checks for one module. A check runs a number of
//! independent trials; trial `t` of the check with registry index `c` draws
//! from stream `(c << 32) | t` of the seeded generator, so results do not
//! depend on how trials are spread over threads. Trials run in parallel and
//! are merged in trial order.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::division::{Bioctonion, Conjugation, Octonion};
use crate::error::{Error, Result};
use crate::jordan::{cubic_form, Ground, HermitianElement};
use crate::matrix_model::{
    bfss_split, bfss_unsplit, minkowski_coordinates, ohwashi_action_complex, rho, smolin_action,
    BfssSplit, GaugeAlgebra, GaugeConfiguration,
};
use crate::projective::{
    is_lightlike, join, meet, outer_product, point_from_vector, transition_probability,
    ProjectivePoint, DEFAULT_TOLERANCE,
};
use crate::random::{SeededRng, DEFAULT_SEED};
use crate::scaled_tolerance;
use crate::spectral::spectral_decompose;
use crate::spin::SpinFactorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Overrides the trial count of every randomized check.
    pub trials: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            trials: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// Largest residual over all trials; `null` in JSON when a trial errored.
    pub max_residual: f64,
    /// Nominal tolerance; most checks scale it with the input size.
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Outcome of one trial: passes when `residual <= limit`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub residual: f64,
    pub limit: f64,
}

impl Sample {
    pub fn new(residual: f64, limit: f64) -> Self {
        Sample { residual, limit }
    }

    /// A yes/no outcome.
    pub fn holds(ok: bool) -> Self {
        Sample {
            residual: if ok { 0.0 } else { 1.0 },
            limit: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.residual <= self.limit
    }

    /// A failing sample if there is one, else the largest residual.
    fn all(samples: impl IntoIterator<Item = Sample>) -> Sample {
        samples
            .into_iter()
            .reduce(|a, b| match (a.passed(), b.passed()) {
                (true, false) => b,
                (false, true) => a,
                _ if b.residual > a.residual => b,
                _ => a,
            })
            .unwrap_or(Sample::holds(true))
    }
}

type TrialFn = Box<dyn Fn(&mut SeededRng) -> Result<Sample> + Send + Sync>;

struct Check {
    name: String,
    /// `None` for a single deterministic case.
    trials: Option<usize>,
    tolerance: f64,
    run: TrialFn,
}

impl Check {
    fn random(name: impl Into<String>, trials: usize, tolerance: f64, run: TrialFn) -> Self {
        Check {
            name: name.into(),
            trials: Some(trials),
            tolerance,
            run,
        }
    }

    fn fixed(name: impl Into<String>, run: TrialFn) -> Self {
        Check {
            name: name.into(),
            trials: None,
            tolerance: 0.0,
            run,
        }
    }
}

struct Suite {
    name: &'static str,
    checks: Vec<Check>,
}

pub const SUITE_NAMES: [&str; 5] = [
    "division-algebras",
    "jordan-core",
    "spectral",
    "projective",
    "matrix-model",
];

fn registry() -> Vec<Suite> {
    vec![
        Suite {
            name: SUITE_NAMES[0],
            checks: division_checks(),
        },
        Suite {
            name: SUITE_NAMES[1],
            checks: jordan_checks(),
        },
        Suite {
            name: SUITE_NAMES[2],
            checks: spectral_checks(),
        },
        Suite {
            name: SUITE_NAMES[3],
            checks: projective_checks(),
        },
        Suite {
            name: SUITE_NAMES[4],
            checks: matrix_model_checks(),
        },
    ]
}

/// Suite names with their check names, in run order.
pub fn list() -> Vec<(&'static str, Vec<String>)> {
    registry()
        .into_iter()
        .map(|s| (s.name, s.checks.into_iter().map(|c| c.name).collect()))
        .collect()
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run(suite: &str, options: VerifyOptions) -> Result<VerifyReport> {
    if suite != "all" && !SUITE_NAMES.contains(&suite) {
        return Err(Error::Invalid(format!(
            "unknown suite {suite:?}; expected all or one of {}",
            SUITE_NAMES.join(", ")
        )));
    }
    let mut check_id = 0u64;
    let mut suites = Vec::new();
    for s in registry() {
        let selected = suite == "all" || suite == s.name;
        let mut checks = Vec::new();
        for c in &s.checks {
            if selected {
                checks.push(run_check(c, check_id, options));
            }
            check_id += 1;
        }
        if selected {
            suites.push(SuiteReport {
                name: s.name.to_string(),
                passed: checks.iter().all(|c| c.passed),
                checks,
            });
        }
    }
    Ok(VerifyReport {
        seed: options.seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn run_check(check: &Check, check_id: u64, options: VerifyOptions) -> CheckReport {
    let trials = match check.trials {
        Some(default) => options.trials.unwrap_or(default),
        None => 1,
    };
    let outcomes: Vec<Result<Sample>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = SeededRng::new(options.seed, (check_id << 32) | t);
            (check.run)(&mut rng)
        })
        .collect();

    let mut failures = 0;
    let mut max_residual = 0.0_f64;
    let mut first_error = None;
    for outcome in outcomes {
        match outcome {
            Ok(s) => {
                if !s.passed() {
                    failures += 1;
                }
                if s.residual.is_nan() {
                    max_residual = f64::NAN;
                } else if !max_residual.is_nan() {
                    max_residual = max_residual.max(s.residual);
                }
            }
            Err(e) => {
                failures += 1;
                max_residual = f64::INFINITY;
                first_error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    CheckReport {
        name: check.name.clone(),
        trials,
        failures,
        max_residual,
        tolerance: check.tolerance,
        passed: failures == 0,
        first_error,
    }
}

fn max_scale(xs: &[&HermitianElement]) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max(x.max_norm()))
}

fn diff(a: &HermitianElement, b: &HermitianElement) -> Result<f64> {
    a.max_diff(b)
}

// ---------------------------------------------------------------- division

fn division_checks() -> Vec<Check> {
    vec![
        Check::random(
            "norm-composition",
            10_000,
            1e-12,
            Box::new(|rng| {
                let (a, b) = (rng.octonion(), rng.octonion());
                let nn = a.norm_sqr() * b.norm_sqr();
                Ok(Sample::new((a * b).norm_sqr() - nn, 1e-12 * nn.max(1.0)).abs())
            }),
        ),
        Check::random(
            "moufang",
            10_000,
            1e-12,
            Box::new(|rng| {
                let (a, b, c) = (rng.octonion(), rng.octonion(), rng.octonion());
                let lhs = ((a * b) * a) * c;
                let rhs = a * (b * (a * c));
                let scale = a.norm_sqr() * b.norm() * c.norm();
                Ok(Sample::new((lhs - rhs).max_abs(), 1e-12 * scale.max(1.0)))
            }),
        ),
        Check::random(
            "alternating-associator",
            10_000,
            1e-12,
            Box::new(|rng| {
                let (a, b, c) = (rng.octonion(), rng.octonion(), rng.octonion());
                let abc = Octonion::associator(&a, &b, &c);
                let scale = (a.norm() * b.norm() * c.norm()).max(1.0);
                let limit = 1e-12 * scale;
                Ok(Sample::all([
                    Sample::new((abc + Octonion::associator(&b, &a, &c)).max_abs(), limit),
                    Sample::new((abc + Octonion::associator(&a, &c, &b)).max_abs(), limit),
                    Sample::new((abc + Octonion::associator(&c, &b, &a)).max_abs(), limit),
                    Sample::new(Octonion::associator(&a, &a, &b).max_abs(), limit),
                ]))
            }),
        ),
        Check::random(
            "involutions-commute",
            10_000,
            0.0,
            Box::new(|rng| {
                let x = Bioctonion::new(rng.octonion(), rng.octonion());
                let both = x.conjugate(Conjugation::Both);
                Ok(Sample::holds(
                    x.tilde().complex_conj() == x.complex_conj().tilde()
                        && both == x.tilde().complex_conj(),
                ))
            }),
        ),
        Check::random(
            "doubling-consistency",
            10_000,
            1e-15,
            Box::new(|rng| {
                let (p, q) = (quaternion(rng), quaternion(rng));
                let prod = embed_quaternion(p) * embed_quaternion(q);
                let expected = embed_quaternion(hamilton(p, q));
                Ok(Sample::new((prod - expected).max_abs(), 1e-15))
            }),
        ),
        Check::fixed(
            "quaternion-units",
            Box::new(|_| {
                // i j = k, j k = i, k i = j, and squares -1
                let e = Octonion::unit;
                let ok = e(1) * e(2) == e(3)
                    && e(2) * e(3) == e(1)
                    && e(3) * e(1) == e(2)
                    && e(2) * e(1) == -e(3)
                    && (1..4).all(|k| e(k) * e(k) == -Octonion::ONE);
                Ok(Sample::holds(ok))
            }),
        ),
        Check::fixed(
            "zero-divisor",
            Box::new(|_| {
                let ie1 = Bioctonion::i() * Bioctonion::unit(1);
                let prod = (Bioctonion::ONE + ie1) * (Bioctonion::ONE - ie1);
                Ok(Sample::holds(prod == Bioctonion::ZERO))
            }),
        ),
    ]
}

impl Sample {
    fn abs(self) -> Self {
        Sample::new(self.residual.abs(), self.limit)
    }
}

fn quaternion(rng: &mut SeededRng) -> [f64; 4] {
    std::array::from_fn(|_| rng.uniform())
}

fn embed_quaternion(q: [f64; 4]) -> Octonion {
    let mut c = [0.0; 8];
    c[..4].copy_from_slice(&q);
    Octonion(c)
}

/// Hamilton's product in the basis `1, i, j, k`.
fn hamilton(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

// ------------------------------------------------------------- jordan core

fn ground_of_trial(rng: &mut SeededRng, grounds: &[Ground]) -> Ground {
    grounds[rng.below(grounds.len() as u64) as usize]
}

fn jordan_checks() -> Vec<Check> {
    let mut checks: Vec<Check> = Ground::ALL
        .into_iter()
        .map(|ground| {
            Check::random(
                format!("jordan-identity-{}", ground.label()),
                10_000,
                1e-9,
                Box::new(move |rng: &mut SeededRng| {
                    let a = rng.element(ground, 3, false)?;
                    let b = rng.element(ground, 3, false)?;
                    let a2 = a.square();
                    let lhs = a.jordan(&b.jordan(&a2)?)?;
                    let rhs = a.jordan(&b)?.jordan(&a2)?;
                    let scale = max_scale(&[&a, &b]);
                    Ok(Sample::new(
                        diff(&lhs, &rhs)?,
                        scaled_tolerance(1e-9, scale.powi(3)),
                    ))
                }) as TrialFn,
            )
        })
        .collect();

    checks.push(Check::random(
        "commutativity",
        1_000,
        0.0,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::ALL);
            let n = 2 + rng.below(3) as usize;
            let n = if g.is_associative() { n } else { 3 };
            let (a, b) = (rng.element(g, n, false)?, rng.element(g, n, false)?);
            Ok(Sample::new(diff(&a.jordan(&b)?, &b.jordan(&a)?)?, 0.0))
        }),
    ));
    checks.push(Check::random(
        "power-associativity",
        1_000,
        1e-9,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::ALL);
            let a = rng.element(g, 3, false)?;
            let a2 = a.square();
            let lhs = a2.square();
            let rhs = a2.jordan(&a)?.jordan(&a)?;
            Ok(Sample::new(
                diff(&lhs, &rhs)?,
                scaled_tolerance(1e-9, a.max_norm().powi(4)),
            ))
        }),
    ));
    checks.push(Check::random(
        "formal-reality",
        1_000,
        0.0,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::DIVISION);
            let zero = HermitianElement::zero(g, 3);
            let zero_ok = zero.trace_pairing(&zero)?.re == 0.0;
            let a = rng.element(g, 3, true)?;
            let tr = a.trace_pairing(&a)?;
            Ok(Sample::holds(zero_ok && tr.re > 0.0 && tr.im == 0.0))
        }),
    ));
    checks.push(Check::random(
        "trace-form-associativity",
        1_000,
        1e-10,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::ALL);
            let a = rng.element(g, 3, false)?;
            let b = rng.element(g, 3, false)?;
            let c = rng.element(g, 3, false)?;
            let lhs = a.jordan(&b)?.trace_pairing(&c)?;
            let rhs = a.trace_pairing(&b.jordan(&c)?)?;
            let scale = max_scale(&[&a, &b, &c]);
            Ok(Sample::new(
                (lhs - rhs).norm(),
                scaled_tolerance(1e-10, scale.powi(3)),
            ))
        }),
    ));
    checks.push(Check::random(
        "symmetric-functions",
        1_000,
        0.0,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::DIVISION);
            let l: Vec<f64> = (0..3).map(|_| rng.below(11) as f64 - 5.0).collect();
            let ch = HermitianElement::diagonal(g, &l).characteristic()?;
            let e1 = l[0] + l[1] + l[2];
            let e2 = l[0] * l[1] + l[0] * l[2] + l[1] * l[2];
            let e3 = l[0] * l[1] * l[2];
            Ok(Sample::holds(
                ch.trace == e1 && ch.sigma == e2 && ch.det == e3,
            ))
        }),
    ));
    checks.push(Check::random(
        "cubic-form-diagonal",
        1_000,
        1e-9,
        Box::new(|rng| {
            let g = ground_of_trial(rng, &Ground::ALL);
            let a = rng.element(g, 3, false)?;
            let c = cubic_form(&a, &a, &a)?;
            let det = a.determinant()?;
            Ok(Sample::new(
                (c - det).norm(),
                scaled_tolerance(1e-9, a.max_norm().powi(3)),
            ))
        }),
    ));
    checks.push(Check::random(
        "spin-jordan-identity",
        1_000,
        1e-9,
        Box::new(|rng| {
            let dim = 2 + rng.below(8) as usize;
            let mut draw =
                || SpinFactorElement::new((0..dim).map(|_| rng.uniform()).collect(), rng.uniform());
            let (a, b) = (draw(), draw());
            let a2 = a.product(&a)?;
            let lhs = a.product(&b.product(&a2)?)?;
            let rhs = a.product(&b)?.product(&a2)?;
            let scale = a
                .space
                .iter()
                .chain(&b.space)
                .chain([&a.time, &b.time])
                .fold(0.0_f64, |m, x| m.max(x.abs()));
            Ok(Sample::new(
                lhs.max_diff(&rhs)?,
                scaled_tolerance(1e-9, scale.powi(3)),
            ))
        }),
    ));
    checks
}

// ---------------------------------------------------------------- spectral

fn spectral_checks() -> Vec<Check> {
    fn octonionic(rng: &mut SeededRng) -> Result<HermitianElement> {
        rng.element(Ground::Octonion, 3, true)
    }

    let mut checks = vec![
        Check::random(
            "real-spectrum",
            1_000,
            0.0,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                Ok(Sample::holds(spectral_decompose(&phi)?.roots().len() == 3))
            }),
        ),
        Check::random(
            "reconstruction",
            1_000,
            1e-8,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                let frame = spectral_decompose(&phi)?;
                let r = diff(&frame.reconstruct()?, &phi)?;
                Ok(Sample::new(r, scaled_tolerance(1e-8, phi.max_norm())))
            }),
        ),
        Check::random(
            "orthogonality-completeness",
            1_000,
            1e-8,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                let frame = spectral_decompose(&phi)?;
                let ps = &frame.projections;
                let mut samples = Vec::new();
                let mut total = HermitianElement::zero(Ground::Octonion, 3);
                for (i, p) in ps.iter().enumerate() {
                    samples.push(Sample::new(diff(&p.square(), p)?, 1e-8));
                    for q in &ps[i + 1..] {
                        samples.push(Sample::new(p.jordan(q)?.max_norm(), 1e-8));
                    }
                    total = total.add(p)?;
                }
                let id = HermitianElement::identity(Ground::Octonion, 3);
                samples.push(Sample::new(diff(&total, &id)?, 1e-8));
                Ok(Sample::all(samples))
            }),
        ),
        Check::random(
            "vieta",
            1_000,
            1e-8,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                let ch = phi.characteristic()?;
                let l = spectral_decompose(&phi)?.roots();
                let m = l.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
                Ok(Sample::all([
                    Sample::new((l[0] + l[1] + l[2] - ch.trace).abs(), 1e-8 * m),
                    Sample::new(
                        (l[0] * l[1] + l[0] * l[2] + l[1] * l[2] - ch.sigma).abs(),
                        1e-8 * m * m,
                    ),
                    Sample::new((l[0] * l[1] * l[2] - ch.det).abs(), 1e-8 * m * m * m),
                ]))
            }),
        ),
        Check::random(
            "eigen-equation",
            1_000,
            1e-8,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                let frame = spectral_decompose(&phi)?;
                let limit = scaled_tolerance(1e-8, phi.max_norm());
                let samples = frame
                    .eigenvalues
                    .iter()
                    .zip(&frame.projections)
                    .map(|(l, p)| Ok(Sample::new(diff(&phi.jordan(p)?, &p.scale(*l))?, limit)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sample::all(samples))
            }),
        ),
        Check::random(
            "lightlike-eigenprojections",
            1_000,
            1e-10,
            Box::new(|rng| {
                let phi = octonionic(rng)?;
                let frame = spectral_decompose(&phi)?;
                let samples = frame
                    .multiplicities
                    .iter()
                    .zip(&frame.projections)
                    .filter(|(m, _)| **m == 1)
                    .map(|(_, p)| Ok(Sample::new(p.sharp()?.max_norm(), 1e-10)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sample::all(samples))
            }),
        ),
    ];
    for ground in [Ground::Real, Ground::Complex] {
        checks.push(Check::random(
            format!("eigensolver-regression-{}", ground.label()),
            1_000,
            1e-9,
            Box::new(move |rng: &mut SeededRng| {
                let phi = rng.element(ground, 3, true)?;
                let mut ours = spectral_decompose(&phi)?.roots();
                ours.sort_by(f64::total_cmp);
                let m: DMatrix<Complex64> = phi.to_complex_matrix()?;
                let mut oracle: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
                oracle.sort_by(f64::total_cmp);
                let r = ours
                    .iter()
                    .zip(&oracle)
                    .fold(0.0_f64, |w, (a, b)| w.max((a - b).abs()));
                Ok(Sample::new(r, scaled_tolerance(1e-9, phi.max_norm())))
            }),
        ));
    }
    checks
}

// -------------------------------------------------------------- projective

fn point_samples(p: &ProjectivePoint) -> Result<Vec<Sample>> {
    let x = p.element();
    Ok(vec![
        Sample::new(diff(&x.square(), x)?, 1e-10),
        Sample::new((x.trace() - 1.0).norm(), 1e-10),
        Sample::new(x.determinant()?.norm(), 1e-10),
        Sample::new(x.sharp()?.max_norm(), 1e-10),
    ])
}

fn containment(p: &HermitianElement, l: &HermitianElement) -> Result<f64> {
    diff(&p.jordan(l)?, p)
}

/// Minimum separation for sampled triangles: pairwise `tr(p∘q) <= 1 − δ`
/// and the third point at least `δ` off the line through the first two.
/// Nearly collinear triples make the meet of two joins ill-conditioned.
const GENERAL_POSITION: f64 = 1e-2;

/// Three random points in general position.
fn general_position(rng: &mut SeededRng, ground: Ground) -> Result<[ProjectivePoint; 3]> {
    loop {
        let (p, q, r) = (
            rng.point(ground, 3)?,
            rng.point(ground, 3)?,
            rng.point(ground, 3)?,
        );
        let close = |a: &ProjectivePoint, b: &ProjectivePoint| -> Result<bool> {
            Ok(transition_probability(a, b)? > 1.0 - GENERAL_POSITION)
        };
        if close(&p, &q)? || close(&p, &r)? || close(&q, &r)? {
            continue;
        }
        let off_line = 1.0 - r.element().trace_pairing(join(&p, &q)?.element())?.re;
        if off_line >= GENERAL_POSITION {
            return Ok([p, q, r]);
        }
    }
}

fn projective_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for ground in Ground::DIVISION {
        let label = ground.label();
        checks.push(Check::random(
            format!("join-incidence-{label}"),
            1_000,
            1e-10,
            Box::new(move |rng: &mut SeededRng| {
                let (p, q) = (rng.point(ground, 3)?, rng.point(ground, 3)?);
                let l = join(&p, &q)?;
                Ok(Sample::all([
                    Sample::new(containment(p.element(), l.element())?, 1e-10),
                    Sample::new(containment(q.element(), l.element())?, 1e-10),
                ]))
            }) as TrialFn,
        ));
        checks.push(Check::random(
            format!("meet-incidence-{label}"),
            1_000,
            1e-10,
            Box::new(move |rng: &mut SeededRng| {
                let l1 = rng.point(ground, 3)?.dual();
                let l2 = rng.point(ground, 3)?.dual();
                let m = meet(&l1, &l2)?;
                Ok(Sample::all([
                    Sample::new(containment(m.element(), l1.element())?, 1e-10),
                    Sample::new(containment(m.element(), l2.element())?, 1e-10),
                ]))
            }),
        ));
        checks.push(Check::random(
            format!("join-meet-duality-{label}"),
            1_000,
            1e-10,
            Box::new(move |rng: &mut SeededRng| {
                let [p, q, r] = general_position(rng, ground)?;
                let back = meet(&join(&p, &q)?, &join(&p, &r)?)?;
                let [a, b, c] = general_position(rng, ground)?;
                let (l, m, n) = (a.dual(), b.dual(), c.dual());
                let line = join(&meet(&l, &m)?, &meet(&l, &n)?)?;
                Ok(Sample::all([
                    Sample::new(diff(back.element(), p.element())?, 1e-10),
                    Sample::new(diff(line.element(), l.element())?, 1e-10),
                ]))
            }),
        ));
        checks.push(Check::random(
            format!("point-invariants-{label}"),
            1_000,
            1e-10,
            Box::new(move |rng: &mut SeededRng| {
                Ok(Sample::all(point_samples(&rng.point(ground, 3)?)?))
            }),
        ));
        checks.push(Check::random(
            format!("normalization-invariance-{label}"),
            1_000,
            1e-14,
            Box::new(move |rng: &mut SeededRng| {
                let v = rng.point_vector(ground, 3)?;
                let c = loop {
                    let c = 4.0 * rng.uniform();
                    if c.abs() > 1e-3 {
                        break c;
                    }
                };
                let w: Vec<Bioctonion> = v.iter().map(|x| x.scale(c)).collect();
                let p = point_from_vector(ground, &v, DEFAULT_TOLERANCE)?;
                let q = point_from_vector(ground, &w, DEFAULT_TOLERANCE)?;
                Ok(Sample::new(diff(p.element(), q.element())?, 1e-14))
            }),
        ));
        checks.push(Check::random(
            format!("transition-range-{label}"),
            1_000,
            1e-12,
            Box::new(move |rng: &mut SeededRng| {
                let (p, q) = (rng.point(ground, 3)?, rng.point(ground, 3)?);
                let t = transition_probability(&p, &q)?;
                let self_t = transition_probability(&p, &p)?;
                Ok(Sample::all([
                    Sample::new((-t).max(t - 1.0).max(0.0), 1e-12),
                    Sample::new((self_t - 1.0).abs(), 1e-12),
                ]))
            }),
        ));
    }
    checks.push(Check::random(
        "associator-necessity",
        1_000,
        0.0,
        Box::new(|rng| {
            let v: Vec<Bioctonion> = (0..3).map(|_| rng.octonion().into()).collect();
            let rejected = point_from_vector(Ground::Octonion, &v, DEFAULT_TOLERANCE).is_err();
            let w = outer_product(Ground::Octonion, &v)?;
            let w = w.scale(1.0 / w.trace_real());
            let not_idempotent = diff(&w.square(), &w)? > DEFAULT_TOLERANCE;
            Ok(Sample::holds(rejected && not_idempotent))
        }),
    ));
    checks.push(Check::random(
        "transition-probability-C",
        1_000,
        1e-12,
        Box::new(|rng| {
            let u = rng.point_vector(Ground::Complex, 3)?;
            let v = rng.point_vector(Ground::Complex, 3)?;
            let p = point_from_vector(Ground::Complex, &u, DEFAULT_TOLERANCE)?;
            let q = point_from_vector(Ground::Complex, &v, DEFAULT_TOLERANCE)?;
            let z = |x: &Bioctonion| Complex64::new(x.re.0[0], x.re.0[1]);
            let inner: Complex64 = u.iter().zip(&v).map(|(a, b)| z(a).conj() * z(b)).sum();
            let nu: f64 = u.iter().map(|a| z(a).norm_sqr()).sum();
            let nv: f64 = v.iter().map(|a| z(a).norm_sqr()).sum();
            let expected = inner.norm_sqr() / (nu * nv);
            Ok(Sample::new(
                (transition_probability(&p, &q)? - expected).abs(),
                1e-12,
            ))
        }),
    ));
    checks.push(Check::random(
        "heavenly-sphere",
        1_000,
        1e-10,
        Box::new(|rng| {
            let lightlike = rng.below(2) == 0;
            let x = if lightlike {
                let v: Vec<Bioctonion> = (0..2).map(|_| rng.octonion().into()).collect();
                outer_product(Ground::Octonion, &v)?
            } else {
                rng.element(Ground::Octonion, 2, true)?
            };
            let by_det = is_lightlike(&x, 1e-10)?;
            let by_form = minkowski_coordinates(&x)?
                .to_spin_factor()
                .is_lightlike(1e-10);
            Ok(Sample::holds(by_det == lightlike && by_form == lightlike))
        }),
    ));
    checks
}

// ------------------------------------------------------------ matrix model

/// Random configuration scaled so its largest component is 1.
fn unit_configuration(
    rng: &mut SeededRng,
    ground: Ground,
    dim: usize,
) -> Result<GaugeConfiguration> {
    let cfg = rng.configuration(ground, dim, true)?;
    let m = cfg
        .elements()
        .iter()
        .fold(0.0_f64, |m, x| m.max(x.max_norm()));
    Ok(cfg.scaled(1.0 / m))
}

fn with_slot_copied(
    cfg: &GaugeConfiguration,
    from: usize,
    to: usize,
) -> Result<GaugeConfiguration> {
    let mut elements = cfg.elements().to_vec();
    elements[to] = elements[from].clone();
    GaugeConfiguration::new(cfg.coupling, elements)
}

fn matrix_model_checks() -> Vec<Check> {
    vec![
        Check::random(
            "gauge-antisymmetry-smolin",
            1_000,
            1e-12,
            Box::new(|rng| {
                let g = GaugeAlgebra::su2();
                let cfg = unit_configuration(rng, Ground::Octonion, 3)?;
                let mut samples = Vec::new();
                for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
                    let s = smolin_action(&with_slot_copied(&cfg, i, j)?, &g)?;
                    samples.push(Sample::new(s.abs(), 1e-12));
                }
                Ok(Sample::all(samples))
            }),
        ),
        Check::random(
            "gauge-antisymmetry-e6",
            1_000,
            1e-12,
            Box::new(|rng| {
                let g = GaugeAlgebra::su2();
                let cfg = unit_configuration(rng, Ground::Bioctonion, 3)?;
                let mut samples = Vec::new();
                for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
                    let s = ohwashi_action_complex(&with_slot_copied(&cfg, i, j)?, &g)?;
                    samples.push(Sample::new(s.norm(), 1e-12));
                }
                Ok(Sample::all(samples))
            }),
        ),
        Check::random(
            "cubic-scaling",
            1_000,
            1e-9,
            Box::new(|rng| {
                let g = GaugeAlgebra::su2();
                let c = 1.25 + 0.75 * rng.uniform();
                let c3 = c * c * c;
                let o = rng.configuration(Ground::Octonion, 3, true)?;
                let b = rng.configuration(Ground::Bioctonion, 3, false)?;
                let bound = |cfg: &GaugeConfiguration| {
                    let m = cfg
                        .elements()
                        .iter()
                        .fold(0.0_f64, |m, x| m.max(x.max_norm()));
                    c3 * g.abs_sum() * m.powi(3)
                };
                let s = smolin_action(&o, &g)?;
                let sc = smolin_action(&o.scaled(c), &g)?;
                let e = ohwashi_action_complex(&b, &g)?;
                let ec = ohwashi_action_complex(&b.scaled(c), &g)?;
                Ok(Sample::all([
                    Sample::new((sc - c3 * s).abs(), scaled_tolerance(1e-9, bound(&o))),
                    Sample::new((ec - e * c3).norm(), scaled_tolerance(1e-9, bound(&b))),
                ]))
            }),
        ),
        Check::random(
            "rho-automorphism",
            1_000,
            1e-10,
            Box::new(|rng| {
                let a = rng.element(Ground::Octonion, 3, true)?;
                let b = rng.element(Ground::Octonion, 3, true)?;
                let s = max_scale(&[&a, &b]);
                let (ra, rb) = (rho(&a, 1)?, rho(&b, 1)?);
                Ok(Sample::all([
                    Sample::new(
                        diff(&rho(&a.jordan(&b)?, 1)?, &ra.jordan(&rb)?)?,
                        scaled_tolerance(1e-10, s * s),
                    ),
                    Sample::new(
                        diff(&rho(&a.freudenthal(&b)?, 1)?, &ra.freudenthal(&rb)?)?,
                        scaled_tolerance(1e-10, s * s),
                    ),
                    Sample::new(
                        (ra.determinant()? - a.determinant()?).norm(),
                        scaled_tolerance(1e-10, s.powi(3)),
                    ),
                    Sample::holds(rho(&a, 3)? == a && rho(&ra, 2)? == a),
                ]))
            }),
        ),
        Check::random(
            "bfss-bijection",
            1_000,
            0.0,
            Box::new(|rng| {
                let phi = rng.element(Ground::Octonion, 3, true)?;
                let there_and_back = bfss_unsplit(&bfss_split(&phi)?)? == phi;
                let s = BfssSplit {
                    x: rng.element(Ground::Octonion, 2, true)?,
                    a: rng.uniform(),
                    theta: [rng.octonion(), rng.octonion()],
                };
                let back_and_there = bfss_split(&bfss_unsplit(&s)?)? == s;
                Ok(Sample::holds(there_and_back && back_and_there))
            }),
        ),
        Check::random(
            "minkowski-determinant",
            1_000,
            1e-10,
            Box::new(|rng| {
                let x = rng.element(Ground::Octonion, 2, true)?;
                let pt = minkowski_coordinates(&x)?;
                let spin = pt.to_spin_factor();
                let limit = scaled_tolerance(1e-10, x.max_norm().powi(2));
                Ok(Sample::all([
                    Sample::new((pt.det - pt.quadratic_form()).abs(), limit),
                    Sample::new((x.determinant()?.re - pt.quadratic_form()).abs(), limit),
                    Sample::new((spin.minkowski(&spin)? + pt.det).abs(), limit),
                ]))
            }),
        ),
    ]
}
