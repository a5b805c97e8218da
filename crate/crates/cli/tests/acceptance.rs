//! Acceptance criteria, one PASS/FAIL line each. Runs without the test
//! harness so the lines always reach the output.

use std::process::Command;

use albert::jordan::cubic_form;
use albert::matrix_model::{ohwashi_action_complex, rho, smolin_action};
use albert::projective::{join, meet, ProjectiveLine, ProjectivePoint, DEFAULT_TOLERANCE};
use albert::random::SeededRng;
use albert::spectral::solve_characteristic_cubic;
use albert::{
    Bioctonion, Complex64, GaugeAlgebra, GaugeConfiguration, Ground, HermitianElement, Octonion,
};
use serde_json::Value;

fn verify_report() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_albert"))
        .args(["verify", "--seed", "42"])
        .output()
        .expect("binary runs");
    assert!(
        out.status.code() == Some(0) || out.status.code() == Some(2),
        "verify exited with {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

/// `(passed, trials)` of every check whose name starts with `prefix`.
fn checks<'a>(report: &'a Value, suite: &str, prefix: &str) -> Vec<(&'a str, bool, u64)> {
    report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["name"] == suite)
        .flat_map(|s| s["checks"].as_array().unwrap())
        .filter(|c| c["name"].as_str().unwrap().starts_with(prefix))
        .map(|c| {
            (
                c["name"].as_str().unwrap(),
                c["passed"].as_bool().unwrap(),
                c["trials"].as_u64().unwrap(),
            )
        })
        .collect()
}

/// All named checks present, passing, and run with at least `min_trials`.
fn all_pass(report: &Value, suite: &str, prefixes: &[&str], min_trials: u64) -> bool {
    prefixes.iter().all(|p| {
        let found = checks(report, suite, p);
        !found.is_empty() && found.iter().all(|&(_, ok, t)| ok && t >= min_trials)
    })
}

fn diag(v: &[f64]) -> HermitianElement {
    HermitianElement::diagonal(Ground::Octonion, v)
}

fn fixture_table() -> bool {
    let roots = solve_characteristic_cubic(6.0, 11.0, 6.0).unwrap();
    let roots_ok = roots
        .iter()
        .zip([1.0, 2.0, 3.0])
        .all(|(r, e)| (r - e).abs() <= 1e-12);

    let p = |v: &[f64]| ProjectivePoint::new(diag(v), DEFAULT_TOLERANCE).unwrap();
    let l = |v: &[f64]| ProjectiveLine::new(diag(v), DEFAULT_TOLERANCE).unwrap();
    let join_ok = join(&p(&[1.0, 0.0, 0.0]), &p(&[0.0, 1.0, 0.0]))
        .unwrap()
        .element()
        == &diag(&[1.0, 1.0, 0.0]);
    let meet_ok = meet(&l(&[1.0, 1.0, 0.0]), &l(&[0.0, 1.0, 1.0]))
        .unwrap()
        .element()
        == &diag(&[0.0, 1.0, 0.0]);

    let rho_ok = rho(&diag(&[1.0, 2.0, 3.0]), 1).unwrap() == diag(&[2.0, 3.0, 1.0]);
    let mut rng = SeededRng::new(42, 0);
    let mut cycle_ok = true;
    let mut cubic_ok = true;
    for k in 0..1000 {
        let x = rng.element(Ground::ALL[k % 5], 3, false).unwrap();
        cycle_ok &= rho(&x, 3).unwrap() == x && rho(&rho(&x, 1).unwrap(), 2).unwrap() == x;
        let c = cubic_form(&x, &x, &x).unwrap();
        cubic_ok &= (c - x.determinant().unwrap()).norm() <= 1e-9;
    }
    let id = HermitianElement::identity(Ground::Octonion, 3);
    let sharp_ok = id.freudenthal(&id).unwrap() == id;
    roots_ok && join_ok && meet_ok && rho_ok && cycle_ok && sharp_ok && cubic_ok
}

fn oct(k: usize, v: f64) -> Octonion {
    let mut c = [0.0; 8];
    c[k] = v;
    Octonion(c)
}

/// Configurations and values frozen from the dense brute-force oracles in
/// the core crate's tests.
fn frozen_actions() -> bool {
    let g = GaugeAlgebra::su2();
    let o = Ground::Octonion;
    let el = |ground, d: [f64; 3], u: [Bioctonion; 3]| {
        let d = d.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        HermitianElement::new(ground, d, u.to_vec()).unwrap()
    };
    let b = |x: Octonion| Bioctonion::from(x);
    let sparse = GaugeConfiguration::new(
        1.0,
        vec![
            diag(&[1.0, 0.0, 0.0]),
            diag(&[0.0, 1.0, 0.0]),
            HermitianElement::zero(o, 3)
                .with_entry(0, 1, b(oct(1, 1.0)))
                .unwrap(),
        ],
    )
    .unwrap();
    let dense = GaugeConfiguration::new(
        1.0,
        vec![
            el(
                o,
                [1.0, 0.5, -1.0],
                [b(oct(1, 1.0)), b(oct(2, 0.5)), b(oct(4, -1.0))],
            ),
            el(
                o,
                [0.0, 2.0, 1.0],
                [
                    b(oct(0, 0.5) + oct(3, 1.0)),
                    b(oct(5, 1.0)),
                    b(oct(6, 0.25)),
                ],
            ),
            el(
                o,
                [-1.0, 1.0, 0.5],
                [
                    b(oct(7, 1.0)),
                    b(oct(1, -0.5) + oct(2, 1.0)),
                    b(oct(4, 0.75)),
                ],
            ),
        ],
    )
    .unwrap();
    let co = Ground::Bioctonion;
    let bi = |re: Octonion, im: Octonion| Bioctonion::new(re, im);
    let z = Octonion::ZERO;
    let diagonal = GaugeConfiguration::new(
        1.0,
        vec![
            HermitianElement::diagonal(co, &[1.0, 2.0, 3.0]),
            HermitianElement::diagonal(co, &[0.0, 1.0, -1.0]),
            HermitianElement::diagonal(co, &[2.0, 0.0, 1.0]),
        ],
    )
    .unwrap();
    let full = GaugeConfiguration::new(
        1.0,
        vec![
            el(
                co,
                [1.0, 0.5, -1.0],
                [
                    bi(oct(1, 1.0), oct(2, 0.5)),
                    bi(oct(0, 1.0), oct(4, 1.0)),
                    bi(z, oct(7, -1.0)),
                ],
            ),
            el(
                co,
                [0.0, 2.0, 1.0],
                [
                    bi(oct(3, 0.5), z),
                    bi(oct(5, 1.0), oct(1, 0.25)),
                    bi(oct(6, 1.0), oct(6, 1.0)),
                ],
            ),
            el(
                co,
                [-1.0, 1.0, 0.5],
                [
                    bi(oct(2, 1.0), oct(3, -1.0)),
                    bi(z, oct(0, 0.5)),
                    bi(oct(4, 0.75), z),
                ],
            ),
        ],
    )
    .unwrap();
    let four_pi = 4.0 * std::f64::consts::PI;
    (smolin_action(&sparse, &g).unwrap()).abs() <= 1e-12
        && (smolin_action(&dense, &g).unwrap() - (-5.25 / four_pi)).abs() <= 1e-12
        && (ohwashi_action_complex(&diagonal, &g).unwrap() - Complex64::new(4.5, 0.0)).norm()
            <= 1e-12
        && (ohwashi_action_complex(&full, &g).unwrap() - Complex64::new(-1.5, 3.0)).norm() <= 1e-12
}

fn main() {
    let first = verify_report();
    let second = verify_report();
    let report: Value = serde_json::from_slice(&first).expect("report is JSON");

    let criteria: [(&str, bool); 8] = [
        (
            "1 Jordan identity over R, C, H, O, C⊗O",
            all_pass(&report, "jordan-core", &["jordan-identity-"], 10_000)
                && checks(&report, "jordan-core", "jordan-identity-").len() == 5,
        ),
        (
            "2 norm composition, Moufang, zero divisor",
            all_pass(
                &report,
                "division-algebras",
                &["norm-composition", "moufang"],
                10_000,
            ) && all_pass(&report, "division-algebras", &["zero-divisor"], 1),
        ),
        (
            "3 spectral suite",
            all_pass(
                &report,
                "spectral",
                &[
                    "reconstruction",
                    "orthogonality-completeness",
                    "vieta",
                    "eigensolver-regression-",
                ],
                1_000,
            ) && checks(&report, "spectral", "eigensolver-regression-").len() == 2,
        ),
        (
            "4 projective suite",
            all_pass(
                &report,
                "projective",
                &[
                    "join-incidence-",
                    "join-meet-duality-",
                    "point-invariants-",
                    "associator-necessity",
                ],
                1_000,
            ) && checks(&report, "projective", "join-incidence-").len() == 4,
        ),
        ("5 exact fixture table", fixture_table()),
        (
            "6 action suite",
            all_pass(
                &report,
                "matrix-model",
                &["gauge-antisymmetry-", "cubic-scaling"],
                1_000,
            ) && frozen_actions(),
        ),
        (
            "7 Minkowski consistency",
            all_pass(&report, "matrix-model", &["minkowski-determinant"], 1_000)
                && all_pass(&report, "projective", &["heavenly-sphere"], 1_000),
        ),
        (
            "8 deterministic verify report",
            first == second && !first.is_empty(),
        ),
    ];

    for (name, ok) in &criteria {
        println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    if !criteria.iter().all(|(_, ok)| *ok) {
        std::process::exit(1);
    }
}
