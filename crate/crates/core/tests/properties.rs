use albert::io::{element_to_value, parse_document, parse_element, point_to_value, Document};
use albert::projective::{point_from_vector, DEFAULT_TOLERANCE};
use albert::random::SeededRng;
use albert::spectral::spectral_decompose;
use albert::{Ground, HermitianElement, Octonion};
use proptest::prelude::*;

fn ground() -> impl Strategy<Value = Ground> {
    prop::sample::select(Ground::ALL.to_vec())
}

fn division_ground() -> impl Strategy<Value = Ground> {
    prop::sample::select(Ground::DIVISION.to_vec())
}

/// Element drawn from the library generator under a proptest-chosen seed.
fn element(g: Ground, n: usize, seed: u64) -> HermitianElement {
    SeededRng::new(seed, 0).element(g, n, false).unwrap()
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-4.0..4.0f64).prop_map(Octonion)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn json_round_trip_is_exact(g in ground(), seed: u64, n in 1usize..4) {
        let x = element(g, n, seed);
        let text = serde_json::to_string(&element_to_value(&x)).unwrap();
        prop_assert_eq!(parse_element(&text).unwrap(), x);
    }

    #[test]
    fn point_documents_round_trip(g in division_ground(), seed: u64) {
        let p = SeededRng::new(seed, 0).point(g, 3).unwrap();
        let text = serde_json::to_string(&point_to_value(&p)).unwrap();
        match parse_document(&text, DEFAULT_TOLERANCE).unwrap() {
            Document::Point(q) => prop_assert_eq!(q, p),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }

    #[test]
    fn jordan_product_commutes_bitwise(g in ground(), seed: u64) {
        let (a, b) = (element(g, 3, seed), element(g, 3, seed ^ 1));
        prop_assert_eq!(a.jordan(&b).unwrap(), b.jordan(&a).unwrap());
    }

    #[test]
    fn jordan_product_is_bilinear(g in ground(), seed: u64, s in -3.0..3.0f64) {
        let (a, b, c) = (element(g, 3, seed), element(g, 3, seed ^ 1), element(g, 3, seed ^ 2));
        let lhs = a.add(&b.scale(s)).unwrap().jordan(&c).unwrap();
        let rhs = a.jordan(&c).unwrap().add(&b.jordan(&c).unwrap().scale(s)).unwrap();
        prop_assert!(lhs.max_diff(&rhs).unwrap() <= 1e-12);
    }

    #[test]
    fn identity_is_the_unit(g in ground(), seed: u64, n in 1usize..4) {
        let a = element(g, n, seed);
        let id = HermitianElement::identity(g, n);
        prop_assert_eq!(a.jordan(&id).unwrap(), a);
    }

    #[test]
    fn octonion_norm_is_multiplicative(a in octonion(), b in octonion()) {
        let nn = a.norm_sqr() * b.norm_sqr();
        prop_assert!(((a * b).norm_sqr() - nn).abs() <= 1e-12 * nn.max(1.0));
    }

    #[test]
    fn octonions_are_alternative(a in octonion(), b in octonion()) {
        prop_assert!(Octonion::associator(&a, &a, &b).max_abs() <= 1e-12 * (1.0 + a.norm_sqr() * b.norm()));
        prop_assert!(Octonion::associator(&a, &b, &b).max_abs() <= 1e-12 * (1.0 + b.norm_sqr() * a.norm()));
    }

    #[test]
    fn spectral_trace_matches(seed: u64, s in 0.01..100.0f64) {
        let x = SeededRng::new(seed, 0).element(Ground::Octonion, 3, true).unwrap().scale(s);
        let frame = spectral_decompose(&x).unwrap();
        let sum: f64 = frame.roots().iter().sum();
        prop_assert!((sum - x.trace_real()).abs() <= 1e-8 * s.max(1.0));
        prop_assert!(frame.reconstruct().unwrap().max_diff(&x).unwrap() <= 1e-8 * x.max_norm().max(1.0));
    }

    #[test]
    fn points_from_vectors_are_scale_free(g in division_ground(), seed: u64, c in 0.1..10.0f64) {
        let v = SeededRng::new(seed, 0).point_vector(g, 3).unwrap();
        let w: Vec<_> = v.iter().map(|x| x.scale(-c)).collect();
        let p = point_from_vector(g, &v, DEFAULT_TOLERANCE).unwrap();
        let q = point_from_vector(g, &w, DEFAULT_TOLERANCE).unwrap();
        prop_assert!(p.element().max_diff(q.element()).unwrap() <= 1e-14);
    }
}
