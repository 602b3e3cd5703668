//! Full-size instances checked against an independent oracle. Beyond a few
//! thousand points the oracle is the sorted scan rather than brute force.

use closest_pair::generators::{gen_truncated_normal, gen_uniform, Distribution, GenSpec};
use closest_pair::{
    cpp_ap, cpp_aps, cpp_dc, cpp_km, cpp_mm, cpp_ps, cpp_rl, rng_from_seed, Algorithm, Point,
    SamplingMode,
};

fn assert_close(actual: f64, expected: f64) {
    assert!(
        (actual - expected).abs() <= 1e-12 * expected,
        "{actual} vs {expected}"
    );
}

#[test]
fn aps_uniform_4096_seed_42() {
    let points = gen_uniform(4096, 42).unwrap();
    assert_eq!(
        cpp_aps(&points).unwrap().delta(),
        cpp_ap(&points).unwrap().delta()
    );
}

#[test]
fn dc_uniform_10000_seed_7() {
    let points = gen_uniform(10_000, 7).unwrap();
    assert_close(
        cpp_dc(&points).unwrap().delta(),
        cpp_ap(&points).unwrap().delta(),
    );
}

#[test]
fn ps_truncated_normal_8192_seed_3() {
    let points = gen_truncated_normal(8192, Point::new(0.5, 0.5), 0.2, 3).unwrap();
    assert_close(
        cpp_ps(&points).unwrap().delta(),
        cpp_ap(&points).unwrap().delta(),
    );
}

#[test]
fn rl_uniform_65536_seed_11_both_modes() {
    let points = gen_uniform(65_536, 11).unwrap();
    let expected = cpp_aps(&points).unwrap().delta();
    for mode in [SamplingMode::Points, SamplingMode::Distances] {
        assert_close(
            cpp_rl(&points, &mut rng_from_seed(11), mode)
                .unwrap()
                .delta(),
            expected,
        );
    }
}

#[test]
fn km_truncated_normal_32768_seed_5() {
    let points = gen_truncated_normal(32_768, Point::new(0.5, 0.5), 0.2, 5).unwrap();
    let expected = cpp_aps(&points).unwrap().delta();
    assert_close(
        cpp_km(&points, &mut rng_from_seed(5)).unwrap().delta(),
        expected,
    );
}

#[test]
fn mm_adversarial_1000_is_correct_and_quadratic() {
    let points = GenSpec {
        n: 1000,
        distribution: Distribution::AdversarialMm,
        seed: 0,
    }
    .generate()
    .unwrap();
    let s = cpp_mm(&points).unwrap();
    assert_eq!(s.delta(), cpp_ap(&points).unwrap().delta());
    assert!(s.counters.distance_evaluations as f64 >= 0.4 * 996.0 * 995.0 / 2.0);
}

#[test]
fn every_algorithm_on_a_narrow_truncated_normal() {
    // sigma = 2^-6 packs the points tightly around the centre.
    let points = gen_truncated_normal(20_000, Point::new(0.5, 0.5), 1.0 / 64.0, 13).unwrap();
    let expected = cpp_aps(&points).unwrap().delta();
    for a in Algorithm::ALL.iter().filter(|a| **a != Algorithm::Ap) {
        assert_close(a.run(&points, 2).unwrap().delta(), expected);
    }
}

#[test]
fn runs_are_reproducible() {
    let points = gen_uniform(20_000, 99).unwrap();
    for a in Algorithm::ALL.iter().filter(|a| **a != Algorithm::Ap) {
        assert_eq!(
            a.run(&points, 4).unwrap(),
            a.run(&points, 4).unwrap(),
            "{a}"
        );
    }
    assert_eq!(gen_uniform(20_000, 99).unwrap(), points);
}
