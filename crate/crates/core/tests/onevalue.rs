use latrect::{f0, f_baseline, f_cuberoot, f_divisorlayer, f_sqrt, f_tenmoment, Algorithm, ExactInt};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_agree(n: u64, algos: &[Algorithm]) {
    let want = algos[0].run(n).unwrap();
    for a in &algos[1..] {
        assert_eq!(a.run(n).unwrap(), want, "{a} disagrees with {} at n = {n}", algos[0]);
    }
}

#[test]
fn all_algorithms_agree_up_to_512() {
    for n in 1..=512 {
        all_agree(n, &Algorithm::CONCRETE);
    }
}

#[test]
fn random_sample_up_to_1e5() {
    // Baseline is quadratic in n, so it joins only the smaller half.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..8 {
        all_agree(rng.gen_range(513..=20_000), &Algorithm::CONCRETE);
    }
    let fast = [Algorithm::Divisorlayer, Algorithm::Tenmoment, Algorithm::Cuberoot, Algorithm::Sqrt];
    for _ in 0..8 {
        all_agree(rng.gen_range(20_000..=100_000), &fast);
    }
}

#[test]
#[ignore = "about an hour: 100 samples with every algorithm"]
fn random_sample_up_to_1e5_full() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        all_agree(rng.gen_range(1..=100_000), &Algorithm::CONCRETE);
    }
}

#[test]
fn divisorlayer_matches_tenmoment_on_powers_of_two() {
    for k in 13..=20 {
        assert_eq!(f_divisorlayer(1 << k).unwrap(), f_tenmoment(1 << k).unwrap(), "k = {k}");
    }
}

#[test]
fn small_values_are_axis_and_diagonal_only() {
    for n in 1..=3 {
        assert_eq!(f_baseline(n).unwrap(), f0(n));
    }
    assert_eq!(f_sqrt(3).unwrap(), ExactInt::from(10));
}

#[test]
fn rejects_zero() {
    for a in Algorithm::CONCRETE {
        assert!(a.run(0).is_err(), "{a}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monotone_and_above_f0(n in 1u64..5000) {
        let here = f_cuberoot(n).unwrap();
        let next = f_cuberoot(n + 1).unwrap();
        prop_assert!(next > here);
        prop_assert!(here >= f0(n));
        prop_assert_eq!(f_divisorlayer(n).unwrap(), here);
    }
}
