use latrect::kernels::{eval_six_with, eval_ten_with, KernelOptions, KernelQuery};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SIX: [(u32, u32); 6] = [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3)];
const TEN: [(u32, u32); 10] = [(0, 1), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2), (2, 2), (0, 3), (1, 3), (0, 4)];

fn direct(q: KernelQuery, p: u32, e: u32) -> i128 {
    (0..q.n).map(|x| x.pow(p) * ((q.a * x + q.b) / q.m).pow(e)).sum()
}

fn check(q: KernelQuery, opts: KernelOptions) {
    let six = eval_six_with(q, opts).unwrap();
    for (p, e) in SIX {
        assert_eq!(six.get(p, e), Some(direct(q, p, e)), "six H{p}{e} at {q:?}");
    }
    let ten = eval_ten_with(q, opts).unwrap();
    for (p, e) in TEN {
        assert_eq!(ten.get(p, e), Some(direct(q, p, e)), "ten H{p}{e} at {q:?}");
    }
}

#[test]
fn exhaustive_box() {
    let option_sets = [
        KernelOptions::default(),
        KernelOptions { fast_paths: false, checked_only: false },
        KernelOptions { fast_paths: true, checked_only: true },
    ];
    for n in 0..=40 {
        for m in 1..=40 {
            for a in 0..=60 {
                for b in 0..=60 {
                    let q = KernelQuery::new(n, m, a, b).unwrap();
                    for opts in option_sets {
                        check(q, opts);
                    }
                }
            }
        }
    }
}

#[test]
fn random_larger_queries() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        // Keep floor values below 2^20 so the direct sums fit in i128.
        let n = rng.gen_range(1..=2048i128);
        let m = rng.gen_range(1..=1_000_000_000i128);
        let a = rng.gen_range(0..=(m * (1 << 20) / (2 * n)).min(1 << 40));
        let b = rng.gen_range(0..=(m * (1 << 19)).min(1 << 40));
        check(KernelQuery::new(n, m, a, b).unwrap(), KernelOptions::default());
    }
}
