//! Acceptance suite: one PASS/FAIL line per criterion.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use latrect::allvalues::AUX_SLOTS_PER_ENTRY;
use latrect::asymptotics::{constants, residual};
use latrect::golden::{power_of_two, POWERS_OF_TWO};
use latrect::kernels::{eval_six, eval_ten, KernelQuery};
use latrect::oracle::{f_oracle_geometric, f_oracle_quadruples};
use latrect::{compute_table, f_baseline, f_divisorlayer, f_tenmoment, Algorithm, ExactInt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Counting;

static CURRENT: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);

unsafe impl GlobalAlloc for Counting {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            let now = CURRENT.fetch_add(layout.size(), Ordering::Relaxed) + layout.size();
            PEAK.fetch_max(now, Ordering::Relaxed);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        CURRENT.fetch_sub(layout.size(), Ordering::Relaxed);
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            if new_size >= layout.size() {
                let now = CURRENT.fetch_add(new_size - layout.size(), Ordering::Relaxed) + new_size - layout.size();
                PEAK.fetch_max(now, Ordering::Relaxed);
            } else {
                CURRENT.fetch_sub(layout.size() - new_size, Ordering::Relaxed);
            }
        }
        p
    }
}

#[global_allocator]
static ALLOC: Counting = Counting;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn golden_values() -> Outcome {
    let limits = [
        (Algorithm::Baseline, 10),
        (Algorithm::Sqrt, 13),
        (Algorithm::Cuberoot, 16),
        (Algorithm::Tenmoment, 18),
        (Algorithm::Divisorlayer, 24),
    ];
    for (algo, max_k) in limits {
        for k in 1..=max_k {
            let got = algo.run(1 << k).map_err(|e| format!("{algo} k={k}: {e}"))?;
            if Some(got) != power_of_two(k) {
                return Err(format!("{algo} k={k}: got {got}"));
            }
        }
    }
    let table = compute_table(1 << 16).map_err(|e| e.to_string())?;
    for k in 1..=16 {
        if Some(table[(1 << k) - 1]) != power_of_two(k) {
            return Err(format!("table k={k}: got {}", table[(1 << k) - 1]));
        }
    }
    Ok("baseline<=10 sqrt<=13 cuberoot<=16 tenmoment<=18 divisorlayer<=24 table 2^16".into())
}

fn oracle_equivalence() -> Outcome {
    let table = compute_table(200).map_err(|e| e.to_string())?;
    for n in 1..=200u64 {
        let want = f_oracle_quadruples(n).map_err(|e| e.to_string())?;
        let mut others = vec![("table", table[n as usize - 1])];
        if n <= 60 {
            others.push(("geometric", f_oracle_geometric(n).map_err(|e| e.to_string())?));
            for a in Algorithm::CONCRETE {
                others.push((a.id(), a.run(n).map_err(|e| e.to_string())?));
            }
        } else {
            others.push(("baseline", f_baseline(n).map_err(|e| e.to_string())?));
        }
        if let Some((name, got)) = others.into_iter().find(|&(_, v)| v != want) {
            return Err(format!("n={n}: {name} gives {got}, quadruple oracle {want}"));
        }
    }
    Ok("all sources agree for n<=60, quadruple oracle for n<=200".into())
}

const SIX: [(u32, u32); 6] = [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3)];
const TEN: [(u32, u32); 10] = [(0, 1), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2), (2, 2), (0, 3), (1, 3), (0, 4)];

fn kernel_query_ok(q: KernelQuery) -> Result<(), String> {
    let direct = |p: u32, e: u32| -> i128 { (0..q.n).map(|x| x.pow(p) * ((q.a * x + q.b) / q.m).pow(e)).sum() };
    let six = eval_six(q).map_err(|e| format!("{q:?}: {e}"))?;
    let ten = eval_ten(q).map_err(|e| format!("{q:?}: {e}"))?;
    for (p, e) in SIX {
        if six.get(p, e) != Some(direct(p, e)) {
            return Err(format!("six H{p}{e} at {q:?}"));
        }
    }
    for (p, e) in TEN {
        if ten.get(p, e) != Some(direct(p, e)) {
            return Err(format!("ten H{p}{e} at {q:?}"));
        }
    }
    Ok(())
}

fn kernel_correctness() -> Outcome {
    let mut count = 0u64;
    for n in 0..=40 {
        for m in 1..=40 {
            for a in 0..=60 {
                for b in 0..=60 {
                    kernel_query_ok(KernelQuery::new(n, m, a, b).map_err(|e| e.to_string())?)?;
                    count += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=2048i128);
        let m = rng.gen_range(1..=1_000_000_000i128);
        let a = rng.gen_range(0..=(m * (1 << 20) / (2 * n)).min(1 << 40));
        let b = rng.gen_range(0..=(m * (1 << 19)).min(1 << 40));
        kernel_query_ok(KernelQuery::new(n, m, a, b).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{count} box queries and 10000 random queries"))
}

fn pairwise_at_scale() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let n = rng.gen_range(100_000..=1_000_000u64);
        let t = f_tenmoment(n).map_err(|e| format!("tenmoment n={n}: {e}"))?;
        let d = f_divisorlayer(n).map_err(|e| format!("divisorlayer n={n}: {e}"))?;
        if t != d {
            return Err(format!("n={n}: tenmoment {t}, divisorlayer {d}"));
        }
    }
    Ok("20 random n in [1e5, 1e6]".into())
}

fn asymptotic_check() -> Outcome {
    const PRINTED_B: f64 = -0.084_567_061_533;
    let b = constants().b;
    if format!("{b:.8e}") != format!("{PRINTED_B:.8e}") {
        return Err(format!("B = {b:.12} does not match {PRINTED_B} to 9 significant figures"));
    }
    let mut worst = 0f64;
    for &(k, _) in &POWERS_OF_TWO[13..] {
        let n = 1u64 << k;
        let gap = (residual(n, power_of_two(k).unwrap()).map_err(|e| e.to_string())? - b).abs();
        if gap >= 0.01 {
            return Err(format!("k={k}: |residual - B| = {gap:.6}"));
        }
        if k == 20 && gap >= 1e-3 {
            return Err(format!("k=20: |residual - B| = {gap:.6}"));
        }
        worst = worst.max(gap);
    }
    Ok(format!("B = {b:.12}, max |residual - B| over k=14..40 is {worst:.6}"))
}

/// Best of three runs after a warmup.
fn best_time(f: impl Fn(u64) -> latrect::Result<ExactInt>, n: u64) -> Duration {
    f(n).unwrap();
    (0..3)
        .map(|_| {
            let start = Instant::now();
            f(n).unwrap();
            start.elapsed()
        })
        .min()
        .unwrap()
}

/// Mean of `T(2n) / T(n)` over `n = 2^k` for the three `k` from `k0`.
fn mean_doubling_ratio(f: impl Fn(u64) -> latrect::Result<ExactInt> + Copy, k0: u32) -> f64 {
    let times: Vec<f64> = (k0..=k0 + 3).map(|k| best_time(f, 1 << k).as_secs_f64()).collect();
    times.windows(2).map(|w| w[1] / w[0]).sum::<f64>() / 3.0
}

fn complexity_smoke() -> Outcome {
    let layer = mean_doubling_ratio(f_divisorlayer, 18);
    let base = mean_doubling_ratio(f_baseline, 11);
    let msg = format!("divisorlayer ratio {layer:.2} in [1.6, 2.9], baseline ratio {base:.2} in [3.0, 5.0]");
    if (1.6..=2.9).contains(&layer) && (3.0..=5.0).contains(&base) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn table_memory() -> Outcome {
    const N: usize = 1_000_000;
    let slot = std::mem::size_of::<ExactInt>();
    let before = CURRENT.load(Ordering::Relaxed);
    PEAK.store(before, Ordering::Relaxed);
    let table = compute_table(N as u64).map_err(|e| e.to_string())?;
    let peak = PEAK.load(Ordering::Relaxed) - before;
    let output = table.capacity() * slot;
    let aux = peak.saturating_sub(output) as f64 / (N * slot) as f64;
    let want = ExactInt::parse_decimal("2396709513685666046638048").unwrap();
    if table[N - 1] != want {
        return Err(format!("F(1e6) = {}", table[N - 1]));
    }
    let msg = format!("peak auxiliary memory {aux:.2} slots per entry, bound {AUX_SLOTS_PER_ENTRY}");
    if aux < AUX_SLOTS_PER_ENTRY {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("golden values", golden_values),
        ("oracle equivalence", oracle_equivalence),
        ("kernel correctness", kernel_correctness),
        ("pairwise equality at scale", pairwise_at_scale),
        ("asymptotic check", asymptotic_check),
        ("complexity smoke test", complexity_smoke),
        ("all-values memory", table_memory),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {}. {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {}. {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
