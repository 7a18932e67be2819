//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line (run with `--nocapture` to see them).

use std::process::Command;
use std::time::Instant;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use subfree::dfree::{run_df, s1_size, s2_size, Constants};
use subfree::distribution::rational_to_f64;
use subfree::exact::{
    bruteforce_distance, build_splitting, copy_count, exact_weighted_distance, natural_beta, quantize, r_table,
    reduce_to_wc, split_distance,
};
use subfree::harness::{
    concentration_experiment, event_experiment, Ensemble, TextKind, WeightKind,
};
use subfree::uniform::{build_j, estimate_uniform, m_measure, sample_size_uniform, CountMatrix, PrefixGrid};
use subfree::{ExactDistribution, Rational, Text, UniformOracle, WeightedOracle, Word};

fn verdict(id: u32, name: &str, ok: bool, detail: String) {
    println!("criterion {id:>2} [{name}]: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

fn random_ids(r: &mut Xoshiro256PlusPlus, len: usize, sigma: u32) -> Vec<u32> {
    (0..len).map(|_| r.gen_range(1..=sigma)).collect()
}

/// All words over `{1..sigma}` with length `1..=k_max`.
fn all_words(sigma: u32, k_max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..k_max {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=sigma).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| Word::from_ids(w).unwrap()));
    }
    out
}

/// Row-major exact prefix counts on a grid, as integers.
fn int_counts(t: &Text, w: &Word, grid: &PrefixGrid) -> Vec<Vec<i64>> {
    CountMatrix::exact(t, w, grid)
        .unwrap()
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect()
}

#[test]
fn criterion_01_oracle_triple_agreement() {
    let start = Instant::now();
    let words = all_words(3, 3);
    let mut r = rng(101);
    let mut checks = 0u64;
    let mut mismatches = 0u64;
    for _ in 0..5000 {
        let n = r.gen_range(1..=12);
        let t = Text::from_ids(&random_ids(&mut r, n, 3)).unwrap();
        for w in &words {
            let greedy = copy_count(&t, w);
            let table = r_table(&t, w).total();
            let brute = bruteforce_distance(&t, w, None).unwrap() * Rational::from_integer(n as i128);
            checks += 1;
            if greedy != table || Rational::from_integer(greedy as i128) != brute {
                mismatches += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        1,
        "oracle triple agreement",
        mismatches == 0 && secs < 300.0,
        format!("{checks} (text, word) pairs, {mismatches} mismatches, {secs:.1}s"),
    );
}

#[test]
fn criterion_02_m_exact_on_full_grid() {
    let mut r = rng(202);
    let mut bad = 0;
    let (mut lo, mut hi) = (i64::MAX, i64::MIN);
    for _ in 0..1000 {
        let n = r.gen_range(1..=200);
        let sigma = r.gen_range(1..=4);
        let k = r.gen_range(1..=5);
        let t = Text::from_ids(&random_ids(&mut r, n, sigma)).unwrap();
        let w = Word::from_ids(&random_ids(&mut r, k, sigma)).unwrap();
        let grid = PrefixGrid::from_points(n, (1..=n).collect()).unwrap();
        let m = m_measure(&int_counts(&t, &w, &grid)).unwrap();
        let excess = m - copy_count(&t, &w) as i64;
        lo = lo.min(excess - (k as i64 - 1));
        hi = hi.max(excess - (k as i64 - 1));
        if excess != 0 {
            bad += 1;
        }
    }
    // With the unshifted recursion M - R lies in [0, k-1] rather than at 0.
    verdict(
        2,
        "M exact at full grid",
        bad == 0,
        format!("1000 instances, {bad} mismatches, (M - R) - (k-1) in [{lo}, {hi}]"),
    );
}

#[test]
fn criterion_03_grid_bound() {
    let mut r = rng(303);
    let mut bad = 0;
    let mut worst_slack = i64::MAX;
    for _ in 0..1000 {
        let n = r.gen_range(1..=200);
        let sigma = r.gen_range(1..=4);
        let k = r.gen_range(1..=5);
        let t = Text::from_ids(&random_ids(&mut r, n, sigma)).unwrap();
        let w = Word::from_ids(&random_ids(&mut r, k, sigma)).unwrap();
        // Random grid: each j < n kept with a random density, n always kept.
        let density: f64 = r.gen_range(0.02..1.0);
        let mut pts: Vec<usize> = (1..n).filter(|_| r.gen_bool(density)).collect();
        pts.push(n);
        let grid = PrefixGrid::from_points(n, pts).unwrap();
        let m = m_measure(&int_counts(&t, &w, &grid)).unwrap();
        let rr = copy_count(&t, &w) as i64;
        let bound = (k as i64 - 1) * grid.max_gap() as i64;
        worst_slack = worst_slack.min(bound - (m - rr).abs());
        if (m - rr).abs() > bound {
            bad += 1;
        }
    }
    verdict(
        3,
        "grid bound |M - R| <= (k-1) max gap",
        bad == 0,
        format!("1000 instances, {bad} violations, min slack {worst_slack}"),
    );
}

#[test]
fn criterion_04_perturbation_bound() {
    let mut r = rng(404);
    let mut bad = 0;
    for case in 0..1000 {
        let k = r.gen_range(1..=6);
        let ell = r.gen_range(1..=30);
        let gap: i64 = r.gen_range(0..=20);
        // Half the cases perturb true prefix counts, half perturb
        // arbitrary non-negative matrices.
        let base: Vec<Vec<i64>> = if case % 2 == 0 {
            let n = r.gen_range(ell..=ell * 8);
            let sigma = r.gen_range(1..=3);
            let t = Text::from_ids(&random_ids(&mut r, n, sigma)).unwrap();
            let w = Word::from_ids(&random_ids(&mut r, k, sigma)).unwrap();
            let grid = build_j(n, 1.0 / ell as f64).unwrap();
            int_counts(&t, &w, &grid)
        } else {
            (0..k).map(|_| (0..ell).map(|_| r.gen_range(0..200)).collect()).collect()
        };
        let noisy: Vec<Vec<i64>> = base
            .iter()
            .map(|row| row.iter().map(|&x| x + r.gen_range(-gap..=gap)).collect())
            .collect();
        let diff = (m_measure(&base).unwrap() - m_measure(&noisy).unwrap()).abs();
        if diff > (2 * base.len() as i64 - 1) * gap {
            bad += 1;
        }
    }
    verdict(4, "perturbation bound (2k-1) gamma n", bad == 0, format!("1000 matrix pairs, {bad} violations"));
}

#[test]
fn criterion_05_uniform_estimator() {
    let delta = 0.1;
    let mut lines = Vec::new();
    let mut ok = true;
    for k in [2usize, 3, 4] {
        let start = Instant::now();
        let expected_s = {
            let gamma = delta / (3.0 * k as f64);
            let ell = (1.0 / gamma - 1e-9).ceil();
            ((6.0 * k as f64 * ell).ln() / (2.0 * gamma * gamma) - 1e-9).ceil() as u64
        };
        assert_eq!(sample_size_uniform(k, delta).unwrap().samples, expected_s);
        let mut successes = 0;
        let mut count_ok = true;
        for seed in 0..100u64 {
            let text = [TextKind::Periodic, TextKind::Blockwise, TextKind::RandomText][seed as usize % 3];
            let inst = Ensemble {
                text,
                weights: WeightKind::Uniform,
                n: 100_000,
                k,
                alphabet: k,
            }
            .generate(seed)
            .unwrap();
            let truth = copy_count(&inst.text, &inst.word) as f64 / 100_000.0;
            let e = estimate_uniform(&UniformOracle::new(&inst.text), &inst.word, delta, seed).unwrap();
            successes += ((e.delta_hat - truth).abs() <= delta) as u32;
            count_ok &= e.samples == expected_s;
        }
        let secs = start.elapsed().as_secs_f64();
        let pass = successes >= 90 && count_ok && secs < 120.0;
        ok &= pass;
        lines.push(format!("k={k}: {successes}/100, s={expected_s}, {secs:.1}s"));
    }
    verdict(5, "uniform estimator success rate", ok, lines.join("; "));
}

#[test]
fn criterion_06_distribution_free_estimator() {
    let start = Instant::now();
    let delta = 0.15;
    let constants = Constants::standard();
    let mut lines = Vec::new();
    let mut ok = true;
    for k in [2usize, 3] {
        let mut successes = 0;
        let mut sizes_ok = true;
        let mut max_den = 0i128;
        for seed in 0..100u64 {
            let weights = if seed % 2 == 0 { WeightKind::RandomRational } else { WeightKind::PointMass };
            let inst = Ensemble {
                text: TextKind::RandomText,
                weights,
                n: 10_000,
                k,
                alphabet: 2,
            }
            .generate(seed)
            .unwrap();
            max_den = max_den.max(inst.p.common_denominator());
            let truth = rational_to_f64(&exact_weighted_distance(&inst.text, &inst.word, &inst.p).unwrap());
            let oracle = WeightedOracle::from_exact(&inst.text, &inst.p).unwrap();
            let run = run_df(&oracle, &inst.word, delta, seed, &constants).unwrap();
            let e = &run.estimate;
            let z = 100.0 * k as f64 / delta;
            let s1 = (120.0 * z * (240.0 * z).ln() - 1e-9).ceil() as u64;
            let s2 = (z * z * (40.0 * k as f64 * e.intervals as f64).ln() - 1e-9).ceil() as u64;
            sizes_ok &= e.s1 == s1 && e.s2 == s2 && s1 == s1_size(z) && s2 == s2_size(z, k, e.intervals);
            successes += ((e.delta_hat - truth).abs() <= delta) as u32;
        }
        let pass = successes >= 90 && sizes_ok && max_den <= 1_000_000;
        ok &= pass;
        lines.push(format!("k={k}: {successes}/100, sizes match: {sizes_ok}, max denominator {max_den}"));
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 600.0;
    lines.push(format!("{secs:.1}s"));
    verdict(6, "distribution-free estimator success rate", ok, lines.join("; "));
}

#[test]
fn criterion_07_event_probabilities() {
    // Random text over {a, b}; random weights with three heavy atoms so
    // heavy intervals and both branches of the sentinel rows occur.
    let n = 1000;
    let mut r = rng(707);
    let t = Text::from_ids(&random_ids(&mut r, n, 2)).unwrap();
    let w = Word::from_ids(&[1, 2]).unwrap();
    let mut m: Vec<u64> = (0..n).map(|_| r.gen_range(1..=100)).collect();
    for j in [100, 500, 501] {
        m[j] = 20_000;
    }
    let p = ExactDistribution::from_numerators(&m, m.iter().sum()).unwrap();
    let rep = event_experiment(&t, &w, &p, 0.5, 200, 7, &Constants::standard()).unwrap();
    let s = &rep.summary;
    let e1 = s.e1_frequency.unwrap();
    let e2 = s.e2_frequency.unwrap();
    let heavy = rep.trials.iter().map(|t| t.intervals).max().unwrap();
    let ok = e1 >= 0.8 && e2 >= 0.9 && s.light_bound_violations == 0 && s.xi_hat_violations == 0;
    verdict(
        7,
        "event probabilities and conditional bounds",
        ok,
        format!(
            "E1 {e1:.3}, E2 {e2:.3}, light-bound violations {}, xi-hat violations {}, max U {heavy}",
            s.light_bound_violations, s.xi_hat_violations
        ),
    );
}

#[test]
fn criterion_08_reduction_identities() {
    let mut r = rng(808);
    let mut counts = [0u32; 4];
    let mut failures = Vec::new();
    let mut instances = 0;
    while instances < 500 {
        let n = r.gen_range(1..=10);
        let k = r.gen_range(1..=3);
        let t = Text::from_ids(&random_ids(&mut r, n, 3)).unwrap();
        let w = Word::from_ids(&random_ids(&mut r, k, 3)).unwrap();
        let nums: Vec<u64> = (0..n).map(|_| r.gen_range(1..=12)).collect();
        let p = ExactDistribution::from_numerators(&nums, nums.iter().sum()).unwrap();
        instances += 1;
        let truth = bruteforce_distance(&t, &w, Some(&p)).unwrap();

        if exact_weighted_distance(&t, &w, &p).unwrap() != truth {
            failures.push(format!("weighted oracle on n={n}"));
        }
        counts[0] += 1;

        if w.is_wc() {
            let split = build_splitting(&t, &p, natural_beta(&p)).unwrap();
            if split_distance(&split, &w).unwrap() != truth {
                failures.push(format!("splitting on n={n}"));
            }
            counts[1] += 1;
        }

        let delta = [0.1, 0.25, 0.5][r.gen_range(0..3)];
        let z = 100.0 * k as f64 / delta;
        let eta = Rational::new(1, (16.0 * n as f64 * z).ceil() as i128);
        let q = quantize(&p, eta).unwrap();
        let dotted = bruteforce_distance(&t, &w, Some(&q.quantized)).unwrap();
        let (t2, w2, p2) = reduce_to_wc(&t, &w, &q.quantized).unwrap();
        if bruteforce_distance(&t2, &w2, Some(&p2)).unwrap() * Rational::from_integer(2) != dotted {
            failures.push(format!("interleave on n={n}"));
        }
        counts[2] += 1;

        let bound = Rational::new(1, 8) / Rational::approximate_float(z).unwrap();
        if (truth - dotted).abs() > q.l1 || q.l1 > bound {
            failures.push(format!("quantization on n={n}: l1 {}", q.l1));
        }
        counts[3] += 1;
    }
    verdict(
        8,
        "reduction identities",
        failures.is_empty(),
        format!(
            "{instances} instances; weighted {}, splitting {}, interleave {}, quantization {}; failures {:?}",
            counts[0], counts[1], counts[2], counts[3], failures
        ),
    );
}

#[test]
fn criterion_09_lower_bound_concentration() {
    let start = Instant::now();
    let rep = concentration_experiment(2, 0.01, 1_100_000, 100, 1).unwrap();
    let s = &rep.summary;
    let (f1, f2) = (s.t1_frequency.unwrap(), s.t2_frequency.unwrap());
    let secs = start.elapsed().as_secs_f64();
    verdict(
        9,
        "lower-bound concentration",
        f1 >= 0.95 && f2 >= 0.95 && secs < 300.0,
        format!(
            "T1 {f1:.2} (mean R {:.0} vs {:.0}), T2 {f2:.2} (mean R {:.0} vs {:.0}), delta premise {}, {secs:.1}s",
            s.mean_r_t1.unwrap(),
            s.t1_threshold,
            s.mean_r_t2.unwrap(),
            s.t2_threshold,
            s.premises.delta_small
        ),
    );
}

#[test]
fn criterion_10_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t.txt");
    let word = dir.path().join("w.txt");
    std::fs::write(&text, "a b ".repeat(3000)).unwrap();
    std::fs::write(&word, "a b").unwrap();
    let (t, w) = (text.to_str().unwrap(), word.to_str().unwrap());
    let invocations: Vec<Vec<&str>> = vec![
        vec!["estimate-uniform", "--text", t, "--word", w, "--delta", "0.1", "--seed", "7"],
        vec!["estimate-df", "--text", t, "--word", w, "--delta", "0.3", "--seed", "3", "--relaxed-constants", "0.05"],
        vec!["sweep", "--estimator", "uniform", "--n", "3000", "--k", "2", "--deltas", "0.1,0.2", "--trials", "5", "--seed", "4"],
        vec!["lowerbound", "--kd", "2", "--delta", "0.05", "--n", "50000", "--trials", "5", "--seed", "1"],
    ];
    let mut identical = 0;
    for args in &invocations {
        let run = || Command::new(env!("CARGO_BIN_EXE_subfree")).args(args).output().unwrap();
        let (a, b) = (run(), run());
        if a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty() {
            identical += 1;
        }
    }
    verdict(
        10,
        "byte-identical CLI output",
        identical == invocations.len(),
        format!("{identical}/{} commands identical across two runs", invocations.len()),
    );
}
