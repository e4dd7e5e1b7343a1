//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use overlap_gap::bench::{random_pair, run_benchmark, PairFamily};
use overlap_gap::verify::{
    check_closed_form, check_decisions, check_og_rog_equifiniteness, check_one_sided,
    check_rog_bound, check_step_lemma, check_threshold_counterexample, conjugate_pairs,
    example_pairs, extension_pairs, non_extension_pairs, periodic_pairs, random_pairs,
    PropertyReport, DEFAULT_SEED,
};
use overlap_gap::{
    decide_og_finite_one_sided, gap_record_linear, gap_record_naive, one_sided_gap_sequence,
    Alphabet, Outcome, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cli(args: &[&str]) -> (String, i32, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_overlap-gap"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
        elapsed,
    )
}

fn expect_lines(out: &str, expected: &[&str]) -> Result<(), String> {
    let got: Vec<&str> = out.lines().collect();
    if got == expected {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn reports(rs: &[PropertyReport]) -> Verdict {
    let summary: Vec<String> = rs
        .iter()
        .map(|r| format!("{}: {} instances", r.property, r.instances))
        .collect();
    match rs.iter().find(|r| !r.passed()) {
        None => Ok(summary.join(", ")),
        Some(r) => Err(r.to_string()),
    }
}

fn criterion_1() -> Verdict {
    let (out, code, t) = cli(&["sets", "(baa)~", "~(aab)"]);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    expect_lines(&out, &["LOG = {0,1,2}", "ROG = {0,1,2}", "OG = {0,1}"])?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("sets in {t:?}"))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let (out, code, _) = cli(&["table", "(bbaa)~cab", "~(abba)", "--n", "14"]);
    let table_time = start.elapsed();
    if code != 0 {
        return Err(format!("table exit {code}"));
    }
    let log: Vec<usize> = vec![0, 1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
    let rog: Vec<usize> = vec![0, 1, 0, 3, 3, 3, 5, 5, 4, 3, 6, 5, 4, 3, 6];
    let og: Vec<usize> = vec![0, 1, 0, 1, 2, 3, 4, 5, 4, 3, 6, 5, 4, 3, 6];
    let mut expected = vec!["n,log,rog,og".to_string()];
    expected.extend((0..=14).map(|n| format!("{n},{},{},{}", log[n], rog[n], og[n])));
    let expected: Vec<&str> = expected.iter().map(String::as_str).collect();
    expect_lines(&out, &expected)?;
    within(table_time, Duration::from_secs(1))?;

    let (out, code, t) = cli(&["sets", "(bbaa)~cab", "~(abba)"]);
    if code != 0 {
        return Err(format!("sets exit {code}"));
    }
    let lines: Vec<&str> = out.lines().collect();
    if lines.len() != 3 || !lines[0].starts_with("LOG = unbounded") {
        return Err(format!("LOG line: {lines:?}"));
    }
    expect_lines(
        &lines[1..].join("\n"),
        &["ROG = {0,1,3,4,5,6}", "OG = {0,1,2,3,4,5,6}"],
    )?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("45 cells; table in {table_time:?}, sets in {t:?}"))
}

fn criterion_3() -> Verdict {
    reports(&[
        check_step_lemma(&example_pairs(), 100, None),
        check_step_lemma(&random_pairs(DEFAULT_SEED, 100), 128, Some(DEFAULT_SEED)),
    ])
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let pairs = conjugate_pairs(3, 4, 3);
    let rs = [
        check_rog_bound(&pairs, None),
        check_closed_form(&pairs, 0..=3),
    ];
    let elapsed = start.elapsed();
    let summary = reports(&rs)?;
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{summary}; {elapsed:?}"))
}

fn criterion_5() -> Verdict {
    reports(&[check_threshold_counterexample(1..=8)])
}

fn criterion_6() -> Verdict {
    reports(&[check_og_rog_equifiniteness(&conjugate_pairs(3, 4, 3))])
}

fn criterion_7() -> Verdict {
    let pairs = periodic_pairs(200);
    if pairs.len() != 200 {
        return Err(format!("{} pairs", pairs.len()));
    }
    reports(&[check_decisions(&pairs)])
}

fn criterion_8() -> Verdict {
    let extensions = extension_pairs(DEFAULT_SEED, 50);
    for ((lambda, rho), w) in &extensions {
        if decide_og_finite_one_sided(lambda, rho).outcome() != Outcome::Finite {
            return Err(format!("{lambda} {rho}: not finite"));
        }
        let seq = one_sided_gap_sequence(lambda, rho, 128);
        if let Some(r) = seq.records.iter().find(|r| r.og > w.len()) {
            return Err(format!(
                "{lambda} {rho}: og({}) = {} > |w| = {}",
                r.n,
                r.og,
                w.len()
            ));
        }
    }
    let others = non_extension_pairs(DEFAULT_SEED, 50);
    for (lambda, rho) in &others {
        if decide_og_finite_one_sided(lambda, rho).outcome() != Outcome::Infinite {
            return Err(format!("{lambda} {rho}: not infinite"));
        }
    }
    let pairs: Vec<_> = extensions.into_iter().map(|(p, _)| p).collect();
    reports(&[
        check_one_sided(&pairs, 128, [64, 256]),
        check_one_sided(&others, 128, [64, 256]),
    ])
}

fn criterion_9() -> Verdict {
    let ab = Alphabet::latin(2).unwrap();
    let mut exhaustive = 0;
    for len in 0..=10 {
        let all: Vec<Word<char>> = ab.words(len).collect();
        for u in &all {
            for v in &all {
                if gap_record_naive(u, v) != gap_record_linear(u, v) {
                    return Err(format!("kernels differ on {u} {v}"));
                }
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=1 << 16);
        let (u, v) = random_pair(&mut rng, PairFamily::Uniform, len);
        if gap_record_naive(&u, &v) != gap_record_linear(&u, &v) {
            return Err(format!("kernels differ at length {len}"));
        }
    }
    let report = run_benchmark(100_000, 5, PairFamily::Periodic, DEFAULT_SEED);
    if !report.agree {
        return Err("benchmark outputs differ".into());
    }
    if report.speedup() < 10.0 {
        return Err(format!(
            "speedup {:.1}x (naive {:.2} ms, linear {:.2} ms)",
            report.speedup(),
            report.naive_median_ms,
            report.linear_median_ms
        ));
    }
    Ok(format!(
        "{exhaustive} exhaustive + 10000 random pairs agree; speedup {:.1}x",
        report.speedup()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("sets of the periodic example", criterion_1),
        ("table and sets of the preperiodic example", criterion_2),
        ("step laws", criterion_3),
        (
            "rog bound and closed form on the exhaustive family",
            criterion_4,
        ),
        ("threshold counterexamples", criterion_5),
        ("og/rog equifiniteness", criterion_6),
        ("two-sided finiteness decisions", criterion_7),
        ("one-sided finiteness decisions", criterion_8),
        ("naive and linear kernels", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
