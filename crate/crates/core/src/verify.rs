//! Property suites for the structural laws of the gap functions.
//!
//! Each check runs over a list of instances, evaluates its law directly on
//! tabulated gaps, and returns a [`PropertyReport`] whose failures are listed
//! in instance order. Reports serialise to one JSON object per line with the
//! fields `property`, `instances`, `failures`, `seed` and `elapsed_ms`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::infinite::{canonicalize_left, canonicalize_right, GeneratorKind, Left, Right};
use crate::sequences::{
    closed_form_params, closed_form_rog, decide_og_finite, decide_og_finite_one_sided,
    exact_gap_sets, gap_sequence, growth_horizon, one_sided_gap_sequence, Outcome, Witness,
};
use crate::words::{Alphabet, Word};

pub const DEFAULT_SEED: u64 = 0x0a9_5eed;

/// Failures kept per report.
const MAX_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Self {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub property: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub seed: Option<u64>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    property: &'a str,
    instances: usize,
    failures: &'a [Failure],
    seed: Option<u64>,
    elapsed_ms: u128,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&ReportLine {
            property: &self.property,
            instances: self.instances,
            failures: &self.failures,
            seed: self.seed,
            elapsed_ms: self.elapsed.as_millis(),
        })
        .expect("report serialises")
    }

    /// Concatenates reports of the same property.
    pub fn merge(property: &str, reports: Vec<PropertyReport>) -> Self {
        let mut out = PropertyReport {
            property: property.into(),
            instances: 0,
            failures: Vec::new(),
            seed: None,
            elapsed: Duration::ZERO,
        };
        for r in reports {
            out.instances += r.instances;
            out.failures.extend(r.failures);
            out.seed = out.seed.or(r.seed);
            out.elapsed += r.elapsed;
        }
        out.failures.truncate(MAX_FAILURES);
        out
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} instances, {} failures, {} ms)",
            self.property,
            self.instances,
            self.failures.len(),
            self.elapsed.as_millis()
        )?;
        if let Some(first) = self.failures.first() {
            write!(
                f,
                "; first: {} expected {} got {}",
                first.input, first.expected, first.actual
            )?;
        }
        Ok(())
    }
}

/// Runs `check` on every instance in parallel and keeps failures in
/// instance order.
fn run<T: Sync>(
    property: &str,
    seed: Option<u64>,
    instances: &[T],
    check: impl Fn(&T) -> Vec<Failure> + Sync,
) -> PropertyReport {
    let start = Instant::now();
    let mut failures: Vec<Failure> = instances.par_iter().map(&check).flatten_iter().collect();
    failures.truncate(MAX_FAILURES);
    PropertyReport {
        property: property.into(),
        instances: instances.len(),
        failures,
        seed,
        elapsed: start.elapsed(),
    }
}

pub type Pair = (Left<char>, Right<char>);
pub type OneSidedPair = (Left<char>, Left<char>);

fn describe(pair: &Pair) -> String {
    format!("{} {}", pair.0, pair.1)
}

fn left(u: &str, w: &str) -> Left<char> {
    canonicalize_left(&u.into(), &w.into()).expect("non-empty period")
}

fn right(w: &str, u: &str) -> Right<char> {
    canonicalize_right(&w.into(), &u.into()).expect("non-empty period")
}

/// The two worked pairs: `(⋯baa, aab⋯)` and `(⋯bbaa·cab, abba⋯)`.
pub fn example_pairs() -> Vec<Pair> {
    vec![
        (left("baa", ""), right("", "aab")),
        (left("bbaa", "cab"), right("", "abba")),
    ]
}

/// Every pair of canonical ultimately periodic words with conjugate periods
/// over alphabets of at most `max_letters` letters, with period length at most
/// `max_period` and preperiods of length at most `max_preperiod`.
///
/// Order: alphabets `{a}`, `{a,b}`, ... (each instance listed under the
/// smallest alphabet containing its letters), then period length, period,
/// right period rotation, left preperiod and right preperiod, each ascending.
pub fn conjugate_pairs(max_letters: usize, max_period: usize, max_preperiod: usize) -> Vec<Pair> {
    let mut out = Vec::new();
    for k in 1..=max_letters {
        let alphabet = Alphabet::latin(k).expect("at most 26 letters");
        let newest = alphabet.letters()[k - 1];
        let preperiods: Vec<Word<char>> = alphabet.words_up_to(max_preperiod).collect();
        for p in 1..=max_period {
            for u in alphabet.words(p).filter(|u| u.is_primitive()) {
                let rotations: BTreeSet<Word<char>> = (0..p).map(|i| u.rotate_left(i)).collect();
                for v in &rotations {
                    for w1 in preperiods
                        .iter()
                        .filter(|w| w.first().is_none_or(|a| *a != u[0]))
                    {
                        for w2 in preperiods
                            .iter()
                            .filter(|w| w.last().is_none_or(|a| *a != v[p - 1]))
                        {
                            let uses_newest = [&u, v, w1, w2].iter().any(|x| x.contains(&newest));
                            if !uses_newest {
                                continue;
                            }
                            let lambda = canonicalize_left(&u, w1).expect("non-empty period");
                            let rho = canonicalize_right(w2, v).expect("non-empty period");
                            debug_assert_eq!(lambda.period(), Some(&u));
                            debug_assert_eq!(rho.preperiod(), Some(w2));
                            out.push((lambda, rho));
                        }
                    }
                }
            }
        }
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[char], len: usize) -> Word<char> {
    (0..len)
        .map(|_| *letters.choose(rng).expect("non-empty alphabet"))
        .collect()
}

fn random_left(
    rng: &mut ChaCha8Rng,
    letters: &[char],
    max_period: usize,
    max_pre: usize,
) -> Left<char> {
    let p = rng.gen_range(1..=max_period);
    let u = random_word(rng, letters, p);
    let pre = rng.gen_range(0..=max_pre);
    let w = random_word(rng, letters, pre);
    canonicalize_left(&u, &w).expect("non-empty period")
}

fn random_right(
    rng: &mut ChaCha8Rng,
    letters: &[char],
    max_period: usize,
    max_pre: usize,
) -> Right<char> {
    let p = rng.gen_range(1..=max_period);
    let u = random_word(rng, letters, p);
    let pre = rng.gen_range(0..=max_pre);
    let w = random_word(rng, letters, pre);
    canonicalize_right(&w, &u).expect("non-empty period")
}

fn random_kind(rng: &mut ChaCha8Rng) -> GeneratorKind {
    if rng.gen_bool(0.5) {
        GeneratorKind::ThueMorse
    } else {
        GeneratorKind::Fibonacci
    }
}

/// Random pairs mixing generator words and ultimately periodic words.
pub fn random_pairs(seed: u64, count: usize) -> Vec<Pair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let lambda = if rng.gen_bool(0.5) {
                Left::generated(random_kind(&mut rng), ['a', 'b'])
            } else {
                random_left(&mut rng, &['a', 'b', 'c'], 4, 4)
            };
            let rho = if rng.gen_bool(0.5) {
                Right::generated(random_kind(&mut rng), ['a', 'b'])
            } else {
                random_right(&mut rng, &['a', 'b', 'c'], 4, 4)
            };
            (lambda, rho)
        })
        .collect()
}

/// Ultimately periodic pairs over `{a, b}`, periods up to 3 and preperiods up
/// to 2 letters (possibly non-canonical as written), taken at a fixed stride
/// from the full enumeration.
pub fn periodic_pairs(count: usize) -> Vec<Pair> {
    let ab = Alphabet::latin(2).expect("two letters");
    let periods: Vec<Word<char>> = (1..=3).flat_map(|p| ab.words(p)).collect();
    let pres: Vec<Word<char>> = ab.words_up_to(2).collect();
    let mut all = Vec::new();
    for u1 in &periods {
        for w1 in &pres {
            for u2 in &periods {
                for w2 in &pres {
                    all.push((u1, w1, u2, w2));
                }
            }
        }
    }
    let stride = (all.len() / count.max(1)).max(1);
    all.iter()
        .step_by(stride)
        .take(count)
        .map(|(u1, w1, u2, w2)| {
            (
                canonicalize_left(u1, w1).expect("non-empty period"),
                canonicalize_right(w2, u2).expect("non-empty period"),
            )
        })
        .collect()
}

/// `n̄ + 1 + p(k₀ + 3)`: the last `n` of the fourth closed-form block.
fn closed_form_horizon(pair: &Pair) -> Option<usize> {
    let params = closed_form_params(&pair.0, &pair.1).ok()?;
    Some(params.anchor + params.period_len * (params.first_block + 4))
}

pub fn check_step_lemma(pairs: &[Pair], horizon: usize, seed: Option<u64>) -> PropertyReport {
    run("step", seed, pairs, |pair| {
        let seq = gap_sequence(&pair.0, &pair.1, horizon);
        let mut failures = Vec::new();
        for w in seq.records.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b.log != 0 && b.log != a.log + 1 {
                failures.push(Failure::new(
                    format!("{} n={}", describe(pair), b.n),
                    format!("log in {{0,{}}}", a.log + 1),
                    b.log,
                ));
            }
            if b.rog + 1 < a.rog {
                failures.push(Failure::new(
                    format!("{} n={}", describe(pair), b.n),
                    format!("rog >= {}", a.rog - 1),
                    b.rog,
                ));
            }
        }
        failures
    })
}

/// `rog(n) <= M` for all `n` up to `horizon`, or up to the end of the fourth
/// closed-form block when `horizon` is `None`.
pub fn check_rog_bound(pairs: &[Pair], horizon: Option<usize>) -> PropertyReport {
    run("bound", None, pairs, |pair| {
        let Ok(params) = closed_form_params(&pair.0, &pair.1) else {
            return vec![Failure::new(
                describe(pair),
                "conjugate periods",
                "not conjugate",
            )];
        };
        let h = horizon
            .or_else(|| closed_form_horizon(pair))
            .expect("conjugate pair");
        let seq = gap_sequence(&pair.0, &pair.1, h);
        seq.records
            .iter()
            .filter(|r| r.rog > params.rog_bound)
            .map(|r| {
                Failure::new(
                    format!("{} n={}", describe(pair), r.n),
                    format!("<= {}", params.rog_bound),
                    r.rog,
                )
            })
            .collect()
    })
}

/// Direct `rog(m̄ + 1 + j + pk)` against `M - j` for `k` in
/// `k₀ + blocks.start() ..= k₀ + blocks.end()`.
pub fn check_closed_form(pairs: &[Pair], blocks: RangeInclusive<usize>) -> PropertyReport {
    run("closed-form", None, pairs, |pair| {
        let Ok(params) = closed_form_params(&pair.0, &pair.1) else {
            return vec![Failure::new(
                describe(pair),
                "conjugate periods",
                "not conjugate",
            )];
        };
        let p = params.period_len;
        let last_k = params.first_block + blocks.end();
        let seq = gap_sequence(&pair.0, &pair.1, params.anchor + p * (last_k + 1));
        let mut failures = Vec::new();
        for k in params.first_block + blocks.start()..=last_k {
            for j in 0..p {
                let n = params.anchor + 1 + j + p * k;
                let expected = params.rog_bound - j;
                let actual = seq.records[n].rog;
                if actual != expected || closed_form_rog(&params, n) != Some(expected) {
                    failures.push(Failure::new(
                        format!("{} n={n}", describe(pair)),
                        expected,
                        actual,
                    ));
                }
            }
        }
        failures
    })
}

/// On exactly computed sets: OG and ROG are finite together, and
/// `max ROG <= 2 max OG` when `max OG >= 1` (`ROG = {0}` otherwise). The
/// exact sets are also checked against direct tabulation past the cycle.
pub fn check_og_rog_equifiniteness(pairs: &[Pair]) -> PropertyReport {
    run("equifinite", None, pairs, |pair| {
        let sets = match exact_gap_sets(&pair.0, &pair.1) {
            Ok(s) => s,
            Err(e) => return vec![Failure::new(describe(pair), "exact sets", e)],
        };
        let mut failures = Vec::new();
        let max_og = *sets.og.last().expect("og(0) = 0");
        let max_rog = *sets.rog.last().expect("rog(0) = 0");
        // Both sets come out of the exact computation as finite sets; the
        // remaining content is the bound and the agreement with tabulation.
        if max_og >= 1 && max_rog > 2 * max_og {
            failures.push(Failure::new(
                describe(pair),
                format!("max ROG <= {}", 2 * max_og),
                max_rog,
            ));
        }
        if max_og == 0 && sets.rog != BTreeSet::from([0]) {
            failures.push(Failure::new(
                describe(pair),
                "ROG = {0}",
                format!("{:?}", sets.rog),
            ));
        }
        let horizon = sets.cycle_start + 2 * sets.cycle_len;
        let seq = gap_sequence(&pair.0, &pair.1, horizon);
        let og: BTreeSet<usize> = seq.ogs().collect();
        let rog: BTreeSet<usize> = seq.rogs().collect();
        if og != sets.og {
            failures.push(Failure::new(
                describe(pair),
                format!("{:?}", sets.og),
                format!("{og:?}"),
            ));
        }
        if rog != sets.rog {
            failures.push(Failure::new(
                describe(pair),
                format!("{:?}", sets.rog),
                format!("{rog:?}"),
            ));
        }
        if let Some(bad) = seq.logs().find(|&x| !sets.log.contains(x)) {
            failures.push(Failure::new(
                describe(pair),
                sets.log.to_string(),
                format!("log value {bad}"),
            ));
        }
        failures
    })
}

/// `λ = ⋯aaa·b·aⁱ`, `ρ = aⁱ·b·aaa⋯`: `rog(2i + 1) = 0` while `m = i + 1`.
pub fn check_threshold_counterexample(range: RangeInclusive<usize>) -> PropertyReport {
    let instances: Vec<usize> = range.collect();
    run("threshold", None, &instances, |&i| {
        let a = "a".repeat(i);
        let lambda = left("a", &format!("b{a}"));
        let rho = right(&format!("{a}b"), "a");
        let mut failures = Vec::new();
        let rog = gap_sequence(&lambda, &rho, 2 * i + 1).records[2 * i + 1].rog;
        if rog != 0 {
            failures.push(Failure::new(format!("i={i}"), "rog(2i+1) = 0", rog));
        }
        match closed_form_params(&lambda, &rho) {
            Ok(p) if p.long_preperiod == i + 1 => {}
            Ok(p) => failures.push(Failure::new(
                format!("i={i}"),
                format!("m = {}", i + 1),
                p.long_preperiod,
            )),
            Err(e) => failures.push(Failure::new(format!("i={i}"), "closed form", e)),
        }
        failures
    })
}

/// Finite verdicts keep `og(n) <= |w|` up to `bounded_horizon`; infinite
/// verdicts show growth of `max og` between `growth[0]` and `growth[1]`.
pub fn check_one_sided(
    pairs: &[OneSidedPair],
    bounded_horizon: usize,
    growth: [usize; 2],
) -> PropertyReport {
    run("one-sided", None, pairs, |(lambda, rho)| {
        let input = format!("{lambda} {rho}");
        let verdict = decide_og_finite_one_sided(lambda, rho);
        match (verdict.outcome(), verdict.witness) {
            (Outcome::Finite, Some(Witness::Extension { word, .. })) => {
                let seq = one_sided_gap_sequence(lambda, rho, bounded_horizon);
                seq.records
                    .iter()
                    .filter(|r| r.og > word.len())
                    .take(1)
                    .map(|r| {
                        Failure::new(
                            format!("{input} n={}", r.n),
                            format!("og <= {}", word.len()),
                            r.og,
                        )
                    })
                    .collect()
            }
            (Outcome::Infinite, _) => {
                let seq = one_sided_gap_sequence(lambda, rho, growth[1]);
                let (lo, hi) = (seq.max_og(growth[0]), seq.max_og(growth[1]));
                if hi > lo {
                    vec![]
                } else {
                    vec![Failure::new(input, format!("max og beyond {lo}"), hi)]
                }
            }
            (outcome, _) => vec![Failure::new(
                input,
                "decided verdict with witness",
                format!("{outcome:?}"),
            )],
        }
    })
}

/// Soundness of [`decide_og_finite`] on ultimately periodic pairs: finite iff
/// the periods are rotations of each other (checked by brute force), witnesses
/// reproduce both words, finite verdicts keep `og <= M` and infinite ones
/// show growth between `N = 4(M + p)` and `4N`.
pub fn check_decisions(pairs: &[Pair]) -> PropertyReport {
    run("decide", None, pairs, |pair @ (lambda, rho)| {
        let input = describe(pair);
        let (u, w1) = (lambda.period().unwrap(), lambda.preperiod().unwrap());
        let (v, w2) = (rho.period().unwrap(), rho.preperiod().unwrap());
        let rotation = u.len() == v.len() && (0..u.len()).any(|i| u.rotate_left(i) == *v);
        let verdict = decide_og_finite(lambda, rho);
        let mut failures = Vec::new();
        if verdict.outcome()
            != if rotation {
                Outcome::Finite
            } else {
                Outcome::Infinite
            }
        {
            failures.push(Failure::new(
                &input,
                format!("finite = {rotation}"),
                format!("{:?}", verdict.outcome()),
            ));
            return failures;
        }
        let n = growth_horizon([u.len(), v.len()], [w1.len(), w2.len()]);
        if rotation {
            let depth = 2 * (u.len() + w1.len() + w2.len());
            let witness = verdict.witness.expect("finite verdict has a witness");
            if !witness.reconstructs(lambda, rho, depth) {
                failures.push(Failure::new(
                    &input,
                    "witness reproduces both words",
                    format!("{witness:?}"),
                ));
            }
            let bound = closed_form_params(lambda, rho)
                .expect("conjugate")
                .rog_bound;
            let max_og = gap_sequence(lambda, rho, n).max_og(n);
            if max_og > bound {
                failures.push(Failure::new(&input, format!("max og <= {bound}"), max_og));
            }
        } else {
            let seq = gap_sequence(lambda, rho, 4 * n);
            let (lo, hi) = (seq.max_og(n), seq.max_og(4 * n));
            if hi <= lo {
                failures.push(Failure::new(
                    &input,
                    format!("max og beyond {lo} by n={}", 4 * n),
                    hi,
                ));
            }
        }
        failures
    })
}

/// `ρ = λ·w` for random ultimately periodic `λ` and `|w| <= 5`.
pub fn extension_pairs(seed: u64, count: usize) -> Vec<(OneSidedPair, Word<char>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let lambda = random_left(&mut rng, &['a', 'b', 'c'], 4, 3);
            let len = rng.gen_range(0..=5);
            let w = random_word(&mut rng, &['a', 'b', 'c'], len);
            let rho = lambda.extended(&w).expect("periodic");
            ((lambda, rho), w)
        })
        .collect()
}

/// Whether one word is the other followed by at most `max_extra` letters,
/// judged only from suffixes of length `depth`.
pub fn extends_by_sampling(
    lambda: &Left<char>,
    rho: &Left<char>,
    depth: usize,
    max_extra: usize,
) -> bool {
    let l = lambda.sample(depth + max_extra);
    let r = rho.sample(depth + max_extra);
    (0..=max_extra).any(|k| {
        let end = l.len() - k;
        l[end - depth..end] == r[r.len() - depth..] || r[end - depth..end] == l[l.len() - depth..]
    })
}

/// Random ultimately periodic pairs where neither word extends the other.
pub fn non_extension_pairs(seed: u64, count: usize) -> Vec<OneSidedPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let lambda = random_left(&mut rng, &['a', 'b', 'c'], 3, 3);
        // Half the draws share λ's period so that only preperiods differ.
        let rho = if rng.gen_bool(0.5) {
            let u = lambda
                .period()
                .expect("periodic")
                .rotate_left(rng.gen_range(0..4));
            let pre = rng.gen_range(0..=3);
            let w = random_word(&mut rng, &['a', 'b', 'c'], pre);
            canonicalize_left(&u, &w).expect("non-empty period")
        } else {
            random_left(&mut rng, &['a', 'b', 'c'], 3, 3)
        };
        if !extends_by_sampling(&lambda, &rho, 64, 16) {
            out.push((lambda, rho));
        }
    }
    out
}

/// Names accepted by `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Step,
    Bound,
    ClosedForm,
    Equifinite,
    OneSided,
    Threshold,
    Decide,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "all",
        "step",
        "bound",
        "closed-form",
        "equifinite",
        "one-sided",
        "threshold",
        "decide",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "step" => Suite::Step,
            "bound" => Suite::Bound,
            "closed-form" => Suite::ClosedForm,
            "equifinite" => Suite::Equifinite,
            "one-sided" => Suite::OneSided,
            "threshold" => Suite::Threshold,
            "decide" => Suite::Decide,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

/// Runs a suite on its default instance family.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<PropertyReport> {
    match suite {
        Suite::All => [
            Suite::Step,
            Suite::Bound,
            Suite::ClosedForm,
            Suite::Equifinite,
            Suite::Threshold,
            Suite::OneSided,
            Suite::Decide,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, seed))
        .collect(),
        Suite::Step => vec![PropertyReport::merge(
            "step",
            vec![
                check_step_lemma(&example_pairs(), 100, None),
                check_step_lemma(&random_pairs(seed, 100), 128, Some(seed)),
            ],
        )],
        Suite::Bound => vec![check_rog_bound(&conjugate_pairs(3, 4, 3), None)],
        Suite::ClosedForm => vec![check_closed_form(&conjugate_pairs(3, 4, 3), 0..=3)],
        Suite::Equifinite => vec![check_og_rog_equifiniteness(&conjugate_pairs(3, 4, 3))],
        Suite::Threshold => vec![check_threshold_counterexample(1..=8)],
        Suite::OneSided => {
            let extensions: Vec<OneSidedPair> = extension_pairs(seed, 50)
                .into_iter()
                .map(|(pair, _)| pair)
                .collect();
            let mut r = PropertyReport::merge(
                "one-sided",
                vec![
                    check_one_sided(&extensions, 128, [64, 256]),
                    check_one_sided(&non_extension_pairs(seed, 50), 128, [64, 256]),
                ],
            );
            r.seed = Some(seed);
            vec![r]
        }
        Suite::Decide => vec![check_decisions(&periodic_pairs(200))],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_suites_pass() {
        assert!(check_step_lemma(&example_pairs(), 30, None).passed());
        assert!(check_rog_bound(&example_pairs(), Some(60)).passed());
        assert!(check_closed_form(&example_pairs(), 0..=3).passed());
        assert!(check_og_rog_equifiniteness(&example_pairs()).passed());
        assert!(check_threshold_counterexample(1..=5).passed());
    }

    #[test]
    fn reports_failures() {
        // ⋯aaa against bbb⋯ has non-conjugate periods.
        let r = check_rog_bound(&[(left("a", ""), right("", "b"))], Some(4));
        assert!(!r.passed());
        assert_eq!(r.failures[0].actual, "not conjugate");
        assert!(r.to_string().starts_with("FAIL bound"));
    }

    #[test]
    fn json_line_schema() {
        let r = check_threshold_counterexample(1..=2);
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            BTreeSet::from(["property", "instances", "failures", "seed", "elapsed_ms"])
        );
        assert_eq!(v["property"], "threshold");
        assert_eq!(v["instances"], 2);
        assert!(v["seed"].is_null());
    }

    #[test]
    fn small_enumeration_is_canonical_and_ordered() {
        let pairs = conjugate_pairs(2, 2, 1);
        assert_eq!(describe(&pairs[0]), "(a)~ ~(a)");
        for (l, r) in &pairs {
            assert_eq!(
                canonicalize_left(l.period().unwrap(), l.preperiod().unwrap()).unwrap(),
                *l
            );
            assert_eq!(
                canonicalize_right(r.preperiod().unwrap(), r.period().unwrap()).unwrap(),
                *r
            );
        }
        let unique: BTreeSet<String> = pairs.iter().map(describe).collect();
        assert_eq!(unique.len(), pairs.len());
    }

    #[test]
    fn random_sources_are_seeded() {
        let a: Vec<String> = random_pairs(7, 10).iter().map(describe).collect();
        let b: Vec<String> = random_pairs(7, 10).iter().map(describe).collect();
        assert_eq!(a, b);
        assert_eq!(periodic_pairs(200).len(), 200);
    }

    #[test]
    fn sampling_extension_oracle() {
        assert!(extends_by_sampling(
            &left("ab", ""),
            &left("ab", "a"),
            16,
            4
        ));
        assert!(!extends_by_sampling(
            &left("ab", "c"),
            &left("ba", "dc"),
            16,
            4
        ));
    }
}
