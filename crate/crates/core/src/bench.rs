//! Timing of the naive and linear gap kernels on equal-length pairs.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::infinite::{canonicalize_left, canonicalize_right};
use crate::overlap::{gap_record_linear, gap_record_naive, GapRecord};
use crate::words::Word;

/// How benchmark pairs are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairFamily {
    /// `(λ_L, ρ_L)` for `λ = ⋯uuu·w` and `ρ = vvv⋯` with `v` a rotation of
    /// `u` and `w` starting with a letter absent from `u`. Every `p`-th
    /// candidate overlap agrees up to `w`, so the naive scan is quadratic.
    Periodic,
    /// Independent uniform letters over `{a, b}`.
    Uniform,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub len: usize,
    pub trials: usize,
    pub family: PairFamily,
    pub seed: u64,
    pub naive_ms: Vec<f64>,
    pub linear_ms: Vec<f64>,
    pub naive_median_ms: f64,
    pub linear_median_ms: f64,
    /// Whether both kernels returned the same record on every trial.
    pub agree: bool,
}

impl BenchReport {
    /// `naive / linear` median ratio.
    pub fn speedup(&self) -> f64 {
        if self.linear_median_ms == 0.0 {
            return f64::INFINITY;
        }
        self.naive_median_ms / self.linear_median_ms
    }
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[char], len: usize) -> Word<char> {
    (0..len)
        .map(|_| letters[rng.gen_range(0..letters.len())])
        .collect()
}

/// Draws one pair of length `len` from `family`.
pub fn random_pair(
    rng: &mut ChaCha8Rng,
    family: PairFamily,
    len: usize,
) -> (Word<char>, Word<char>) {
    match family {
        PairFamily::Uniform => (
            random_word(rng, &['a', 'b'], len),
            random_word(rng, &['a', 'b'], len),
        ),
        PairFamily::Periodic => {
            let p = rng.gen_range(1..=3);
            let u = random_word(rng, &['a', 'b'], p);
            let v = u.rotate_left(rng.gen_range(0..p));
            // A `c` in the left preperiod keeps the two samples distinct.
            let tail = rng.gen_range(0..=2);
            let w = Word::from_slice(&['c']).concat(&random_word(rng, &['a', 'b', 'c'], tail));
            let lambda = canonicalize_left(&u, &w).expect("non-empty period");
            let rho = canonicalize_right(&Word::empty(), &v).expect("non-empty period");
            (lambda.sample(len), rho.sample(len))
        }
    }
}

fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let mut s = xs.to_vec();
    s.sort_by(|a, b| a.total_cmp(b));
    let mid = s.len() / 2;
    if s.len() % 2 == 1 {
        s[mid]
    } else {
        (s[mid - 1] + s[mid]) / 2.0
    }
}

fn timed(f: impl FnOnce() -> GapRecord) -> (GapRecord, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

/// Runs `trials` pairs of length `len` through both kernels.
pub fn run_benchmark(len: usize, trials: usize, family: PairFamily, seed: u64) -> BenchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut naive_ms = Vec::with_capacity(trials);
    let mut linear_ms = Vec::with_capacity(trials);
    let mut agree = true;
    for _ in 0..trials {
        let (u, v) = random_pair(&mut rng, family, len);
        let (naive, tn) = timed(|| gap_record_naive(&u, &v).expect("equal lengths"));
        let (linear, tl) = timed(|| gap_record_linear(&u, &v).expect("equal lengths"));
        agree &= naive == linear;
        naive_ms.push(tn.as_secs_f64() * 1e3);
        linear_ms.push(tl.as_secs_f64() * 1e3);
    }
    BenchReport {
        len,
        trials,
        family,
        seed,
        naive_median_ms: median(&naive_ms),
        linear_median_ms: median(&linear_ms),
        naive_ms,
        linear_ms,
        agree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_lengths() {
        let r = run_benchmark(0, 3, PairFamily::Periodic, 1);
        assert!(r.agree);
        let r = run_benchmark(8, 3, PairFamily::Uniform, 1);
        assert!(r.agree);
        assert_eq!(r.naive_ms.len(), 3);
    }

    #[test]
    fn zero_length_pairs_are_all_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (u, v) = random_pair(&mut rng, PairFamily::Periodic, 0);
        assert_eq!(
            gap_record_naive(&u, &v).unwrap(),
            GapRecord {
                n: 0,
                log: 0,
                rog: 0,
                og: 0
            }
        );
    }

    #[test]
    fn medians() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
        assert_eq!(median(&[]), 0.0);
    }
}
