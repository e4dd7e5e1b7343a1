//! Gap sequences of infinite-word pairs, the closed form of the right overlap
//! gap for pairs with conjugate periods, exact gap sets and finiteness
//! decisions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::infinite::{Left, Right};
use crate::overlap::{gap_record_linear, GapRecord};
use crate::words::{is_conjugate, Conjugacy, Symbol, Word};

const PARALLEL_HORIZON: usize = 512;

/// Tabulated gaps for `n = 0..=horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSequence {
    pub descriptor: String,
    pub horizon: usize,
    pub records: Vec<GapRecord>,
}

impl GapSequence {
    pub fn logs(&self) -> impl Iterator<Item = usize> + '_ {
        self.records.iter().map(|r| r.log)
    }

    pub fn rogs(&self) -> impl Iterator<Item = usize> + '_ {
        self.records.iter().map(|r| r.rog)
    }

    pub fn ogs(&self) -> impl Iterator<Item = usize> + '_ {
        self.records.iter().map(|r| r.og)
    }

    /// Largest og over `n <= upto`.
    pub fn max_og(&self, upto: usize) -> usize {
        self.records
            .iter()
            .take(upto + 1)
            .map(|r| r.og)
            .max()
            .unwrap_or(0)
    }
}

fn tabulate(len: usize, record: impl Fn(usize) -> GapRecord + Sync + Send) -> Vec<GapRecord> {
    if len > PARALLEL_HORIZON {
        (0..len + 1)
            .into_par_iter()
            .with_min_len(64)
            .map(record)
            .collect()
    } else {
        (0..=len).map(record).collect()
    }
}

/// `log`, `rog` and `og` of `(λ_n, ρ_n)` for `n = 0..=horizon`.
pub fn gap_sequence<S: Symbol>(lambda: &Left<S>, rho: &Right<S>, horizon: usize) -> GapSequence {
    let l = lambda.sample(horizon);
    let r = rho.sample(horizon);
    let records = tabulate(horizon, |n| {
        gap_record_linear(&l[horizon - n..], &r[..n]).expect("equal lengths")
    });
    GapSequence {
        descriptor: format!("{lambda} {rho}"),
        horizon,
        records,
    }
}

/// As [`gap_sequence`], with `ρ_n` the length-`n` suffix of a second
/// left-infinite word.
pub fn one_sided_gap_sequence<S: Symbol>(
    lambda: &Left<S>,
    rho: &Left<S>,
    horizon: usize,
) -> GapSequence {
    let l = lambda.sample(horizon);
    let r = rho.sample(horizon);
    let records = tabulate(horizon, |n| {
        gap_record_linear(&l[horizon - n..], &r[horizon - n..]).expect("equal lengths")
    });
    GapSequence {
        descriptor: format!("{lambda} {rho} (one-sided)"),
        horizon,
        records,
    }
}

/// Parameters of the eventual pattern of `rog` for `λ = ⋯uuu·w₁` and
/// `ρ = w₂·vvv⋯` with conjugate canonical periods `u = y·z`, `v = z·y`.
///
/// The construction assumes `|w₁| >= |w₂|`. When `|w₂| > |w₁|` the pair is
/// mirrored to `(reverse ρ, reverse λ)`, which has the same gap functions, and
/// `swapped` is set; all word fields then describe the mirrored pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm<S> {
    /// `u`, the period of the left word.
    pub left_period: Word<S>,
    /// `v`, the period of the right word.
    pub right_period: Word<S>,
    /// `u = y·z`, `v = z·y`.
    pub rotation: Conjugacy<S>,
    /// `p = |u| = |v|`.
    pub period_len: usize,
    pub left_preperiod: Word<S>,
    pub right_preperiod: Word<S>,
    /// `m' = min(|w₁|, |w₂|)`.
    pub short_preperiod: usize,
    /// `m = max(|w₁|, |w₂|)`.
    pub long_preperiod: usize,
    /// `M = m + p - 1`, an upper bound of `rog`.
    pub rog_bound: usize,
    /// `m̄ ∈ [M, M + p - 1]` with `m̄ ≡ m' + |z| (mod p)`.
    pub anchor: usize,
    /// `d` with `m̄ = m' + |z| + d·p`.
    pub anchor_periods: usize,
    /// `w̄₂`, the prefix of the right word of length `m̄`.
    pub anchored_prefix: Word<S>,
    /// `k₀`, the least positive integer with `|z| + (d + k₀)·p > M`.
    pub first_block: usize,
    pub swapped: bool,
}

impl<S: Symbol> ClosedForm<S> {
    /// First `n` covered by the closed form: `m̄ + 1 + p·k₀`.
    pub fn threshold(&self) -> usize {
        self.anchor + 1 + self.period_len * self.first_block
    }

    /// `max(64, 4(M + p))`.
    pub fn default_horizon(&self) -> usize {
        (4 * (self.rog_bound + self.period_len)).max(64)
    }
}

// (u, w₁, v, w₂) for λ = ⋯uu·w₁ and ρ = w₂·vv⋯.
type Parts<S> = (Word<S>, Word<S>, Word<S>, Word<S>);

fn periodic_parts<S: Symbol>(lambda: &Left<S>, rho: &Right<S>) -> Result<Parts<S>> {
    let l = lambda.as_periodic().ok_or(Error::NotUltimatelyPeriodic)?;
    let r = rho.as_periodic().ok_or(Error::NotUltimatelyPeriodic)?;
    Ok((
        l.period().clone(),
        l.preperiod().clone(),
        r.period().clone(),
        r.preperiod().clone(),
    ))
}

pub fn closed_form_params<S: Symbol>(lambda: &Left<S>, rho: &Right<S>) -> Result<ClosedForm<S>> {
    let (_, w1, _, w2) = periodic_parts(lambda, rho)?;
    if w2.len() > w1.len() {
        let mut params = build_closed_form(&rho.reversed(), &lambda.reversed())?;
        params.swapped = true;
        return Ok(params);
    }
    build_closed_form(lambda, rho)
}

fn build_closed_form<S: Symbol>(lambda: &Left<S>, rho: &Right<S>) -> Result<ClosedForm<S>> {
    let (u, w1, v, w2) = periodic_parts(lambda, rho)?;
    let rotation = is_conjugate(&u, &v).ok_or(Error::NotConjugate)?;
    let p = u.len();
    let short = w1.len().min(w2.len());
    let long = w1.len().max(w2.len());
    let bound = long + p - 1;
    let z = rotation.z.len();
    let residue = (short + z) % p;
    let anchor = bound + (residue + p - bound % p) % p;
    let anchor_periods = (anchor - short - z) / p;
    let mut first_block = 1;
    while z + (anchor_periods + first_block) * p <= bound {
        first_block += 1;
    }
    Ok(ClosedForm {
        anchored_prefix: rho.sample(anchor),
        left_period: u,
        right_period: v,
        rotation,
        period_len: p,
        left_preperiod: w1,
        right_preperiod: w2,
        short_preperiod: short,
        long_preperiod: long,
        rog_bound: bound,
        anchor,
        anchor_periods,
        first_block,
        swapped: false,
    })
}

/// `rog(n)` from the closed form, or `None` below the threshold.
pub fn closed_form_rog<S: Symbol>(params: &ClosedForm<S>, n: usize) -> Option<usize> {
    if n < params.threshold() {
        return None;
    }
    let j = (n - params.anchor - 1) % params.period_len;
    Some(params.rog_bound - j)
}

/// The image of `log`: either a finite set, or a finite set together with
/// every integer from `tail_from` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogSet {
    Finite(BTreeSet<usize>),
    Unbounded {
        values: BTreeSet<usize>,
        tail_from: usize,
    },
}

impl LogSet {
    pub fn is_finite(&self) -> bool {
        matches!(self, LogSet::Finite(_))
    }

    pub fn contains(&self, x: usize) -> bool {
        match self {
            LogSet::Finite(s) => s.contains(&x),
            LogSet::Unbounded { values, tail_from } => x >= *tail_from || values.contains(&x),
        }
    }
}

/// `{0,1,2}` style rendering.
pub fn format_set(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for LogSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogSet::Finite(s) => f.write_str(&format_set(s)),
            LogSet::Unbounded { values, tail_from } if values.is_empty() => {
                write!(f, "unbounded ({{{tail_from},{},...}})", tail_from + 1)
            }
            LogSet::Unbounded { values, tail_from } => {
                write!(
                    f,
                    "unbounded ({} ∪ {{{tail_from},{},...}})",
                    format_set(values),
                    tail_from + 1
                )
            }
        }
    }
}

/// Exact images of the three gap functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSets {
    pub log: LogSet,
    pub rog: BTreeSet<usize>,
    pub og: BTreeSet<usize>,
    /// First `n` from which `rog` follows the closed form.
    pub threshold: usize,
    /// `og(n + cycle_len) = og(n)` for all `n >= cycle_start`.
    pub cycle_start: usize,
    pub cycle_len: usize,
    pub rog_bound: usize,
}

/// Computes LOG, ROG and OG exactly for a pair with conjugate periods.
///
/// Below the threshold the gaps are computed directly. From the threshold
/// on, `rog` is given by the closed form and `log(n + 1)` is either 0 (exactly
/// when `rog(n + 1) = 0`) or `log(n) + 1`. Since `og = min(log, rog)` and
/// `rog <= M`, the pair (log capped at `M + 1`, `n mod p`) determines every
/// later value of `og`; the run over that finite state space is followed
/// until a state repeats.
pub fn exact_gap_sets<S: Symbol>(lambda: &Left<S>, rho: &Right<S>) -> Result<GapSets> {
    let params = closed_form_params(lambda, rho)?;
    let p = params.period_len;
    let bound = params.rog_bound;
    let threshold = params.threshold();
    let seq = gap_sequence(lambda, rho, threshold + p);

    for n in threshold..=threshold + p {
        if closed_form_rog(&params, n) != Some(seq.records[n].rog) {
            return Err(Error::Inconsistent(format!(
                "closed form disagrees with direct rog at n = {n}"
            )));
        }
    }

    let below = &seq.records[..threshold];
    let mut rog: BTreeSet<usize> = below.iter().map(|r| r.rog).collect();
    rog.extend((0..p).map(|j| bound - j));
    let mut og: BTreeSet<usize> = below.iter().map(|r| r.og).collect();
    let mut logs: Vec<usize> = below.iter().map(|r| r.log).collect();

    let cap = bound + 1;
    let limit = (cap + 1) * p + 1;
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut log = seq.records[threshold].log;
    let mut phase = 0;
    let mut n = threshold;
    let (cycle_start, cycle_len) = loop {
        if let Some(&first) = seen.get(&(log.min(cap), phase)) {
            break (first, n - first);
        }
        if n - threshold > limit {
            return Err(Error::CycleNotFound(limit));
        }
        seen.insert((log.min(cap), phase), n);
        og.insert(log.min(bound - phase));
        logs.push(log);
        phase = (phase + 1) % p;
        log = if bound - phase == 0 { 0 } else { log + 1 };
        n += 1;
    };

    let resets = (cycle_start..n).any(|i| logs[i] == 0);
    let log_set = if resets {
        // After the first reset inside the cycle, log repeats exactly; one more
        // lap covers every value.
        for _ in 0..cycle_len {
            logs.push(log);
            phase = (phase + 1) % p;
            log = if bound - phase == 0 { 0 } else { log + 1 };
        }
        LogSet::Finite(logs.iter().copied().collect())
    } else {
        let mut tail_from = logs[cycle_start];
        let mut values: BTreeSet<usize> = logs[..cycle_start]
            .iter()
            .copied()
            .filter(|&x| x < tail_from)
            .collect();
        while tail_from > 0 && values.remove(&(tail_from - 1)) {
            tail_from -= 1;
        }
        LogSet::Unbounded { values, tail_from }
    };

    Ok(GapSets {
        log: log_set,
        rog,
        og,
        threshold,
        cycle_start,
        cycle_len,
        rog_bound: bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Finite,
    Infinite,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionSide {
    /// `ρ = λ·w`.
    RightExtendsLeft,
    /// `λ = ρ·w`.
    LeftExtendsRight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<S> {
    /// `λ = ⋯uuu·w₁` and `ρ = w₂·uuu⋯` with the same `u`.
    CommonPeriod {
        period: Word<S>,
        left_preperiod: Word<S>,
        right_preperiod: Word<S>,
    },
    /// One left-infinite word is the other followed by `word`.
    Extension { word: Word<S>, side: ExtensionSide },
}

impl<S: Symbol> Witness<S> {
    /// Checks a common-period witness against both words up to `depth`.
    pub fn reconstructs(&self, lambda: &Left<S>, rho: &Right<S>, depth: usize) -> bool {
        let Witness::CommonPeriod {
            period,
            left_preperiod,
            right_preperiod,
        } = self
        else {
            return false;
        };
        (0..depth).all(|pos| {
            let l = if pos < left_preperiod.len() {
                left_preperiod[left_preperiod.len() - 1 - pos].clone()
            } else {
                period[period.len() - 1 - (pos - left_preperiod.len()) % period.len()].clone()
            };
            let r = if pos < right_preperiod.len() {
                right_preperiod[pos].clone()
            } else {
                period[(pos - right_preperiod.len()) % period.len()].clone()
            };
            l == lambda.letter_at(pos) && r == rho.letter_at(pos)
        })
    }
}

/// Maximum og over two nested horizons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthEvidence {
    pub horizons: [usize; 2],
    pub max_og: [usize; 2],
}

impl GrowthEvidence {
    pub fn grows(&self) -> bool {
        self.max_og[1] > self.max_og[0]
    }

    fn from_sequence(seq: &GapSequence, short: usize) -> Self {
        Self {
            horizons: [short, seq.horizon],
            max_og: [seq.max_og(short), seq.max_og(seq.horizon)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessVerdict<S> {
    pub finite: bool,
    /// False when only sampled evidence is available.
    pub decided: bool,
    pub witness: Option<Witness<S>>,
    pub reason: Option<String>,
    pub evidence: Option<GrowthEvidence>,
}

impl<S: Symbol> FinitenessVerdict<S> {
    pub fn outcome(&self) -> Outcome {
        match (self.decided, self.finite) {
            (false, _) => Outcome::Undecided,
            (true, true) => Outcome::Finite,
            (true, false) => Outcome::Infinite,
        }
    }

    fn finite(witness: Witness<S>) -> Self {
        Self {
            finite: true,
            decided: true,
            witness: Some(witness),
            reason: None,
            evidence: None,
        }
    }

    fn infinite(reason: &str, evidence: Option<GrowthEvidence>) -> Self {
        Self {
            finite: false,
            decided: true,
            witness: None,
            reason: Some(reason.into()),
            evidence,
        }
    }

    fn undecided(evidence: GrowthEvidence) -> Self {
        Self {
            finite: false,
            decided: false,
            witness: None,
            reason: Some("not ultimately periodic: only sampled evidence is available".into()),
            evidence: Some(evidence),
        }
    }
}

/// Horizons used for sampled evidence on generator words.
pub const EVIDENCE_HORIZONS: [usize; 2] = [256, 1024];

/// `4(M + p)` for an arbitrary pair of ultimately periodic words, with `p` the
/// longer period and `M = max preperiod + p - 1`.
pub fn growth_horizon(period_lens: [usize; 2], preperiod_lens: [usize; 2]) -> usize {
    let p = period_lens[0].max(period_lens[1]);
    let bound = preperiod_lens[0].max(preperiod_lens[1]) + p - 1;
    4 * (bound + p)
}

/// Decides whether `og` of a left-infinite and a right-infinite word has
/// finite image: for ultimately periodic words this holds iff the canonical
/// periods are conjugate.
pub fn decide_og_finite<S: Symbol>(lambda: &Left<S>, rho: &Right<S>) -> FinitenessVerdict<S> {
    let Ok((u, w1, v, w2)) = periodic_parts(lambda, rho) else {
        let seq = gap_sequence(lambda, rho, EVIDENCE_HORIZONS[1]);
        return FinitenessVerdict::undecided(GrowthEvidence::from_sequence(
            &seq,
            EVIDENCE_HORIZONS[0],
        ));
    };
    match is_conjugate(&u, &v) {
        // w₂·(z·y)^∞ = w₂·z·(y·z)^∞
        Some(Conjugacy { z, .. }) => FinitenessVerdict::finite(Witness::CommonPeriod {
            period: u,
            left_preperiod: w1,
            right_preperiod: w2.concat(&z),
        }),
        None => {
            let short = growth_horizon([u.len(), v.len()], [w1.len(), w2.len()]);
            let seq = gap_sequence(lambda, rho, 4 * short);
            FinitenessVerdict::infinite(
                "periods not conjugate",
                Some(GrowthEvidence::from_sequence(&seq, short)),
            )
        }
    }
}

/// One-sided variant for two left-infinite words: `og` has finite image iff
/// one word is the other followed by a finite word.
pub fn decide_og_finite_one_sided<S: Symbol>(
    lambda: &Left<S>,
    rho: &Left<S>,
) -> FinitenessVerdict<S> {
    let evidence = |short: usize| {
        let seq = one_sided_gap_sequence(lambda, rho, 4 * short);
        GrowthEvidence::from_sequence(&seq, short)
    };
    let (Some(l), Some(r)) = (lambda.as_periodic(), rho.as_periodic()) else {
        if lambda == rho {
            return FinitenessVerdict::finite(Witness::Extension {
                word: Word::empty(),
                side: ExtensionSide::RightExtendsLeft,
            });
        }
        return FinitenessVerdict::undecided(evidence(EVIDENCE_HORIZONS[0]));
    };
    let short = growth_horizon(
        [l.period().len(), r.period().len()],
        [l.preperiod().len(), r.preperiod().len()],
    );
    if is_conjugate(l.period(), r.period()).is_none() {
        return FinitenessVerdict::infinite("periods not conjugate", Some(evidence(short)));
    }
    let depth = l.preperiod().len().max(r.preperiod().len()) + l.period().len();
    for k in 0..=depth {
        if rho.truncated(k).ok().as_ref() == Some(lambda) {
            return FinitenessVerdict::finite(Witness::Extension {
                word: rho.sample(k),
                side: ExtensionSide::RightExtendsLeft,
            });
        }
        if lambda.truncated(k).ok().as_ref() == Some(rho) {
            return FinitenessVerdict::finite(Witness::Extension {
                word: lambda.sample(k),
                side: ExtensionSide::LeftExtendsRight,
            });
        }
    }
    FinitenessVerdict::infinite("neither word extends the other", Some(evidence(short)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinite::{canonicalize_left, canonicalize_right, GeneratorKind};

    fn w(s: &str) -> Word<char> {
        s.into()
    }

    fn left(u: &str, pre: &str) -> Left<char> {
        canonicalize_left(&w(u), &w(pre)).unwrap()
    }

    fn right(pre: &str, u: &str) -> Right<char> {
        canonicalize_right(&w(pre), &w(u)).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn periodic_example_sequence() {
        let seq = gap_sequence(&left("baa", ""), &right("", "aab"), 8);
        assert_eq!(seq.ogs().collect::<Vec<_>>(), [0, 0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(seq.logs().collect::<Vec<_>>(), [0, 0, 0, 1, 2, 0, 1, 2, 0]);
        assert_eq!(seq.rogs().collect::<Vec<_>>(), [0, 0, 0, 2, 1, 0, 2, 1, 0]);
    }

    #[test]
    fn ultimately_periodic_example_sequence() {
        let seq = gap_sequence(&left("bbaa", "cab"), &right("", "abba"), 14);
        assert_eq!(
            seq.logs().collect::<Vec<_>>(),
            [0, 1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]
        );
        assert_eq!(
            seq.rogs().collect::<Vec<_>>(),
            [0, 1, 0, 3, 3, 3, 5, 5, 4, 3, 6, 5, 4, 3, 6]
        );
        assert_eq!(
            seq.ogs().collect::<Vec<_>>(),
            [0, 1, 0, 1, 2, 3, 4, 5, 4, 3, 6, 5, 4, 3, 6]
        );
    }

    #[test]
    fn zero_horizon() {
        let g = Left::generated(GeneratorKind::ThueMorse, ['a', 'b']);
        let seq = gap_sequence(&g, &right("", "ab"), 0);
        assert_eq!(
            seq.records,
            [GapRecord {
                n: 0,
                log: 0,
                rog: 0,
                og: 0
            }]
        );
    }

    #[test]
    fn one_sided_sequences() {
        let l = left("ab", "");
        let seq = one_sided_gap_sequence(&l, &left("ab", "a"), 6);
        assert!(seq.logs().all(|x| x <= 1));
        let seq = one_sided_gap_sequence(&l, &l, 9);
        assert!(seq
            .records
            .iter()
            .all(|r| r.log == 0 && r.rog == 0 && r.og == 0));
        let seq = one_sided_gap_sequence(&left("a", ""), &left("b", ""), 5);
        assert_eq!(seq.ogs().collect::<Vec<_>>(), [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn closed_form_of_examples() {
        let p = closed_form_params(&left("baa", ""), &right("", "aab")).unwrap();
        assert_eq!(
            (
                p.period_len,
                p.long_preperiod,
                p.short_preperiod,
                p.rog_bound
            ),
            (3, 0, 0, 2)
        );
        assert_eq!(
            (p.rotation.y.clone(), p.rotation.z.clone()),
            (w("b"), w("aa"))
        );
        assert_eq!((p.anchor, p.anchor_periods, p.first_block), (2, 0, 1));
        assert_eq!(closed_form_rog(&p, 7), Some(1));
        assert!(!p.swapped);

        let p = closed_form_params(&left("bbaa", "cab"), &right("", "abba")).unwrap();
        assert_eq!(
            (
                p.period_len,
                p.long_preperiod,
                p.short_preperiod,
                p.rog_bound
            ),
            (4, 3, 0, 6)
        );
        assert_eq!(p.rotation.z, w("a"));
        assert_eq!((p.anchor, p.anchor_periods, p.first_block), (9, 2, 1));
        assert_eq!(p.anchored_prefix, w("abbaabbaa"));
        assert_eq!(closed_form_rog(&p, 14), Some(6));
        assert_eq!(closed_form_rog(&p, 9), None);
        assert_eq!(p.threshold(), 14);

        let lam = left("a", "baa");
        let rho = right("aab", "a");
        let p = closed_form_params(&lam, &rho).unwrap();
        assert_eq!((p.long_preperiod, p.short_preperiod), (3, 3));
        assert_eq!(gap_sequence(&lam, &rho, 5).records[5].rog, 0);
    }

    #[test]
    fn closed_form_errors() {
        assert_eq!(
            closed_form_params(&left("a", ""), &right("", "ab")),
            Err(Error::NotConjugate)
        );
        assert_eq!(
            Error::NotConjugate.to_string(),
            "closed form undefined: periods are not conjugate"
        );
        let g = Left::generated(GeneratorKind::Fibonacci, ['a', 'b']);
        assert_eq!(
            closed_form_params(&g, &right("", "ab")),
            Err(Error::NotUltimatelyPeriodic)
        );
    }

    #[test]
    fn swapped_closed_form() {
        let lam = left("ab", "");
        let rho = right("bbc", "ab");
        let p = closed_form_params(&lam, &rho).unwrap();
        assert!(p.swapped);
        assert_eq!(p.long_preperiod, 3);
        let seq = gap_sequence(&lam, &rho, p.threshold() + 4 * p.period_len);
        for n in p.threshold()..=seq.horizon {
            assert_eq!(closed_form_rog(&p, n), Some(seq.records[n].rog), "n = {n}");
        }
    }

    #[test]
    fn exact_sets_of_examples() {
        let sets = exact_gap_sets(&left("baa", ""), &right("", "aab")).unwrap();
        assert_eq!(sets.log, LogSet::Finite(set(&[0, 1, 2])));
        assert_eq!(sets.rog, set(&[0, 1, 2]));
        assert_eq!(sets.og, set(&[0, 1]));

        let sets = exact_gap_sets(&left("bbaa", "cab"), &right("", "abba")).unwrap();
        assert_eq!(
            sets.log,
            LogSet::Unbounded {
                values: set(&[]),
                tail_from: 0
            }
        );
        assert_eq!(sets.rog, set(&[0, 1, 3, 4, 5, 6]));
        assert_eq!(sets.og, set(&[0, 1, 2, 3, 4, 5, 6]));
        assert!(sets.rog.iter().all(|&x| x <= sets.rog_bound));
        assert_eq!(sets.log.to_string(), "unbounded ({0,1,...})");

        assert_eq!(
            exact_gap_sets(&left("a", ""), &right("", "ab")),
            Err(Error::NotConjugate)
        );
    }

    #[test]
    fn identical_unary_words() {
        let sets = exact_gap_sets(&left("a", ""), &right("", "a")).unwrap();
        assert_eq!(sets.og, set(&[0]));
        assert_eq!(sets.log, LogSet::Finite(set(&[0])));
    }

    #[test]
    fn decisions() {
        let lam = left("baa", "");
        let rho = right("", "aab");
        let v = decide_og_finite(&lam, &rho);
        assert_eq!(v.outcome(), Outcome::Finite);
        assert!(v.witness.as_ref().unwrap().reconstructs(&lam, &rho, 32));

        let v = decide_og_finite(&left("a", ""), &right("", "ab"));
        assert_eq!(v.outcome(), Outcome::Infinite);
        assert_eq!(v.reason.as_deref(), Some("periods not conjugate"));
        assert!(v.evidence.unwrap().grows());

        let g = Left::generated(GeneratorKind::ThueMorse, ['a', 'b']);
        let v = decide_og_finite(&g, &right("", "ab"));
        assert_eq!(v.outcome(), Outcome::Undecided);
        let e = v.evidence.unwrap();
        assert_eq!(e.horizons, [256, 1024]);
        assert!(e.grows());
    }

    #[test]
    fn one_sided_decisions() {
        let v = decide_og_finite_one_sided(&left("ab", ""), &left("ab", "a"));
        assert_eq!(v.outcome(), Outcome::Finite);
        assert_eq!(
            v.witness,
            Some(Witness::Extension {
                word: w("a"),
                side: ExtensionSide::RightExtendsLeft
            })
        );
        // ⋯ababa and ⋯abab: each extends the other; the shorter witness side wins.
        let v = decide_og_finite_one_sided(&left("ab", "a"), &left("ab", ""));
        assert_eq!(
            v.witness,
            Some(Witness::Extension {
                word: w("b"),
                side: ExtensionSide::RightExtendsLeft
            })
        );
        let v = decide_og_finite_one_sided(&left("ab", "c"), &left("ab", ""));
        assert_eq!(
            v.witness,
            Some(Witness::Extension {
                word: w("c"),
                side: ExtensionSide::LeftExtendsRight
            })
        );
        assert_eq!(
            decide_og_finite_one_sided(&left("a", ""), &left("b", "")).outcome(),
            Outcome::Infinite
        );

        let lam = left("ab", "c");
        let rho = left("ba", "dc");
        let v = decide_og_finite_one_sided(&lam, &rho);
        assert_eq!(v.outcome(), Outcome::Infinite);
        let seq = one_sided_gap_sequence(&lam, &rho, 64);
        assert!(seq.max_og(64) > seq.max_og(16));

        let g = Left::generated(GeneratorKind::Fibonacci, ['a', 'b']);
        assert_eq!(
            decide_og_finite_one_sided(&g, &g).outcome(),
            Outcome::Finite
        );
        assert_eq!(
            decide_og_finite_one_sided(&g, &left("a", "")).outcome(),
            Outcome::Undecided
        );
    }
}
