//! Finite-word primitives: borders, periods, primitive roots and conjugacy.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter. Letters are opaque tokens compared for equality and order only.
pub trait Symbol: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {}

impl<T> Symbol for T where T: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {}

/// A non-empty ordered set of distinct letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet<S> {
    letters: Vec<S>,
}

impl<S: Symbol> Alphabet<S> {
    pub fn new(letters: Vec<S>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashSet::with_capacity(letters.len());
        if !letters.iter().all(|s| seen.insert(s)) {
            return Err(Error::DuplicateSymbol);
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[S] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: &S) -> bool {
        self.letters.contains(s)
    }

    /// All words of length `len`, in lexicographic order induced by the
    /// letter order.
    pub fn words(&self, len: usize) -> impl Iterator<Item = Word<S>> + '_ {
        let k = self.letters.len();
        let total = k.checked_pow(len as u32).expect("enumeration too large");
        (0..total).map(move |mut code| {
            let mut out = vec![self.letters[0].clone(); len];
            for slot in out.iter_mut().rev() {
                *slot = self.letters[code % k].clone();
                code /= k;
            }
            Word::new(out)
        })
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word<S>> + '_ {
        (0..=max_len).flat_map(move |len| self.words(len))
    }
}

impl Alphabet<char> {
    /// The alphabet `{a, b, ...}` of the first `k` lowercase letters.
    pub fn latin(k: usize) -> Result<Self> {
        Self::new(('a'..='z').take(k).collect())
    }
}

/// A finite word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<S> {
    letters: Vec<S>,
}

impl<S: Symbol> Word<S> {
    pub fn new(letters: Vec<S>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self {
            letters: Vec::new(),
        }
    }

    pub fn from_slice(letters: &[S]) -> Self {
        Self {
            letters: letters.to_vec(),
        }
    }

    pub fn into_vec(self) -> Vec<S> {
        self.letters
    }

    pub fn as_slice(&self) -> &[S] {
        &self.letters
    }

    /// The prefix of length `n` (the whole word if `n` exceeds the length).
    pub fn prefix(&self, n: usize) -> Self {
        Self::from_slice(&self.letters[..n.min(self.len())])
    }

    /// The suffix of length `n` (the whole word if `n` exceeds the length).
    pub fn suffix(&self, n: usize) -> Self {
        Self::from_slice(&self.letters[self.len() - n.min(self.len())..])
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self {
            letters: (0..times)
                .flat_map(|_| self.letters.iter().cloned())
                .collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().cloned().collect(),
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.len());
        Self { letters }
    }

    pub fn is_primitive(&self) -> bool {
        primitive_root(self).map(|(_, e)| e == 1).unwrap_or(false)
    }
}

impl<S> Deref for Word<S> {
    type Target = [S];

    fn deref(&self) -> &[S] {
        &self.letters
    }
}

impl<S: Symbol> From<Vec<S>> for Word<S> {
    fn from(letters: Vec<S>) -> Self {
        Self::new(letters)
    }
}

impl<S: Symbol> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl From<&str> for Word<char> {
    fn from(s: &str) -> Self {
        s.chars().collect()
    }
}

impl FromStr for Word<char> {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(s.into())
    }
}

impl<S: fmt::Display> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.letters {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Border array: entry `i` is the length of the longest proper border of
/// `w[..=i]`.
pub fn borders<T: PartialEq>(w: &[T]) -> Vec<usize> {
    let mut b = vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = b[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        b[i] = k;
    }
    b
}

/// `head · # · tail` with `None` as a separator no letter can equal.
fn joined<'a, S>(head: &'a [S], tail: impl IntoIterator<Item = &'a S>) -> Vec<Option<&'a S>> {
    let mut out = Vec::with_capacity(2 * head.len() + 1);
    out.extend(head.iter().map(Some));
    out.push(None);
    out.extend(tail.into_iter().map(Some));
    out
}

/// Returns `(root, exponent)` with `root` primitive and `root^exponent == w`.
pub fn primitive_root<S: Symbol>(w: &Word<S>) -> Result<(Word<S>, usize)> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let period = n - borders(w)[n - 1];
    let root_len = if n.is_multiple_of(period) { period } else { n };
    Ok((w.prefix(root_len), n / root_len))
}

/// Witness of conjugacy `u = y·z`, `v = z·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugacy<S> {
    pub y: Word<S>,
    pub z: Word<S>,
}

/// Decides whether `u` and `v` are conjugate, returning the witness with the
/// shortest `z` (and `y` non-empty). Two empty words are conjugate with both
/// components empty.
pub fn is_conjugate<S: Symbol>(u: &Word<S>, v: &Word<S>) -> Option<Conjugacy<S>> {
    let n = u.len();
    if v.len() != n {
        return None;
    }
    if n == 0 {
        return Some(Conjugacy {
            y: Word::empty(),
            z: Word::empty(),
        });
    }
    // v occurs in u·u at offset i in 1..=n  <=>  v = u[i..]·u[..i].
    // That occurrence ends at index 2n + i of v·#·u·u.
    let text = joined(v, u.iter().chain(u.iter()));
    let b = borders(&text);
    let start = (1..=n).rev().find(|&i| b[2 * n + i] == n)?;
    Some(Conjugacy {
        y: u.prefix(start),
        z: u.suffix(n - start),
    })
}

/// Largest `k` such that the length-`k` suffix of `u` equals the length-`k`
/// prefix of `v`.
pub fn longest_suffix_prefix_match<S: Symbol>(u: &[S], v: &[S]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(suffix_prefix_overlap(u, v))
}

pub(crate) fn suffix_prefix_overlap<S: PartialEq>(u: &[S], v: &[S]) -> usize {
    if v.is_empty() || u.is_empty() {
        return 0;
    }
    let text = joined(v, u.iter());
    *borders(&text).last().unwrap()
}

/// Whether `a_i = a_{i+p}` holds wherever both sides are defined.
pub fn is_p_periodic<S: PartialEq>(w: &[S], p: usize) -> Result<bool> {
    if p == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok(w.iter().zip(w.iter().skip(p)).all(|(a, b)| a == b))
}
