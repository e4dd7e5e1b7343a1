//! Finitely represented left-infinite and right-infinite words.
//!
//! A left-infinite word `⋯uuu·w` and a right-infinite word `w·uuu⋯` are held
//! in canonical form: the period `u` is primitive and the preperiod `w` is as
//! short as possible, which happens exactly when the boundary letters of `u`
//! and `w` differ (the first letters for left words, the last letters for
//! right words). Aperiodic words come from named generators.
//!
//! Positions are counted away from the finite end: position 0 of a left word
//! is its last letter, position 0 of a right word its first letter.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{is_conjugate, primitive_root, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    ThueMorse,
    Fibonacci,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::ThueMorse => "thue-morse",
            GeneratorKind::Fibonacci => "fibonacci",
        }
    }

    /// Index (0 or 1) of the letter at `pos` of the right-infinite word.
    pub fn bit_at(self, pos: usize) -> usize {
        match self {
            GeneratorKind::ThueMorse => (pos.count_ones() & 1) as usize,
            GeneratorKind::Fibonacci => fibonacci_bit(pos),
        }
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thue-morse" => Ok(GeneratorKind::ThueMorse),
            "fibonacci" => Ok(GeneratorKind::Fibonacci),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

// The Fibonacci word (fixed point of a -> ab, b -> a) has letter b at `pos`
// exactly when the Zeckendorf expansion of `pos` over 1, 2, 3, 5, ... uses 1.
fn fibonacci_bit(pos: usize) -> usize {
    let mut fibs = vec![1usize];
    let (mut a, mut b) = (1usize, 2usize);
    while b <= pos {
        fibs.push(b);
        (a, b) = (b, a + b);
    }
    let mut rest = pos;
    for &f in fibs.iter().rev() {
        if f <= rest {
            rest -= f;
            if f == 1 {
                return 1;
            }
        }
    }
    0
}

/// A deterministic aperiodic word given by a position rule over two letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator<S> {
    pub kind: GeneratorKind,
    pub letters: [S; 2],
}

impl<S: Symbol> Generator<S> {
    pub fn letter_at(&self, pos: usize) -> S {
        self.letters[self.kind.bit_at(pos)].clone()
    }
}

/// Period and preperiod of an ultimately periodic word, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UltimatelyPeriodic<S> {
    period: Word<S>,
    preperiod: Word<S>,
}

impl<S: Symbol> UltimatelyPeriodic<S> {
    pub fn period(&self) -> &Word<S> {
        &self.period
    }

    pub fn preperiod(&self) -> &Word<S> {
        &self.preperiod
    }

    fn reversed(&self) -> Self {
        Self {
            period: self.period.reversed(),
            preperiod: self.preperiod.reversed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Repr<S> {
    Periodic(UltimatelyPeriodic<S>),
    Generated(Generator<S>),
}

/// A left-infinite word `⋯a₂a₁a₀`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Left<S> {
    repr: Repr<S>,
}

/// A right-infinite word `a₀a₁a₂⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Right<S> {
    repr: Repr<S>,
}

/// Canonical form of `⋯uuu·w`.
pub fn canonicalize_left<S: Symbol>(u: &Word<S>, w: &Word<S>) -> Result<Left<S>> {
    if u.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let (mut u, _) = primitive_root(u)?;
    let mut w = w.as_slice();
    // ⋯(a·y)(a·y)·a·w'' = ⋯(y·a)(y·a)·w''
    while !w.is_empty() && w[0] == u[0] {
        u = u.rotate_left(1);
        w = &w[1..];
    }
    Ok(Left {
        repr: Repr::Periodic(UltimatelyPeriodic {
            period: u,
            preperiod: Word::from_slice(w),
        }),
    })
}

/// Canonical form of `w·uuu⋯`.
pub fn canonicalize_right<S: Symbol>(w: &Word<S>, u: &Word<S>) -> Result<Right<S>> {
    Ok(canonicalize_left(&u.reversed(), &w.reversed())?.reversed())
}

impl<S: Symbol> Left<S> {
    pub fn periodic(period: &Word<S>, preperiod: &Word<S>) -> Result<Self> {
        canonicalize_left(period, preperiod)
    }

    pub fn generated(kind: GeneratorKind, letters: [S; 2]) -> Self {
        Self {
            repr: Repr::Generated(Generator { kind, letters }),
        }
    }

    pub fn repr(&self) -> &Repr<S> {
        &self.repr
    }

    pub fn as_periodic(&self) -> Option<&UltimatelyPeriodic<S>> {
        match &self.repr {
            Repr::Periodic(p) => Some(p),
            Repr::Generated(_) => None,
        }
    }

    pub fn period(&self) -> Option<&Word<S>> {
        self.as_periodic().map(|p| &p.period)
    }

    pub fn preperiod(&self) -> Option<&Word<S>> {
        self.as_periodic().map(|p| &p.preperiod)
    }

    /// Letter at `pos`, counted leftwards from the last letter.
    pub fn letter_at(&self, pos: usize) -> S {
        match &self.repr {
            Repr::Periodic(UltimatelyPeriodic { period, preperiod }) => {
                if pos < preperiod.len() {
                    preperiod[preperiod.len() - 1 - pos].clone()
                } else {
                    let p = period.len();
                    period[p - 1 - (pos - preperiod.len()) % p].clone()
                }
            }
            Repr::Generated(g) => g.letter_at(pos),
        }
    }

    /// The suffix of length `n`.
    pub fn sample(&self, n: usize) -> Word<S> {
        (0..n).rev().map(|pos| self.letter_at(pos)).collect()
    }

    /// The mirror image, read right to left.
    pub fn reversed(&self) -> Right<S> {
        let repr = match &self.repr {
            Repr::Periodic(p) => Repr::Periodic(p.reversed()),
            Repr::Generated(g) => Repr::Generated(g.clone()),
        };
        Right { repr }
    }

    /// `λ·w`.
    pub fn extended(&self, w: &Word<S>) -> Result<Self> {
        let p = self.as_periodic().ok_or(Error::NotUltimatelyPeriodic)?;
        canonicalize_left(&p.period, &p.preperiod.concat(w))
    }

    /// The word obtained by deleting the last `k` letters.
    pub fn truncated(&self, k: usize) -> Result<Self> {
        let UltimatelyPeriodic { period, preperiod } =
            self.as_periodic().ok_or(Error::NotUltimatelyPeriodic)?;
        if k <= preperiod.len() {
            return canonicalize_left(period, &preperiod.prefix(preperiod.len() - k));
        }
        let p = period.len();
        let r = (k - preperiod.len()) % p;
        canonicalize_left(&period.rotate_left(p - r), &Word::empty())
    }
}

impl<S: Symbol> Right<S> {
    pub fn periodic(preperiod: &Word<S>, period: &Word<S>) -> Result<Self> {
        canonicalize_right(preperiod, period)
    }

    pub fn generated(kind: GeneratorKind, letters: [S; 2]) -> Self {
        Self {
            repr: Repr::Generated(Generator { kind, letters }),
        }
    }

    pub fn repr(&self) -> &Repr<S> {
        &self.repr
    }

    pub fn as_periodic(&self) -> Option<&UltimatelyPeriodic<S>> {
        match &self.repr {
            Repr::Periodic(p) => Some(p),
            Repr::Generated(_) => None,
        }
    }

    pub fn period(&self) -> Option<&Word<S>> {
        self.as_periodic().map(|p| &p.period)
    }

    pub fn preperiod(&self) -> Option<&Word<S>> {
        self.as_periodic().map(|p| &p.preperiod)
    }

    pub fn letter_at(&self, pos: usize) -> S {
        match &self.repr {
            Repr::Periodic(UltimatelyPeriodic { period, preperiod }) => {
                if pos < preperiod.len() {
                    preperiod[pos].clone()
                } else {
                    period[(pos - preperiod.len()) % period.len()].clone()
                }
            }
            Repr::Generated(g) => g.letter_at(pos),
        }
    }

    /// The prefix of length `n`.
    pub fn sample(&self, n: usize) -> Word<S> {
        (0..n).map(|pos| self.letter_at(pos)).collect()
    }

    pub fn reversed(&self) -> Left<S> {
        let repr = match &self.repr {
            Repr::Periodic(p) => Repr::Periodic(p.reversed()),
            Repr::Generated(g) => Repr::Generated(g.clone()),
        };
        Left { repr }
    }
}

/// The length-`n` suffix `λ_n`.
pub fn sample_suffix<S: Symbol>(lambda: &Left<S>, n: usize) -> Word<S> {
    lambda.sample(n)
}

/// The length-`n` prefix `ρ_n`.
pub fn sample_prefix<S: Symbol>(rho: &Right<S>, n: usize) -> Word<S> {
    rho.sample(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InfiniteWord<S> {
    Left(Left<S>),
    Right(Right<S>),
}

/// Access to the canonical period of an infinite word, when it has one.
pub trait Periodicity<S> {
    fn ultimately_periodic(&self) -> Option<&UltimatelyPeriodic<S>>;
}

impl<S: Symbol> Periodicity<S> for Left<S> {
    fn ultimately_periodic(&self) -> Option<&UltimatelyPeriodic<S>> {
        self.as_periodic()
    }
}

impl<S: Symbol> Periodicity<S> for Right<S> {
    fn ultimately_periodic(&self) -> Option<&UltimatelyPeriodic<S>> {
        self.as_periodic()
    }
}

impl<S: Symbol> Periodicity<S> for InfiniteWord<S> {
    fn ultimately_periodic(&self) -> Option<&UltimatelyPeriodic<S>> {
        match self {
            InfiniteWord::Left(l) => l.as_periodic(),
            InfiniteWord::Right(r) => r.as_periodic(),
        }
    }
}

/// Whether two ultimately periodic words have the same set of period words,
/// i.e. whether their canonical periods are conjugate.
pub fn period_sets_equal<S, A, B>(a: &A, b: &B) -> Result<bool>
where
    S: Symbol,
    A: Periodicity<S>,
    B: Periodicity<S>,
{
    let a = a
        .ultimately_periodic()
        .ok_or(Error::NotUltimatelyPeriodic)?;
    let b = b
        .ultimately_periodic()
        .ok_or(Error::NotUltimatelyPeriodic)?;
    Ok(is_conjugate(&a.period, &b.period).is_some())
}

/// Builds a named word over `{a, b}` (generator bit 0 maps to `a`).
/// `periodic` takes `(period, preperiod)`.
pub fn generator(
    name: &str,
    direction: Direction,
    periodic: Option<(Word<char>, Word<char>)>,
) -> Result<InfiniteWord<char>> {
    if name == "periodic" {
        let (u, w) = periodic.ok_or(Error::MissingPeriod)?;
        return Ok(match direction {
            Direction::Left => InfiniteWord::Left(canonicalize_left(&u, &w)?),
            Direction::Right => InfiniteWord::Right(canonicalize_right(&w, &u)?),
        });
    }
    let kind: GeneratorKind = name.parse()?;
    Ok(match direction {
        Direction::Left => InfiniteWord::Left(Left::generated(kind, ['a', 'b'])),
        Direction::Right => InfiniteWord::Right(Right::generated(kind, ['a', 'b'])),
    })
}

fn write_letters<S: fmt::Display>(f: &mut fmt::Formatter<'_>, w: &[S]) -> fmt::Result {
    w.iter().try_for_each(|s| write!(f, "{s}"))
}

impl<S: Symbol> fmt::Display for Left<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Periodic(p) => {
                f.write_str("(")?;
                write_letters(f, &p.period)?;
                f.write_str(")~")?;
                write_letters(f, &p.preperiod)
            }
            Repr::Generated(g) => write!(f, "@{}", g.kind.name()),
        }
    }
}

impl<S: Symbol> fmt::Display for Right<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Periodic(p) => {
                write_letters(f, &p.preperiod)?;
                f.write_str("~(")?;
                write_letters(f, &p.period)?;
                f.write_str(")")
            }
            Repr::Generated(g) => write!(f, "@{}", g.kind.name()),
        }
    }
}

/// A parsed word literal.
///
/// * `(u)~w` is the left-infinite word `⋯uuu·w`;
/// * `w~(u)` is the right-infinite word `w·uuu⋯`;
/// * `@thue-morse` and `@fibonacci` are generators whose direction is fixed
///   by the slot they are used in.
///
/// Letters are single ASCII alphanumerics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Left(Left<char>),
    Right(Right<char>),
    Generator(GeneratorKind),
}

impl Literal {
    pub fn parse(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            literal: text.to_string(),
            reason: reason.into(),
        };
        let letters = |s: &str| -> Result<Word<char>> {
            if let Some(bad) = s.chars().find(|c| !c.is_ascii_alphanumeric()) {
                return Err(fail(&format!(
                    "`{bad}` is not an ASCII alphanumeric letter"
                )));
            }
            Ok(s.into())
        };
        if let Some(name) = text.strip_prefix('@') {
            return name
                .parse()
                .map(Literal::Generator)
                .map_err(|_| fail("unknown generator"));
        }
        if let Some(rest) = text.strip_prefix('(') {
            let (u, w) = rest
                .split_once(")~")
                .ok_or_else(|| fail("expected `(u)~w`"))?;
            let u = letters(u)?;
            if u.is_empty() {
                return Err(fail("empty period"));
            }
            return Ok(Literal::Left(canonicalize_left(&u, &letters(w)?)?));
        }
        if let Some(rest) = text.strip_suffix(')') {
            let (w, u) = rest
                .split_once("~(")
                .ok_or_else(|| fail("expected `w~(u)`"))?;
            let u = letters(u)?;
            if u.is_empty() {
                return Err(fail("empty period"));
            }
            return Ok(Literal::Right(canonicalize_right(&letters(w)?, &u)?));
        }
        Err(fail("expected `(u)~w`, `w~(u)` or `@generator`"))
    }

    /// The literal as a left-infinite word; generators take the left reading.
    pub fn into_left(self) -> Result<Left<char>> {
        match self {
            Literal::Left(l) => Ok(l),
            Literal::Generator(kind) => Ok(Left::generated(kind, ['a', 'b'])),
            Literal::Right(r) => Err(Error::Parse {
                literal: r.to_string(),
                reason: "a left-infinite word is required here".into(),
            }),
        }
    }

    pub fn into_right(self) -> Result<Right<char>> {
        match self {
            Literal::Right(r) => Ok(r),
            Literal::Generator(kind) => Ok(Right::generated(kind, ['a', 'b'])),
            Literal::Left(l) => Err(Error::Parse {
                literal: l.to_string(),
                reason: "a right-infinite word is required here".into(),
            }),
        }
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Literal::parse(s)
    }
}
