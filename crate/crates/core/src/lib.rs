//! Overlap gaps between left-infinite and right-infinite words.
//!
//! For equal-length words `u` and `v`, the left overlap gap `log(u, v)` is the
//! least `n` such that `ux = x'v` for some words `x`, `x'` of length `n`; the
//! right overlap gap `rog(u, v)` is the least `n` with `xu = vx'`; and the
//! overlap gap is `og = min(log, rog)`. Given a left-infinite word `λ` and a
//! right-infinite word `ρ`, the gap functions evaluate these on the length-`n`
//! suffix of `λ` and prefix of `ρ`.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: finite-word primitives (borders, periods, primitive roots,
//!   conjugacy).
//! * [`infinite`]: finitely represented infinite words, canonical forms,
//!   aperiodic generators and the word-literal grammar.
//! * [`overlap`]: the gap functions on finite words, with a naive oracle and a
//!   linear-time kernel.
//! * [`sequences`]: gap sequences, the closed form of the right overlap gap for
//!   conjugate-period pairs, exact gap sets and finiteness decisions.
//! * [`verify`]: property suites that check the structural laws on enumerated
//!   and random instances.
//! * [`bench`]: naive-versus-linear kernel timing.
//!
//! Everything is generic over the letter type `S`; the aliases below fix it to
//! `char`, which is what the word-literal grammar produces.

pub mod bench;
pub mod error;
pub mod infinite;
pub mod overlap;
pub mod sequences;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use infinite::{
    canonicalize_left, canonicalize_right, generator, period_sets_equal, Direction, GeneratorKind,
    InfiniteWord, Left, Literal, Right,
};
pub use overlap::{gap_record_linear, gap_record_naive, log_gap, og_gap, rog_gap, GapRecord};
pub use sequences::{
    closed_form_params, closed_form_rog, decide_og_finite, decide_og_finite_one_sided,
    exact_gap_sets, gap_sequence, one_sided_gap_sequence, ClosedForm, ExtensionSide,
    FinitenessVerdict, GapSequence, GapSets, LogSet, Outcome, Witness,
};
pub use words::{
    borders, is_conjugate, is_p_periodic, longest_suffix_prefix_match, primitive_root, Alphabet,
    Conjugacy, Symbol, Word,
};

/// A finite word over single-character letters.
pub type FiniteWord = Word<char>;
/// A left-infinite word over single-character letters.
pub type LeftInfiniteWord = Left<char>;
/// A right-infinite word over single-character letters.
pub type RightInfiniteWord = Right<char>;
/// Closed-form parameters for a pair of character words.
pub type ClosedFormParams = ClosedForm<char>;
