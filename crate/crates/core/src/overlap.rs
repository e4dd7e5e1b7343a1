//! Left, right and two-sided overlap gaps between equal-length words.
//!
//! `log(u, v) = L - k` where `k` is the longest suffix of `u` that is a
//! prefix of `v`; `rog(u, v)` is the same with the roles of `u` and `v`
//! swapped. The naive kernel scans every candidate overlap; the linear kernel
//! reads the answer off a border array of `v·#·u` (resp. `u·#·v`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::suffix_prefix_overlap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GapRecord {
    pub n: usize,
    pub log: usize,
    pub rog: usize,
    pub og: usize,
}

impl GapRecord {
    pub fn new(n: usize, log: usize, rog: usize) -> Self {
        Self {
            n,
            log,
            rog,
            og: log.min(rog),
        }
    }
}

fn check_lengths<S>(u: &[S], v: &[S]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.len())
}

pub fn log_gap<S: PartialEq>(u: &[S], v: &[S]) -> Result<usize> {
    let len = check_lengths(u, v)?;
    Ok(len - suffix_prefix_overlap(u, v))
}

pub fn rog_gap<S: PartialEq>(u: &[S], v: &[S]) -> Result<usize> {
    let len = check_lengths(u, v)?;
    Ok(len - suffix_prefix_overlap(v, u))
}

pub fn og_gap<S: PartialEq>(u: &[S], v: &[S]) -> Result<usize> {
    Ok(log_gap(u, v)?.min(rog_gap(u, v)?))
}

// Longest k with u[L-k..] == v[..k], trying every k from L downwards.
fn naive_overlap<S: PartialEq>(u: &[S], v: &[S]) -> usize {
    let len = u.len();
    (0..=len)
        .rev()
        .find(|&k| u[len - k..] == v[..k])
        .unwrap_or(0)
}

/// Quadratic-time reference kernel.
pub fn gap_record_naive<S: PartialEq>(u: &[S], v: &[S]) -> Result<GapRecord> {
    let len = check_lengths(u, v)?;
    Ok(GapRecord::new(
        len,
        len - naive_overlap(u, v),
        len - naive_overlap(v, u),
    ))
}

/// Linear-time kernel.
pub fn gap_record_linear<S: PartialEq>(u: &[S], v: &[S]) -> Result<GapRecord> {
    let len = check_lengths(u, v)?;
    Ok(GapRecord::new(
        len,
        len - suffix_prefix_overlap(u, v),
        len - suffix_prefix_overlap(v, u),
    ))
}
