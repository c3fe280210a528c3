//! Exhaustive ground truth for the largest admissible norm.
//!
//! The admissible norm of a vector is the minimum over its `m` shifts, which
//! is constant on cosets of the all-ones line. Fixing the first coordinate
//! to zero therefore visits every coset exactly once, `m^(r−1)` in total.
//! Norms are evaluated with a local loop rather than through `modring` so
//! that this module stays an independent check.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{ModVec, Modulus, NormKind};

/// Default coset budget.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

const CHUNK: u128 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub max_norm: u64,
    pub witness: ModVec,
    pub enumerated: u128,
}

/// Number of cosets `m^(r−1)`, saturating.
pub fn coset_count(m: u64, r: u64) -> u128 {
    let mut n: u128 = 1;
    for _ in 1..r {
        n = n.saturating_mul(m as u128);
    }
    n
}

struct Best {
    norm: u64,
    witness: Vec<u64>,
}

impl Best {
    fn better(self, other: Best) -> Best {
        match self.norm.cmp(&other.norm) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal => {
                if other.witness < self.witness {
                    other
                } else {
                    self
                }
            }
        }
    }
}

#[inline]
fn coord_norm(c: u64, m: u64, kind: NormKind) -> u64 {
    match kind {
        NormKind::One => c,
        NormKind::Lee => c.min(m - c),
    }
}

/// Minimum over shifts and the first shift attaining it.
fn min_over_shifts(v: &[u64], m: u64, kind: NormKind) -> (u64, u64) {
    let mut best = (u64::MAX, 0);
    for x in 0..m {
        let n: u64 = v.iter().map(|&c| coord_norm((c + x) % m, m, kind)).sum();
        if n < best.0 {
            best = (n, x);
        }
    }
    best
}

fn scan_range(m: u64, r: usize, kind: NormKind, start: u128, end: u128) -> Best {
    // decode `start` into the free coordinates 2..r, least significant last
    let mut v = vec![0u64; r];
    let mut idx = start;
    for c in v[1..].iter_mut().rev() {
        *c = (idx % m as u128) as u64;
        idx /= m as u128;
    }
    let mut best = Best {
        norm: 0,
        witness: vec![0; r],
    };
    let mut first = true;
    let mut i = start;
    while i < end {
        let (n, x) = min_over_shifts(&v, m, kind);
        if first || n >= best.norm {
            let w: Vec<u64> = v.iter().map(|&c| (c + x) % m).collect();
            if first || n > best.norm || w < best.witness {
                best = Best {
                    norm: n,
                    witness: w,
                };
            }
            first = false;
        }
        // odometer step
        for c in v[1..].iter_mut().rev() {
            *c += 1;
            if *c < m {
                break;
            }
            *c = 0;
        }
        i += 1;
    }
    best
}

/// Largest admissible norm in `(Z/mZ)^r`, with the lexicographically
/// smallest canonically shifted witness.
pub fn brute_max_admissible(m: u64, r: u64, kind: NormKind, budget: u128) -> Result<OracleResult> {
    let modulus = Modulus::new(m)?;
    if r == 0 {
        return Err(Error::Precondition("oracle needs r >= 1".into()));
    }
    let total = coset_count(m, r);
    if total > budget {
        return Err(Error::BudgetExceeded {
            required: total,
            budget,
        });
    }
    let chunks = total.div_ceil(CHUNK);
    let best = (0..chunks as u64)
        .into_par_iter()
        .map(|c| {
            let start = c as u128 * CHUNK;
            let end = (start + CHUNK).min(total);
            scan_range(m, r as usize, kind, start, end)
        })
        .reduce_with(Best::better)
        .expect("at least one coset");
    Ok(OracleResult {
        max_norm: best.norm,
        witness: ModVec::new(modulus, best.witness),
        enumerated: total,
    })
}

/// Brute-force Lee covering radius of the repetition code.
pub fn brute_covering_radius(m: u64, r: u64, budget: u128) -> Result<u64> {
    Ok(brute_max_admissible(m, r, NormKind::Lee, budget)?.max_norm)
}
