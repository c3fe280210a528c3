//! Closed-form maxima of admissible norms.
//!
//! `g_bound` is the maximum least-residue norm of an admissible vector in
//! `(Z/mZ)^r`, `h_bound` the maximum Lee norm. Every floor is taken on an
//! exact rational rewritten over a common denominator, so nothing here
//! touches floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Branch of the piecewise definition of `h(m, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundCase {
    /// m and r even: `mr/4`.
    EvenEven,
    /// m even, r odd, r > m: `⌊mr/4 − 1/2⌋`.
    EvenOddRgt,
    /// m odd, r > m: `⌊mr/4 − r/(4m)⌋`.
    OddRgt,
    /// m odd, r even, r < m: `⌊mr/4 − 1/2⌋`.
    OddEvenRlt,
    /// r odd, r ≤ m: `⌊mr/4 − m/(4r)⌋`.
    OddRLe,
}

impl BoundCase {
    pub const ALL: [BoundCase; 5] = [
        BoundCase::EvenEven,
        BoundCase::EvenOddRgt,
        BoundCase::OddRgt,
        BoundCase::OddEvenRlt,
        BoundCase::OddRLe,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundCase::EvenEven => "EVEN_EVEN",
            BoundCase::EvenOddRgt => "EVEN_ODD_RGT",
            BoundCase::OddRgt => "ODD_RGT",
            BoundCase::OddEvenRlt => "ODD_EVEN_RLT",
            BoundCase::OddRLe => "ODD_R_LE",
        }
    }

    /// Which branch applies to `(m, r)`.
    pub fn classify(m: u64, r: u64) -> BoundCase {
        let m_even = m.is_multiple_of(2);
        let r_even = r.is_multiple_of(2);
        match (m_even, r_even) {
            (true, true) => BoundCase::EvenEven,
            (true, false) if r > m => BoundCase::EvenOddRgt,
            (false, _) if r > m => BoundCase::OddRgt,
            (false, true) => BoundCase::OddEvenRlt,
            _ => BoundCase::OddRLe,
        }
    }
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_positive(m: u64, r: u64) {
    assert!(m >= 1 && r >= 1, "bounds need m, r >= 1 (got m={m}, r={r})");
}

/// `(mr − m − r + gcd(m, r)) / 2`, always an integer.
///
/// # Panics
/// If `m` or `r` is zero.
pub fn g_bound(m: u64, r: u64) -> u64 {
    check_positive(m, r);
    (m * r + gcd(m, r) - m - r) / 2
}

/// `⌊mr/4 − 1/2⌋ = ⌊(mr − 2)/4⌋`; callers guarantee `mr ≥ 2`.
#[inline]
pub(crate) fn floor_quarter_minus_half(m: u64, r: u64) -> u64 {
    (m * r - 2) / 4
}

/// `⌊mr/4 − r/(4m)⌋ = ⌊r(m² − 1)/(4m)⌋`.
#[inline]
pub(crate) fn floor_minus_r_over_4m(m: u64, r: u64) -> u64 {
    r * (m * m - 1) / (4 * m)
}

/// `⌊mr/4 − m/(4r)⌋ = ⌊m(r² − 1)/(4r)⌋`.
#[inline]
pub(crate) fn floor_minus_m_over_4r(m: u64, r: u64) -> u64 {
    m * (r * r - 1) / (4 * r)
}

/// `h(m, r)` together with the branch that produced it.
///
/// # Panics
/// If `m` or `r` is zero.
pub fn h_bound_with_case(m: u64, r: u64) -> (u64, BoundCase) {
    check_positive(m, r);
    let case = BoundCase::classify(m, r);
    let value = match case {
        BoundCase::EvenEven => m * r / 4,
        BoundCase::EvenOddRgt | BoundCase::OddEvenRlt => floor_quarter_minus_half(m, r),
        BoundCase::OddRgt => floor_minus_r_over_4m(m, r),
        BoundCase::OddRLe => floor_minus_m_over_4r(m, r),
    };
    (value, case)
}

pub fn h_bound(m: u64, r: u64) -> u64 {
    h_bound_with_case(m, r).0
}

/// Band width `C = mr/2 − 2h(m, r)` for m even, r odd, r ≤ 2m.
pub fn band_c(m: u64, r: u64) -> Result<u64> {
    if m == 0 || !m.is_multiple_of(2) || r.is_multiple_of(2) || r > 2 * m {
        return Err(Error::Precondition(format!(
            "band_c needs m even, r odd, r <= 2m (got m={m}, r={r})"
        )));
    }
    Ok(m * r / 2 - 2 * h_bound(m, r))
}

/// Lee covering radius of the repetition code `(Z/mZ)·e` of length `r`.
pub fn covering_radius(m: u64, r: u64) -> u64 {
    match m {
        1 => 0,
        2 => g_bound(m, r),
        _ => h_bound(m, r),
    }
}
