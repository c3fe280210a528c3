//! Explicit admissible vectors of maximal norm.
//!
//! For the least-residue norm a single closed-form multiset does the job.
//! For the Lee norm the construction splits by the parities of `m` and `r`:
//!
//! * `r` even: concatenated optimal pairs;
//! * `r` odd, `m` even, `r < 2m`: a balanced vector read back from a plan of
//!   differences between its candidate extrema;
//! * `r` odd, `m` odd, `r ≤ m`: an even balanced vector over `Z/2mZ`, halved;
//! * `m < r < 2m`, both odd: an even-dimension solution plus one full cycle;
//! * `r ≥ 2m`: a solution for `m ≤ R < 2m` padded with full cycles.
//!
//! Every public constructor re-checks admissibility and the exact target
//! norm before returning, so a transcription error fails loudly.

use serde::{Deserialize, Serialize};

use crate::admissible::{is_admissible, is_balanced, m_sequence};
use crate::bounds::{band_c, g_bound, h_bound};
use crate::error::{Error, Result};
use crate::modring::{concat, halve, ModVec, Modulus, NormKind};

/// Signed steps `d_i = m_{i+1} − m_i` between the candidate extrema of a
/// balanced vector, together with the band width they must stay inside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDiffPlan {
    pub modulus: u64,
    pub diffs: Vec<i64>,
    pub band: u64,
}

impl MDiffPlan {
    /// Checks the plan invariants: even modulus, odd length, alternating
    /// signs with a positive first step, `Σ|d_i| = m/2`, and partial sums
    /// inside `[0, band]` ending exactly at `band`.
    pub fn validate(&self) -> Result<()> {
        let m = self.modulus;
        let r = self.diffs.len();
        if m == 0 || !m.is_multiple_of(2) || r.is_multiple_of(2) {
            return Err(Error::InconsistentPlan(format!(
                "need even modulus and odd length (m={m}, r={r})"
            )));
        }
        if self.diffs[0] < 1 {
            return Err(Error::InconsistentPlan(
                "first step must be positive".into(),
            ));
        }
        for (i, &d) in self.diffs.iter().enumerate() {
            let wrong_sign = if i % 2 == 0 { d < 0 } else { d > 0 };
            if wrong_sign {
                return Err(Error::InconsistentPlan(format!(
                    "step {i} has the wrong sign ({d})"
                )));
            }
        }
        let total: i64 = self.diffs.iter().map(|d| d.abs()).sum();
        if total != (m / 2) as i64 {
            return Err(Error::InconsistentPlan(format!(
                "step sizes sum to {total}, expected m/2 = {}",
                m / 2
            )));
        }
        let band = self.band as i64;
        let mut level = 0i64;
        for &d in &self.diffs {
            level += d;
            if level < 0 || level > band {
                return Err(Error::InconsistentPlan(format!(
                    "partial sum {level} leaves the band [0, {band}]"
                )));
            }
        }
        if level != band {
            return Err(Error::InconsistentPlan(format!(
                "steps end at {level}, not at the band width {band}"
            )));
        }
        Ok(())
    }

    /// Lee norm of the vector this plan produces: `(mr/2 − band)/2`.
    pub fn target_norm(&self) -> u64 {
        (self.modulus * self.diffs.len() as u64 / 2 - self.band) / 2
    }
}

fn md(m: u64) -> Modulus {
    Modulus::new(m).expect("positive modulus")
}

fn certify(v: ModVec, kind: NormKind, target: u64, what: &str) -> Result<ModVec> {
    let n = v.norm(kind);
    if n != target || !is_admissible(&v, kind) {
        return Err(Error::InconsistentPlan(format!(
            "{what} produced {v} with norm {n}, expected an admissible vector of norm {target}"
        )));
    }
    Ok(v)
}

/// Admissible vector of least-residue norm `g(m, r)`: `t_k` coordinates
/// equal to `m − k` for each `k = 1, …, m − 1`, zeros elsewhere, emitted in
/// descending order.
pub fn construct_max_norm1(m: u64, r: u64) -> ModVec {
    assert!(m >= 1 && r >= 1, "construct_max_norm1 needs m, r >= 1");
    let mut coords = Vec::with_capacity(r as usize);
    for k in 1..m {
        // t_k = ( (r(k−1) mod m) + r − (rk mod m) ) / m
        let t = ((r * (k - 1)) % m + r - (r * k) % m) / m;
        coords.extend(std::iter::repeat_n(m - k, t as usize));
    }
    coords.resize(r as usize, 0);
    let v = ModVec::new(md(m), coords);
    debug_assert_eq!(v.norm(NormKind::One), g_bound(m, r));
    v
}

/// The pair `(y, y + m/2)` for even `m`, `(y, y + (m−1)/2)` for odd `m`.
pub fn optimal_pair(m: u64, y: u64) -> ModVec {
    assert!(m >= 2, "optimal pairs need m >= 2");
    let y = y % m;
    ModVec::new(md(m), [y, y + m / 2])
}

/// Admissible vector of Lee norm `h(m, r)` for even `r`.
pub fn construct_even_dim(m: u64, r: u64) -> Result<ModVec> {
    if r == 0 || !r.is_multiple_of(2) || m == 0 {
        return Err(Error::Precondition(format!(
            "construct_even_dim needs even r >= 2 (got m={m}, r={r})"
        )));
    }
    let v = even_dim_unchecked(m, r);
    certify(v, NormKind::Lee, h_bound(m, r), "construct_even_dim")
}

fn even_dim_unchecked(m: u64, r: u64) -> ModVec {
    let modulus = md(m);
    if m == 1 {
        return ModVec::zeros(modulus, r as usize);
    }
    if m.is_multiple_of(2) {
        return ModVec::new(modulus, (0..r).map(|i| if i % 2 == 0 { 0 } else { m / 2 }));
    }
    // pairs (y_i, y_i + (m−1)/2) with y_i = −(i−1)(m−1)/2 spread the high
    // regions of the pair norm sequences evenly around the cycle
    let step = (m - 1) / 2;
    let mut coords = Vec::with_capacity(r as usize);
    for i in 0..r / 2 {
        let y = (m - (i * step) % m) % m;
        coords.push(y);
        coords.push((y + step) % m);
    }
    ModVec::new(modulus, coords)
}

/// Rebuilds the balanced vector with first coordinate 0 whose `m_i`
/// differences are `plan.diffs`.
pub fn vector_from_m_diffs(plan: &MDiffPlan) -> Result<ModVec> {
    plan.validate()?;
    let m = plan.modulus;
    let half = (m / 2) as i64;
    let r = plan.diffs.len();
    let d = &plan.diffs;

    // 1-based coordinates, filled from the back
    let mut v = vec![0i64; r + 1];
    v[r] = half - d[0];
    for i in 1..r {
        v[r - i] = if i % 2 == 1 {
            d[i] + half + v[r - i + 1]
        } else {
            v[r - i + 1] - half - d[i]
        };
    }
    if v[1] != 0 {
        return Err(Error::InconsistentPlan(format!(
            "first coordinate is {}, not 0",
            v[1]
        )));
    }
    if v[1..].iter().any(|&c| c < 0 || c >= m as i64) {
        return Err(Error::InconsistentPlan("coordinates leave [0, m)".into()));
    }
    let out = ModVec::new(md(m), v[1..].iter().map(|&c| c as u64));
    if !is_balanced(&out)? {
        return Err(Error::InconsistentPlan(format!("{out} is not balanced")));
    }
    let ms = m_sequence(&out)?;
    let reproduced = ms
        .windows(2)
        .zip(d)
        .all(|(w, &di)| w[1] as i64 - w[0] as i64 == di);
    if !reproduced {
        return Err(Error::InconsistentPlan(format!(
            "m-sequence {ms:?} of {out} does not reproduce {d:?}"
        )));
    }
    Ok(out)
}

fn require_odd_r(m: u64, r: u64, limit: u64, what: &str) -> Result<(u64, u64)> {
    if m == 0 || !m.is_multiple_of(2) || r.is_multiple_of(2) || r > limit {
        return Err(Error::Precondition(format!(
            "{what} needs m even, r odd, r <= {limit} (got m={m}, r={r})"
        )));
    }
    let half = m / 2;
    Ok((half / r, half % r))
}

fn alternating(i: usize, size: u64) -> i64 {
    if i.is_multiple_of(2) {
        size as i64
    } else {
        -(size as i64)
    }
}

/// Step plan for `m` even, `r` odd, `r ≤ 2m`, whose vector has norm `h(m, r)`.
pub fn plan_even_modulus(m: u64, r: u64) -> Result<MDiffPlan> {
    let (q, rem) = require_odd_r(m, r, 2 * m, "plan_even_modulus")?;
    let r_us = r as usize;
    let rem_us = rem as usize;
    let diffs = (0..r_us)
        .map(|i| {
            let size = if rem == 0 {
                q
            } else if i == 0 || i > r_us - rem_us {
                q + 1
            } else {
                q
            };
            alternating(i, size)
        })
        .collect();
    let plan = MDiffPlan {
        modulus: m,
        diffs,
        band: band_c(m, r)?,
    };
    plan.validate()?;
    Ok(plan)
}

/// Step plan with every step odd, for `m ≡ 2 (mod 4)`, `r` odd, `r ≤ m/2`;
/// the resulting vector is even and has norm `2h(m/2, r)`.
pub fn plan_even_vector(m: u64, r: u64) -> Result<MDiffPlan> {
    if m % 4 != 2 {
        return Err(Error::Precondition(format!(
            "plan_even_vector needs m ≡ 2 (mod 4) (got m={m})"
        )));
    }
    let (q, rem) = require_odd_r(m, r, m / 2, "plan_even_vector")?;
    let r_us = r as usize;
    let rem_us = rem as usize;
    let mut diffs = Vec::with_capacity(r_us);
    let band;
    if rem == 0 {
        // q is odd here since m/2 = qr is odd
        band = q;
        diffs.extend((0..r_us).map(|i| alternating(i, q)));
    } else if rem % 2 == 1 && rem % 4 == r % 4 {
        band = q + 1;
        let split = (r_us + rem_us) / 2;
        diffs.extend((0..r_us).map(|i| alternating(i, if i < split { q + 1 } else { q - 1 })));
    } else if rem % 2 == 1 {
        // (r + R)/2 is even here; the (Q+1) block covers i < (r+R)/2 − 2
        band = q + 3;
        let split = (r_us + rem_us) / 2 - 2;
        diffs.extend((0..r_us - 1).map(|i| alternating(i, if i < split { q + 1 } else { q - 1 })));
        diffs.push((q + 3) as i64);
    } else if rem % 4 == 2 {
        band = q + 2;
        let split = r_us - rem_us / 2;
        diffs.extend((0..r_us).map(|i| alternating(i, if i < split { q } else { q + 2 })));
    } else {
        band = q + 4;
        let split = r_us - 1 - (rem_us - 4) / 2;
        diffs.extend((0..r_us - 1).map(|i| alternating(i, if i < split { q } else { q + 2 })));
        diffs.push((q + 4) as i64);
    }
    let plan = MDiffPlan {
        modulus: m,
        diffs,
        band,
    };
    plan.validate()?;
    if plan.diffs.iter().any(|d| d % 2 == 0) {
        return Err(Error::InconsistentPlan(
            "even-vector plans need odd steps".into(),
        ));
    }
    Ok(plan)
}

/// Admissible vector of Lee norm `h(m, r)` for odd `m`, odd `r ≤ m`.
pub fn construct_odd_modulus(m: u64, r: u64) -> Result<ModVec> {
    if m.is_multiple_of(2) || r.is_multiple_of(2) || r > m {
        return Err(Error::Precondition(format!(
            "construct_odd_modulus needs m odd, r odd, r <= m (got m={m}, r={r})"
        )));
    }
    let doubled = even_vector_for_odd_modulus(m, r)?;
    let v = halve(&doubled)?;
    certify(v, NormKind::Lee, h_bound(m, r), "construct_odd_modulus")
}

/// The even admissible vector over `Z/2mZ` that is halved by
/// [`construct_odd_modulus`].
pub fn even_vector_for_odd_modulus(m: u64, r: u64) -> Result<ModVec> {
    let plan = plan_even_vector(2 * m, r)?;
    let v = vector_from_m_diffs(&plan)?;
    certify(
        v,
        NormKind::Lee,
        2 * h_bound(m, r),
        "even_vector_for_odd_modulus",
    )
}

/// `(0, 1, …, m − 1)`.
pub fn full_cycle(m: u64) -> ModVec {
    ModVec::new(md(m), 0..m)
}

/// Admissible vector of Lee norm exactly `h(m, r)`.
pub fn construct_max_lee(m: u64, r: u64) -> ModVec {
    assert!(m >= 1 && r >= 1, "construct_max_lee needs m, r >= 1");
    let v = max_lee_unchecked(m, r)
        .unwrap_or_else(|e| panic!("construction failed for m={m}, r={r}: {e}"));
    certify(v, NormKind::Lee, h_bound(m, r), "construct_max_lee").unwrap_or_else(|e| panic!("{e}"))
}

fn max_lee_unchecked(m: u64, r: u64) -> Result<ModVec> {
    if m == 1 {
        return Ok(ModVec::zeros(md(1), r as usize));
    }
    if r >= 2 * m {
        // r = Qm + R with m ≤ R < 2m
        let q = r / m - 1;
        let rest = r - q * m;
        let mut v = max_lee_unchecked(m, rest)?;
        let cycle = full_cycle(m);
        for _ in 0..q {
            v = concat(&v, &cycle)?;
        }
        return Ok(v);
    }
    if r.is_multiple_of(2) {
        return Ok(even_dim_unchecked(m, r));
    }
    if m.is_multiple_of(2) {
        return vector_from_m_diffs(&plan_even_modulus(m, r)?);
    }
    if r <= m {
        return halve(&vector_from_m_diffs(&plan_even_vector(2 * m, r)?)?);
    }
    concat(&even_dim_unchecked(m, r - m), &full_cycle(m))
}
