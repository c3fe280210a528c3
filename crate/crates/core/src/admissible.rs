//! Admissibility, norm sequences and the structure of balanced vectors.
//!
//! A vector is admissible when no shift `v + x·e` has a smaller norm, i.e.
//! it is a minimal representative of its coset modulo the all-ones line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{abs_least_residue, ModVec, Modulus, NormKind};

/// The cyclic sequence `N_x = ‖v + x·e‖` for `x = 0, …, m − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormSeq {
    modulus: Modulus,
    values: Vec<u64>,
}

impl NormSeq {
    /// Wraps an arbitrary cyclic sequence of period `values.len()`.
    pub fn from_values(values: Vec<u64>) -> Result<Self> {
        let modulus = Modulus::new(values.len() as u64)?;
        Ok(NormSeq { modulus, values })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Entry at `x`, read cyclically.
    pub fn at(&self, x: i64) -> u64 {
        let n = self.values.len() as i64;
        self.values[x.rem_euclid(n) as usize]
    }

    pub fn min(&self) -> u64 {
        *self
            .values
            .iter()
            .min()
            .expect("norm sequences are nonempty")
    }

    pub fn max(&self) -> u64 {
        *self
            .values
            .iter()
            .max()
            .expect("norm sequences are nonempty")
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of `x` with `N_{x+1} = N_x`, cyclically.
    pub fn flat_steps(&self) -> usize {
        let n = self.values.len();
        (0..n)
            .filter(|&x| self.values[x] == self.values[(x + 1) % n])
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtremumKind {
    Max,
    Min,
}

/// A maximum or minimum of a cyclic sequence together with its plateau
/// length `c`: the value holds on `x, …, x + c − 1` and strictly changes
/// on both sides in the same direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Extremum {
    pub index: u64,
    pub kind: ExtremumKind,
    pub plateau: u64,
}

pub fn norm_sequence(v: &ModVec, kind: NormKind) -> NormSeq {
    let m = v.modulus();
    let values = (0..m.get()).map(|x| shifted_norm(v, x, kind)).collect();
    NormSeq { modulus: m, values }
}

/// `‖v + x·e‖` without materialising the shifted vector.
pub(crate) fn shifted_norm(v: &ModVec, x: u64, kind: NormKind) -> u64 {
    let m = v.modulus();
    let mm = m.get();
    match kind {
        NormKind::One => v.coords().iter().map(|&c| (c + x) % mm).sum(),
        NormKind::Lee => v
            .coords()
            .iter()
            .map(|&c| abs_least_residue(c + x % mm, m))
            .sum(),
    }
}

pub fn is_admissible(v: &ModVec, kind: NormKind) -> bool {
    let base = v.norm(kind);
    (1..v.modulus().get()).all(|x| shifted_norm(v, x, kind) >= base)
}

/// Smallest shift minimising the norm, and the shifted (admissible) vector.
pub fn canonical_shift(v: &ModVec, kind: NormKind) -> (u64, ModVec) {
    let seq = norm_sequence(v, kind);
    let min = seq.min();
    let x = seq
        .values()
        .iter()
        .position(|&n| n == min)
        .expect("minimum is attained") as u64;
    (x, v.shift(x))
}

/// All maxima and minima of a cyclic sequence in increasing index order.
///
/// A constant sequence has none.
pub fn extremal_values(s: &NormSeq) -> Vec<Extremum> {
    let n = s.values.len();
    if s.is_constant() {
        return Vec::new();
    }
    let a = &s.values;
    let mut out = Vec::new();
    for x in 0..n {
        let prev = a[(x + n - 1) % n];
        let here = a[x];
        if prev == here {
            continue;
        }
        // walk the plateau; a nonconstant sequence leaves it within n − 1 steps
        let mut c = 1;
        while a[(x + c) % n] == here {
            c += 1;
        }
        let next = a[(x + c) % n];
        let kind = if prev < here && next < here {
            ExtremumKind::Max
        } else if prev > here && next > here {
            ExtremumKind::Min
        } else {
            continue;
        };
        out.push(Extremum {
            index: x as u64,
            kind,
            plateau: c as u64,
        });
    }
    out
}

fn require_even_odd(v: &ModVec, what: &str) -> Result<()> {
    let m = v.modulus().get();
    if !m.is_multiple_of(2) || v.dim().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "{what} needs m even and r odd (got m={m}, r={})",
            v.dim()
        )));
    }
    Ok(())
}

/// Offsets `w_i`: `v̄_i` at odd (1-based) positions, `v̄_i − m/2` at even ones.
pub(crate) fn balance_offsets(v: &ModVec) -> Vec<i64> {
    let half = (v.modulus().get() / 2) as i64;
    v.coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if i % 2 == 0 {
                c as i64
            } else {
                c as i64 - half
            }
        })
        .collect()
}

/// Whether `0 = v̄₁ ≤ v̄₂ − m/2 ≤ v̄₃ ≤ … ≤ v̄_r < m/2`.
pub fn is_balanced(v: &ModVec) -> Result<bool> {
    require_even_odd(v, "is_balanced")?;
    let half = (v.modulus().get() / 2) as i64;
    let w = balance_offsets(v);
    Ok(w[0] == 0 && w.windows(2).all(|p| p[0] <= p[1]) && *w.last().unwrap() < half)
}

/// `m_0, …, m_r` for a balanced vector, evaluated as norms of shifts.
pub fn m_sequence(v: &ModVec) -> Result<Vec<u64>> {
    if !is_balanced(v)? {
        return Err(Error::Precondition(format!("{v} is not balanced")));
    }
    let m = v.modulus().get();
    let r = v.dim();
    let c = v.coords();
    let mut out = Vec::with_capacity(r + 1);
    out.push(v.norm(NormKind::Lee));
    for i in 1..=r {
        let vi = c[r - i];
        let x = if i % 2 == 1 { m / 2 + m - vi } else { m - vi };
        out.push(shifted_norm(v, x % m, NormKind::Lee));
    }
    Ok(out)
}

/// Differences `m_{i+1} − m_i` read directly off the coordinates of a
/// balanced vector (closed form, no norm evaluation).
pub fn predicted_m_diffs(v: &ModVec) -> Result<Vec<i64>> {
    if !is_balanced(v)? {
        return Err(Error::Precondition(format!("{v} is not balanced")));
    }
    let half = (v.modulus().get() / 2) as i64;
    let r = v.dim();
    // 1-based coordinate access
    let vb = |j: usize| v.coords()[j - 1] as i64;
    let mut d = Vec::with_capacity(r);
    d.push(half - vb(r));
    for i in 1..r {
        let di = if i % 2 == 1 {
            (vb(r - i) - half) - vb(r - i + 1)
        } else {
            (vb(r - i + 1) - half) - vb(r - i)
        };
        d.push(di);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(m: u64, c: &[u64]) -> ModVec {
        ModVec::new(Modulus::new(m).unwrap(), c.iter().copied())
    }

    #[test]
    fn sequences() {
        assert_eq!(
            norm_sequence(&mv(4, &[0, 2]), NormKind::Lee).values(),
            &[2, 2, 2, 2]
        );
        assert_eq!(
            norm_sequence(&mv(3, &[0, 1, 2]), NormKind::Lee).values(),
            &[2, 2, 2]
        );
        assert_eq!(
            norm_sequence(&mv(2, &[0, 0]), NormKind::Lee).values(),
            &[0, 2]
        );
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&mv(3, &[2, 1, 0]), NormKind::One));
        assert!(!is_admissible(&mv(3, &[1, 1]), NormKind::Lee));
        for m in 1..6 {
            let z = ModVec::zeros(Modulus::new(m).unwrap(), 4);
            assert!(is_admissible(&z, NormKind::One));
            assert!(is_admissible(&z, NormKind::Lee));
        }
    }

    #[test]
    fn canonical_shifts() {
        assert_eq!(
            canonical_shift(&mv(3, &[1, 1]), NormKind::Lee),
            (2, mv(3, &[0, 0]))
        );
        assert_eq!(
            canonical_shift(&mv(4, &[3, 3]), NormKind::Lee),
            (1, mv(4, &[0, 0]))
        );
        let v = mv(5, &[0, 2]);
        assert_eq!(canonical_shift(&v, NormKind::Lee), (0, v.clone()));
        assert_eq!(canonical_shift(&v, NormKind::One), (0, v));
    }

    #[test]
    fn extrema() {
        let s = norm_sequence(&mv(4, &[0, 1, 3]), NormKind::Lee);
        assert_eq!(s.values(), &[2, 3, 4, 3]);
        assert_eq!(
            extremal_values(&s),
            vec![
                Extremum {
                    index: 0,
                    kind: ExtremumKind::Min,
                    plateau: 1
                },
                Extremum {
                    index: 2,
                    kind: ExtremumKind::Max,
                    plateau: 1
                },
            ]
        );

        assert!(extremal_values(&NormSeq::from_values(vec![5, 5, 5]).unwrap()).is_empty());
        assert!(extremal_values(&NormSeq::from_values(vec![0]).unwrap()).is_empty());

        let s = norm_sequence(&mv(4, &[0, 1]), NormKind::Lee);
        assert_eq!(s.values(), &[1, 3, 3, 1]);
        assert_eq!(
            extremal_values(&s),
            vec![
                Extremum {
                    index: 1,
                    kind: ExtremumKind::Max,
                    plateau: 2
                },
                Extremum {
                    index: 3,
                    kind: ExtremumKind::Min,
                    plateau: 2
                },
            ]
        );
    }

    #[test]
    fn extrema_alternate() {
        let s = NormSeq::from_values(vec![1, 4, 4, 2, 2, 6, 0, 3]).unwrap();
        let e = extremal_values(&s);
        assert_eq!(e.len() % 2, 0);
        for w in e.windows(2) {
            assert_ne!(w[0].kind, w[1].kind);
        }
    }

    #[test]
    fn balance() {
        assert_eq!(is_balanced(&mv(4, &[0, 2, 1])), Ok(true));
        assert_eq!(is_balanced(&mv(4, &[0, 2, 0])), Ok(true));
        assert_eq!(is_balanced(&mv(4, &[1, 2, 1])), Ok(false));
        assert_eq!(is_balanced(&mv(4, &[0, 1, 1])), Ok(false));
        assert_eq!(is_balanced(&mv(4, &[0, 2, 2])), Ok(false));
        assert_eq!(is_balanced(&mv(2, &[0])), Ok(true));
        assert!(is_balanced(&mv(5, &[0, 2, 1])).is_err());
        assert!(is_balanced(&mv(4, &[0, 2])).is_err());
    }

    #[test]
    fn m_sequence_examples() {
        let v = mv(4, &[0, 2, 1]);
        let ms = m_sequence(&v).unwrap();
        assert_eq!(ms, vec![3, 4, 3, 3]);
        assert_eq!(predicted_m_diffs(&v).unwrap(), vec![1, -1, 0]);
        let total: i64 = predicted_m_diffs(&v).unwrap().iter().map(|d| d.abs()).sum();
        assert_eq!(total, 2);

        // (0, m/2, 0, m/2, 0): one step of m/2, then flat
        let v = mv(6, &[0, 3, 0, 3, 0]);
        let ms = m_sequence(&v).unwrap();
        assert_eq!(ms, vec![6, 9, 9, 9, 9, 9]);
        let steps: u64 = ms.windows(2).map(|w| w[0].abs_diff(w[1])).sum();
        assert_eq!(steps, 3);

        assert!(m_sequence(&mv(4, &[1, 2, 1])).is_err());
    }
}
