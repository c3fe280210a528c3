//! Residues modulo m, vectors over Z/mZ and the two norms on them.
//!
//! Coordinates are always stored as least residues in `[0, m)`. The
//! least-residue norm sums those representatives; the Lee norm sums the
//! absolute least residues `min(x, m - x)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which norm to measure vectors with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormKind {
    /// Sum of least residues.
    One,
    /// Lee norm: sum of absolute least residues.
    Lee,
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::One => f.write_str("one"),
            NormKind::Lee => f.write_str("lee"),
        }
    }
}

/// Canonical representative of `x` in `[0, m)`.
#[inline]
pub fn least_residue(x: u64, m: Modulus) -> u64 {
    x % m.0
}

/// Canonical representative of a possibly negative integer.
#[inline]
pub fn least_residue_signed(x: i64, m: Modulus) -> u64 {
    x.rem_euclid(m.0 as i64) as u64
}

/// `min(x̄, m - x̄)`.
#[inline]
pub fn abs_least_residue(x: u64, m: Modulus) -> u64 {
    let x = x % m.0;
    x.min(m.0 - x)
}

/// A vector over Z/mZ that carries its modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModVec {
    modulus: Modulus,
    coords: Vec<u64>,
}

impl ModVec {
    /// Builds a vector, reducing every coordinate modulo `m`.
    pub fn new(modulus: Modulus, coords: impl IntoIterator<Item = u64>) -> Self {
        let coords = coords.into_iter().map(|c| c % modulus.0).collect();
        ModVec { modulus, coords }
    }

    /// Builds a vector from signed integers, reducing each modulo `m`.
    pub fn from_signed(modulus: Modulus, coords: impl IntoIterator<Item = i64>) -> Self {
        let coords = coords
            .into_iter()
            .map(|c| least_residue_signed(c, modulus))
            .collect();
        ModVec { modulus, coords }
    }

    pub fn zeros(modulus: Modulus, r: usize) -> Self {
        ModVec {
            modulus,
            coords: vec![0; r],
        }
    }

    /// The all-ones vector `e` of length `r`.
    pub fn ones(modulus: Modulus, r: usize) -> Self {
        ModVec::new(modulus, std::iter::repeat_n(1, r))
    }

    pub fn empty(modulus: Modulus) -> Self {
        ModVec {
            modulus,
            coords: Vec::new(),
        }
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn norm(&self, kind: NormKind) -> u64 {
        norm(self, kind)
    }

    /// `v + x·e`.
    pub fn shift(&self, x: u64) -> ModVec {
        shift(self, x)
    }

    /// Number of distinct coordinate values.
    pub fn distinct_count(&self) -> usize {
        let mut c = self.coords.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn zero_count(&self) -> usize {
        self.coords.iter().filter(|&&c| c == 0).count()
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ") mod {}", self.modulus)
    }
}

pub fn norm(v: &ModVec, kind: NormKind) -> u64 {
    let m = v.modulus;
    match kind {
        NormKind::One => v.coords.iter().sum(),
        NormKind::Lee => v.coords.iter().map(|&c| abs_least_residue(c, m)).sum(),
    }
}

pub fn shift(v: &ModVec, x: u64) -> ModVec {
    let m = v.modulus.0;
    let x = x % m;
    ModVec {
        modulus: v.modulus,
        coords: v.coords.iter().map(|&c| (c + x) % m).collect(),
    }
}

pub fn concat(u: &ModVec, v: &ModVec) -> Result<ModVec> {
    if u.modulus != v.modulus {
        return Err(Error::ModulusMismatch {
            left: u.modulus.0,
            right: v.modulus.0,
        });
    }
    let mut coords = Vec::with_capacity(u.dim() + v.dim());
    coords.extend_from_slice(&u.coords);
    coords.extend_from_slice(&v.coords);
    Ok(ModVec {
        modulus: u.modulus,
        coords,
    })
}

/// The doubling map Z/mZ → Z/2mZ applied coordinatewise.
pub fn double_embed(v: &ModVec) -> ModVec {
    ModVec {
        modulus: Modulus(2 * v.modulus.0),
        coords: v.coords.iter().map(|&c| 2 * c).collect(),
    }
}

/// Inverse of [`double_embed`] on even vectors over Z/2mZ.
pub fn halve(v: &ModVec) -> Result<ModVec> {
    if !v.modulus.is_even() {
        return Err(Error::Precondition(format!(
            "halve needs an even modulus, got {}",
            v.modulus
        )));
    }
    if let Some(index) = v.coords.iter().position(|&c| c % 2 != 0) {
        return Err(Error::NotEven { index });
    }
    Ok(ModVec {
        modulus: Modulus(v.modulus.0 / 2),
        coords: v.coords.iter().map(|&c| c / 2).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn md(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    fn mv(m: u64, c: &[u64]) -> ModVec {
        ModVec::new(md(m), c.iter().copied())
    }

    #[test]
    fn residues() {
        assert_eq!(least_residue(0, md(5)), 0);
        assert_eq!(least_residue(7, md(5)), 2);
        assert_eq!(least_residue(4, md(5)), 4);
        assert_eq!(abs_least_residue(3, md(5)), 2);
        assert_eq!(abs_least_residue(0, md(7)), 0);
        assert_eq!(abs_least_residue(2, md(4)), 2);
        assert_eq!(least_residue_signed(-1, md(3)), 2);
        assert!(Modulus::new(0).is_err());
    }

    #[test]
    fn norms() {
        assert_eq!(mv(5, &[3, 4]).norm(NormKind::One), 7);
        assert_eq!(mv(5, &[3, 4]).norm(NormKind::Lee), 3);
        assert_eq!(mv(9, &[0, 0, 0]).norm(NormKind::One), 0);
        assert_eq!(mv(9, &[0, 0, 0]).norm(NormKind::Lee), 0);
        assert_eq!(ModVec::empty(md(9)).norm(NormKind::Lee), 0);
        // m = 1 collapses everything to zero
        assert_eq!(mv(1, &[5, 7, 9]).norm(NormKind::One), 0);
    }

    #[test]
    fn shifts() {
        assert_eq!(shift(&mv(4, &[0, 2]), 2), mv(4, &[2, 0]));
        assert_eq!(shift(&mv(3, &[0, 1, 2]), 1), mv(3, &[1, 2, 0]));
        assert_eq!(shift(&mv(5, &[3, 3]), 0), mv(5, &[3, 3]));
    }

    #[test]
    fn concatenation() {
        assert_eq!(
            concat(&mv(4, &[0, 2]), &mv(4, &[1, 3])).unwrap(),
            mv(4, &[0, 2, 1, 3])
        );
        assert_eq!(
            concat(&mv(7, &[3]), &ModVec::empty(md(7))).unwrap(),
            mv(7, &[3])
        );
        let c = concat(&mv(4, &[0, 2]), &mv(4, &[0, 2])).unwrap();
        assert_eq!(c.norm(NormKind::Lee), 4);
        assert_eq!(
            concat(&mv(4, &[0]), &mv(5, &[0])),
            Err(Error::ModulusMismatch { left: 4, right: 5 })
        );
    }

    #[test]
    fn doubling_and_halving() {
        let v = mv(3, &[0, 1, 2]);
        let d = double_embed(&v);
        assert_eq!(d, mv(6, &[0, 2, 4]));
        assert_eq!(v.norm(NormKind::Lee), 2);
        assert_eq!(d.norm(NormKind::Lee), 4);
        assert_eq!(double_embed(&ModVec::empty(md(5))), ModVec::empty(md(10)));
        assert_eq!(halve(&mv(6, &[0, 2, 4])).unwrap(), v);
        assert_eq!(halve(&mv(6, &[0, 1])), Err(Error::NotEven { index: 1 }));
        let w = mv(4, &[3, 1]);
        assert_eq!(halve(&double_embed(&w)).unwrap(), w);
    }

    fn vec_strategy() -> impl Strategy<Value = ModVec> {
        (1u64..=20, 0usize..=12)
            .prop_flat_map(|(m, r)| prop::collection::vec(0..m, r).prop_map(move |c| mv(m, &c)))
    }

    proptest! {
        #[test]
        fn norm_one_shift_congruence(v in vec_strategy(), x in 0u64..40) {
            let m = v.modulus().get();
            let r = v.dim() as u64;
            let lhs = shift(&v, x).norm(NormKind::One) % m;
            let rhs = (v.norm(NormKind::One) + r * (x % m)) % m;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn concat_is_additive(u in vec_strategy(), extra in prop::collection::vec(0u64..1000, 0..8)) {
            let v = ModVec::new(u.modulus(), extra);
            let c = concat(&u, &v).unwrap();
            for k in [NormKind::One, NormKind::Lee] {
                prop_assert_eq!(c.norm(k), u.norm(k) + v.norm(k));
            }
        }

        #[test]
        fn doubling_scales_lee_norm(v in vec_strategy()) {
            let d = double_embed(&v);
            prop_assert_eq!(d.norm(NormKind::Lee), 2 * v.norm(NormKind::Lee));
            let h = halve(&d).unwrap();
            prop_assert_eq!(h.norm(NormKind::Lee), v.norm(NormKind::Lee));
            prop_assert_eq!(h, v);
        }
    }
}
