//! Small finite fields `F_{p^n}` as polynomials modulo a monic irreducible.
//!
//! Elements are coefficient vectors in the power basis `1, x, …, x^{n−1}`
//! (constant first). Each element also has a rank `Σ c_i p^i` in `[0, q)`,
//! which the sumset search uses to index dense bitmaps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the field size `q`.
pub const DEFAULT_FIELD_BUDGET: u64 = 2_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn require_prime(n: u64) -> Result<()> {
    if is_prime(n) {
        Ok(())
    } else {
        Err(Error::NotPrime(n))
    }
}

/// Multiplicative order of `a` modulo `n` (`gcd(a, n) = 1` assumed).
fn mult_order(a: u64, n: u64) -> u64 {
    let a = a % n;
    let mut x = a;
    let mut k = 1;
    while x != 1 % n {
        x = x * a % n;
        k += 1;
    }
    k
}

/// Whether `p` generates `(Z/rZ)^*`, for distinct primes `p` and `r`.
pub fn is_primitive_root(p: u64, r: u64) -> Result<bool> {
    require_prime(p)?;
    require_prime(r)?;
    if p == r {
        return Err(Error::Precondition(format!(
            "p and r must differ (both {p})"
        )));
    }
    Ok(mult_order(p, r) == r - 1)
}

fn checked_pow(p: u64, n: usize, budget: u64) -> Result<u64> {
    let mut q: u128 = 1;
    for _ in 0..n {
        q *= p as u128;
        if q > budget as u128 {
            // report the full size, saturating
            let full = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
            return Err(Error::BudgetExceeded {
                required: full,
                budget: budget as u128,
            });
        }
    }
    Ok(q as u64)
}

/// Remainder of `a` modulo the monic polynomial `b` over `Z/pZ`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * bc) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `rank`.
fn monic_from_rank(rank: u64, deg: usize, p: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(deg + 1);
    let mut x = rank;
    for _ in 0..deg {
        c.push(x % p);
        x /= p;
    }
    c.push(1);
    c
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `n/2`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let n = poly.len() - 1;
    if n == 0 || poly[n] != 1 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for rank in 0..count {
            let f = monic_from_rank(rank, d, p);
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `n` over `Z/pZ` with the smallest rank
/// `Σ_{i<n} c_i p^i`.
pub fn find_irreducible(p: u64, n: usize, budget: u64) -> Result<Vec<u64>> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::Precondition("extension degree must be >= 1".into()));
    }
    let q = checked_pow(p, n, budget)?;
    (0..q)
        .map(|rank| monic_from_rank(rank, n, p))
        .find(|f| is_irreducible(f, p))
        .ok_or_else(|| Error::Precondition(format!("no irreducible of degree {n} over F_{p}")))
}

/// An element of [`FqField`]: `n` coefficients in `[0, p)`, constant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FqElem {
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqField {
    p: u64,
    n: usize,
    modulus_poly: Vec<u64>,
    q: u64,
    /// `Some(r)` when the modulus is `1 + x + … + x^{r−1}`.
    cyclotomic_r: Option<u64>,
}

impl FqField {
    /// Field `Z/pZ[x] / (modulus)`; the modulus must be monic and irreducible.
    pub fn new(p: u64, modulus_poly: Vec<u64>, budget: u64) -> Result<Self> {
        require_prime(p)?;
        if modulus_poly.len() < 2 {
            return Err(Error::Precondition("modulus must have degree >= 1".into()));
        }
        let n = modulus_poly.len() - 1;
        let modulus_poly: Vec<u64> = modulus_poly.into_iter().map(|c| c % p).collect();
        if !is_irreducible(&modulus_poly, p) {
            return Err(Error::Precondition(format!(
                "{modulus_poly:?} is not a monic irreducible over F_{p}"
            )));
        }
        let q = checked_pow(p, n, budget)?;
        Ok(FqField {
            p,
            n,
            modulus_poly,
            q,
            cyclotomic_r: None,
        })
    }

    /// `F_{p^n}` built on [`find_irreducible`].
    pub fn with_degree(p: u64, n: usize, budget: u64) -> Result<Self> {
        let poly = find_irreducible(p, n, budget)?;
        FqField::new(p, poly, budget)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus_poly(&self) -> &[u64] {
        &self.modulus_poly
    }

    pub fn cyclotomic_order(&self) -> Option<u64> {
        self.cyclotomic_r
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FqElem {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> FqElem {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// The class of `x`; for degree 1 this is the constant `−a_0`.
    pub fn generator(&self) -> FqElem {
        self.element(&[0, 1])
    }

    /// Element from arbitrary-length coefficients, reduced modulo the field
    /// polynomial.
    pub fn element(&self, coeffs: &[u64]) -> FqElem {
        let c: Vec<u64> = coeffs.iter().map(|&c| c % self.p).collect();
        let mut c = if c.len() > self.n {
            poly_rem(&c, &self.modulus_poly, self.p)
        } else {
            c
        };
        c.resize(self.n, 0);
        FqElem { coeffs: c }
    }

    pub fn rank(&self, a: &FqElem) -> usize {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as usize
    }

    pub fn unrank(&self, mut idx: usize) -> FqElem {
        let p = self.p as usize;
        let coeffs = (0..self.n)
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c as u64
            })
            .collect();
        FqElem { coeffs }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q as usize).map(|i| self.unrank(i))
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        FqElem { coeffs }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElem { coeffs }
    }

    /// Rank of `a + b` computed digit by digit on ranks.
    pub fn add_ranks(&self, mut a: usize, mut b: usize) -> usize {
        let p = self.p as usize;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let n = self.n;
        let p = self.p;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut c = poly_rem(&prod, &self.modulus_poly, p);
        c.resize(n, 0);
        FqElem { coeffs: c }
    }

    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }
}

/// `F_{p^{r−1}} = F_p(ξ)` with `ξ` a root of `1 + x + … + x^{r−1}`.
pub fn cyclotomic_field(p: u64, r: u64, budget: u64) -> Result<FqField> {
    if r < 2 {
        return Err(Error::Precondition("cyclotomic_field needs r >= 2".into()));
    }
    if !is_primitive_root(p, r)? {
        return Err(Error::ReducibleCyclotomic { p, r });
    }
    let poly = vec![1; r as usize];
    let mut f = FqField::new(p, poly, budget).map_err(|e| match e {
        Error::Precondition(_) => Error::ReducibleCyclotomic { p, r },
        other => other,
    })?;
    f.cyclotomic_r = Some(r);
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = DEFAULT_FIELD_BUDGET;

    #[test]
    fn primes_and_primitive_roots() {
        assert!(is_prime(2) && is_prime(31) && !is_prime(1) && !is_prime(91));
        assert_eq!(is_primitive_root(3, 5), Ok(true));
        assert_eq!(is_primitive_root(7, 3), Ok(false));
        assert_eq!(is_primitive_root(2, 3), Ok(true));
        assert_eq!(is_primitive_root(2, 7), Ok(false));
        assert_eq!(is_primitive_root(4, 5), Err(Error::NotPrime(4)));
        assert_eq!(is_primitive_root(3, 9), Err(Error::NotPrime(9)));
        assert!(is_primitive_root(5, 5).is_err());
    }

    #[test]
    fn irreducible_search() {
        assert_eq!(find_irreducible(3, 2, B).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(2, 1, B).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(5, 2, B).unwrap(), vec![2, 0, 1]);
        assert_eq!(find_irreducible(2, 2, B).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(2, 3, B).unwrap(), vec![1, 1, 0, 1]);
        assert!(matches!(
            find_irreducible(2, 30, B),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(find_irreducible(4, 2, B).is_err());
    }

    #[test]
    fn irreducibility_checks() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)²
        assert!(!is_irreducible(&[1, 1, 1], 7)); // root 2
        assert!(is_irreducible(&[1, 1, 1, 1, 1], 3));
        // product of two irreducible quadratics over F_2 has no roots
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 1, 2], 3)); // not monic
    }

    #[test]
    fn cyclotomic_fields() {
        let f = cyclotomic_field(2, 3, B).unwrap();
        assert_eq!(f.q(), 4);
        assert_eq!(f.modulus_poly(), &[1, 1, 1]);
        let f = cyclotomic_field(3, 5, B).unwrap();
        assert_eq!(f.q(), 81);
        assert_eq!(f.cyclotomic_order(), Some(5));
        assert_eq!(
            cyclotomic_field(7, 3, B),
            Err(Error::ReducibleCyclotomic { p: 7, r: 3 })
        );
    }

    #[test]
    fn xi_is_a_root_of_unity() {
        for (p, r) in [(2, 3), (2, 5), (3, 5), (5, 3), (3, 7)] {
            let f = cyclotomic_field(p, r, B).unwrap();
            let xi = f.generator();
            assert_ne!(xi, f.one());
            assert_eq!(f.pow(&xi, r), f.one());
            let mut sum = f.zero();
            let mut power = f.one();
            for _ in 0..r {
                sum = f.add(&sum, &power);
                power = f.mul(&power, &xi);
            }
            assert!(f.is_zero(&sum));
        }
    }

    #[test]
    fn arithmetic_is_a_field() {
        let f = FqField::with_degree(3, 2, B).unwrap();
        // every nonzero element satisfies a^(q−1) = 1 and has an inverse
        for a in f.elements().skip(1) {
            assert_eq!(f.pow(&a, f.q() - 1), f.one());
            assert!(f.elements().any(|b| f.mul(&a, &b) == f.one()));
        }
    }

    #[test]
    fn ranks_round_trip() {
        let f = FqField::with_degree(5, 3, B).unwrap();
        for i in [0usize, 1, 7, 42, 124] {
            assert_eq!(f.rank(&f.unrank(i)), i);
        }
        for (a, b) in [(3usize, 9usize), (124, 124), (17, 0)] {
            let s = f.add(&f.unrank(a), &f.unrank(b));
            assert_eq!(f.add_ranks(a, b), f.rank(&s));
        }
    }
}
