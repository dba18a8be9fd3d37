//! Arithmetic in the prime field GF(p).

use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The prime field GF(p). Elements are represented by their residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

/// Largest supported modulus; keeps every product inside `u64`.
pub const MAX_PRIME: u32 = 1 << 15;

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> Result<u32, LinalgError> {
        fp_inv(a, self.p)
    }

    /// Elements `0..p` in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// Number of nonzero vectors up to scalars in GF(p)^n, i.e. `(p^n - 1)/(p - 1)`.
    pub fn projective_count(self, n: usize) -> u64 {
        let q = self.p as u64;
        (q.pow(n as u32) - 1) / (q - 1)
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = LinalgError;
    fn try_from(p: u32) -> Result<Self, LinalgError> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative inverse of `a` modulo the prime `p`, by the extended Euclidean algorithm.
pub fn fp_inv(a: u32, p: u32) -> Result<u32, LinalgError> {
    let a = a % p;
    if a == 0 {
        return Err(LinalgError::DivisionByZero);
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Ok(t0.rem_euclid(p as i64) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_match_examples() {
        assert_eq!(fp_inv(1, 5).unwrap(), 1);
        assert_eq!(fp_inv(2, 5).unwrap(), 3);
        assert!(matches!(fp_inv(0, 7), Err(LinalgError::DivisionByZero)));
    }

    #[test]
    fn every_nonzero_residue_inverts() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            for a in 1..p {
                let b = fp_inv(a, p).unwrap();
                assert_eq!((a * b) % p, 1);
            }
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(3).is_ok());
    }
}
