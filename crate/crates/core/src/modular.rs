//! Residues in the 1-based convention, where `n mod n = 0 mod n = n`.
//!
//! Every modular reduction in the crate goes through [`reduce`], so that
//! index formulas can be transcribed with positions in `[1..n]` directly.

use std::fmt;

use crate::error::{Error, Result};

/// An integer residue modulo `n`, represented by its unique value in `[1..n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue1 {
    value: usize,
    modulus: usize,
}

impl Residue1 {
    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }
}

impl fmt::Display for Residue1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl From<Residue1> for usize {
    fn from(r: Residue1) -> usize {
        r.value
    }
}

/// Reduces `x` into `[1..n]`. `n` must be positive.
#[inline]
pub(crate) fn reduce(x: i128, n: usize) -> usize {
    debug_assert!(n > 0);
    let n = n as i128;
    let r = x.rem_euclid(n);
    (if r == 0 { n } else { r }) as usize
}

/// Reduces `x` into `[0..n)`, the 0-based convention used for Cayley graphs.
#[inline]
pub(crate) fn reduce0(x: i128, n: usize) -> usize {
    debug_assert!(n > 0);
    x.rem_euclid(n as i128) as usize
}

/// Maps `x` to the representative in `[1..n]` congruent to `x` modulo `n`.
pub fn canonical_residue(x: i64, n: usize) -> Result<Residue1> {
    if n == 0 {
        return Err(Error::InvalidModulus);
    }
    Ok(Residue1 {
        value: reduce(x as i128, n),
        modulus: n,
    })
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative inverse of `k` modulo `n` via the extended Euclidean algorithm.
///
/// For `n = 1` every integer is invertible and the result is `1`
/// (which is also `n` under the 1-based convention).
pub fn mod_inverse(k: i64, n: usize) -> Result<Residue1> {
    if n == 0 {
        return Err(Error::InvalidModulus);
    }
    let kr = reduce0(k as i128, n) as i128;
    let (mut old_r, mut r) = (kr, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 && n != 1 {
        return Err(Error::NotCoprime {
            k: kr as usize,
            n,
        });
    }
    Ok(Residue1 {
        value: reduce(old_s, n),
        modulus: n,
    })
}
