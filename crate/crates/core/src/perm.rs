//! Arithmetically progressed permutations of `[1..n]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::modular::{gcd, mod_inverse, reduce};

/// Descriptor of the permutation `[p1, p1 + k, p1 + 2k, ...]` of `[1..n]`
/// with all sums taken in the 1-based residue convention.
///
/// The singleton `[1]` is represented as `n = 1, k = 1, p1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct APPerm {
    n: usize,
    k: usize,
    p1: usize,
}

impl APPerm {
    pub fn new(n: usize, k: usize, p1: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if n == 1 {
            if k != 1 || p1 != 1 {
                return Err(Error::InvalidInput(
                    "the only permutation of length 1 is (n=1, k=1, p1=1)".into(),
                ));
            }
            return Ok(Self { n, k, p1 });
        }
        if k == 0 || k >= n {
            return Err(Error::OutOfRange {
                what: "ratio k",
                value: k as i64,
                lo: 1,
                hi: n as i64 - 1,
            });
        }
        if gcd(k, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        if p1 == 0 || p1 > n {
            return Err(Error::OutOfRange {
                what: "first entry p1",
                value: p1 as i64,
                lo: 1,
                hi: n as i64,
            });
        }
        Ok(Self { n, k, p1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p1(&self) -> usize {
        self.p1
    }

    /// The multiplicative inverse of the ratio, in `[1..n]`.
    pub fn k_inverse(&self) -> usize {
        mod_inverse(self.k as i64, self.n)
            .expect("ratio is coprime to n by construction")
            .value()
    }

    /// `P[i]` for a 1-based index `i`.
    pub fn entry(&self, i: usize) -> usize {
        reduce(self.p1 as i128 + (i as i128 - 1) * self.k as i128, self.n)
    }

    /// `P[n]`, the entry preceding `p1` cyclically.
    pub fn last(&self) -> usize {
        reduce(self.p1 as i128 - self.k as i128, self.n)
    }

    /// 1-based index at which `value` occurs, i.e. `P^{-1}[value]`.
    pub fn index_of(&self, value: usize) -> usize {
        let kinv = self.k_inverse() as i128;
        reduce((value as i128 - self.last() as i128) * kinv, self.n)
    }

    /// True for `[n, n-1, ..., 1]`, the suffix array of every unary string.
    pub fn is_reversal(&self) -> bool {
        self.p1 == self.n && reduce(self.k as i128 + 1, self.n) == self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let (n, k) = (self.n, self.k);
        let mut cur = self.p1;
        (0..n).map(move |_| {
            let v = cur;
            cur += k;
            if cur > n {
                cur -= n;
            }
            v
        })
    }

    /// The explicit array `[p1, ..., pn]`.
    pub fn materialize(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Recognizes an arithmetically progressed permutation from its array form.
    ///
    /// Only the `n - 1` consecutive differences are compared; the cyclic
    /// difference `pn -> p1` follows because all `n` of them sum to zero.
    pub fn detect(p: &[usize]) -> Option<APPerm> {
        let n = p.len();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n + 1];
        for &v in p {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        if n == 1 {
            return Some(APPerm { n: 1, k: 1, p1: 1 });
        }
        let k = reduce(p[1] as i128 - p[0] as i128, n);
        let constant = p
            .windows(2)
            .all(|w| reduce(w[1] as i128 - w[0] as i128, n) == k);
        if !constant || k == n || gcd(k, n) != 1 {
            return None;
        }
        Some(APPerm { n, k, p1: p[0] })
    }

    /// The inverse permutation, which progresses with ratio `k^{-1}`.
    pub fn inverse(&self) -> APPerm {
        let kinv = self.k_inverse();
        let p1 = reduce((1 - self.last() as i128) * kinv as i128, self.n);
        APPerm {
            n: self.n,
            k: if self.n == 1 { 1 } else { kinv },
            p1,
        }
    }

    /// The `m`-th cyclic rotation `[P[m+1], ..., P[n], P[1], ..., P[m]]`.
    pub fn rotate(&self, m: usize) -> Result<APPerm> {
        if m >= self.n {
            return Err(Error::OutOfRange {
                what: "rotation",
                value: m as i64,
                lo: 0,
                hi: self.n as i64 - 1,
            });
        }
        Ok(APPerm {
            p1: self.entry(m + 1),
            ..*self
        })
    }
}

impl fmt::Display for APPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} p1={}", self.n, self.k, self.p1)
    }
}
