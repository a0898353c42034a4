#![allow(dead_code)]

use apsa::{gcd, APPerm};

/// Quadratic reference: sort suffix start positions by full slice comparison.
pub fn naive_sa<T: Ord>(text: &[T]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..text.len()).collect();
    sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
    sa.into_iter().map(|p| p + 1).collect()
}

/// Every valid descriptor of length `n`.
pub fn all_perms(n: usize) -> Vec<APPerm> {
    if n == 1 {
        return vec![APPerm::new(1, 1, 1).unwrap()];
    }
    let mut out = Vec::new();
    for k in (1..n).filter(|&k| gcd(k, n) == 1) {
        for p1 in 1..=n {
            out.push(APPerm::new(n, k, p1).unwrap());
        }
    }
    out
}

/// The `index`-th word of length `n` over `sigma` letters starting at `base`.
pub fn word(index: u64, n: usize, sigma: u64, base: u8) -> Vec<u8> {
    let mut w = vec![base; n];
    let mut x = index;
    for c in w.iter_mut().rev() {
        *c = base + (x % sigma) as u8;
        x /= sigma;
    }
    w
}

pub fn all_words(n: usize, sigma: u64) -> impl Iterator<Item = Vec<u8>> {
    (0..sigma.pow(n as u32)).map(move |i| word(i, n, sigma, b'a'))
}
