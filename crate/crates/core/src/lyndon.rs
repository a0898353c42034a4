//! Lyndon words, their standard factorizations, balanced words and Fibonacci words.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::modular::{gcd, reduce};
use crate::textindex::{bwt_from_matrix, suffix_array};

/// Index of the first letter that breaks the Lyndon property, or the lengths
/// of all Lyndon prefixes when none does.
///
/// Scans `w` keeping `i`, the position that `w[j]` must match for `w[..=j]`
/// to extend the current periodic prefix; `w[..=j]` is Lyndon iff `i == 0` afterwards.
fn lyndon_scan<T: Ord>(w: &[T]) -> (bool, Vec<usize>) {
    let mut prefixes = vec![1];
    let mut i = 0;
    for j in 1..w.len() {
        if w[i] < w[j] {
            i = 0;
        } else if w[i] == w[j] {
            i += 1;
        } else {
            return (false, prefixes);
        }
        if i == 0 {
            prefixes.push(j + 1);
        }
    }
    (i == 0, prefixes)
}

/// Whether `w` is strictly smaller than each of its nontrivial rotations.
pub fn is_lyndon<T: Ord>(w: &[T]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(lyndon_scan(w).0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorizationKind {
    /// Nonincreasing sequence of Lyndon words.
    Duval,
    /// `(u, v)` with `v` the least proper suffix.
    Right,
    /// `(u, v)` with `u` the longest proper Lyndon prefix.
    Left,
    /// Top level of a balanced factorization tree.
    Balanced2,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    pub factors: Vec<Vec<T>>,
    pub kind: FactorizationKind,
}

impl<T: Clone> Factorization<T> {
    fn pair(w: &[T], split: usize, kind: FactorizationKind) -> Self {
        Self {
            factors: vec![w[..split].to_vec(), w[split..].to_vec()],
            kind,
        }
    }

    /// Length of the first factor.
    pub fn left_len(&self) -> usize {
        self.factors[0].len()
    }

    pub fn concat(&self) -> Vec<T> {
        self.factors.concat()
    }
}

/// Duval's algorithm: the unique factorization into nonincreasing Lyndon words.
pub fn duval_factorization<T: Ord + Clone>(w: &[T]) -> Result<Factorization<T>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let mut factors = Vec::new();
    let mut start = 0;
    while start < n {
        let (mut i, mut j) = (start, start + 1);
        while j < n && w[i] <= w[j] {
            i = if w[i] < w[j] { start } else { i + 1 };
            j += 1;
        }
        let period = j - i;
        while start <= i {
            factors.push(w[start..start + period].to_vec());
            start += period;
        }
    }
    Ok(Factorization {
        factors,
        kind: FactorizationKind::Duval,
    })
}

fn require_long_lyndon<T: Ord>(w: &[T]) -> Result<()> {
    if w.len() < 2 {
        return Err(Error::InvalidInput(
            "a standard factorization needs at least two letters".into(),
        ));
    }
    if !is_lyndon(w)? {
        return Err(Error::NotLyndon);
    }
    Ok(())
}

/// Splits a Lyndon word before its lexicographically least proper suffix.
///
/// That suffix starts at `SA[2]`: a Lyndon word is its own least suffix.
pub fn right_factorization<T: Ord + Clone>(w: &[T]) -> Result<Factorization<T>> {
    require_long_lyndon(w)?;
    let sa = suffix_array(w);
    Ok(Factorization::pair(w, sa.sa()[1] - 1, FactorizationKind::Right))
}

/// Splits a Lyndon word after its longest proper Lyndon prefix.
pub fn left_factorization<T: Ord + Clone>(w: &[T]) -> Result<Factorization<T>> {
    require_long_lyndon(w)?;
    let (_, prefixes) = lyndon_scan(w);
    let split = prefixes
        .into_iter()
        .filter(|&len| len < w.len())
        .max()
        .expect("the first letter is a Lyndon prefix");
    Ok(Factorization::pair(w, split, FactorizationKind::Left))
}

/// A Lyndon word whose left and right factorizations coincide, recursively.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Balanced2Tree<T> {
    Letter(T),
    Node {
        word: Vec<T>,
        left: Box<Balanced2Tree<T>>,
        right: Box<Balanced2Tree<T>>,
    },
}

impl<T: Clone> Balanced2Tree<T> {
    pub fn word(&self) -> Vec<T> {
        match self {
            Balanced2Tree::Letter(c) => vec![c.clone()],
            Balanced2Tree::Node { word, .. } => word.clone(),
        }
    }

    /// The top-level pair, or `None` for a single letter.
    pub fn factorization(&self) -> Option<Factorization<T>> {
        match self {
            Balanced2Tree::Letter(_) => None,
            Balanced2Tree::Node { left, right, .. } => Some(Factorization {
                factors: vec![left.word(), right.word()],
                kind: FactorizationKind::Balanced2,
            }),
        }
    }
}

/// Whether `w` is a letter, or a Lyndon word whose left and right
/// factorizations coincide and whose two factors are again balanced.
///
/// Non-Lyndon input yields `false`.
pub fn is_balanced2<T: Ord + Clone>(w: &[T]) -> bool {
    balanced2_factorization(w).is_some()
}

/// The full balanced factorization tree of `w`, if it has one.
pub fn balanced2_factorization<T: Ord + Clone>(w: &[T]) -> Option<Balanced2Tree<T>> {
    let mut memo = HashMap::new();
    balanced2_split(w, 0, w.len(), &mut memo)?;
    Some(build_tree(w, 0, w.len(), &memo))
}

/// Split point of `w[start..end]` if that factor is balanced; memoized on extents.
fn balanced2_split<T: Ord + Clone>(
    w: &[T],
    start: usize,
    end: usize,
    memo: &mut HashMap<(usize, usize), Option<usize>>,
) -> Option<Option<usize>> {
    if end - start == 1 {
        return Some(None);
    }
    if let Some(&cached) = memo.get(&(start, end)) {
        return cached.map(Some);
    }
    let factor = &w[start..end];
    let result = match (left_factorization(factor), right_factorization(factor)) {
        (Ok(l), Ok(r)) if l.left_len() == r.left_len() => {
            let mid = start + l.left_len();
            (balanced2_split(w, start, mid, memo).is_some()
                && balanced2_split(w, mid, end, memo).is_some())
            .then_some(mid)
        }
        _ => None,
    };
    memo.insert((start, end), result);
    result.map(Some)
}

fn build_tree<T: Clone>(
    w: &[T],
    start: usize,
    end: usize,
    memo: &HashMap<(usize, usize), Option<usize>>,
) -> Balanced2Tree<T> {
    if end - start == 1 {
        return Balanced2Tree::Letter(w[start].clone());
    }
    let mid = memo[&(start, end)].expect("only balanced extents are built");
    Balanced2Tree::Node {
        word: w[start..end].to_vec(),
        left: Box::new(build_tree(w, start, mid, memo)),
        right: Box::new(build_tree(w, mid, end, memo)),
    }
}

fn require_binary(w: &[u8]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if w.iter().any(|&c| c != b'a' && c != b'b') {
        return Err(Error::NonBinary);
    }
    Ok(())
}

/// Whether, for every length, the cyclic windows of `w` hold numbers of `a`
/// that differ by at most one. Quadratic; meant as a reference.
pub fn is_balanced(w: &[u8]) -> Result<bool> {
    require_binary(w)?;
    let n = w.len();
    // prefix counts over two copies of w
    let mut prefix = vec![0usize; 2 * n + 1];
    for j in 0..2 * n {
        prefix[j + 1] = prefix[j] + usize::from(w[j % n] == b'a');
    }
    for len in 1..=n {
        let counts = (0..n).map(|s| prefix[s + len] - prefix[s]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        if hi - lo > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shortest `r` with `w = r^e`.
pub fn primitive_root<T: Eq>(w: &[T]) -> &[T] {
    let n = w.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|j| w[j] == w[j - d]))
        .map_or(w, |d| &w[..d])
}

/// Balance decided from the BWT: the primitive root of `w` has BWT `b^x a^y`
/// with `gcd(x, y) = 1`.
///
/// Powers are reduced to their root first: `abab` is balanced although its
/// own BWT `bbaa` has `gcd(2, 2) = 2`.
pub fn balanced_via_bwt(w: &[u8]) -> Result<bool> {
    require_binary(w)?;
    let bwt = bwt_from_matrix(primitive_root(w));
    let chars = bwt.chars();
    let x = chars.iter().take_while(|&&c| c == b'b').count();
    let y = chars.len() - x;
    let shaped = chars[x..].iter().all(|&c| c == b'a');
    Ok(shaped && gcd(x, y) == 1)
}

/// `F_1 = b`, `F_2 = a`, `F_m = F_{m-1} F_{m-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibonacciWord {
    pub m: u32,
    pub word: Vec<u8>,
}

impl FibonacciWord {
    /// `f_m = |F_m|`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Largest index for which `f_m` fits in a `u64`.
pub const MAX_FIBONACCI_INDEX: u32 = 93;

/// `f_m` with `f_1 = f_2 = 1`.
pub fn fibonacci_length(m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::OutOfRange {
            what: "Fibonacci index m",
            value: 0,
            lo: 1,
            hi: MAX_FIBONACCI_INDEX as i64,
        });
    }
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..m {
        let c = a
            .checked_add(b)
            .ok_or(Error::Overflow("Fibonacci length"))?;
        a = b;
        b = c;
    }
    Ok(b)
}

/// Refuses words longer than this to keep memory bounded.
const MAX_FIBONACCI_WORD: u64 = 1 << 30;

pub fn fibonacci_word(m: u32) -> Result<FibonacciWord> {
    let len = fibonacci_length(m)?;
    if len > MAX_FIBONACCI_WORD {
        return Err(Error::InstanceTooLarge {
            size: u128::from(len),
            limit: u128::from(MAX_FIBONACCI_WORD),
        });
    }
    let (mut older, mut newer) = (b"b".to_vec(), b"a".to_vec());
    if m == 1 {
        newer = older.clone();
    }
    for _ in 2..m {
        let mut next = newer.clone();
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(FibonacciWord { m, word: newer })
}

/// `F_m[i] = a` iff `1 + i f_{m-2} mod f_m <= f_{m-1}`, for even `m >= 4`.
pub fn fibonacci_closed_form(m: u32) -> Result<Vec<u8>> {
    if m % 2 == 1 {
        return Err(Error::WrongParity(m));
    }
    if m < 4 {
        return Err(Error::OutOfRange {
            what: "Fibonacci index m",
            value: i64::from(m),
            lo: 4,
            hi: MAX_FIBONACCI_INDEX as i64,
        });
    }
    let f = fibonacci_length(m)? as usize;
    if f as u64 > MAX_FIBONACCI_WORD {
        return Err(Error::InstanceTooLarge {
            size: f as u128,
            limit: u128::from(MAX_FIBONACCI_WORD),
        });
    }
    let f1 = fibonacci_length(m - 1)? as i128;
    let f2 = fibonacci_length(m - 2)? as i128;
    Ok((1..=f as i128)
        .map(|i| {
            if reduce(1 + i * f2, f) as i128 <= f1 {
                b'a'
            } else {
                b'b'
            }
        })
        .collect())
}

/// `F_m` with `a` and `b` exchanged.
pub fn fibonacci_swapped(m: u32) -> Result<Vec<u8>> {
    Ok(fibonacci_word(m)?
        .word
        .into_iter()
        .map(|c| if c == b'a' { b'b' } else { b'a' })
        .collect())
}
