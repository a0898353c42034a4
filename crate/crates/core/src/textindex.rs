//! Suffix arrays, inverse suffix arrays and the two BWT definitions.
//!
//! Suffixes are compared without an appended sentinel: a suffix that is a
//! prefix of another one sorts first. All positions are 1-based.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::modular::reduce;
use crate::perm::APPerm;
use crate::synthesis::{ternary_split, SplitSpec};
use crate::text::{render_rank, Rank};

/// A text together with its suffix array (values in `[1..n]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArrayView<'a, T> {
    text: &'a [T],
    sa: Vec<usize>,
}

impl<'a, T> SuffixArrayView<'a, T> {
    pub fn text(&self) -> &'a [T] {
        self.text
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    pub fn into_sa(self) -> Vec<usize> {
        self.sa
    }

    pub fn isa(&self) -> Vec<usize> {
        inverse_sa(&self.sa).expect("suffix array is a permutation")
    }
}

/// Suffix array by prefix doubling with two counting-sort passes per round.
pub fn suffix_array<T: Ord>(text: &[T]) -> SuffixArrayView<'_, T> {
    SuffixArrayView {
        text,
        sa: suffix_array_by(text, T::cmp),
    }
}

/// Suffix array under a custom character order, e.g. `b < a`.
pub fn suffix_array_by<T, F>(text: &[T], mut cmp: F) -> Vec<usize>
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by(|&a, &b| cmp(&text[a], &text[b]));

    // ranks are in [1..n]; 0 stands for "past the end"
    let mut rank = vec![0usize; n];
    rank[sa[0]] = 1;
    for j in 1..n {
        let step = cmp(&text[sa[j - 1]], &text[sa[j]]) != Ordering::Equal;
        rank[sa[j]] = rank[sa[j - 1]] + usize::from(step);
    }

    let mut tmp = vec![0usize; n];
    let mut next = vec![0usize; n];
    let mut count = vec![0usize; n + 2];
    let mut h = 1;
    while rank[sa[n - 1]] < n {
        let second = |i: usize, rank: &[usize]| if i + h < n { rank[i + h] } else { 0 };

        count.iter_mut().for_each(|c| *c = 0);
        for i in 0..n {
            count[second(i, &rank) + 1] += 1;
        }
        for r in 1..count.len() {
            count[r] += count[r - 1];
        }
        for i in 0..n {
            let key = second(i, &rank);
            tmp[count[key]] = i;
            count[key] += 1;
        }

        count.iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r] += 1;
        }
        let mut acc = 0;
        for c in count.iter_mut() {
            let here = *c;
            *c = acc;
            acc += here;
        }
        for &i in &tmp {
            sa[count[rank[i]]] = i;
            count[rank[i]] += 1;
        }

        next[sa[0]] = 1;
        for j in 1..n {
            let (a, b) = (sa[j - 1], sa[j]);
            let differ = rank[a] != rank[b] || second(a, &rank) != second(b, &rank);
            next[b] = next[a] + usize::from(differ);
        }
        std::mem::swap(&mut rank, &mut next);
        h *= 2;
    }
    sa.iter_mut().for_each(|p| *p += 1);
    sa
}

/// `ISA` with `ISA[SA[i]] = i`.
pub fn inverse_sa(sa: &[usize]) -> Result<Vec<usize>> {
    let n = sa.len();
    let mut isa = vec![0usize; n];
    for (i, &p) in sa.iter().enumerate() {
        if p == 0 || p > n || isa[p - 1] != 0 {
            return Err(Error::InvalidPermutation);
        }
        isa[p - 1] = i + 1;
    }
    Ok(isa)
}

/// Where a [`BwtProfile`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BwtSource {
    SuffixArray,
    Matrix,
    Predicted,
}

/// Characters that know how to print themselves in run notation.
pub trait Symbol: Copy + Eq {
    fn render(&self) -> String;
}

impl Symbol for u8 {
    fn render(&self) -> String {
        char::from(*self).to_string()
    }
}

impl Symbol for Rank {
    fn render(&self) -> String {
        render_rank(*self)
    }
}

/// A BWT string with its run-length encoding. Equality looks at the characters only.
#[derive(Debug, Clone)]
pub struct BwtProfile<T> {
    chars: Vec<T>,
    runs: Vec<(T, usize)>,
    source: BwtSource,
}

impl<T: Copy + Eq> BwtProfile<T> {
    pub fn new(chars: Vec<T>, source: BwtSource) -> Self {
        let mut runs: Vec<(T, usize)> = Vec::new();
        for &c in &chars {
            match runs.last_mut() {
                Some((last, len)) if *last == c => *len += 1,
                _ => runs.push((c, 1)),
            }
        }
        Self {
            chars,
            runs,
            source,
        }
    }

    pub fn chars(&self) -> &[T] {
        &self.chars
    }

    pub fn runs(&self) -> &[(T, usize)] {
        &self.runs
    }

    pub fn source(&self) -> BwtSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }
}

impl<T: Symbol> BwtProfile<T> {
    /// Run notation such as `b4c1a3`.
    pub fn run_notation(&self) -> String {
        self.runs
            .iter()
            .map(|(c, len)| format!("{}{len}", c.render()))
            .collect()
    }

    pub fn to_plain_string(&self) -> String {
        self.chars.iter().map(Symbol::render).collect()
    }
}

impl<T: PartialEq> PartialEq for BwtProfile<T> {
    fn eq(&self, other: &Self) -> bool {
        self.chars == other.chars
    }
}

impl<T: Eq> Eq for BwtProfile<T> {}

/// `BWT[i] = T[SA[i] - 1 mod n]`.
pub fn bwt_from_sa<T: Copy + Eq>(text: &[T], sa: &[usize]) -> Result<BwtProfile<T>> {
    let n = text.len();
    if sa.len() != n {
        return Err(Error::InvalidInput(format!(
            "suffix array has length {} but text has length {n}",
            sa.len()
        )));
    }
    let chars = sa
        .iter()
        .map(|&p| {
            if p == 0 || p > n {
                Err(Error::InvalidPermutation)
            } else {
                Ok(text[reduce(p as i128 - 1, n) - 1])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BwtProfile::new(chars, BwtSource::SuffixArray))
}

fn cmp_rotations<T: Ord>(text: &[T], a: usize, b: usize) -> Ordering {
    let n = text.len();
    (0..n)
        .map(|j| text[(a + j) % n].cmp(&text[(b + j) % n]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Start positions (1-based) of the rotations in sorted order; equal
/// rotations keep their starting-position order.
pub fn sorted_rotations<T: Ord>(text: &[T]) -> Vec<usize> {
    let mut starts: Vec<usize> = (0..text.len()).collect();
    starts.sort_by(|&a, &b| cmp_rotations(text, a, b));
    starts.into_iter().map(|s| s + 1).collect()
}

/// Last column of the sorted rotation matrix.
pub fn bwt_from_matrix<T: Ord + Copy>(text: &[T]) -> BwtProfile<T> {
    let n = text.len();
    let chars = sorted_rotations(text)
        .into_iter()
        .map(|s| text[reduce(s as i128 - 1, n) - 1])
        .collect();
    BwtProfile::new(chars, BwtSource::Matrix)
}

/// BWT of the three-way split string of `perm` (the output of
/// [`synth_ternary`](crate::synthesis::synth_ternary)), obtained by rotating
/// its sorted characters left by `t = n - k^{-1} mod n` without sorting any
/// suffix.
pub fn bwt_predict(perm: &APPerm) -> Result<BwtProfile<Rank>> {
    if perm.is_reversal() {
        return Err(Error::UnsupportedCase(
            "the reversal [n, ..., 1] has no single synthesized string; use the unary family",
        ));
    }
    Ok(bwt_predict_with_split(perm, &ternary_split(perm)))
}

/// Predicted SA-based BWT of the string that `split` induces on `perm`.
///
/// Any string whose suffix array is `perm` satisfies
/// `BWT[i] = T[P[i + t]]`, so only the sorted characters are needed.
pub fn bwt_predict_with_split(perm: &APPerm, split: &SplitSpec) -> BwtProfile<Rank> {
    let n = perm.n();
    let sorted = split.sorted_labels();
    let t = reduce(n as i128 - perm.k_inverse() as i128, n);
    let chars = (1..=n)
        .map(|i| sorted[reduce((i + t) as i128, n) - 1])
        .collect();
    BwtProfile::new(chars, BwtSource::Predicted)
}

pub fn run_count<T>(bwt: &BwtProfile<T>) -> usize {
    bwt.runs.len()
}

/// Whether the SA-based and the matrix-based BWT coincide for `text`.
pub fn bwt_definitions_agree<T: Ord + Copy>(text: &[T]) -> bool {
    let sa = suffix_array(text);
    let by_sa = bwt_from_sa(text, sa.sa()).expect("lengths match");
    by_sa == bwt_from_matrix(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sa(text: &[u8]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..text.len()).collect();
        sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
        sa.into_iter().map(|p| p + 1).collect()
    }

    #[test]
    fn suffix_array_examples() {
        assert_eq!(suffix_array(b"babbabac").sa(), [5, 2, 7, 4, 1, 6, 3, 8]);
        assert_eq!(naive_sa(b"abaababa"), [8, 3, 6, 1, 4, 7, 2, 5]);
        assert_eq!(suffix_array(b"abaababa").sa(), [8, 3, 6, 1, 4, 7, 2, 5]);
        assert_eq!(suffix_array(b"aaa").sa(), [3, 2, 1]);
        assert_eq!(suffix_array(b"bab").sa(), [2, 3, 1]);
        assert_eq!(suffix_array(b"banana").sa(), [6, 4, 2, 1, 5, 3]);
        assert!(suffix_array::<u8>(&[]).sa().is_empty());
        assert_eq!(suffix_array(b"z").sa(), [1]);
    }

    #[test]
    fn suffix_array_with_reversed_order() {
        let sa = suffix_array_by(b"ab", |a: &u8, b: &u8| b.cmp(a));
        assert_eq!(sa, [2, 1]);
    }

    #[test]
    fn inverse_sa_examples() {
        assert_eq!(
            inverse_sa(&[5, 2, 7, 4, 1, 6, 3, 8]).unwrap(),
            [5, 2, 7, 4, 1, 6, 3, 8]
        );
        assert_eq!(inverse_sa(&[1, 2, 3, 4]).unwrap(), [1, 2, 3, 4]);
        assert_eq!(inverse_sa(&[3, 1, 2]).unwrap(), [2, 3, 1]);
        assert_eq!(inverse_sa(&[1, 1, 2]), Err(Error::InvalidPermutation));
        assert_eq!(inverse_sa(&[0, 1]), Err(Error::InvalidPermutation));
    }

    #[test]
    fn bwt_from_sa_examples() {
        let t = b"babbabac";
        let bwt = bwt_from_sa(t, suffix_array(t).sa()).unwrap();
        assert_eq!(bwt.run_notation(), "b4c1a3");
        let t = b"ababbabb";
        let bwt = bwt_from_sa(t, suffix_array(t).sa()).unwrap();
        assert_eq!(bwt.run_notation(), "b5a3");
        let bwt = bwt_from_sa(b"bab", suffix_array(b"bab").sa()).unwrap();
        assert_eq!(bwt.to_plain_string(), "bab");
        assert!(matches!(
            bwt_from_sa(b"ab", &[1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn bwt_from_matrix_examples() {
        assert_eq!(bwt_from_matrix(b"bab").to_plain_string(), "bba");
        assert_eq!(bwt_from_matrix(b"babbabac").to_plain_string(), "bbbbcaaa");
        assert_eq!(bwt_from_matrix(b"bbabbabb").to_plain_string(), "bbbbbaba");
        assert_eq!(bwt_from_matrix(b"abab").to_plain_string(), "bbaa");
    }

    #[test]
    fn sorted_rotations_break_ties_by_start() {
        assert_eq!(sorted_rotations(b"abab"), [1, 3, 2, 4]);
        assert_eq!(sorted_rotations(b"aaa"), [1, 2, 3]);
    }

    #[test]
    fn bwt_predict_examples() {
        let p = APPerm::new(8, 5, 6).unwrap();
        assert_eq!(bwt_predict(&p).unwrap().run_notation(), "c5a2b1");
        let p = APPerm::new(8, 5, 5).unwrap();
        assert_eq!(bwt_predict(&p).unwrap().run_notation(), "b4c1a3");
        let p = APPerm::new(8, 5, 1).unwrap();
        assert_eq!(bwt_predict(&p).unwrap().run_notation(), "b5a3");
        let p = APPerm::new(8, 7, 8).unwrap();
        assert!(matches!(bwt_predict(&p), Err(Error::UnsupportedCase(_))));
    }

    #[test]
    fn run_count_examples() {
        let p = APPerm::new(8, 5, 5).unwrap();
        assert_eq!(run_count(&bwt_predict(&p).unwrap()), 3);
        let p = APPerm::new(8, 5, 1).unwrap();
        assert_eq!(run_count(&bwt_predict(&p).unwrap()), 2);
        assert_eq!(run_count(&bwt_from_matrix(b"aaaa")), 1);
    }

    #[test]
    fn bwt_definitions_agree_examples() {
        assert!(bwt_definitions_agree(b"babbabac"));
        assert!(!bwt_definitions_agree(b"bbabbabb"));
        assert!(bwt_definitions_agree(b"aab"));
        assert!(!bwt_definitions_agree(b"bab"));
    }
}
