//! Strings over the smallest alphabet whose suffix array is a given
//! arithmetically progressed permutation, plus larger-alphabet variants.
//!
//! Every construction splits the permutation into consecutive subarrays and
//! gives all text positions of one subarray the same character, with
//! characters increasing from left to right.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modular::reduce;
use crate::perm::APPerm;
use crate::text::{Rank, Text};

/// Which family a permutation belongs to, determined by `(n, k, p1)` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SynthCase {
    /// `[n, ..., 1]`; every string of the shape `sigma^s ... 1^s` qualifies.
    Unary,
    /// `p1 = n`; the binary string has period `n - k`.
    Binary1,
    /// `p1 = k + 1`; the binary string has period `n - k`.
    Binary2,
    /// `p1 = 1`; the binary string is a Lyndon word.
    Binary3,
    /// Any other `p1`; a unique string over three characters.
    Ternary,
}

impl SynthCase {
    pub const ALL: [SynthCase; 5] = [
        SynthCase::Unary,
        SynthCase::Binary1,
        SynthCase::Binary2,
        SynthCase::Binary3,
        SynthCase::Ternary,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SynthCase::Unary => "unary",
            SynthCase::Binary1 => "binary1",
            SynthCase::Binary2 => "binary2",
            SynthCase::Binary3 => "binary3",
            SynthCase::Ternary => "ternary",
        }
    }

    pub fn sigma_min(self) -> u32 {
        match self {
            SynthCase::Unary => 1,
            SynthCase::Ternary => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for SynthCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SynthCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SynthCase::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown case {s:?}")))
    }
}

pub fn classify(perm: &APPerm) -> (SynthCase, u32) {
    let (n, k, p1) = (perm.n(), perm.k(), perm.p1());
    let case = if perm.is_reversal() {
        SynthCase::Unary
    } else if p1 == 1 {
        SynthCase::Binary3
    } else if p1 == k + 1 {
        SynthCase::Binary2
    } else if p1 == n {
        SynthCase::Binary1
    } else {
        SynthCase::Ternary
    };
    (case, case.sigma_min())
}

/// A partition of `P` into consecutive subarrays, each labelled by a character.
///
/// `boundaries` holds 1-based indices `i` meaning "split after `P[i]`";
/// `labels` holds one strictly increasing rank per subarray. Ranks may skip
/// values, which models characters that do not occur in the text.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitSpec {
    n: usize,
    boundaries: Vec<usize>,
    labels: Vec<Rank>,
}

impl SplitSpec {
    pub fn new(n: usize, boundaries: Vec<usize>, labels: Vec<Rank>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        if boundaries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSplit(
                "boundaries must be strictly increasing".into(),
            ));
        }
        if let Some(&b) = boundaries.iter().find(|&&b| b == 0 || b >= n) {
            return Err(Error::InvalidSplit(format!(
                "boundary index {b} is outside [1..{}]",
                n - 1
            )));
        }
        if labels.len() != boundaries.len() + 1 {
            return Err(Error::InvalidSplit(format!(
                "{} subarrays need {} labels, got {}",
                boundaries.len() + 1,
                boundaries.len() + 1,
                labels.len()
            )));
        }
        if labels.first() == Some(&0) || labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSplit(
                "labels must be strictly increasing ranks starting at 1 or above".into(),
            ));
        }
        Ok(Self {
            n,
            boundaries,
            labels,
        })
    }

    /// Consecutive labels `1, 2, ...` for the given boundary indices (any order, deduplicated).
    pub fn with_boundaries(n: usize, boundaries: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = boundaries.into_iter().collect();
        let labels = (1..=set.len() as Rank + 1).collect();
        Self::new(n, set.into_iter().collect(), labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn labels(&self) -> &[Rank] {
        &self.labels
    }

    pub fn subarray_count(&self) -> usize {
        self.labels.len()
    }

    /// The values of `perm` after which this spec splits.
    pub fn boundary_values(&self, perm: &APPerm) -> Vec<usize> {
        self.boundaries.iter().map(|&i| perm.entry(i)).collect()
    }

    /// `T[SA[1]] ... T[SA[n]]`: every label repeated by its subarray length.
    pub fn sorted_labels(&self) -> Vec<Rank> {
        let mut out = Vec::with_capacity(self.n);
        let mut start = 0;
        for (j, &label) in self.labels.iter().enumerate() {
            let end = self.boundaries.get(j).copied().unwrap_or(self.n);
            out.extend(std::iter::repeat_n(label, end - start));
            start = end;
        }
        out
    }
}

/// Indices after which `perm` is split for the given values; a value sitting
/// at the last index does not split anything and is dropped.
fn indices_of_values(perm: &APPerm, values: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    values
        .into_iter()
        .map(|v| perm.index_of(v))
        .filter(|&i| i != perm.n())
        .collect()
}

/// Values after which every string with suffix array `perm` changes character.
pub fn required_splits(perm: &APPerm) -> BTreeSet<usize> {
    let (n, k, p1) = (perm.n() as i128, perm.k() as i128, perm.p1() as i128);
    let before_wrap = reduce(p1 - k - 1, perm.n());
    let before_end = reduce(n - k, perm.n());
    match classify(perm).0 {
        SynthCase::Unary => BTreeSet::new(),
        SynthCase::Binary1 => BTreeSet::from([before_wrap]),
        SynthCase::Binary2 | SynthCase::Binary3 => BTreeSet::from([before_end]),
        SynthCase::Ternary => BTreeSet::from([before_wrap, before_end]),
    }
}

/// Split after the values `n - k` and `p1 - k - 1`, yielding up to three subarrays.
pub fn ternary_split(perm: &APPerm) -> SplitSpec {
    let (n, k, p1) = (perm.n(), perm.k() as i128, perm.p1() as i128);
    let values = [reduce(n as i128 - k, n), reduce(p1 - k - 1, n)];
    SplitSpec::with_boundaries(n, indices_of_values(perm, values))
        .expect("indices of a permutation are in range")
}

/// The split of the minimal-alphabet string: the required splits only.
pub fn canonical_split(perm: &APPerm) -> SplitSpec {
    SplitSpec::with_boundaries(perm.n(), indices_of_values(perm, required_splits(perm)))
        .expect("indices of a permutation are in range")
}

/// Assigns `T[P[i]]` the label of the subarray that contains index `i`.
///
/// Fails if `split` omits one of the [`required_splits`].
pub fn synth_from_split(perm: &APPerm, split: &SplitSpec) -> Result<Text> {
    let n = perm.n();
    if split.n() != n {
        return Err(Error::InvalidSplit(format!(
            "split is for length {} but permutation has length {n}",
            split.n()
        )));
    }
    let present: BTreeSet<usize> = split.boundaries().iter().copied().collect();
    let missing: Vec<usize> = required_splits(perm)
        .into_iter()
        .filter(|&v| !present.contains(&perm.index_of(v)))
        .collect();
    if !missing.is_empty() {
        return Err(Error::InvalidSplit(format!(
            "missing required split after value(s) {missing:?}"
        )));
    }
    Ok(fill_text(perm, split))
}

fn fill_text(perm: &APPerm, split: &SplitSpec) -> Text {
    let mut ranks = vec![0 as Rank; perm.n()];
    for (pos, label) in perm.iter().zip(split.sorted_labels()) {
        ranks[pos - 1] = label;
    }
    Text::from_ranks(ranks).expect("labels are positive")
}

/// A synthesized text with the parameters that describe it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthResult {
    pub text: Text,
    pub case: SynthCase,
    pub split: SplitSpec,
    /// Number of occurrences of the smallest character, i.e. the length of the first subarray.
    pub split_index: usize,
    /// Position of the largest suffix that starts with the smallest character.
    pub p_s: usize,
    /// `n - k` for the periodic binary families.
    pub predicted_period: Option<usize>,
}

impl SynthResult {
    fn build(perm: &APPerm, split: SplitSpec, predicted_period: Option<usize>) -> Self {
        let split_index = split.boundaries().first().copied().unwrap_or(perm.n());
        Self {
            text: fill_text(perm, &split),
            case: classify(perm).0,
            p_s: perm.entry(split_index),
            split_index,
            split,
            predicted_period,
        }
    }
}

/// The three-character construction; for ternary-case permutations its
/// output is the only string over at most three characters with suffix array `perm`.
pub fn synth_ternary(perm: &APPerm) -> Result<SynthResult> {
    if perm.is_reversal() {
        return Err(Error::UnsupportedCase(
            "the reversal [n, ..., 1]; use the unary family",
        ));
    }
    let split = ternary_split(perm);
    let period = (classify(perm).0 == SynthCase::Binary1).then(|| perm.n() - perm.k());
    Ok(SynthResult::build(perm, split, period))
}

/// The binary string for `p1` in `{1, k + 1, n}`.
///
/// Starts from the three-way split; for `p1 = k + 1` the middle subarray is
/// the singleton `{n}`, which is merged into the last one.
pub fn synth_binary(perm: &APPerm) -> Result<SynthResult> {
    let case = classify(perm).0;
    match case {
        SynthCase::Unary => {
            return Err(Error::UnsupportedCase(
                "the reversal [n, ..., 1]; use the unary family",
            ))
        }
        SynthCase::Ternary => return Err(Error::WrongCase("p1 must be 1, k + 1 or n")),
        _ => {}
    }
    let n = perm.n();
    let mut split = ternary_split(perm);
    if case == SynthCase::Binary2 {
        let singleton = perm.index_of(n);
        let kept: Vec<usize> = split
            .boundaries()
            .iter()
            .copied()
            .filter(|&b| b != singleton)
            .collect();
        split = SplitSpec::with_boundaries(n, kept)?;
    }
    debug_assert_eq!(split.subarray_count(), 2);
    let period = matches!(case, SynthCase::Binary1 | SynthCase::Binary2).then(|| n - perm.k());
    Ok(SynthResult::build(perm, split, period))
}

/// Split index `s` of the binary families, straight from `n` and `k^{-1}`.
pub fn binary_split_index(perm: &APPerm) -> Result<usize> {
    let (n, kinv) = (perm.n() as i128, perm.k_inverse() as i128);
    match classify(perm).0 {
        SynthCase::Binary1 | SynthCase::Binary3 => Ok(reduce(n - kinv, perm.n())),
        SynthCase::Binary2 => Ok(reduce(n - 1 - kinv, perm.n())),
        SynthCase::Unary => Err(Error::UnsupportedCase("the reversal [n, ..., 1]")),
        SynthCase::Ternary => Err(Error::WrongCase("p1 must be 1, k + 1 or n")),
    }
}

/// Closed form of the binary string: `T[i] = a` iff `ISA[i] <= s`, with
/// `ISA[i] = (i - P[n]) * k^{-1} mod n`. Independent of the split construction.
pub fn binary_closed_form(perm: &APPerm) -> Result<Text> {
    let s = binary_split_index(perm)?;
    let n = perm.n();
    let (last, kinv) = (perm.last() as i128, perm.k_inverse() as i128);
    let ranks = (1..=n)
        .map(|i| {
            let isa = reduce((i as i128 - last) * kinv, n);
            if isa <= s {
                1
            } else {
                2
            }
        })
        .collect();
    Text::from_ranks(ranks)
}

/// The minimal-alphabet string for any permutation; `a^n` for the reversal.
pub fn synth(perm: &APPerm) -> SynthResult {
    match classify(perm).0 {
        SynthCase::Unary => {
            let split = SplitSpec::with_boundaries(perm.n(), []).expect("no boundaries");
            SynthResult::build(perm, split, None)
        }
        SynthCase::Ternary => synth_ternary(perm).expect("not the reversal"),
        _ => synth_binary(perm).expect("binary case"),
    }
}

/// Like [`synth`] but over an alphabet of size `sigma`, with additional
/// splits after each value in `free_splits`.
pub fn synth_general(perm: &APPerm, sigma: u32, free_splits: &[usize]) -> Result<SynthResult> {
    let (_, sigma_min) = classify(perm);
    if sigma < sigma_min {
        return Err(Error::AlphabetTooSmall { sigma, sigma_min });
    }
    let n = perm.n();
    let required = required_splits(perm);
    let mut boundaries = indices_of_values(perm, required.iter().copied());
    let mut seen = BTreeSet::new();
    for &v in free_splits {
        if v == 0 || v > n {
            return Err(Error::InvalidSplit(format!("value {v} is not in [1..{n}]")));
        }
        if required.contains(&v) {
            return Err(Error::InvalidSplit(format!(
                "split after {v} is required and cannot be chosen freely"
            )));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidSplit(format!("split after {v} given twice")));
        }
        let idx = perm.index_of(v);
        if idx == n {
            return Err(Error::InvalidSplit(format!(
                "{v} is the last entry; nothing follows it"
            )));
        }
        boundaries.insert(idx);
    }
    let needed = boundaries.len() as u32 + 1;
    if needed > sigma {
        return Err(Error::AlphabetTooSmall {
            sigma,
            sigma_min: needed,
        });
    }
    let split = SplitSpec::with_boundaries(n, boundaries)?;
    let period = (free_splits.is_empty()
        && matches!(classify(perm).0, SynthCase::Binary1 | SynthCase::Binary2))
    .then(|| n - perm.k());
    Ok(SynthResult::build(perm, split, period))
}

/// Every string `sigma^{s_sigma} ... 1^{s_1}` of length `n`, i.e. every string
/// with suffix array `[n, ..., 1]` over `sigma` characters.
///
/// Yields `C(n + sigma - 1, n)` strings in lexicographic order.
pub fn synth_unary_family(n: usize, sigma: u32) -> UnaryFamily {
    UnaryFamily {
        current: (n > 0 && sigma > 0).then(|| vec![1; n]),
        sigma,
    }
}

/// Iterator returned by [`synth_unary_family`].
#[derive(Debug, Clone)]
pub struct UnaryFamily {
    current: Option<Vec<Rank>>,
    sigma: u32,
}

impl Iterator for UnaryFamily {
    type Item = Text;

    fn next(&mut self) -> Option<Text> {
        let cur = self.current.take()?;
        // the next non-increasing sequence: bump the rightmost position that may grow
        let bump = (0..cur.len()).rev().find(|&j| {
            if j == 0 {
                cur[0] < self.sigma
            } else {
                cur[j] < cur[j - 1]
            }
        });
        if let Some(j) = bump {
            let mut next = cur.clone();
            next[j] += 1;
            next[j + 1..].iter_mut().for_each(|r| *r = 1);
            self.current = Some(next);
        }
        Some(Text::from_ranks(cur).expect("ranks start at 1"))
    }
}
