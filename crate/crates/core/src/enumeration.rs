//! Counting and listing every string whose suffix array is a given
//! arithmetically progressed permutation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::APPerm;
use crate::synthesis::{classify, required_splits};
use crate::text::{Rank, Text};

/// Smallest alphabet size admitting a string with suffix array `perm`.
pub fn sigma_min(perm: &APPerm) -> u32 {
    classify(perm).1
}

/// Exact count (when known) next to the general upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub exact: Option<u128>,
    /// `C(n + sigma - 1, sigma - sigma_min)`: strings for one fixed permutation.
    pub bound_fixed_perm: u128,
    /// `C(n + sigma - 1, n)`: strings sharing any one suffix array.
    pub bound_any_perm: u128,
    /// `n (n - 1) C(n + sigma - 1, sigma - sigma_min)`: over all permutations of length `n`.
    pub bound_total: u128,
}

/// `C(n, k)` by the multiplicative formula; errors instead of wrapping.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 after the multiplication
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial coefficient"))?
            / u128::from(i + 1);
    }
    Ok(acc)
}

pub fn count_bounds(n: usize, sigma: u32, sigma_min: u32) -> Result<CountReport> {
    if sigma_min == 0 {
        return Err(Error::InvalidInput("sigma_min must be at least 1".into()));
    }
    if sigma < sigma_min {
        return Err(Error::AlphabetTooSmall { sigma, sigma_min });
    }
    let (n64, s) = (n as u64, u64::from(sigma));
    let top = n64
        .checked_add(s - 1)
        .ok_or(Error::Overflow("n + sigma - 1"))?;
    let bound_fixed_perm = binomial(top, s - u64::from(sigma_min))?;
    let perms = u128::from(n64) * u128::from(n64.saturating_sub(1));
    Ok(CountReport {
        exact: None,
        bound_fixed_perm,
        bound_any_perm: binomial(top, n64)?,
        bound_total: perms
            .checked_mul(bound_fixed_perm)
            .ok_or(Error::Overflow("total bound"))?,
    })
}

/// Bounds for `perm` plus the exact count obtained by generating every string.
pub fn count_report(perm: &APPerm, sigma: u32) -> Result<CountReport> {
    let mut report = count_bounds(perm.n(), sigma, sigma_min(perm))?;
    let mut exact = 0u128;
    for t in enumerate_strings(perm, sigma)? {
        t?;
        exact += 1;
    }
    report.exact = Some(exact);
    Ok(report)
}

/// Every string over ranks `1..=sigma` with suffix array `perm`, each once.
///
/// A string with suffix array `P` has nondecreasing characters along `P`,
/// strictly increasing across each required split. The iterator walks all
/// such label sequences, i.e. every refinement of the required splits with
/// possibly empty character classes, and checks each candidate's suffix array
/// before yielding it; a failing candidate is reported as
/// [`Error::RefinementCounterexample`].
pub fn enumerate_strings(perm: &APPerm, sigma: u32) -> Result<StringsWithSuffixArray> {
    let needed = sigma_min(perm);
    if sigma < needed {
        return Err(Error::AlphabetTooSmall {
            sigma,
            sigma_min: needed,
        });
    }
    let n = perm.n();
    // starts[i]: a required split sits right before 0-based index i along P
    let mut starts = vec![false; n];
    for v in required_splits(perm) {
        let after = perm.index_of(v);
        if after < n {
            starts[after] = true;
        }
    }
    // offset[i]: required splits at or before index i
    let offset: Vec<Rank> = starts
        .iter()
        .scan(0, |acc, &s| {
            *acc += Rank::from(s);
            Some(*acc)
        })
        .collect();
    let free_top = sigma - (needed - 1);
    Ok(StringsWithSuffixArray {
        sa: perm.materialize(),
        offset,
        free_top,
        current: Some(vec![1; n]),
        produced: 0,
        bound: count_bounds(n, sigma, needed)?.bound_fixed_perm,
    })
}

/// Iterator returned by [`enumerate_strings`].
#[derive(Debug, Clone)]
pub struct StringsWithSuffixArray {
    sa: Vec<usize>,
    offset: Vec<Rank>,
    /// Largest value of the nondecreasing free sequence.
    free_top: Rank,
    current: Option<Vec<Rank>>,
    produced: u128,
    bound: u128,
}

impl StringsWithSuffixArray {
    fn advance(&mut self, cur: &[Rank]) {
        let top = self.free_top;
        self.current = (0..cur.len()).rev().find(|&j| cur[j] < top).map(|j| {
            let mut next = cur.to_vec();
            let v = next[j] + 1;
            next[j..].iter_mut().for_each(|r| *r = v);
            next
        });
    }
}

impl Iterator for StringsWithSuffixArray {
    type Item = Result<Text>;

    fn next(&mut self) -> Option<Result<Text>> {
        let free = self.current.take()?;
        self.advance(&free);
        self.produced += 1;
        if self.produced > self.bound {
            self.current = None;
            return Some(Err(Error::InvalidInput(format!(
                "generated more strings than the bound {}",
                self.bound
            ))));
        }
        let mut ranks = vec![0; self.sa.len()];
        for (i, &pos) in self.sa.iter().enumerate() {
            ranks[pos - 1] = free[i] + self.offset[i];
        }
        if !is_suffix_array(&ranks, &self.sa) {
            return Some(Err(Error::RefinementCounterexample));
        }
        Some(Text::from_ranks(ranks))
    }
}

/// Whether `sa` (1-based) lists the suffixes of `text` in strictly increasing order.
pub fn is_suffix_array<T: Ord>(text: &[T], sa: &[usize]) -> bool {
    sa.len() == text.len()
        && sa.iter().all(|&p| (1..=text.len()).contains(&p))
        && sa.windows(2).all(|w| text[w[0] - 1..] < text[w[1] - 1..])
}

/// Largest search space `sigma^n` that [`brute_force_strings`] accepts.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// All strings in `{1..sigma}^n` whose suffix array is `perm`, by exhaustive filter.
pub fn brute_force_strings(perm: &APPerm, sigma: u32) -> Result<BTreeSet<Text>> {
    let n = perm.n();
    let space = u128::from(sigma)
        .checked_pow(n as u32)
        .filter(|&s| s <= BRUTE_FORCE_LIMIT && n <= u32::MAX as usize);
    let Some(space) = space else {
        return Err(Error::InstanceTooLarge {
            size: u128::from(sigma).saturating_pow(n.min(u32::MAX as usize) as u32),
            limit: BRUTE_FORCE_LIMIT,
        });
    };
    let sa = perm.materialize();
    let mut found = BTreeSet::new();
    if sigma == 0 {
        return Ok(found);
    }
    let mut ranks: Vec<Rank> = vec![1; n];
    for _ in 0..space {
        if is_suffix_array(&ranks, &sa) {
            found.insert(Text::from_ranks(ranks.clone())?);
        }
        // odometer increment, last position fastest
        for r in ranks.iter_mut().rev() {
            if *r < sigma {
                *r += 1;
                break;
            }
            *r = 1;
        }
    }
    Ok(found)
}
