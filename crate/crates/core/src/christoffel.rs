//! Lower Christoffel words of slope `q / p` and their suffix-array geometry.
//!
//! Residues here are 0-based (`mod0`), as in the Cayley-graph definition of
//! the words; results that are positions or ranks are converted back to the
//! 1-based convention before they leave the module.

use crate::error::{Error, Result};
use crate::modular::{gcd, mod_inverse, reduce, reduce0};
use crate::perm::APPerm;
use crate::textindex::{sorted_rotations, BwtProfile, BwtSource};

/// A coprime pair `(p, q)`: `p` letters `a` (x-steps) and `q` letters `b` (y-steps).
///
/// `gcd(x, 0) = x`, so the only degenerate pairs are `(1, 0)` and `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChristoffelParams {
    p: usize,
    q: usize,
}

impl ChristoffelParams {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::InvalidInput("p + q must be at least 1".into()));
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { k: q, n: p });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `q / p`; infinite when `p = 0`.
    pub fn slope(&self) -> f64 {
        self.q as f64 / self.p as f64
    }

    pub fn is_degenerate(&self) -> bool {
        self.p == 0 || self.q == 0
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_degenerate() {
            return Err(Error::DegenerateSlope {
                p: self.p,
                q: self.q,
            });
        }
        Ok(())
    }

    /// The suffix-array ratio `q^{-1} mod n`.
    pub fn ratio(&self) -> Result<usize> {
        self.require_proper()?;
        Ok(mod_inverse(self.q as i64, self.n())?.value())
    }
}

/// Lattice points `v0 = (0, 0), ..., vn = (p, q)` reached by reading `a` as a
/// step right and `b` as a step up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    points: Vec<(usize, usize)>,
}

impl LatticePath {
    /// The path induced by a word over `{a, b}`.
    pub fn induced(word: &[u8]) -> Result<Self> {
        let mut points = Vec::with_capacity(word.len() + 1);
        let (mut x, mut y) = (0, 0);
        points.push((x, y));
        for &c in word {
            match c {
                b'a' => x += 1,
                b'b' => y += 1,
                _ => return Err(Error::NonBinary),
            }
            points.push((x, y));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> (usize, usize) {
        *self.points.last().expect("a path has at least its origin")
    }
}

/// `T[i] = a` iff `(i - 1) q mod0 n < i q mod0 n`.
pub fn christoffel_word(params: &ChristoffelParams) -> Vec<u8> {
    let (p, q, n) = (params.p, params.q, params.n());
    if q == 0 {
        return vec![b'a'; p];
    }
    (1..=n as i128)
        .map(|i| {
            let before = reduce0((i - 1) * q as i128, n);
            let here = reduce0(i * q as i128, n);
            if before < here {
                b'a'
            } else {
                b'b'
            }
        })
        .collect()
}

/// The upper Christoffel word: the reversal of the lower one.
pub fn christoffel_upper(params: &ChristoffelParams) -> Vec<u8> {
    let mut w = christoffel_word(params);
    w.reverse();
    w
}

/// `(n = p + q, k = q^{-1}, p1 = 1)`; the split index is `p`.
pub fn christoffel_sa_params(params: &ChristoffelParams) -> Result<APPerm> {
    APPerm::new(params.n(), params.ratio()?, 1)
}

/// The predicted BWT `b^q a^p`.
pub fn christoffel_bwt(params: &ChristoffelParams) -> Result<BwtProfile<u8>> {
    params.require_proper()?;
    let mut chars = vec![b'b'; params.q];
    chars.resize(params.n(), b'a');
    Ok(BwtProfile::new(chars, BwtSource::Predicted))
}

pub fn christoffel_path(params: &ChristoffelParams) -> LatticePath {
    LatticePath::induced(&christoffel_word(params)).expect("christoffel words are binary")
}

/// Length of the left factor of the balanced factorization, `SA[(p + 2) mod n]`.
///
/// Words of length at most 2 split after their first letter.
pub fn factorization_index(params: &ChristoffelParams) -> Result<usize> {
    let n = params.n();
    if n <= 2 {
        return Ok(1);
    }
    let perm = christoffel_sa_params(params)?;
    Ok(perm.entry(reduce(params.p as i128 + 2, n)))
}

/// The prefix length `i` in `[1..n-1]` whose path vertex is closest to the
/// segment from `(0, 0)` to `(p, q)`, found by scanning all interior vertices.
pub fn closest_path_point(params: &ChristoffelParams) -> Result<usize> {
    params.require_proper()?;
    let (p, q) = (params.p as i128, params.q as i128);
    let path = christoffel_path(params);
    let interior = &path.points()[1..path.len()];
    let best = interior
        .iter()
        .enumerate()
        .min_by_key(|&(_, &(x, y))| (q * x as i128 - p * y as i128).abs())
        .map(|(i, _)| i + 1);
    best.ok_or(Error::InvalidInput(
        "a word of length 1 has no interior vertex".into(),
    ))
}

/// Columns (1-based) where rows `row` and `row + 1` of the sorted rotation matrix differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentDiff {
    pub row: usize,
    pub columns: Vec<usize>,
}

/// Compares each pair of adjacent rows of the BWT matrix of `word`.
///
/// Works on any input; for lower Christoffel words every pair differs in
/// exactly the two columns given by [`predicted_diff_columns`].
pub fn bwt_matrix_adjacent_diffs<T: Ord + Copy>(word: &[T]) -> Vec<AdjacentDiff> {
    let n = word.len();
    let rows = sorted_rotations(word);
    let at = |start: usize, col: usize| word[(start - 1 + col - 1) % n];
    rows.windows(2)
        .enumerate()
        .map(|(i, pair)| AdjacentDiff {
            row: i + 1,
            columns: (1..=n).filter(|&c| at(pair[0], c) != at(pair[1], c)).collect(),
        })
        .collect()
}

/// `(i (n - k) mod n, i (n - k) + 1 mod n)` in the 1-based convention.
///
/// Since `gcd(n - k, n) = 1` and `1 <= i < n`, the first column is never `n`,
/// so the pair is always two consecutive columns with the second at most `n`.
pub fn predicted_diff_columns(n: usize, k: usize, row: usize) -> (usize, usize) {
    let c = row as i128 * (n - k) as i128;
    (reduce(c, n), reduce(c + 1, n))
}
