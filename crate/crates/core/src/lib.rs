//! Strings whose suffix arrays are arithmetically progressed permutations.
//!
//! A permutation `P = [p1, ..., pn]` of `[1..n]` is arithmetically progressed
//! with ratio `k` when every successive difference, including the wrap from
//! `pn` back to `p1`, is `k` modulo `n`. This crate synthesizes texts with
//! such suffix arrays, predicts their Burrows-Wheeler transforms, and relates
//! them to Christoffel, Fibonacci and balanced words.
//!
//! All positions and residues are 1-based; `n mod n` is `n`, not `0`.
//!
//! ```
//! use apsa::{synth, suffix_array, APPerm};
//!
//! let perm = APPerm::new(8, 5, 5).unwrap();
//! let result = synth(&perm);
//! assert_eq!(result.text, "babbabac");
//! assert_eq!(suffix_array(result.text.ranks()).sa(), perm.materialize());
//! ```

pub mod christoffel;
pub mod enumeration;
pub mod error;
pub mod lyndon;
pub mod modular;
pub mod perm;
pub mod synthesis;
pub mod text;
pub mod textindex;

pub use christoffel::{
    bwt_matrix_adjacent_diffs, christoffel_bwt, christoffel_path, christoffel_sa_params,
    christoffel_upper, christoffel_word, closest_path_point, factorization_index,
    ChristoffelParams, LatticePath,
};
pub use enumeration::{
    binomial, brute_force_strings, count_bounds, enumerate_strings, sigma_min, CountReport,
};
pub use error::{Error, Result};
pub use lyndon::{
    balanced2_factorization, balanced_via_bwt, duval_factorization, fibonacci_closed_form,
    fibonacci_swapped, fibonacci_word, is_balanced, is_balanced2, is_lyndon, left_factorization,
    right_factorization, Factorization, FactorizationKind, FibonacciWord,
};
pub use modular::{canonical_residue, gcd, mod_inverse, Residue1};
pub use perm::APPerm;
pub use synthesis::{
    binary_closed_form, canonical_split, classify, required_splits, synth, synth_binary,
    synth_from_split, synth_general, synth_ternary, synth_unary_family, SplitSpec, SynthCase,
    SynthResult,
};
pub use text::{Rank, Text};
pub use textindex::{
    bwt_definitions_agree, bwt_from_matrix, bwt_from_sa, bwt_predict, inverse_sa, run_count,
    suffix_array, BwtProfile, BwtSource, SuffixArrayView,
};
