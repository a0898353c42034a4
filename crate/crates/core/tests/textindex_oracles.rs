mod common;

use apsa::{
    bwt_definitions_agree, bwt_from_matrix, bwt_from_sa, bwt_predict, classify, inverse_sa,
    run_count, suffix_array, synth, synth_ternary, textindex::bwt_predict_with_split, SynthCase,
};
use common::{all_perms, all_words, naive_sa};
use proptest::prelude::*;

#[test]
fn prefix_doubling_matches_naive_sort_exhaustively() {
    for sigma in 1..=3 {
        for n in 1..=12 {
            for w in all_words(n, sigma) {
                assert_eq!(suffix_array(&w).sa(), naive_sa(&w), "{w:?}");
            }
        }
    }
}

#[test]
fn inverse_sa_rejects_non_permutations() {
    assert!(inverse_sa(&[1, 1, 2]).is_err());
    assert!(inverse_sa(&[0, 1]).is_err());
    assert_eq!(inverse_sa(&[3, 1, 2]).unwrap(), [2, 3, 1]);
}

#[test]
fn both_bwts_agree_on_three_way_split_strings() {
    for n in 2..=64 {
        for perm in all_perms(n).into_iter().filter(|p| !p.is_reversal()) {
            let text = synth_ternary(&perm).unwrap().text;
            assert!(bwt_definitions_agree(text.ranks()), "{perm}");
        }
    }
}

#[test]
fn binary2_strings_can_disagree() {
    assert!(!bwt_definitions_agree(b"bbabbabb"));
    let sa = suffix_array(b"bbabbabb").into_sa();
    assert_eq!(bwt_from_sa(b"bbabbabb", &sa).unwrap().to_plain_string(), "bbbbbaab");
    assert_eq!(bwt_from_matrix(b"bbabbabb").to_plain_string(), "bbbbbaba");
}

#[test]
fn predicted_bwt_matches_suffix_array_bwt() {
    for n in 2..=64 {
        for perm in all_perms(n).into_iter().filter(|p| !p.is_reversal()) {
            let r = synth_ternary(&perm).unwrap();
            let sa = perm.materialize();
            let actual = bwt_from_sa(r.text.ranks(), &sa).unwrap();
            assert_eq!(bwt_predict(&perm).unwrap(), actual, "{perm}");

            // the prediction only needs the split, so it also covers the dispatcher's output
            let s = synth(&perm);
            let actual = bwt_from_sa(s.text.ranks(), &sa).unwrap();
            assert_eq!(bwt_predict_with_split(&perm, &s.split), actual, "{perm}");
        }
    }
}

#[test]
fn run_counts_equal_alphabet_size_of_three_way_split_strings() {
    for n in 3..=64 {
        for perm in all_perms(n).into_iter().filter(|p| !p.is_reversal()) {
            let runs = run_count(&bwt_predict(&perm).unwrap());
            let expected = match classify(&perm).0 {
                SynthCase::Binary1 | SynthCase::Binary3 => 2,
                _ => 3,
            };
            assert_eq!(runs, expected, "{perm}");
            assert_eq!(runs as u32, synth_ternary(&perm).unwrap().text.max_rank());
        }
    }
}

#[test]
fn isa_closed_form_for_synthesized_strings() {
    for n in 2..=64 {
        for perm in all_perms(n) {
            let text = synth(&perm).text;
            let isa = suffix_array(text.ranks()).isa();
            let (last, kinv) = (perm.last() as i128, perm.k_inverse() as i128);
            for i in 1..=n {
                let expected = ((i as i128 - last) * kinv).rem_euclid(n as i128);
                let expected = if expected == 0 { n } else { expected as usize };
                assert_eq!(isa[i - 1], expected);
            }
        }
    }
}

proptest! {
    #[test]
    fn suffix_array_matches_naive_on_random_text(w in proptest::collection::vec(0u8..6, 1..300)) {
        prop_assert_eq!(suffix_array(&w).into_sa(), naive_sa(&w));
    }

    #[test]
    fn sa_and_isa_are_inverse(w in proptest::collection::vec(0u8..4, 1..200)) {
        let view = suffix_array(&w);
        let isa = view.isa();
        for (i, &p) in view.sa().iter().enumerate() {
            prop_assert_eq!(isa[p - 1], i + 1);
        }
        prop_assert_eq!(inverse_sa(view.sa()).unwrap(), isa);
    }
}
