mod common;

use apsa::{gcd, mod_inverse, APPerm};
use common::all_perms;
use proptest::prelude::*;

#[test]
fn detect_inverts_materialize() {
    for n in 1..=64 {
        for perm in all_perms(n) {
            assert_eq!(APPerm::detect(&perm.materialize()), Some(perm));
        }
    }
}

#[test]
fn inverse_composes_to_identity() {
    for n in 1..=64 {
        for perm in all_perms(n) {
            let p = perm.materialize();
            let inv = perm.inverse().materialize();
            assert!((1..=n).all(|i| inv[p[i - 1] - 1] == i), "{perm}");
            assert_eq!(perm.inverse().k(), perm.k_inverse());
        }
    }
}

#[test]
fn non_coprime_ratio_never_gives_a_permutation() {
    for n in 2..=64usize {
        for k in (1..n).filter(|&k| gcd(k, n) != 1) {
            for p1 in 1..=n {
                let seq: Vec<usize> = (0..n).map(|i| (p1 - 1 + i * k) % n + 1).collect();
                assert_eq!(APPerm::detect(&seq), None);
                assert!(APPerm::new(n, k, p1).is_err());
            }
        }
    }
}

#[test]
fn mod_inverse_is_an_involution() {
    for n in 2..=200usize {
        for k in (1..n).filter(|&k| gcd(k, n) == 1) {
            let inv = mod_inverse(k as i64, n).unwrap().value();
            assert_eq!(mod_inverse(inv as i64, n).unwrap().value(), k);
            assert_eq!(k * inv % n, 1 % n);
        }
    }
}

#[test]
fn rotation_matches_array_rotation() {
    for n in 1..=24 {
        for perm in all_perms(n) {
            let p = perm.materialize();
            for m in 0..n {
                let mut expected = p.clone();
                expected.rotate_left(m);
                assert_eq!(perm.rotate(m).unwrap().materialize(), expected);
            }
            assert!(perm.rotate(n).is_err());
        }
    }
}

proptest! {
    #[test]
    fn detect_agrees_with_definition(v in proptest::collection::vec(1usize..10, 1..10)) {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        let is_perm = v.iter().all(|&x| x <= n && !std::mem::replace(&mut seen[x], true));
        let expected = is_perm && {
            let diffs: Vec<usize> = v.windows(2).map(|w| (w[1] + n - w[0]) % n).collect();
            diffs.windows(2).all(|d| d[0] == d[1])
        };
        prop_assert_eq!(APPerm::detect(&v).is_some(), expected);
    }

    #[test]
    fn index_of_inverts_entry(n in 2usize..500, k_seed in 1usize..500, p1_seed in 0usize..500) {
        let k = (1..n).cycle().skip(k_seed % (n - 1)).find(|&k| gcd(k, n) == 1).unwrap();
        let perm = APPerm::new(n, k, p1_seed % n + 1).unwrap();
        for i in 1..=n {
            prop_assert_eq!(perm.index_of(perm.entry(i)), i);
        }
    }
}
