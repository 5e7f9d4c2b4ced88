//! Randomized invariants complementing the deterministic unit suites. Each
//! property is an exhaustively checked fact restated over sampled inputs at
//! a scale the exhaustive tests do not reach.

use proptest::prelude::*;

use strandalg::bruhat::{canonical_signature, flip_vertex, homology, interval_complex};
use strandalg::combinat::{binomial, enum_subsets, interleaved, poset_leq, unit_diff, IndexSet};
use strandalg::exactla::FieldSpec;
use strandalg::symgrp::{canonical_word, word_to_perm, Permutation, Word};

/// A uniformly shuffled one-line permutation of `{1, .., d}`.
fn perm_strategy(d: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=d as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|line| Permutation::from_one_line(line).unwrap())
}

/// A uniformly chosen `d`-subset of `{1, .., n}`.
fn subset_strategy(n: u32, d: usize) -> impl Strategy<Value = IndexSet> {
    proptest::sample::subsequence((1..=n).collect::<Vec<u32>>(), d)
        .prop_map(move |elems| IndexSet::new(n, elems).unwrap())
}

/// Parameters `(n, d)` with `1 <= d <= n <= 9` plus two subsets at that size.
fn subset_pair() -> impl Strategy<Value = (IndexSet, IndexSet)> {
    (1u32..=9)
        .prop_flat_map(|n| (Just(n), 1..=n as usize))
        .prop_flat_map(|(n, d)| (subset_strategy(n, d), subset_strategy(n, d)))
}

proptest! {
    #[test]
    fn interleaving_refines_the_componentwise_order((i, j) in subset_pair()) {
        if interleaved(&i, &j) {
            prop_assert!(poset_leq(&i, &j), "interleaved but not leq: {i}, {j}");
        }
    }

    #[test]
    fn unit_diff_is_complement_interleaving((i, j) in subset_pair()) {
        prop_assert_eq!(
            unit_diff(&i, &j),
            interleaved(&j.complement(), &i.complement()),
            "patterns disagree on {} -> {}", i, j
        );
    }

    #[test]
    fn interleaving_is_closed_under_complement_reversal((i, j) in subset_pair()) {
        // Both relations above compose: applying the reversal twice returns
        // the original pattern.
        let back = interleaved(
            &i.complement().complement(),
            &j.complement().complement(),
        );
        prop_assert_eq!(interleaved(&i, &j), back);
    }

    #[test]
    fn canonical_words_are_reduced(pi in (1usize..=7).prop_flat_map(perm_strategy)) {
        let w = canonical_word(&pi);
        prop_assert_eq!(w.len(), pi.inv_count());
        let back = word_to_perm(&w, pi.d()).unwrap();
        prop_assert_eq!(back, pi);
    }

    #[test]
    fn word_length_has_the_inversion_parity(
        d in 2usize..=5,
        letters in proptest::collection::vec(1u8..=4, 0..12),
    ) {
        let letters: Vec<u8> = letters.into_iter().filter(|&a| (a as usize) < d).collect();
        let len = letters.len();
        let pi = word_to_perm(&Word::new(letters), d).unwrap();
        prop_assert_eq!(len % 2, pi.inv_count() % 2);
    }

    #[test]
    fn inversions_are_invariant_under_inverse(pi in (1usize..=7).prop_flat_map(perm_strategy)) {
        prop_assert_eq!(pi.inverse().inv_count(), pi.inv_count());
        prop_assert!(pi.compose(&pi.inverse()).is_identity());
    }

    #[test]
    fn binomial_satisfies_the_pascal_recurrence(n in 1u64..=60, k in 1u64..=60) {
        prop_assume!(k < n);
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn subset_enumeration_is_complete_and_ordered(n in 1u32..=9, d in 1usize..=9) {
        prop_assume!(d <= n as usize);
        let all = enum_subsets(n, d);
        prop_assert_eq!(all.len() as u128, binomial(u64::from(n), d as u64));
        for w in all.windows(2) {
            // Colexicographic order: the reversed element lists increase.
            let a: Vec<u32> = w[0].elems().iter().rev().copied().collect();
            let b: Vec<u32> = w[1].elems().iter().rev().copied().collect();
            prop_assert!(a < b, "{:?} !< {:?}", w[0], w[1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flips_preserve_balance_and_homology(
        pi in (2usize..=4).prop_flat_map(perm_strategy),
        picks in proptest::collection::vec(0usize..usize::MAX, 1..8),
    ) {
        let mut sig = canonical_signature(&pi).unwrap();
        let expected = homology(&interval_complex(&pi, &sig, FieldSpec::Fp(2)).unwrap()).unwrap();
        for pick in picks {
            let vertex = sig.interval().elements()[pick % sig.interval().len()].clone();
            sig = flip_vertex(&sig, &vertex).unwrap();
            prop_assert!(sig.is_balanced());
            let h = homology(&interval_complex(&pi, &sig, FieldSpec::Fp(2)).unwrap()).unwrap();
            prop_assert_eq!(&h, &expected, "homology moved after flipping {}", vertex);
        }
    }
}
