//! Property tests for the mapping identities.

use proptest::prelude::*;

use parikh::{
    alphabetic_basis_map, alphabetic_map, basis_map, inverse_map, iterate, preimage_count, Basis,
    MappingMode, ParikhVector, Termination,
};

fn strict_vector(max_n: usize) -> impl Strategy<Value = ParikhVector> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n)
            .prop_map(|components| ParikhVector::from_components(components).unwrap())
    })
}

proptest! {
    #[test]
    fn image_is_permutation_invariant(v in strict_vector(9), seed in any::<u64>()) {
        let mut components = v.components().to_vec();
        // deterministic shuffle from the seed
        let mut state = seed;
        for i in (1..components.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            components.swap(i, j);
        }
        let shuffled = ParikhVector::from_components(components).unwrap();
        prop_assert_eq!(
            basis_map(&v, MappingMode::Strict).unwrap(),
            basis_map(&shuffled, MappingMode::Strict).unwrap()
        );
    }

    #[test]
    fn image_sums(v in strict_vector(9)) {
        let image = basis_map(&v, MappingMode::Strict).unwrap();
        prop_assert_eq!(image.plain_sum(), v.basis().size());
        prop_assert_eq!(image.weighted_sum(), v.plain_sum());
    }

    #[test]
    fn both_sums_lock_in_after_two_steps(v in strict_vector(9)) {
        let n = v.basis().size();
        let trajectory = iterate(&v, MappingMode::Strict, 100);
        if trajectory.terminated_by == Termination::CycleFound {
            for state in trajectory.states.iter().skip(1) {
                prop_assert_eq!(state.plain_sum(), n);
            }
            for state in trajectory.states.iter().skip(2) {
                prop_assert_eq!(state.weighted_sum(), n);
            }
        }
    }

    #[test]
    fn ignore_mode_never_errors(n in 2usize..8, components in proptest::collection::vec(0usize..16, 2..8)) {
        if components.len() == n {
            let v = ParikhVector::from_components(components).unwrap();
            let image = basis_map(&v, MappingMode::IgnoreOutOfRange).unwrap();
            // dropped components contribute to neither sum
            let in_range = v.components().iter().filter(|&&c| c < n).count();
            let in_range_sum: usize = v.components().iter().filter(|&&c| c < n).sum();
            prop_assert_eq!(image.plain_sum(), in_range);
            prop_assert_eq!(image.weighted_sum(), in_range_sum);
        }
    }

    #[test]
    fn display_parse_round_trip(v in strict_vector(9)) {
        let parsed: ParikhVector = v.to_string().parse().unwrap();
        prop_assert_eq!(parsed, v);
    }

    #[test]
    fn comma_form_round_trips_any_width(components in proptest::collection::vec(0usize..40, 2..12)) {
        let v = ParikhVector::from_components(components).unwrap();
        let comma: String = v
            .components()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let parsed: ParikhVector = comma.parse().unwrap();
        prop_assert_eq!(parsed, v);
    }

    #[test]
    fn preimages_round_trip(v in strict_vector(6)) {
        // any image is generating, so its preimage set is nonempty and maps back
        let target = basis_map(&v, MappingMode::Strict).unwrap();
        let set = inverse_map(&target).unwrap();
        prop_assert!(set.vectors.contains(&v));
        prop_assert_eq!(set.vectors.len() as u128, preimage_count(&target).unwrap());
        for u in &set.vectors {
            prop_assert_eq!(basis_map(u, MappingMode::Strict).unwrap(), set.target.clone());
        }
    }

    #[test]
    fn word_pipeline_identities(word in "[a-f]{0,40}") {
        let counts = alphabetic_map(&word, None).unwrap();
        prop_assert_eq!(counts.word_length(), word.chars().count());
        // a basis above the word length keeps every count in range
        let basis = Basis::new(word.chars().count() + 2).unwrap();
        let image = alphabetic_basis_map(&counts, basis, MappingMode::Strict).unwrap();
        prop_assert_eq!(image.plain_sum(), counts.distinct_letters());
        prop_assert_eq!(image.weighted_sum(), word.chars().count());
    }
}
