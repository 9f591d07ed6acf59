//! Property tests for the structural invariants that hold on every input,
//! not just the worked examples.

use proptest::prelude::*;

use sa_core::automata::{enumerate_saf, DEFAULT_ENUM_BUDGET};
use sa_core::combinatorics::{factorial, standard_cycle_form, stirling_cycle, PaddedComposition};
use sa_core::involution::{as_fixed, enumerate_lists, involution_step, DEFAULT_LIST_BUDGET};
use sa_core::paths::{code_to_path, path_to_code, PathCode};

fn composition_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=5, 1..=6)
}

proptest! {
    #[test]
    fn stirling_recurrence_holds(i in 1usize..40, j in 0usize..40) {
        let lhs = stirling_cycle(i, j as isize);
        let rhs = stirling_cycle(i - 1, j as isize - 1)
            + stirling_cycle(i - 1, j as isize) * (i - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn stirling_rows_sum_to_factorials(i in 0usize..25) {
        let sum: num_bigint::BigUint = (0..=i).map(|j| stirling_cycle(i, j as isize)).sum();
        prop_assert_eq!(sum, factorial(i));
    }

    #[test]
    fn padding_round_trips_compositions(comp in composition_strategy()) {
        let padded = PaddedComposition::from_composition(&comp).unwrap();
        prop_assert_eq!(padded.delete_zeros(), comp.clone());
        prop_assert_eq!(padded.n(), comp.iter().sum::<usize>());
        // re-validating the raw parts accepts them unchanged
        let again = PaddedComposition::new(padded.parts().to_vec()).unwrap();
        prop_assert_eq!(again, padded);
    }

    #[test]
    fn cycle_form_round_trips(images in Just((1usize..=8).collect::<Vec<_>>()).prop_shuffle()) {
        let perm = standard_cycle_form(&images).unwrap();
        prop_assert_eq!(perm.one_line(), images);
        // standard form: cycles start at their minimum, leaders increase
        let mut prev_leader = 0;
        for cyc in perm.cycles() {
            let leader = cyc[0];
            prop_assert!(cyc.iter().all(|&x| x >= leader));
            prop_assert!(leader > prev_leader);
            prev_leader = leader;
        }
    }

    #[test]
    fn path_codes_round_trip(raw in prop::collection::vec(0usize..100, 2..=36), k in 1usize..=3) {
        // fold arbitrary numbers into a valid weakly increasing height code:
        // position i may hold anything in [prev, ceil((i+1)/k)]
        let len = raw.len() - raw.len() % k;
        prop_assume!(len > 0);
        let mut heights = Vec::with_capacity(len);
        let mut prev = 1usize;
        for (i, &r) in raw[..len].iter().enumerate() {
            let cap = (i + 1).div_ceil(k);
            let b = prev + r % (cap - prev + 1);
            heights.push(b);
            prev = b;
        }
        let code = PathCode::new(k, heights).unwrap();
        let path = code_to_path(&code);
        prop_assert_eq!(path_to_code(&path).unwrap(), code);
    }

    #[test]
    fn canonical_form_is_invariant_under_relabeling(index in 0usize..32, swap in any::<bool>()) {
        // B_2(3) has 32 members; relabeling the two interior vertices must
        // not change the canonical representative
        let all: Vec<_> = enumerate_saf(2, 3, DEFAULT_ENUM_BUDGET).unwrap().collect();
        let a = &all[index % all.len()];
        let perm = if swap { vec![3, 2] } else { vec![2, 3] };
        let relabeled = a.relabel_interior(&perm).unwrap();
        prop_assert_eq!(relabeled.canonicalize().unwrap(), a.canonicalize().unwrap());
    }

    #[test]
    fn involution_is_an_involution(index in 0usize..233) {
        let all: Vec<_> = enumerate_lists(4, DEFAULT_LIST_BUDGET).unwrap().collect();
        let list = &all[index % all.len()];
        if as_fixed(list).is_none() {
            let image = involution_step(list).unwrap();
            prop_assert_eq!(image.weight(), -list.weight());
            prop_assert_eq!(&involution_step(&image).unwrap(), list);
        }
    }
}
