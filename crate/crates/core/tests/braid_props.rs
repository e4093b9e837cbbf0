use actop_core::braid::{block_sum_braids, cable, mu_br, t_negative, t_positive, BraidWord};
use actop_core::perm::{act_on_list, block_lift, block_sum, mu_sigma, tau};
use proptest::prelude::*;

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letters = if strands < 2 {
        Just(Vec::new()).boxed()
    } else {
        let k = (strands - 1) as i32;
        prop::collection::vec((1..=k, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..=max_len).boxed()
    };
    letters.prop_map(move |ls| BraidWord::new(strands, ls).unwrap())
}

fn same_strands(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (0..=max_n).prop_flat_map(move |n| (word(n, max_len), word(n, max_len)))
}

fn operad_instance() -> impl Strategy<Value = (BraidWord, Vec<BraidWord>)> {
    (1usize..=4).prop_flat_map(|n| (word(n, 6), prop::collection::vec((0usize..=4).prop_flat_map(|k| word(k, 6)), n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn projection_is_a_homomorphism((g, h) in same_strands(6, 12)) {
        let gh = g.product(&h).unwrap();
        prop_assert_eq!(
            gh.underlying_permutation(),
            g.underlying_permutation().product(&h.underlying_permutation()).unwrap()
        );
    }

    #[test]
    fn word_times_inverse_is_trivial(w in (0usize..=6).prop_flat_map(|n| word(n, 20))) {
        prop_assert!(w.product(&w.inverse()).unwrap().is_trivial());
        prop_assert!(w.inverse().product(&w).unwrap().is_trivial());
    }

    #[test]
    fn projection_is_an_operad_map((g, fs) in operad_instance()) {
        let left = mu_br(&g, &fs).unwrap().underlying_permutation();
        let ps: Vec<_> = fs.iter().map(BraidWord::underlying_permutation).collect();
        prop_assert_eq!(left, mu_sigma(&g.underlying_permutation(), &ps).unwrap());
    }

    #[test]
    fn cabling_projects_to_block_lift((g, sizes) in (1usize..=4).prop_flat_map(|n| (word(n, 6), prop::collection::vec(0usize..=3, n)))) {
        let c = cable(&g, &sizes).unwrap();
        prop_assert_eq!(c.underlying_permutation(), block_lift(&g.underlying_permutation(), &sizes).unwrap());
        let ones = vec![1; g.strands()];
        prop_assert!(cable(&g, &ones).unwrap().equal(&g).unwrap());
    }

    #[test]
    fn cabling_is_a_homomorphism(((g, h), sizes) in (1usize..=4).prop_flat_map(|n| (same_strands_exact(n, 5), prop::collection::vec(0usize..=3, n)))) {
        // h acts first, so g sees the cable sizes after h has moved them
        let moved = act_on_list(&h.underlying_permutation(), &sizes).unwrap();
        let left = cable(&g.product(&h).unwrap(), &sizes).unwrap();
        let right = cable(&g, &moved).unwrap().product(&cable(&h, &sizes).unwrap()).unwrap();
        prop_assert_eq!(left.letters(), right.letters());
    }

    #[test]
    fn block_sum_projects_to_block_sum(fs in prop::collection::vec((0usize..=4).prop_flat_map(|k| word(k, 6)), 0..4)) {
        let ps: Vec<_> = fs.iter().map(BraidWord::underlying_permutation).collect();
        prop_assert_eq!(block_sum_braids(&fs).underlying_permutation(), block_sum(&ps));
    }
}

fn same_strands_exact(n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (word(n, max_len), word(n, max_len))
}

#[test]
fn braid_relations_hold() {
    for n in 3..=6 {
        for i in 1..n as i32 - 1 {
            let a = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
            let b = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
            assert!(a.equal(&b).unwrap());
        }
        for i in 1..n as i32 {
            for j in i + 2..n as i32 {
                let a = BraidWord::new(n, vec![i, j]).unwrap();
                let b = BraidWord::new(n, vec![j, i]).unwrap();
                assert!(a.equal(&b).unwrap());
            }
        }
    }
}

#[test]
fn t22_is_not_an_involution() {
    let t = t_positive(2, 2);
    assert_eq!(t.letters(), &[2]);
    assert!(!t.product(&t).unwrap().equal(&BraidWord::identity(4)).unwrap());
    let n = t_negative(2, 2);
    assert_eq!(n.letters(), &[-2]);
}

#[test]
fn t_families_project_to_tau() {
    for m in 1..=5 {
        for n in 1..=5 {
            assert_eq!(t_positive(m, n).underlying_permutation(), tau(m, n));
            assert_eq!(t_negative(m, n).underlying_permutation(), tau(m, n));
            assert!(t_positive(m, n).is_minimal_positive());
            assert!(t_negative(m, n).is_minimal_negative());
        }
    }
}
