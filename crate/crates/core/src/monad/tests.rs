use alloc::string::String;

use super::*;
use crate::action_operad::instance_braid;
use crate::g_operad::examples::{ass, comm, nsass, terminal};

#[test]
fn class_counts() {
    let c = comm(3).unwrap();
    let a = ass(3).unwrap();
    let pc = free_algebra(&c, 2, 3).unwrap();
    let pa = free_algebra(&a, 2, 3).unwrap();
    // multisets of size n from 2 elements, and ordered tuples
    assert_eq!([pc.count(0), pc.count(1), pc.count(2), pc.count(3)], [1, 2, 3, 4]);
    assert_eq!([pa.count(0), pa.count(1), pa.count(2), pa.count(3)], [1, 2, 4, 8]);
    let empty = free_algebra(&c, 0, 3).unwrap();
    assert_eq!(empty.len(), 1);
    assert_eq!(empty.class(0).op.arity, 0);
}

#[test]
fn classes_identify_permuted_tuples() {
    let c = comm(2).unwrap();
    let pc = free_algebra(&c, 2, 2).unwrap();
    let c2 = c.find(2, "c2").unwrap();
    assert_eq!(pc.class_of(c2, &[0, 1]).unwrap(), pc.class_of(c2, &[1, 0]).unwrap());
    let name = |x: usize| String::from(["x", "y"][x]);
    assert_eq!(pc.format_class(&c, pc.class_of(c2, &[1, 0]).unwrap(), &name), "[c2; x,y]");
}

#[test]
fn free_algebra_needs_a_finite_group() {
    let p = terminal(instance_braid(), "c", 2).unwrap();
    assert!(matches!(free_algebra(&p, 2, 2), Err(crate::Error::InfiniteGroup(_))));
}

#[test]
fn multiplication_reports_overflow() {
    let c = comm(2).unwrap();
    let px = free_algebra(&c, 2, 2).unwrap();
    let wide = FreeAlgebra::weighted(&c, (0..px.len()).map(|i| px.weight(i)).collect(), 4, 2).unwrap();
    let c2 = c.find(2, "c2").unwrap();
    let pair = px.class_of(c2, &[0, 1]).unwrap();
    let z = wide.class_of(c2, &[pair, pair]).unwrap();
    assert!(matches!(mult_mu(&c, &wide, &px, z), Err(crate::Error::ArityOverflow { .. })));
}

#[test]
fn monad_laws_hold() {
    for r in [
        check_monad_laws(&comm(3).unwrap(), 2, 3).unwrap(),
        check_monad_laws(&ass(3).unwrap(), 2, 3).unwrap(),
        check_monad_laws(&nsass(3).unwrap(), 2, 3).unwrap(),
    ] {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn corrupted_composition_breaks_associativity() {
    let mut c = ass(3).unwrap();
    let s12 = c.find(2, "s12").unwrap();
    let s1 = c.find(1, "s1").unwrap();
    let s21 = c.find(2, "s21").unwrap();
    c.set_composite(s12, alloc::vec![s1, s1], s21).unwrap();
    let r = check_monad_laws(&c, 2, 3).unwrap();
    assert!(!r.passed());
}

#[test]
fn cartesian_verdicts_agree_with_pullbacks() {
    let c = comm(3).unwrap();
    let w = cartesian_condition(&c).unwrap().unwrap();
    assert_eq!((w.arity, w.op.as_str()), (2, "c2"));
    let r = pullback_witness_test(&c).unwrap();
    assert!(!r.passed());
    let inj = r.get("pullback: comparison map injective").unwrap();
    assert!(inj.counterexample.as_ref().unwrap().contains("[c2; x,x']"), "{r}");

    let a = ass(3).unwrap();
    assert!(cartesian_condition(&a).unwrap().is_none());
    assert!(pullback_witness_test(&a).unwrap().passed());

    let t = nsass(3).unwrap();
    assert!(cartesian_condition(&t).unwrap().is_none());
    assert!(pullback_witness_test(&t).unwrap().passed());
}

#[test]
fn relabelling_the_carrier_permutes_classes() {
    let c = comm(3).unwrap();
    let px = free_algebra(&c, 3, 3).unwrap();
    let f = [2, 0, 1];
    let image = px.map_carrier(&|x| f[x], &px).unwrap();
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), px.len());
}
