//! The fixed set of law checks behind `actop verify all`.

use actop_core::action_operad::{check_axioms, check_map, Braid, Sampler, Symmetric, Trivial};
use actop_core::braid::BraidWord;
use actop_core::g_operad::examples::{ass, comm, nsass};
use actop_core::g_operad::{
    check_operad, check_unit_laws, compose_collections, count_algebras, count_endo_maps, unit_collection,
    FiniteGCollection, FiniteGOperad,
};
use actop_core::monad::{cartesian_condition, check_monad_laws, pullback_witness_test};
use actop_core::perm::Permutation;
use actop_core::pseudocomm::{braid_theorem_report, symmetric_report};
use actop_core::report::{LawCheck, Report};
use actop_core::action_operad::ActionOperad;
use actop_core::Result;

fn cartesian_agreement<A: ActionOperad>(name: &str, p: &FiniteGOperad<A>, r: &mut Report) -> Result<()> {
    let witness = cartesian_condition(p)?;
    let pullback = pullback_witness_test(p)?;
    let mut c = LawCheck::new(format!("cartesian: {name} verdict agrees with the pullback test"));
    c.record(witness.is_none() == pullback.passed(), || {
        format!("criterion says {}, pullback test says {}", witness.is_none(), pullback.passed())
    });
    r.push(c);
    r.note(match witness {
        None => format!("{name}: CARTESIAN: YES"),
        Some(w) => format!("{name}: CARTESIAN: NO ({} . {} = {} in arity {})", w.op, w.element, w.op, w.arity),
    });
    Ok(())
}

fn small_collections() -> Result<Vec<FiniteGCollection<Symmetric>>> {
    let l = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Ok(vec![
        FiniteGCollection::with_trivial_action(Symmetric, vec![l(&[]), l(&["a"]), l(&["b"])], true)?,
        FiniteGCollection::new(Symmetric, vec![(l(&[]), vec![]), (l(&[]), vec![]), (l(&["u", "v"]), vec![vec![1, 0]])], true)?,
        FiniteGCollection::with_trivial_action(Symmetric, vec![l(&["z"]), l(&["a", "a2"]), l(&["b"])], true)?,
    ])
}

fn composition_report() -> Result<Report> {
    let mut r = Report::new("composition product, arity <= 3");
    let i = unit_collection(&Symmetric)?;
    let cs = small_collections()?;
    for x in &cs {
        r.extend(check_unit_laws(x, &i, 3)?);
    }
    let mut assoc = LawCheck::new("composition product: associativity of class counts");
    for x in &cs {
        for y in &cs[..2] {
            for z in &cs[..2] {
                let left = compose_collections(&compose_collections(x, y, 3)?.collection, z, 3)?;
                let right = compose_collections(x, &compose_collections(y, z, 3)?.collection, 3)?;
                for n in 0..=3 {
                    assoc.record(left.class_count(n) == right.class_count(n), || format!("arity {n}"));
                }
            }
        }
    }
    r.push(assoc);
    Ok(r)
}

/// Runs every suite. `budget` is the number of random cases per law for the
/// braid groups.
pub fn verify_all(seed: u64, budget: usize) -> Result<Vec<(String, Report)>> {
    let mut out = Vec::new();
    out.push(("trivial action operad".into(), check_axioms(&Trivial, Sampler::exhaustive(3, 3, 9))?));
    out.push(("symmetric action operad".into(), check_axioms(&Symmetric, Sampler::exhaustive(3, 2, 6))?));
    out.push(("braid action operad".into(), check_axioms(&Braid, Sampler::random(seed, budget, 4, 6))?));

    let mut maps = Report::new("maps of action operads");
    maps.extend(check_map(&Trivial, &Symmetric, |g| Permutation::identity(g.arity), Sampler::exhaustive(3, 2, 6))?);
    maps.extend(check_map(
        &Braid,
        &Symmetric,
        |g: &BraidWord| g.underlying_permutation(),
        Sampler::random(seed, budget, 4, 6),
    )?);
    maps.extend(check_map(&Symmetric, &Symmetric, |g: &Permutation| g.clone(), Sampler::exhaustive(3, 2, 6))?);
    out.push(("maps".into(), maps));

    out.push(("pseudo-commutativity, symmetric".into(), symmetric_report(3)?));
    out.push(("pseudo-commutativity, braid".into(), braid_theorem_report(3)?));

    let mut operads = Report::new("builtin operads, arity <= 3");
    operads.extend(check_operad(&comm(3)?, Sampler::exhaustive(3, 3, 3))?);
    operads.extend(check_operad(&ass(3)?, Sampler::exhaustive(3, 3, 3))?);
    operads.extend(check_operad(&nsass(3)?, Sampler::exhaustive(3, 3, 3))?);
    out.push(("operads".into(), operads));

    let mut monad = Report::new("free algebra monads on 2 generators, arity <= 3");
    monad.extend(check_monad_laws(&comm(3)?, 2, 3)?);
    monad.extend(check_monad_laws(&ass(3)?, 2, 3)?);
    out.push(("monads".into(), monad));

    let mut cart = Report::new("cartesian criterion");
    cartesian_agreement("comm", &comm(3)?, &mut cart)?;
    cartesian_agreement("ass", &ass(3)?, &mut cart)?;
    cartesian_agreement("nsass", &nsass(3)?, &mut cart)?;
    out.push(("cartesian".into(), cart));

    out.push(("composition product".into(), composition_report()?));

    let mut alg = Report::new("algebras on 2 elements, arity <= 2");
    let c2 = comm(2)?;
    let (a, e) = (count_algebras(&c2, 2, 1 << 20)?, count_endo_maps(&c2, 2, 1 << 20)?);
    let mut same = LawCheck::new("comm: algebras = operad maps into the endomorphism operad");
    same.record(a == e, || format!("{a} algebras, {e} maps"));
    alg.push(same);
    alg.note(format!("comm: {a} algebras, {e} maps"));
    out.push(("algebra count".into(), alg));
    Ok(out)
}
