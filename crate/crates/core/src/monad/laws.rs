use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::free::{flatten, free_algebra, mult_mu, unit_eta, FreeAlgebra};
use crate::action_operad::{cartesian, ActionOperad};
use crate::error::{Error, Result};
use crate::g_operad::{check_algebra_with, describe, AlgebraStructure, FiniteGOperad, Op};
use crate::perm::act_on_list;
use crate::report::{LawCheck, Report};

/// Largest number of candidate maps the algebra cross-check enumerates.
pub const CROSS_CHECK_LIMIT: u128 = 1 << 16;

fn carrier_name(x: usize) -> String {
    format!("x{x}")
}

/// The text of a class of `P̲P̲X` with its inner classes spelled out.
fn nested<A: ActionOperad>(p: &FiniteGOperad<A>, px: &FreeAlgebra, ppx: &FreeAlgebra, c: usize) -> String {
    ppx.format_class(p, c, &|i| px.format_class(p, i, &carrier_name))
}

/// `(p·g; x̲)` and `(p; π(g)·x̲)` lie in one class, for every member and every `g`.
fn check_classes<A: ActionOperad>(p: &FiniteGOperad<A>, fa: &FreeAlgebra, law: &mut LawCheck) -> Result<()> {
    let g = p.group();
    for i in 0..fa.len() {
        let n = fa.class(i).op.arity;
        let elems = g.elements(n).ok_or(Error::InfiniteGroup(g.name()))?;
        for (q, xs) in fa.members(i) {
            for h in &elems {
                let holds = (|| {
                    let left = fa.class_of(p.act(*q, h)?, xs)?;
                    let right = fa.class_of(*q, &act_on_list(&g.project(h), xs)?)?;
                    Ok(left == right)
                })();
                law.record_result(holds, || {
                    format!("{} with g = {}", fa.format_class(p, i, &carrier_name), g.format_elem(h))
                });
            }
        }
    }
    Ok(())
}

/// `h: P̲X → X` is an algebra for the monad.
fn is_monad_algebra<A: ActionOperad>(
    p: &FiniteGOperad<A>,
    px: &FreeAlgebra,
    ppx: &FreeAlgebra,
    mu: &[usize],
    h: &[usize],
) -> Result<bool> {
    for x in 0..px.carrier_len() {
        if h[unit_eta(p, px, x)?] != x {
            return Ok(false);
        }
    }
    for w in 0..ppx.len() {
        let c = ppx.class(w);
        let pushed: Vec<usize> = c.args.iter().map(|&i| h[i]).collect();
        if h[mu[w]] != h[px.class_of(c.op, &pushed)?] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the monad laws of `P̲` on `X = {0, …, m-1}` within `max_arity`:
/// well-defined classes, both unit laws, associativity on every class of
/// `P̲P̲P̲X`, independence of `μ` from representatives, and the
/// correspondence between `P`-algebras and `P̲`-algebras on `X`.
pub fn check_monad_laws<A: ActionOperad + Clone>(p: &FiniteGOperad<A>, m: usize, max_arity: usize) -> Result<Report> {
    let truncated;
    let p = if max_arity < p.bound() {
        truncated = p.truncate(max_arity)?;
        &truncated
    } else {
        p
    };
    let px = free_algebra(p, m, max_arity)?;
    let ppx = FreeAlgebra::over(p, &px, max_arity)?;
    let pppx = FreeAlgebra::over(p, &ppx, max_arity)?;
    let mut report = Report::new(format!("free {}-algebra monad on {m} elements", p.group().name()));
    report.note(format!("classes: {} in P(X), {} in P(P(X)), {} in P(P(P(X)))", px.len(), ppx.len(), pppx.len()));

    let mut classes = LawCheck::new("monad: classes well defined");
    check_classes(p, &px, &mut classes)?;
    check_classes(p, &ppx, &mut classes)?;
    report.push(classes);

    let mu: Vec<usize> = (0..ppx.len()).map(|w| mult_mu(p, &ppx, &px, w)).collect::<Result<_>>()?;

    let mut left = LawCheck::new("monad: left unit");
    let mut right = LawCheck::new("monad: right unit");
    for c in 0..px.len() {
        let show = || px.format_class(p, c, &carrier_name);
        left.record_result(
            ppx.class_of(p.unit(), &[c]).map(|w| mu[w] == c),
            show,
        );
        let holds = (|| {
            let class = px.class(c);
            let etas = class.args.iter().map(|&x| unit_eta(p, &px, x)).collect::<Result<Vec<_>>>()?;
            Ok(mu[ppx.class_of(class.op, &etas)?] == c)
        })();
        right.record_result(holds, show);
    }
    report.push(left);
    report.push(right);

    let mut defined = LawCheck::new("monad: multiplication independent of representatives");
    for w in 0..ppx.len() {
        for (q, cs) in ppx.members(w) {
            let choices: Vec<Vec<(Op, Vec<usize>)>> = cs.iter().map(|&c| px.members(c).to_vec()).collect();
            for pick in cartesian(&choices) {
                let holds = (|| {
                    let ops: Vec<Op> = pick.iter().map(|(o, _)| *o).collect();
                    let args: Vec<usize> = pick.iter().flat_map(|(_, xs)| xs.iter().copied()).collect();
                    Ok(px.class_of(p.compose(*q, &ops)?, &args)? == mu[w])
                })();
                defined.record_result(holds, || nested(p, &px, &ppx, w));
            }
        }
    }
    report.push(defined);

    let mut assoc = LawCheck::new("monad: associativity");
    for z in 0..pppx.len() {
        let holds = (|| {
            let inner_first = mu[flatten(p, &pppx, &ppx, &ppx, z)?];
            let c = pppx.class(z);
            let flattened: Vec<usize> = c.args.iter().map(|&w| mu[w]).collect();
            let outer_first = mu[ppx.class_of(c.op, &flattened)?];
            Ok(inner_first == outer_first)
        })();
        assoc.record_result(holds, || {
            pppx.format_class(p, z, &|w| nested(p, &px, &ppx, w))
        });
    }
    report.push(assoc);

    cross_check(p, m, &px, &ppx, &mu, &mut report)?;
    Ok(report)
}

fn cross_check<A: ActionOperad>(
    p: &FiniteGOperad<A>,
    m: usize,
    px: &FreeAlgebra,
    ppx: &FreeAlgebra,
    mu: &[usize],
    report: &mut Report,
) -> Result<()> {
    let space = (m as u128).checked_pow(px.len() as u32).unwrap_or(u128::MAX);
    let mut from_monad = LawCheck::new("cross-check: monad algebras are operad algebras");
    let mut monad_count = None;
    let mut derived = Vec::new();
    if space <= CROSS_CHECK_LIMIT && m > 0 {
        let mut count = 0u128;
        for code in 0..space {
            let mut rest = code;
            let h: Vec<usize> = (0..px.len())
                .map(|_| {
                    let v = (rest % m as u128) as usize;
                    rest /= m as u128;
                    v
                })
                .collect();
            if !is_monad_algebra(p, px, ppx, mu, &h)? {
                continue;
            }
            count += 1;
            let alg = AlgebraStructure::from_fn(p, m, |op, xs| {
                px.class_of(op, xs).map(|c| h[c]).unwrap_or(usize::MAX)
            });
            let holds = alg.clone().and_then(|a| check_algebra_with(p, &a, true)).map(|r| r.passed());
            from_monad.record_result(holds, || format!("h = {h:?}"));
            if let Ok(a) = alg {
                derived.push(a);
            }
        }
        monad_count = Some(count);
        report.note(format!("monad algebras on {m} elements: {count}"));
    } else {
        report.note(format!("monad algebras not enumerated: {space} candidate maps"));
    }
    report.push(from_monad);

    let mut from_operad = LawCheck::new("cross-check: operad algebras are monad algebras");
    let slots: Vec<(Op, u128)> = (0..=px.max_arity())
        .flat_map(|n| p.ops(n))
        .map(|op| (op, (m as u128).saturating_pow((m as u128).saturating_pow(op.arity as u32) as u32)))
        .collect();
    let space = slots.iter().fold(1u128, |a, &(_, s)| a.saturating_mul(s));
    if space <= CROSS_CHECK_LIMIT && m > 0 {
        let mut count = 0u128;
        let tables: Vec<usize> = slots.iter().map(|(op, _)| m.pow(op.arity as u32)).collect();
        for code in 0..space {
            let mut rest = code;
            let mut chosen: BTreeMap<Op, Vec<usize>> = BTreeMap::new();
            for ((op, s), &len) in slots.iter().zip(&tables) {
                chosen.insert(*op, crate::g_operad::tuple_at(m, len, (rest % s) as usize));
                rest /= s;
            }
            let alg = AlgebraStructure::from_fn(p, m, |op, xs| match chosen.get(&op) {
                Some(t) => t[crate::g_operad::tuple_index(m, xs)],
                None => 0,
            })?;
            if !check_algebra_with(p, &alg, true)?.passed() {
                continue;
            }
            count += 1;
            let holds = induced_monad_algebra(p, px, ppx, mu, &alg);
            from_operad.record_result(holds, || describe(p, &alg));
        }
        report.note(format!("operad algebras on {m} elements: {count}"));
        if let Some(mc) = monad_count {
            let mut agree = LawCheck::new("cross-check: counts agree");
            agree.record(mc == count, || format!("{mc} monad algebras, {count} operad algebras"));
            report.push(agree);
        }
    } else {
        report.note(format!(
            "operad algebras not enumerated ({space} candidate tables); checking the {} obtained from monad algebras",
            derived.len()
        ));
        for alg in &derived {
            let holds = induced_monad_algebra(p, px, ppx, mu, alg);
            from_operad.record_result(holds, || describe(p, alg));
        }
    }
    report.push(from_operad);
    Ok(())
}

/// `h([p; x̲]) = α(p; x̲)` is well defined on classes and a monad algebra.
fn induced_monad_algebra<A: ActionOperad>(
    p: &FiniteGOperad<A>,
    px: &FreeAlgebra,
    ppx: &FreeAlgebra,
    mu: &[usize],
    alg: &AlgebraStructure,
) -> Result<bool> {
    let mut h = Vec::with_capacity(px.len());
    for c in 0..px.len() {
        let values: Vec<usize> = px.members(c).iter().map(|(op, xs)| alg.eval(*op, xs)).collect();
        if values.iter().any(|&v| v != values[0]) {
            return Ok(false);
        }
        h.push(values[0]);
    }
    is_monad_algebra(p, px, ppx, mu, &h)
}

/// A fixed point `p·g = p` with `π(g) ≠ e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianWitness {
    pub arity: usize,
    pub op: String,
    pub element: String,
}

/// Whether every stabilizer lies in the kernel of `π`, over all arities of
/// the operad. Returns the first violation.
pub fn cartesian_condition<A: ActionOperad>(p: &FiniteGOperad<A>) -> Result<Option<CartesianWitness>> {
    let g = p.group();
    for n in 0..=p.bound() {
        let elems = g.elements(n).ok_or(Error::InfiniteGroup(g.name()))?;
        for op in p.ops(n) {
            for h in &elems {
                if p.act(op, h)? == op && !g.project(h).is_identity() {
                    return Ok(Some(CartesianWitness {
                        arity: n,
                        op: String::from(p.label(op)),
                        element: g.format_elem(h),
                    }));
                }
            }
        }
    }
    Ok(None)
}

const PAIR_NAMES: [&str; 4] = ["(x,y)", "(x,y')", "(x',y)", "(x',y')"];
const X_NAMES: [&str; 2] = ["x", "x'"];
const Y_NAMES: [&str; 2] = ["y", "y'"];

/// Applies `P̲` to the pullback square of `{x, x'} × {y, y'}` over a point and
/// checks that the comparison map `P̲(X ×_Z Y) → P̲X ×_{P̲Z} P̲Y` is a bijection
/// within the operad's bound.
pub fn pullback_witness_test<A: ActionOperad>(p: &FiniteGOperad<A>) -> Result<Report> {
    let bound = p.bound();
    let pa = free_algebra(p, 4, bound)?;
    let pxs = free_algebra(p, 2, bound)?;
    let pys = free_algebra(p, 2, bound)?;
    let pz = free_algebra(p, 1, bound)?;
    let fst = pa.map_carrier(&|a| a / 2, &pxs)?;
    let snd = pa.map_carrier(&|a| a % 2, &pys)?;
    let to_z_x = pxs.map_carrier(&|_| 0, &pz)?;
    let to_z_y = pys.map_carrier(&|_| 0, &pz)?;

    let mut report = Report::new("pullback of {x,x'} x {y,y'} over a point");
    let show_a = |c: usize| pa.format_class(p, c, &|a| String::from(PAIR_NAMES[a]));
    let show_x = |c: usize| pxs.format_class(p, c, &|a| String::from(X_NAMES[a]));
    let show_y = |c: usize| pys.format_class(p, c, &|a| String::from(Y_NAMES[a]));

    let mut injective = LawCheck::new("pullback: comparison map injective");
    let mut image: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in 0..pa.len() {
        let key = (fst[c], snd[c]);
        match image.get(&key) {
            Some(&d) => injective.record(false, || {
                format!("{} and {} both map to ({}, {})", show_a(d), show_a(c), show_x(key.0), show_y(key.1))
            }),
            None => {
                image.insert(key, c);
                injective.record(true, String::new);
            }
        }
    }
    report.push(injective);

    let mut surjective = LawCheck::new("pullback: comparison map surjective");
    for u in 0..pxs.len() {
        for v in 0..pys.len() {
            if to_z_x[u] == to_z_y[v] {
                surjective.record(image.contains_key(&(u, v)), || format!("({}, {}) is not hit", show_x(u), show_y(v)));
            }
        }
    }
    report.push(surjective);
    report.note(format!(
        "classes: {} over the pairs, {} over {{x,x'}}, {} over {{y,y'}}, {} over the point",
        pa.len(),
        pxs.len(),
        pys.len(),
        pz.len()
    ));
    Ok(report)
}
