use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::collection::Op;
use super::endo::{endo_op, endo_table, endomorphism_operad, tuple_at, tuple_index};
use super::operad::{signatures, FiniteGOperad};
use crate::action_operad::{cartesian, ActionOperad};
use crate::error::{Error, Result};
use crate::perm::act_on_list;
use crate::report::{LawCheck, Report};

/// Structure maps `α(p; x₁, …, xₙ)` of an algebra on `X = {0, …, m-1}`, one
/// value table per operation (inputs in lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStructure {
    carrier: usize,
    maps: BTreeMap<Op, Vec<usize>>,
}

impl AlgebraStructure {
    /// Tabulates `f` on every operation of `p`.
    pub fn from_fn<A, F>(p: &FiniteGOperad<A>, carrier: usize, f: F) -> Result<Self>
    where
        A: ActionOperad,
        F: Fn(Op, &[usize]) -> usize,
    {
        let mut maps = BTreeMap::new();
        for n in 0..=p.bound() {
            let len = carrier.checked_pow(n as u32).ok_or(Error::TooLarge {
                requested: u128::MAX,
                limit: usize::MAX as u128,
            })?;
            for op in p.ops(n) {
                let table: Vec<usize> = (0..len).map(|i| f(op, &tuple_at(carrier, n, i))).collect();
                if let Some(&v) = table.iter().find(|&&v| v >= carrier) {
                    return Err(Error::Invalid(format!("value {v} is outside the carrier")));
                }
                maps.insert(op, table);
            }
        }
        Ok(AlgebraStructure { carrier, maps })
    }

    /// The algebra corresponding to an operad map `P → 𝓔_X`.
    pub fn from_endo_map<A: ActionOperad>(p: &FiniteGOperad<A>, carrier: usize, map: &BTreeMap<Op, Op>) -> Result<Self> {
        Self::from_fn(p, carrier, |op, xs| endo_table(carrier, map[&op])[tuple_index(carrier, xs)])
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn eval(&self, op: Op, xs: &[usize]) -> usize {
        self.maps[&op][tuple_index(self.carrier, xs)]
    }

    /// The operad map `P → 𝓔_X` sending `p` to `α(p; -)`.
    pub fn to_endo_map(&self) -> BTreeMap<Op, Op> {
        self.maps.iter().map(|(&op, t)| (op, endo_op(self.carrier, op.arity, t))).collect()
    }
}

/// Checks the unit law, associativity within the bound, and equivariance
/// `α(p·g; x̲) = α(p; π(g)·x̲)` for every group element (finite groups) or
/// every generator (otherwise).
pub fn check_algebra<A: ActionOperad>(p: &FiniteGOperad<A>, alg: &AlgebraStructure) -> Result<Report> {
    check_algebra_with(p, alg, false)
}

/// As [`check_algebra`]; with `stop_early` every law stops at its first
/// failure.
pub fn check_algebra_with<A: ActionOperad>(p: &FiniteGOperad<A>, alg: &AlgebraStructure, stop_early: bool) -> Result<Report> {
    let m = alg.carrier;
    let g = p.group();
    let mut report = Report::new(format!("algebra on {m} elements"));
    let points = |n: usize| -> Vec<Vec<usize>> { cartesian(&alloc::vec![(0..m).collect::<Vec<_>>(); n]) };

    let mut unit = LawCheck::new("algebra: unit");
    for x in 0..m {
        unit.record(alg.eval(p.unit(), &[x]) == x, || format!("alpha(id; {x})"));
    }
    let stop = stop_early && !unit.passed();
    report.push(unit);
    if stop {
        return Ok(report);
    }

    let mut assoc = LawCheck::new("algebra: associativity");
    'outer: for (x, ys) in signatures(p.collection(), p.bound()) {
        let xy = p.compose(x, &ys)?;
        for xs in points(xy.arity) {
            let mut at = 0;
            let inner: Vec<usize> = ys
                .iter()
                .map(|&y| {
                    let v = alg.eval(y, &xs[at..at + y.arity]);
                    at += y.arity;
                    v
                })
                .collect();
            assoc.record(alg.eval(xy, &xs) == alg.eval(x, &inner), || {
                let ls: Vec<&str> = ys.iter().map(|&y| p.label(y)).collect();
                format!("{}; {} at {:?}", p.label(x), ls.join(", "), xs)
            });
            if stop_early && !assoc.passed() {
                break 'outer;
            }
        }
    }
    let stop = stop_early && !assoc.passed();
    report.push(assoc);
    if stop {
        return Ok(report);
    }

    let mut equi = LawCheck::new("algebra: equivariance");
    'outer2: for n in 0..=p.bound() {
        let elems = g.elements(n).unwrap_or_else(|| (1..=g.generator_count(n)).map(|i| g.generator(n, i)).collect());
        for op in p.ops(n) {
            for h in &elems {
                let moved = p.act(op, h)?;
                let perm = g.project(h);
                for xs in points(n) {
                    let permuted = act_on_list(&perm, &xs)?;
                    equi.record(alg.eval(moved, &xs) == alg.eval(op, &permuted), || {
                        format!("{} . {} at {:?}", p.label(op), g.format_elem(h), xs)
                    });
                    if stop_early && !equi.passed() {
                        break 'outer2;
                    }
                }
            }
        }
    }
    report.push(equi);
    Ok(report)
}

/// Counts algebra structures on an `m`-element set by enumerating every
/// assignment of value tables and running [`check_algebra_with`].
pub fn count_algebras<A: ActionOperad>(p: &FiniteGOperad<A>, m: usize, limit: u128) -> Result<u128> {
    let slots: Vec<(Op, usize)> = (0..=p.bound())
        .flat_map(|n| p.ops(n).map(move |op| (op, n)))
        .map(|(op, n)| (op, m.pow(m.pow(n as u32) as u32)))
        .collect();
    let total = slots.iter().fold(1u128, |a, &(_, s)| a.saturating_mul(s as u128));
    if total > limit {
        return Err(Error::TooLarge { requested: total, limit });
    }
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let mut choice = BTreeMap::new();
        for &(op, s) in &slots {
            choice.insert(op, tuple_at(m, m.pow(op.arity as u32), (rest % s as u128) as usize));
            rest /= s as u128;
        }
        let alg = AlgebraStructure { carrier: m, maps: choice };
        if check_algebra_with(p, &alg, true)?.passed() {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts maps of `G`-operads `P → 𝓔_X` for `|X| = m`: assignments of an
/// endomorphism to every operation that preserve the unit, composition and
/// the action, checked inside the endomorphism operad.
pub fn count_endo_maps<A: ActionOperad + Clone>(p: &FiniteGOperad<A>, m: usize, limit: u128) -> Result<u128> {
    let e = endomorphism_operad(m, p.group().clone(), p.bound())?;
    let ops: Vec<Op> = (0..=p.bound()).flat_map(|n| p.ops(n)).collect();
    let sizes: Vec<usize> = ops.iter().map(|op| e.collection().size(op.arity)).collect();
    let total = sizes.iter().fold(1u128, |a, &s| a.saturating_mul(s as u128));
    if total > limit {
        return Err(Error::TooLarge { requested: total, limit });
    }
    let sigs = signatures(p.collection(), p.bound());
    let g = p.group();
    let gens: Vec<Vec<A::Elem>> = (0..=p.bound())
        .map(|n| g.elements(n).unwrap_or_else(|| (1..=g.generator_count(n)).map(|i| g.generator(n, i)).collect()))
        .collect();
    let mut count = 0;
    'codes: for code in 0..total {
        let mut rest = code;
        let mut f = BTreeMap::new();
        for (&op, &s) in ops.iter().zip(&sizes) {
            f.insert(op, Op::new(op.arity, (rest % s as u128) as usize));
            rest /= s as u128;
        }
        if f[&p.unit()] != e.unit() {
            continue;
        }
        for &op in &ops {
            for h in &gens[op.arity] {
                if f[&p.act(op, h)?] != e.act(f[&op], h)? {
                    continue 'codes;
                }
            }
        }
        for (x, ys) in &sigs {
            let images: Vec<Op> = ys.iter().map(|y| f[y]).collect();
            if f[&p.compose(*x, ys)?] != e.compose(f[x], &images)? {
                continue 'codes;
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Text for an algebra: one line per operation with its value table.
pub fn describe<A: ActionOperad>(p: &FiniteGOperad<A>, alg: &AlgebraStructure) -> String {
    let mut out = String::new();
    for (op, t) in &alg.maps {
        let vals: Vec<String> = t.iter().map(|v| format!("{v}")).collect();
        out.push_str(&format!("{}: {}\n", p.label(*op), vals.join(" ")));
    }
    out
}
