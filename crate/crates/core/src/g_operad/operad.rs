use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::collection::{FiniteGCollection, Op};
use crate::action_operad::{bounded_vectors, cartesian, ActionOperad, Drawer, Sampler};
use crate::error::{Error, Result};
use crate::perm::act_on_list;
use crate::report::{LawCheck, Report};

/// A `G`-operad whose levels are finite, truncated at arity `bound`: the
/// composition table holds every `μ(p; q₁, …, qₙ)` whose result has arity at
/// most the bound.
#[derive(Clone, Debug)]
pub struct FiniteGOperad<A: ActionOperad> {
    collection: FiniteGCollection<A>,
    unit: Op,
    table: BTreeMap<(Op, Vec<Op>), Op>,
}

/// All composable signatures `(p; q₁, …, qₙ)` with total arity within `bound`.
pub(crate) fn signatures<A: ActionOperad>(c: &FiniteGCollection<A>, bound: usize) -> Vec<(Op, Vec<Op>)> {
    let mut out = Vec::new();
    for n in 0..=bound.min(c.max_arity()) {
        if c.size(n) == 0 {
            continue;
        }
        for ks in bounded_vectors(n, bound, bound) {
            for qs in op_tuples(c, &ks) {
                for p in c.ops(n) {
                    out.push((p, qs.clone()));
                }
            }
        }
    }
    out
}

/// Every tuple `(q₁, …, qₙ)` with `qᵢ ∈ X(kᵢ)`.
pub(crate) fn op_tuples<A: ActionOperad>(c: &FiniteGCollection<A>, ks: &[usize]) -> Vec<Vec<Op>> {
    let lists: Vec<Vec<Op>> = ks.iter().map(|&k| c.ops(k).collect()).collect();
    cartesian(&lists)
}

/// Number of signatures, saturating, without materializing them.
pub(crate) fn signature_count(sizes: &[u128], bound: usize) -> u128 {
    let size = |k: usize| sizes.get(k).copied().unwrap_or(0);
    // ways[n][s]: tuples of length n with total arity s
    let mut total: u128 = 0;
    let mut ways = alloc::vec![0u128; bound + 1];
    ways[0] = 1;
    for n in 0..=bound {
        let within: u128 = ways.iter().fold(0u128, |a, &w| a.saturating_add(w));
        total = total.saturating_add(size(n).saturating_mul(within));
        let mut next = alloc::vec![0u128; bound + 1];
        for (s, &w) in ways.iter().enumerate() {
            for k in 0..=bound - s {
                next[s + k] = next[s + k].saturating_add(w.saturating_mul(size(k)));
            }
        }
        ways = next;
    }
    total
}

impl<A: ActionOperad> FiniteGOperad<A> {
    /// Assembles an operad from its composition entries, validating shapes,
    /// the right action (finite groups), and that every signature within the
    /// bound has exactly one entry.
    pub fn new(collection: FiniteGCollection<A>, unit: Op, entries: Vec<(Op, Vec<Op>, Op)>) -> Result<Self> {
        let bound = collection.max_arity();
        let in_range = |op: &Op| op.arity <= bound && op.index < collection.size(op.arity);
        if unit.arity != 1 || !in_range(&unit) {
            return Err(Error::Invalid(String::from("unit must be an operation of arity 1")));
        }
        if collection.group().elements(0).is_some() {
            let law = collection.check_action(Sampler::exhaustive(bound, 0, 0))?;
            if let Some(w) = law.counterexample {
                return Err(Error::Invalid(format!("tables do not define a right action: {w}")));
            }
        }
        let mut table = BTreeMap::new();
        for (i, (p, qs, r)) in entries.into_iter().enumerate() {
            let total: usize = qs.iter().map(|q| q.arity).sum();
            if !in_range(&p) || !qs.iter().all(in_range) || !in_range(&r) {
                return Err(Error::Invalid(format!("compose entry {i}: operation out of range")));
            }
            if qs.len() != p.arity {
                return Err(Error::Invalid(format!(
                    "compose entry {i}: {} inputs for an operation of arity {}",
                    qs.len(),
                    p.arity
                )));
            }
            if r.arity != total {
                return Err(Error::Invalid(format!(
                    "compose entry {i}: result has arity {}, inputs total {total}",
                    r.arity
                )));
            }
            if let Some(old) = table.insert((p, qs), r) {
                if old != r {
                    return Err(Error::Invalid(format!("compose entry {i}: conflicting duplicate")));
                }
            }
        }
        for (p, qs) in signatures(&collection, bound) {
            if !table.contains_key(&(p, qs.clone())) {
                let args: Vec<&str> = qs.iter().map(|&q| collection.label(q)).collect();
                return Err(Error::MissingComposite(format!(
                    "{}; {}",
                    collection.label(p),
                    args.join(", ")
                )));
            }
        }
        Ok(FiniteGOperad { collection, unit, table })
    }

    /// Fills the composition table from a function.
    pub fn from_fn<F>(collection: FiniteGCollection<A>, unit: Op, compose: F) -> Result<Self>
    where
        F: Fn(Op, &[Op]) -> Result<Op>,
    {
        let bound = collection.max_arity();
        let entries = signatures(&collection, bound)
            .into_iter()
            .map(|(p, qs)| compose(p, &qs).map(|r| (p, qs, r)))
            .collect::<Result<Vec<_>>>()?;
        FiniteGOperad::new(collection, unit, entries)
    }

    pub fn collection(&self) -> &FiniteGCollection<A> {
        &self.collection
    }

    pub fn group(&self) -> &A {
        self.collection.group()
    }

    /// Largest arity held; composites above it are not tabulated.
    pub fn bound(&self) -> usize {
        self.collection.max_arity()
    }

    pub fn unit(&self) -> Op {
        self.unit
    }

    pub fn label(&self, op: Op) -> &str {
        self.collection.label(op)
    }

    pub fn find(&self, n: usize, label: &str) -> Option<Op> {
        self.collection.find(n, label)
    }

    pub fn ops(&self, n: usize) -> impl Iterator<Item = Op> + '_ {
        self.collection.ops(n)
    }

    pub fn act(&self, op: Op, g: &A::Elem) -> Result<Op> {
        self.collection.act(op, g)
    }

    /// `μ(p; q₁, …, qₙ)`.
    pub fn compose(&self, p: Op, qs: &[Op]) -> Result<Op> {
        if qs.len() != p.arity {
            return Err(Error::ArityMismatch { left: p.arity, right: qs.len() });
        }
        let total: usize = qs.iter().map(|q| q.arity).sum();
        if total > self.bound() {
            return Err(Error::ArityOverflow { arity: total, bound: self.bound() });
        }
        self.table.get(&(p, qs.to_vec())).copied().ok_or_else(|| {
            let args: Vec<&str> = qs.iter().map(|&q| self.label(q)).collect();
            Error::MissingComposite(format!("{}; {}", self.label(p), args.join(", ")))
        })
    }

    /// The operad truncated at arity `k`.
    pub fn truncate(&self, k: usize) -> Result<Self>
    where
        A: Clone,
    {
        let collection = self.collection.truncate(k);
        if k < 1 {
            return Err(Error::Invalid(String::from("truncation must keep the unit")));
        }
        let table = self
            .table
            .iter()
            .filter(|((p, _), r)| p.arity <= k && r.arity <= k)
            .map(|(key, r)| (key.clone(), *r))
            .collect();
        Ok(FiniteGOperad { collection, unit: self.unit, table })
    }

    /// Composition entries in signature order.
    pub fn entries(&self) -> impl Iterator<Item = (Op, &[Op], Op)> + '_ {
        self.table.iter().map(|((p, qs), r)| (*p, qs.as_slice(), *r))
    }

    /// Overwrites one composition entry. Intended for building corrupted
    /// variants in tests.
    pub fn set_composite(&mut self, p: Op, qs: Vec<Op>, result: Op) -> Result<()> {
        let key = (p, qs);
        match self.table.get_mut(&key) {
            Some(r) if r.arity == result.arity => {
                *r = result;
                Ok(())
            }
            Some(r) => Err(Error::ArityMismatch { left: r.arity, right: result.arity }),
            None => Err(Error::MissingComposite(String::from("no such signature"))),
        }
    }

    fn show(&self, p: Op, qs: &[Op]) -> String {
        let args: Vec<&str> = qs.iter().map(|&q| self.label(q)).collect();
        format!("{}; {}", self.label(p), args.join(", "))
    }
}

/// Verifies the action laws, the operad unit and associativity laws within the
/// bound, and both equivariance axioms. Group elements are enumerated for
/// finite groups and drawn by `sampler` otherwise.
pub fn check_operad<A: ActionOperad>(p: &FiniteGOperad<A>, sampler: Sampler) -> Result<Report> {
    let g = p.group();
    let bound = p.bound();
    let mut report = Report::new(format!("{}-operad", g.name()));
    report.push(p.collection.check_action(sampler)?);

    let mut unit = LawCheck::new("operad: unit");
    for n in 0..=bound {
        for x in p.ops(n) {
            let ids = alloc::vec![p.unit; n];
            unit.record_result(p.compose(p.unit, &[x]).map(|y| y == x), || {
                format!("mu({}; {}) != {}", p.label(p.unit), p.label(x), p.label(x))
            });
            unit.record_result(p.compose(x, &ids).map(|y| y == x), || {
                format!("mu({}; id, ..., id) != {}", p.label(x), p.label(x))
            });
        }
    }
    report.push(unit);

    let mut assoc = LawCheck::new("operad: associativity");
    for (x, ys) in signatures(&p.collection, bound) {
        let ks: Vec<usize> = ys.iter().map(|y| y.arity).collect();
        let total: usize = ks.iter().sum();
        let xy = p.compose(x, &ys)?;
        for js in bounded_vectors(total, bound, bound) {
            for zs in op_tuples(&p.collection, &js) {
                let holds = (|| {
                    let left = p.compose(xy, &zs)?;
                    let mut inner = Vec::with_capacity(ys.len());
                    let mut at = 0;
                    for (y, &k) in ys.iter().zip(&ks) {
                        inner.push(p.compose(*y, &zs[at..at + k])?);
                        at += k;
                    }
                    Ok(left == p.compose(x, &inner)?)
                })();
                assoc.record_result(holds, || {
                    let zl: Vec<&str> = zs.iter().map(|&z| p.label(z)).collect();
                    format!("x; y = {}; z = {}", p.show(x, &ys), zl.join(", "))
                });
            }
        }
    }
    report.push(assoc);

    let mut d = Drawer::new(g, Sampler { max_arity: bound, ..sampler })?;
    let reps = d.random_cases().map_or(1, |_| 4);
    let mut eq1 = LawCheck::new("equivariance: inputs");
    let mut eq2 = LawCheck::new("equivariance: outer");
    for (x, ys) in signatures(&p.collection, bound) {
        let n = x.arity;
        let ks: Vec<usize> = ys.iter().map(|y| y.arity).collect();
        let xy = p.compose(x, &ys)?;
        for _ in 0..reps {
            for gs in d.tuples(&ks) {
                let holds = (|| {
                    let moved = ys.iter().zip(&gs).map(|(&y, h)| p.act(y, h)).collect::<Result<Vec<_>>>()?;
                    let left = p.compose(x, &moved)?;
                    let right = p.act(xy, &g.operad_mu(&g.identity(n), &gs)?)?;
                    Ok(left == right)
                })();
                eq1.record_result(holds, || {
                    let gl: Vec<String> = gs.iter().map(|h| g.format_elem(h)).collect();
                    format!("{}; g = {}", p.show(x, &ys), gl.join(", "))
                });
            }
            for gs in d.tuples(&[n]) {
                let h = &gs[0];
                let holds = (|| {
                    let left = p.compose(p.act(x, h)?, &ys)?;
                    let permuted = act_on_list(&g.project(h), &ys)?;
                    let ids: Vec<A::Elem> = ks.iter().map(|&k| g.identity(k)).collect();
                    let right = p.act(p.compose(x, &permuted)?, &g.operad_mu(h, &ids)?)?;
                    Ok(left == right)
                })();
                eq2.record_result(holds, || format!("{}; g = {}", p.show(x, &ys), g.format_elem(h)));
            }
        }
    }
    report.push(eq1);
    report.push(eq2);
    Ok(report)
}
