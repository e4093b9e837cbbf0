//! The composition product `X ∘ Y` of finite `G`-collections.
//!
//! `(X ∘ Y)(n)` is the set of tuples `(x; y₁, …, y_r; g)` with `x ∈ X(r)`,
//! `yᵢ ∈ Y(kᵢ)`, `Σkᵢ = n` and `g ∈ G(n)`, modulo the relation generated by
//!
//! - `(x·h; y₁, …, y_r; g) ~ (x; y_{π(h)⁻¹(1)}, …, y_{π(h)⁻¹(r)}; μ(h; e_{k₁}, …, e_{k_r}) g)`
//! - `(x; y₁, …, y_r; μ(e_r; g₁, …, g_r) g) ~ (x; y₁·g₁, …, y_r·g_r; g)`
//!
//! Classes are computed by union–find over the full tuple set; each class is
//! represented by its least member.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::collection::{FiniteGCollection, Op};
use super::operad::op_tuples;
use crate::action_operad::{cartesian, ActionOperad};
use crate::error::{Error, Result};
use crate::perm::act_on_list;
use crate::report::{LawCheck, Report};

/// A representative `(x; y₁, …, y_r; g)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tuple<E> {
    pub x: Op,
    pub ys: Vec<Op>,
    pub g: E,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Keeps the smaller index as root, so roots are least members.
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a < b {
            self.parent[b] = a;
        } else {
            self.parent[a] = b;
        }
    }
}

/// `X ∘ Y` truncated at arity `bound`.
pub struct Composite<A: ActionOperad> {
    /// Canonical representatives per arity, in increasing order.
    pub classes: Vec<Vec<Tuple<A::Elem>>>,
    lookup: Vec<BTreeMap<Tuple<A::Elem>, usize>>,
    /// The classes as a collection, labelled by their representatives.
    pub collection: FiniteGCollection<A>,
}

impl<A: ActionOperad> Composite<A> {
    pub fn class_count(&self, n: usize) -> usize {
        self.classes.get(n).map_or(0, Vec::len)
    }

    /// The class containing a tuple.
    pub fn class_of(&self, t: &Tuple<A::Elem>) -> Option<Op> {
        self.lookup.iter().enumerate().find_map(|(n, m)| m.get(t).map(|&i| Op::new(n, i)))
    }
}

fn compositions(n: usize, parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for i in 0..parts {
        let mut next = Vec::new();
        for v in &out {
            let s: usize = v.iter().sum();
            let rest = n - s;
            if i + 1 == parts {
                if rest <= max_part {
                    let mut w = v.clone();
                    w.push(rest);
                    next.push(w);
                }
            } else {
                for k in 0..=rest.min(max_part) {
                    let mut w = v.clone();
                    w.push(k);
                    next.push(w);
                }
            }
        }
        out = next;
    }
    if parts == 0 && n != 0 {
        out.clear();
    }
    out
}

/// Computes `(X ∘ Y)(n)` for `n ≤ bound`. Both collections must be over the
/// same finite action operad and known far enough: `Y` up to `bound`, and
/// `X` up to every arity a tuple could use. The result is complete when both
/// inputs are and `bound ≥ max(X)·max(Y)`.
pub fn compose_collections<A>(x: &FiniteGCollection<A>, y: &FiniteGCollection<A>, bound: usize) -> Result<Composite<A>>
where
    A: ActionOperad + Clone,
{
    let group = x.group();
    if group.elements(0).is_none() {
        return Err(Error::InfiniteGroup(group.name()));
    }
    if !y.is_complete() && y.max_arity() < bound {
        return Err(Error::ArityOverflow { arity: bound, bound: y.max_arity() });
    }
    let nullary = y.size(0) > 0;
    if !x.is_complete() && nullary {
        return Err(Error::Invalid(format!(
            "the left collection is truncated at arity {} but the right one has nullary elements",
            x.max_arity()
        )));
    }
    if !x.is_complete() && x.max_arity() < bound {
        return Err(Error::ArityOverflow { arity: bound, bound: x.max_arity() });
    }
    let max_r = if nullary { x.max_arity() } else { bound.min(x.max_arity()) };
    let max_k = y.max_arity().min(bound);

    let mut classes = Vec::with_capacity(bound + 1);
    let mut lookup = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let gs = group.elements(n).expect("finite group");
        let mut tuples: Vec<Tuple<A::Elem>> = Vec::new();
        for r in 0..=max_r {
            if x.size(r) == 0 {
                continue;
            }
            for ks in compositions(n, r, max_k) {
                for ys in op_tuples(y, &ks) {
                    for xo in x.ops(r) {
                        for g in &gs {
                            tuples.push(Tuple { x: xo, ys: ys.clone(), g: g.clone() });
                        }
                    }
                }
            }
        }
        tuples.sort();
        let index: BTreeMap<Tuple<A::Elem>, usize> =
            tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let at = |t: &Tuple<A::Elem>| -> Result<usize> {
            index.get(t).copied().ok_or_else(|| Error::Invalid(String::from("relation leaves the tuple set")))
        };
        let mut uf = UnionFind::new(tuples.len());
        let mut cache: BTreeMap<usize, Vec<A::Elem>> = BTreeMap::new();
        for t in &tuples {
            let r = t.x.arity;
            let ks: Vec<usize> = t.ys.iter().map(|q| q.arity).collect();
            let hs = cache.entry(r).or_insert_with(|| group.elements(r).expect("finite group")).clone();
            let ids: Vec<A::Elem> = ks.iter().map(|&k| group.identity(k)).collect();
            for h in &hs {
                let a = Tuple { x: x.act(t.x, h)?, ys: t.ys.clone(), g: t.g.clone() };
                let b = Tuple {
                    x: t.x,
                    ys: act_on_list(&group.project(h), &t.ys)?,
                    g: group.multiply(&group.operad_mu(h, &ids)?, &t.g)?,
                };
                uf.union(at(&a)?, at(&b)?);
            }
            let lists: Vec<Vec<A::Elem>> = ks
                .iter()
                .map(|&k| cache.entry(k).or_insert_with(|| group.elements(k).expect("finite group")).clone())
                .collect();
            for hs in cartesian(&lists) {
                let mu = group.operad_mu(&group.identity(r), &hs)?;
                let a = Tuple { x: t.x, ys: t.ys.clone(), g: group.multiply(&mu, &t.g)? };
                let moved = t.ys.iter().zip(&hs).map(|(&q, h)| y.act(q, h)).collect::<Result<Vec<_>>>()?;
                let b = Tuple { x: t.x, ys: moved, g: t.g.clone() };
                uf.union(at(&a)?, at(&b)?);
            }
        }
        let mut reps: Vec<usize> = Vec::new();
        let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..tuples.len() {
            let root = uf.find(i);
            if root == i {
                class_index.insert(i, reps.len());
                reps.push(i);
            }
        }
        let mut level = BTreeMap::new();
        for (i, t) in tuples.iter().enumerate() {
            level.insert(t.clone(), class_index[&uf.find(i)]);
        }
        classes.push(reps.into_iter().map(|i| tuples[i].clone()).collect::<Vec<_>>());
        lookup.push(level);
    }

    let show = |t: &Tuple<A::Elem>| -> String {
        let ys: Vec<&str> = t.ys.iter().map(|&q| y.label(q)).collect();
        format!("({}; {}; {})", x.label(t.x), ys.join(", "), group.format_elem(&t.g))
    };
    let labels: Vec<Vec<String>> =
        classes.iter().map(|cs| cs.iter().map(show).collect()).collect();
    // every tuple has arity at most max(X) · max(Y), so the product of two
    // complete collections is complete once the bound reaches that
    let complete = x.is_complete() && y.is_complete() && bound >= x.max_arity() * y.max_arity();
    let collection = FiniteGCollection::from_action(group.clone(), labels, complete, |op, gamma| {
        let t = &classes[op.arity][op.index];
        let moved = Tuple { x: t.x, ys: t.ys.clone(), g: group.multiply(&t.g, gamma)? };
        Ok(Op::new(op.arity, lookup[op.arity][&moved]))
    })?;
    Ok(Composite { classes, lookup, collection })
}

/// Checks `I ∘ Y ≅ Y` and `X ∘ I ≅ X` up to `bound` as explicit equivariant
/// bijections `y ↦ [e₁; y; e]` and `x ↦ [x; e₁, …, e₁; e]`.
pub fn check_unit_laws<A>(x: &FiniteGCollection<A>, unit: &FiniteGCollection<A>, bound: usize) -> Result<Report>
where
    A: ActionOperad + Clone,
{
    let group = x.group();
    let mut report = Report::new("composition product: unit laws");
    let e1 = unit.find(1, &group.format_elem(&group.identity(1))).ok_or_else(|| {
        Error::Invalid(String::from("unit collection lacks the identity"))
    })?;
    let left = compose_collections(unit, x, bound)?;
    let right = compose_collections(x, unit, bound)?;
    for (law, comp, embed) in [
        ("unit: I o X = X", &left, &(|op: Op, g: A::Elem| Tuple { x: e1, ys: alloc::vec![op], g }) as &dyn Fn(Op, A::Elem) -> Tuple<A::Elem>),
        ("unit: X o I = X", &right, &(|op: Op, g: A::Elem| Tuple { x: op, ys: alloc::vec![e1; op.arity], g })),
    ] {
        let mut counts = LawCheck::new(format!("{law} (class counts)"));
        let mut bij = LawCheck::new(format!("{law} (equivariant bijection)"));
        for n in 0..=bound {
            counts.record(comp.class_count(n) == x.size(n), || {
                format!("arity {n}: {} classes, {} elements", comp.class_count(n), x.size(n))
            });
            let mut hit = alloc::vec![false; comp.class_count(n)];
            for op in x.ops(n) {
                let c = comp.class_of(&embed(op, group.identity(n)));
                match c {
                    Some(c) if !hit[c.index] => hit[c.index] = true,
                    _ => bij.record(false, || format!("{} is not sent to a fresh class", x.label(op))),
                }
                for gamma in group.elements(n).expect("finite group") {
                    let holds = (|| {
                        let moved = comp.class_of(&embed(x.act(op, &gamma)?, group.identity(n)));
                        let acted = match c {
                            Some(c) => Some(comp.collection.act(c, &gamma)?),
                            None => None,
                        };
                        Ok(moved.is_some() && moved == acted)
                    })();
                    bij.record_result(holds, || {
                        format!("{} . {}", x.label(op), group.format_elem(&gamma))
                    });
                }
            }
            bij.record(hit.iter().all(|&h| h), || format!("arity {n}: some class is missed"));
        }
        report.push(counts);
        report.push(bij);
    }
    Ok(report)
}
