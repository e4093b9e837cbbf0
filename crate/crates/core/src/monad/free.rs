use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action_operad::ActionOperad;
use crate::error::{Error, Result};
use crate::g_operad::{FiniteGOperad, Op};
use crate::perm::{act_on_list, Permutation};

/// A class `[p; x₁, …, xₙ]` of `P(n) ×_{G(n)} Xⁿ`, stored as the least
/// member of its orbit under `(p, x̲) ~ (p·g, π(g)⁻¹·x̲)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeAlgebraClass {
    pub op: Op,
    pub args: Vec<usize>,
}

/// The truncated free algebra `P̲(X)` on a weighted finite carrier.
///
/// Carrier element `x` has weight `weights[x]` and only tuples of total
/// weight at most `max_weight` (and length at most `max_arity`) are kept.
/// A plain set has every weight 1; a carrier that is itself a free algebra
/// weighs its classes by their arity, so that multiplication stays in bound.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    weights: Vec<usize>,
    max_weight: usize,
    max_arity: usize,
    classes: Vec<FreeAlgebraClass>,
    members: Vec<Vec<(Op, Vec<usize>)>>,
    lookup: BTreeMap<(Op, Vec<usize>), usize>,
}

fn weighted_tuples(weights: &[usize], n: usize, max_weight: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![(Vec::new(), 0usize)];
    for _ in 0..n {
        let mut next = Vec::new();
        for (v, w) in &out {
            for (x, &wx) in weights.iter().enumerate() {
                if w + wx <= max_weight {
                    let mut t = v.clone();
                    t.push(x);
                    next.push((t, w + wx));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|(v, _)| v).collect()
}

/// `P̲(X)` for `X = {0, …, m-1}` with arities up to `max_arity`.
pub fn free_algebra<A: ActionOperad>(p: &FiniteGOperad<A>, m: usize, max_arity: usize) -> Result<FreeAlgebra> {
    FreeAlgebra::weighted(p, alloc::vec![1; m], max_arity, max_arity)
}

impl FreeAlgebra {
    pub fn weighted<A: ActionOperad>(
        p: &FiniteGOperad<A>,
        weights: Vec<usize>,
        max_weight: usize,
        max_arity: usize,
    ) -> Result<Self> {
        let g = p.group();
        if g.elements(0).is_none() {
            return Err(Error::InfiniteGroup(g.name()));
        }
        if max_arity > p.bound() {
            return Err(Error::ArityOverflow { arity: max_arity, bound: p.bound() });
        }
        let mut classes = Vec::new();
        let mut members = Vec::new();
        let mut lookup = BTreeMap::new();
        for n in 0..=max_arity {
            // generator moves: (p·γ, π(γ)⁻¹·x̲) and (p·γ⁻¹, π(γ)·x̲)
            let moves: Vec<(i32, Permutation, Permutation)> = (1..=g.generator_count(n))
                .map(|i| {
                    let pi = g.project(&g.generator(n, i));
                    (i as i32, pi.inverse(), pi)
                })
                .collect();
            let mut level: Vec<(FreeAlgebraClass, Vec<(Op, Vec<usize>)>)> = Vec::new();
            let mut seen = BTreeSet::new();
            for xs in weighted_tuples(&weights, n, max_weight) {
                for op in p.ops(n) {
                    if seen.contains(&(op, xs.clone())) {
                        continue;
                    }
                    let mut orbit = alloc::vec![(op, xs.clone())];
                    seen.insert((op, xs.clone()));
                    let mut at = 0;
                    while at < orbit.len() {
                        let (q, ys) = orbit[at].clone();
                        at += 1;
                        for (l, pi_inv, pi) in &moves {
                            for next in [
                                (p.collection().act_letter(q, *l), act_on_list(pi_inv, &ys)?),
                                (p.collection().act_letter(q, -*l), act_on_list(pi, &ys)?),
                            ] {
                                if seen.insert(next.clone()) {
                                    orbit.push(next);
                                }
                            }
                        }
                    }
                    orbit.sort();
                    let (q, ys) = orbit[0].clone();
                    level.push((FreeAlgebraClass { op: q, args: ys }, orbit));
                }
            }
            level.sort();
            for (c, orbit) in level {
                for raw in &orbit {
                    lookup.insert(raw.clone(), classes.len());
                }
                classes.push(c);
                members.push(orbit);
            }
        }
        Ok(FreeAlgebra { weights, max_weight, max_arity, classes, members, lookup })
    }

    /// `P̲` applied to the classes of `inner`, each weighted by its total
    /// weight, truncated at total weight `max_weight`.
    pub fn over<A: ActionOperad>(p: &FiniteGOperad<A>, inner: &FreeAlgebra, max_weight: usize) -> Result<Self> {
        let weights = (0..inner.len()).map(|c| inner.weight(c)).collect();
        FreeAlgebra::weighted(p, weights, max_weight, max_weight.min(p.bound()))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn carrier_len(&self) -> usize {
        self.weights.len()
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn classes(&self) -> &[FreeAlgebraClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &FreeAlgebraClass {
        &self.classes[i]
    }

    /// Every raw pair in the class.
    pub fn members(&self, i: usize) -> &[(Op, Vec<usize>)] {
        &self.members[i]
    }

    /// The weight of a class as an element of a carrier: the larger of its
    /// arity and the total weight of its arguments. Bounding it bounds both
    /// ways of multiplying a nesting.
    pub fn weight(&self, i: usize) -> usize {
        let c = &self.classes[i];
        c.op.arity.max(c.args.iter().map(|&x| self.weights[x]).sum())
    }

    /// Number of classes of arity `n`.
    pub fn count(&self, n: usize) -> usize {
        self.classes.iter().filter(|c| c.op.arity == n).count()
    }

    /// The class of a raw pair `(p, x̲)`.
    pub fn class_of(&self, op: Op, args: &[usize]) -> Result<usize> {
        if let Some(&c) = self.lookup.get(&(op, args.to_vec())) {
            return Ok(c);
        }
        if args.iter().any(|&x| x >= self.weights.len()) {
            return Err(Error::Invalid(String::from("argument outside the carrier")));
        }
        let w: usize = args.iter().map(|&x| self.weights[x]).sum();
        if args.len() > self.max_arity || w > self.max_weight {
            return Err(Error::ArityOverflow { arity: w.max(args.len()), bound: self.max_weight });
        }
        Err(Error::Invalid(String::from("operation outside the operad")))
    }

    /// `[p; x₁,...,xₙ]`, naming carrier elements with `name`.
    pub fn format_class<A: ActionOperad>(
        &self,
        p: &FiniteGOperad<A>,
        i: usize,
        name: &dyn Fn(usize) -> String,
    ) -> String {
        let c = &self.classes[i];
        let args: Vec<String> = c.args.iter().map(|&x| name(x)).collect();
        format!("[{}; {}]", p.label(c.op), args.join(","))
    }

    /// `P̲(f)`: the class of `[p; f(x₁), …, f(xₙ)]` in `target`, for each class.
    pub fn map_carrier(&self, f: &dyn Fn(usize) -> usize, target: &FreeAlgebra) -> Result<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                let ys: Vec<usize> = c.args.iter().map(|&x| f(x)).collect();
                target.class_of(c.op, &ys)
            })
            .collect()
    }
}

/// `η(x) = [id; x]`.
pub fn unit_eta<A: ActionOperad>(p: &FiniteGOperad<A>, px: &FreeAlgebra, x: usize) -> Result<usize> {
    px.class_of(p.unit(), &[x])
}

/// Substitutes inner classes into an outer one:
/// `[q; [p₁; x̲₁], …, [pₙ; x̲ₙ]] ↦ [μ(q; p₁, …, pₙ); x̲₁ ⋯ x̲ₙ]`, where the
/// outer carrier is the class set of `inner` and the result lives in
/// `target`, whose carrier is that of `inner`.
pub fn flatten<A: ActionOperad>(
    p: &FiniteGOperad<A>,
    outer: &FreeAlgebra,
    inner: &FreeAlgebra,
    target: &FreeAlgebra,
    class: usize,
) -> Result<usize> {
    let FreeAlgebraClass { op: q, args: cs } = outer.class(class);
    let total: usize = cs.iter().map(|&c| inner.class(c).op.arity).sum();
    if total > p.bound() || total > target.max_arity {
        return Err(Error::ArityOverflow { arity: total, bound: target.max_arity.min(p.bound()) });
    }
    let ops: Vec<Op> = cs.iter().map(|&c| inner.class(c).op).collect();
    let args: Vec<usize> = cs.iter().flat_map(|&c| inner.class(c).args.iter().copied()).collect();
    target.class_of(p.compose(*q, &ops)?, &args)
}

/// `μ: P̲P̲X → P̲X`.
pub fn mult_mu<A: ActionOperad>(p: &FiniteGOperad<A>, ppx: &FreeAlgebra, px: &FreeAlgebra, class: usize) -> Result<usize> {
    flatten(p, ppx, px, px, class)
}
