use alloc::format;
use alloc::vec::Vec;

use super::collection::FiniteGCollection;
use super::operad::FiniteGOperad;
use crate::action_operad::{check_map, ActionOperad, Sampler};
use crate::error::{Error, Result};

/// Pulls a `G′`-operad back along a map of action operads `f: G → G′`: the
/// same operations and composition, with `p · g := p · f(g)`.
///
/// `f` is checked to be a map of action operads first; a failing law is
/// reported as an error carrying its counterexample.
pub fn change_groups<A, B, F>(src: A, f: F, p: &FiniteGOperad<B>, sampler: Sampler) -> Result<FiniteGOperad<A>>
where
    A: ActionOperad,
    B: ActionOperad,
    F: Fn(&A::Elem) -> B::Elem,
{
    let report = check_map(&src, p.group(), &f, sampler)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::Invalid(format!("not a map of action operads: {bad}")));
    }
    let c = p.collection();
    let labels: Vec<_> = (0..=c.max_arity()).map(|n| c.labels(n).to_vec()).collect();
    let pulled = FiniteGCollection::from_action(src, labels, c.is_complete(), |op, g| c.act(op, &f(g)))?;
    let entries = p.entries().map(|(x, ys, r)| (x, ys.to_vec(), r)).collect();
    FiniteGOperad::new(pulled, p.unit(), entries)
}
