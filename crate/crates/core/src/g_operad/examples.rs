//! Built-in operads.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::collection::{FiniteGCollection, Op};
use super::operad::FiniteGOperad;
use crate::action_operad::{ActionOperad, Symmetric, Trivial};
use crate::error::Result;
use crate::perm::{mu_sigma, Permutation};

/// The terminal `G`-operad: one operation `c<n>` in every arity, acted on
/// trivially, composing to the unique operation of the total arity.
pub fn terminal<A: ActionOperad>(group: A, prefix: &str, bound: usize) -> Result<FiniteGOperad<A>> {
    let labels = (0..=bound).map(|n| alloc::vec![format!("{prefix}{n}")]).collect();
    let c = FiniteGCollection::with_trivial_action(group, labels, false)?;
    FiniteGOperad::from_fn(c, Op::new(1, 0), |_, qs| Ok(Op::new(qs.iter().map(|q| q.arity).sum(), 0)))
}

/// The commutative operad over Σ.
pub fn comm(bound: usize) -> Result<FiniteGOperad<Symmetric>> {
    terminal(Symmetric, "c", bound)
}

/// The non-symmetric associative operad, over the trivial action operad.
pub fn nsass(bound: usize) -> Result<FiniteGOperad<Trivial>> {
    terminal(Trivial, "m", bound)
}

fn perm_label(p: &Permutation) -> String {
    let mut s = String::from("s");
    for i in 1..=p.arity() {
        s.push_str(&format!("{}", p.apply(i)));
    }
    s
}

/// The associative operad over Σ: `P(n) = Σₙ` acted on by right
/// multiplication, composing as the symmetric action operad.
pub fn ass(bound: usize) -> Result<FiniteGOperad<Symmetric>> {
    let perms: Vec<Vec<Permutation>> = (0..=bound).map(Permutation::all).collect();
    let labels = perms.iter().map(|ps| ps.iter().map(perm_label).collect()).collect();
    let index = |p: &Permutation| {
        let n = p.arity();
        Op::new(n, perms[n].iter().position(|q| q == p).expect("all of Σn is listed"))
    };
    let c = FiniteGCollection::from_action(Symmetric, labels, false, |op, g| {
        Ok(index(&perms[op.arity][op.index].product(g)?))
    })?;
    FiniteGOperad::from_fn(c, Op::new(1, 0), |p, qs| {
        let taus: Vec<Permutation> = qs.iter().map(|q| perms[q.arity][q.index].clone()).collect();
        Ok(index(&mu_sigma(&perms[p.arity][p.index], &taus)?))
    })
}
