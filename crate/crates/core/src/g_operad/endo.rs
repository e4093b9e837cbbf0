//! The endomorphism operad of a finite set `X = {0, …, m-1}`.
//!
//! An `n`-ary operation is a function `Xⁿ → X`, stored as its value table in
//! the lexicographic order of input tuples (first coordinate most
//! significant). The table read as a base-`m` numeral is the operation's index
//! in its level, so labels and indices convert without lookups.

use alloc::string::String;
use alloc::vec::Vec;

use super::collection::{FiniteGCollection, Op};
use super::operad::{signature_count, FiniteGOperad};
use crate::action_operad::ActionOperad;
use crate::error::{Error, Result};
use crate::perm::act_on_list;

/// Largest composition table the builder agrees to materialize.
pub const MAX_ENDO_ENTRIES: u128 = 1 << 21;

/// `mⁿ`, or `None` on overflow.
fn checked_pow(m: usize, n: usize) -> Option<usize> {
    (0..n).try_fold(1usize, |acc, _| acc.checked_mul(m))
}

/// Index of an input tuple in lexicographic order.
pub fn tuple_index(m: usize, xs: &[usize]) -> usize {
    xs.iter().fold(0, |acc, &x| acc * m + x)
}

/// The input tuple at lexicographic position `i`.
pub fn tuple_at(m: usize, n: usize, mut i: usize) -> Vec<usize> {
    let mut xs = alloc::vec![0; n];
    for slot in xs.iter_mut().rev() {
        *slot = i % m;
        i /= m;
    }
    xs
}

/// The value table of an operation of `𝓔_X(n)`.
pub fn endo_table(m: usize, op: Op) -> Vec<usize> {
    let len = checked_pow(m, op.arity).expect("level exists");
    tuple_at(m, len, op.index)
}

/// The operation with the given value table.
pub fn endo_op(m: usize, arity: usize, table: &[usize]) -> Op {
    Op::new(arity, tuple_index(m, table))
}

fn label(table: &[usize]) -> String {
    if table.iter().all(|&v| v < 10) {
        table.iter().map(|&v| char::from(b'0' + v as u8)).collect()
    } else {
        let parts: Vec<String> = table.iter().map(|v| alloc::format!("{v}")).collect();
        parts.join(".")
    }
}

/// Builds `𝓔_X` for `|X| = m` up to arity `bound`, over `group` acting
/// through its projection to permutations of the inputs.
pub fn endomorphism_operad<A: ActionOperad>(m: usize, group: A, bound: usize) -> Result<FiniteGOperad<A>> {
    if m == 0 {
        return Err(Error::Invalid(String::from("the carrier must be nonempty")));
    }
    let too_large = || Error::TooLarge { requested: u128::MAX, limit: MAX_ENDO_ENTRIES };
    let mut sizes = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let inputs = checked_pow(m, n).ok_or_else(too_large)?;
        let size = u32::try_from(inputs).ok().and_then(|e| m.checked_pow(e)).ok_or_else(too_large)?;
        sizes.push(size as u128);
    }
    let requested = signature_count(&sizes, bound);
    if requested > MAX_ENDO_ENTRIES {
        return Err(Error::TooLarge { requested, limit: MAX_ENDO_ENTRIES });
    }

    let labels: Vec<Vec<String>> = sizes
        .iter()
        .enumerate()
        .map(|(n, &s)| (0..s as usize).map(|i| label(&endo_table(m, Op::new(n, i)))).collect())
        .collect();
    let projector = |g: &A::Elem| group.project(g);
    let act = |op: Op, g: &A::Elem| -> Result<Op> {
        let f = endo_table(m, op);
        let p = projector(g);
        let n = op.arity;
        let len = f.len();
        let moved: Vec<usize> = (0..len)
            .map(|i| act_on_list(&p, &tuple_at(m, n, i)).map(|xs| f[tuple_index(m, &xs)]))
            .collect::<Result<_>>()?;
        Ok(endo_op(m, n, &moved))
    };
    let tables: Vec<Vec<Vec<usize>>> = (0..=bound)
        .map(|n| {
            (1..=group.generator_count(n))
                .map(|i| {
                    let gamma = group.generator(n, i);
                    (0..sizes[n] as usize).map(|x| act(Op::new(n, x), &gamma).map(|o| o.index)).collect()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let levels = labels.into_iter().zip(tables).collect();
    let collection = FiniteGCollection::new(group, levels, false)?;

    let unit = endo_op(m, 1, &(0..m).collect::<Vec<_>>());
    FiniteGOperad::from_fn(collection, unit, |f, gs| {
        let ft = endo_table(m, f);
        let gts: Vec<Vec<usize>> = gs.iter().map(|&g| endo_table(m, g)).collect();
        let total: usize = gs.iter().map(|g| g.arity).sum();
        let len = checked_pow(m, total).ok_or_else(too_large)?;
        let out: Vec<usize> = (0..len)
            .map(|i| {
                let xs = tuple_at(m, total, i);
                let mut at = 0;
                let args: Vec<usize> = gs
                    .iter()
                    .zip(&gts)
                    .map(|(g, gt)| {
                        let v = gt[tuple_index(m, &xs[at..at + g.arity])];
                        at += g.arity;
                        v
                    })
                    .collect();
                ft[tuple_index(m, &args)]
            })
            .collect();
        Ok(endo_op(m, total, &out))
    })
}
