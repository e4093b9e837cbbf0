//! A plain-data description of a finite operad, mirroring the operad file
//! format: labels per arity, generator action tables, a unit and composition
//! records. Parsing the file syntax is left to callers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::collection::{FiniteGCollection, Op};
use super::operad::FiniteGOperad;
use crate::action_operad::ActionOperad;
use crate::error::{Error, Result};

/// One composition record: `μ(args[0]; args[1], …, args[n]) = result`, where
/// `args[0]` has arity `n` and `args[i]` arity `ks[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeSpec {
    pub n: usize,
    pub ks: Vec<usize>,
    pub args: Vec<String>,
    pub result: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperadSpec {
    /// `levels[n]` lists the labels of arity `n`.
    pub levels: Vec<Vec<String>>,
    /// `action[n][i]` lists, for each label of arity `n` in order, its image
    /// under the `i`-th generator. Missing arities default to no tables.
    pub action: Vec<Vec<Vec<String>>>,
    pub unit: Option<String>,
    pub compose: Vec<ComposeSpec>,
    /// Whether the levels above the last one are empty rather than unknown.
    pub complete: bool,
}

fn lookup(levels: &[Vec<String>], n: usize, label: &str, at: impl FnOnce() -> String) -> Result<Op> {
    match levels.get(n) {
        None => Err(Error::Invalid(format!("{}: arity {n} has no level", at()))),
        Some(level) => level
            .iter()
            .position(|l| l == label)
            .map(|i| Op::new(n, i))
            .ok_or_else(|| Error::UnknownLabel(format!("{label:?} in arity {n} at {}", at()))),
    }
}

impl OperadSpec {
    /// The underlying collection.
    pub fn collection<A: ActionOperad>(&self, group: A) -> Result<FiniteGCollection<A>> {
        let mut levels = Vec::with_capacity(self.levels.len());
        for (n, labels) in self.levels.iter().enumerate() {
            let stated = self.action.get(n).map_or(&[][..], Vec::as_slice);
            let expected = group.generator_count(n);
            if labels.is_empty() && stated.is_empty() {
                levels.push((Vec::new(), alloc::vec![Vec::new(); expected]));
                continue;
            }
            if stated.len() != expected {
                return Err(Error::Invalid(format!(
                    "action[{n}]: {} acts on arity {n} through {expected} generators, {} tables given",
                    group.name(),
                    stated.len()
                )));
            }
            let mut gens = Vec::with_capacity(expected);
            for (i, table) in stated.iter().enumerate() {
                if table.len() != labels.len() {
                    return Err(Error::Invalid(format!(
                        "action[{n}][{i}]: {} images for {} labels",
                        table.len(),
                        labels.len()
                    )));
                }
                let row = table
                    .iter()
                    .enumerate()
                    .map(|(j, l)| lookup(&self.levels, n, l, || format!("action[{n}][{i}][{j}]")).map(|o| o.index))
                    .collect::<Result<Vec<_>>>()?;
                gens.push(row);
            }
            levels.push((labels.clone(), gens));
        }
        for n in self.levels.len()..self.action.len() {
            if !self.action[n].is_empty() {
                return Err(Error::Invalid(format!("action[{n}]: arity {n} has no level")));
            }
        }
        FiniteGCollection::new(group, levels, self.complete)
    }

    /// The operad; every composite within the bound must be listed.
    pub fn operad<A: ActionOperad>(&self, group: A) -> Result<FiniteGOperad<A>> {
        let collection = self.collection(group)?;
        let unit_label = self.unit.as_deref().ok_or_else(|| Error::Invalid(String::from("unit: missing")))?;
        let unit = lookup(&self.levels, 1, unit_label, || String::from("unit"))?;
        let mut entries = Vec::with_capacity(self.compose.len());
        for (i, rec) in self.compose.iter().enumerate() {
            let at = |what: &str| format!("compose[{i}].{what}");
            if rec.ks.len() != rec.n {
                return Err(Error::Invalid(format!("{}: {} arities for n = {}", at("ks"), rec.ks.len(), rec.n)));
            }
            if rec.args.len() != rec.n + 1 {
                return Err(Error::Invalid(format!(
                    "{}: expected {} labels (outer then inputs), found {}",
                    at("args"),
                    rec.n + 1,
                    rec.args.len()
                )));
            }
            let p = lookup(&self.levels, rec.n, &rec.args[0], || at("args[0]"))?;
            let qs = rec
                .ks
                .iter()
                .zip(&rec.args[1..])
                .enumerate()
                .map(|(j, (&k, l))| lookup(&self.levels, k, l, || at(&format!("args[{}]", j + 1))))
                .collect::<Result<Vec<_>>>()?;
            let total = rec.ks.iter().sum();
            let r = lookup(&self.levels, total, &rec.result, || at("result"))?;
            entries.push((p, qs, r));
        }
        FiniteGOperad::new(collection, unit, entries)
    }

    /// Describes an existing operad.
    pub fn from_operad<A: ActionOperad>(p: &FiniteGOperad<A>) -> Self {
        let c = p.collection();
        let levels: Vec<Vec<String>> = (0..=c.max_arity()).map(|n| c.labels(n).to_vec()).collect();
        let action = (0..=c.max_arity())
            .map(|n| {
                (0..p.group().generator_count(n))
                    .map(|i| c.ops(n).map(|x| String::from(c.label(c.act_letter(x, i as i32 + 1)))).collect())
                    .collect()
            })
            .collect();
        let compose = p
            .entries()
            .map(|(x, ys, r)| {
                let mut args = alloc::vec![String::from(p.label(x))];
                args.extend(ys.iter().map(|&y| String::from(p.label(y))));
                ComposeSpec {
                    n: x.arity,
                    ks: ys.iter().map(|y| y.arity).collect(),
                    args,
                    result: String::from(p.label(r)),
                }
            })
            .collect();
        OperadSpec {
            levels,
            action,
            unit: Some(String::from(p.label(p.unit()))),
            compose,
            complete: c.is_complete(),
        }
    }
}
