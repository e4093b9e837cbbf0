use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action_operad::{ActionOperad, Drawer, Sampler};
use crate::error::{Error, Result};
use crate::report::LawCheck;

/// An element `index` of the level `X(arity)` of a collection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Op {
    pub arity: usize,
    pub index: usize,
}

impl Op {
    pub fn new(arity: usize, index: usize) -> Self {
        Op { arity, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Level {
    labels: Vec<String>,
    /// `gens[i][x]` is the index of `x · γ_{i+1}` for the `i`-th generator of `G(n)`.
    gens: Vec<Vec<usize>>,
    inv_gens: Vec<Vec<usize>>,
}

/// A `G`-collection with finitely many levels `X(0), …, X(max_arity)`, each a
/// finite set of labels with a right `G(n)`-action.
///
/// The action is stored through the generators of `G(n)` and extended to any
/// element via [`ActionOperad::factor`]. When `complete` is false the levels
/// above `max_arity` are unknown (a truncation); otherwise they are empty.
#[derive(Clone, Debug)]
pub struct FiniteGCollection<A: ActionOperad> {
    group: A,
    levels: Vec<Level>,
    complete: bool,
}

impl<A: ActionOperad> FiniteGCollection<A> {
    /// `levels[n] = (labels, generator tables)`. Each generator table lists,
    /// for every label index `x`, the index of `x · γ`.
    pub fn new(group: A, levels: Vec<(Vec<String>, Vec<Vec<usize>>)>, complete: bool) -> Result<Self> {
        let mut out = Vec::with_capacity(levels.len());
        for (n, (labels, gens)) in levels.into_iter().enumerate() {
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(Error::Invalid(format!("level {n}: duplicate label {l:?}")));
                }
            }
            let expected = group.generator_count(n);
            if gens.len() != expected {
                return Err(Error::Invalid(format!(
                    "level {n}: {} acts through {expected} generators, {} tables given",
                    group.name(),
                    gens.len()
                )));
            }
            let mut inv_gens = Vec::with_capacity(gens.len());
            for (i, table) in gens.iter().enumerate() {
                if table.len() != labels.len() {
                    return Err(Error::Invalid(format!(
                        "level {n}, generator {}: table has {} entries for {} labels",
                        i + 1,
                        table.len(),
                        labels.len()
                    )));
                }
                let mut inv = alloc::vec![usize::MAX; table.len()];
                for (x, &y) in table.iter().enumerate() {
                    if y >= labels.len() || inv[y] != usize::MAX {
                        return Err(Error::Invalid(format!(
                            "level {n}, generator {}: table is not a permutation of the labels",
                            i + 1
                        )));
                    }
                    inv[y] = x;
                }
                inv_gens.push(inv);
            }
            out.push(Level { labels, gens, inv_gens });
        }
        Ok(FiniteGCollection { group, levels: out, complete })
    }

    /// Every level acted on trivially.
    pub fn with_trivial_action(group: A, labels: Vec<Vec<String>>, complete: bool) -> Result<Self> {
        let levels = labels
            .into_iter()
            .enumerate()
            .map(|(n, ls)| {
                let id: Vec<usize> = (0..ls.len()).collect();
                let gens = alloc::vec![id; group.generator_count(n)];
                (ls, gens)
            })
            .collect();
        FiniteGCollection::new(group, levels, complete)
    }

    /// Builds the action tables from a function computing `x · γ` for each
    /// generator `γ` of `G(n)`.
    pub fn from_action<F>(group: A, labels: Vec<Vec<String>>, complete: bool, act: F) -> Result<Self>
    where
        F: Fn(Op, &A::Elem) -> Result<Op>,
    {
        let mut levels = Vec::with_capacity(labels.len());
        for (n, ls) in labels.into_iter().enumerate() {
            let mut gens = Vec::new();
            for i in 1..=group.generator_count(n) {
                let gamma = group.generator(n, i);
                let table = (0..ls.len())
                    .map(|x| act(Op::new(n, x), &gamma).map(|o| o.index))
                    .collect::<Result<Vec<_>>>()?;
                gens.push(table);
            }
            levels.push((ls, gens));
        }
        FiniteGCollection::new(group, levels, complete)
    }

    pub fn group(&self) -> &A {
        &self.group
    }

    pub fn max_arity(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// True when the levels above [`Self::max_arity`] are known to be empty.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn size(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, |l| l.labels.len())
    }

    pub fn ops(&self, n: usize) -> impl Iterator<Item = Op> + '_ {
        (0..self.size(n)).map(move |i| Op::new(n, i))
    }

    pub fn label(&self, op: Op) -> &str {
        &self.levels[op.arity].labels[op.index]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.levels.get(n).map_or(&[], |l| &l.labels)
    }

    pub fn find(&self, n: usize, label: &str) -> Option<Op> {
        let level = self.levels.get(n)?;
        level.labels.iter().position(|l| l == label).map(|i| Op::new(n, i))
    }

    /// The levels up to arity `k`, marked as a truncation.
    pub fn truncate(&self, k: usize) -> Self
    where
        A: Clone,
    {
        FiniteGCollection {
            group: self.group.clone(),
            levels: self.levels.iter().take(k + 1).cloned().collect(),
            complete: self.complete && k >= self.max_arity(),
        }
    }

    /// Applies one generator letter (`+i` or `-i`).
    pub fn act_letter(&self, op: Op, letter: i32) -> Op {
        let level = &self.levels[op.arity];
        let i = letter.unsigned_abs() as usize - 1;
        let table = if letter > 0 { &level.gens[i] } else { &level.inv_gens[i] };
        Op::new(op.arity, table[op.index])
    }

    /// `op · g`.
    pub fn act(&self, op: Op, g: &A::Elem) -> Result<Op> {
        let n = self.group.arity(g);
        if n != op.arity {
            return Err(Error::ArityMismatch { left: op.arity, right: n });
        }
        Ok(self.group.factor(g).into_iter().fold(op, |x, l| self.act_letter(x, l)))
    }

    /// Checks `x · e = x` and `(x · g) · h = x · (gh)` on every level.
    pub fn check_action(&self, sampler: Sampler) -> Result<LawCheck> {
        let mut law = LawCheck::new("action: right action");
        let sampler = Sampler { max_arity: self.max_arity(), ..sampler };
        let mut d = Drawer::new(&self.group, sampler)?;
        for n in 0..=self.max_arity() {
            if self.size(n) == 0 {
                continue;
            }
            let e = self.group.identity(n);
            for x in self.ops(n) {
                law.record_result(self.act(x, &e).map(|y| y == x), || {
                    format!("{} . e{n}", self.label(x))
                });
            }
            let reps = if d.random_cases().is_some() { 8 } else { 1 };
            for _ in 0..reps {
                for gh in d.tuples(&[n, n]) {
                    for x in self.ops(n) {
                        let holds = (|| {
                            let left = self.act(self.act(x, &gh[0])?, &gh[1])?;
                            let right = self.act(x, &self.group.multiply(&gh[0], &gh[1])?)?;
                            Ok(left == right)
                        })();
                        law.record_result(holds, || {
                            format!(
                                "x={} g={} h={}",
                                self.label(x),
                                self.group.format_elem(&gh[0]),
                                self.group.format_elem(&gh[1])
                            )
                        });
                    }
                }
            }
        }
        Ok(law)
    }
}

/// The unit collection: `I(1) = G(1)` acting on itself by right
/// multiplication, every other level empty. Finite groups only.
pub fn unit_collection<A: ActionOperad + Clone>(group: &A) -> Result<FiniteGCollection<A>> {
    let elems = group.elements(1).ok_or(Error::InfiniteGroup(group.name()))?;
    let labels: Vec<String> = elems.iter().map(|g| group.format_elem(g)).collect();
    let g2 = group.clone();
    let elems2 = elems.clone();
    FiniteGCollection::from_action(
        group.clone(),
        alloc::vec![Vec::new(), labels],
        true,
        move |op, gamma| {
            let prod = g2.multiply(&elems2[op.index], gamma)?;
            let i = elems2.iter().position(|e| *e == prod).expect("G(1) closed under products");
            Ok(Op::new(1, i))
        },
    )
}
