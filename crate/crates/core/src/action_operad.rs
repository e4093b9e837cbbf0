//! Action operads: families of groups `G(n)` that form an operad, together
//! with a projection `π: G → Σ` that is both an operad map and a group
//! homomorphism in each arity, subject to the compatibility axiom
//!
//! ```text
//! μ(g; f₁, …, fₙ) · μ(g'; f'₁, …, f'ₙ) = μ(gg'; f_{π(g')(1)} f'₁, …, f_{π(g')(n)} f'ₙ)
//! ```
//!
//! Three instances ship: [`Trivial`] (the terminal groups), [`Symmetric`] and
//! [`Braid`]. [`check_axioms`] verifies every law on exhaustive or seeded
//! random samples and [`check_map`] does the same for maps between instances.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};

use crate::braid::{self, BraidWord};
use crate::error::{Error, Result};
use crate::perm::{self, Permutation};
use crate::report::{LawCheck, Report};

pub type SeededRng = rand_chacha::ChaCha8Rng;

/// Seed used whenever a caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_0b5e;

pub trait ActionOperad {
    /// A group element tagged with its arity.
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn name(&self) -> &'static str;
    fn arity(&self, g: &Self::Elem) -> usize;
    fn identity(&self, n: usize) -> Self::Elem;

    /// The operad unit of `G`. The axioms force it to be `e₁`; instances
    /// only override this to model a broken structure.
    fn operad_unit(&self) -> Self::Elem {
        self.identity(1)
    }

    fn multiply(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem>;
    fn invert(&self, g: &Self::Elem) -> Self::Elem;

    fn equal(&self, g: &Self::Elem, h: &Self::Elem) -> Result<bool> {
        let (a, b) = (self.arity(g), self.arity(h));
        if a != b {
            return Err(Error::ArityMismatch { left: a, right: b });
        }
        Ok(g == h)
    }

    fn project(&self, g: &Self::Elem) -> Permutation;
    fn operad_mu(&self, g: &Self::Elem, fs: &[Self::Elem]) -> Result<Self::Elem>;

    /// Every element of `G(n)`, or `None` for an infinite group.
    fn elements(&self, n: usize) -> Option<Vec<Self::Elem>>;

    /// Number of generators of `G(n)` used by [`ActionOperad::factor`].
    fn generator_count(&self, n: usize) -> usize;

    /// Writes `g` as a product of generators: `+i` is generator `i`
    /// (1-based), `-i` its inverse, and the product is taken left to right.
    fn factor(&self, g: &Self::Elem) -> Vec<i32>;

    /// The generator `i` of `G(n)` (1-based).
    fn generator(&self, n: usize, i: usize) -> Self::Elem;

    fn sample(&self, n: usize, max_len: usize, rng: &mut SeededRng) -> Self::Elem;

    fn format_elem(&self, g: &Self::Elem) -> String;

    /// `g₁ + g₂ = μ(e₂; g₁, g₂)`, the strict monoidal sum on `⊔ G(n)`.
    fn sum(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem> {
        self.operad_mu(&self.identity(2), &[g.clone(), h.clone()])
    }
}

/// The element of the terminal group `T(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrivialElem {
    pub arity: usize,
}

/// `T(n) = *`, with `π` the inclusion of identities. The initial action operad.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trivial;

/// The symmetric groups with `π` the identity. The terminal action operad.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symmetric;

/// The braid groups with `π` the underlying permutation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Braid;

pub fn instance_trivial() -> Trivial {
    Trivial
}

pub fn instance_symmetric() -> Symmetric {
    Symmetric
}

pub fn instance_braid() -> Braid {
    Braid
}

fn same_arity(a: usize, b: usize) -> Result<()> {
    if a == b { Ok(()) } else { Err(Error::ArityMismatch { left: a, right: b }) }
}

impl ActionOperad for Trivial {
    type Elem = TrivialElem;

    fn name(&self) -> &'static str {
        "trivial"
    }
    fn arity(&self, g: &TrivialElem) -> usize {
        g.arity
    }
    fn identity(&self, n: usize) -> TrivialElem {
        TrivialElem { arity: n }
    }
    fn multiply(&self, g: &TrivialElem, h: &TrivialElem) -> Result<TrivialElem> {
        same_arity(g.arity, h.arity)?;
        Ok(*g)
    }
    fn invert(&self, g: &TrivialElem) -> TrivialElem {
        *g
    }
    fn project(&self, g: &TrivialElem) -> Permutation {
        Permutation::identity(g.arity)
    }
    fn operad_mu(&self, g: &TrivialElem, fs: &[TrivialElem]) -> Result<TrivialElem> {
        if fs.len() != g.arity {
            return Err(Error::LengthMismatch { expected: g.arity, found: fs.len() });
        }
        Ok(TrivialElem { arity: fs.iter().map(|f| f.arity).sum() })
    }
    fn elements(&self, n: usize) -> Option<Vec<TrivialElem>> {
        Some(vec![TrivialElem { arity: n }])
    }
    fn generator_count(&self, _n: usize) -> usize {
        0
    }
    fn factor(&self, _g: &TrivialElem) -> Vec<i32> {
        Vec::new()
    }
    fn generator(&self, n: usize, i: usize) -> TrivialElem {
        panic!("T({n}) has no generator {i}")
    }
    fn sample(&self, n: usize, _max_len: usize, _rng: &mut SeededRng) -> TrivialElem {
        TrivialElem { arity: n }
    }
    fn format_elem(&self, g: &TrivialElem) -> String {
        format!("*{}", g.arity)
    }
}

impl ActionOperad for Symmetric {
    type Elem = Permutation;

    fn name(&self) -> &'static str {
        "symmetric"
    }
    fn arity(&self, g: &Permutation) -> usize {
        g.arity()
    }
    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }
    fn multiply(&self, g: &Permutation, h: &Permutation) -> Result<Permutation> {
        g.product(h)
    }
    fn invert(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }
    fn project(&self, g: &Permutation) -> Permutation {
        g.clone()
    }
    fn operad_mu(&self, g: &Permutation, fs: &[Permutation]) -> Result<Permutation> {
        perm::mu_sigma(g, fs)
    }
    fn elements(&self, n: usize) -> Option<Vec<Permutation>> {
        Some(Permutation::all(n))
    }
    fn generator_count(&self, n: usize) -> usize {
        n.saturating_sub(1)
    }
    fn factor(&self, g: &Permutation) -> Vec<i32> {
        braid::permutation_braid(g).letters().to_vec()
    }
    fn generator(&self, n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i)
    }
    fn sample(&self, n: usize, max_len: usize, rng: &mut SeededRng) -> Permutation {
        BraidWord::random(n, rng.gen_range(0..=max_len), rng).underlying_permutation()
    }
    fn format_elem(&self, g: &Permutation) -> String {
        format!("[{g}]")
    }
}

impl ActionOperad for Braid {
    type Elem = BraidWord;

    fn name(&self) -> &'static str {
        "braid"
    }
    fn arity(&self, g: &BraidWord) -> usize {
        g.strands()
    }
    fn identity(&self, n: usize) -> BraidWord {
        BraidWord::identity(n)
    }
    fn multiply(&self, g: &BraidWord, h: &BraidWord) -> Result<BraidWord> {
        g.product(h)
    }
    fn invert(&self, g: &BraidWord) -> BraidWord {
        g.inverse()
    }
    fn equal(&self, g: &BraidWord, h: &BraidWord) -> Result<bool> {
        g.equal(h)
    }
    fn project(&self, g: &BraidWord) -> Permutation {
        g.underlying_permutation()
    }
    fn operad_mu(&self, g: &BraidWord, fs: &[BraidWord]) -> Result<BraidWord> {
        braid::mu_br(g, fs)
    }
    fn elements(&self, _n: usize) -> Option<Vec<BraidWord>> {
        None
    }
    fn generator_count(&self, n: usize) -> usize {
        n.saturating_sub(1)
    }
    fn factor(&self, g: &BraidWord) -> Vec<i32> {
        g.letters().to_vec()
    }
    fn generator(&self, n: usize, i: usize) -> BraidWord {
        BraidWord::generator(n, i, true).expect("generator index in range")
    }
    fn sample(&self, n: usize, max_len: usize, rng: &mut SeededRng) -> BraidWord {
        let len = rng.gen_range(0..=max_len);
        BraidWord::random(n, len, rng)
    }
    fn format_elem(&self, g: &BraidWord) -> String {
        format!("({}: {g})", g.strands())
    }
}

/// How law instances are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplingMode {
    /// Every tuple within the arity bounds. Finite groups only.
    Exhaustive,
    /// `cases` seeded random instances per law.
    Random { seed: u64, cases: usize, max_word: usize },
}

/// Arity bounds for law instances: outer operations have arity at most
/// `max_arity`, inputs plugged into them at most `max_inner`, and no composite
/// exceeds `max_total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub max_arity: usize,
    pub max_inner: usize,
    pub max_total: usize,
    pub mode: SamplingMode,
}

impl Sampler {
    pub fn exhaustive(max_arity: usize, max_inner: usize, max_total: usize) -> Self {
        Sampler { max_arity, max_inner, max_total, mode: SamplingMode::Exhaustive }
    }

    pub fn random(seed: u64, cases: usize, max_arity: usize, max_word: usize) -> Self {
        Sampler {
            max_arity,
            max_inner: max_arity,
            max_total: 3 * max_arity,
            mode: SamplingMode::Random { seed, cases, max_word },
        }
    }

    /// Exhaustive for finite groups up to arity 3, seeded sampling otherwise.
    pub fn default_for<A: ActionOperad>(inst: &A) -> Self {
        if inst.elements(0).is_some() {
            Sampler::exhaustive(3, 2, 4)
        } else {
            Sampler::random(DEFAULT_SEED, 300, 3, 5)
        }
    }
}

/// Cartesian product of lists, in lexicographic order.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for x in list {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All vectors of length `len` with entries in `0..=max_entry` and sum at most `max_sum`.
pub(crate) fn bounded_vectors(len: usize, max_entry: usize, max_sum: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for v in &out {
            let s: usize = v.iter().sum();
            for k in 0..=max_entry.min(max_sum - s) {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

pub(crate) struct Drawer<'a, A: ActionOperad> {
    inst: &'a A,
    sampler: Sampler,
    rng: SeededRng,
    cache: BTreeMap<usize, Vec<A::Elem>>,
}

impl<'a, A: ActionOperad> Drawer<'a, A> {
    pub(crate) fn new(inst: &'a A, sampler: Sampler) -> Result<Self> {
        let seed = match sampler.mode {
            SamplingMode::Random { seed, .. } => seed,
            SamplingMode::Exhaustive => {
                if inst.elements(0).is_none() {
                    return Err(Error::InfiniteGroup(inst.name()));
                }
                0
            }
        };
        Ok(Drawer { inst, sampler, rng: SeededRng::seed_from_u64(seed), cache: BTreeMap::new() })
    }

    pub(crate) fn elems(&mut self, n: usize) -> Vec<A::Elem> {
        let inst = self.inst;
        self.cache
            .entry(n)
            .or_insert_with(|| inst.elements(n).expect("finite group"))
            .clone()
    }

    pub(crate) fn random_cases(&self) -> Option<(usize, usize)> {
        match self.sampler.mode {
            SamplingMode::Random { cases, max_word, .. } => Some((cases, max_word)),
            SamplingMode::Exhaustive => None,
        }
    }

    fn one(&mut self, n: usize, max_word: usize) -> A::Elem {
        self.inst.sample(n, max_word, &mut self.rng)
    }

    fn random_sizes(&mut self, len: usize, max_entry: usize, max_sum: usize) -> Vec<usize> {
        loop {
            let v: Vec<usize> = (0..len).map(|_| self.rng.gen_range(0..=max_entry)).collect();
            if v.iter().sum::<usize>() <= max_sum {
                return v;
            }
        }
    }

    /// `count` elements of a common arity `n`, over all `n ≤ max_arity`.
    fn same_arity(&mut self, count: usize) -> Vec<Vec<A::Elem>> {
        let max_arity = self.sampler.max_arity;
        match self.random_cases() {
            None => (0..=max_arity)
                .flat_map(|n| {
                    let es = self.elems(n);
                    cartesian(&vec![es; count])
                })
                .collect(),
            Some((cases, max_word)) => (0..cases)
                .map(|_| {
                    let n = self.rng.gen_range(0..=max_arity);
                    (0..count).map(|_| self.one(n, max_word)).collect()
                })
                .collect(),
        }
    }

    /// Elements of the given arities.
    pub(crate) fn tuples(&mut self, arities: &[usize]) -> Vec<Vec<A::Elem>> {
        match self.random_cases() {
            None => {
                let lists: Vec<Vec<A::Elem>> = arities.iter().map(|&k| self.elems(k)).collect();
                cartesian(&lists)
            }
            Some((_, max_word)) => vec![arities.iter().map(|&k| self.one(k, max_word)).collect()],
        }
    }

    /// Inner arity vectors `(k₁, …, kₙ)` for an outer operation of arity `n`.
    fn inner_sizes(&mut self, n: usize) -> Vec<Vec<usize>> {
        let Sampler { max_inner, max_total, .. } = self.sampler;
        match self.random_cases() {
            None => bounded_vectors(n, max_inner, max_total),
            Some(_) => vec![self.random_sizes(n, max_inner, max_total)],
        }
    }

    /// Outer arities to visit: all of them, or `cases` random draws.
    fn outer_arities(&mut self) -> Vec<usize> {
        let max_arity = self.sampler.max_arity;
        match self.random_cases() {
            None => (0..=max_arity).collect(),
            Some((cases, _)) => (0..cases).map(|_| self.rng.gen_range(0..=max_arity)).collect(),
        }
    }
}

fn fmt_list<A: ActionOperad>(inst: &A, gs: &[A::Elem]) -> String {
    let parts: Vec<String> = gs.iter().map(|g| inst.format_elem(g)).collect();
    parts.join(", ")
}

/// Verifies every law of an action operad on the instances drawn by `sampler`:
/// the group axioms, the operad unit and associativity laws for `μ^G`, that
/// `π` is a homomorphism and an operad map, the compatibility axiom, the
/// consequences `e₁ = id`, `μ(eₙ; e_{k₁}, …) = e_K` and commutativity of
/// `G(1)`, and the strict monoidal sum `μ(e₂; -, -)`.
///
/// Surjectivity of `π` is deliberately not checked.
pub fn check_axioms<A: ActionOperad>(inst: &A, sampler: Sampler) -> Result<Report> {
    let mut d = Drawer::new(inst, sampler)?;
    let mut report = Report::new(format!("action operad {}", inst.name()));
    let eq = |g: &A::Elem, h: &A::Elem| inst.equal(g, h);
    let show = |g: &A::Elem| inst.format_elem(g);

    let mut identity = LawCheck::new("group: identity");
    let mut inverse = LawCheck::new("group: inverse");
    for g in d.same_arity(1).into_iter().map(|mut v| v.remove(0)) {
        let e = inst.identity(inst.arity(&g));
        let holds = (|| Ok(eq(&inst.multiply(&e, &g)?, &g)? && eq(&inst.multiply(&g, &e)?, &g)?))();
        identity.record_result(holds, || format!("g={}", show(&g)));
        let gi = inst.invert(&g);
        let holds = (|| Ok(eq(&inst.multiply(&g, &gi)?, &e)? && eq(&inst.multiply(&gi, &g)?, &e)?))();
        inverse.record_result(holds, || format!("g={}", show(&g)));
    }
    report.push(identity);
    report.push(inverse);

    let mut assoc = LawCheck::new("group: associativity");
    for t in d.same_arity(3) {
        let holds = (|| {
            let l = inst.multiply(&inst.multiply(&t[0], &t[1])?, &t[2])?;
            let r = inst.multiply(&t[0], &inst.multiply(&t[1], &t[2])?)?;
            eq(&l, &r)
        })();
        assoc.record_result(holds, || fmt_list(inst, &t));
    }
    report.push(assoc);

    let mut hom = LawCheck::new("projection: homomorphism");
    for t in d.same_arity(2) {
        let holds = (|| {
            let gh = inst.multiply(&t[0], &t[1])?;
            let e = inst.project(&inst.identity(inst.arity(&t[0])));
            Ok(inst.project(&gh) == inst.project(&t[0]).product(&inst.project(&t[1]))?
                && e.is_identity())
        })();
        hom.record_result(holds, || fmt_list(inst, &t));
    }
    report.push(hom);

    let unit = inst.operad_unit();
    let mut e1 = LawCheck::new("consequence: e1 is the operad unit");
    e1.record_result(eq(&unit, &inst.identity(1)), || format!("id={}", show(&unit)));
    report.push(e1);

    let mut unit_law = LawCheck::new("operad: unit");
    for g in d.same_arity(1).into_iter().map(|mut v| v.remove(0)) {
        let n = inst.arity(&g);
        let holds = (|| {
            let left = inst.operad_mu(&unit, core::slice::from_ref(&g))?;
            let right = inst.operad_mu(&g, &vec![unit.clone(); n])?;
            Ok(eq(&left, &g)? && eq(&right, &g)?)
        })();
        unit_law.record_result(holds, || format!("g={}", show(&g)));
    }
    report.push(unit_law);

    let mut op_assoc = LawCheck::new("operad: associativity");
    let mut op_map = LawCheck::new("projection: operad map");
    let mut identities = LawCheck::new("consequence: mu(e; e, ..., e) = e");
    for n in d.outer_arities() {
        for ks in d.inner_sizes(n) {
            let es: Vec<A::Elem> = ks.iter().map(|&k| inst.identity(k)).collect();
            let total: usize = ks.iter().sum();
            identities.record_result(
                inst.operad_mu(&inst.identity(n), &es).and_then(|m| eq(&m, &inst.identity(total))),
                || format!("n={n} ks={ks:?}"),
            );
            let mut shape = vec![n];
            shape.extend(&ks);
            for t in d.tuples(&shape) {
                let (g, fs) = (&t[0], &t[1..]);
                let holds = (|| {
                    let m = inst.operad_mu(g, fs)?;
                    let pfs: Vec<Permutation> = fs.iter().map(|f| inst.project(f)).collect();
                    Ok(inst.project(&m) == perm::mu_sigma(&inst.project(g), &pfs)?)
                })();
                op_map.record_result(holds, || fmt_list(inst, &t));

                let Sampler { max_inner, max_total, .. } = d.sampler;
                let hs_sizes: Vec<Vec<usize>> = match d.random_cases() {
                    None => bounded_vectors(total, max_inner, max_total),
                    Some(_) => vec![d.random_sizes(total, max_inner, max_total)],
                };
                for hsz in hs_sizes {
                    for hs in d.tuples(&hsz) {
                        let holds = (|| {
                            let left = inst.operad_mu(&inst.operad_mu(g, fs)?, &hs)?;
                            let mut inner = Vec::with_capacity(fs.len());
                            let mut rest = &hs[..];
                            for f in fs {
                                let (mine, tail) = rest.split_at(inst.arity(f));
                                inner.push(inst.operad_mu(f, mine)?);
                                rest = tail;
                            }
                            let right = inst.operad_mu(g, &inner)?;
                            eq(&left, &right)
                        })();
                        op_assoc.record_result(holds, || {
                            format!("g={} fs=[{}] hs=[{}]", show(g), fmt_list(inst, fs), fmt_list(inst, &hs))
                        });
                    }
                }
            }
        }
    }
    report.push(op_assoc);
    report.push(op_map);
    report.push(identities);

    report.push(check_compatibility(inst, &mut d));

    let mut abelian = LawCheck::new("consequence: G(1) abelian");
    for t in d.tuples(&[1, 1]) {
        let holds = (|| eq(&inst.multiply(&t[0], &t[1])?, &inst.multiply(&t[1], &t[0])?))();
        abelian.record_result(holds, || fmt_list(inst, &t));
    }
    report.push(abelian);

    report.extend(check_monoidal_sum(inst, &mut d));
    Ok(report)
}

fn check_compatibility<A: ActionOperad>(inst: &A, d: &mut Drawer<'_, A>) -> LawCheck {
    let mut law = LawCheck::new("compatibility");
    for n in d.outer_arities() {
        for ks in d.inner_sizes(n) {
            for gg in d.tuples(&[n, n]) {
                let (g, g2) = (&gg[0], &gg[1]);
                let p2 = inst.project(g2);
                let inv2 = p2.inverse();
                // f_i ∈ G(k_{π(g')⁻¹(i)}), f'_i ∈ G(k_i)
                let f_sizes: Vec<usize> = (1..=n).map(|i| ks[inv2.apply(i) - 1]).collect();
                let mut shape = f_sizes.clone();
                shape.extend(&ks);
                for t in d.tuples(&shape) {
                    let (fs, f2s) = t.split_at(n);
                    let holds = (|| {
                        let left = inst.multiply(&inst.operad_mu(g, fs)?, &inst.operad_mu(g2, f2s)?)?;
                        let mixed: Vec<A::Elem> = (1..=n)
                            .map(|i| inst.multiply(&fs[p2.apply(i) - 1], &f2s[i - 1]))
                            .collect::<Result<_>>()?;
                        let right = inst.operad_mu(&inst.multiply(g, g2)?, &mixed)?;
                        inst.equal(&left, &right)
                    })();
                    law.record_result(holds, || {
                        format!(
                            "g={} g'={} fs=[{}] f's=[{}]",
                            inst.format_elem(g),
                            inst.format_elem(g2),
                            fmt_list(inst, fs),
                            fmt_list(inst, f2s)
                        )
                    });
                }
            }
        }
    }
    law
}

fn check_monoidal_sum<A: ActionOperad>(inst: &A, d: &mut Drawer<'_, A>) -> Report {
    let mut report = Report::default();
    let max = d.sampler.max_arity;
    let pairs: Vec<(usize, usize)> = match d.random_cases() {
        None => (0..=max).flat_map(|m| (0..=max).map(move |n| (m, n))).collect(),
        Some((cases, _)) => {
            (0..cases).map(|_| (d.rng.gen_range(0..=max), d.rng.gen_range(0..=max))).collect()
        }
    };
    let mut unit = LawCheck::new("sum: preserves identities");
    let mut interchange = LawCheck::new("sum: preserves products");
    for &(m, n) in &pairs {
        unit.record_result(
            inst.sum(&inst.identity(m), &inst.identity(n))
                .and_then(|s| inst.equal(&s, &inst.identity(m + n))),
            || format!("m={m} n={n}"),
        );
        for t in d.tuples(&[m, m, n, n]) {
            let holds = (|| {
                let left = inst.sum(&inst.multiply(&t[0], &t[1])?, &inst.multiply(&t[2], &t[3])?)?;
                let right = inst.multiply(&inst.sum(&t[0], &t[2])?, &inst.sum(&t[1], &t[3])?)?;
                inst.equal(&left, &right)
            })();
            interchange.record_result(holds, || fmt_list(inst, &t));
        }
    }
    report.push(unit);
    report.push(interchange);

    let mut assoc = LawCheck::new("sum: associativity");
    let triples: Vec<[usize; 3]> = match d.random_cases() {
        None => cartesian(&vec![(0..=max).collect::<Vec<_>>(); 3])
            .into_iter()
            .map(|v| [v[0], v[1], v[2]])
            .collect(),
        Some((cases, _)) => (0..cases)
            .map(|_| [d.rng.gen_range(0..=max), d.rng.gen_range(0..=max), d.rng.gen_range(0..=max)])
            .collect(),
    };
    for arities in triples {
        for t in d.tuples(&arities) {
            let holds = (|| {
                let left = inst.sum(&inst.sum(&t[0], &t[1])?, &t[2])?;
                let right = inst.sum(&t[0], &inst.sum(&t[1], &t[2])?)?;
                inst.equal(&left, &right)
            })();
            assoc.record_result(holds, || fmt_list(inst, &t));
        }
    }
    report.push(assoc);
    report
}

/// Verifies that `map: G → H` is a map of action operads: a homomorphism in
/// each arity, an operad map, and compatible with the projections
/// (`π^H ∘ f = π^G`).
pub fn check_map<A, B, F>(src: &A, dst: &B, map: F, sampler: Sampler) -> Result<Report>
where
    A: ActionOperad,
    B: ActionOperad,
    F: Fn(&A::Elem) -> B::Elem,
{
    let mut d = Drawer::new(src, sampler)?;
    let mut report = Report::new(format!("map {} -> {}", src.name(), dst.name()));
    let show = |g: &A::Elem| src.format_elem(g);

    let mut hom = LawCheck::new("map: homomorphism");
    let mut over = LawCheck::new("map: commutes with projections");
    for t in d.same_arity(2) {
        let (g, h) = (&t[0], &t[1]);
        let holds = (|| {
            let n = src.arity(g);
            let fe = dst.equal(&map(&src.identity(n)), &dst.identity(n))?;
            let prod = dst.equal(&map(&src.multiply(g, h)?), &dst.multiply(&map(g), &map(h))?)?;
            Ok(fe && prod)
        })();
        hom.record_result(holds, || format!("g={} h={}", show(g), show(h)));
        over.record(dst.project(&map(g)) == src.project(g), || format!("g={}", show(g)));
    }
    report.push(hom);
    report.push(over);

    let mut op = LawCheck::new("map: operad map");
    op.record_result(dst.equal(&map(&src.operad_unit()), &dst.operad_unit()), || "unit".into());
    for n in d.outer_arities() {
        for ks in d.inner_sizes(n) {
            let mut shape = vec![n];
            shape.extend(&ks);
            for t in d.tuples(&shape) {
                let holds = (|| {
                    let left = map(&src.operad_mu(&t[0], &t[1..])?);
                    let images: Vec<B::Elem> = t[1..].iter().map(&map).collect();
                    let right = dst.operad_mu(&map(&t[0]), &images)?;
                    dst.equal(&left, &right)
                })();
                op.record_result(holds, || fmt_list(src, &t));
            }
        }
    }
    report.push(op);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_instance_projects_to_identities() {
        let t = instance_trivial();
        for n in 0..5 {
            assert!(t.project(&t.identity(n)).is_identity());
        }
        let r = check_axioms(&t, Sampler::exhaustive(4, 3, 6)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn symmetric_instance_delegates() {
        let s = instance_symmetric();
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let fs = [Permutation::identity(2), Permutation::transposition(2, 1), Permutation::identity(1)];
        assert_eq!(s.operad_mu(&g, &fs).unwrap(), perm::mu_sigma(&g, &fs).unwrap());
    }

    #[test]
    fn braid_instance_delegates() {
        let b = instance_braid();
        let w = BraidWord::new(3, vec![1, -2]).unwrap();
        assert_eq!(b.project(&w), w.underlying_permutation());
        assert!(b.elements(2).is_none());
        assert!(matches!(check_axioms(&b, Sampler::exhaustive(2, 2, 4)), Err(Error::InfiniteGroup(_))));
    }

    #[test]
    fn symmetric_factorization_round_trips() {
        let s = instance_symmetric();
        for g in Permutation::all(4) {
            let mut acc = Permutation::identity(4);
            for l in s.factor(&g) {
                acc = acc.product(&s.generator(4, l as usize)).unwrap();
            }
            assert_eq!(acc, g);
        }
    }

    #[test]
    fn bounded_vectors_respect_bounds() {
        let vs = bounded_vectors(3, 2, 3);
        assert!(vs.iter().all(|v| v.len() == 3 && v.iter().sum::<usize>() <= 3));
        assert_eq!(vs.len(), 17);
        assert_eq!(bounded_vectors(0, 2, 0), vec![Vec::<usize>::new()]);
    }
}
