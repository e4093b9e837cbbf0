//! Symmetric groups Σₙ and the symmetric operad Σ.
//!
//! A [`Permutation`] of arity `n` is stored as its one-line image: point `i`
//! (1-based) is sent to `image(i)`. Pictured as a strand diagram read from top
//! to bottom, the strand starting at position `i` ends at position `image(i)`.
//!
//! # Composition convention
//!
//! Two products are exposed and they are not the same thing:
//!
//! * [`compose`]`(p, q)` is the diagrammatic composite "p then q", i.e.
//!   `compose(p, q)(i) = q(p(i))`.
//! * [`Permutation::product`]`(g, h)` is the group product `gh` used by the
//!   action operad Σ, and it is ordinary function composition `g ∘ h`:
//!   `h` is applied first, so `g.product(h) == compose(h, g)`.
//!
//! The group product is the one under which [`mu_sigma`] satisfies the
//! action-operad compatibility axiom
//! `μ(g; f)·μ(g'; f') = μ(gg'; f_{g'(1)}f'_1, …, f_{g'(n)}f'_n)`; the
//! diagrammatic order fails it already in Σ₂ (see the tests).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from a 1-based one-line image.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::NotABijection(alloc::format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if core::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotABijection(alloc::format!(
                    "value {v} appears more than once"
                )));
            }
        }
        Ok(Permutation { image: image.into_iter().map(|v| v - 1).collect() })
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// The adjacent transposition swapping points `i` and `i + 1` (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition ({i} {}) outside Σ{n}", i + 1);
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// Builds a permutation of `n` points from disjoint cycles written with
    /// 1-based points, e.g. `&[&[1, 2, 3]]` for `(123)`, sending 1 to 2.
    ///
    /// Intended for fixtures; the rest of the API speaks one-line images.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::NotABijection(alloc::format!(
                        "cycle point {a} is outside 1..={n}"
                    )));
                }
                if core::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::NotABijection(alloc::format!(
                        "cycle point {a} appears more than once"
                    )));
                }
                image[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(image)
    }

    pub fn arity(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// The 1-based one-line image.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|v| v + 1)
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// The group product `self · other = self ∘ other` (`other` acts first).
    pub fn product(&self, other: &Permutation) -> Result<Self> {
        compose(other, self)
    }

    /// Number of pairs `i < j` with `image(i) > image(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.image.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// All of Σₙ in lexicographic order of one-line images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { image: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Diagrammatic composite "p then q": `compose(p, q)(i) = q(p(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch { left: p.arity(), right: q.arity() });
    }
    Ok(Permutation { image: p.image.iter().map(|&v| q.image[v]).collect() })
}

/// `τ₁ ⊕ ⋯ ⊕ τₖ`: the first block permuted by `τ₁`, the next by `τ₂`, and so on.
pub fn block_sum<'a, I>(taus: I) -> Permutation
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut image = Vec::new();
    for t in taus {
        let offset = image.len();
        image.extend(t.image.iter().map(|v| v + offset));
    }
    Permutation { image }
}

/// `σ⁺`: moves the `i`-th block (of size `sizes[i]`, contents kept in order)
/// to block position `σ(i)`. Size-0 blocks vanish.
pub fn block_lift(sigma: &Permutation, sizes: &[usize]) -> Result<Permutation> {
    let n = sigma.arity();
    if sizes.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: sizes.len() });
    }
    // start of the block that lands in target slot s
    let inv = sigma.inverse();
    let mut target_start = vec![0; n];
    let mut acc = 0;
    for slot in 0..n {
        target_start[slot] = acc;
        acc += sizes[inv.image[slot]];
    }
    let mut image = Vec::with_capacity(acc);
    for (i, &k) in sizes.iter().enumerate() {
        let start = target_start[sigma.image[i]];
        image.extend(start..start + k);
    }
    Ok(Permutation { image })
}

/// Operadic composition in Σ: `μ(σ; τ₁, …, τₙ) = σ⁺ · (τ₁ ⊕ ⋯ ⊕ τₙ)`, with `σ⁺`
/// lifted along the arities of the `τᵢ`. Under the group product the block
/// sum acts first.
pub fn mu_sigma(sigma: &Permutation, taus: &[Permutation]) -> Result<Permutation> {
    if taus.len() != sigma.arity() {
        return Err(Error::LengthMismatch { expected: sigma.arity(), found: taus.len() });
    }
    let sizes: Vec<usize> = taus.iter().map(Permutation::arity).collect();
    let lift = block_lift(sigma, &sizes)?;
    lift.product(&block_sum(taus))
}

/// `τ_{m,n} ∈ Σ_{mn}`, the transpose of an `m × n` grid: the `i`-th pair in
/// row-major order is the `τ(i)`-th pair in column-major order.
pub fn tau(m: usize, n: usize) -> Permutation {
    let mut image = Vec::with_capacity(m * n);
    for p in 0..m {
        for q in 0..n {
            image.push(q * m + p);
        }
    }
    Permutation { image }
}

/// The left action on tuples: `result[i] = xs[p⁻¹(i)]`, so the entry at
/// position `j` moves to position `p(j)`.
pub fn act_on_list<T: Clone>(p: &Permutation, xs: &[T]) -> Result<Vec<T>> {
    if xs.len() != p.arity() {
        return Err(Error::LengthMismatch { expected: p.arity(), found: xs.len() });
    }
    let inv = p.inverse();
    Ok(inv.image.iter().map(|&j| xs[j].clone()).collect())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a space-separated one-line image such as `1 3 5 2 4 6`.
    fn from_str(s: &str) -> Result<Self> {
        let mut image = Vec::new();
        for (position, token) in s.split_whitespace().enumerate() {
            let v: usize = token.parse().map_err(|_| Error::Parse {
                position: position + 1,
                token: token.into(),
                reason: "expected a positive integer",
            })?;
            image.push(v);
        }
        Permutation::new(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_identity_and_inverse() {
        for s in Permutation::all(3) {
            assert_eq!(compose(&Permutation::identity(3), &s).unwrap(), s);
            assert!(compose(&s, &s.inverse()).unwrap().is_identity());
        }
        assert_eq!(
            compose(&p(&[1, 2]), &p(&[1, 2, 3])),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn compose_of_two_transpositions() {
        // (12) then (23): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(compose(&p(&[2, 1, 3]), &p(&[1, 3, 2])).unwrap(), p(&[3, 1, 2]));
        // and the group product is the other order
        assert_eq!(p(&[2, 1, 3]).product(&p(&[1, 3, 2])).unwrap(), p(&[2, 3, 1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(tau(2, 3).inverse(), tau(3, 2));
    }

    #[test]
    fn block_sum_examples() {
        assert_eq!(block_sum(&[p(&[2, 1]), p(&[2, 1])]), p(&[2, 1, 4, 3]));
        assert_eq!(
            block_sum(&[Permutation::identity(2), Permutation::identity(3)]),
            Permutation::identity(5)
        );
        assert_eq!(block_sum(&[p(&[2, 1])]), p(&[2, 1]));
        assert_eq!(block_sum(&[]), Permutation::identity(0));
        // (12)(34) = μ(e₂; (12), (12))
        assert_eq!(
            mu_sigma(&Permutation::identity(2), &[p(&[2, 1]), p(&[2, 1])]).unwrap(),
            p(&[2, 1, 4, 3])
        );
    }

    /// Relabels physical blocks: lay the blocks out as lists of point names,
    /// shuffle the lists by σ and read off where each point landed.
    fn block_move_oracle(sigma: &Permutation, sizes: &[usize]) -> Permutation {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut next = 1;
        for &k in sizes {
            blocks.push((next..next + k).collect());
            next += k;
        }
        let moved = act_on_list(sigma, &blocks).unwrap();
        let flat: Vec<usize> = moved.into_iter().flatten().collect();
        let mut image = vec![0; flat.len()];
        for (pos, &point) in flat.iter().enumerate() {
            image[point - 1] = pos + 1;
        }
        p(&image)
    }

    #[test]
    fn block_lift_matches_block_move_oracle() {
        assert_eq!(block_lift(&p(&[2, 1]), &[2, 1]).unwrap(), p(&[2, 3, 1]));
        for n in 0..=3 {
            for s in Permutation::all(n) {
                for sizes in size_vectors(n, 3) {
                    assert_eq!(block_lift(&s, &sizes).unwrap(), block_move_oracle(&s, &sizes));
                }
            }
        }
    }

    #[test]
    fn block_lift_edge_cases() {
        assert!(block_lift(&Permutation::identity(3), &[2, 0, 4]).unwrap().is_identity());
        let s = p(&[3, 1, 2]);
        assert_eq!(block_lift(&s, &[1, 1, 1]).unwrap(), s);
        assert_eq!(
            block_lift(&s, &[1, 1]),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        );
    }

    fn size_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=max).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn tau_fixtures() {
        assert_eq!(tau(2, 3), p(&[1, 3, 5, 2, 4, 6]));
        assert_eq!(tau(4, 2), p(&[1, 5, 2, 6, 3, 7, 4, 8]));
        for n in 1..=6 {
            assert!(tau(1, n).is_identity());
            assert!(tau(n, 1).is_identity());
        }
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(tau(m, n).inverse(), tau(n, m));
            }
        }
    }

    /// Counts pairs of grid cells whose relative order flips between the
    /// row-major and column-major readings of an m × n matrix.
    fn transposed_pairs(m: usize, n: usize) -> usize {
        let cells: Vec<(usize, usize)> =
            (0..m).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let mut count = 0;
        for (i, x) in cells.iter().enumerate() {
            for y in &cells[i + 1..] {
                let col_major = |c: &(usize, usize)| (c.1, c.0);
                if col_major(x) > col_major(y) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(Permutation::identity(5).inversions(), 0);
        assert_eq!(tau(2, 3).inversions(), 3);
        assert_eq!(tau(2, 2).inversions(), 1);
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(tau(m, n).inversions(), transposed_pairs(m, n), "τ({m},{n})");
            }
        }
    }

    #[test]
    fn act_on_list_examples() {
        let xs = ['x', 'y', 'z'];
        assert_eq!(act_on_list(&Permutation::identity(3), &xs).unwrap(), xs.to_vec());
        assert_eq!(act_on_list(&p(&[2, 1]), &['x', 'y']).unwrap(), vec!['y', 'x']);
        assert!(act_on_list(&p(&[2, 1]), &xs).is_err());
    }

    #[test]
    fn act_on_list_is_a_left_action_of_the_group_product() {
        let xs = ['a', 'b', 'c'];
        for g in Permutation::all(3) {
            for h in Permutation::all(3) {
                let gh = g.product(&h).unwrap();
                let lhs = act_on_list(&gh, &xs).unwrap();
                let rhs = act_on_list(&g, &act_on_list(&h, &xs).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // the diagrammatic order is not a left action
        let (g, h) = (p(&[2, 1, 3]), p(&[1, 3, 2]));
        let diag = act_on_list(&compose(&g, &h).unwrap(), &xs).unwrap();
        assert_ne!(diag, act_on_list(&g, &act_on_list(&h, &xs).unwrap()).unwrap());
    }

    #[test]
    fn block_example_in_sigma9() {
        let lhs = mu_sigma(
            &cyc(3, &[&[1, 2, 3]]),
            &[cyc(2, &[&[1, 2]]), cyc(4, &[&[1, 2], &[3, 4]]), cyc(3, &[&[1, 3]])],
        )
        .unwrap();
        let rhs = mu_sigma(
            &cyc(4, &[&[1, 2, 3, 4]]),
            &[cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(3, &[&[1, 3]])],
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, p(&[5, 4, 7, 6, 9, 8, 3, 2, 1]));
    }

    #[test]
    fn parse_and_format() {
        let t: Permutation = "1 3 5 2 4 6".parse().unwrap();
        assert_eq!(t, tau(2, 3));
        assert_eq!(t.to_string(), "1 3 5 2 4 6");
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::identity(0));
        let err = "1 2 2".parse::<Permutation>().unwrap_err();
        assert!(err.to_string().contains("value 2 appears more than once"), "{err}");
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
