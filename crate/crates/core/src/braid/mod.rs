//! Braid groups Brₙ as signed Artin words and the braid operad Br.
//!
//! Letter `+i` is σᵢ (strand `i` passes over strand `i + 1`) and `-i` is σᵢ⁻¹.
//! The group product of two braids is concatenation of their words, and
//! [`BraidWord::underlying_permutation`] is a homomorphism onto Σₙ with its
//! group product ([`Permutation::product`]): the last letter of a word acts
//! first.
//!
//! Equality is decided by handle reduction, with a shortcut for words that
//! are positive (or negative) and minimal, since those are determined by
//! their permutation.

mod reduce;

use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{self, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for (k, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange {
                    position: k + 1,
                    letter: l as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// σᵢ (or σᵢ⁻¹ when `positive` is false) on `strands` strands.
    pub fn generator(strands: usize, i: usize, positive: bool) -> Result<Self> {
        let l = i as i32;
        BraidWord::new(strands, alloc::vec![if positive { l } else { -l }])
    }

    /// Parses whitespace-separated nonzero integers; the strand count is
    /// supplied separately.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for (k, token) in text.split_whitespace().enumerate() {
            let l: i64 = token.parse().map_err(|_| Error::Parse {
                position: k + 1,
                token: token.into(),
                reason: "expected a nonzero integer",
            })?;
            if l == 0 || l.unsigned_abs() >= strands as u64 {
                return Err(Error::GeneratorOutOfRange { position: k + 1, letter: l, strands });
            }
            letters.push(l as i32);
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group product `self · other` (concatenation).
    pub fn product(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::ArityMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `π: Brₙ → Σₙ`.
    pub fn underlying_permutation(&self) -> Permutation {
        // at[pos] = the point currently sitting at pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in self.letters.iter().rev() {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut image = alloc::vec![0; self.strands];
        for (pos, &point) in at.iter().enumerate() {
            image[point] = pos;
        }
        Permutation::from_zero_based(image)
    }

    pub fn free_reduce(&self) -> Self {
        BraidWord { strands: self.strands, letters: reduce::free_reduce(&self.letters) }
    }

    /// A handle-free word representing the same braid.
    pub fn handle_reduce(&self) -> Self {
        BraidWord { strands: self.strands, letters: reduce::handle_reduce(&self.letters) }
    }

    pub fn is_trivial(&self) -> bool {
        reduce::handle_reduce(&self.letters).is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|&l| l < 0)
    }

    /// Positive with no pair of strands crossing twice. For positive words
    /// the crossing count of each pair is invariant under the positive braid
    /// relations, so this is `len == inversions(π)`.
    pub fn is_minimal_positive(&self) -> bool {
        self.is_positive() && self.len() == self.underlying_permutation().inversions()
    }

    /// The mirror notion for words in the inverse generators.
    pub fn is_minimal_negative(&self) -> bool {
        self.is_negative() && self.inverse().is_minimal_positive()
    }

    /// Decides `self = other` in Brₙ.
    pub fn equal(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::ArityMismatch { left: self.strands, right: other.strands });
        }
        if let Some(eq) = self.minimal_fast_path(other) {
            return Ok(eq);
        }
        Ok(self.product(&other.inverse())?.is_trivial())
    }

    /// Equality of two positive minimal (or two negative minimal) words is
    /// equality of their permutations. `None` when the shortcut does not apply.
    pub fn minimal_fast_path(&self, other: &BraidWord) -> Option<bool> {
        let both_positive = self.is_minimal_positive() && other.is_minimal_positive();
        let both_negative = self.is_minimal_negative() && other.is_minimal_negative();
        if both_positive || both_negative {
            Some(self.underlying_permutation() == other.underlying_permutation())
        } else {
            None
        }
    }

    /// A uniformly random word of exactly `len` letters.
    pub fn random<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> Self {
        if strands < 2 {
            return BraidWord::identity(strands);
        }
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands) as i32;
                if rng.gen_bool(0.5) { i } else { -i }
            })
            .collect();
        BraidWord { strands, letters }
    }

    fn shifted(&self, offset: usize) -> impl Iterator<Item = i32> + '_ {
        let o = offset as i32;
        self.letters.iter().map(move |&l| if l > 0 { l + o } else { l - o })
    }
}

/// The unique positive minimal braid over `p`, read off from a straight
/// insertion sort of the one-line image.
pub fn permutation_braid(p: &Permutation) -> BraidWord {
    let mut image = p.zero_based().to_vec();
    let mut swaps = Vec::with_capacity(p.inversions());
    for i in 1..image.len() {
        let mut j = i;
        while j > 0 && image[j - 1] > image[j] {
            image.swap(j - 1, j);
            swaps.push(j as i32);
            j -= 1;
        }
    }
    // p ∘ s_{a1} ∘ ⋯ ∘ s_{ak} = e, so p = s_{ak} ∘ ⋯ ∘ s_{a1}
    swaps.reverse();
    BraidWord { strands: p.arity(), letters: swaps }
}

/// Disjoint union of braids side by side.
pub fn block_sum_braids<'a, I>(braids: I) -> BraidWord
where
    I: IntoIterator<Item = &'a BraidWord>,
{
    let mut strands = 0;
    let mut letters = Vec::new();
    for b in braids {
        letters.extend(b.shifted(strands));
        strands += b.strands;
    }
    BraidWord { strands, letters }
}

/// Positive braid in which a block of `a` strands crosses over the following
/// block of `b` strands, each pair crossing once.
fn block_crossing(a: usize, b: usize) -> BraidWord {
    let swap = Permutation::transposition(2, 1);
    let lift = perm::block_lift(&swap, &[a, b]).expect("two sizes for Σ₂");
    permutation_braid(&lift)
}

/// `g⁺`: replaces strand `i` (counted at the end of `g` that acts first) by
/// `sizes[i]` parallel strands. A crossing between cables of sizes `a` and `b`
/// becomes `a·b` crossings of the same sign.
pub fn cable(g: &BraidWord, sizes: &[usize]) -> Result<BraidWord> {
    if sizes.len() != g.strands {
        return Err(Error::LengthMismatch { expected: g.strands, found: sizes.len() });
    }
    let total: usize = sizes.iter().sum();
    let mut cur = sizes.to_vec();
    let mut pieces: Vec<Vec<i32>> = Vec::with_capacity(g.len());
    for &l in g.letters.iter().rev() {
        let i = l.unsigned_abs() as usize;
        let (a, b) = (cur[i - 1], cur[i]);
        let offset: usize = cur[..i - 1].iter().sum();
        let block = if l > 0 { block_crossing(a, b) } else { block_crossing(b, a).inverse() };
        pieces.push(block.shifted(offset).collect());
        cur.swap(i - 1, i);
    }
    let letters = pieces.into_iter().rev().flatten().collect();
    Ok(BraidWord { strands: total, letters })
}

/// Operadic composition in Br: `μ(g; f₁, …, fₙ) = g⁺ · (f₁ ⊕ ⋯ ⊕ fₙ)`.
pub fn mu_br(g: &BraidWord, fs: &[BraidWord]) -> Result<BraidWord> {
    if fs.len() != g.strands {
        return Err(Error::LengthMismatch { expected: g.strands, found: fs.len() });
    }
    let sizes: Vec<usize> = fs.iter().map(BraidWord::strands).collect();
    cable(g, &sizes)?.product(&block_sum_braids(fs))
}

/// The positive minimal braid over `τ_{m,n}`.
pub fn t_positive(m: usize, n: usize) -> BraidWord {
    permutation_braid(&perm::tau(m, n))
}

/// The negative minimal braid over `τ_{m,n}`: the inverse of `t_positive(n, m)`.
pub fn t_negative(m: usize, n: usize) -> BraidWord {
    t_positive(n, m).inverse()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Br{}[{}]", self.strands, self)
    }
}
