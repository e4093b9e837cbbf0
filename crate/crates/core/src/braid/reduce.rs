//! Dehornoy handle reduction.
//!
//! A σᵢ-handle is a subword `σᵢ^e v σᵢ^{-e}` whose interior `v` only uses
//! generators σⱼ with `j > i`. It is permitted when `v` contains no σᵢ₊₁-handle,
//! i.e. all of its σᵢ₊₁ letters share one sign. Reducing it deletes the outer
//! letters and rewrites each `σᵢ₊₁^d` of the interior as
//! `σᵢ₊₁^{-e} σᵢ^d σᵢ₊₁^e`. Repeating until no handle is left terminates, and the
//! result is empty exactly when the input represents the identity.

use alloc::vec::Vec;

/// Position `(p, q)` of the handle that closes first when scanning left to
/// right. Such a handle contains no other handle, so it is permitted.
fn first_handle(word: &[i32]) -> Option<(usize, usize)> {
    for q in 1..word.len() {
        let gen = word[q].unsigned_abs();
        for p in (0..q).rev() {
            let other = word[p].unsigned_abs();
            if other < gen {
                break;
            }
            if other == gen {
                if word[p] == -word[q] {
                    return Some((p, q));
                }
                break;
            }
        }
    }
    None
}

fn reduce_handle(word: &[i32], p: usize, q: usize) -> Vec<i32> {
    let e = word[p].signum();
    let i = word[p].abs();
    let mut out = Vec::with_capacity(word.len() + 2 * (q - p));
    out.extend_from_slice(&word[..p]);
    for &x in &word[p + 1..q] {
        if x.abs() == i + 1 {
            out.push(-e * (i + 1));
            out.push(x.signum() * i);
            out.push(e * (i + 1));
        } else {
            out.push(x);
        }
    }
    out.extend_from_slice(&word[q + 1..]);
    out
}

/// Reduces `word` until it contains no handle.
pub(crate) fn handle_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = free_reduce(word);
    while let Some((p, q)) = first_handle(&w) {
        w = reduce_handle(&w, p, q);
    }
    w
}

/// Cancels adjacent inverse pairs.
pub(crate) fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_innermost_handle() {
        // σ1 σ2 σ1⁻¹: a permitted σ1-handle
        assert_eq!(first_handle(&[1, 2, -1]), Some((0, 2)));
        // σ1 σ1 has no handle
        assert_eq!(first_handle(&[1, 1]), None);
        // σ2 σ1 σ2⁻¹ is not a handle: σ1 sits inside
        assert_eq!(first_handle(&[2, 1, -2]), None);
        assert_eq!(first_handle(&[1, 3, 2, -2, -1]), Some((2, 3)));
    }

    #[test]
    fn reduces_a_conjugate() {
        // σ1 σ2 σ1⁻¹ = σ2⁻¹ σ1 σ2
        assert_eq!(reduce_handle(&[1, 2, -1], 0, 2), [-2, 1, 2]);
        assert_eq!(handle_reduce(&[1, 2, -1, -2, -1, 2]), [] as [i32; 0]);
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&[1, -2, 2, -1, 3]), [3]);
        assert_eq!(free_reduce(&[1, 1]), [1, 1]);
    }
}
