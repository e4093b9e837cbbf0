//! Group-level conditions for pseudo-commutative structures on the free
//! algebra 2-monad of a contractible operad.
//!
//! A family `t(m, n) ∈ G(mn)` must lie over the grid transposition
//! `τ_{m,n}`, be trivial when `m = 1` or `n = 1`, and satisfy two interchange
//! equations built from `μ^G`. The structure is symmetric when
//! `t(m, n) t(n, m) = e`. The higher coherence cells are not represented:
//! in a contractible operad any two parallel cells agree, so these group
//! equations are all there is to check.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::action_operad::{bounded_vectors, ActionOperad, Braid, Symmetric};
use crate::braid::{t_negative, t_positive, BraidWord};
use crate::error::{Error, Result};
use crate::perm::tau;
use crate::report::{LawCheck, Report};

/// Which index placement an interchange equation is evaluated in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    AsStated,
    Transposed,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::AsStated => "as stated",
            Orientation::Transposed => "transposed",
        })
    }
}

/// The orientations of the two interchange equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientations {
    /// `μ(e_l; t(m₁,n), …, t(m_l,n)) · μ(t(l,n); e_{m₁}, …, e_{m_l}, …) = t(n, M)`,
    /// transposed: `t(n, mᵢ)` and `t(n, l)` in place of `t(mᵢ, n)` and `t(l, n)`.
    pub interchange: Orientation,
    /// `μ(t(m,l); e_{n₁}, …, e_{n₁}, …, e_{n_m}) · μ(e_m; t(n₁,l), …, t(n_m,l)) = t(N, l)`,
    /// transposed: `t(l, m)` and `t(l, nᵢ)` in place of `t(m, l)` and `t(nᵢ, l)`.
    pub dual: Orientation,
}

/// A family `t(m, n) ∈ G(mn)`.
pub struct TFamily<A: ActionOperad> {
    pub name: String,
    generator: Box<dyn Fn(usize, usize) -> A::Elem>,
}

impl<A: ActionOperad> TFamily<A> {
    pub fn new(name: impl Into<String>, generator: impl Fn(usize, usize) -> A::Elem + 'static) -> Self {
        TFamily { name: name.into(), generator: Box::new(generator) }
    }

    pub fn get(&self, m: usize, n: usize) -> A::Elem {
        (self.generator)(m, n)
    }
}

/// `t = τ` in Σ.
pub fn tau_family() -> TFamily<Symmetric> {
    TFamily::new("tau", tau)
}

pub fn positive_family() -> TFamily<Braid> {
    TFamily::new("positive", t_positive)
}

pub fn negative_family() -> TFamily<Braid> {
    TFamily::new("negative", t_negative)
}

/// Left side of the first interchange equation and its target.
fn interchange_sides<A: ActionOperad>(
    g: &A,
    t: &TFamily<A>,
    o: Orientation,
    l: usize,
    ms: &[usize],
    n: usize,
) -> Result<(A::Elem, A::Elem)> {
    if ms.len() != l {
        return Err(Error::LengthMismatch { expected: l, found: ms.len() });
    }
    let big_m: usize = ms.iter().sum();
    let inner: Vec<A::Elem> = ms
        .iter()
        .map(|&m| match o {
            Orientation::AsStated => t.get(m, n),
            Orientation::Transposed => t.get(n, m),
        })
        .collect();
    let left = g.operad_mu(&g.identity(l), &inner)?;
    let outer = match o {
        Orientation::AsStated => t.get(l, n),
        Orientation::Transposed => t.get(n, l),
    };
    let ids: Vec<A::Elem> = (0..n).flat_map(|_| ms.iter().map(|&m| g.identity(m))).collect();
    let right = g.operad_mu(&outer, &ids)?;
    Ok((g.multiply(&left, &right)?, t.get(n, big_m)))
}

/// Left side of the second interchange equation and its target.
fn dual_sides<A: ActionOperad>(
    g: &A,
    t: &TFamily<A>,
    o: Orientation,
    l: usize,
    m: usize,
    ns: &[usize],
) -> Result<(A::Elem, A::Elem)> {
    if ns.len() != m {
        return Err(Error::LengthMismatch { expected: m, found: ns.len() });
    }
    let big_n: usize = ns.iter().sum();
    let outer = match o {
        Orientation::AsStated => t.get(m, l),
        Orientation::Transposed => t.get(l, m),
    };
    let ids: Vec<A::Elem> = ns.iter().flat_map(|&k| (0..l).map(move |_| k)).map(|k| g.identity(k)).collect();
    let left = g.operad_mu(&outer, &ids)?;
    let inner: Vec<A::Elem> = ns
        .iter()
        .map(|&k| match o {
            Orientation::AsStated => t.get(k, l),
            Orientation::Transposed => t.get(l, k),
        })
        .collect();
    let right = g.operad_mu(&g.identity(m), &inner)?;
    Ok((g.multiply(&left, &right)?, t.get(big_n, l)))
}

/// Whether the first interchange equation holds for `(l, m₁..m_l, n)`.
pub fn verify_interchange<A: ActionOperad>(
    g: &A,
    t: &TFamily<A>,
    o: Orientation,
    l: usize,
    ms: &[usize],
    n: usize,
) -> Result<bool> {
    let (lhs, target) = interchange_sides(g, t, o, l, ms, n)?;
    g.equal(&lhs, &target)
}

/// Whether the second interchange equation holds for `(l, m, n₁..n_m)`.
pub fn verify_interchange_dual<A: ActionOperad>(
    g: &A,
    t: &TFamily<A>,
    o: Orientation,
    l: usize,
    m: usize,
    ns: &[usize],
) -> Result<bool> {
    let (lhs, target) = dual_sides(g, t, o, l, m, ns)?;
    g.equal(&lhs, &target)
}

/// Index tuples `(l, (m₁..m_l), n)` with every entry in `1..=bound`.
fn shapes(bound: usize) -> Vec<(usize, Vec<usize>, usize)> {
    let mut out = Vec::new();
    for l in 1..=bound {
        for v in bounded_vectors(l, bound - 1, usize::MAX / 2) {
            let ms: Vec<usize> = v.iter().map(|k| k + 1).collect();
            for n in 1..=bound {
                out.push((l, ms.clone(), n));
            }
        }
    }
    out
}

/// Checks both orientations of both equations over Σ with `t = τ` for every
/// index up to `bound`, and returns the one that holds for each equation.
///
/// Fails when neither orientation of an equation holds identically, and when
/// both do. The latter happens for `bound <= 2`: `τ(1,2)`, `τ(2,1)` and
/// `τ(2,2)` are all involutions equal to their transposes, so the two
/// orientations compute the same permutation.
pub fn resolve_orientation(bound: usize) -> Result<Orientations> {
    let g = Symmetric;
    let t = tau_family();
    let holds = |o: Orientation, dual: bool| -> Result<bool> {
        for (l, ms, n) in shapes(bound) {
            let ok = if dual {
                verify_interchange_dual(&g, &t, o, n, l, &ms)?
            } else {
                verify_interchange(&g, &t, o, l, &ms, n)?
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let pick = |dual: bool| -> Result<Orientation> {
        let which = if dual { "second" } else { "first" };
        match (holds(Orientation::AsStated, dual)?, holds(Orientation::Transposed, dual)?) {
            (true, false) => Ok(Orientation::AsStated),
            (false, true) => Ok(Orientation::Transposed),
            (true, true) => Err(Error::Invalid(format!(
                "both orientations of the {which} equation hold for indices up to {bound}; use a larger bound"
            ))),
            (false, false) => Err(Error::Invalid(format!(
                "neither orientation of the {which} equation holds over the symmetric groups"
            ))),
        }
    };
    Ok(Orientations { interchange: pick(false)?, dual: pick(true)? })
}

fn fmt_list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
    parts.join(",")
}

/// `π(t(m, n)) = τ_{m,n}` for `m, n ≤ bound`.
pub fn verify_pi_condition<A: ActionOperad>(g: &A, t: &TFamily<A>, bound: usize) -> LawCheck {
    let mut law = LawCheck::new(format!("pi(t(m,n)) = tau(m,n), m,n <= {bound}"));
    for m in 1..=bound {
        for n in 1..=bound {
            let x = t.get(m, n);
            law.record(g.project(&x) == tau(m, n), || format!("m={m} n={n}: t = {}", g.format_elem(&x)));
        }
    }
    law
}

/// `t(1, n) = e_n = t(n, 1)` for `n ≤ bound`.
pub fn verify_unit_family<A: ActionOperad>(g: &A, t: &TFamily<A>, bound: usize) -> LawCheck {
    let mut law = LawCheck::new(format!("t(1,n) = e = t(n,1), n <= {bound}"));
    for n in 0..=bound {
        let e = g.identity(n);
        for x in [t.get(1, n), t.get(n, 1)] {
            law.record_result(g.equal(&x, &e), || format!("n={n}: {}", g.format_elem(&x)));
        }
    }
    law
}

/// The first `(m, n)` with `t(m, n) t(n, m) ≠ e`, scanning `m, n ≤ bound`.
pub fn verify_symmetry<A: ActionOperad>(g: &A, t: &TFamily<A>, bound: usize) -> Result<Option<(usize, usize)>> {
    for m in 1..=bound {
        for n in 1..=bound {
            let prod = g.multiply(&t.get(m, n), &t.get(n, m))?;
            if !g.equal(&prod, &g.identity(m * n))? {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}

/// Both interchange families up to `bound`. `minimal` certifies each left
/// side (used for braids, where it justifies the positive fast path).
fn interchange_checks<A: ActionOperad>(
    g: &A,
    t: &TFamily<A>,
    o: Orientations,
    bound: usize,
    minimal: Option<&dyn Fn(&A::Elem) -> bool>,
) -> Result<[LawCheck; 3]> {
    let mut first = LawCheck::new(format!("interchange ({}), indices <= {bound}", o.interchange));
    let mut second = LawCheck::new(format!("dual interchange ({}), indices <= {bound}", o.dual));
    let mut min = LawCheck::new("left-hand sides are minimal");
    for (l, ms, n) in shapes(bound) {
        let (lhs, target) = interchange_sides(g, t, o.interchange, l, &ms, n)?;
        first.record_result(g.equal(&lhs, &target), || {
            format!("l={l} m={} n={n}: {} vs {}", fmt_list(&ms), g.format_elem(&lhs), g.format_elem(&target))
        });
        if let Some(is_min) = minimal {
            min.record(is_min(&lhs), || format!("l={l} m={} n={n}: {}", fmt_list(&ms), g.format_elem(&lhs)));
        }
        // the same shapes, read as (m, n₁..n_m, l)
        let (lhs, target) = dual_sides(g, t, o.dual, n, l, &ms)?;
        second.record_result(g.equal(&lhs, &target), || {
            format!("l={n} m={l} n={}: {} vs {}", fmt_list(&ms), g.format_elem(&lhs), g.format_elem(&target))
        });
        if let Some(is_min) = minimal {
            min.record(is_min(&lhs), || format!("l={n} m={l} n={}: {}", fmt_list(&ms), g.format_elem(&lhs)));
        }
    }
    Ok([first, second, min])
}

/// Arity bound for the π and unit conditions, which are cheap.
pub const FAMILY_BOUND: usize = 6;

/// The pseudo-commutativity report for Σ with `t = τ`.
pub fn symmetric_report(bound: usize) -> Result<Report> {
    let o = resolve_orientation(bound.max(3))?;
    let g = Symmetric;
    let t = tau_family();
    let mut r = Report::new(format!("pseudo-commutativity of Sigma with t = tau, bound {bound}"));
    r.note(format!("orientation: interchange {}, dual interchange {}", o.interchange, o.dual));
    r.push(verify_pi_condition(&g, &t, FAMILY_BOUND));
    r.push(verify_unit_family(&g, &t, FAMILY_BOUND));
    let [a, b, _] = interchange_checks(&g, &t, o, bound, None)?;
    r.push(a);
    r.push(b);
    let mut sym = LawCheck::new(format!("symmetry t(m,n) t(n,m) = e, m,n <= {}", bound.max(4)));
    let witness = verify_symmetry(&g, &t, bound.max(4))?;
    sym.record(witness.is_none(), || {
        let (m, n) = witness.unwrap_or_default();
        format!("m={m} n={n}")
    });
    r.push(sym);
    r.note(match witness {
        None => String::from("SYMMETRY: HOLDS"),
        Some((m, n)) => format!("SYMMETRY: FAILS at m={m} n={n}"),
    });
    Ok(r)
}

fn braid_family_report(
    r: &mut Report,
    t: &TFamily<Braid>,
    o: Orientations,
    bound: usize,
    is_min: &dyn Fn(&BraidWord) -> bool,
) -> Result<()> {
    let g = Braid;
    let tag = |c: LawCheck| LawCheck { law: format!("[{}] {}", t.name, c.law), ..c };
    r.push(tag(verify_pi_condition(&g, t, FAMILY_BOUND)));
    r.push(tag(verify_unit_family(&g, t, FAMILY_BOUND)));
    let mut words = LawCheck::new(format!("t(m,n) minimal, m,n <= {FAMILY_BOUND}"));
    for m in 1..=FAMILY_BOUND {
        for n in 1..=FAMILY_BOUND {
            let w = t.get(m, n);
            words.record(is_min(&w), || format!("m={m} n={n}: {w}"));
        }
    }
    r.push(tag(words));
    for c in interchange_checks(&g, t, o, bound, Some(is_min))? {
        r.push(tag(c));
    }
    let mut asym = LawCheck::new("symmetry fails");
    let witness = verify_symmetry(&g, t, bound)?;
    asym.record(witness.is_some(), || String::from("t(m,n) t(n,m) = e for every m,n"));
    r.push(tag(asym));
    if let Some((m, n)) = witness {
        let prod = t.get(m, n).product(&t.get(n, m))?;
        r.note(format!(
            "[{}] SYMMETRY: FAILS (expected) witness m={m} n={n}: t({m},{n}) t({n},{m}) = {prod} != e in Br{}",
            t.name,
            m * n
        ));
    }
    Ok(())
}

/// The braid report: both the positive and the negative family satisfy every
/// condition up to `bound`, with minimality certificates, and neither is
/// symmetric.
pub fn braid_theorem_report(bound: usize) -> Result<Report> {
    let o = resolve_orientation(3)?;
    let mut r = Report::new(format!("pseudo-commutativity of Br, bound {bound}"));
    r.note(format!("orientation: interchange {}, dual interchange {}", o.interchange, o.dual));
    r.note(format!("t(2,2) = {}", t_positive(2, 2)));
    braid_family_report(&mut r, &positive_family(), o, bound, &BraidWord::is_minimal_positive)?;
    braid_family_report(&mut r, &negative_family(), o, bound, &BraidWord::is_minimal_negative)?;
    r.note("coherence cells: not checked separately; in a contractible operad parallel cells agree, leaving the group equations above");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_is_resolved_and_stable() {
        let o3 = resolve_orientation(3).unwrap();
        let o4 = resolve_orientation(4).unwrap();
        assert_eq!(o3, o4);
        assert_eq!(o3, Orientations { interchange: Orientation::Transposed, dual: Orientation::AsStated });
    }

    #[test]
    fn indices_up_to_two_do_not_discriminate() {
        assert!(resolve_orientation(2).is_err());
        let (g, t) = (Symmetric, tau_family());
        let a = verify_interchange(&g, &t, Orientation::AsStated, 2, &[1, 2], 2).unwrap();
        let b = verify_interchange(&g, &t, Orientation::Transposed, 2, &[1, 2], 2).unwrap();
        assert!(a && b);
    }

    #[test]
    fn exactly_one_orientation_at_a_small_shape() {
        let (g, t) = (Symmetric, tau_family());
        let a = verify_interchange(&g, &t, Orientation::AsStated, 1, &[2], 3).unwrap();
        let b = verify_interchange(&g, &t, Orientation::Transposed, 1, &[2], 3).unwrap();
        assert!(!a && b);
    }

    #[test]
    fn unit_shapes_are_trivial() {
        let (g, t) = (Symmetric, tau_family());
        for o in [Orientation::AsStated, Orientation::Transposed] {
            for k in 1..=3 {
                assert!(verify_interchange(&g, &t, o, 1, &[k], 1).unwrap());
                assert!(verify_interchange_dual(&g, &t, o, 1, 1, &[k]).unwrap());
            }
        }
    }

    #[test]
    fn symmetric_structure() {
        let r = symmetric_report(3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.notes.iter().any(|n| n == "SYMMETRY: HOLDS"));
    }

    #[test]
    fn braid_structures() {
        let r = braid_theorem_report(3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.notes.iter().any(|n| n == "t(2,2) = 2"));
        assert!(r.notes.iter().any(|n| n.starts_with("[positive] SYMMETRY: FAILS (expected) witness m=2 n=2")));
        assert!(r.notes.iter().any(|n| n.starts_with("[negative] SYMMETRY: FAILS (expected) witness m=2 n=2")));
    }

    #[test]
    fn corrupted_family_is_caught() {
        let t = TFamily::<Braid>::new("corrupt", |m, n| {
            if (m, n) == (2, 2) { BraidWord::new(4, alloc::vec![1]).unwrap() } else { t_positive(m, n) }
        });
        let o = resolve_orientation(3).unwrap();
        let [a, b, _] = interchange_checks(&Braid, &t, o, 3, None).unwrap();
        assert!(!a.passed() || !b.passed());
        assert!(!verify_pi_condition(&Braid, &t, 3).passed());
    }
}
