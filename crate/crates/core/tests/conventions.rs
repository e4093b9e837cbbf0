//! The multiplication convention is pinned by the compatibility axiom: with
//! the functional product it holds, with the diagrammatic one it fails.

use actop_core::action_operad::{check_axioms, ActionOperad, Sampler, SeededRng, Symmetric};
use actop_core::perm::{compose, mu_sigma, tau, Permutation};
use actop_core::Result;

/// `Σ` with `g·h` read left to right (`g` first).
#[derive(Clone, Copy, Debug, Default)]
struct Diagrammatic;

impl ActionOperad for Diagrammatic {
    type Elem = Permutation;

    fn name(&self) -> &'static str {
        "diagrammatic"
    }
    fn arity(&self, g: &Permutation) -> usize {
        g.arity()
    }
    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }
    fn multiply(&self, g: &Permutation, h: &Permutation) -> Result<Permutation> {
        compose(g, h)
    }
    fn invert(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }
    fn project(&self, g: &Permutation) -> Permutation {
        g.clone()
    }
    fn operad_mu(&self, g: &Permutation, fs: &[Permutation]) -> Result<Permutation> {
        Symmetric.operad_mu(g, fs)
    }
    fn elements(&self, n: usize) -> Option<Vec<Permutation>> {
        Symmetric.elements(n)
    }
    fn generator_count(&self, n: usize) -> usize {
        Symmetric.generator_count(n)
    }
    fn factor(&self, g: &Permutation) -> Vec<i32> {
        let mut f = Symmetric.factor(g);
        f.reverse();
        f
    }
    fn generator(&self, n: usize, i: usize) -> Permutation {
        Symmetric.generator(n, i)
    }
    fn sample(&self, n: usize, max_len: usize, rng: &mut SeededRng) -> Permutation {
        Symmetric.sample(n, max_len, rng)
    }
    fn format_elem(&self, g: &Permutation) -> String {
        Symmetric.format_elem(g)
    }
}

fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

#[test]
fn functional_product_satisfies_compatibility() {
    let r = check_axioms(&Symmetric, Sampler::exhaustive(3, 2, 6)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn diagrammatic_product_breaks_compatibility() {
    let r = check_axioms(&Diagrammatic, Sampler::exhaustive(3, 2, 6)).unwrap();
    let c = r.get("compatibility").unwrap();
    assert!(!c.passed(), "{r}");
    assert!(c.counterexample.is_some());
}

#[test]
fn block_equality_in_sigma9() {
    let lhs = mu_sigma(&cyc(3, &[&[1, 2, 3]]), &[cyc(2, &[&[1, 2]]), cyc(4, &[&[1, 2], &[3, 4]]), cyc(3, &[&[1, 3]])]);
    let rhs = mu_sigma(
        &cyc(4, &[&[1, 2, 3, 4]]),
        &[cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(3, &[&[1, 3]])],
    );
    assert_eq!(lhs.unwrap(), rhs.unwrap());
}

#[test]
fn compatibility_instance_in_sigma6() {
    let s = Symmetric;
    let t = cyc(2, &[&[1, 2]]);
    let e2 = Permutation::identity(2);
    let g = cyc(3, &[&[2, 3]]);
    let g2 = cyc(3, &[&[1, 3, 2]]);
    let left = s
        .multiply(&mu_sigma(&g, &[t.clone(), t.clone(), e2.clone()]).unwrap(), &mu_sigma(&g2, &[t.clone(), e2.clone(), t.clone()]).unwrap())
        .unwrap();
    // f_{π(g')(i)} f'_i with f = ((12), (12), e) and f' = ((12), e, (12))
    let f = [t.clone(), t.clone(), e2.clone()];
    let fp = [t.clone(), e2.clone(), t.clone()];
    let args: Vec<Permutation> = (0..3).map(|i| f[g2.apply(i + 1) - 1].product(&fp[i]).unwrap()).collect();
    assert_eq!(args, vec![t.clone(), t.clone(), e2.clone()]);
    let right = mu_sigma(&g.product(&g2).unwrap(), &args).unwrap();
    assert_eq!(left, right);
}

#[test]
fn tau_inverse_pairs() {
    for m in 1..=5 {
        for n in 1..=5 {
            assert_eq!(tau(m, n), tau(n, m).inverse(), "m={m} n={n}");
        }
    }
}
