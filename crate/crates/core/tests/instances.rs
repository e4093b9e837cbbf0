use actop_core::action_operad::{
    check_axioms, check_map, ActionOperad, Braid, Sampler, SeededRng, Symmetric, Trivial, DEFAULT_SEED,
};
use actop_core::braid::{block_sum_braids, cable, BraidWord};
use actop_core::perm::Permutation;
use actop_core::Result;

#[test]
fn symmetric_axioms_exhaustive() {
    let r = check_axioms(&Symmetric, Sampler::exhaustive(3, 2, 6)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn trivial_axioms_exhaustive() {
    let r = check_axioms(&Trivial, Sampler::exhaustive(3, 3, 9)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn braid_axioms_sampled() {
    let r = check_axioms(&Braid, Sampler::random(DEFAULT_SEED, 400, 4, 6)).unwrap();
    assert!(r.passed(), "{r}");
    for law in ["consequence: e1 is the operad unit", "consequence: mu(e; e, ..., e) = e", "consequence: G(1) abelian"] {
        assert!(r.get(law).is_some(), "missing {law}");
    }
}

#[test]
fn maps_between_instances() {
    let t_to_s = check_map(&Trivial, &Symmetric, |g| Permutation::identity(g.arity), Sampler::exhaustive(3, 2, 6));
    assert!(t_to_s.unwrap().passed());
    let pi = check_map(&Braid, &Symmetric, |g: &BraidWord| g.underlying_permutation(), Sampler::random(7, 300, 4, 6));
    assert!(pi.unwrap().passed());
    let id = check_map(&Symmetric, &Symmetric, |g: &Permutation| g.clone(), Sampler::exhaustive(3, 2, 6));
    assert!(id.unwrap().passed());
}

#[test]
fn sign_is_not_a_map() {
    // every braid to its permutation's positive lift: not a homomorphism
    let r = check_map(
        &Braid,
        &Braid,
        |g: &BraidWord| actop_core::braid::permutation_braid(&g.underlying_permutation()),
        Sampler::random(11, 200, 3, 4),
    )
    .unwrap();
    assert!(!r.get("map: homomorphism").unwrap().passed());
}

/// Br with the two factors of `μ(g; f₁, …, fₙ) = g⁺ · (f₁ ⊕ ⋯ ⊕ fₙ)` swapped.
#[derive(Clone, Copy, Debug, Default)]
struct Swapped;

impl ActionOperad for Swapped {
    type Elem = BraidWord;

    fn name(&self) -> &'static str {
        "swapped braid"
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
        let sizes: Vec<usize> = fs.iter().map(BraidWord::strands).collect();
        block_sum_braids(fs).product(&cable(g, &sizes)?)
    }
    fn elements(&self, _n: usize) -> Option<Vec<BraidWord>> {
        None
    }
    fn generator_count(&self, n: usize) -> usize {
        Braid.generator_count(n)
    }
    fn factor(&self, g: &BraidWord) -> Vec<i32> {
        Braid.factor(g)
    }
    fn generator(&self, n: usize, i: usize) -> BraidWord {
        Braid.generator(n, i)
    }
    fn sample(&self, n: usize, max_len: usize, rng: &mut SeededRng) -> BraidWord {
        Braid.sample(n, max_len, rng)
    }
    fn format_elem(&self, g: &BraidWord) -> String {
        Braid.format_elem(g)
    }
}

#[test]
fn swapped_composition_fails_compatibility() {
    let r = check_axioms(&Swapped, Sampler::random(DEFAULT_SEED, 300, 3, 4)).unwrap();
    assert!(!r.get("compatibility").unwrap().passed(), "{r}");
    assert!(!r.get("projection: operad map").unwrap().passed(), "{r}");
}
