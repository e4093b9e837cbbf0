//! The acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p actop --test acceptance -- --nocapture` to see the lines.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use actop_core::action_operad::{check_axioms, check_map, ActionOperad, Braid, Sampler, SeededRng, Symmetric};
use actop_core::braid::{t_positive, BraidWord};
use actop_core::g_operad::examples::{ass, comm, nsass};
use actop_core::g_operad::{
    check_unit_laws, compose_collections, count_algebras, count_endo_maps, unit_collection, FiniteGCollection,
    FiniteGOperad,
};
use actop_core::monad::{cartesian_condition, check_monad_laws, free_algebra, pullback_witness_test};
use actop_core::perm::{mu_sigma, tau, Permutation};
use actop_core::pseudocomm::{braid_theorem_report, symmetric_report};
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

fn one_line(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn c1_block_equality() -> Outcome {
    let lhs = mu_sigma(&cyc(3, &[&[1, 2, 3]]), &[cyc(2, &[&[1, 2]]), cyc(4, &[&[1, 2], &[3, 4]]), cyc(3, &[&[1, 3]])]);
    let rhs = mu_sigma(
        &cyc(4, &[&[1, 2, 3, 4]]),
        &[cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(2, &[&[1, 2]]), cyc(3, &[&[1, 3]])],
    );
    let (l, r) = (lhs.map_err(|e| e.to_string())?, rhs.map_err(|e| e.to_string())?);
    ensure(l == r, || format!("{l} != {r}"))
}

fn c2_compatibility_instance() -> Outcome {
    let s = Symmetric;
    let t = cyc(2, &[&[1, 2]]);
    let e = Permutation::identity(2);
    let (g, g2) = (cyc(3, &[&[2, 3]]), cyc(3, &[&[1, 3, 2]]));
    let a = mu_sigma(&g, &[t.clone(), t.clone(), e.clone()]).unwrap();
    let b = mu_sigma(&g2, &[t.clone(), e.clone(), t.clone()]).unwrap();
    let left = s.multiply(&a, &b).unwrap();
    let tt = t.product(&t).unwrap();
    let right = mu_sigma(&g.product(&g2).unwrap(), &[t.clone(), t.clone(), tt]).unwrap();
    ensure(left == right, || format!("{left} != {right}"))
}

fn c3_tau() -> Outcome {
    ensure(tau(2, 3) == one_line(&[1, 3, 5, 2, 4, 6]), || format!("tau(2,3) = {}", tau(2, 3)))?;
    ensure(tau(4, 2) == one_line(&[1, 5, 2, 6, 3, 7, 4, 8]), || format!("tau(4,2) = {}", tau(4, 2)))?;
    for m in 1..=5 {
        for n in 1..=5 {
            ensure(tau(m, n) == tau(n, m).inverse(), || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn c4_braid_interchange() -> Outcome {
    let r = braid_theorem_report(3).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    for fam in ["positive", "negative"] {
        let law = format!("[{fam}] left-hand sides are minimal");
        ensure(r.get(&law).is_some_and(|c| c.cases > 0), || format!("missing {law}"))?;
    }
    Ok(())
}

fn c5_non_symmetry() -> Outcome {
    let t = t_positive(2, 2);
    ensure(t.letters() == [2], || format!("t(2,2) = {t}"))?;
    let sq = t.product(&t).unwrap();
    ensure(!sq.is_trivial(), || "t(2,2)^2 reduces to e".into())?;
    ensure(!sq.equal(&BraidWord::identity(4)).unwrap(), || "t(2,2)^2 = e".into())
}

fn c6_symmetric() -> Outcome {
    let r = symmetric_report(3).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    ensure(r.notes.iter().any(|n| n == "SYMMETRY: HOLDS"), || r.to_string())
}

fn c7_projection_operad_map() -> Outcome {
    let r = check_map(&Braid, &Symmetric, |g: &BraidWord| g.underlying_permutation(), Sampler::random(2024, 1000, 4, 6))
        .map_err(|e| e.to_string())?;
    let c = r.get("map: operad map").ok_or("no operad map check")?;
    ensure(c.passed() && c.cases >= 1000, || c.to_string())
}

fn c8_word_problem() -> Outcome {
    let mut rng = SeededRng::seed_from_u64(8);
    for k in 0..1000 {
        let n = rng.gen_range(0..=6);
        let len = rng.gen_range(0..=20);
        let w = BraidWord::random(n, len, &mut rng);
        ensure(w.product(&w.inverse()).unwrap().is_trivial(), || format!("case {k}: {w:?}"))?;
    }
    for n in 3..=6 {
        for i in 1..n as i32 - 1 {
            let a = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
            let b = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
            ensure(a.equal(&b).unwrap(), || format!("braid relation at {i} in Br{n}"))?;
        }
        for i in 1..n as i32 {
            for j in i + 2..n as i32 {
                let a = BraidWord::new(n, vec![i, j]).unwrap();
                let b = BraidWord::new(n, vec![j, i]).unwrap();
                ensure(a.equal(&b).unwrap(), || format!("far commutation {i},{j} in Br{n}"))?;
            }
        }
    }
    Ok(())
}

fn identity_signatures<A: ActionOperad>(g: &A) -> Outcome {
    ensure(g.equal(&g.operad_unit(), &g.identity(1)).unwrap(), || format!("{}: e1 is not the unit", g.name()))?;
    for n in 0..=3usize {
        for code in 0..4usize.pow(n as u32) {
            let ks: Vec<usize> = (0..n).map(|i| code / 4usize.pow(i as u32) % 4).collect();
            let es: Vec<A::Elem> = ks.iter().map(|&k| g.identity(k)).collect();
            let m = g.operad_mu(&g.identity(n), &es).unwrap();
            let total = ks.iter().sum();
            ensure(g.equal(&m, &g.identity(total)).unwrap(), || format!("{}: mu(e{n}; {ks:?})", g.name()))?;
        }
    }
    Ok(())
}

fn c9_consequences() -> Outcome {
    identity_signatures(&Symmetric)?;
    identity_signatures(&Braid)?;
    for (name, r) in [
        ("symmetric", check_axioms(&Symmetric, Sampler::exhaustive(3, 2, 6))),
        ("braid", check_axioms(&Braid, Sampler::random(9, 300, 3, 6))),
    ] {
        let r = r.map_err(|e| e.to_string())?;
        for law in ["consequence: e1 is the operad unit", "consequence: mu(e; e, ..., e) = e", "consequence: G(1) abelian"] {
            let c = r.get(law).ok_or_else(|| format!("{name}: missing {law}"))?;
            ensure(c.passed(), || format!("{name}: {c}"))?;
        }
    }
    Ok(())
}

fn c10_monad() -> Outcome {
    for r in [check_monad_laws(&comm(3).unwrap(), 2, 3), check_monad_laws(&ass(3).unwrap(), 2, 3)] {
        let r = r.map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
    }
    let c = free_algebra(&comm(3).unwrap(), 2, 3).unwrap().count(2);
    let a = free_algebra(&ass(3).unwrap(), 2, 3).unwrap().count(2);
    ensure((c, a) == (3, 4), || format!("arity 2 classes: comm {c}, ass {a}"))
}

fn agrees<A: ActionOperad>(p: &FiniteGOperad<A>, cartesian: bool) -> Outcome {
    let w = cartesian_condition(p).map_err(|e| e.to_string())?;
    let r = pullback_witness_test(p).map_err(|e| e.to_string())?;
    ensure(w.is_none() == cartesian, || format!("criterion: {w:?}"))?;
    ensure(r.passed() == cartesian, || r.to_string())
}

fn c11_cartesian() -> Outcome {
    let c = comm(3).unwrap();
    let w = cartesian_condition(&c).unwrap().ok_or("comm has no witness")?;
    ensure(w.arity == 2, || format!("{w:?}"))?;
    agrees(&c, false)?;
    agrees(&ass(3).unwrap(), true)?;
    agrees(&nsass(3).unwrap(), true)
}

fn tiny() -> Vec<FiniteGCollection<Symmetric>> {
    let l = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        FiniteGCollection::with_trivial_action(Symmetric, vec![l(&[]), l(&["a"]), l(&["b"])], true).unwrap(),
        FiniteGCollection::new(Symmetric, vec![(l(&[]), vec![]), (l(&[]), vec![]), (l(&["u", "v"]), vec![vec![1, 0]])], true)
            .unwrap(),
        FiniteGCollection::with_trivial_action(Symmetric, vec![l(&[]), l(&["a", "a2"]), l(&["b"])], true).unwrap(),
        FiniteGCollection::with_trivial_action(Symmetric, vec![l(&["z"]), l(&["a"]), l(&[])], true).unwrap(),
    ]
}

fn c12_composition_product() -> Outcome {
    let i = unit_collection(&Symmetric).unwrap();
    let cs = tiny();
    for x in &cs {
        let r = check_unit_laws(x, &i, 3).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
    }
    for x in &cs {
        for y in &cs {
            for z in &cs {
                // nullary elements of z can absorb inputs, so the inner product
                // is taken far enough to be complete
                let inner = 3.max(x.max_arity() * y.max_arity());
                let xy = compose_collections(x, y, inner).map_err(|e| e.to_string())?;
                let yz = compose_collections(y, z, 3).map_err(|e| e.to_string())?;
                let left = compose_collections(&xy.collection, z, 3).map_err(|e| e.to_string())?;
                let right = compose_collections(x, &yz.collection, 3).map_err(|e| e.to_string())?;
                for n in 0..=3 {
                    ensure(left.class_count(n) == right.class_count(n), || format!("arity {n}"))?;
                }
            }
        }
    }
    Ok(())
}

fn c13_endo_count() -> Outcome {
    let p = comm(2).unwrap();
    let a = count_algebras(&p, 2, 1 << 20).map_err(|e| e.to_string())?;
    let m = count_endo_maps(&p, 2, 1 << 20).map_err(|e| e.to_string())?;
    ensure(a == m && a > 0, || format!("{a} algebras, {m} maps"))
}

/// Splits the `$ actop ...` line of a transcript back into arguments.
fn split_args(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('"') {
            let end = r.find('"').unwrap();
            out.push(r[..end].to_string());
            rest = r[end + 1..].trim_start();
        } else {
            let end = rest.find(' ').unwrap_or(rest.len());
            out.push(rest[..end].to_string());
            rest = rest[end..].trim_start();
        }
    }
    out
}

fn c14_cli() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut files: Vec<_> = std::fs::read_dir(root.join("tests/golden")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    ensure(!files.is_empty(), || "no transcripts".into())?;
    for f in files {
        let want = std::fs::read_to_string(&f).unwrap();
        let first = want.lines().next().unwrap_or_default();
        let args = split_args(first.strip_prefix("$ actop ").ok_or("bad transcript header")?);
        let out = Command::new(env!("CARGO_BIN_EXE_actop")).args(&args).current_dir(root).output().unwrap();
        let code = out.status.code().unwrap_or(-1);
        let got = format!(
            "{first}\nexit: {code}\n--- stdout\n{}--- stderr\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
        ensure(got == want, || format!("{} differs", f.display()))?;
        ensure((0..=2).contains(&code), || format!("{}: exit {code}", f.display()))?;
    }
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_actop")).args(args).current_dir(root).output().unwrap();
    let code = |args: &[&str]| run(args).status.code();
    ensure(code(&["braid", "eq", "-n", "3", "1", "2", "1", "--", "2", "1", "2"]) == Some(0), || "eq exit".into())?;
    ensure(code(&["braid", "eq", "-n", "3", "1", "--", "2"]) == Some(1), || "unequal exit".into())?;
    ensure(code(&["braid", "eq", "-n", "3", "7", "--", "2"]) == Some(2), || "bad word exit".into())?;
    ensure(code(&["perm", "nope"]) == Some(2), || "usage exit".into())?;
    let sym = run(&["verify", "pscomm", "--group", "symmetric", "--bound", "3"]);
    ensure(sym.status.code() == Some(0) && String::from_utf8_lossy(&sym.stdout).contains("SYMMETRY: HOLDS"), || {
        "symmetric pscomm".into()
    })?;
    let br = run(&["verify", "pscomm", "--group", "braid", "--bound", "3"]);
    let text = String::from_utf8_lossy(&br.stdout);
    ensure(br.status.code() == Some(0) && text.contains("SYMMETRY: FAILS (expected) witness m=2 n=2"), || {
        "braid pscomm".into()
    })
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn() -> Outcome); 14] = [
        ("block equality in Sigma9", Duration::from_millis(1), c1_block_equality),
        ("compatibility instance in Sigma6", Duration::from_millis(1), c2_compatibility_instance),
        ("tau fixtures and inverses", Duration::from_millis(10), c3_tau),
        ("braid interchange suite, bound 3", Duration::from_secs(60), c4_braid_interchange),
        ("non-symmetry witness t(2,2)", Duration::from_secs(1), c5_non_symmetry),
        ("symmetric interchange and symmetry", Duration::from_secs(10), c6_symmetric),
        ("projection is an operad map, 1000 samples", Duration::from_secs(30), c7_projection_operad_map),
        ("word problem soundness, 1000 words", Duration::from_secs(60), c8_word_problem),
        ("identity and G(1) consequences", Duration::MAX, c9_consequences),
        ("free monad laws and class counts", Duration::from_secs(30), c10_monad),
        ("cartesian criterion", Duration::MAX, c11_cartesian),
        ("composition product on tiny collections", Duration::from_secs(60), c12_composition_product),
        ("algebra count equals endomorphism maps", Duration::MAX, c13_endo_count),
        ("CLI transcripts and exit codes", Duration::MAX, c14_cli),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(()) if took <= *limit => Ok(()),
            Ok(()) => Err(format!("took {took:?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS {:>2}. {name} ({took:.2?})", i + 1),
            Err(e) => {
                println!("FAIL {:>2}. {name} ({took:.2?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
