//! Argument parsing and dispatch for the `actop` binary.
//!
//! Every command returns its standard output, standard error and exit code
//! instead of printing, so the golden tests can run it in-process. Exit codes:
//! 0 success, 1 a negative answer (unequal, a failed law, not cartesian),
//! 2 usage and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use actop_core::action_operad::{ActionOperad, Sampler, DEFAULT_SEED};
use actop_core::braid::{cable, mu_br, t_negative, t_positive, BraidWord};
use actop_core::g_operad::examples::{ass, comm, nsass};
use actop_core::g_operad::{check_operad, compose_collections, FiniteGCollection, FiniteGOperad};
use actop_core::monad::{cartesian_condition, free_algebra, pullback_witness_test};
use actop_core::perm::{self, Permutation};
use actop_core::pseudocomm::{braid_theorem_report, symmetric_report};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::file::{self, LoadedCollection, LoadedOperad};
use crate::render;
use crate::suites;

const FORMATS: &str = "\
Formats:
  permutation   one-line image, 1-based, space separated: \"1 3 5 2 4 6\"
  braid word    nonzero integers, +i for the generator s_i and -i for its
                inverse; the strand count is given with -n
  mu args file  one braid per line as \"STRANDS: LETTERS\"; blank lines and
                lines starting with # are skipped
  operad file   JSON with group, levels, action, unit, compose, complete
Exit codes: 0 success, 1 negative answer or failed check, 2 usage error";

#[derive(Parser)]
#[command(name = "actop", version, about = "Action operads, braid groups and finite G-operads", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid word computations
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Permutation computations
    #[command(subcommand)]
    Perm(PermCmd),
    /// The minimal braid t(M,N) over the block transposition tau(M,N)
    Tmn {
        #[arg(long, value_enum)]
        family: Family,
        m: usize,
        n: usize,
    },
    /// Law-checking suites
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Operad files
    #[command(subcommand)]
    Operad(OperadCmd),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct WordArgs {
    /// Strand count
    #[arg(short = 'n')]
    n: usize,
    /// Letters of the word
    word: Vec<String>,
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Decide W1 = W2: exit 0 when equal, 1 otherwise
    #[command(allow_negative_numbers = true)]
    Eq {
        #[arg(short = 'n')]
        n: usize,
        w1: Vec<String>,
        #[arg(last = true)]
        w2: Vec<String>,
    },
    /// Handle-reduce a word
    Reduce(WordArgs),
    /// The underlying permutation
    Pi(WordArgs),
    /// Replace strand i by K_i parallel strands
    Cable {
        #[command(flatten)]
        w: WordArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Operadic composition with the braids listed in a file
    Mu {
        #[command(flatten)]
        w: WordArgs,
        #[arg(long)]
        args: PathBuf,
    },
    /// Draw a word
    Render {
        #[command(flatten)]
        w: WordArgs,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Dot,
}

#[derive(Subcommand)]
enum PermCmd {
    /// mu(SIGMA; TAU1, ..., TAUn), each permutation one quoted argument
    Mu { sigma: String, taus: Vec<String> },
    /// The block transposition tau(M,N)
    Tau { m: usize, n: usize },
    /// The inverse
    Inv { p: Vec<String> },
    /// The diagrammatic composite: P first, then Q
    Compose { p: String, q: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Positive,
    Negative,
}

#[derive(Clone, Copy, ValueEnum)]
enum PsGroup {
    Braid,
    Symmetric,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Pseudo-commutativity of the braid or symmetric action operad
    Pscomm {
        #[arg(long, value_enum)]
        group: PsGroup,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Every built-in suite
    All {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random cases per law for the braid groups
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Comm,
    Ass,
    Nsass,
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Check the operad laws of a file
    Check { file: PathBuf },
    /// List the free algebra on a carrier
    Free {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        carrier: Vec<String>,
        #[arg(long)]
        bound: usize,
    },
    /// Whether every stabilizer projects trivially
    Cartesian { file: PathBuf },
    /// The composition product of two collections
    Compose {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        bound: usize,
    },
    /// Print a built-in operad in the file format
    Builtin {
        #[arg(value_enum)]
        name: Builtin,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
}

/// What a command produced.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome { code: if holds { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

type Run = Result<Outcome, Outcome>;

fn core<T>(r: actop_core::Result<T>) -> Result<T, Outcome> {
    r.map_err(Outcome::usage)
}

fn word(n: usize, letters: &[String]) -> Result<BraidWord, Outcome> {
    core(BraidWord::parse(&letters.join(" "), n))
}

fn permutation(text: &str) -> Result<Permutation, Outcome> {
    core(text.parse())
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn braid(cmd: BraidCmd) -> Run {
    Ok(match cmd {
        BraidCmd::Eq { n, w1, w2 } => {
            let (a, b) = (word(n, &w1)?, word(n, &w2)?);
            let same = core(a.equal(&b))?;
            Outcome::verdict(same, line(if same { "equal" } else { "not equal" }))
        }
        BraidCmd::Reduce(w) => Outcome::ok(line(word(w.n, &w.word)?.handle_reduce())),
        BraidCmd::Pi(w) => Outcome::ok(line(word(w.n, &w.word)?.underlying_permutation())),
        BraidCmd::Cable { w, sizes } => Outcome::ok(line(core(cable(&word(w.n, &w.word)?, &sizes))?)),
        BraidCmd::Mu { w, args } => {
            let g = word(w.n, &w.word)?;
            let fs = read_braids(&args)?;
            Outcome::ok(line(core(mu_br(&g, &fs))?))
        }
        BraidCmd::Render { w, format } => {
            let b = word(w.n, &w.word)?;
            Outcome::ok(match format {
                RenderFormat::Ascii => render::ascii(&b),
                RenderFormat::Dot => render::dot(&b),
            })
        }
    })
}

fn read_braids(path: &Path) -> Result<Vec<BraidWord>, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let at = |msg: String| Outcome::usage(format!("{}:{}: {msg}\n{:>5} | {raw}", path.display(), i + 1, i + 1));
        let (n, letters) = l.split_once(':').ok_or_else(|| at("expected \"STRANDS: LETTERS\"".into()))?;
        let n: usize = n.trim().parse().map_err(|_| at(format!("bad strand count {:?}", n.trim())))?;
        out.push(BraidWord::parse(letters, n).map_err(|e| at(e.to_string()))?);
    }
    Ok(out)
}

fn perm_cmd(cmd: PermCmd) -> Run {
    Ok(match cmd {
        PermCmd::Mu { sigma, taus } => {
            let s = permutation(&sigma)?;
            let ts = taus.iter().map(|t| permutation(t)).collect::<Result<Vec<_>, _>>()?;
            Outcome::ok(line(core(perm::mu_sigma(&s, &ts))?))
        }
        PermCmd::Tau { m, n } => Outcome::ok(line(perm::tau(m, n))),
        PermCmd::Inv { p } => Outcome::ok(line(permutation(&p.join(" "))?.inverse())),
        PermCmd::Compose { p, q } => Outcome::ok(line(core(perm::compose(&permutation(&p)?, &permutation(&q)?))?)),
    })
}

fn verify(cmd: VerifyCmd) -> Run {
    Ok(match cmd {
        VerifyCmd::Pscomm { group, bound } => {
            let bound = bound as usize;
            let r = core(match group {
                PsGroup::Symmetric => symmetric_report(bound),
                PsGroup::Braid => braid_theorem_report(bound),
            })?;
            Outcome::verdict(r.passed(), r.to_string())
        }
        VerifyCmd::All { seed, budget } => {
            let suites = core(suites::verify_all(seed, budget))?;
            let mut out = String::new();
            for (_, r) in &suites {
                let _ = writeln!(out, "{r}");
            }
            let _ = writeln!(out, "# summary");
            for (name, r) in &suites {
                let _ = writeln!(out, "{} {name}", if r.passed() { "PASS" } else { "FAIL" });
            }
            Outcome::verdict(suites.iter().all(|(_, r)| r.passed()), out)
        }
    })
}

fn load(path: &Path) -> Result<LoadedOperad, Outcome> {
    file::load_operad(path).map_err(Outcome::usage)
}

fn classes(k: usize) -> String {
    format!("{k} {}", if k == 1 { "class" } else { "classes" })
}

fn free_listing<A: ActionOperad>(p: &FiniteGOperad<A>, carrier: &[String], bound: usize) -> Result<String, Outcome> {
    let fa = core(free_algebra(p, carrier.len(), bound))?;
    let name = |x: usize| carrier[x].clone();
    let mut out = format!("# free algebra on {{{}}}, arity <= {bound}\n", carrier.join(","));
    for n in 0..=bound {
        let _ = writeln!(out, "arity {n}: {}", classes(fa.count(n)));
        for i in (0..fa.len()).filter(|&i| fa.class(i).op.arity == n) {
            let _ = writeln!(out, "{}", fa.format_class(p, i, &name));
        }
    }
    Ok(out)
}

fn cartesian_text<A: ActionOperad>(p: &FiniteGOperad<A>) -> Run {
    let witness = core(cartesian_condition(p))?;
    let report = core(pullback_witness_test(p))?;
    let mut out = String::new();
    match &witness {
        None => out.push_str("CARTESIAN: YES\n"),
        Some(w) => {
            out.push_str("CARTESIAN: NO\n");
            let _ = writeln!(out, "witness: {} . {} = {} in arity {}, with nontrivial projection", w.op, w.element, w.op, w.arity);
        }
    }
    out.push_str(&report.to_string());
    if witness.is_none() != report.passed() {
        return Err(Outcome { code: 1, stdout: out, stderr: "error: the pullback test disagrees with the criterion\n".into() });
    }
    Ok(Outcome::verdict(witness.is_none(), out))
}

fn compose_text<A: ActionOperad + Clone>(x: &FiniteGCollection<A>, y: &FiniteGCollection<A>, bound: usize) -> Run {
    let c = core(compose_collections(x, y, bound))?;
    let mut out = format!("# composition product, arity <= {bound}\n");
    for n in 0..=bound {
        let _ = writeln!(out, "arity {n}: {}", classes(c.class_count(n)));
        for label in c.collection.labels(n) {
            let _ = writeln!(out, "{label}");
        }
    }
    Ok(Outcome::ok(out))
}

fn operad(cmd: OperadCmd) -> Run {
    match cmd {
        OperadCmd::Check { file } => {
            let r = core(match load(&file)? {
                LoadedOperad::Trivial(p) => check_operad(&p, Sampler::default_for(p.group())),
                LoadedOperad::Symmetric(p) => check_operad(&p, Sampler::default_for(p.group())),
            })?;
            Ok(Outcome::verdict(r.passed(), r.to_string()))
        }
        OperadCmd::Free { file, carrier, bound } => Ok(Outcome::ok(match load(&file)? {
            LoadedOperad::Trivial(p) => free_listing(&p, &carrier, bound)?,
            LoadedOperad::Symmetric(p) => free_listing(&p, &carrier, bound)?,
        })),
        OperadCmd::Cartesian { file } => match load(&file)? {
            LoadedOperad::Trivial(p) => cartesian_text(&p),
            LoadedOperad::Symmetric(p) => cartesian_text(&p),
        },
        OperadCmd::Compose { x, y, bound } => {
            let lx = file::load_collection(&x).map_err(Outcome::usage)?;
            let ly = file::load_collection(&y).map_err(Outcome::usage)?;
            match (lx, ly) {
                (LoadedCollection::Trivial(a), LoadedCollection::Trivial(b)) => compose_text(&a, &b, bound),
                (LoadedCollection::Symmetric(a), LoadedCollection::Symmetric(b)) => compose_text(&a, &b, bound),
                _ => Err(Outcome::usage("the two collections are over different groups")),
            }
        }
        OperadCmd::Builtin { name, bound } => Ok(Outcome::ok(core(match name {
            Builtin::Comm => comm(bound).map(|p| file::to_json(&p)),
            Builtin::Ass => ass(bound).map(|p| file::to_json(&p)),
            Builtin::Nsass => nsass(bound).map(|p| file::to_json(&p)),
        })?)),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Braid(c) => braid(c),
        Command::Perm(c) => perm_cmd(c),
        Command::Tmn { family, m, n } => Ok(Outcome::ok(line(match family {
            Family::Positive => t_positive(m, n),
            Family::Negative => t_negative(m, n),
        }))),
        Command::Verify(c) => verify(c),
        Command::Operad(c) => operad(c),
    };
    result.unwrap_or_else(|e| e)
}
