use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tabkit::combinat::{
    compositions, partitions, permutations, strict_partitions, Composition, Partition, Permutation,
    StrictPartition,
};
use tabkit::equivalence::{
    all_classes, closure, to_dot, to_json, Element, EquivClass, GeneratorSet, Relation,
};
use tabkit::operators::mason_image;
use tabkit::qsym::{
    decompose_in_fk, fk_family, quasi_schur, schur_expand, schur_function, Decomposition,
    QsymElement,
};
use tabkit::tableau::{srct, srt, sst, syt, syt_n, Tableau};
use tabkit::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "tabkit",
    version,
    about = "Refinements of dual equivalence on tableaux and permutations"
)]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest degree accepted.
    #[arg(long, env = "TABKIT_MAX_DEGREE", default_value_t = 9, hide = true)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Carrier {
    Tableaux,
    Permutations,
}

#[derive(Subcommand)]
enum Command {
    /// List the classes of a relation.
    Classes(ClassArgs),
    /// Fundamental expansion and, when symmetric, Schur expansion.
    Expand(ExpandArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "equiv2")]
    relation: Relation,
    /// Restrict to one shape (a strict partition for `shifted`).
    #[arg(long)]
    shape: Option<Partition>,
    /// Restrict to SRCT(alpha) or C(alpha) for the quasi-dual relations.
    #[arg(long)]
    alpha: Option<Composition>,
    #[arg(long, value_enum, default_value_t = Carrier::Tableaux)]
    carrier: Carrier,
    /// Only the class of this one-line word or tableau reading word.
    #[arg(long)]
    class_of: Option<Permutation>,
}

#[derive(Args)]
struct ExpandArgs {
    /// Schur function of this shape.
    #[arg(long, conflicts_with_all = ["class_of", "quasischur"])]
    shape: Option<Partition>,
    /// Generating function of the class of this word.
    #[arg(long, conflicts_with = "quasischur")]
    class_of: Option<Permutation>,
    #[arg(long, default_value = "equiv2")]
    relation: Relation,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Carrier::Tableaux)]
    carrier: Carrier,
    /// Quasisymmetric Schur function of this composition.
    #[arg(long)]
    quasischur: Option<Composition>,
    /// Family index `k` of the `equiv_k` classes used to decompose `--quasischur`.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
    k: u8,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run; all suites when omitted.
    #[arg(long)]
    suite: Option<Suite>,
    #[arg(long, default_value_t = 6)]
    n: usize,
}

/// Bad input; reported with exit status 2 like every other error.
fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

enum Outcome {
    Done(String),
    Failed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Done(text)) => emit(&cli, &text).map_or_else(report, |_| ExitCode::SUCCESS),
        Ok(Outcome::Failed(text)) => {
            let _ = emit(&cli, &text);
            ExitCode::from(1)
        }
        Err(e) => report(e),
    }
}

fn report(e: anyhow::Error) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(2)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match &cli.command {
        Command::Classes(args) => classes(cli, args).map(Outcome::Done),
        Command::Expand(args) => expand(cli, args).map(Outcome::Done),
        Command::Verify(args) => verify(cli, args),
    }
}

fn check_degree(cli: &Cli, n: usize) -> Result<()> {
    if n == 0 {
        return Err(usage("degree must be at least 1"));
    }
    if n > cli.max_degree {
        return Err(usage(format!(
            "degree {n} exceeds the limit {} (TABKIT_MAX_DEGREE)",
            cli.max_degree
        )));
    }
    Ok(())
}

/// The degree implied by `--n` and any shape arguments, which must agree.
fn degree(cli: &Cli, n: Option<usize>, implied: Option<usize>) -> Result<usize> {
    let n = match (n, implied) {
        (Some(a), Some(b)) if a != b => {
            return Err(usage(format!("--n {a} disagrees with a shape of size {b}")))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(usage("give --n or a shape")),
    };
    check_degree(cli, n)?;
    Ok(n)
}

fn tableau_carrier(
    rel: Relation,
    n: usize,
    shape: Option<&Partition>,
    alpha: Option<&Composition>,
) -> Result<Vec<Tableau>> {
    Ok(match rel {
        Relation::QuasiDualSrct => match (alpha, shape) {
            (Some(a), _) => srct(a),
            (None, Some(_)) => return Err(usage("quasiDualSRCT takes --alpha, not --shape")),
            (None, None) => compositions(n).iter().flat_map(srct).collect(),
        },
        Relation::QuasiDualSrt | Relation::RestrictedSrt => match (alpha, shape) {
            (Some(a), _) => mason_image(a),
            (None, Some(l)) => srt(l),
            (None, None) => partitions(n).iter().flat_map(srt).collect(),
        },
        Relation::Shifted => {
            if alpha.is_some() {
                return Err(usage("--alpha applies to the quasi-dual relations only"));
            }
            match shape {
                Some(l) => {
                    sst(&StrictPartition::new(l.parts().to_vec())
                        .map_err(|e| usage(e.to_string()))?)
                }
                None => strict_partitions(n).iter().flat_map(sst).collect(),
            }
        }
        Relation::Knuth => {
            return Err(usage(
                "knuth acts on permutations; use --carrier permutations",
            ))
        }
        _ => {
            if alpha.is_some() {
                return Err(usage("--alpha applies to the quasi-dual relations only"));
            }
            match shape {
                Some(l) => syt(l),
                None => syt_n(n),
            }
        }
    })
}

/// Either every class on the carrier or the single class of `seed`, found by
/// matching one-line words or reading words.
fn select<T: Element>(
    carrier: &[T],
    gens: &GeneratorSet<T>,
    seed: Option<&Permutation>,
    word: impl Fn(&T) -> Permutation,
) -> Result<Vec<EquivClass<T>>> {
    match seed {
        None => Ok(all_classes(carrier, gens)?),
        Some(w) => {
            let start = carrier.iter().find(|x| word(x) == *w).ok_or_else(|| {
                usage(format!("{w} is not the word of any element of the carrier"))
            })?;
            if gens.involutive {
                Ok(vec![closure(start, gens)?])
            } else {
                Ok(all_classes(carrier, gens)?
                    .into_iter()
                    .filter(|c| c.contains(start))
                    .collect())
            }
        }
    }
}

fn render_classes<T: Element + serde::Serialize>(
    cli: &Cli,
    classes: &[EquivClass<T>],
    gens: &GeneratorSet<T>,
    header: &str,
) -> Result<String> {
    Ok(match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&to_json(classes))?),
        Format::Dot => to_dot(classes, gens)?,
        Format::Text => {
            let mut s = format!("{header}: {} classes\n", classes.len());
            for c in classes {
                let words: Vec<String> = c.members().iter().map(Element::key).collect();
                writeln!(s, "[{}] {}", c.len(), words.join(" "))?;
            }
            s
        }
    })
}

fn classes(cli: &Cli, args: &ClassArgs) -> Result<String> {
    let implied = args
        .alpha
        .as_ref()
        .map(Composition::weight)
        .or(args.shape.as_ref().map(Partition::weight));
    let implied = implied.or(args.class_of.as_ref().map(Permutation::len));
    let n = degree(cli, args.n, implied)?;
    let rel = args.relation;
    match args.carrier {
        Carrier::Permutations => {
            if args.shape.is_some() || args.alpha.is_some() {
                return Err(usage("--shape and --alpha apply to tableau carriers"));
            }
            let gens = GeneratorSet::for_permutations(rel, n).map_err(|e| usage(e.to_string()))?;
            let classes = select(
                &permutations(n),
                &gens,
                args.class_of.as_ref(),
                Permutation::clone,
            )?;
            render_classes(
                cli,
                &classes,
                &gens,
                &format!("{rel} on permutations of {n}"),
            )
        }
        Carrier::Tableaux => {
            let gens = GeneratorSet::for_tableaux(rel, n).map_err(|e| usage(e.to_string()))?;
            let carrier = tableau_carrier(rel, n, args.shape.as_ref(), args.alpha.as_ref())?;
            let classes = select(
                &carrier,
                &gens,
                args.class_of.as_ref(),
                Tableau::reading_word,
            )?;
            render_classes(
                cli,
                &classes,
                &gens,
                &format!("{rel} on {} tableaux of size {n}", carrier.len()),
            )
        }
    }
}

fn expansion_text(label: &str, q: &QsymElement) -> Result<(String, serde_json::Value)> {
    let mut s = format!("{label}\nF-expansion: {q}\n");
    let schur = match schur_expand(q) {
        Ok(e) => {
            writeln!(s, "symmetric: yes\nSchur expansion: {e}")?;
            serde_json::to_value(&e)?
        }
        Err(tabkit::Error::NotSymmetric { left, right }) => {
            writeln!(s, "symmetric: no (M[{left}] differs from M[{right}])")?;
            serde_json::Value::Null
        }
        Err(e) => return Err(e.into()),
    };
    let json = json!({
        "input": label,
        "symmetric": !schur.is_null(),
        "fundamental": q,
        "schur": schur,
    });
    Ok((s, json))
}

fn expand(cli: &Cli, args: &ExpandArgs) -> Result<String> {
    if cli.format == Format::Dot {
        return Err(usage("expand supports text and json output"));
    }
    let (mut text, json) = if let Some(l) = &args.shape {
        check_degree(cli, l.weight())?;
        expansion_text(&format!("s[{l}]"), &schur_function(l))?
    } else if let Some(w) = &args.class_of {
        let n = degree(cli, args.n, Some(w.len()))?;
        let rel = args.relation;
        let (q, size) = match args.carrier {
            Carrier::Permutations => {
                let gens =
                    GeneratorSet::for_permutations(rel, n).map_err(|e| usage(e.to_string()))?;
                let c = select(&permutations(n), &gens, Some(w), Permutation::clone)?.remove(0);
                (QsymElement::sum_of_words(n, c.members()), c.len())
            }
            Carrier::Tableaux => {
                let gens = GeneratorSet::for_tableaux(rel, n).map_err(|e| usage(e.to_string()))?;
                let carrier = tableau_carrier(rel, n, None, None)?;
                let c = select(&carrier, &gens, Some(w), Tableau::reading_word)?.remove(0);
                (QsymElement::sum_of_tableaux(n, c.members()), c.len())
            }
        };
        let (text, mut json) =
            expansion_text(&format!("{rel} class of {w} ({size} elements)"), &q)?;
        json["size"] = json!(size);
        (text, json)
    } else if let Some(alpha) = &args.quasischur {
        let n = alpha.weight();
        check_degree(cli, n)?;
        let q = quasi_schur(alpha);
        let (mut text, mut json) = expansion_text(&format!("S[{alpha}]"), &q)?;
        let rel = [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2][args.k as usize];
        let family = fk_family(rel, n)?;
        let decomposition = match decompose_in_fk(&q, &family.functions())? {
            Decomposition::NonNegative(c) => {
                let terms: Vec<(String, u64)> = family
                    .members
                    .iter()
                    .zip(&c)
                    .filter(|(_, &k)| k > 0)
                    .map(|(m, &k)| (m.representatives[0].clone(), k))
                    .collect();
                writeln!(
                    text,
                    "over f^({}) indexed by least reading word:",
                    rel.name()
                )?;
                for (rep, k) in &terms {
                    writeln!(text, "  {k} x f[{rep}]")?;
                }
                json!({"family": rel.name(), "indexing": "least reading word of the tableau class", "nonnegative": true,
                       "terms": terms.iter().map(|(r, k)| json!({"class": r, "coeff": k})).collect::<Vec<_>>()})
            }
            Decomposition::Rational(x) => {
                writeln!(
                    text,
                    "no nonnegative integer combination over f^({}) found",
                    rel.name()
                )?;
                json!({"family": rel.name(), "nonnegative": false,
                       "coeffs": x.iter().map(|c| c.to_string()).collect::<Vec<_>>()})
            }
        };
        json["decomposition"] = decomposition;
        (text, json)
    } else {
        return Err(usage("give one of --shape, --class-of or --quasischur"));
    };
    if cli.format == Format::Json {
        text = format!("{}\n", serde_json::to_string_pretty(&json)?);
    }
    Ok(text)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome> {
    check_degree(cli, args.n)?;
    if cli.format == Format::Dot {
        return Err(usage("verify supports text and json output"));
    }
    let suites: Vec<Suite> = args.suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let reports = suites
        .into_iter()
        .map(|s| run_suite(s, args.n))
        .collect::<tabkit::Result<Vec<_>>>()
        .map_err(|e| anyhow!(e))?;
    let passed = reports.iter().all(|r| r.passed());
    let text = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({"passed": passed, "suites": reports}))?
        ),
        _ => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok(if passed {
        Outcome::Done(text)
    } else {
        Outcome::Failed(text)
    })
}
