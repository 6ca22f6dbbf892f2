//! `pbzlab`: command-line front end for the PBZ*-lattice workbench.
//!
//! Exit status: 0 when everything requested holds (or a search finds a
//! counterexample), 1 when a property fails, 2 on usage or input errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pbzlab_core::claims::{self, verify_over_corpus};
use pbzlab_core::constructions;
use pbzlab_core::enumerate::{enumerate, EnumerationSpec};
use pbzlab_core::format::{export_dot, parse_algebra, print_algebra, print_algebras};
use pbzlab_core::search::search_counterexample;
use pbzlab_core::terms::{self, parse_statement, parse_term, theory, Statement};
use pbzlab_core::{axioms, catalog, FiniteAlgebra};

#[derive(Parser)]
#[command(name = "pbzlab", version, about = "Finite-model workbench for PBZ*-lattices")]
struct Cli {
    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Class report, sharp sets, cones and blocks of an algebra.
    Check {
        /// File path, catalog name or recipe.
        algebra: String,
        /// Identity to check: a theory name (SK, J, ...) or identity text.
        #[arg(long = "identity")]
        identities: Vec<String>,
        /// Class that must hold (see `catalog --classes`).
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Evaluates an identity, or a term under `--assign`.
    Eval {
        algebra: String,
        expression: String,
        /// `var=label` pairs for term evaluation.
        #[arg(long = "assign", value_delimiter = ',')]
        assign: Vec<String>,
    },
    /// Builds an algebra from a recipe such as `twist1(chain3)`.
    Construct {
        recipe: String,
        /// Output file; stdout when omitted.
        out: Option<PathBuf>,
    },
    /// Lists algebras up to isomorphism.
    Enumerate {
        #[command(flatten)]
        filters: Filters,
        /// Print per-size counts only.
        #[arg(long)]
        count: bool,
        /// Write one file per algebra into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest algebra failing an identity.
    Search {
        identity: String,
        #[command(flatten)]
        filters: Filters,
    },
    /// Hasse diagram in DOT.
    ExportDot { algebra: String, out: Option<PathBuf> },
    /// Checks a registered claim over its corpus.
    Verify {
        claim: Option<String>,
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// List registered claims.
        #[arg(long)]
        list: bool,
    },
    /// Lists catalog entries or prints one.
    Catalog {
        name: Option<String>,
        /// List class names usable with `--class`.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Args)]
struct Filters {
    #[arg(long, default_value_t = 6)]
    max: usize,
    #[arg(long, default_value_t = 1)]
    min: usize,
    #[arg(long = "class")]
    classes: Vec<String>,
    #[arg(long)]
    chains: bool,
    #[arg(long)]
    distributive: bool,
    #[arg(long)]
    antiortho: bool,
    /// Identity every algebra must satisfy (name or text).
    #[arg(long = "satisfying")]
    satisfying: Vec<String>,
}

enum Failure {
    /// A checked property does not hold; exit 1.
    Property,
    /// Bad input or usage; exit 2.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check { algebra, identities, classes, format } => check(&algebra, &identities, &classes, format),
        Command::Eval { algebra, expression, assign } => eval(&algebra, &expression, &assign),
        Command::Construct { recipe, out } => {
            let a = constructions::build(&recipe)?;
            emit(out.as_deref(), &print_algebra(&a))
        }
        Command::Enumerate { filters, count, out } => enumerate_cmd(&filters, count, out.as_deref()),
        Command::Search { identity, filters } => search(&identity, &filters),
        Command::ExportDot { algebra, out } => emit(out.as_deref(), &export_dot(&load(&algebra)?)),
        Command::Verify { claim, max, list } => verify(claim.as_deref(), max, list),
        Command::Catalog { name, classes } => catalog_cmd(name.as_deref(), classes),
    }
}

/// File path, then catalog name, then recipe.
fn load(arg: &str) -> Result<FiniteAlgebra, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return parse_algebra(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")));
    }
    if let Ok(a) = catalog::get(arg) {
        return Ok(a);
    }
    constructions::build(arg).map_err(|e| {
        if arg.contains('/') || arg.contains('.') && !arg.contains('(') {
            Failure::Input(format!("{arg}: no such file"))
        } else {
            Failure::Input(format!("`{arg}` is not a file, catalog name or valid recipe: {e}"))
        }
    })
}

/// A theory name such as `SK`, or identity text.
fn statement(text: &str) -> Result<(String, Statement), Failure> {
    match theory::get(text) {
        Some(st) => Ok((text.to_string(), st)),
        None => Ok((text.to_string(), parse_statement(text)?)),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check(arg: &str, identities: &[String], classes: &[String], format: OutputFormat) -> Outcome {
    let a = load(arg)?;
    if let Some(bad) = classes.iter().find(|c| !axioms::CLASS_NAMES.contains(&c.as_str())) {
        return Err(Failure::Input(format!("unknown class `{bad}`")));
    }
    let statements = identities.iter().map(|s| statement(s)).collect::<Result<Vec<_>, _>>()?;
    let r = report::Report::new(&a, &statements, classes);
    match format {
        OutputFormat::Text => print!("{}", r.text()),
        OutputFormat::Structured => println!("{}", serde_json::to_string_pretty(&r.structured())?),
    }
    if r.requested_hold() {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn eval(arg: &str, expression: &str, assign: &[String]) -> Outcome {
    let a = load(arg)?;
    if assign.is_empty() {
        let (name, st) = statement(expression)?;
        return match terms::holds_statement(&a, &st) {
            Ok(()) => {
                println!("holds: {name}");
                Ok(())
            }
            Err(c) => {
                println!("fails {name} at {}", c.describe(&a));
                Err(Failure::Property)
            }
        };
    }
    let t = parse_term(expression)?;
    let mut env = terms::Assignment::new();
    for pair in assign {
        let (var, label) = pair.split_once('=').ok_or_else(|| Failure::Input(format!("bad assignment `{pair}`")))?;
        let e = a.element(label.trim()).ok_or_else(|| Failure::Input(format!("unknown element `{label}`")))?;
        env.insert(var.trim().to_string(), e);
    }
    let v = terms::eval(&a, &t, &env)?;
    println!("{}", a.label(v));
    Ok(())
}

fn spec_of(f: &Filters) -> Result<EnumerationSpec, Failure> {
    let mut spec = EnumerationSpec::new(f.max).sizes(f.min, f.max);
    for c in &f.classes {
        spec = spec.class(c);
    }
    if f.chains {
        spec = spec.chains();
    }
    if f.distributive {
        spec = spec.distributive();
    }
    if f.antiortho {
        spec = spec.antiortholattices();
    }
    for s in &f.satisfying {
        let (name, st) = statement(s)?;
        spec = spec.satisfying_statement(&name, st);
    }
    spec.validate()?;
    Ok(spec)
}

fn enumerate_cmd(f: &Filters, count: bool, out: Option<&Path>) -> Outcome {
    let spec = spec_of(f)?;
    let all = enumerate(&spec)?;
    if count {
        for n in spec.min_size.max(1)..=spec.max_size {
            println!("n={n}: {}", all.iter().filter(|a| a.size() == n).count());
        }
        return Ok(());
    }
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for a in &all {
                fs::write(dir.join(format!("{}.alg", a.name())), print_algebra(a))?;
            }
            println!("wrote {} algebras to {}", all.len(), dir.display());
            Ok(())
        }
        None => emit(None, &print_algebras(&all)),
    }
}

fn search(identity: &str, f: &Filters) -> Outcome {
    let (_, st) = statement(identity)?;
    let spec = spec_of(f)?;
    let r = search_counterexample(&st, &spec)?;
    println!("# {}", r.summary());
    match &r.found {
        Some(found) => {
            print!("{}", print_algebra(&found.algebra));
            Ok(())
        }
        None => Err(Failure::Property),
    }
}

fn verify(claim: Option<&str>, max: usize, list: bool) -> Outcome {
    if list || claim.is_none() {
        for (name, about) in claims::CLAIMS {
            println!("{name:<22} {about}");
        }
        return Ok(());
    }
    let r = verify_over_corpus(claim.unwrap(), max)?;
    println!("{}", r.summary());
    for f in &r.failures {
        println!("# {}: {}", f.algebra.name(), f.detail);
        print!("{}", print_algebra(&f.algebra));
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn catalog_cmd(name: Option<&str>, classes: bool) -> Outcome {
    if classes {
        for c in axioms::CLASS_NAMES {
            println!("{c}");
        }
        return Ok(());
    }
    match name {
        Some(n) => emit(None, &print_algebra(&catalog::get(n)?)),
        None => {
            for e in catalog::entries() {
                println!("{:<12} {:>3}  {}", e.name, e.algebra.size(), e.note);
            }
            Ok(())
        }
    }
}
