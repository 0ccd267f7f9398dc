use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use topolab::compactness::{
    interior_containment, way_below, way_below_closed_form, witness_space, DirectedCover,
};
use topolab::enumerate::{count_topologies, enumerate_topologies};
use topolab::function_space::exponential;
use topolab::json::{self, set_from_points, SpaceJson};
use topolab::preorder::specialization_preorder;
use topolab::verify::{verify, Bounds, TheoremId, VerificationReport};
use topolab::{Error, FiniteSpace, PointSet};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(
    name = "topolab",
    version,
    about = "Finite topological spaces and exhaustive theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space file.
    Check {
        file: PathBuf,
        /// Print the specialization order as a DOT Hasse diagram.
        #[arg(long)]
        dot: bool,
    },
    /// List (or count) every topology on n labelled points.
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        count: bool,
    },
    /// Product of two spaces, pairs (a, b) at index a * |B| + b.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The exponential Y^X of continuous maps X -> Y.
    Exponential {
        x: PathBuf,
        y: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide S << T, comma-separated point lists.
    Waybelow {
        x: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        s: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        t: Vec<usize>,
    },
    /// Build the witness space of a directed cover given as JSON lists.
    Witness {
        x: PathBuf,
        #[arg(long)]
        cover: String,
        /// Covered set; defaults to the union of the cover.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        target: Option<Vec<usize>>,
        /// Add finite unions instead of rejecting a non-directed cover.
        #[arg(long)]
        complete: bool,
    },
    /// Run theorem checkers.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "which")]
struct Which {
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    which: Which,
    #[arg(long)]
    max_x: Option<usize>,
    #[arg(long)]
    max_y: Option<usize>,
    #[arg(long)]
    max_z: Option<usize>,
    /// Print JSON reports instead of one line per theorem.
    #[arg(long)]
    json: bool,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

enum Failure {
    Usage(String),
    Invalid(String),
    /// Standard output was closed by the reader.
    Closed,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

fn say(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(out.flush()?)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } | Error::UnknownTheorem(_) => Failure::Usage(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<FiniteSpace, Failure> {
    json::parse_space(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::Invalid(format!("{}: {e}", p.display()))),
        None => say(text),
    }
}

fn set_of(points: &[usize], x: &FiniteSpace) -> Result<PointSet, Failure> {
    Ok(set_from_points(points, x.n())?)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file, dot } => {
            let x = load_space(&file)?;
            if dot {
                say(specialization_preorder(&x).to_dot(x.labels()).trim_end())?;
            } else {
                say(&format!(
                    "valid: {} points, {} open sets",
                    x.n(),
                    x.opens().len()
                ))?;
            }
            Ok(0)
        }
        Command::Enumerate { points, count } => {
            if count {
                say(&count_topologies(points)?.to_string())?;
            } else {
                for x in enumerate_topologies(points)? {
                    say(&serde_json::to_string(&SpaceJson::from(&x)).expect("serializes"))?;
                }
            }
            Ok(0)
        }
        Command::Product { a, b, output } => {
            let p = load_space(&a)?.product(&load_space(&b)?)?;
            emit(&json::space_to_string(&p), output.as_deref())?;
            Ok(0)
        }
        Command::Exponential { x, y, output } => {
            let fs = exponential(&load_space(&x)?, &load_space(&y)?)?;
            emit(&json::function_space_to_string(&fs), output.as_deref())?;
            Ok(0)
        }
        Command::Waybelow { x, s, t } => {
            let x = load_space(&x)?;
            let (s, t) = (set_of(&s, &x)?, set_of(&t, &x)?);
            let report = serde_json::json!({
                "s": s.to_vec(),
                "t": t.to_vec(),
                "way_below": way_below(&x, s, t)?,
                "least_neighbourhood_form": way_below_closed_form(&x, s, t)?,
                "interior_containment": interior_containment(&x, s, t)?,
            });
            say(&json::pretty(&report))?;
            Ok(0)
        }
        Command::Witness {
            x,
            cover,
            target,
            complete,
        } => {
            let x = load_space(&x)?;
            let lists: Vec<Vec<usize>> = serde_json::from_str(&cover)
                .map_err(|e| Failure::Invalid(format!("--cover: {e}")))?;
            let members = lists
                .iter()
                .map(|m| set_of(m, &x))
                .collect::<Result<Vec<_>, _>>()?;
            let union = members.iter().fold(PointSet::EMPTY, |a, &m| a | m);
            let target = match target {
                Some(t) => set_of(&t, &x)?,
                None => union,
            };
            let cover = if complete {
                DirectedCover::directed_completion(&x, members, target)?
            } else {
                DirectedCover::new(&x, members, target)?
            };
            let ws = witness_space(&x, &cover)?;
            let p = ws.punchline(target);
            let report = serde_json::json!({
                "points": ws.points.iter().map(|u| u.to_vec()).collect::<Vec<_>>(),
                "space": SpaceJson::from(&ws.space),
                "membership": ws.membership.to_vec(),
                "membership_open": ws.membership_open,
                "quantified": p.quantified.to_vec(),
                "quantified_open": p.quantified_open,
                "member_containing_target": p.member.map(|m| m.to_vec()),
            });
            say(&json::pretty(&report))?;
            Ok(0)
        }
        Command::Verify(args) => run_verify(args),
    }
}

fn print_report(r: &VerificationReport) -> Result<(), Failure> {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    say(&format!(
        "{verdict} {} instances={} counterexamples={}",
        r.theorem, r.instances_checked, r.counterexamples_total
    ))?;
    for c in &r.counterexamples {
        say(&format!("  {c}"))?;
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let ids: Vec<TheoremId> = match &args.which.theorem {
        Some(t) => vec![t.parse()?],
        None => TheoremId::ALL.to_vec(),
    };
    let requested = Bounds::new(args.max_x, args.max_y, args.max_z);
    let mut reports = Vec::new();
    for id in ids {
        let r = verify(id, requested, args.workers)?;
        eprintln!("{id}: {:.2?}", r.wall_time);
        if !args.json {
            print_report(&r)?;
        }
        reports.push(r);
    }
    if args.json {
        let text = if args.which.all {
            json::pretty(&serde_json::to_value(&reports).expect("serializes"))
        } else {
            reports[0].to_json()
        };
        say(&text)?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        EXIT_FAIL
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Closed) => ExitCode::SUCCESS,
    }
}
