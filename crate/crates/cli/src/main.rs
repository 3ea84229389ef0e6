use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use handlebody::{
    build_canonical, classify, classify_power_pair, enumerate_primitives, is_basis_pair, is_primitive,
    is_proper_power, CanonicalParams, HGraph, RRDiagram, Word,
};

const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;

#[derive(Parser)]
#[command(name = "handlebody", version, about = "Primitive curves and disjoint pairs in the genus two handlebody")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free group arithmetic on words over A, a = A^-1, B, b = B^-1.
    #[command(subcommand)]
    Word(WordCommand),
    /// Primitivity and basis tests.
    #[command(subcommand)]
    Prim(PrimCommand),
    /// R-R diagrams: build, trace and validate.
    #[command(subcommand)]
    Rr(RrCommand),
    /// Classify a canonical diagram, or a pair involving a proper power.
    Classify(ClassifyArgs),
    /// Underlying graphs of Heegaard diagrams.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Brute-force reference data.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum WordCommand {
    /// Print the free reduction of each word.
    Reduce { words: Vec<String> },
    /// Print the inverse of each word.
    Invert { words: Vec<String> },
    /// Print the product of the words.
    Mul { words: Vec<String> },
    /// Print the exponent sums of A and B for each word.
    Abelianize { words: Vec<String> },
    /// Print the canonical cyclic word of each word.
    Cyclic { words: Vec<String> },
}

#[derive(Subcommand)]
enum PrimCommand {
    /// Exit 0 if primitive, 1 if a proper power, 2 otherwise.
    Check { word: String },
    /// Exit 0 if the two words form a basis, 1 otherwise.
    Basis { u: String, v: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Fig1a,
    Fig2a,
    Fig3a,
}

#[derive(Args)]
struct VariantArgs {
    #[arg(long, value_enum)]
    variant: Variant,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i64>,
}

#[derive(Subcommand)]
enum RrCommand {
    /// Write the JSON of a canonical diagram.
    Build {
        #[command(flatten)]
        params: VariantArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the cyclic word read along a curve.
    Trace { file: String, curve: String },
    /// List structural violations; exit 1 if there are any.
    Validate { file: String },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct ClassifyArgs {
    #[command(subcommand)]
    power: Option<ClassifyPower>,
    #[command(flatten)]
    params: Option<VariantArgs>,
}

#[derive(Subcommand)]
enum ClassifyPower {
    /// Print "separated" or "annulus" for a curve alpha disjoint from a proper power beta.
    Power { alpha: String, beta: String },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Parity, connectivity, cut vertices, reduced shape and minimality report.
    Check { file: String },
    /// Graphviz rendering.
    Dot { file: String },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Sorted primitive conjugacy classes up to the given length.
    Primitives {
        #[arg(long)]
        max_len: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(handlebody::Error),
    Io(String),
}

impl From<handlebody::Error> for Failure {
    fn from(e: handlebody::Error) -> Failure {
        Failure::Domain(e)
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn params_from(args: &VariantArgs) -> Result<CanonicalParams, Failure> {
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this variant")));
    Ok(match args.variant {
        Variant::Fig1a => CanonicalParams::Fig1a,
        Variant::Fig2a => CanonicalParams::Fig2a { p: need(args.p, "p")?, q: need(args.q, "q")? },
        Variant::Fig3a => CanonicalParams::Fig3a {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            p: need(args.p, "p")?,
            eps: need(args.eps, "eps")?,
        },
    })
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn parse_words(words: &[String]) -> Result<Vec<Word>, Failure> {
    words.iter().map(|s| parse_word(s)).collect()
}

fn word_command(cmd: WordCommand, out: &mut impl Write) -> Outcome {
    let (WordCommand::Reduce { words }
    | WordCommand::Invert { words }
    | WordCommand::Mul { words }
    | WordCommand::Abelianize { words }
    | WordCommand::Cyclic { words }) = &cmd;
    let words = parse_words(words)?;
    let lines: Vec<String> = match cmd {
        WordCommand::Reduce { .. } => words.iter().map(Word::to_string).collect(),
        WordCommand::Invert { .. } => words.iter().map(|w| w.inverse().to_string()).collect(),
        WordCommand::Mul { .. } => {
            vec![words.iter().fold(Word::identity(), |acc, w| acc.multiply(w)).to_string()]
        }
        WordCommand::Abelianize { .. } => words
            .iter()
            .map(|w| {
                let (x, y) = w.abelianize();
                format!("{x} {y}")
            })
            .collect(),
        WordCommand::Cyclic { .. } => words.iter().map(|w| w.cyclic_reduce().0.to_string()).collect(),
    };
    for line in lines {
        writeln!(out, "{line}").map_err(|e| Failure::Io(e.to_string()))?;
    }
    Ok(0)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let io_err = |e: io::Error| Failure::Io(e.to_string());
    match cli.command {
        Command::Word(cmd) => word_command(cmd, out),
        Command::Prim(PrimCommand::Check { word }) => {
            let word = parse_word(&word)?;
            if is_primitive(&word) {
                writeln!(out, "primitive").map_err(io_err)?;
                Ok(0)
            } else if let Some((root, k)) = is_proper_power(&word) {
                writeln!(out, "proper-power {k} of {root}").map_err(io_err)?;
                Ok(1)
            } else {
                writeln!(out, "neither").map_err(io_err)?;
                Ok(2)
            }
        }
        Command::Prim(PrimCommand::Basis { u, v }) => {
            let basis = is_basis_pair(&parse_word(&u)?, &parse_word(&v)?);
            writeln!(out, "{}", if basis { "basis" } else { "not-basis" }).map_err(io_err)?;
            Ok(if basis { 0 } else { 1 })
        }
        Command::Rr(RrCommand::Build { params, out: path }) => {
            let diagram = build_canonical(&params_from(&params)?)?;
            let json = diagram.to_json();
            match path {
                Some(p) => fs::write(&p, json + "\n").map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                None => writeln!(out, "{json}").map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Rr(RrCommand::Trace { file, curve }) => {
            let diagram = RRDiagram::from_json(&read_input(&file)?)?;
            writeln!(out, "{}", diagram.trace_word(&curve)?).map_err(io_err)?;
            Ok(0)
        }
        Command::Rr(RrCommand::Validate { file }) => {
            let diagram = RRDiagram::from_json(&read_input(&file)?)?;
            let violations = diagram.validate();
            if violations.is_empty() {
                writeln!(out, "valid").map_err(io_err)?;
                return Ok(0);
            }
            for v in &violations {
                writeln!(out, "{}: {v}", v.name()).map_err(io_err)?;
            }
            Ok(1)
        }
        Command::Classify(ClassifyArgs { power: Some(ClassifyPower::Power { alpha, beta }), .. }) => {
            writeln!(out, "{}", classify_power_pair(&parse_word(&alpha)?, &parse_word(&beta)?)?).map_err(io_err)?;
            Ok(0)
        }
        Command::Classify(ClassifyArgs { params: Some(params), .. }) => {
            writeln!(out, "{}", classify(&params_from(&params)?)?.to_json()).map_err(io_err)?;
            Ok(0)
        }
        Command::Classify(_) => Err(Failure::Usage("classify needs --variant or the power subcommand".into())),
        Command::Graph(GraphCommand::Check { file }) => {
            let graph = HGraph::from_json(&read_input(&file)?)?;
            let report = serde_json::to_string_pretty(&graph.report()).expect("report serializes");
            writeln!(out, "{report}").map_err(io_err)?;
            Ok(0)
        }
        Command::Graph(GraphCommand::Dot { file }) => {
            let graph = HGraph::from_json(&read_input(&file)?)?;
            write!(out, "{}", graph.to_dot()).map_err(io_err)?;
            Ok(0)
        }
        Command::Oracle(OracleCommand::Primitives { max_len }) => {
            for c in enumerate_primitives(max_len)?.iter() {
                writeln!(out, "{c}").map_err(io_err)?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}: {e}", e.name());
            EXIT_DOMAIN
        }
        Err(Failure::Io(msg)) => {
            eprintln!("IoError: {msg}");
            EXIT_DOMAIN
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
