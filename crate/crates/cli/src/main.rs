mod report;

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use cmbip::generators::{
    all_bipartite_graphs, poset_graph, random_bipartite, random_poset, GeneratorError, PosetSpec, RNG_ALGORITHM,
};
use cmbip::oracles::{
    independence_complex, is_pure, oracle_report, reisner_is_cm, OracleError, OracleOptions, DEFAULT_FACE_CAP,
};
use cmbip::report::{VerdictRecord, WitnessRecord};
use cmbip::{
    enumerate_perfect_matchings, is_cohen_macaulay, parse_graph, BipartiteGraph, ParseError, ParsedGraph,
    DEFAULT_ENUMERATION_CAP,
};

use report::{
    stripped_labels, MatchingsDocument, OracleCheck, OracleDocument, OrderDocument, SweepDocument, VerdictReport,
};

const EXIT_NOT_CM: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(name = "cmbip", version, about = "Decide Cohen-Macaulayness of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is Cohen-Macaulay (exit 0 yes, 1 no).
    Check {
        /// Graph file in `p bip` format, or `-` for stdin.
        input: String,
        /// Cross-check against the purity and Reisner oracles.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the brute-force oracles on a graph's independence complex.
    Oracle {
        input: String,
        /// Also print reduced Betti numbers.
        #[arg(long)]
        betti: bool,
        /// Also search for a shelling order.
        #[arg(long)]
        shellable: bool,
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        face_cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write generated graphs in `p bip` format.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Cross-check the checker against both oracles on every subgraph of a
    /// grid (exit 4 on any disagreement).
    Sweep {
        part_a: usize,
        part_b: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List perfect matchings.
    Matchings {
        input: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the certificate ordering of a Cohen-Macaulay graph.
    HhOrder {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Every edge subset of the grid, one file per subset.
    GridAll {
        part_a: usize,
        part_b: usize,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Each grid edge independently with probability `p`.
    Random {
        part_a: usize,
        part_b: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph of a partial order: a random one, or a chain with `--chain`.
    Poset {
        n: usize,
        /// Probability of relating each forward pair before closure.
        #[arg(default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        chain: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{input}: {source}")]
    Parse { input: String, source: ParseError },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid argument: {0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Oracle(OracleError::CapExceeded { .. }) => EXIT_CAP,
            CliError::Oracle(OracleError::EulerMismatch { .. }) => EXIT_DISAGREEMENT,
            _ => EXIT_INPUT,
        }
    }
}

fn read_graph(input: &str) -> Result<ParsedGraph, CliError> {
    let parsed = if input == "-" {
        parse_graph(io::stdin().lock())
    } else {
        let file = fs::File::open(input).map_err(|source| CliError::Io {
            path: input.to_string(),
            source,
        })?;
        parse_graph(BufReader::new(file))
    };
    parsed.map_err(|source| CliError::Parse {
        input: input.to_string(),
        source,
    })
}

fn emit<T: Serialize>(doc: &T, format: Format, text: impl FnOnce(&T) -> String) {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("documents serialize") + "\n",
        Format::Text => text(doc),
    };
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn cmd_check(input: &str, oracle: bool, format: Format) -> Result<u8, CliError> {
    let parsed = read_graph(input)?;
    let g = &parsed.graph;
    let start = Instant::now();
    let verdict = is_cohen_macaulay(g);
    let oracle = if oracle {
        let complex = independence_complex(g)?;
        let reisner_cm = reisner_is_cm(&complex)?.is_none();
        let pure = is_pure(&complex).is_pure();
        Some(OracleCheck {
            pure,
            reisner_cm,
            agrees: pure == verdict.is_unmixed && reisner_cm == verdict.is_cm && verdict.validate(g),
        })
    } else {
        None
    };
    let report = VerdictReport {
        input: input.to_string(),
        graph: g.to_record(),
        stripped: stripped_labels(&parsed.report),
        verdict: VerdictRecord::from(&verdict),
        oracle,
        timing_ms: elapsed_ms(start),
    };
    emit(&report, format, VerdictReport::to_text);
    if report.oracle.as_ref().is_some_and(|o| !o.agrees) {
        eprintln!("cmbip: checker and oracle disagree on {input}");
        return Ok(EXIT_DISAGREEMENT);
    }
    Ok(if verdict.is_cm { 0 } else { EXIT_NOT_CM })
}

fn cmd_oracle(input: &str, betti: bool, shellable: bool, face_cap: usize, format: Format) -> Result<u8, CliError> {
    let parsed = read_graph(input)?;
    let start = Instant::now();
    let opts = OracleOptions {
        betti,
        shellable,
        face_cap: Some(face_cap),
        shelling_cap: None,
    };
    let r = oracle_report(&parsed.graph, opts)?;
    let doc = OracleDocument::new(input.to_string(), parsed.graph.to_record(), &r, elapsed_ms(start));
    emit(&doc, format, OracleDocument::to_text);
    Ok(0)
}

fn write_graph(g: &BipartiteGraph, comment: String, out: Option<&Path>) -> Result<(), CliError> {
    let comments = [comment];
    match out {
        Some(path) => fs::File::create(path)
            .and_then(|f| {
                let mut w = io::BufWriter::new(f);
                g.write_text(&mut w, &comments)?;
                w.flush()
            })
            .map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            }),
        None => g.write_text(io::stdout().lock(), &comments).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn cmd_generate(kind: GenerateKind) -> Result<u8, CliError> {
    match kind {
        GenerateKind::GridAll { part_a, part_b, out } => {
            let graphs = all_bipartite_graphs(part_a, part_b)?;
            fs::create_dir_all(&out).map_err(|source| CliError::Io {
                path: out.display().to_string(),
                source,
            })?;
            for (rank, g) in graphs {
                let comment = format!("generator: grid-all part_a={part_a} part_b={part_b} rank={rank}");
                let path = out.join(format!("grid-{part_a}x{part_b}-{rank:05}.txt"));
                write_graph(&g, comment, Some(&path))?;
            }
        }
        GenerateKind::Random {
            part_a,
            part_b,
            p,
            seed,
            out,
        } => {
            let g = random_bipartite(part_a, part_b, p, seed)?;
            let comment =
                format!("generator: random part_a={part_a} part_b={part_b} p={p} seed={seed} rng={RNG_ALGORITHM}");
            write_graph(&g, comment, out.as_deref())?;
        }
        GenerateKind::Poset {
            n,
            p,
            chain,
            seed,
            out,
        } => {
            if n == 0 {
                return Err(CliError::Usage("poset needs at least one element".into()));
            }
            let (ps, comment) = if chain {
                (PosetSpec::chain(n), format!("generator: poset chain n={n}"))
            } else {
                (
                    random_poset(n, p, seed)?,
                    format!("generator: poset n={n} p={p} seed={seed} rng={RNG_ALGORITHM}"),
                )
            };
            write_graph(&poset_graph(&ps), comment, out.as_deref())?;
        }
    }
    Ok(0)
}

fn cmd_sweep(part_a: usize, part_b: usize, jobs: Option<usize>, format: Format) -> Result<u8, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let start = Instant::now();
    let summary = pool.install(|| cmbip::sweep::sweep(part_a, part_b))?;
    let failures = summary.oracle_failures.len();
    let doc = SweepDocument::new(part_a, part_b, summary, elapsed_ms(start));
    emit(&doc, format, SweepDocument::to_text);
    Ok(if doc.disagreements > 0 {
        EXIT_DISAGREEMENT
    } else if failures > 0 {
        EXIT_CAP
    } else {
        0
    })
}

fn cmd_matchings(input: &str, cap: usize, format: Format) -> Result<u8, CliError> {
    if cap == 0 {
        return Err(CliError::Usage("--cap must be positive".into()));
    }
    let parsed = read_graph(input)?;
    let e = enumerate_perfect_matchings(&parsed.graph, cap);
    let doc = MatchingsDocument {
        input: input.to_string(),
        count: e.matchings.len(),
        truncated: e.truncated,
        matchings: e
            .matchings
            .iter()
            .map(|m| m.pairs().iter().map(|&(a, b)| [a + 1, b + 1]).collect())
            .collect(),
    };
    emit(&doc, format, MatchingsDocument::to_text);
    Ok(0)
}

fn cmd_hh_order(input: &str, format: Format) -> Result<u8, CliError> {
    let parsed = read_graph(input)?;
    let verdict = is_cohen_macaulay(&parsed.graph);
    let doc = OrderDocument {
        input: input.to_string(),
        ordered_pairs: verdict.certificate().map(|c| {
            c.hh_order
                .iter()
                .map(|&i| {
                    let (a, b) = c.matching.pairs()[i];
                    [a + 1, b + 1]
                })
                .collect()
        }),
        witness: verdict.witness().map(WitnessRecord::from),
    };
    emit(&doc, format, OrderDocument::to_text);
    Ok(if verdict.is_cm { 0 } else { EXIT_NOT_CM })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { input, oracle, format } => cmd_check(&input, oracle, format),
        Command::Oracle {
            input,
            betti,
            shellable,
            face_cap,
            format,
        } => cmd_oracle(&input, betti, shellable, face_cap, format),
        Command::Generate { kind } => cmd_generate(kind),
        Command::Sweep {
            part_a,
            part_b,
            jobs,
            format,
        } => cmd_sweep(part_a, part_b, jobs, format),
        Command::Matchings { input, cap, format } => cmd_matchings(&input, cap, format),
        Command::HhOrder { input, format } => cmd_hh_order(&input, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cmbip: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
