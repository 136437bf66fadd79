//! Command-line front door: build a group from a constructor expression,
//! classify its prime-order element graph, export the graph, run the
//! theorem suite, or sweep a family for class membership.
//!
//! Every verdict printed here is reproducible by direct library calls;
//! the binary only parses arguments, routes, and formats.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pograph::classes::Budget;
use pograph::report::{classify, ClassKind, ClassificationReport, ClassifyOptions, SearchHit};
use pograph::verify::{run_suite, CheckStatus, Suite, SuiteReport, VerifyOptions};
use pograph::{build_gamma, Error, Group, GroupSpec};

const PARSE_EXIT: u8 = 2;
const UNCERTIFIED_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "pograph", version, about = "prime-order element graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Wall-clock budget in seconds for each hole search.
    #[arg(long, default_value_t = 30)]
    budget_seconds: u64,

    /// Largest group order enumerated or instantiated. Defaults to 256
    /// for corpus sweeps and to the table cap for single-group commands.
    #[arg(long, env = "POGRAPH_MAX_ORDER")]
    max_order: Option<usize>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Seed for randomized test corpora (reserved; deterministic commands
    /// ignore it).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the graph of one group into the recognized classes.
    Classify {
        /// Constructor expression, e.g. "S:4" or "C:2 x SD:7:3:2".
        spec: String,

        /// Comma-separated subset of checks
        /// (perfect,cograph,chordal,interval,split,threshold,clawfree).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,

        /// Exit with status 3 if any verdict is Unknown.
        #[arg(long)]
        require_certified: bool,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the graph of a group in DOT or JSON form.
    Export {
        spec: String,

        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,

        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,

        /// Largest group order accepted.
        #[arg(long, env = "POGRAPH_MAX_ORDER")]
        max_order: Option<usize>,
    },
    /// Run the theorem-check suites and print a report.
    Verify {
        /// all, basics, perfect, matrix, cograph, chordal, clawfree, table1.
        #[arg(long, default_value = "all")]
        suite: String,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Sweep a group family and report class membership with witnesses.
    Search {
        /// perfect, cograph, chordal, interval, split, threshold, clawfree.
        class: String,

        /// all, cyclic, abelian, abelian-2, dihedral, quaternion,
        /// symmetric, alternating, semidirect; or `spec:<expr>` for a
        /// single explicit group.
        #[arg(long, default_value = "all")]
        family: String,

        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<Error>().is_some_and(|e| matches!(e, Error::Parse { .. })) {
                ExitCode::from(PARSE_EXIT)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec> {
    text.parse::<GroupSpec>()
        .map_err(|e| anyhow::Error::new(e).context(format!("invalid group spec '{text}'")))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify {
            spec,
            checks,
            require_certified,
            common,
        } => {
            let spec = parse_spec(&spec)?;
            let kinds = if checks.is_empty() {
                ClassKind::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|name| {
                        ClassKind::parse(name)
                            .ok_or_else(|| anyhow!("unknown class '{name}'"))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let opts = ClassifyOptions {
                budget: Budget::seconds(common.budget_seconds),
                cap: common.max_order.unwrap_or(pograph::group::DEFAULT_ORDER_CAP),
                checks: kinds,
            };
            let report = classify(&spec, &opts)?;
            match common.format {
                Format::Json => print!("{}", report.to_json_string()),
                Format::Table => print_classification_table(&report),
            }
            if require_certified && report.has_unknown() {
                return Ok(ExitCode::from(UNCERTIFIED_EXIT));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            spec,
            format,
            output,
            max_order,
        } => {
            let spec = parse_spec(&spec)?;
            let group = Group::build_with_cap(
                &spec,
                max_order.unwrap_or(pograph::group::DEFAULT_ORDER_CAP),
            )?;
            let graph = build_gamma(&group);
            let rendered = match format {
                ExportFormat::Dot => graph.to_dot(),
                ExportFormat::Json => graph.to_json(),
            };
            match output {
                Some(path) => std::fs::write(&path, rendered)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => {
                    std::io::stdout().write_all(rendered.as_bytes())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, common } => {
            let suite = Suite::parse(&suite).ok_or_else(|| anyhow!("unknown suite '{suite}'"))?;
            let opts = VerifyOptions {
                max_order: common.max_order.unwrap_or(256),
                budget: Budget::seconds(common.budget_seconds),
                ..Default::default()
            };
            let report = run_suite(suite, &opts);
            match common.format {
                Format::Json => print!("{}", report.to_json_string()),
                Format::Table => print_suite_table(&report),
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Search {
            class,
            family,
            common,
        } => {
            let class = ClassKind::parse(&class)
                .ok_or_else(|| anyhow!("unknown class '{class}'"))?;
            let specs = if let Some(expr) = family.strip_prefix("spec:") {
                vec![parse_spec(expr)?]
            } else {
                pograph::verify::corpus::Family::parse(&family)
                    .ok_or_else(|| anyhow!("unknown family '{family}'"))?
                    .specs(common.max_order.unwrap_or(256))
            };
            let hits = pograph::report::search_class(
                class,
                &specs,
                Budget::seconds(common.budget_seconds),
                common.max_order.unwrap_or(pograph::group::DEFAULT_ORDER_CAP),
            )?;
            match common.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&hits)?;
                    s.push('\n');
                    print!("{s}");
                }
                Format::Table => print_search_table(class, &hits),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_classification_table(report: &ClassificationReport) {
    println!(
        "group {}   order {}   |S| {}   exponent {}   eppo {}",
        report.spec, report.order, report.s_size, report.exponent, report.eppo
    );
    println!("{:<12} {:<14} {:<10} {:<12} witness", "check", "verdict", "certified", "elapsed");
    for (name, outcome) in &report.checks {
        let verdict = format!("{:?}", outcome.verdict);
        let witness = match &outcome.witness {
            Some(w) => format!("{} [{}]", w.kind, w.vertices.join(", ")),
            None => String::new(),
        };
        println!(
            "{:<12} {:<14} {:<10} {:<12} {}",
            name, verdict, outcome.certified, outcome.elapsed, witness
        );
    }
}

fn print_suite_table(report: &SuiteReport) {
    for check in &report.checks {
        match &check.status {
            CheckStatus::Pass => println!("PASS  {:<40} [{}]", check.id, check.elapsed),
            CheckStatus::Fail => {
                let detail = check
                    .counterexample
                    .as_ref()
                    .map(|c| format!("{}: {}", c.group, c.detail))
                    .unwrap_or_default();
                println!("FAIL  {:<40} {detail}", check.id);
            }
            CheckStatus::Skipped(reason) => {
                println!("SKIP  {:<40} {reason}", check.id);
            }
        }
    }
    let (pass, fail, skip) = report.counts();
    println!("{pass} passed, {fail} failed, {skip} skipped");
}

fn print_search_table(class: ClassKind, hits: &[SearchHit]) {
    for hit in hits {
        let mark = match hit.verdict {
            pograph::classes::Verdict::InClass => "member    ",
            pograph::classes::Verdict::NotInClass => "non-member",
            pograph::classes::Verdict::Unknown => "unknown   ",
        };
        println!("{mark} {:<24} order {}", hit.spec, hit.order);
    }
    let members = hits.iter().filter(|h| h.member).count();
    println!(
        "{} of {} groups are {} members",
        members,
        hits.len(),
        class.name()
    );
}
