//! Command-line verifier for the exact polyhedral-group toolkit.
//!
//! Every subcommand recomputes mathematical structures from scratch in exact
//! arithmetic, compares them against a versioned table of expected values,
//! and emits a report: one named record per check plus an overall verdict.
//!
//! Exit codes: `0` every check passed, `1` at least one check failed,
//! `2` the request itself was invalid (bad flags, unreadable files,
//! out-of-range sizes).

mod commands;
mod expected;
mod report;

use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use spaceform::complexes::build_by_label;
use spaceform::{ChainComplex, GroupTag};

use commands::{Ctx, OracleLevel, ORACLE_NOT_REQUESTED};
use report::Report;

#[derive(Parser)]
#[command(
    name = "spaceform",
    version,
    about = "Exact verifier for binary polyhedral groups, their orbit polytopes, and periodic chain complexes",
    propagate_version = true
)]
struct Cli {
    /// Write the JSON report to PATH; '-' streams it to stdout and
    /// suppresses the plain-text rendering.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    #[value(name = "T")]
    T,
    #[value(name = "O")]
    O,
    #[value(name = "I")]
    I,
    #[value(name = "S3")]
    S3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyGroupArg {
    #[value(name = "T")]
    T,
    #[value(name = "O")]
    O,
    #[value(name = "I")]
    I,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelArg {
    #[value(name = "KO")]
    Ko,
    #[value(name = "KI")]
    Ki,
    #[value(name = "KT")]
    Kt,
    #[value(name = "KS3")]
    Ks3,
    #[value(name = "KO_TZ")]
    KoTz,
    #[value(name = "KT_MIN")]
    KtMin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleArg {
    /// Orbit construction only.
    Orbit,
    /// Also enumerate facets exhaustively and compare (minutes for the
    /// order-120 group).
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    /// Homology of the sphere carrying the free cellular action.
    Sphere,
    /// Homology of the quotient space.
    Quotient,
    /// Integral and mod-2 homology of the full flag variety.
    Flag,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a group: order, axioms, presentation, subgroups, abelianization.
    Group {
        /// Which group to certify.
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Build an orbit polytope and certify its fundamental domain.
    Polytope {
        /// Which group's orbit polytope to build.
        #[arg(long, value_enum)]
        group: PolyGroupArg,
        /// How to cross-check the facet list.
        #[arg(long, value_enum, default_value = "orbit")]
        oracle: OracleArg,
    },
    /// Emit or verify a cataloged equivariant chain complex.
    #[command(group = ArgGroup::new("mode").required(true).args(["emit", "verify"]))]
    Complex {
        /// Catalog label of the complex.
        #[arg(long, value_enum)]
        label: LabelArg,
        /// Write the complex as JSON to PATH ('-' for stdout).
        #[arg(long, value_name = "PATH")]
        emit: Option<String>,
        /// Run the certification suite for the complex.
        #[arg(long)]
        verify: bool,
        /// Load the complex from a JSON file instead of the built-in catalog.
        #[arg(long, value_name = "PATH")]
        input: Option<String>,
    },
    /// Compute homology and compare against the expected tables.
    Homology {
        /// What to compute homology of.
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Group (required for sphere and quotient targets).
        #[arg(long, value_enum)]
        group: Option<PolyGroupArg>,
        /// Number of four-term periods for the sphere target.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Compute group cohomology through a given degree and compare.
    Cohomology {
        /// Which group's cohomology to compute.
        #[arg(long, value_enum)]
        group: PolyGroupArg,
        /// Largest cohomological degree to verify (at least 4).
        #[arg(long)]
        qmax: usize,
    },
    /// Run the entire verification suite.
    VerifyAll {
        /// Skip the slowest checks: the exhaustive icosahedral facet oracle
        /// and the period-2 sphere homologies.
        #[arg(long)]
        fast: bool,
    },
}

impl GroupArg {
    fn tag(self) -> GroupTag {
        match self {
            GroupArg::T => GroupTag::T,
            GroupArg::O => GroupTag::O,
            GroupArg::I => GroupTag::I,
            GroupArg::S3 => GroupTag::S3,
        }
    }
}

impl PolyGroupArg {
    fn tag(self) -> GroupTag {
        match self {
            PolyGroupArg::T => GroupTag::T,
            PolyGroupArg::O => GroupTag::O,
            PolyGroupArg::I => GroupTag::I,
        }
    }
}

impl LabelArg {
    fn as_str(self) -> &'static str {
        match self {
            LabelArg::Ko => "KO",
            LabelArg::Ki => "KI",
            LabelArg::Kt => "KT",
            LabelArg::Ks3 => "KS3",
            LabelArg::KoTz => "KO_TZ",
            LabelArg::KtMin => "KT_MIN",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(passed) => {
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, exiting quietly with `code_on_pipe` if the consumer has
/// closed the stream (e.g. piping into `head`), instead of panicking.
fn print_stdout(text: &str, code_on_pipe: i32) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
            std::process::exit(code_on_pipe);
        }
        Err(e) => Err(e).context("writing to stdout"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx::new()?;
    let mut stdout_taken_by_emit = false;

    let report = match &cli.command {
        Command::Group { group } => {
            let tag = group.tag();
            let mut r = Report::new(format!("group --group {tag}"));
            commands::group_checks(&mut r, &ctx, tag, "")?;
            r
        }
        Command::Polytope { group, oracle } => {
            let tag = group.tag();
            let (oracle_level, oracle_word) = match oracle {
                OracleArg::Orbit => (OracleLevel::Orbit { skip_note: ORACLE_NOT_REQUESTED }, "orbit"),
                OracleArg::Full => (OracleLevel::Full, "full"),
            };
            let mut r = Report::new(format!("polytope --group {tag} --oracle {oracle_word}"));
            commands::polytope_checks(&mut r, &ctx, tag, oracle_level, "")?;
            r
        }
        Command::Complex { label, emit, verify, input } => {
            let label = label.as_str();
            let complex = match input {
                Some(path) => load_complex(&ctx, path)?,
                None => build_by_label(&ctx.groups, label)
                    .map_err(|e| anyhow!("catalog {label}: {e}"))?,
            };

            let mut echo = format!("complex --label {label}");
            if let Some(path) = emit {
                echo.push_str(&format!(" --emit {path}"));
            }
            if *verify {
                echo.push_str(" --verify");
            }
            if let Some(path) = input {
                echo.push_str(&format!(" --input {path}"));
            }
            let mut r = Report::new(echo);

            if input.is_some() {
                let ok = complex.label() == label;
                r.check(
                    "label matches request",
                    ok,
                    if ok {
                        label.to_string()
                    } else {
                        format!("file contains '{}', requested '{label}'", complex.label())
                    },
                );
            }
            if let Some(path) = emit {
                let json = complex.to_json().map_err(|e| anyhow!("serialization: {e}"))?;
                if path == "-" {
                    if cli.json.as_deref() == Some("-") {
                        return Err(anyhow!(
                            "--emit - and --json - both claim stdout; write one of them to a file"
                        ));
                    }
                    print_stdout(&format!("{json}\n"), 0)?;
                    stdout_taken_by_emit = true;
                } else {
                    fs::write(path, json + "\n")
                        .with_context(|| format!("writing complex JSON to {path}"))?;
                }
                r.check(
                    "complex serialized",
                    true,
                    format!("ranks {:?} written as JSON", complex.ranks()),
                );
            }
            if *verify {
                commands::complex_checks(&mut r, &ctx, &complex, "")?;
            }
            r
        }
        Command::Homology { target, group, n } => match target {
            TargetArg::Sphere => {
                let tag = require_group(*group, "sphere")?;
                if *n == 0 {
                    return Err(anyhow!("--n must be at least 1"));
                }
                let mut r = Report::new(format!("homology --target sphere --group {tag} --n {n}"));
                commands::sphere_checks(&mut r, &ctx, tag, *n, "")?;
                r
            }
            TargetArg::Quotient => {
                let tag = require_group(*group, "quotient")?;
                let mut r = Report::new(format!("homology --target quotient --group {tag}"));
                commands::quotient_checks(&mut r, &ctx, tag, "")?;
                r
            }
            TargetArg::Flag => {
                let mut r = Report::new("homology --target flag");
                commands::flag_checks(&mut r, &ctx, "")?;
                r
            }
        },
        Command::Cohomology { group, qmax } => {
            let tag = group.tag();
            let mut r = Report::new(format!("cohomology --group {tag} --qmax {qmax}"));
            commands::cohomology_checks(&mut r, &ctx, tag, *qmax, "")?;
            r
        }
        Command::VerifyAll { fast } => {
            let mut r = Report::new(if *fast { "verify-all --fast" } else { "verify-all" });
            commands::verify_all_checks(&mut r, &ctx, *fast)?;
            r
        }
    };

    let code_on_pipe = i32::from(!report.passed());
    match cli.json.as_deref() {
        Some("-") => print_stdout(&(report.to_json() + "\n"), code_on_pipe)?,
        Some(path) => {
            fs::write(path, report.to_json() + "\n")
                .with_context(|| format!("writing report to {path}"))?;
            if !stdout_taken_by_emit {
                print_stdout(&report.render_human(), code_on_pipe)?;
            }
        }
        None => {
            if !stdout_taken_by_emit {
                print_stdout(&report.render_human(), code_on_pipe)?;
            }
        }
    }
    Ok(report.passed())
}

fn require_group(group: Option<PolyGroupArg>, target: &str) -> Result<GroupTag> {
    group
        .map(PolyGroupArg::tag)
        .ok_or_else(|| anyhow!("--group is required for --target {target}"))
}

fn load_complex(ctx: &Ctx, path: &str) -> Result<ChainComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    ChainComplex::from_json(&ctx.groups, &text)
        .map_err(|e| anyhow!("parsing complex JSON from {path}: {e}"))
}
