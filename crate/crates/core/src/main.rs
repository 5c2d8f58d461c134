//! Batch command-line interface: construct the generator matrices,
//! export the design, print weight distributions, and run the
//! verification suites.
//!
//! Exit codes: 0 on success (and all checks passing), 1 on a failed
//! check or I/O error, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pace_code::{
    all_pass, build_design_code, golay_code, golay_generator, module_form_generator, BlockFamily,
    Gf3Matrix, PointSet, VerificationReport, Verifier, WittDesign,
};

/// Version tag carried by the verify/weights/orbits JSON outputs; the
/// matrix and block formats are pinned and unversioned.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "pace-code",
    version,
    about = "Construct and exhaustively verify the [66,10,36] ternary code on S(5,6,12)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Cap the number of worker threads (also: PACE_CODE_THREADS).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Orbit of block vectors in the 10-dimensional module.
    M12,
    /// Incidence construction deleting A from columns, B from rows.
    Design,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeChoice {
    Golay,
    Pace,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator matrix.
    Build {
        /// Which construction of the [66,10,36] code to use.
        #[arg(long, value_enum, conflicts_with = "golay")]
        construction: Option<Construction>,

        /// Comma-separated points deleted from the columns
        /// (design construction only; default 12).
        #[arg(long = "A", value_name = "POINTS", conflicts_with = "golay")]
        a: Option<String>,

        /// Comma-separated points deleted from the rows
        /// (design construction only; default 11).
        #[arg(long = "B", value_name = "POINTS", conflicts_with = "golay")]
        b: Option<String>,

        /// Print the 6×12 ternary Golay generator (I|P) instead.
        #[arg(long)]
        golay: bool,

        /// Include the column manifest (JSON format only).
        #[arg(long, conflicts_with = "golay")]
        manifest: bool,
    },
    /// Export the 132 blocks of S(5,6,12) in canonical order.
    Design {
        /// Export the 792 information sets instead of the blocks.
        #[arg(long)]
        info_sets: bool,
    },
    /// Print the full weight distribution of a code.
    Weights {
        #[arg(long, value_enum)]
        code: CodeChoice,
    },
    /// Run verification suites; exits 0 only if every check passes.
    Verify {
        /// All suites (the default when no scope is given).
        #[arg(long)]
        all: bool,
        /// Code parameters, equivalence, and the nullity sweep.
        #[arg(long)]
        theorem: bool,
        /// Design classification, intersection table, counting lemmas.
        #[arg(long)]
        lemmas: bool,
        /// Group orders, transitivity, stabilizers, orbits, invariance.
        #[arg(long)]
        group: bool,
        /// Exact maxima of the case-analysis bounds.
        #[arg(long)]
        cases: bool,
    },
    /// Orbit and stabilizer sizes under M₁₂.
    Orbits {
        /// Comma-separated point set to analyze (default: a standard
        /// sample of block, information set, and 2-set).
        #[arg(long, value_name = "POINTS")]
        set: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads(cli.threads);
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn init_threads(flag: Option<usize>) {
    let count = flag.or_else(|| {
        std::env::var("PACE_CODE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(count) = count.filter(|&c| c > 0) {
        // Ignore failure: the global pool can only be set once, which is
        // harmless if a host application already configured it.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global();
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let (output, exit) = match &cli.command {
        Command::Build {
            construction,
            a,
            b,
            golay,
            manifest,
        } => (
            cmd_build(
                cli,
                *construction,
                a.as_deref(),
                b.as_deref(),
                *golay,
                *manifest,
            )?,
            ExitCode::SUCCESS,
        ),
        Command::Design { info_sets } => (cmd_design(cli, *info_sets)?, ExitCode::SUCCESS),
        Command::Weights { code } => (cmd_weights(cli, *code)?, ExitCode::SUCCESS),
        Command::Verify {
            all,
            theorem,
            lemmas,
            group,
            cases,
        } => {
            let (text, pass) = cmd_verify(cli, *all, *theorem, *lemmas, *group, *cases)?;
            (
                text,
                if pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            )
        }
        Command::Orbits { set } => (cmd_orbits(cli, set.as_deref())?, ExitCode::SUCCESS),
    };
    emit(cli, &output)?;
    Ok(exit)
}

fn emit(cli: &Cli, output: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, output),
        None => std::io::stdout().write_all(output.as_bytes()),
    }
}

/// Aborts with a clap usage error (exit code 2).
fn usage_error(message: &str) -> ! {
    Cli::command()
        .error(ErrorKind::ArgumentConflict, message)
        .exit()
}

fn matrix_output(format: Format, matrix: &Gf3Matrix) -> String {
    match format {
        Format::Text => matrix.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string(matrix).expect("matrix serializes");
            s.push('\n');
            s
        }
    }
}

fn blocks_json(blocks: &[PointSet]) -> serde_json::Value {
    json!(blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>())
}

fn cmd_build(
    cli: &Cli,
    construction: Option<Construction>,
    a: Option<&str>,
    b: Option<&str>,
    golay: bool,
    manifest: bool,
) -> Result<String, Box<dyn std::error::Error>> {
    if golay {
        return Ok(matrix_output(cli.format, &golay_generator()));
    }
    if manifest && cli.format != Format::Json {
        usage_error("--manifest requires --format json");
    }
    let construction = construction.unwrap_or(Construction::M12);
    if construction == Construction::M12 && (a.is_some() || b.is_some()) {
        usage_error("--A/--B apply only to --construction design");
    }
    let design = WittDesign::build()?;
    let (matrix, column_blocks) = match construction {
        Construction::M12 => {
            let gen = module_form_generator(&design);
            (gen.matrix().clone(), gen.column_blocks().to_vec())
        }
        Construction::Design => {
            let a = PointSet::parse_list(a.unwrap_or("12"))?;
            let b = PointSet::parse_list(b.unwrap_or("11"))?;
            let family = BlockFamily::from_design(&design);
            let code = build_design_code(&family, a, b)?;
            (code.matrix().clone(), code.column_blocks().to_vec())
        }
    };
    if manifest {
        let value = json!({
            "matrix": matrix,
            "column_blocks": blocks_json(&column_blocks),
        });
        Ok(format!("{}\n", serde_json::to_string(&value)?))
    } else {
        Ok(matrix_output(cli.format, &matrix))
    }
}

fn cmd_design(cli: &Cli, info_sets: bool) -> Result<String, Box<dyn std::error::Error>> {
    let sets = if info_sets {
        let (_, info) = pace_code::classify_six_sets(&golay_generator())?;
        info
    } else {
        WittDesign::build()?.blocks().to_vec()
    };
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            for s in &sets {
                let line: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => Ok(format!("{}\n", serde_json::to_string(&blocks_json(&sets))?)),
    }
}

fn cmd_weights(cli: &Cli, choice: CodeChoice) -> Result<String, Box<dyn std::error::Error>> {
    let (name, code) = match choice {
        CodeChoice::Golay => ("golay", golay_code()),
        CodeChoice::Pace => ("pace", module_form_generator(&WittDesign::build()?).code()),
    };
    let wd = code.weight_distribution()?;
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            for (weight, count) in &wd.counts {
                out.push_str(&format!("{weight} {count}\n"));
            }
            Ok(out)
        }
        Format::Json => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "code": name,
                "n": wd.n,
                "k": wd.k,
                "counts": wd.counts
                    .iter()
                    .map(|(w, c)| (w.to_string(), json!(*c)))
                    .collect::<serde_json::Map<_, _>>(),
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    all: bool,
    theorem: bool,
    lemmas: bool,
    group: bool,
    cases: bool,
) -> Result<(String, bool), Box<dyn std::error::Error>> {
    let verifier = Verifier::new()?;
    let no_scope = !(all || theorem || lemmas || group || cases);
    let reports: Vec<VerificationReport> = if all || no_scope {
        verifier.all_checks()
    } else {
        let mut reports = Vec::new();
        if group {
            reports.extend(verifier.group_checks());
        }
        if lemmas {
            reports.extend(verifier.lemma_checks());
        }
        if cases {
            reports.extend(verifier.case_checks());
        }
        if theorem {
            reports.extend(verifier.theorem_checks());
        }
        reports
    };
    let pass = all_pass(&reports);
    let output = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed == 0 {
                out.push_str(&format!("all {} checks passed\n", reports.len()));
            } else {
                out.push_str(&format!("{failed} of {} checks FAILED\n", reports.len()));
            }
            out
        }
        Format::Json => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "reports": reports,
                "all_pass": pass,
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
    };
    Ok((output, pass))
}

fn cmd_orbits(cli: &Cli, set: Option<&str>) -> Result<String, Box<dyn std::error::Error>> {
    let m12 = pace_code::PermGroup::generate(&pace_code::m12_generators());
    let sets: Vec<(String, PointSet)> = match set {
        Some(list) => {
            let s = PointSet::parse_list(list)?;
            vec![(s.to_string(), s)]
        }
        None => {
            let design = WittDesign::build()?;
            let block = design.blocks()[0];
            vec![
                (format!("block {block}"), block),
                (
                    "information set {1,2,3,4,5,6}".to_string(),
                    PointSet::from_points(1..=6)?,
                ),
                ("2-set {1,2}".to_string(), PointSet::from_points([1, 2])?),
            ]
        }
    };
    let rows: Vec<(String, usize, usize)> = sets
        .iter()
        .map(|(name, s)| {
            let orbit = m12.orbit_of_set(*s).len();
            let stabilizer = m12.set_stabilizer_order(*s);
            (name.clone(), orbit, stabilizer)
        })
        .collect();
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            for (name, orbit, stabilizer) in &rows {
                out.push_str(&format!(
                    "{name}: orbit {orbit}, stabilizer {stabilizer}, product {}\n",
                    orbit * stabilizer
                ));
            }
            Ok(out)
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, orbit, stabilizer)| {
                    json!({
                        "set": name,
                        "orbit_size": orbit,
                        "stabilizer_order": stabilizer,
                        "product": orbit * stabilizer,
                    })
                })
                .collect();
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "group_order": m12.order(),
                "entries": entries,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
        }
    }
}
