//! `charval`: character tables and character-value checks from the shell.
//!
//! Exit codes: 0 success, 1 a predicate failed or a group errored during a
//! scan, 2 bad input, 3 order cap exceeded, 4 internal verification failure.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use charval_core::analysis::{parse_predicates, value_profile, Predicate, ValueProfile};
use charval_core::chartab::{dixon_schneider_with_seed, TableRecord, DEFAULT_SEED};
use charval_core::cyclotomic::Cyclotomic;
use charval_core::family::GroupSpec;
use charval_core::fleet::{catalog_sources, default_families, scan, GroupSource, RunConfig};
use charval_core::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use charval_core::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "charval", version, about = "Exact character tables and character-value checks")]
struct Cli {
    /// Largest group order to enumerate.
    #[arg(long, global = true, env = "CHARVAL_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Seed for eigenspace splitting.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table of a group.
    Table {
        /// `family:<spec>` or `file:<path>#<name>`.
        group: String,
    },
    /// Print cv(G), cd(G) and b(G).
    Cv { group: String },
    /// Check predicates on the named groups (`named`), on one group, or
    /// check orthogonality of a stored table (`table:<json path>`).
    Verify {
        scope: String,
        #[arg(long, default_value = "all")]
        predicates: String,
    },
    /// Check predicates on every record of catalog files or directories.
    Scan {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, default_value = "all")]
        predicates: String,
        /// Also scan the built-in constructed groups.
        #[arg(long)]
        with_families: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ClosureExceedsCap { .. } | Error::OrderCapExceeded { .. } => 3,
        Error::LiftInconsistent(_) | Error::NoSuitablePrime { .. } => 4,
        _ => 2,
    }
}

fn load(spec: &str, cap: usize) -> Result<FiniteGroup, Error> {
    let spec: GroupSpec = spec.parse()?;
    let g = spec.load(cap)?;
    Ok(match spec {
        GroupSpec::Family(f) => g.with_name(f.to_string()),
        GroupSpec::File { .. } => g,
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

#[derive(Serialize)]
struct CvDocument<'a> {
    schema_version: u32,
    group: &'a str,
    order: usize,
    cv_size: usize,
    cv: Vec<String>,
    cv_exact: Vec<&'a Cyclotomic>,
    cd: Vec<u64>,
    b: u64,
    has_zero: bool,
}

impl<'a> CvDocument<'a> {
    fn new(group: &'a FiniteGroup, p: &'a ValueProfile) -> Self {
        CvDocument {
            schema_version: 1,
            group: group.name(),
            order: group.order(),
            cv_size: p.cv_size,
            cv: p.cv_pretty(),
            cv_exact: p.cv.iter().collect(),
            cd: p.cd.iter().copied().collect(),
            b: p.b,
            has_zero: p.has_zero,
        }
    }
}

fn cmd_table(cli: &Cli, spec: &str) -> Result<u8, Error> {
    let g = load(spec, cli.cap)?;
    let t = dixon_schneider_with_seed(&g, cli.seed)?;
    match cli.format {
        Format::Json => print_json(&t.to_record()),
        Format::Text => print!("{}", render::table(&t)),
    }
    Ok(0)
}

fn cmd_cv(cli: &Cli, spec: &str) -> Result<u8, Error> {
    let g = load(spec, cli.cap)?;
    let t = dixon_schneider_with_seed(&g, cli.seed)?;
    let p = value_profile(&t);
    match cli.format {
        Format::Json => print_json(&CvDocument::new(&g, &p)),
        Format::Text => print!("{}", render::profile(g.name(), g.order(), &p)),
    }
    Ok(0)
}

#[derive(Serialize)]
struct TableVerification<'a> {
    schema_version: u32,
    group: &'a str,
    ok: bool,
    orthogonality: charval_core::chartab::OrthogonalityReport,
}

fn verify_table(cli: &Cli, path: &str) -> Result<u8, Error> {
    let io = |e: std::io::Error| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    let text = fs::read_to_string(path).map_err(io)?;
    let record: TableRecord = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let report = record.verify();
    let ok = report.is_ok();
    match cli.format {
        Format::Json => print_json(&TableVerification {
            schema_version: 1,
            group: &record.group,
            ok,
            orthogonality: report,
        }),
        Format::Text => print!("{}", render::orthogonality(&record, &report)),
    }
    Ok(if ok { 0 } else { 1 })
}

fn run_scan(cli: &Cli, sources: &[GroupSource], predicates: &[Predicate]) -> Result<u8, Error> {
    let config = RunConfig::new(cli.cap, cli.seed, cli.jobs)?;
    let report = scan(sources, predicates, &config);
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", render::fleet(&report)),
    }
    Ok(if report.is_success() { 0 } else { 1 })
}

fn cmd_verify(cli: &Cli, scope: &str, predicates: &str) -> Result<u8, Error> {
    if let Some(path) = scope.strip_prefix("table:") {
        return verify_table(cli, path);
    }
    let predicates = parse_predicates(predicates)?;
    let sources: Vec<GroupSource> = if scope == "named" {
        default_families().into_iter().map(GroupSource::Family).collect()
    } else {
        match scope.parse::<GroupSpec>()? {
            GroupSpec::Family(f) => vec![GroupSource::Family(f)],
            GroupSpec::File { path, name } => {
                let all = catalog_sources(std::slice::from_ref(&path))?;
                let found: Vec<GroupSource> = all
                    .into_iter()
                    .filter(|s| matches!(s, GroupSource::Record { record, .. } if record.name == name))
                    .collect();
                if found.is_empty() {
                    return Err(Error::Spec(format!("no record {name} in {}", path.display())));
                }
                found
            }
        }
    };
    // A single group that cannot be built is an input error, not a failed check.
    if sources.len() == 1 {
        sources[0].load(cli.cap)?;
    }
    run_scan(cli, &sources, &predicates)
}

fn cmd_scan(cli: &Cli, paths: &[PathBuf], predicates: &str, with_families: bool) -> Result<u8, Error> {
    let predicates = parse_predicates(predicates)?;
    let mut sources = catalog_sources(paths)?;
    if with_families {
        sources.extend(default_families().into_iter().map(GroupSource::Family));
    }
    run_scan(cli, &sources, &predicates)
}

fn run(cli: &Cli) -> Result<u8, Error> {
    if cli.cap == 0 || cli.jobs == 0 {
        return Err(Error::Spec("--cap and --jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Table { group } => cmd_table(cli, group),
        Command::Cv { group } => cmd_cv(cli, group),
        Command::Verify { scope, predicates } => cmd_verify(cli, scope, predicates),
        Command::Scan {
            paths,
            predicates,
            with_families,
        } => cmd_scan(cli, paths, predicates, *with_families),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("charval: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
