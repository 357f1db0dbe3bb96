use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use regmap_cli::render::{write_checks, write_map_report, write_table};
use regmap_cli::{Format, MapReport};
use regmap_core::patterns::report_from_table;
use regmap_core::suites::{suite_items, Outcome, Suite};
use regmap_core::surface_families::{fixture_map, genus_from_order, FamilyKind, FamilyRequest};
use regmap_core::tables::{table_rows, RowStatus, DEFAULT_TOLERANCE};
use regmap_core::{
    enumerate_cosets_with, verify_against_patterns, EnumerationOptions, Error, MapType, RunContext,
    Strategy, TableId, TraceError, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "regmap",
    version,
    about = "Patterns and link indices of mirrors on regular maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Maximum number of cosets held during an enumeration.
    #[arg(long, global = true, env = "REGMAP_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Directory holding `<name>.pres` fixtures and their `manifest`.
    #[arg(long, global = true, env = "REGMAP_FIXTURES")]
    fixtures: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Coset enumeration strategy.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,
    /// Absolute tolerance for length comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Hlt => Strategy::Hlt,
            StrategyArg::Felsch => Strategy::Felsch,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report the patterns of one map, given by a family or a presentation file.
    Pattern(PatternArgs),
    /// Reproduce a published table.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PatternArgs {
    #[arg(long, requires = "n")]
    m: Option<u32>,
    #[arg(long, requires = "m")]
    n: Option<u32>,
    /// Presentation file of the rotation group over `A, B, C`; needs `--m` and `--n`.
    #[arg(long, conflicts_with = "family", requires_all = ["m", "n"])]
    presentation: Option<PathBuf>,
    /// Family name, e.g. hurwitz, fermat, bolza, accola-maclachlan, wiman-i, wiman-ii,
    /// tetrahedron, hosohedron, torus-44-b0.
    #[arg(long, required_unless_present = "presentation")]
    family: Option<String>,
    /// Family parameter: genus, degree, relator power, n or b.
    #[arg(long)]
    param: Option<u32>,
    /// Also trace the flag complex to count mirrors and cross-check indices.
    #[arg(long)]
    counts: bool,
}

#[derive(Args)]
struct TableArgs {
    /// One of 1, 2, 4, 5, 7, t41, t42.
    #[arg(long)]
    table: String,
    /// Lattice parameter for t41 and t42.
    #[arg(long, default_value_t = 1)]
    b: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// spherical, tori, families, oracle or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Include checks far beyond desk scale (the K=4 Hurwitz quotient).
    #[arg(long, env = "REGMAP_LONG_RUN")]
    long_run: bool,
}

enum Failure {
    Input(anyhow::Error),
    Budget(anyhow::Error),
    Verification(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            return Failure::Budget(e.into());
        }
        match e {
            Error::Trace(
                TraceError::Enumeration(_) | TraceError::Presentation(_) | TraceError::Pattern(_),
            ) => Failure::Input(e.into()),
            Error::Trace(_) => Failure::Verification(e.into()),
            _ => Failure::Input(e.into()),
        }
    }
}

macro_rules! from_core {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}
from_core!(
    regmap_core::FamilyError,
    regmap_core::PatternError,
    regmap_core::EnumerationError,
    regmap_core::TraceError
);

fn io(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Input(e.into())
}

fn context(g: &Global) -> Result<RunContext, Failure> {
    let mut ctx = RunContext::new(g.budget, g.fixtures.clone(), g.strategy.into())?;
    ctx.tolerance = g.tolerance;
    Ok(ctx)
}

fn pattern(
    args: &PatternArgs,
    g: &Global,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let options = EnumerationOptions {
        budget: g.budget,
        strategy: g.strategy.into(),
    };
    let (name, presentation, map_type, order, mut reports) = if let Some(path) = &args.presentation
    {
        let (m, n) = (args.m.unwrap_or(0), args.n.unwrap_or(0));
        let map_type = MapType::new(m, n)?;
        let r = fixture_map(path, map_type, options)?;
        let name = path
            .file_stem()
            .map_or("fixture".to_string(), |s| s.to_string_lossy().into_owned());
        (name, r.presentation, map_type, r.order, r.reports)
    } else {
        let family = args.family.as_deref().unwrap_or_default();
        let kind: FamilyKind = family.parse()?;
        let map = FamilyRequest {
            kind,
            param: args.param,
        }
        .resolve()?;
        if let (Some(m), Some(n)) = (args.m, args.n) {
            if MapType::new(m, n)? != map.map_type {
                return Err(Failure::Input(anyhow!(
                    "{} has type {}, not {{{m},{n}}}",
                    map.name,
                    map.map_type
                )));
            }
        }
        let table = enumerate_cosets_with(&map.presentation, &[], options)?;
        let reports = report_from_table(&table, &map.presentation, map.map_type)?;
        (
            map.name,
            map.presentation,
            map.map_type,
            table.len() as u64,
            reports,
        )
    };
    let genus = genus_from_order(map_type, order).ok();
    if genus.is_none() {
        reports.clear();
    } else if args.counts {
        let v = verify_against_patterns(&presentation, map_type, g.budget)?;
        if !v.agrees() {
            return Err(Failure::Verification(anyhow!(
                "the traced patterns of {name} disagree with the mirror-automorphism words"
            )));
        }
        reports = v.reports();
    }
    let report = MapReport::new(name, map_type, order, genus, &reports);
    write_map_report(out, &report, format).map_err(io)
}

fn table(
    args: &TableArgs,
    g: &Global,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let id: TableId = args.table.parse().map_err(Error::from)?;
    let ctx = context(g)?;
    let specs = table_rows(id, args.b)?;
    let rows = specs
        .par_iter()
        .map(|s| s.evaluate(&ctx))
        .collect::<Result<Vec<_>, Error>>()?;
    write_table(out, id, &rows, format).map_err(io)?;
    if rows.iter().any(|r| r.status == RowStatus::Mismatch) {
        return Err(Failure::Verification(anyhow!(
            "table {id} has mismatched rows"
        )));
    }
    Ok(())
}

fn verify(
    args: &VerifyArgs,
    g: &Global,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: String| Failure::Input(anyhow!(e)))?;
    let mut ctx = context(g)?;
    ctx.long_run = args.long_run;
    let items = suite_items(suite);
    let checks: Vec<_> = items.par_iter().map(|i| i.run(&ctx)).collect();
    write_checks(out, &checks, format).map_err(io)?;
    let failed = checks.iter().filter(|c| c.outcome.is_failure()).count();
    if failed > 0 {
        return Err(Failure::Verification(anyhow!("{failed} check(s) failed")));
    }
    if checks
        .iter()
        .any(|c| matches!(c.outcome, Outcome::Budget(_)))
    {
        return Err(Failure::Budget(anyhow!(
            "some checks ran out of coset budget; raise --budget"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let g = &cli.global;
    let format = if g.json { Format::Json } else { g.format };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Pattern(a) => pattern(a, g, format, &mut out),
        Command::Table(a) => table(a, g, format, &mut out),
        Command::Verify(a) => verify(a, g, format, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(e) | Failure::Budget(e) | Failure::Verification(e)) = &f;
            let closed = e
                .chain()
                .filter_map(|c| c.downcast_ref::<std::io::Error>())
                .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if closed {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(f.code())
        }
    }
}
