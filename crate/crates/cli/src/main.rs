use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kunzcount::census::{self, CensusRow, CountQuery, Source};
use kunzcount::oracle::OracleConfig;
use kunzcount::verify::{self, Status, VerifyOptions, VerifyReport};
use kunzcount::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kunzcount", version, about = "Count numerical semigroups by multiplicity, genus and Frobenius number")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) semigroups of multiplicity m with fixed genus and/or Frobenius number.
    Count(CountArgs),
    /// Census by genus and multiplicity.
    Table(TableArgs),
    /// Check the closed forms and census tables against enumeration.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Auto,
    Polytope,
    Formula,
    Oracle,
}

impl From<SourceArg> for Source {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::Auto => Source::Auto,
            SourceArg::Polytope => Source::Polytope,
            SourceArg::Formula => Source::Formula,
            SourceArg::Oracle => Source::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CsvOrJson {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct CountArgs {
    #[arg(short = 'm', long)]
    multiplicity: i64,
    #[arg(short = 'g', long)]
    genus: Option<i64>,
    #[arg(short = 'f', long)]
    frobenius: Option<i64>,
    /// Only maximal embedding dimension semigroups.
    #[arg(long)]
    med: bool,
    /// Print Kunz coordinates and minimal generators of every semigroup.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value = "auto")]
    source: SourceArg,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, default_value_t = 15)]
    max_genus: u64,
    #[arg(long)]
    med: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: CsvOrJson,
    #[arg(long, value_enum, default_value = "polytope")]
    source: SourceArg,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    max_genus: i64,
    #[arg(long, default_value_t = 400)]
    max_frobenius: i64,
    /// Upper genus of the (g, F) grids.
    #[arg(long, default_value_t = 60)]
    grid_genus: i64,
    #[arg(long, default_value_t = 15)]
    oracle_depth: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
    /// Report passing rows too.
    #[arg(long)]
    all_rows: bool,
    /// Exit 1 on any discrepancy, resolved or not.
    #[arg(long)]
    strict: bool,
}

/// Exit code and message for a library error.
fn fail(e: Error) -> ExitCode {
    eprintln!("kunzcount: {e}");
    match e {
        Error::ResourceLimit(_) | Error::Unbounded | Error::Overflow(_) | Error::Cache(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("kunzcount: {msg}");
    ExitCode::from(2)
}

#[derive(Serialize)]
struct QueryJson {
    multiplicity: i64,
    genus: Option<i64>,
    frobenius: Option<i64>,
    med: bool,
}

#[derive(Serialize)]
struct CountJson {
    query: QueryJson,
    count: u64,
    source: &'static str,
    points: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<u64>>>,
}

fn count(args: CountArgs) -> ExitCode {
    if args.genus.is_none() && args.frobenius.is_none() {
        return usage("count needs --genus and/or --frobenius");
    }
    if args.multiplicity < 2 {
        return usage("multiplicity must be at least 2");
    }
    let source = Source::from(args.source);
    if args.list && source == Source::Formula {
        return usage("--list needs the polytope or oracle source");
    }
    let q = CountQuery {
        multiplicity: args.multiplicity,
        genus: args.genus,
        frobenius: args.frobenius,
        med: args.med,
    };
    let config = OracleConfig::from_env();
    let (n, used, listed) = if args.list {
        match census::list(&q, source, &config) {
            Ok(l) => {
                let used = if source == Source::Oracle { Source::Oracle } else { Source::Polytope };
                (l.len() as u64, used, Some(l))
            }
            Err(e) => return fail(e),
        }
    } else {
        match census::count(&q, source, &config) {
            Ok((n, used)) => (n, used, None),
            Err(e) => return fail(e),
        }
    };
    match args.format {
        TextOrJson::Text => {
            let mut out = format!("{n}\n");
            for l in listed.iter().flatten() {
                let _ = writeln!(out, "{} {}", l.kunz, l.semigroup);
            }
            print!("{out}");
        }
        TextOrJson::Json => {
            let doc = CountJson {
                query: QueryJson {
                    multiplicity: q.multiplicity,
                    genus: q.genus,
                    frobenius: q.frobenius,
                    med: q.med,
                },
                count: n,
                source: used.as_str(),
                points: listed
                    .iter()
                    .flatten()
                    .map(|l| l.kunz.coords().to_vec())
                    .collect(),
                generators: listed
                    .as_ref()
                    .map(|l| l.iter().map(|l| l.semigroup.generators().to_vec()).collect()),
            };
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct TableJson<'a> {
    max_genus: u64,
    med: bool,
    source: &'static str,
    rows: Vec<RowJson<'a>>,
}

#[derive(Serialize)]
struct RowJson<'a> {
    g: u64,
    counts: &'a [u64],
    total: u64,
}

fn table(args: TableArgs) -> ExitCode {
    let source = match Source::from(args.source) {
        Source::Formula => return usage("tables come from the polytope or oracle source"),
        Source::Auto => Source::Polytope,
        s => s,
    };
    let rows: Vec<CensusRow> = match census::census_table(args.max_genus, args.med, source, &OracleConfig::from_env()) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match args.format {
        CsvOrJson::Csv => {
            let mut out = String::from("g");
            for m in 2..=args.max_genus + 1 {
                let _ = write!(out, ",m{m}");
            }
            out.push_str(",total\n");
            for r in &rows {
                let _ = write!(out, "{}", r.g);
                for c in &r.counts {
                    let _ = write!(out, ",{c}");
                }
                let _ = writeln!(out, ",{}", r.total);
            }
            print!("{out}");
        }
        CsvOrJson::Json => {
            let doc = TableJson {
                max_genus: args.max_genus,
                med: args.med,
                source: source.as_str(),
                rows: rows
                    .iter()
                    .map(|r| RowJson {
                        g: r.g,
                        counts: &r.counts,
                        total: r.total,
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
    }
    ExitCode::SUCCESS
}

fn render(report: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{:<24} checked={} ok={} formula={} oracle={} resolved={} unresolved={}  {}",
            c.name,
            c.checked,
            c.ok,
            c.formula_discrepancies,
            c.oracle_discrepancies,
            c.resolved,
            c.unresolved(),
            c.description
        );
    }
    for r in &report.rows {
        let _ = write!(out, "{} {} {}", r.status.as_str(), r.check, r.query);
        if let Some(v) = r.variant {
            let _ = write!(out, " variant={v}");
        }
        if let Some(p) = r.piece {
            let _ = write!(out, " piece=\"{p}\"");
        }
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = write!(
            out,
            " formula={} polytope={} oracle={}",
            r.formula.as_deref().unwrap_or("-"),
            opt(r.polytope),
            opt(r.oracle)
        );
        if let Some(n) = &r.note {
            let _ = write!(out, " note=\"{n}\"");
        }
        match (&r.resolution, r.status) {
            (_, Status::Ok) => {}
            (Some(res), _) => {
                let _ = write!(out, " resolved=\"{res}\"");
            }
            (None, _) => out.push_str(" UNRESOLVED"),
        }
        out.push('\n');
    }
    let omitted: u64 = report.checks.iter().map(|c| c.rows_omitted).sum();
    if omitted > 0 {
        let _ = writeln!(out, "({omitted} further rows counted but not listed)");
    }
    let _ = writeln!(
        out,
        "discrepancies: {} ({} resolved, {} unresolved)",
        report.discrepancies(),
        report.discrepancies() - report.unresolved(),
        report.unresolved()
    );
    out
}

fn verify(args: VerifyArgs) -> ExitCode {
    let opts = VerifyOptions {
        max_genus: args.max_genus,
        max_frobenius: args.max_frobenius,
        grid_genus: args.grid_genus,
        oracle_depth: args.oracle_depth,
        uniqueness_genus: args.max_genus.min(100),
        all_rows: args.all_rows,
        ..VerifyOptions::default()
    };
    let report = match verify::run(&opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match args.format {
        TextOrJson::Text => print!("{}", render(&report)),
        TextOrJson::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
    }
    let bad = if args.strict { report.discrepancies() } else { report.unresolved() };
    if bad > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Count(a) => count(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
    }
}
