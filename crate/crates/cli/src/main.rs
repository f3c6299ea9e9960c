use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ntd_core::arith::{format_rational, parse_rational};
use ntd_core::fps::ftilde_egf;
use ntd_core::identities::{run_suite, Grid, IdentityTag, VariantSelection};
use ntd_core::polynomials::{ftilde_value, geometric_two_variable, geometric_value, tanny_dowling};
use ntd_core::series::{ftilde_series, DEFAULT_MAX_TERMS};
use ntd_core::triangles::{noncentral_whitney_row, stirling2_row, translated_whitney, whitney};
use ntd_core::{Rational, TdVariant};

#[derive(Parser)]
#[command(
    name = "ntd",
    version,
    about = "Exact Whitney and Tanny-Dowling number toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=n-max of a number triangle.
    Table {
        family: TableFamily,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        m: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate a polynomial family exactly at a rational point.
    Eval {
        family: EvalFamily,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        m: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        r: Option<Rational>,
    },
    /// Check identities over a parameter grid.
    Verify {
        /// Identity names, or `all`.
        #[arg(value_delimiter = ',', default_value = "all")]
        ids: Vec<String>,
        #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
        m_set: Option<Vec<Rational>>,
        #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
        a_set: Option<Vec<Rational>>,
        #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
        x_set: Option<Vec<Rational>>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
        /// Write one JSON report per line to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract EGF coefficients and compare them with the direct sum.
    Egf {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Certified enclosure of the infinite-series formula.
    Series {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational, default_value = "1e-20")]
        eps: Rational,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Stirling2,
    Translated,
    Whitney,
    Ncwhitney,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFamily {
    Geometric,
    Ftilde,
    Td1,
    Td2,
    Geometric2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    AsPrinted,
    Corrected,
    Both,
}

impl From<VariantArg> for VariantSelection {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::AsPrinted => VariantSelection::AsPrinted,
            VariantArg::Corrected => VariantSelection::Corrected,
            VariantArg::Both => VariantSelection::Both,
        }
    }
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Unexpected(String),
}

impl From<ntd_core::Error> for Failure {
    fn from(e: ntd_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn required(value: Option<Rational>, flag: &str, what: &str) -> Result<Rational, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{what} requires --{flag}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Table {
            family,
            m,
            a,
            n_max,
            format,
        } => table(&mut out, family, m, a, n_max, format),
        Command::Eval {
            family,
            n,
            x,
            m,
            a,
            r,
        } => eval(&mut out, family, n, &x, m, a, r),
        Command::Verify {
            ids,
            m_set,
            a_set,
            x_set,
            n_max,
            variant,
            out: path,
        } => {
            let defaults = Grid::default_grid();
            let grid = Grid::new(
                m_set.unwrap_or(defaults.m_set),
                a_set.unwrap_or(defaults.a_set),
                x_set.unwrap_or(defaults.x_set),
                n_max.unwrap_or(defaults.n_max),
            );
            verify(&mut out, &ids, &grid, variant.into(), path)
        }
        Command::Egf { m, a, x, order } => egf(&mut out, &m, &a, &x, order),
        Command::Series {
            m,
            a,
            n,
            x,
            eps,
            max_terms,
        } => series(&mut out, &m, &a, n, &x, &eps, max_terms),
    };
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(Failure::Unexpected(msg)) => {
            eprintln!("ntd: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ntd: {msg}");
            ExitCode::from(2)
        }
    }
}

fn table(
    out: &mut impl Write,
    family: TableFamily,
    m: Option<Rational>,
    a: Option<Rational>,
    n_max: u32,
    format: Format,
) -> Outcome {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let row = match family {
            TableFamily::Stirling2 => stirling2_row(n).to_vec(),
            TableFamily::Translated => {
                let m = required(m.clone(), "m", "translated")?;
                (0..=n).map(|k| translated_whitney(&m, n, k)).collect()
            }
            TableFamily::Whitney => {
                let m = required(m.clone(), "m", "whitney")?;
                (0..=n)
                    .map(|k| whitney(&m, n, k))
                    .collect::<Result<_, _>>()?
            }
            TableFamily::Ncwhitney => {
                let m = required(m.clone(), "m", "ncwhitney")?;
                let a = required(a.clone(), "a", "ncwhitney")?;
                noncentral_whitney_row(&m, &a, n)?.to_vec()
            }
        };
        rows.push(row);
    }
    match format {
        Format::Csv => {
            writeln!(out, "n,k,value")?;
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{}", format_rational(v))?;
                }
            }
        }
        Format::Json => {
            let text: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect();
            let json = serde_json::to_string(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

fn eval(
    out: &mut impl Write,
    family: EvalFamily,
    n: u32,
    x: &Rational,
    m: Option<Rational>,
    a: Option<Rational>,
    r: Option<Rational>,
) -> Outcome {
    let value = match family {
        EvalFamily::Geometric => geometric_value(n, x),
        EvalFamily::Ftilde => {
            let m = required(m, "m", "ftilde")?;
            let a = required(a, "a", "ftilde")?;
            ftilde_value(&m, &a, n, x)?
        }
        EvalFamily::Td1 | EvalFamily::Td2 => {
            let m = required(m, "m", "Tanny-Dowling")?;
            let variant = match family {
                EvalFamily::Td1 => TdVariant::First,
                _ => TdVariant::Second,
            };
            tanny_dowling(variant, &m, n)?.eval(x)
        }
        EvalFamily::Geometric2 => {
            let r = required(r, "r", "geometric2")?;
            geometric_two_variable(&r, n).eval(x)
        }
    };
    writeln!(out, "{}", format_rational(&value))?;
    Ok(())
}

fn parse_ids(ids: &[String]) -> Result<Vec<IdentityTag>, Failure> {
    if ids.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(IdentityTag::ALL.to_vec());
    }
    let mut tags = Vec::new();
    for s in ids.iter().filter(|s| !s.trim().is_empty()) {
        let tag: IdentityTag = s.parse()?;
        if !tags.contains(&tag) {
            tags.push(tag);
        }
    }
    if tags.is_empty() {
        return Err(Failure::Usage("no identities selected".into()));
    }
    Ok(tags)
}

fn verify(
    out: &mut impl Write,
    ids: &[String],
    grid: &Grid,
    selection: VariantSelection,
    path: Option<PathBuf>,
) -> Outcome {
    let tags = parse_ids(ids)?;
    if grid.is_empty() {
        return Err(Failure::Usage("parameter grid is empty".into()));
    }
    let result = run_suite(grid, &tags, selection);
    if let Some(path) = path {
        let file = File::create(&path)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        let mut writer = BufWriter::new(file);
        result.write_jsonl(&mut writer)?;
        writer.flush()?;
    }
    write!(out, "{}", result.render_summary())?;
    if result.all_expected() {
        return Ok(());
    }
    for r in result.unexpected().take(20) {
        writeln!(out, "unexpected: {}", r.to_json_line())?;
    }
    let count = result.unexpected().count();
    Err(Failure::Unexpected(format!(
        "{count} verdicts differ from expectation"
    )))
}

fn egf(out: &mut impl Write, m: &Rational, a: &Rational, x: &Rational, order: usize) -> Outcome {
    let values = ftilde_egf(m, a, x, order)?;
    let text: Vec<String> = values.iter().map(format_rational).collect();
    writeln!(out, "{}", text.join(","))?;
    let mut mismatches = Vec::new();
    for (n, v) in values.iter().enumerate() {
        let direct = ftilde_value(m, a, n as u32, x)?;
        if &direct != v {
            mismatches.push(n);
        }
    }
    if mismatches.is_empty() {
        writeln!(out, "definition check: match")?;
        Ok(())
    } else {
        writeln!(out, "definition check: mismatch at n = {mismatches:?}")?;
        Err(Failure::Unexpected(
            "EGF coefficients disagree with the direct sum".into(),
        ))
    }
}

fn series(
    out: &mut impl Write,
    m: &Rational,
    a: &Rational,
    n: u32,
    x: &Rational,
    eps: &Rational,
    max_terms: usize,
) -> Outcome {
    let enclosure = ftilde_series(m, a, n, x, eps, max_terms)?;
    let exact = ftilde_value(m, a, n, x)?;
    let contained = enclosure.contains(&exact);
    writeln!(out, "lo: {}", format_rational(&enclosure.lo))?;
    writeln!(out, "hi: {}", format_rational(&enclosure.hi))?;
    writeln!(out, "terms_used: {}", enclosure.terms_used)?;
    writeln!(out, "exact: {}", format_rational(&exact))?;
    writeln!(out, "contains_exact: {contained}")?;
    if contained {
        Ok(())
    } else {
        Err(Failure::Unexpected(
            "enclosure misses the exact value".into(),
        ))
    }
}
