//! f4grade: verification and export front end for albert-f4.
//!
//! Exit status: 0 on success, 1 when a requested verification fails,
//! 2 on usage errors.

use std::process::ExitCode;

use albert_f4::algcore::AlgebraTable;
use albert_f4::cache::{cache_dir, sync, CacheStatus};
use albert_f4::exactmath::CycNum;
use albert_f4::f4lie::f4;
use albert_f4::gradings::{
    preset, preset_names, table_names, verify_all, verify_table, GradingReport, TableError, TableReport,
};
use albert_f4::jordan::tits::build_tits;
use albert_f4::jordan::{build_albert, build_h3f};
use albert_f4::octonion::build_cayley;
use albert_f4::weyl::{weyl, TorusPoint, WeylError};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "f4grade", version, about = "Gradings on f4, the Albert algebra and H3(F)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl group of F4 and its action on the maximal torus.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// Compute a named grading.
    Grade {
        #[arg(long)]
        preset: String,
        /// Emit the JSON report instead of the plain table.
        #[arg(long)]
        json: bool,
    },
    /// Recompute verification tables against the expected values.
    Verify(VerifyArgs),
    /// Algebra structure tables.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
}

#[derive(Subcommand)]
enum WeylCommand {
    /// The 25 conjugacy classes with minimal representatives.
    Classes,
    /// Fixed points of sigma_j on the torus.
    Fixed {
        #[arg(long)]
        j: usize,
    },
    /// Elements fixing every given torus point t'(x,y,z,u).
    Stabilizer {
        /// Coordinates x,y,z,u: integers, fractions p/q, i, w, z8, z12 or
        /// z24, optionally signed and raised to ^k. Repeatable.
        #[arg(long = "t", required = true, allow_hyphen_values = true, value_parser = parse_point)]
        points: Vec<TorusPoint>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    /// Every table.
    #[arg(long)]
    all: bool,
    /// A single table by name.
    #[arg(long)]
    table: Option<String>,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Print the nonzero basis products.
    Dump {
        #[arg(long, value_enum)]
        name: AlgebraName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraName {
    #[value(name = "C")]
    C,
    #[value(name = "J")]
    J,
    #[value(name = "H3F")]
    H3f,
    #[value(name = "TITS")]
    Tits,
    #[value(name = "F4")]
    F4,
}

/// Failure of a command, mapped to the exit status.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<TableError> for Failure {
    fn from(e: TableError) -> Self {
        match e {
            TableError::UnknownTable(_) | TableError::UnknownPreset(_) => Failure::Usage(e.to_string()),
            TableError::Weyl(WeylError::BadIndex(_)) => Failure::Usage(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<WeylError> for Failure {
    fn from(e: WeylError) -> Self {
        Failure::from(TableError::Weyl(e))
    }
}

fn parse_scalar(s: &str) -> Result<CycNum, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (base, exp) = match body.split_once('^') {
        Some((b, e)) => (b, e.parse::<i64>().map_err(|_| format!("bad exponent in {s:?}"))?),
        None => (body, 1),
    };
    let root = match base {
        "i" => Some(CycNum::i()),
        "w" => Some(CycNum::omega()),
        "z8" => Some(CycNum::zeta(3)),
        "z12" => Some(CycNum::zeta(2)),
        "z24" => Some(CycNum::zeta(1)),
        _ => None,
    };
    let v = match root {
        Some(r) => r.powi(exp),
        None => {
            let q = match base.split_once('/') {
                Some((n, d)) => {
                    let num = |t: &str| t.parse::<i64>().map_err(|_| format!("bad number {s:?}"));
                    let (n, d) = (num(n)?, num(d)?);
                    if d == 0 {
                        return Err(format!("zero denominator in {s:?}"));
                    }
                    CycNum::rational(n, d)
                }
                None => CycNum::int(base.parse().map_err(|_| format!("bad coordinate {s:?}"))?),
            };
            if q.is_zero() {
                return Err("torus coordinates must be nonzero".to_string());
            }
            q.powi(exp)
        }
    };
    Ok(if neg { -v } else { v })
}

fn parse_point(s: &str) -> Result<TorusPoint, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z, u] = parts.as_slice() else {
        return Err(format!("expected four coordinates x,y,z,u, got {}", parts.len()));
    };
    Ok(TorusPoint([parse_scalar(x)?, parse_scalar(y)?, parse_scalar(z)?, parse_scalar(u)?]))
}

fn weyl_command(c: &WeylCommand) -> Result<String, Failure> {
    let w = weyl();
    let mut out = String::new();
    match c {
        WeylCommand::Classes => {
            out.push_str(&format!("{} elements, {} classes\n", w.len(), w.conjugacy_classes().len()));
            out.push_str("   j  order  size  T^sigma_j\n");
            for c in w.conjugacy_classes() {
                let fixed = w.fixed_subgroup_structure(c.representative)?;
                out.push_str(&format!(
                    "{:>4}  {:>5}  {:>4}  {}\n",
                    c.representative,
                    c.order,
                    c.size(),
                    fixed.multiplicative()
                ));
            }
        }
        WeylCommand::Fixed { j } => {
            let fixed = w.fixed_subgroup_structure(*j)?;
            out.push_str(&format!("sigma_{j}: order {}, T^sigma = {}\n", w.order(*j)?, fixed.multiplicative()));
        }
        WeylCommand::Stabilizer { points } => {
            let s = w.stabilizer_indices(points);
            let list: Vec<String> = s.iter().map(usize::to_string).collect();
            out.push_str(&format!("{} elements: {}\n", s.len(), list.join(" ")));
        }
    }
    Ok(out)
}

fn grade(name: &str, json: bool) -> Result<String, Failure> {
    let p = preset(name).map_err(|e| match e {
        TableError::UnknownPreset(_) => Failure::Usage(format!("{e}; known presets: {}", preset_names().join(" "))),
        e => Failure::from(e),
    })?;
    let report = GradingReport::build(&p)?;
    if json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| Failure::Internal(e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(report.render())
    }
}

fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let reports: Vec<TableReport> = match &args.table {
        Some(t) if !table_names().contains(&t.as_str()) => {
            return Err(Failure::Usage(format!("unknown table {t}; known tables: {}", table_names().join(" "))));
        }
        Some(t) => vec![verify_table(t)?],
        None => verify_all()?,
    };
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.render());
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    if failed.is_empty() {
        out.push_str(&format!("all {} tables pass\n", reports.len()));
    } else {
        out.push_str(&format!("failing tables: {}\n", failed.join(" ")));
    }
    Ok((out, failed.is_empty()))
}

fn dump(name: AlgebraName) -> String {
    let t: &AlgebraTable = match name {
        AlgebraName::C => build_cayley(),
        AlgebraName::J => build_albert(),
        AlgebraName::H3f => build_h3f(),
        AlgebraName::Tits => build_tits(),
        AlgebraName::F4 => f4().table(),
    };
    t.dump()
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    match &cli.command {
        Command::Weyl { command } => Ok((weyl_command(command)?, true)),
        Command::Grade { preset, json } => Ok((grade(preset, *json)?, true)),
        Command::Verify(args) => verify(args),
        Command::Algebra { command: AlgebraCommand::Dump { name } } => Ok((dump(*name), true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = cache_dir() {
        match sync(&dir) {
            Ok(files) => {
                for (f, s) in files.into_iter().filter(|(_, s)| *s == CacheStatus::Written) {
                    eprintln!("cache: wrote {f} ({s:?})");
                }
            }
            Err(e) => eprintln!("cache: {e}; continuing without it"),
        }
    }
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("f4grade: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("f4grade: internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
