mod args;

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lee_waring::ffwaring::{
    generic_report, verify_remarks, verify_theorem1, verify_theorem2, WaringReport,
    DEFAULT_FIELD_BUDGET,
};
use lee_waring::{
    brute_max_admissible, canonical_shift, construct_max_lee, construct_max_norm1, g_bound,
    h_bound_with_case, is_admissible, norm_sequence, BoundCase, Error, ModVec, Modulus, NormKind,
    DEFAULT_BUDGET,
};

use args::{parse_range, parse_vector, Format, Norm, VecLiteral};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_ADMISSIBLE: u8 = 3;
const EXIT_UNDEFINED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "leewaring",
    version,
    about = "Admissible vectors over Z/mZ and Waring numbers of finite fields"
)]
struct Cli {
    /// Worker threads for parallel search (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate g(m, r), h(m, r) and the covering radius
    Bounds {
        /// Modulus, `a..b` inclusive or a single value
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
        /// Length, `a..b` inclusive or a single value
        #[arg(long, value_parser = parse_range)]
        r: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build an admissible vector of maximal norm
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, value_enum)]
        norm: Norm,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Report whether a vector is admissible
    Check {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Comma-separated coordinates, reduced modulo m
        #[arg(long = "vec", value_parser = parse_vector, allow_hyphen_values = true)]
        vector: VecLiteral,
        #[arg(long, value_enum)]
        norm: Norm,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare exhaustive search against the closed form
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, value_enum)]
        norm: Norm,
        /// Maximum number of cosets to enumerate
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute Waring numbers and compare with closed forms
    Waring {
        #[command(subcommand)]
        which: WaringCommand,
    },
}

#[derive(Args)]
struct WaringOpts {
    /// Maximum field size
    #[arg(long, default_value_t = DEFAULT_FIELD_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum WaringCommand {
    /// g((q−1)/r, q) for q = p^(r−1), p a primitive root mod the prime r
    Thm1 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        opts: WaringOpts,
    },
    /// g((q−1)/(2r), q) for q = p^(r−1), p and r odd
    Thm2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        opts: WaringOpts,
    },
    /// g(p−1, p), g((p−1)/2, p) and, for p ≡ 3 mod 4, g((p²−1)/4, p²)
    Remarks {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        opts: WaringOpts,
    },
    /// g(k, p^n) with no formula to compare against
    Generic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        opts: WaringOpts,
    },
}

/// A failure that maps to a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let outcome = match cli.command {
        Command::Bounds { m, r, format } => cmd_bounds(m, r, format),
        Command::Construct { m, r, norm, format } => cmd_construct(m, r, norm.into(), format),
        Command::Check {
            m,
            vector,
            norm,
            format,
        } => cmd_check(m, vector.0, norm.into(), format),
        Command::Oracle {
            m,
            r,
            norm,
            budget,
            format,
        } => cmd_oracle(m, r, norm.into(), budget, format),
        Command::Waring { which } => cmd_waring(which),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
}

fn joined(coords: &[u64], sep: &str) -> String {
    coords
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
struct BoundsRow {
    m: u64,
    r: u64,
    g: u64,
    h: u64,
    case: BoundCase,
    rho: u64,
}

fn cmd_bounds(ms: RangeInclusive<u64>, rs: RangeInclusive<u64>, format: Format) -> Outcome {
    let mut rows = Vec::new();
    for m in ms {
        for r in rs.clone() {
            let (h, case) = h_bound_with_case(m, r);
            rows.push(BoundsRow {
                m,
                r,
                g: g_bound(m, r),
                h,
                case,
                rho: lee_waring::covering_radius(m, r),
            });
        }
    }
    match format {
        Format::Json => print_json(&rows),
        Format::Csv => {
            let mut out = String::from("m,r,g,h,case,rho\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    row.m, row.r, row.g, row.h, row.case, row.rho
                );
            }
            print!("{out}");
        }
        Format::Text => {
            println!(
                "{:>5} {:>5} {:>8} {:>8} {:<14} {:>8}",
                "m", "r", "g", "h", "case", "rho"
            );
            for row in &rows {
                println!(
                    "{:>5} {:>5} {:>8} {:>8} {:<14} {:>8}",
                    row.m,
                    row.r,
                    row.g,
                    row.h,
                    row.case.as_str(),
                    row.rho
                );
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ConstructReport {
    m: u64,
    r: u64,
    norm: String,
    vector: Vec<u64>,
    value: u64,
    target: u64,
    admissible: bool,
}

fn cmd_construct(m: u64, r: u64, kind: NormKind, format: Format) -> Outcome {
    let (v, target) = match kind {
        NormKind::One => (construct_max_norm1(m, r), g_bound(m, r)),
        NormKind::Lee => (construct_max_lee(m, r), h_bound_with_case(m, r).0),
    };
    let value = v.norm(kind);
    let admissible = is_admissible(&v, kind);
    let ok = admissible && value == target;
    let report = ConstructReport {
        m,
        r,
        norm: kind.to_string(),
        vector: v.coords().to_vec(),
        value,
        target,
        admissible,
    };
    match format {
        Format::Json => print_json(&report),
        Format::Csv => {
            println!("m,r,norm,value,target,admissible,vector");
            println!(
                "{m},{r},{kind},{value},{target},{admissible},{}",
                joined(v.coords(), " ")
            );
        }
        Format::Text => {
            println!("vector: {v}");
            println!("norm: {value}");
            println!("target: {target}");
            println!("admissible: {admissible}");
        }
    }
    if ok {
        Ok(0)
    } else {
        Err(Failure {
            code: EXIT_MISMATCH,
            message: format!(
                "self-check failed: norm {value}, target {target}, admissible {admissible}"
            ),
        })
    }
}

#[derive(Serialize)]
struct CheckReport {
    m: u64,
    norm: String,
    vector: Vec<u64>,
    value: u64,
    admissible: bool,
    canonical_shift: u64,
    canonical_vector: Vec<u64>,
    norm_sequence: Vec<u64>,
}

fn cmd_check(m: u64, coords: Vec<i64>, kind: NormKind, format: Format) -> Outcome {
    let v = ModVec::from_signed(Modulus::new(m)?, coords);
    let (shift, canonical) = canonical_shift(&v, kind);
    let seq = norm_sequence(&v, kind);
    let report = CheckReport {
        m,
        norm: kind.to_string(),
        vector: v.coords().to_vec(),
        value: v.norm(kind),
        admissible: is_admissible(&v, kind),
        canonical_shift: shift,
        canonical_vector: canonical.coords().to_vec(),
        norm_sequence: seq.values().to_vec(),
    };
    match format {
        Format::Json => print_json(&report),
        Format::Csv => {
            println!(
                "m,norm,value,admissible,canonical_shift,vector,canonical_vector,norm_sequence"
            );
            println!(
                "{m},{kind},{},{},{shift},{},{},{}",
                report.value,
                report.admissible,
                joined(&report.vector, " "),
                joined(&report.canonical_vector, " "),
                joined(&report.norm_sequence, " ")
            );
        }
        Format::Text => {
            println!("vector: {v}");
            println!("norm: {}", report.value);
            println!("admissible: {}", report.admissible);
            println!("canonical shift: {shift} -> {canonical}");
            println!("norm sequence: {}", joined(&report.norm_sequence, " "));
        }
    }
    Ok(if report.admissible {
        0
    } else {
        EXIT_NOT_ADMISSIBLE
    })
}

#[derive(Serialize)]
struct OracleReport {
    m: u64,
    r: u64,
    norm: String,
    max_norm: u64,
    formula: u64,
    witness: Vec<u64>,
    enumerated: u64,
    #[serde(rename = "match")]
    matches: bool,
}

fn cmd_oracle(m: u64, r: u64, kind: NormKind, budget: u128, format: Format) -> Outcome {
    let res = match brute_max_admissible(m, r, kind, budget) {
        Ok(res) => res,
        Err(Error::BudgetExceeded { required, budget }) => {
            return Err(Failure {
                code: EXIT_USAGE,
                message: format!("{required} cosets required, budget is {budget} (raise --budget)"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let formula = match kind {
        NormKind::One => g_bound(m, r),
        NormKind::Lee => h_bound_with_case(m, r).0,
    };
    let report = OracleReport {
        m,
        r,
        norm: kind.to_string(),
        max_norm: res.max_norm,
        formula,
        witness: res.witness.coords().to_vec(),
        enumerated: res.enumerated as u64,
        matches: res.max_norm == formula,
    };
    let verdict = if report.matches { "MATCH" } else { "MISMATCH" };
    match format {
        Format::Json => print_json(&report),
        Format::Csv => {
            println!("m,r,norm,max_norm,formula,enumerated,match,witness");
            println!(
                "{m},{r},{kind},{},{formula},{},{verdict},{}",
                report.max_norm,
                report.enumerated,
                joined(&report.witness, " ")
            );
        }
        Format::Text => {
            println!("witness: {}", res.witness);
            println!("cosets: {}", report.enumerated);
            println!("{} = {formula} {verdict}", report.max_norm);
        }
    }
    Ok(if report.matches { 0 } else { EXIT_MISMATCH })
}

fn cmd_waring(which: WaringCommand) -> Outcome {
    let (reports, opts, many) = match which {
        WaringCommand::Thm1 { p, r, opts } => {
            (vec![verify_theorem1(p, r, opts.budget)?], opts, false)
        }
        WaringCommand::Thm2 { p, r, opts } => {
            (vec![verify_theorem2(p, r, opts.budget)?], opts, false)
        }
        WaringCommand::Remarks { p, opts } => (verify_remarks(p, opts.budget)?, opts, true),
        WaringCommand::Generic { p, n, k, opts } => {
            (vec![generic_report(p, n, k, opts.budget)?], opts, false)
        }
    };
    match opts.format {
        Format::Json if many => print_json(&reports),
        Format::Json => print_json(&reports[0]),
        Format::Csv => {
            println!("label,p,r,n,q,k,k_reduced,computed_g,formula_g,match");
            for rep in &reports {
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    rep.label,
                    rep.p,
                    opt(rep.r, ""),
                    rep.n,
                    rep.q,
                    rep.k,
                    rep.k_reduced,
                    opt(rep.computed_g, "NONE"),
                    opt(rep.formula_g, ""),
                    rep.matches
                );
            }
        }
        Format::Text => {
            for rep in &reports {
                println!("{}", waring_line(rep));
            }
        }
    }
    Ok(if reports.iter().any(|r| !r.matches) {
        EXIT_MISMATCH
    } else if reports.iter().any(|r| r.computed_g.is_none()) {
        EXIT_UNDEFINED
    } else {
        0
    })
}

fn opt(v: Option<u64>, missing: &str) -> String {
    v.map_or_else(|| missing.to_string(), |x| x.to_string())
}

fn waring_line(rep: &WaringReport) -> String {
    let mut head = format!("{} p={}", rep.label, rep.p);
    match rep.r {
        Some(r) => {
            let _ = write!(head, " r={r}");
        }
        None => {
            let _ = write!(head, " n={}", rep.n);
        }
    }
    let _ = write!(
        head,
        " q={} k={} (gcd with q-1: {}):",
        rep.q, rep.k, rep.k_reduced
    );
    let computed = opt(rep.computed_g, "NONE");
    match rep.formula_g {
        Some(f) => {
            let verdict = if rep.matches { "MATCH" } else { "MISMATCH" };
            format!("{head} computed {computed} = formula {f} {verdict}")
        }
        None => format!("{head} computed {computed}"),
    }
}
