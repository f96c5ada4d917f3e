//! Command-line front end for `crystal-sieve`.

use clap::{Parser, Subcommand, ValueEnum};
use crystal_sieve::cartan::{CartanDatum, PairingKind, Weight};
use crystal_sieve::csp::{
    aa_criterion, csp_report, is_stretched_row_or_rectangle, natural_order, orbit_formula,
    CspReport,
};
use crystal_sieve::qdim::{
    congruence, divisibility_condition, principal_specialization, qdim_with, schur_specialization,
    CongruenceResult,
};
use crystal_sieve::tableaux::{Action, ActionPermutation, DEFAULT_MAX_ENUM};
use crystal_sieve::{Error, IntPoly, Partition};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::process::ExitCode;

const MAX_ENUM_VAR: &str = "CRYSTAL_SIEVE_MAX_ENUM";

#[derive(Parser)]
#[command(name = "crystal-sieve", version, about = "q-dimensions, congruences and cyclic sieving on tableau crystals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrystalQuery {
    Orbits,
    Fixed,
    Csp,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots with heights and ρ-pairings.
    Roots {
        /// Cartan type such as A3, B2, G2.
        cartan_type: String,
    },
    /// q-dimension of B(Λ); with --mod also the orbit congruence.
    Qdim {
        cartan_type: String,
        /// Fundamental-weight coordinates, comma separated.
        weight: String,
        /// Use coroot pairings.
        #[arg(long)]
        dual: bool,
        #[arg(long = "mod", value_name = "N")]
        modulus: Option<u64>,
    },
    /// Normalised principal specialisation q^{-κ} s_λ(1, q, ..., q^{m-1}).
    Specialize {
        partition: String,
        #[arg(short)]
        m: usize,
        /// Keep the factor q^κ.
        #[arg(long)]
        unnormalized: bool,
    },
    /// b_d, a_d and the residue of qdim modulo q^n - 1.
    Congruence {
        cartan_type: String,
        weight: String,
        n: u64,
        #[arg(long)]
        dual: bool,
    },
    /// Orbits, fixed points or CSP report for a cyclic action on SST_m(λ).
    Crystal {
        partition: String,
        #[arg(short)]
        m: usize,
        #[arg(long, default_value = "c")]
        action: String,
        #[arg(value_enum)]
        query: CrystalQuery,
        /// Per-exponent table (csp query only).
        #[arg(long)]
        table: bool,
    },
    /// CSP check with an optional custom polynomial and group order.
    CspCheck {
        partition: String,
        #[arg(short)]
        m: usize,
        #[arg(long, default_value = "c")]
        action: String,
        /// Polynomial such as `1 + q + 2*q^2`; defaults to the normalised specialisation.
        #[arg(long)]
        poly: Option<String>,
        #[arg(short)]
        n: Option<u64>,
        #[arg(long)]
        table: bool,
    },
    /// Orbit-count criterion for a polynomial and group order.
    AaCheck { poly: String, n: u64 },
    /// Orbits of size d of c on SST_m((am)) and SST_m((am)^{m-1}).
    OrbitFormula { a: u64, d: u64 },
    /// Batch CSP sweep over shapes, printed as CSV.
    Sweep {
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        max_size: u32,
        #[arg(long, default_value = "c")]
        action: String,
        /// Only shapes with m | |λ| and ℓ(λ) < m.
        #[arg(long)]
        divisible: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Lib(e) => match e {
                Error::Parse(_)
                | Error::InvalidRank { .. }
                | Error::DimensionMismatch { .. }
                | Error::NotARoot(_)
                | Error::NotDominant(_)
                | Error::ShapeTooLong { .. }
                | Error::SizeMismatch { .. }
                | Error::InvalidPartition(_)
                | Error::InvalidTableau(_)
                | Error::IndexOutOfRange { .. }
                | Error::NotPrime(_)
                | Error::PTooSmall { .. } => 2,
                Error::ConditionViolated(_)
                | Error::HypothesisViolated(_)
                | Error::NotDivisible { .. }
                | Error::NotSemistandard(_) => 3,
                Error::ResourceLimit { .. } => 4,
                _ => 5,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn max_enum() -> CliResult<u64> {
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{MAX_ENUM_VAR}={v} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_ENUM),
    }
}

fn datum(name: &str) -> CliResult<CartanDatum> {
    Ok(CartanDatum::from_name(name)?)
}

fn weight(s: &str) -> CliResult<Weight> {
    Ok(s.parse()?)
}

fn partition(s: &str) -> CliResult<Partition> {
    Ok(s.parse()?)
}

fn action(s: &str) -> CliResult<Action> {
    Ok(s.parse()?)
}

fn polynomial(s: &str) -> CliResult<IntPoly> {
    Ok(s.parse()?)
}

fn kind(dual: bool) -> PairingKind {
    if dual {
        PairingKind::Coroot
    } else {
        PairingKind::Form
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
}

fn cmd_roots(name: &str, format: Format) -> CliResult<()> {
    let d = datum(name)?;
    let form = d.rho_values(PairingKind::Form);
    let coroot = d.rho_values(PairingKind::Coroot);
    let rows: Vec<_> = d
        .positive_roots()
        .iter()
        .zip(form.iter().zip(coroot))
        .map(|(r, (&f, &c))| (r, f, c))
        .collect();
    match format {
        Format::Json => print_json(&json!({
            "type": d.cartan_type().to_string(),
            "roots": rows.iter().map(|(r, f, c)| json!({
                "coords": r.coords,
                "height": r.height(),
                "rho_form": f,
                "rho_coroot": c,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            println!("root,height,rho_form,rho_coroot");
            for (r, f, c) in rows {
                let coords: Vec<String> = r.coords.iter().map(i64::to_string).collect();
                println!("\"{}\",{},{f},{c}", coords.join(","), r.height());
            }
        }
        Format::Plain => {
            println!("{}: {} positive roots", d.cartan_type(), rows.len());
            println!("{:<16} {:>6} {:>6} {:>6}", "root", "height", "(β,ρ)", "<β∨,ρ>");
            for (r, f, c) in rows {
                println!("{:<16} {:>6} {f:>6} {c:>6}", r.to_string(), r.height());
            }
        }
    }
    Ok(())
}

fn print_congruence(r: &CongruenceResult, format: Format) {
    match format {
        Format::Json => print_json(r),
        Format::Csv => {
            println!("d,b,a");
            for (d, b) in &r.b {
                println!("{d},{b},{}", r.a[d]);
            }
        }
        Format::Plain => {
            println!("residue mod q^{} - 1: {}", r.n, r.residue);
            println!("{:>6} {:>12} {:>12}", "d", "b_d", "a_d");
            for (d, b) in &r.b {
                println!("{d:>6} {:>12} {:>12}", b.to_string(), r.a[d].to_string());
            }
        }
    }
}

fn print_poly(p: &IntPoly, format: Format) {
    match format {
        Format::Json => print_json(&json!({ "polynomial": p, "text": p.to_string() })),
        Format::Csv => {
            println!("degree,coefficient");
            for (k, c) in p.coeffs().iter().enumerate() {
                println!("{k},{c}");
            }
        }
        Format::Plain => println!("{p}"),
    }
}

fn cmd_qdim(name: &str, w: &str, dual: bool, modulus: Option<u64>, format: Format) -> CliResult<()> {
    let d = datum(name)?;
    let w = weight(w)?;
    let p = qdim_with(&d, &w, kind(dual))?;
    match modulus {
        None => print_poly(&p, format),
        Some(n) => {
            let r = congruence(&d, &w, n, kind(dual))?;
            match format {
                Format::Json => print_json(&json!({ "qdim": p, "congruence": r })),
                Format::Csv => print_congruence(&r, format),
                Format::Plain => {
                    println!("qdim: {p}");
                    print_congruence(&r, format);
                }
            }
        }
    }
    Ok(())
}

fn print_report(report: &CspReport, table: bool, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("j,fixed_count,evaluation,match");
            for e in &report.per_exponent {
                let value = e.evaluation.as_integer().map_or("non-rational".to_string(), |v| v.to_string());
                println!("{},{},{value},{}", e.j, e.fixed_count, e.matches);
            }
        }
        Format::Plain => {
            println!("n = {}, {} elements", report.n, report.census.total);
            if table {
                println!("{:>4} {:>10} {:>14} {:>6}", "j", "fixed", "f(ω^j)", "match");
                for e in &report.per_exponent {
                    let value = e.evaluation.as_integer().map_or("non-rational".to_string(), |v| v.to_string());
                    println!("{:>4} {:>10} {value:>14} {:>6}", e.j, e.fixed_count, e.matches);
                }
            }
            if report.non_rational {
                println!("some evaluations are not rational");
            }
            println!("verdict: {}", report.verdict);
        }
    }
}

fn build_permutation(lambda: &Partition, m: usize, act: Action) -> CliResult<ActionPermutation> {
    Ok(ActionPermutation::new(lambda, m, act, max_enum()?)?)
}

fn cmd_crystal(p: &str, m: usize, act: &str, query: CrystalQuery, table: bool, format: Format) -> CliResult<()> {
    let lambda = partition(p)?;
    let act = action(act)?;
    let perm = build_permutation(&lambda, m, act)?;
    match query {
        CrystalQuery::Orbits => {
            let census = perm.census();
            match format {
                Format::Json => print_json(&census),
                Format::Csv => {
                    println!("size,count");
                    for (s, c) in &census.by_size {
                        println!("{s},{c}");
                    }
                }
                Format::Plain => {
                    println!("{} tableaux, order {}", census.total, census.order);
                    for (s, c) in &census.by_size {
                        println!("size {s}: {c} orbits");
                    }
                }
            }
        }
        CrystalQuery::Fixed => {
            let fixed: Vec<String> = perm
                .fixed_by_power(1)
                .into_iter()
                .map(|i| perm.tableaux[i].to_string())
                .collect();
            match format {
                Format::Json => print_json(&fixed),
                Format::Csv => {
                    println!("tableau");
                    for t in &fixed {
                        println!("\"{t}\"");
                    }
                }
                Format::Plain => {
                    println!("{} fixed points", fixed.len());
                    for t in &fixed {
                        println!("{t}");
                    }
                }
            }
        }
        CrystalQuery::Csp => {
            let f = principal_specialization(&lambda, m)?;
            let report = csp_report(&perm, &f, natural_order(&perm));
            print_report(&report, table, format);
        }
    }
    Ok(())
}

fn cmd_csp_check(
    p: &str,
    m: usize,
    act: &str,
    poly: Option<&str>,
    n: Option<u64>,
    table: bool,
    format: Format,
) -> CliResult<()> {
    let lambda = partition(p)?;
    let act = action(act)?;
    let f = match poly {
        Some(s) => polynomial(s)?,
        None => principal_specialization(&lambda, m)?,
    };
    if n == Some(0) {
        return Err(CliError::Parse("group order must be positive".into()));
    }
    let perm = build_permutation(&lambda, m, act)?;
    let n = n.unwrap_or_else(|| natural_order(&perm));
    print_report(&csp_report(&perm, &f, n), table, format);
    Ok(())
}

fn cmd_aa(poly: &str, n: u64, format: Format) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Parse("group order must be positive".into()));
    }
    let f = polynomial(poly)?;
    let cert = aa_criterion(&f, n);
    match format {
        Format::Json => print_json(&cert),
        Format::Csv => {
            println!("k,moebius_sum");
            for (k, w) in &cert.orbit_weights {
                println!("{k},{w}");
            }
        }
        Format::Plain => {
            for (k, w) in &cert.orbit_weights {
                println!("k = {k}: Σ μ(k/j) f(ω^j) = {w}");
            }
            if !cert.non_natural.is_empty() {
                println!("f(ω^j) not in ℕ for j = {:?}", cert.non_natural);
            }
            if !cert.failures.is_empty() {
                println!("negative sums at k = {:?}", cert.failures);
            }
            println!("exists: {}", cert.exists);
        }
    }
    Ok(())
}

fn cmd_orbit_formula(a: u64, d: u64, format: Format) -> CliResult<()> {
    let v = orbit_formula(a, d)?;
    match format {
        Format::Json => print_json(&json!({ "a": a, "d": d, "orbits": v.to_string() })),
        Format::Csv => println!("a,d,orbits\n{a},{d},{v}"),
        Format::Plain => println!("{v}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct SweepRow {
    partition: String,
    m: usize,
    n: u64,
    tableaux: u64,
    verdict: bool,
    shape_predicate: bool,
    condition: bool,
    census: String,
}

fn sweep_cell(lambda: &Partition, m: usize, act: Action, cap: u64) -> CliResult<SweepRow> {
    let perm = ActionPermutation::new(lambda, m, act, cap)?;
    let n = natural_order(&perm);
    let report = csp_report(&perm, &principal_specialization(lambda, m)?, n);
    let condition = if m >= 2 {
        let d = CartanDatum::gl(m)?;
        let w = crystal_sieve::cartan::gl_weight(lambda, m)?;
        divisibility_condition(&d, &w, n, PairingKind::Form)?
    } else {
        true
    };
    let census: Vec<String> = report.census.by_size.iter().map(|(s, c)| format!("{s}:{c}")).collect();
    Ok(SweepRow {
        partition: lambda.to_string(),
        m,
        n,
        tableaux: report.census.total,
        verdict: report.verdict,
        shape_predicate: is_stretched_row_or_rectangle(lambda, m),
        condition,
        census: census.join(" "),
    })
}

fn cmd_sweep(
    m_min: usize,
    m_max: usize,
    max_size: u32,
    act: &str,
    divisible: bool,
    format: Format,
) -> CliResult<()> {
    let act = action(act)?;
    let cap = max_enum()?;
    let cells: Vec<(Partition, usize)> = (m_min.max(1)..=m_max)
        .flat_map(|m| {
            let max_len = if divisible { m - 1 } else { m };
            (0..=max_size)
                .flat_map(move |s| Partition::all_of_size(s, max_len))
                .filter(move |l| !divisible || (!l.is_empty() && l.size() % m as u64 == 0))
                .map(move |l| (l, m))
        })
        .collect();
    let rows: Vec<SweepRow> = cells
        .par_iter()
        .map(|(l, m)| sweep_cell(l, *m, act, cap))
        .collect::<CliResult<_>>()?;
    match format {
        Format::Json => print_json(&rows),
        _ => {
            println!("partition,m,n,tableaux,verdict,shape_predicate,condition,census");
            for r in rows {
                println!(
                    "\"{}\",{},{},{},{},{},{},{}",
                    r.partition, r.m, r.n, r.tableaux, r.verdict, r.shape_predicate, r.condition, r.census
                );
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Parse(e.to_string()))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Roots { cartan_type } => cmd_roots(&cartan_type, format),
        Command::Qdim { cartan_type, weight, dual, modulus } => {
            cmd_qdim(&cartan_type, &weight, dual, modulus, format)
        }
        Command::Specialize { partition: p, m, unnormalized } => {
            let lambda = partition(&p)?;
            let f = if unnormalized {
                schur_specialization(&lambda, m)?
            } else {
                principal_specialization(&lambda, m)?
            };
            print_poly(&f, format);
            Ok(())
        }
        Command::Congruence { cartan_type, weight: w, n, dual } => {
            let r = congruence(&datum(&cartan_type)?, &weight(&w)?, n, kind(dual))?;
            print_congruence(&r, format);
            Ok(())
        }
        Command::Crystal { partition, m, action, query, table } => {
            cmd_crystal(&partition, m, &action, query, table, format)
        }
        Command::CspCheck { partition, m, action, poly, n, table } => {
            cmd_csp_check(&partition, m, &action, poly.as_deref(), n, table, format)
        }
        Command::AaCheck { poly, n } => cmd_aa(&poly, n, format),
        Command::OrbitFormula { a, d } => cmd_orbit_formula(a, d, format),
        Command::Sweep { m_min, m_max, max_size, action, divisible } => {
            cmd_sweep(m_min, m_max, max_size, &action, divisible, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
