//! The `qsome` command line front end: statistic tables, the claim
//! verification suite, oracle cross-checks, and the claim listing, with
//! text/json/csv output and CI-friendly exit codes (0 = all pass, 1 = a
//! claim or cross-check failed, 2 = usage or configuration error).

use crate::partitions;
use crate::verify::{self, Report, Status};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "qsome",
    about = "Exact q-series toolkit for overpartition part-sum statistics",
    arg_required_else_help = true,
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print per-n statistics: counts, the signed part-sum, odd/even part sums
    Table {
        /// Largest n to tabulate
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check the claim registry and report each claim's status
    Verify {
        /// Truncation order for congruence scans (minimum 64). Identity
        /// claims always run at their registered orders.
        #[arg(long, default_value_t = verify::DEFAULT_ORDER)]
        order: usize,
        /// Check only this claim id (repeatable); default is the full registry
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Worker threads for claim evaluation; report order is fixed by the
        /// registry regardless
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Compare the series routes and formulas against brute-force enumeration
    OracleCheck {
        /// Largest n to enumerate (capped at 45)
        #[arg(long, default_value_t = 20)]
        max_n: u64,
    },
    /// List the registered claims with their anchors
    Claims {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Parse arguments from the environment and run. Returns the process exit
/// code; clap itself exits with 2 on usage errors.
pub fn run() -> i32 {
    dispatch(Cli::parse())
}

fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::Table { max_n, format } => cmd_table(max_n, format),
        Command::Verify {
            order,
            claims,
            format,
            jobs,
        } => cmd_verify(order, &claims, format, jobs),
        Command::OracleCheck { max_n } => cmd_oracle_check(max_n),
        Command::Claims { format } => cmd_claims(format),
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TableRow {
    n: u64,
    pbar: String,
    some_bar: String,
    s_odd: String,
    s_even: String,
}

fn cmd_table(max_n: usize, format: OutputFormat) -> i32 {
    let rows: Vec<TableRow> = partitions::stat_records(max_n)
        .into_iter()
        .map(|r| TableRow {
            n: r.n,
            pbar: r.pbar.to_string(),
            some_bar: r.some_bar.to_string(),
            s_odd: r.s_odd.to_string(),
            s_even: r.s_even.to_string(),
        })
        .collect();
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("serializable rows")
        ),
        OutputFormat::Csv => {
            let mut out = csv::Writer::from_writer(Vec::new());
            out.write_record(["n", "pbar", "some_bar", "s_odd", "s_even"])
                .unwrap();
            for r in &rows {
                out.write_record([
                    r.n.to_string(),
                    r.pbar.clone(),
                    r.some_bar.clone(),
                    r.s_odd.clone(),
                    r.s_even.clone(),
                ])
                .unwrap();
            }
            print!("{}", String::from_utf8(out.into_inner().unwrap()).unwrap());
        }
        OutputFormat::Text => {
            let width = |f: fn(&TableRow) -> &str, head: &str| {
                rows.iter()
                    .map(|r| f(r).len())
                    .chain([head.len()])
                    .max()
                    .unwrap()
            };
            let wn = rows
                .iter()
                .map(|r| r.n.to_string().len())
                .chain([1])
                .max()
                .unwrap();
            let wp = width(|r| &r.pbar, "pbar");
            let ws = width(|r| &r.some_bar, "some_bar");
            let wo = width(|r| &r.s_odd, "s_odd");
            let we = width(|r| &r.s_even, "s_even");
            println!(
                "{:>wn$}  {:>wp$}  {:>ws$}  {:>wo$}  {:>we$}",
                "n", "pbar", "some_bar", "s_odd", "s_even"
            );
            for r in &rows {
                println!(
                    "{:>wn$}  {:>wp$}  {:>ws$}  {:>wo$}  {:>we$}",
                    r.n, r.pbar, r.some_bar, r.s_odd, r.s_even
                );
            }
        }
    }
    0
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(order: usize, claims: &[String], format: OutputFormat, jobs: usize) -> i32 {
    if order < 64 {
        eprintln!("error: --order must be at least 64 (got {order})");
        return 2;
    }
    if jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return 2;
    }
    let selection = if claims.is_empty() {
        None
    } else {
        Some(claims)
    };
    let reports = match verify::run_all(order, selection, jobs) {
        Ok(reports) => reports,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    render_reports(&reports, format);
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

fn render_reports(reports: &[Report], format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("serializable reports")
        ),
        OutputFormat::Csv => {
            let mut out = csv::Writer::from_writer(Vec::new());
            out.write_record([
                "claim_id",
                "anchor",
                "kind",
                "order",
                "instances",
                "status",
                "violations",
            ])
            .unwrap();
            for r in reports {
                let violations = r
                    .violations
                    .iter()
                    .map(|v| format!("{}:{}", v.n, v.value))
                    .collect::<Vec<_>>()
                    .join(";");
                out.write_record([
                    r.claim_id.clone(),
                    r.anchor.clone(),
                    r.kind.name().to_string(),
                    r.order.to_string(),
                    r.instances.to_string(),
                    format!("{}", r.status).to_lowercase(),
                    violations,
                ])
                .unwrap();
            }
            print!("{}", String::from_utf8(out.into_inner().unwrap()).unwrap());
        }
        OutputFormat::Text => {
            let registry = verify::builtin_claims();
            for r in reports {
                let title = registry
                    .iter()
                    .find(|c| c.id == r.claim_id)
                    .map(|c| c.title)
                    .unwrap_or("");
                println!(
                    "{:<4} {:<24} {:>8} instances  order {:>5}  {}",
                    r.status.to_string(),
                    r.claim_id,
                    r.instances,
                    r.order,
                    title
                );
                if !r.violations.is_empty() {
                    let shown = r.violations.iter().take(6);
                    let rest = r.violations.len().saturating_sub(6);
                    for v in shown {
                        println!("       violation at n={}: value {}", v.n, v.value);
                    }
                    if rest > 0 {
                        println!("       ... and {rest} more");
                    }
                }
            }
            let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
            let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
            let info = reports
                .iter()
                .filter(|r| r.status == Status::Informational)
                .count();
            println!(
                "{} claims: {pass} pass, {fail} fail, {info} informational",
                reports.len()
            );
        }
    }
}

// ---------------------------------------------------------------------------
// oracle-check
// ---------------------------------------------------------------------------

fn cmd_oracle_check(max_n: u64) -> i32 {
    if max_n > partitions::ENUMERATION_CAP {
        eprintln!(
            "error: --max-n {max_n} exceeds the enumeration cap {}",
            partitions::ENUMERATION_CAP
        );
        return 2;
    }
    let order = max_n as usize;
    let product_route = partitions::some_bar_series(order);
    let closed_route = partitions::some_bar_series_closed(order);
    let convolution_route = partitions::some_bar_convolution(order);
    let pbar_series = partitions::overline_p_series(order);
    let some_series = partitions::some_series(order);

    let max_b = 5u64;
    let mut mismatches = 0usize;
    let mut complain = |what: String| {
        mismatches += 1;
        println!("MISMATCH {what}");
    };

    for n in 0..=max_n {
        // one enumeration pass per n gathers every statistic
        let mut some_bar = 0i64;
        let mut s_odd = 0u64;
        let mut s_even = 0u64;
        let mut by_size = vec![0u64; max_b as usize + 1];
        let count = partitions::enumerate_overpartitions(n, |op| {
            for g in op.groups() {
                let w = g.size * g.multiplicity;
                if g.size % 2 == 1 {
                    s_odd += w;
                    some_bar += w as i64;
                } else {
                    s_even += w;
                    some_bar -= w as i64;
                }
                if g.size <= max_b {
                    by_size[g.size as usize] += w;
                }
            }
        });

        let i = n as usize;
        if pbar_series.coeff(i) != &BigInt::from(count) {
            complain(format!(
                "pbar({n}): series {} vs enumeration {count}",
                pbar_series.coeff(i)
            ));
        }
        for (route, name) in [
            (&product_route, "product route"),
            (&closed_route, "closed route"),
            (&convolution_route, "convolution route"),
        ] {
            if route.coeff(i) != &BigInt::from(some_bar) {
                complain(format!(
                    "some_bar({n}): {name} {} vs enumeration {some_bar}",
                    route.coeff(i)
                ));
            }
        }
        if s_odd as i64 - s_even as i64 != some_bar {
            complain(format!("sums({n}): s_odd - s_even != some_bar"));
        }
        if s_odd + s_even != n * count {
            complain(format!("sums({n}): s_odd + s_even != n * pbar(n)"));
        }
        if n >= 1 {
            let some = partitions::some_oracle(n);
            if some_series.coeff(i) != &BigInt::from(some) {
                complain(format!(
                    "SOME({n}): series {} vs enumeration {some}",
                    some_series.coeff(i)
                ));
            }
            for b in 1..=max_b.min(n) {
                let formula = partitions::s_b_formula_with(b, n, &pbar_series);
                if formula != BigInt::from(by_size[b as usize]) {
                    complain(format!(
                        "S_{b}({n}): formula {formula} vs enumeration {}",
                        by_size[b as usize]
                    ));
                }
                if (&formula % BigInt::from(2 * b)) != BigInt::from(0) {
                    complain(format!("S_{b}({n}) = {formula} not divisible by {}", 2 * b));
                }
            }
        }
    }

    println!(
        "oracle check n <= {max_n}: enumeration vs product/closed/convolution routes, \
         part-sum identities, S_b formula (b <= {max_b})"
    );
    if mismatches == 0 {
        println!("all routes agree");
        0
    } else {
        println!("{mismatches} mismatches");
        1
    }
}

// ---------------------------------------------------------------------------
// claims
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ClaimRow {
    id: &'static str,
    kind: &'static str,
    title: &'static str,
    anchor: &'static str,
}

fn cmd_claims(format: OutputFormat) -> i32 {
    let rows: Vec<ClaimRow> = verify::builtin_claims()
        .iter()
        .map(|c| ClaimRow {
            id: c.id,
            kind: c.kind_tag().name(),
            title: c.title,
            anchor: c.anchor,
        })
        .collect();
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("serializable rows")
        ),
        OutputFormat::Csv => {
            let mut out = csv::Writer::from_writer(Vec::new());
            out.write_record(["id", "kind", "title", "anchor"]).unwrap();
            for r in &rows {
                out.write_record([r.id, r.kind, r.title, r.anchor]).unwrap();
            }
            print!("{}", String::from_utf8(out.into_inner().unwrap()).unwrap());
        }
        OutputFormat::Text => {
            for r in &rows {
                println!("{:<24} {:<16} {}", r.id, r.kind, r.title);
                println!("{:<24} {:<16}   anchor: {}", "", "", r.anchor);
            }
            println!("{} claims registered", rows.len());
        }
    }
    0
}
