//! Command-line surface for the arrangement pipeline: characteristic
//! polynomials by finite-field interpolation, exact independent-set counts,
//! the 3-element-count table, theorem verification, and conjecture probes.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 interpolation threshold
//! not found, 3 enumeration budget exceeded, 4 verification failure.

mod render;
mod spec;

use std::env;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num::bigint::BigInt;
use num::traits::Zero;
use num::Integer;
use rayon::prelude::*;
use serde_json::json;

use arrange_core::charpoly::egfcheck::theorem22_check;
use arrange_core::charpoly::verify::{
    eq2_check, essentiality_invariance_probe, probe_conjecture, theorem21_check, theorem41_check,
    verify_oracle_triangle, verify_union_invariance_with_budget, PendantShape, ProbeKind,
    UnionFamily, UnionReport,
};
use arrange_core::charpoly::{
    interpolate_charpoly_with_budget, CharPolyError, DEFAULT_PRIME_FLOOR,
};
use arrange_core::finitefield::{is_prime, FiniteFieldError, PrimeSampler};
use arrange_core::graphcount::{
    independence_counts_with_budget, union_counts_by_convolution, GraphError,
};

use render::Format;
use spec::{int_list, parse_family, parse_graph, partition_groups};

#[derive(Parser)]
#[command(
    name = "arrange",
    version,
    about = "Exact characteristic polynomials and independent-set counts",
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads; the ARRANGE_THREADS env var is the fallback.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap on enumeration nodes for counting-heavy commands.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Payload format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized verification (`verify oracles`).
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Interpolate the characteristic polynomial of a family instance.
    Charpoly {
        /// Family spec, e.g. `eq1:a=2,3` (grammar in the README).
        #[arg(long)]
        family: String,
        /// Dimension.
        #[arg(long)]
        n: usize,
        /// Sample primes stay above this floor.
        #[arg(long, default_value_t = DEFAULT_PRIME_FLOOR)]
        prime_floor: u64,
    },
    /// Count n-element independent sets of a graph spec.
    Count {
        /// Graph spec, e.g. `G:a=2,3;k=22 + G:a=2,3;k=28` (grammar in the README).
        #[arg(long)]
        graph: String,
        /// Single size to count.
        #[arg(long, conflicts_with = "all")]
        n: Option<usize>,
        /// Count every size up to the vertex count.
        #[arg(long)]
        all: bool,
    },
    /// Emit the (3!/(q-1)) * s_3 matrix over multiplier pairs and primes.
    Table1 {
        /// Pair list, `;`-separated: defaults to `2,3;2,5;3,5;5,7;2,4`.
        #[arg(long)]
        pairs: Option<String>,
        /// Prime list: defaults to `23,29,31,37,41,47,53,59,61,199`.
        #[arg(long)]
        q: Option<String>,
    },
    /// Run one verification from the fixed catalog.
    Verify {
        /// One of: thm2.1 thm2.2 thm3.1 thm3.4 thm4.1 cor3.2 cor3.5 cor3.6
        /// eq2 oracles.
        target: String,
        /// Multiplier or step set, comma-separated.
        #[arg(long)]
        a: Option<String>,
        /// Second parameter set for cor3.2 / cor3.5.
        #[arg(long)]
        b: Option<String>,
        /// Dimension for thm2.1 / thm4.1 / eq2.
        #[arg(long)]
        n: Option<usize>,
        /// Largest independent-set size to compare.
        #[arg(long)]
        nmax: Option<usize>,
        /// Partition `18,22`; cor3.5 takes several, `;`-separated.
        #[arg(long)]
        parts: Option<String>,
        /// Arrangements to draw for `oracles`.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Probe an open conjecture; observational output, always exits 0.
    Probe {
        /// `conj5.1` or `conj5.2`.
        conjecture: String,
        /// Step set, comma-separated.
        #[arg(long)]
        a: Option<String>,
        /// Offset set for conj5.2.
        #[arg(long)]
        b: Option<String>,
        /// Pendant shape for conj5.1: K1, K2, P3, or C3.
        #[arg(long)]
        pendant: Option<String>,
        /// Partitions to probe, `;`-separated; empty means an empty report.
        #[arg(long)]
        parts: Option<String>,
        /// Largest independent-set size to compare.
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match env::var("ARRANGE_THREADS") {
            Ok(raw) => match raw.parse::<usize>() {
                Ok(t) => Some(t),
                Err(_) => return parse_fail(&format!("ARRANGE_THREADS=`{raw}` is not a number")),
            },
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        if t == 0 {
            return parse_fail("--threads must be positive");
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    if cli.budget_nodes == Some(0) {
        return parse_fail("--budget-nodes must be positive");
    }
    let budget = cli.budget_nodes.unwrap_or(u64::MAX);
    match &cli.command {
        Cmd::Charpoly {
            family,
            n,
            prime_floor,
        } => cmd_charpoly(&cli, family, *n, *prime_floor, budget),
        Cmd::Count { graph, n, all } => cmd_count(&cli, graph, *n, *all, budget),
        Cmd::Table1 { pairs, q } => cmd_table1(&cli, pairs.as_deref(), q.as_deref(), budget),
        Cmd::Verify {
            target,
            a,
            b,
            n,
            nmax,
            parts,
            count,
        } => cmd_verify(
            &cli,
            target,
            a.as_deref(),
            b.as_deref(),
            *n,
            *nmax,
            parts.as_deref(),
            *count,
            budget,
        ),
        Cmd::Probe {
            conjecture,
            a,
            b,
            pendant,
            parts,
            nmax,
        } => cmd_probe(
            &cli,
            conjecture,
            a.as_deref(),
            b.as_deref(),
            pendant.as_deref(),
            parts.as_deref(),
            *nmax,
        ),
    }
}

fn parse_fail(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn core_fail(err: &CharPolyError) -> i32 {
    eprintln!("error: {err}");
    match err {
        CharPolyError::ThresholdNotFound { .. } => 2,
        CharPolyError::Graph(GraphError::BudgetExceeded { .. }) => 3,
        CharPolyError::FiniteField(FiniteFieldError::BudgetExceeded { .. }) => 3,
        _ => 1,
    }
}

fn cmd_charpoly(cli: &Cli, family_spec: &str, n: usize, prime_floor: u64, budget: u64) -> i32 {
    let family = match parse_family(family_spec) {
        Ok(f) => f,
        Err(msg) => return parse_fail(&msg),
    };
    // Sample graphs live on q - 1 vertices, so huge floors are unbuildable.
    if prime_floor > 100_000 {
        return parse_fail("--prime-floor must be at most 100000");
    }
    let sampler = PrimeSampler::starting_above(prime_floor.max(1));
    let result = match interpolate_charpoly_with_budget(&family, n, sampler, budget) {
        Ok(r) => r,
        Err(err) => return core_fail(&err),
    };
    match cli.format {
        Format::Json => render::print_json(&json!({
            "command": "charpoly",
            "family": family_spec.trim(),
            "n": n,
            "coeffs": render::coeff_strings(&result.poly),
            "samples": render::sample_values(&result.samples),
            "validation_prime": result.validation_prime,
            "pass": true,
        })),
        Format::Csv => {
            println!("power,coefficient");
            for (i, c) in render::coeff_strings(&result.poly).iter().enumerate() {
                println!("{i},{c}");
            }
        }
        Format::Text => {
            println!("family {}  n={}", family_spec.trim(), n);
            println!("chi(t) = {}", result.poly);
            for (q, count) in &result.samples {
                println!("  chi({q}) = {count}");
            }
            println!("validated at q={}", result.validation_prime);
        }
    }
    0
}

fn cmd_count(cli: &Cli, graph_spec: &str, n: Option<usize>, all: bool, budget: u64) -> i32 {
    if n.is_none() && !all {
        return parse_fail("count needs --n or --all");
    }
    let atoms = match parse_graph(graph_spec) {
        Ok(atoms) => atoms,
        Err(msg) => return parse_fail(&msg),
    };
    let mut parts = Vec::with_capacity(atoms.len());
    for atom in &atoms {
        let graph = match atom.build() {
            Ok(g) => g,
            Err(err) => return parse_fail(&err.to_string()),
        };
        let cap = n.map_or(graph.vcount(), |n| n.min(graph.vcount()));
        match independence_counts_with_budget(&graph, cap, budget) {
            Ok(counts) => parts.push(counts),
            Err(err @ GraphError::BudgetExceeded { .. }) => {
                eprintln!("error: {err}; partial counts discarded");
                return 3;
            }
            Err(err) => return parse_fail(&err.to_string()),
        }
    }
    let combined = union_counts_by_convolution(&parts);
    let (start, counts) = match n {
        Some(n) => (
            n,
            vec![combined
                .counts()
                .get(n)
                .cloned()
                .unwrap_or_else(BigInt::zero)],
        ),
        None => (0, combined.counts().to_vec()),
    };
    match cli.format {
        Format::Json => render::print_json(&json!({
            "command": "count",
            "graph": graph_spec.trim(),
            "n": n,
            "counts": render::count_strings(&counts),
            "pass": true,
        })),
        Format::Csv => {
            println!("n,count");
            for (i, c) in counts.iter().enumerate() {
                println!("{},{c}", start + i);
            }
        }
        Format::Text => {
            println!("graph {}", graph_spec.trim());
            for (i, c) in counts.iter().enumerate() {
                println!("s_{} = {c}", start + i);
            }
        }
    }
    0
}

const TABLE1_PAIRS: [(i64, i64); 5] = [(2, 3), (2, 5), (3, 5), (5, 7), (2, 4)];
const TABLE1_PRIMES: [u64; 10] = [23, 29, 31, 37, 41, 47, 53, 59, 61, 199];

/// One table cell: (3!/(q-1)) * s_3 of the multiplicative graph mod q. The
/// unit-group action on 3-subsets has orbit stabilizers inside S_3, so the
/// division is exact for prime q.
fn table_cell(a1: i64, a2: i64, q: u64, budget: u64) -> Result<BigInt, String> {
    let graph = arrange_core::graphcount::build_G(&[a1, a2], q - 1)
        .map_err(|err| format!("pair ({a1},{a2}) at q={q}: {err}"))?;
    let counts = independence_counts_with_budget(&graph, 3, budget)
        .map_err(|err| format!("pair ({a1},{a2}) at q={q}: {err}"))?;
    let numer = BigInt::from(6) * &counts.counts()[3];
    let (cell, rem) = numer.div_rem(&BigInt::from(q - 1));
    if !rem.is_zero() {
        return Err(format!("pair ({a1},{a2}) at q={q}: 6*s_3 not divisible by q-1"));
    }
    Ok(cell)
}

fn cmd_table1(cli: &Cli, pairs: Option<&str>, qs: Option<&str>, budget: u64) -> i32 {
    let pairs: Vec<(i64, i64)> = match pairs {
        None => TABLE1_PAIRS.to_vec(),
        Some(raw) => {
            let groups = match partition_groups(raw) {
                Ok(groups) => groups,
                Err(msg) => return parse_fail(&msg),
            };
            let mut out = Vec::with_capacity(groups.len());
            for group in groups {
                if group.len() != 2 {
                    return parse_fail("each pair needs exactly two multipliers");
                }
                out.push((group[0], group[1]));
            }
            out
        }
    };
    let qlist: Vec<u64> = match qs {
        None => TABLE1_PRIMES.to_vec(),
        Some(raw) => {
            let values = match int_list(raw) {
                Ok(values) => values,
                Err(msg) => return parse_fail(&msg),
            };
            let mut out = Vec::with_capacity(values.len());
            for v in values {
                if v < 3 || !is_prime(v as u64) {
                    return parse_fail(&format!("q={v} is not an odd prime"));
                }
                out.push(v as u64);
            }
            out
        }
    };
    let cells: Vec<Result<BigInt, String>> = pairs
        .par_iter()
        .flat_map(|&(a1, a2)| {
            qlist
                .par_iter()
                .map(move |&q| table_cell(a1, a2, q, budget))
        })
        .collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(pairs.len());
    for chunk in cells.chunks(qlist.len()) {
        let mut row = Vec::with_capacity(qlist.len());
        for cell in chunk {
            match cell {
                Ok(v) => row.push(v.clone()),
                Err(msg) => {
                    if msg.contains("budget") {
                        eprintln!("error: {msg}");
                        return 3;
                    }
                    return parse_fail(msg);
                }
            }
        }
        rows.push(row);
    }
    match cli.format {
        Format::Json => render::print_json(&json!({
            "command": "table1",
            "pairs": pairs.iter().map(|&(a1, a2)| vec![a1, a2]).collect::<Vec<_>>(),
            "q": qlist,
            "rows": rows
                .iter()
                .map(|row| render::count_strings(row))
                .collect::<Vec<_>>(),
            "pass": true,
        })),
        Format::Csv | Format::Text => {
            let mut header = vec!["a1".to_string(), "a2".to_string()];
            header.extend(qlist.iter().map(|q| q.to_string()));
            println!("{}", render::csv_row(&header));
            for ((a1, a2), row) in pairs.iter().zip(&rows) {
                let mut fields = vec![a1.to_string(), a2.to_string()];
                fields.extend(row.iter().map(|c| c.to_string()));
                println!("{}", render::csv_row(&fields));
            }
        }
    }
    0
}

fn require_ints(opt: Option<&str>, flag: &str, target: &str) -> Result<Vec<i64>, String> {
    match opt {
        Some(raw) => int_list(raw),
        None => Err(format!("verify {target} needs --{flag}")),
    }
}

fn single_partition(opt: Option<&str>, target: &str) -> Result<Vec<i64>, String> {
    let raw = opt.ok_or_else(|| format!("verify {target} needs --parts"))?;
    let groups = partition_groups(raw)?;
    match groups.len() {
        1 => Ok(groups.into_iter().next().unwrap()),
        _ => Err(format!("verify {target} takes exactly one partition")),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    cli: &Cli,
    target: &str,
    a: Option<&str>,
    b: Option<&str>,
    n: Option<usize>,
    nmax: Option<usize>,
    parts: Option<&str>,
    count: Option<usize>,
    budget: u64,
) -> i32 {
    match target {
        "thm2.1" => {
            let n = n.unwrap_or(3);
            let report = match theorem21_check(n) {
                Ok(r) => r,
                Err(err) => return core_fail(&err),
            };
            let pass = report.independent_agree && report.dependent_differs;
            let detail = vec![
                format!("independent pairs share one chi: {}", report.independent_agree),
                format!("dependent pair (2,4) differs: {}", report.dependent_differs),
            ];
            verdict(cli, target, pass, &detail, json!({ "n": n }))
        }
        "thm2.2" => {
            let a = match a {
                Some(raw) => match int_list(raw) {
                    Ok(a) => a,
                    Err(msg) => return parse_fail(&msg),
                },
                None => vec![2, 3],
            };
            let order = nmax.unwrap_or(3);
            let pass = match theorem22_check(&a, order) {
                Ok(p) => p,
                Err(err) => return core_fail(&err),
            };
            let detail = vec![format!(
                "exp of the connected series reproduces chi up to order {order}"
            )];
            verdict(cli, target, pass, &detail, json!({ "a": a, "nmax": order }))
        }
        "thm3.1" | "cor3.2" | "thm3.4" | "cor3.6" => {
            let a = match require_ints(a, "a", target) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let family = match target {
                "thm3.1" => UnionFamily::TheoremG { a },
                "cor3.2" => {
                    let b = match require_ints(b, "b", target) {
                        Ok(b) => b,
                        Err(msg) => return parse_fail(&msg),
                    };
                    UnionFamily::RatioG { a, b }
                }
                "thm3.4" => UnionFamily::DifferenceF { a },
                _ => UnionFamily::PendantF { a },
            };
            let partition = match single_partition(parts, target) {
                Ok(p) => p,
                Err(msg) => return parse_fail(&msg),
            };
            let n_max = nmax.unwrap_or(4);
            let report =
                match verify_union_invariance_with_budget(&family, &partition, n_max, budget) {
                    Ok(r) => r,
                    Err(err) => return core_fail(&err),
                };
            union_verdict(cli, target, &report)
        }
        "cor3.5" => {
            let a = match require_ints(a, "a", target) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let b = match require_ints(b, "b", target) {
                Ok(b) => b,
                Err(msg) => return parse_fail(&msg),
            };
            let raw = match parts {
                Some(raw) => raw,
                None => return parse_fail("verify cor3.5 needs --parts"),
            };
            let partitions = match partition_groups(raw) {
                Ok(groups) if !groups.is_empty() => groups,
                Ok(_) => return parse_fail("verify cor3.5 needs at least one partition"),
                Err(msg) => return parse_fail(&msg),
            };
            let n_max = nmax.unwrap_or(3);
            let report = match essentiality_invariance_probe(&a, &b, &partitions, n_max) {
                Ok(r) => r,
                Err(err) => return core_fail(&err),
            };
            let mut detail = vec![
                format!("arrangement essential: {}", report.essential),
                format!("counts depend on the partition: {}", report.s_dependent),
                format!("same-total pairs observed: {}", report.comparable),
            ];
            for (partition, counts) in report.partitions.iter().zip(&report.counts) {
                detail.push(format!(
                    "parts {:?}: counts {:?}",
                    partition,
                    render::count_strings(counts)
                ));
            }
            let extra = json!({
                "a": report.a,
                "b": report.b,
                "essential": report.essential,
                "s_dependent": report.s_dependent,
                "comparable": report.comparable,
                "counts": report.counts.iter().map(|c| render::count_strings(c)).collect::<Vec<_>>(),
            });
            verdict(cli, target, report.consistent, &detail, extra)
        }
        "thm4.1" => {
            let a = match require_ints(a, "a", target) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let n = n.unwrap_or(2);
            let pass = match theorem41_check(&a, n) {
                Ok(p) => p,
                Err(err) => return core_fail(&err),
            };
            let detail = vec![format!(
                "interpolated chi equals the shifted symbolic-step chi at n={n}"
            )];
            verdict(cli, target, pass, &detail, json!({ "a": a, "n": n }))
        }
        "eq2" => {
            let a = match require_ints(a, "a", target) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let n = n.unwrap_or(2);
            let pass = match eq2_check(&a, n) {
                Ok(p) => p,
                Err(err) => return core_fail(&err),
            };
            let detail = vec![format!(
                "adjoining coordinate hyperplanes satisfies the deletion-restriction recurrence at n={n}"
            )];
            verdict(cli, target, pass, &detail, json!({ "a": a, "n": n }))
        }
        "oracles" => {
            let draws = count.unwrap_or(20);
            let report = match verify_oracle_triangle(draws, cli.seed) {
                Ok(r) => r,
                Err(err) => return core_fail(&err),
            };
            let mut detail = vec![format!(
                "{} arrangements, {} mismatches",
                report.arrangements,
                report.mismatches.len()
            )];
            for m in &report.mismatches {
                detail.push(format!("arrangement {}: {}", m.index, m.detail));
            }
            let extra = json!({
                "arrangements": report.arrangements,
                "mismatches": report
                    .mismatches
                    .iter()
                    .map(|m| json!({ "index": m.index, "detail": m.detail }))
                    .collect::<Vec<_>>(),
            });
            verdict(cli, target, report.all_agree, &detail, extra)
        }
        other => parse_fail(&format!(
            "unknown verify target `{other}`; catalog: thm2.1 thm2.2 thm3.1 thm3.4 thm4.1 cor3.2 cor3.5 cor3.6 eq2 oracles"
        )),
    }
}

/// Shared verify rendering: detail lines, a PASS/FAIL verdict, exit 4 on
/// failure.
fn verdict(cli: &Cli, target: &str, pass: bool, detail: &[String], extra: serde_json::Value) -> i32 {
    match cli.format {
        Format::Json => {
            let mut value = json!({
                "command": "verify",
                "target": target,
                "pass": pass,
            });
            if let (Some(obj), Some(extra)) = (value.as_object_mut(), extra.as_object()) {
                for (k, v) in extra {
                    obj.insert(k.clone(), v.clone());
                }
            }
            render::print_json(&value);
        }
        Format::Csv => {
            println!("field,value");
            println!("target,{target}");
            println!("pass,{pass}");
        }
        Format::Text => {
            println!("verify {target}");
            for line in detail {
                println!("  {line}");
            }
            println!("result: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    if pass {
        0
    } else {
        4
    }
}

fn union_verdict(cli: &Cli, target: &str, report: &UnionReport) -> i32 {
    match cli.format {
        Format::Json => {
            render::print_json(&json!({
                "command": "verify",
                "target": target,
                "pass": report.pass,
                "description": report.description,
                "partition": report.partition,
                "total": report.total,
                "union_counts": render::count_strings(&report.union_counts),
                "single_counts": render::count_strings(&report.single_counts),
                "first_divergence": report.first_divergence,
                "in_regime": report.in_regime,
                "notes": report.regime_notes,
            }));
        }
        Format::Csv => {
            println!("n,union_count,single_count");
            for (i, (u, s)) in report
                .union_counts
                .iter()
                .zip(&report.single_counts)
                .enumerate()
            {
                println!("{i},{u},{s}");
            }
        }
        Format::Text => {
            println!(
                "verify {target}: {} over parts {:?} vs total {}",
                report.description, report.partition, report.total
            );
            for (i, (u, s)) in report
                .union_counts
                .iter()
                .zip(&report.single_counts)
                .enumerate()
            {
                let mark = if u == s { "" } else { "  <- differs" };
                println!("  n={i}: union={u} single={s}{mark}");
            }
            match report.first_divergence {
                Some(n) => println!(
                    "first divergence at n={n}: union={} single={}",
                    report.union_counts[n], report.single_counts[n]
                ),
                None => println!("all sizes agree"),
            }
            if !report.in_regime {
                for note in &report.regime_notes {
                    println!("  note: {note}");
                }
            }
            println!("result: {}", if report.pass { "PASS" } else { "FAIL" });
        }
    }
    if report.pass {
        0
    } else {
        4
    }
}

fn cmd_probe(
    cli: &Cli,
    conjecture: &str,
    a: Option<&str>,
    b: Option<&str>,
    pendant: Option<&str>,
    parts: Option<&str>,
    nmax: usize,
) -> i32 {
    let groups = match parts.map(partition_groups).transpose() {
        Ok(groups) => groups.unwrap_or_default(),
        Err(msg) => return parse_fail(&msg),
    };
    let kind = match conjecture {
        "conj5.1" => {
            let a = match require_ints(a, "a", conjecture) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let shape = match pendant.unwrap_or("K1") {
                "K1" => PendantShape::Single,
                "K2" => PendantShape::Edge,
                "P3" => PendantShape::Path3,
                "C3" => PendantShape::Triangle,
                other => return parse_fail(&format!("unknown pendant shape `{other}`")),
            };
            ProbeKind::SubgraphPendant { a, shape }
        }
        "conj5.2" => {
            let a = match require_ints(a, "a", conjecture) {
                Ok(a) => a,
                Err(msg) => return parse_fail(&msg),
            };
            let b = match require_ints(b, "b", conjecture) {
                Ok(b) => b,
                Err(msg) => return parse_fail(&msg),
            };
            ProbeKind::CycleAttached { a, b }
        }
        other => return parse_fail(&format!("unknown probe target `{other}`")),
    };
    let mut reports = Vec::with_capacity(groups.len());
    for partition in &groups {
        reports.push((partition.clone(), probe_conjecture(&kind, partition, nmax)));
    }
    match cli.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|(partition, outcome)| match outcome {
                    Ok(report) => json!({
                        "partition": report.partition,
                        "total": report.total,
                        "union_counts": render::count_strings(&report.union_counts),
                        "single_counts": render::count_strings(&report.single_counts),
                        "agree": report.agree,
                    }),
                    Err(err) => json!({
                        "partition": partition,
                        "error": err.to_string(),
                    }),
                })
                .collect();
            render::print_json(&json!({
                "command": "probe",
                "target": conjecture,
                "experimental": true,
                "nmax": nmax,
                "reports": rows,
            }));
        }
        Format::Csv => {
            println!("partition,n,union_count,single_count");
            for (partition, outcome) in &reports {
                if let Ok(report) = outcome {
                    let label = partition
                        .iter()
                        .map(|k| k.to_string())
                        .collect::<Vec<_>>()
                        .join("+");
                    for (i, (u, s)) in report
                        .union_counts
                        .iter()
                        .zip(&report.single_counts)
                        .enumerate()
                    {
                        println!("{label},{i},{u},{s}");
                    }
                }
            }
        }
        Format::Text => {
            println!("EXPERIMENTAL probe {conjecture} (observation only, never a proof)");
            if reports.is_empty() {
                println!("no partitions given; empty report");
            }
            for (partition, outcome) in &reports {
                match outcome {
                    Ok(report) => {
                        println!(
                            "{} over parts {:?} vs total {}",
                            report.description, report.partition, report.total
                        );
                        for (i, (u, s)) in report
                            .union_counts
                            .iter()
                            .zip(&report.single_counts)
                            .enumerate()
                        {
                            let mark = if u == s { "" } else { "  <- differs" };
                            println!("  n={i}: union={u} single={s}{mark}");
                        }
                        println!(
                            "observed: {}",
                            if report.agree { "agree" } else { "diverge" }
                        );
                    }
                    Err(err) => println!("parts {partition:?}: skipped ({err})"),
                }
            }
        }
    }
    0
}
