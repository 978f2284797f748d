//! Command-line front end: list and check WP-Bailey pairs, apply
//! chains, and verify the identity registry, with deterministic seeds
//! and machine-readable reports.
//!
//! Exit codes: 0 all requested checks pass, 1 verification failure,
//! 2 usage error (unknown id, bad flag, malformed extra), 3 every
//! resampling attempt hit a degenerate point.

use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num::BigRational;
use serde::Serialize;

use wpbailey::catalog;
use wpbailey::chains;
use wpbailey::error::Error;
use wpbailey::identities;
use wpbailey::roots::{sample_non_degenerate, Gen, ParamPoint};
use wpbailey::wp_core::{
    check_bailey_pair, check_wp_pair, CheckReport, PairKind, ParamBundle, WPPairGen,
};

#[derive(Parser)]
#[command(
    name = "wpb",
    about = "Exact-arithmetic engine for WP-Bailey pairs, chains and q-series identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The WP-Bailey pair catalog.
    Pairs {
        #[command(subcommand)]
        cmd: PairsCmd,
    },
    /// Chain constructions (pair -> pair maps).
    Chains {
        #[command(subcommand)]
        cmd: ChainsCmd,
    },
    /// The transformation-identity registry.
    Identities {
        #[command(subcommand)]
        cmd: IdentitiesCmd,
    },
}

#[derive(Subcommand)]
enum PairsCmd {
    /// List catalog pairs and Bailey fixtures.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Check pairs against the defining relation at sampled points.
    Check {
        /// Pair id (see `pairs list`).
        #[arg(long, conflicts_with = "all")]
        pair: Option<String>,
        /// Check every catalog pair and fixture.
        #[arg(long)]
        all: bool,
        /// Largest index n checked.
        #[arg(long, default_value_t = 5)]
        depth: u32,
        /// Sampling seed (default: WPB_SEED env var, then 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampled points per subject.
        #[arg(long, default_value_t = 3)]
        points: u32,
        #[arg(long)]
        json: bool,
        /// Pin an extra parameter, e.g. --extra rho1=-:2/3 (sign:value).
        #[arg(long = "extra", value_name = "NAME=SIGN:P/Q")]
        extras: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ChainsCmd {
    /// Apply a chain to a catalog pair and check the output pair.
    Apply {
        /// Chain id (andrews_1, andrews_2, warnaar_sigma1, liu_ma,
        /// new_cn11, new_cn2, warnaar_cn3, warnaar_cn33, new_cn333,
        /// warnaar_cn5, bailey_d4, bailey_d1).
        #[arg(long)]
        chain: String,
        /// Base pair id.
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 5)]
        depth: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        points: u32,
        #[arg(long)]
        json: bool,
        #[arg(long = "extra", value_name = "NAME=SIGN:P/Q")]
        extras: Vec<String>,
    },
}

#[derive(Subcommand)]
enum IdentitiesCmd {
    /// List registered identities.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Verify identities by exact evaluation at sampled points.
    Verify {
        /// Identity id (see `identities list`).
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Verify the whole registry.
        #[arg(long)]
        all: bool,
        /// Largest index n checked.
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        points: u32,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

// ---------------------------------------------------------------------------
// plumbing
// ---------------------------------------------------------------------------

/// Seed resolution: explicit flag, then WPB_SEED, then 0.
fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("WPB_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

/// Seeds for successive point indices are spaced beyond the resampling
/// window, so the retry ranges of neighbouring points never overlap.
const SEED_STRIDE: u64 = identities::SEED_STRIDE;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PointExhaustion { .. } => 3,
        _ => 2,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    exit_code(e)
}

/// A pinned extra parameter: its generator, positive value, sign.
struct ExtraPin {
    gen: Gen,
    value: BigRational,
    negative: bool,
}

fn parse_extras(specs: &[String]) -> Result<Vec<ExtraPin>, String> {
    let mut out = Vec::new();
    for s in specs {
        let (name, rest) = s
            .split_once('=')
            .ok_or_else(|| format!("bad --extra '{s}': expected NAME=SIGN:P/Q"))?;
        let gen = match name {
            "rho1" => Gen::Rho1,
            "rho2" => Gen::Rho2,
            _ => return Err(format!("bad --extra '{s}': unknown extra '{name}'")),
        };
        let (sign, val) = rest
            .split_once(':')
            .ok_or_else(|| format!("bad --extra '{s}': expected NAME=SIGN:P/Q"))?;
        let negative = match sign {
            "+" => false,
            "-" => true,
            _ => return Err(format!("bad --extra '{s}': sign must be + or -")),
        };
        let value = BigRational::from_str(val)
            .map_err(|_| format!("bad --extra '{s}': '{val}' is not a rational"))?;
        if value <= BigRational::from_integer(0.into()) {
            return Err(format!(
                "bad --extra '{s}': value must be positive (the sign carries negativity)"
            ));
        }
        out.push(ExtraPin { gen, value, negative });
    }
    Ok(out)
}

/// Generators a check must sample: q and a always, k for WP subjects,
/// and any required extras not pinned on the command line.
fn required_generators(kind: PairKind, extras: &[&'static str], pins: &[ExtraPin]) -> Vec<Gen> {
    let mut v = vec![Gen::Q, Gen::A];
    if kind == PairKind::Wp {
        v.push(Gen::K);
    }
    for name in extras {
        let g = match *name {
            "rho1" => Gen::Rho1,
            "rho2" => Gen::Rho2,
            _ => continue,
        };
        if !pins.iter().any(|p| p.gen == g) {
            v.push(g);
        }
    }
    v
}

/// Check one pair at one seeded point, resampling on degeneracy.
fn check_at_seed(
    pair: &WPPairGen,
    kind: PairKind,
    seed: u64,
    depth: u32,
    pins: &[ExtraPin],
) -> Result<CheckReport, Error> {
    let required = required_generators(kind, &pair.required_extras, pins);
    let (_, report) = sample_non_degenerate(seed, &required, |pt| {
        let mut pinned: ParamPoint = pt.clone();
        for p in pins {
            pinned = pinned.with_value(p.gen, p.value.clone(), p.negative);
        }
        let bundle = match kind {
            PairKind::Wp => ParamBundle::standard(Arc::new(pinned)),
            PairKind::Bailey => ParamBundle::bailey(Arc::new(pinned)),
        };
        match kind {
            PairKind::Wp => check_wp_pair(pair, &bundle, depth),
            PairKind::Bailey => check_bailey_pair(pair, &bundle, depth),
        }
    })?;
    Ok(report)
}

#[derive(Serialize)]
struct CheckAggregate {
    results: Vec<CheckReport>,
    pass: bool,
}

/// Run `points` checks per subject and render text or JSON.
fn run_checks(
    subjects: &[(WPPairGen, PairKind)],
    depth: u32,
    seed: u64,
    points: u32,
    json: bool,
    pins: &[ExtraPin],
) -> i32 {
    let mut results = Vec::new();
    for (pair, kind) in subjects {
        for i in 0..points {
            match check_at_seed(pair, *kind, seed + SEED_STRIDE * u64::from(i), depth, pins) {
                Ok(report) => results.push(report),
                Err(e) => return fail(&e),
            }
        }
    }
    let pass = results.iter().all(|r| r.pass);
    if json {
        let agg = CheckAggregate { results, pass };
        println!("{}", serde_json::to_string(&agg).expect("report serializes"));
    } else {
        for r in &results {
            describe_report(r);
        }
        let failed = results.iter().filter(|r| !r.pass).count();
        println!(
            "{} checks, {} passed, {} failed",
            results.len(),
            results.len() - failed,
            failed
        );
    }
    if pass {
        0
    } else {
        1
    }
}

fn describe_report(r: &CheckReport) {
    if r.pass {
        println!("ok   {}  depth {}  seed {}", r.subject, r.depth, r.point.seed());
    } else {
        let bad = r.rows.iter().find(|row| !row.equal).expect("failing row");
        println!(
            "FAIL {}  depth {}  seed {}  first failure at n = {}: {} != {}",
            r.subject,
            r.depth,
            r.point.seed(),
            bad.n,
            bad.lhs,
            bad.rhs
        );
    }
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PairInfo {
    id: &'static str,
    kind: &'static str,
    required_extras: &'static [&'static str],
    source: &'static str,
}

fn kind_name(kind: PairKind) -> &'static str {
    match kind {
        PairKind::Wp => "wp",
        PairKind::Bailey => "bailey",
    }
}

fn pairs_list(json: bool) -> i32 {
    let infos: Vec<PairInfo> = catalog::list_pairs()
        .iter()
        .chain(catalog::bailey_fixtures())
        .map(|e| PairInfo {
            id: e.id,
            kind: kind_name(e.kind),
            required_extras: e.required_extras,
            source: e.source,
        })
        .collect();
    if json {
        println!("{}", serde_json::to_string(&infos).expect("list serializes"));
    } else {
        for p in &infos {
            let extras = if p.required_extras.is_empty() {
                String::new()
            } else {
                format!("  extras: {}", p.required_extras.join(", "))
            };
            println!("{:<14} {:<7} {}{}", p.id, p.kind, p.source, extras);
        }
    }
    0
}

fn pairs_check(
    pair: Option<String>,
    all: bool,
    depth: u32,
    seed: Option<u64>,
    points: u32,
    json: bool,
    extras: Vec<String>,
) -> i32 {
    let pins = match parse_extras(&extras) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let subjects: Vec<(WPPairGen, PairKind)> = if all {
        catalog::list_pairs()
            .iter()
            .chain(catalog::bailey_fixtures())
            .map(|e| (e.pair(), e.kind))
            .collect()
    } else {
        let id = match pair {
            Some(id) => id,
            None => {
                eprintln!("error: either --pair <ID> or --all is required");
                return 2;
            }
        };
        match catalog::find(&id) {
            Some(e) => vec![(e.pair(), e.kind)],
            None => return fail(&Error::UnknownPair(id)),
        }
    };
    run_checks(&subjects, depth, resolve_seed(seed), points, json, &pins)
}

fn chains_apply(
    chain: String,
    pair: String,
    depth: u32,
    seed: Option<u64>,
    points: u32,
    json: bool,
    extras: Vec<String>,
) -> i32 {
    let pins = match parse_extras(&extras) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let chain_entry = match chains::find(&chain) {
        Some(c) => c,
        None => return fail(&Error::UnknownChain(chain)),
    };
    let pair_entry = match catalog::find(&pair) {
        Some(p) => p,
        None => return fail(&Error::UnknownPair(pair)),
    };
    if chain_entry.kind != pair_entry.kind {
        eprintln!(
            "error: chain '{}' consumes {} pairs but '{}' is a {} pair",
            chain_entry.id,
            kind_name(chain_entry.kind),
            pair_entry.id,
            kind_name(pair_entry.kind)
        );
        return 2;
    }
    let out = chain_entry.apply(&pair_entry.pair());
    run_checks(
        &[(out, chain_entry.kind)],
        depth,
        resolve_seed(seed),
        points,
        json,
        &pins,
    )
}

#[derive(Serialize)]
struct IdentityInfo {
    id: &'static str,
    free_generators: Vec<&'static str>,
    source: &'static str,
    constraints: &'static str,
}

fn identities_list(json: bool) -> i32 {
    let infos: Vec<IdentityInfo> = identities::list_identities()
        .iter()
        .map(|i| IdentityInfo {
            id: i.id,
            free_generators: i.free_generators.iter().map(|g| g.name()).collect(),
            source: i.source,
            constraints: i.constraints,
        })
        .collect();
    if json {
        println!("{}", serde_json::to_string(&infos).expect("list serializes"));
    } else {
        for i in &infos {
            let cons = if i.constraints.is_empty() {
                String::new()
            } else {
                format!("  [{}]", i.constraints)
            };
            println!(
                "{:<16} {:<18} generators: {}{}",
                i.id,
                i.source,
                i.free_generators.join(","),
                cons
            );
        }
    }
    0
}

fn identities_verify(
    id: Option<String>,
    all: bool,
    n: u32,
    seed: Option<u64>,
    points: u32,
    json: bool,
) -> i32 {
    let seed = resolve_seed(seed);
    let selected: Vec<&identities::Identity> = if all {
        identities::list_identities().iter().collect()
    } else {
        let id = match id {
            Some(id) => id,
            None => {
                eprintln!("error: either --id <ID> or --all is required");
                return 2;
            }
        };
        match identities::get(&id) {
            Ok(ident) => vec![ident],
            Err(e) => return fail(&e),
        }
    };
    let mut results = Vec::new();
    for ident in selected {
        for i in 0..points {
            match identities::verify_at_seed(ident, seed + SEED_STRIDE * u64::from(i), n) {
                Ok(r) => results.push(r),
                Err(e) => return fail(&e),
            }
        }
    }
    let pass = results.iter().all(|r| r.pass);
    if json {
        let agg = identities::AggregateReport { results, pass };
        println!("{}", serde_json::to_string(&agg).expect("report serializes"));
    } else {
        for r in &results {
            if r.pass {
                println!("ok   {:<16} seed {}", r.id, r.point.seed());
            } else {
                let bad = r.rows.iter().find(|row| !row.equal).expect("failing row");
                println!(
                    "FAIL {:<16} seed {}  first failure at n = {}: {} != {}",
                    r.id,
                    r.point.seed(),
                    bad.n,
                    bad.lhs,
                    bad.rhs
                );
            }
        }
        let failed = results.iter().filter(|r| !r.pass).count();
        println!(
            "{} checks, {} passed, {} failed",
            results.len(),
            results.len() - failed,
            failed
        );
    }
    if pass {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Pairs { cmd } => match cmd {
            PairsCmd::List { json } => pairs_list(json),
            PairsCmd::Check {
                pair,
                all,
                depth,
                seed,
                points,
                json,
                extras,
            } => pairs_check(pair, all, depth, seed, points, json, extras),
        },
        Cmd::Chains { cmd } => match cmd {
            ChainsCmd::Apply {
                chain,
                pair,
                depth,
                seed,
                points,
                json,
                extras,
            } => chains_apply(chain, pair, depth, seed, points, json, extras),
        },
        Cmd::Identities { cmd } => match cmd {
            IdentitiesCmd::List { json } => identities_list(json),
            IdentitiesCmd::Verify {
                id,
                all,
                n,
                seed,
                points,
                json,
            } => identities_verify(id, all, n, seed, points, json),
        },
    }
}
