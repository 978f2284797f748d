//! End-to-end acceptance battery for the WP-Bailey engine.
//!
//! Runs as a plain binary (harness disabled) so that exactly one
//! PASS/FAIL line per criterion reaches stdout even under `cargo test`.
//! The process exits nonzero if any criterion fails; every comparison
//! below is exact field equality, never approximate.

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use num::BigRational;
use wpbailey::catalog;
use wpbailey::chains;
use wpbailey::field::GaussianRational;
use wpbailey::identities::{self, Identity};
use wpbailey::roots::{sample_non_degenerate, Gen, ParamPoint};
use wpbailey::wp_core::{
    alpha_from_beta, beta_from_alpha, check_bailey_pair, check_wp_pair, dual_pair, CheckReport,
    PairEval, PairKind, ParamBundle, WPPairGen,
};
use wpbailey::Error;

/// Seed offset between the sampled points of one multi-point check.
const SEED_STRIDE: u64 = identities::SEED_STRIDE;

fn main() {
    let criteria: &[(u32, &str, fn() -> Result<String, String>)] = &[
        (1, "pair validity", c1_pair_validity),
        (2, "chain soundness", c2_chain_soundness),
        (3, "identity suite", c3_identity_suite),
        (4, "general-chain specialization", c4_general_specialization),
        (5, "structural relations", c5_structural_relations),
        (6, "k = 0 chain limits", c6_bailey_limits),
        (7, "negative controls", c7_negative_controls),
        (8, "determinism", c8_determinism),
    ];
    let mut failures = 0u32;
    for (idx, label, run) in criteria {
        match run() {
            Ok(detail) => println!("[criterion {idx}] PASS  {label}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("[criterion {idx}] FAIL  {label}: {why}");
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criterion(s) failed");
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

fn required_generators(kind: PairKind, extras: &[&'static str]) -> Vec<Gen> {
    let mut v = vec![Gen::Q, Gen::A];
    if kind == PairKind::Wp {
        v.push(Gen::K);
    }
    for name in extras {
        match *name {
            "rho1" => v.push(Gen::Rho1),
            "rho2" => v.push(Gen::Rho2),
            _ => {}
        }
    }
    v
}

/// Check one pair at one seeded point, resampling on degeneracy.
fn check_pair_at(
    pair: &WPPairGen,
    kind: PairKind,
    seed: u64,
    depth: u32,
) -> Result<CheckReport, Error> {
    let required = required_generators(kind, &pair.required_extras);
    let (_, report) = sample_non_degenerate(seed, &required, |pt| {
        let bundle = match kind {
            PairKind::Wp => ParamBundle::standard(Arc::new(pt.clone())),
            PairKind::Bailey => ParamBundle::bailey(Arc::new(pt.clone())),
        };
        match kind {
            PairKind::Wp => check_wp_pair(pair, &bundle, depth),
            PairKind::Bailey => check_bailey_pair(pair, &bundle, depth),
        }
    })?;
    Ok(report)
}

fn first_bad_n(report: &CheckReport) -> u32 {
    report.rows.iter().find(|r| !r.equal).map(|r| r.n).unwrap_or(0)
}

/// Compare two pairs value-for-value at one bundle for n = 0..=depth.
/// Returns descriptions of the mismatches (empty means identical).
fn diff_pairs(
    left: &WPPairGen,
    right: &WPPairGen,
    bundle: &ParamBundle,
    depth: u32,
) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    for n in 0..=depth {
        if (left.alpha)(n, bundle)? != (right.alpha)(n, bundle)? {
            bad.push(format!("{} vs {}: alpha differs at n = {n}", left.id, right.id));
        }
        if (left.beta)(n, bundle)? != (right.beta)(n, bundle)? {
            bad.push(format!("{} vs {}: beta differs at n = {n}", left.id, right.id));
        }
    }
    Ok(bad)
}

// ---------------------------------------------------------------------------
// criterion 1: every catalog pair satisfies the defining relation
// ---------------------------------------------------------------------------

fn c1_pair_validity() -> Result<String, String> {
    let start = Instant::now();
    let pairs = catalog::list_pairs();
    for entry in pairs {
        let pair = entry.pair();
        for i in 0..3u64 {
            let report = check_pair_at(&pair, entry.kind, i * SEED_STRIDE, 6)
                .map_err(|e| format!("{}: {e}", entry.id))?;
            if !report.pass {
                return Err(format!(
                    "{} fails at seed {}, n = {}",
                    entry.id,
                    report.point.seed(),
                    first_bad_n(&report)
                ));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 10.0 {
        return Err(format!("checks passed but took {secs:.2}s (budget 10s)"));
    }
    Ok(format!(
        "{} pairs x 3 points at depth 6 in {secs:.2}s",
        pairs.len()
    ))
}

// ---------------------------------------------------------------------------
// criterion 2: every chain maps every compatible pair to a valid pair
// ---------------------------------------------------------------------------

fn c2_chain_soundness() -> Result<String, String> {
    let mut combos = 0u32;
    for chain in chains::list_chains() {
        let bases = match chain.kind {
            PairKind::Wp => catalog::list_pairs(),
            PairKind::Bailey => catalog::bailey_fixtures(),
        };
        for entry in bases {
            let derived = chain.apply(&entry.pair());
            for i in 0..3u64 {
                let report = check_pair_at(&derived, chain.kind, i * SEED_STRIDE, 5)
                    .map_err(|e| format!("{}: {e}", derived.id))?;
                if !report.pass {
                    return Err(format!(
                        "{} unsound at seed {}, n = {}",
                        derived.id,
                        report.point.seed(),
                        first_bad_n(&report)
                    ));
                }
            }
            combos += 1;
        }
    }
    if combos < 40 {
        return Err(format!("only {combos} chain/pair combinations exercised"));
    }
    Ok(format!("{combos} chain/pair combinations x 3 points valid at depth 5"))
}

// ---------------------------------------------------------------------------
// criterion 3: the full identity registry verifies exactly
// ---------------------------------------------------------------------------

fn c3_identity_suite() -> Result<String, String> {
    let report = identities::verify_all(0, 3, 5).map_err(|e| e.to_string())?;
    if !report.pass {
        let bad = report.results.iter().find(|r| !r.pass).unwrap();
        let n = bad.rows.iter().find(|r| !r.equal).map(|r| r.n).unwrap_or(0);
        return Err(format!(
            "{} fails at seed {}, n = {n}",
            bad.id,
            bad.point.seed()
        ));
    }
    Ok(format!(
        "{} identities x 3 points for n = 0..=5",
        identities::list_identities().len()
    ))
}

// ---------------------------------------------------------------------------
// criterion 4: named chains agree with their general-theorem instances
// ---------------------------------------------------------------------------

fn c4_general_specialization() -> Result<String, String> {
    let base = catalog::get_pair("pr2").map_err(|e| e.to_string())?;
    let gens = [Gen::Q, Gen::A, Gen::K, Gen::Rho1, Gen::Rho2];
    let (_, mismatches) = sample_non_degenerate(0, &gens, |pt| {
        let bundle = ParamBundle::standard(Arc::new(pt.clone()));
        let mut bad = Vec::new();
        for chain in chains::list_chains().iter().filter(|c| c.kind == PairKind::Wp) {
            let named = chain.apply(&base);
            let general = chains::general_instantiation(chain.id, &base)?;
            bad.extend(diff_pairs(&named, &general, &bundle, 4)?);
        }
        Ok(bad)
    })
    .map_err(|e| e.to_string())?;
    if !mismatches.is_empty() {
        return Err(mismatches.join("; "));
    }
    Ok("10 named chains match their general instantiations on pr2 for n = 0..=4".to_string())
}

// ---------------------------------------------------------------------------
// criterion 5: structural relations of the theory
// ---------------------------------------------------------------------------

fn c5_structural_relations() -> Result<String, String> {
    inversion_round_trip().map_err(|e| format!("inversion round-trip: {e}"))?;
    dual_involution().map_err(|e| format!("dual involution: {e}"))?;
    double_application_identity().map_err(|e| format!("double application: {e}"))?;
    unit_image_fixtures().map_err(|e| format!("unit images: {e}"))?;
    dual_catalog_relations().map_err(|e| format!("catalog duals: {e}"))?;
    Ok(
        "inversion round-trip (10 sequences, depth 8); dual involution (all pairs, depth 6); \
         new_cn11/andrews_2 double application (depth 5); unit images under new_cn11/new_cn333/new_cn2; \
         mz2 = dual(pr4), l1pr2 = dual(mz1)"
            .to_string(),
    )
}

/// beta_from_alpha followed by alpha_from_beta recovers arbitrary
/// sequences: the relation and Warnaar's inversion are mutual inverses.
fn inversion_round_trip() -> Result<(), String> {
    let (_, bad) = sample_non_degenerate(0, &[Gen::Q, Gen::A, Gen::K], |pt| {
        let bundle = ParamBundle::standard(Arc::new(pt.clone()));
        let mut bad = Vec::new();
        for s in 0..10u32 {
            // Deterministic dense sequence with nonzero real and (for
            // s > 0) imaginary parts; exactness makes RNG unnecessary.
            let alpha: PairEval = Arc::new(move |n, _| {
                let re = BigRational::new((3 * n + 2 * s + 1).into(), (n + 2).into());
                let im = BigRational::new(((n * s) % 7).into(), 5.into());
                Ok(GaussianRational::new(re, im))
            });
            let inner = alpha.clone();
            let beta: PairEval = Arc::new(move |n, b| beta_from_alpha(&inner, b, n));
            for n in 0..=8 {
                if alpha_from_beta(&beta, &bundle, n)? != alpha(n, &bundle)? {
                    bad.push(format!("sequence {s} not recovered at n = {n}"));
                }
            }
        }
        Ok(bad)
    })
    .map_err(|e| e.to_string())?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

/// dual(dual(p)) = p on every catalog pair.
fn dual_involution() -> Result<(), String> {
    for entry in catalog::list_pairs() {
        let pair = entry.pair();
        let twice = dual_pair(&dual_pair(&pair));
        let required = required_generators(entry.kind, &pair.required_extras);
        let (_, bad) = sample_non_degenerate(0, &required, |pt| {
            let bundle = ParamBundle::standard(Arc::new(pt.clone()));
            diff_pairs(&twice, &pair, &bundle, 6)
        })
        .map_err(|e| format!("{}: {e}", entry.id))?;
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
    }
    Ok(())
}

/// new_cn11 and andrews_2 square to the identity map on pairs.
fn double_application_identity() -> Result<(), String> {
    let base = catalog::get_pair("pr2").map_err(|e| e.to_string())?;
    for id in ["new_cn11", "andrews_2"] {
        let once = chains::apply_chain(id, &base).map_err(|e| e.to_string())?;
        let twice = chains::apply_chain(id, &once).map_err(|e| e.to_string())?;
        let (_, bad) = sample_non_degenerate(0, &[Gen::Q, Gen::A, Gen::K], |pt| {
            let bundle = ParamBundle::standard(Arc::new(pt.clone()));
            diff_pairs(&twice, &base, &bundle, 5)
        })
        .map_err(|e| format!("{id}: {e}"))?;
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
    }
    Ok(())
}

/// The unit pair maps to known catalog pairs: l1pr2 under new_cn11,
/// cn333pr under new_cn333, and singh at rho1 = -rho2 = sqrt(aq/k)
/// under new_cn2.
fn unit_image_fixtures() -> Result<(), String> {
    let unit = catalog::get_pair("unit").map_err(|e| e.to_string())?;
    for (chain, target) in [("new_cn11", "l1pr2"), ("new_cn333", "cn333pr")] {
        let image = chains::apply_chain(chain, &unit).map_err(|e| e.to_string())?;
        let expected = catalog::get_pair(target).map_err(|e| e.to_string())?;
        let (_, bad) = sample_non_degenerate(0, &[Gen::Q, Gen::A, Gen::K], |pt| {
            let bundle = ParamBundle::standard(Arc::new(pt.clone()));
            diff_pairs(&image, &expected, &bundle, 5)
        })
        .map_err(|e| format!("{chain}: {e}"))?;
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
    }
    let image = chains::apply_chain("new_cn2", &unit).map_err(|e| e.to_string())?;
    let singh = catalog::get_pair("singh").map_err(|e| e.to_string())?;
    let (_, bad) = sample_non_degenerate(0, &[Gen::Q, Gen::A, Gen::K], |pt| {
        let bundle = ParamBundle::standard(Arc::new(pt.clone()));
        let rr = (bundle.a * bundle.q / bundle.k).sqrt()?;
        let pinned = bundle.clone().with_extra("rho1", rr).with_extra("rho2", -rr);
        let mut bad = Vec::new();
        for n in 0..=5 {
            if (image.alpha)(n, &bundle)? != (singh.alpha)(n, &pinned)? {
                bad.push(format!("new_cn2 alpha differs at n = {n}"));
            }
            if (image.beta)(n, &bundle)? != (singh.beta)(n, &pinned)? {
                bad.push(format!("new_cn2 beta differs at n = {n}"));
            }
        }
        Ok(bad)
    })
    .map_err(|e| format!("new_cn2: {e}"))?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

/// mz2 = dual(pr4) and l1pr2 = dual(mz1) as catalog facts.
fn dual_catalog_relations() -> Result<(), String> {
    for (id, base) in [("mz2", "pr4"), ("l1pr2", "mz1")] {
        let left = catalog::get_pair(id).map_err(|e| e.to_string())?;
        let right = dual_pair(&catalog::get_pair(base).map_err(|e| e.to_string())?);
        let (_, bad) = sample_non_degenerate(0, &[Gen::Q, Gen::A, Gen::K], |pt| {
            let bundle = ParamBundle::standard(Arc::new(pt.clone()));
            diff_pairs(&left, &right, &bundle, 6)
        })
        .map_err(|e| format!("{id}: {e}"))?;
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// criterion 6: the k = 0 chains preserve the classical relation
// ---------------------------------------------------------------------------

fn c6_bailey_limits() -> Result<String, String> {
    let mut combos = 0u32;
    for chain_id in ["bailey_d4", "bailey_d1"] {
        for entry in catalog::bailey_fixtures() {
            let base = entry.pair();
            let derived =
                chains::apply_chain(chain_id, &base).map_err(|e| e.to_string())?;
            let report = check_pair_at(&derived, PairKind::Bailey, 0, 6)
                .map_err(|e| format!("{}: {e}", derived.id))?;
            if !report.pass {
                return Err(format!(
                    "{} breaks the k = 0 relation at n = {}",
                    derived.id,
                    first_bad_n(&report)
                ));
            }
            combos += 1;
        }
    }
    Ok(format!("{combos} chain/fixture combinations preserve the relation at depth 6"))
}

// ---------------------------------------------------------------------------
// criterion 7: corrupted inputs are detected and located
// ---------------------------------------------------------------------------

fn corrupted_identity_rhs(n: u32, pt: &ParamPoint) -> Result<GaussianRational, Error> {
    let v = (identities::get("unit_cn11").unwrap().rhs)(n, pt)?;
    Ok(if n == 2 { v + GaussianRational::one() } else { v })
}

fn c7_negative_controls() -> Result<String, String> {
    // A pair whose beta is wrong at exactly n = 3 must fail there.
    let unit = catalog::get_pair("unit").map_err(|e| e.to_string())?;
    let beta = unit.beta.clone();
    let corrupted = WPPairGen {
        id: "unit (corrupted)".to_string(),
        alpha: unit.alpha.clone(),
        beta: Arc::new(move |n, b| {
            if n == 3 {
                Ok(GaussianRational::one())
            } else {
                beta(n, b)
            }
        }),
        required_extras: Vec::new(),
    };
    let report = check_pair_at(&corrupted, PairKind::Wp, 0, 6).map_err(|e| e.to_string())?;
    if report.pass {
        return Err("corrupted pair slipped through".to_string());
    }
    let flagged = first_bad_n(&report);
    if flagged != 3 {
        return Err(format!("corrupted pair flagged at n = {flagged}, expected 3"));
    }

    // An identity whose rhs is wrong at exactly n = 2 must fail there,
    // with the offending id and index in the result.
    let orig = identities::get("unit_cn11").map_err(|e| e.to_string())?;
    let corrupt = Identity {
        id: "unit_cn11 (corrupted)",
        free_generators: orig.free_generators,
        source: orig.source,
        constraints: orig.constraints,
        lhs: orig.lhs,
        rhs: corrupted_identity_rhs,
    };
    let res = identities::verify_at_seed(&corrupt, 0, 5).map_err(|e| e.to_string())?;
    if res.pass {
        return Err("corrupted identity slipped through".to_string());
    }
    let bad_row = res.rows.iter().find(|r| !r.equal).map(|r| r.n).unwrap_or(0);
    if bad_row != 2 {
        return Err(format!("corrupted identity flagged at n = {bad_row}, expected 2"));
    }
    Ok(format!(
        "'{}' flagged at n = 3; '{}' flagged at n = 2",
        report.subject, res.id
    ))
}

// ---------------------------------------------------------------------------
// criterion 8: identical CLI runs emit byte-identical JSON
// ---------------------------------------------------------------------------

fn c8_determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_wpb"))
            .args([
                "identities", "verify", "--all", "--n", "5", "--seed", "7", "--points", "3",
                "--json",
            ])
            .env_remove("WPB_SEED")
            .output()
    };
    let first = run().map_err(|e| e.to_string())?;
    let second = run().map_err(|e| e.to_string())?;
    if !first.status.success() || !second.status.success() {
        return Err(format!(
            "exit codes {:?} and {:?}",
            first.status.code(),
            second.status.code()
        ));
    }
    if first.stdout != second.stdout {
        return Err("stdout differs between identical runs".to_string());
    }
    Ok(format!(
        "two identical runs, {} bytes of JSON each",
        first.stdout.len()
    ))
}
