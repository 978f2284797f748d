//! The catalog of concrete WP-Bailey pairs and classical Bailey seeds.
//!
//! Eleven WP pairs, each given by explicit closed forms for alpha_n and
//! beta_n, plus two k = 0 fixtures for the classical Bailey chains.
//! Attribution follows the literature: the unit and rho-parameterized
//! pairs go back to Andrews and Singh, the sqrt(q)-based pairs to
//! Bressoud, and the remaining ones to McLaughlin, Sills and Zimmer.
//!
//! Every entry is verified against the defining relation by
//! `wp_core::check_wp_pair` (or `check_bailey_pair` for the k = 0
//! fixtures); nothing in this module is trusted by construction.

use std::sync::Arc;

use crate::error::Error;
use crate::field::GaussianRational;
use crate::qseries::{mono_poch, one_minus, poch_ratio};
use crate::wp_core::{PairKind, ParamBundle, WPPairGen};

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

/// Catalog metadata plus a constructor for the actual pair.
pub struct PairEntry {
    pub id: &'static str,
    pub kind: PairKind,
    pub required_extras: &'static [&'static str],
    pub source: &'static str,
    build: fn() -> WPPairGen,
}

impl PairEntry {
    pub fn pair(&self) -> WPPairGen {
        (self.build)()
    }
}

macro_rules! entry {
    ($id:literal, $kind:expr, $extras:expr, $source:literal, $alpha:ident, $beta:ident) => {{
        fn build() -> WPPairGen {
            WPPairGen {
                id: $id.to_string(),
                alpha: Arc::new($alpha),
                beta: Arc::new($beta),
                required_extras: $extras.to_vec(),
            }
        }
        PairEntry {
            id: $id,
            kind: $kind,
            required_extras: $extras,
            source: $source,
            build,
        }
    }};
}

static PAIRS: once_cell::sync::Lazy<Vec<PairEntry>> = once_cell::sync::Lazy::new(|| {
    vec![
        entry!("unit", PairKind::Wp, &[], "Andrews", unit_alpha, unit_beta),
        entry!("singh", PairKind::Wp, &["rho1", "rho2"], "Singh", singh_alpha, singh_beta),
        entry!("pr2", PairKind::Wp, &[], "McLaughlin-Sills-Zimmer", pr2_alpha, pr2_beta),
        entry!("pr3", PairKind::Wp, &[], "McLaughlin-Sills-Zimmer", pr3_alpha, pr3_beta),
        entry!("pr4", PairKind::Wp, &[], "McLaughlin-Sills-Zimmer", pr4_alpha, pr4_beta),
        entry!("bressoud1", PairKind::Wp, &[], "Bressoud", bressoud1_alpha, bressoud1_beta),
        entry!("bressoud2", PairKind::Wp, &[], "Bressoud", bressoud2_alpha, bressoud2_beta),
        entry!("mz1", PairKind::Wp, &[], "McLaughlin-Zimmer", mz1_alpha, mz1_beta),
        entry!("mz2", PairKind::Wp, &[], "McLaughlin-Zimmer", mz2_alpha, mz2_beta),
        entry!("l1pr2", PairKind::Wp, &[], "McLaughlin-Zimmer", l1pr2_alpha, l1pr2_beta),
        entry!("cn333pr", PairKind::Wp, &[], "McLaughlin-Zimmer", cn333pr_alpha, cn333pr_beta),
    ]
});

static BAILEY: once_cell::sync::Lazy<Vec<PairEntry>> = once_cell::sync::Lazy::new(|| {
    vec![
        entry!(
            "unit_bailey",
            PairKind::Bailey,
            &[],
            "classical",
            unit_bailey_alpha,
            unit_bailey_beta
        ),
        entry!(
            "singh_bailey",
            PairKind::Bailey,
            &["rho1", "rho2"],
            "Singh (k = 0 limit)",
            singh_bailey_alpha,
            singh_bailey_beta
        ),
    ]
});

/// The eleven WP pairs, in curated order (seed pairs first).
pub fn list_pairs() -> &'static [PairEntry] {
    &PAIRS
}

/// The two k = 0 seeds for the classical Bailey chains.
pub fn bailey_fixtures() -> &'static [PairEntry] {
    &BAILEY
}

/// Look up any catalog entry, WP or Bailey fixture.
pub fn find(id: &str) -> Option<&'static PairEntry> {
    PAIRS
        .iter()
        .chain(BAILEY.iter())
        .find(|e| e.id == id)
}

pub fn get_pair(id: &str) -> Result<WPPairGen, Error> {
    find(id)
        .map(PairEntry::pair)
        .ok_or_else(|| Error::UnknownPair(id.to_string()))
}

// ---------------------------------------------------------------------------
// WP pairs
// ---------------------------------------------------------------------------

type V = Result<GaussianRational, Error>;

// The unit pair: beta_n = delta_{n,0}, alpha_n the full WP weight in
// very-well-poised form.
fn unit_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let ra = a.sqrt()?;
    Ok(
        poch_ratio(&[q * ra, -(q * ra), a, a / k], &[ra, -ra, q, k * q], q, n, pt)?
            * (k / a).value(pt).ipow(n as i32)?,
    )
}

fn unit_beta(n: u32, _b: &ParamBundle) -> V {
    Ok(if n == 0 { GaussianRational::one() } else { GaussianRational::zero() })
}

// Singh's pair, with two free parameters rho1, rho2.
fn singh_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
    let ra = a.sqrt()?;
    Ok(poch_ratio(
        &[q * ra, -(q * ra), a, r1, r2, a * a * q / (k * r1 * r2)],
        &[ra, -ra, q, a * q / r1, a * q / r2, k * r1 * r2 / a],
        q,
        n,
        pt,
    )? * (k / a).value(pt).ipow(n as i32)?)
}

fn singh_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
    poch_ratio(
        &[k * r1 / a, k * r2 / a, k, a * q / (r1 * r2)],
        &[a * q / r1, a * q / r2, k * r1 * r2 / a, q],
        q,
        n,
        pt,
    )
}

fn pr2_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let ra = a.sqrt()?;
    Ok(poch_ratio(
        &[q * ra, -(q * ra), a, k / (a * q)],
        &[ra, -ra, q, a * a * q * q / k],
        q,
        n,
        pt,
    )? * mono_poch(q * a * a / k, q, 2 * n, pt).div(&mono_poch(k, q, 2 * n, pt))?
        * (k / a).value(pt).ipow(n as i32)?)
}

fn pr2_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    poch_ratio(&[k * k / (q * a * a)], &[q], q, n, b.point())
}

fn pr3_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rk, rqk) = (a.sqrt()?, k.sqrt()?, (q / k).sqrt()?);
    let rkq = (k * q).sqrt()?;
    Ok(poch_ratio(
        &[q * ra, -(q * ra), a, a * rqk, -(a * rqk), a / rk, -(a * q / rk), k / a],
        &[ra, -ra, q, rkq, -rkq, q * rk, -rk, q * a * a / k],
        q,
        n,
        pt,
    )? * (k / a).value(pt).ipow(n as i32)?)
}

fn pr3_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let rk = k.sqrt()?;
    poch_ratio(&[rk, k * k / (a * a)], &[q * rk, q], q, n, b.point())
}

// Alpha supported on even indices only.
fn pr4_alpha(n: u32, b: &ParamBundle) -> V {
    if n % 2 == 1 {
        return Ok(GaussianRational::zero());
    }
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let ra = a.sqrt()?;
    let q2 = q * q;
    Ok(poch_ratio(
        &[q2 * ra, -(q2 * ra), a, a * a / (k * k)],
        &[ra, -ra, q2, q2 * k * k / a],
        q2,
        n / 2,
        pt,
    )? * (k / a).value(pt).ipow(n as i32)?)
}

fn pr4_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let rqa = (q / a).sqrt()?;
    let raq = (a * q).sqrt()?;
    Ok(poch_ratio(
        &[k, k * rqa, -(k * rqa), a / k],
        &[raq, -raq, q * k * k / a, q],
        q,
        n,
        pt,
    )? * (-(k / a)).value(pt).ipow(n as i32)?)
}

// Bressoud's pairs live on base sqrt(q).
fn bressoud1_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rq) = (a.sqrt()?, q.sqrt()?);
    let w = one_minus(ra * q.pow(n as i32), pt).div(&one_minus(ra, pt))?;
    Ok(w * poch_ratio(&[ra, a * rq / k], &[rq, k / ra], rq, n, pt)?
        * (k / (a * rq)).value(pt).ipow(n as i32)?)
}

fn bressoud1_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rq) = (a.sqrt()?, q.sqrt()?);
    Ok(poch_ratio(&[k, a * q / k], &[q, k * k / a], q, n, pt)?
        * mono_poch(-(k / ra), rq, 2 * n, pt)
            .div(&mono_poch(-((a * q).sqrt()?), rq, 2 * n, pt))?
        * (k / (a * rq)).value(pt).ipow(n as i32)?)
}

fn bressoud2_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rq) = (a.sqrt()?, q.sqrt()?);
    let w = one_minus(a * q.pow(2 * n as i32), pt).div(&one_minus(a, pt))?;
    Ok(w * poch_ratio(&[ra, a / k], &[rq, k * (q / a).sqrt()?], rq, n, pt)?
        * (k / (a * rq)).value(pt).ipow(n as i32)?)
}

fn bressoud2_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let ra = a.sqrt()?;
    Ok(poch_ratio(
        &[k, a / k, -(k * (q / a).sqrt()?), -(k * q / ra)],
        &[q, q * k * k / a, -ra, -((a * q).sqrt()?)],
        q,
        n,
        pt,
    )? * (k / (a * q.sqrt()?)).value(pt).ipow(n as i32)?)
}

fn mz1_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    Ok(poch_ratio(&[q * a * a / (k * k)], &[q], q, n, pt)?
        * (k / a).value(pt).ipow(n as i32)?)
}

fn mz1_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    Ok(poch_ratio(&[q * a / k, k], &[k * k / a, q], q, n, pt)?
        * mono_poch(k * k / a, q, 2 * n, pt).div(&mono_poch(a * q, q, 2 * n, pt))?)
}

fn mz2_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rqk) = (a.sqrt()?, (q / k).sqrt()?);
    let rqk2 = (q * k).sqrt()?;
    Ok(poch_ratio(
        &[a, q * ra, -(q * ra), k / a, a * rqk, -(a * rqk)],
        &[ra, -ra, q * a * a / k, rqk2, -rqk2, q],
        q,
        n,
        pt,
    )? * GaussianRational::from_int(-1).ipow(n as i32)?)
}

// Beta supported on even indices only.
fn mz2_beta(n: u32, b: &ParamBundle) -> V {
    if n % 2 == 1 {
        return Ok(GaussianRational::zero());
    }
    let (a, k, q) = (b.a, b.k, b.q);
    let q2 = q * q;
    poch_ratio(
        &[k, k * k / (a * a)],
        &[q2, q2 * a * a / k],
        q2,
        n / 2,
        b.point(),
    )
}

// Image of the unit pair under the c = a^2/(kq) chain; also the dual
// of mz1.
fn l1pr2_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let w = one_minus(a * q.pow(2 * n as i32), pt).div(&one_minus(a, pt))?;
    Ok(w * poch_ratio(&[a, k * q / a], &[q, a * a / k], q, n, pt)?
        * mono_poch(a * a / k, q, 2 * n, pt).div(&mono_poch(k * q, q, 2 * n, pt))?
        * (k / a).value(pt).ipow(n as i32)?)
}

fn l1pr2_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let w = one_minus(k, pt).div(&one_minus(k * q.pow(2 * n as i32), pt))?;
    Ok(w * poch_ratio(&[q * k * k / (a * a)], &[q], q, n, pt)?)
}

// Image of the unit pair under the base-halving chain to
// (sqrt a, k/sqrt a, sqrt q).
fn cn333pr_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rq) = (a.sqrt()?, q.sqrt()?);
    let w = one_minus(ra * q.pow(n as i32), pt).div(&one_minus(ra, pt))?;
    Ok(w * poch_ratio(&[ra, a / k], &[rq, k * (q / a).sqrt()?], rq, n, pt)?
        * (k / a).value(pt).ipow(n as i32)?)
}

fn cn333pr_beta(n: u32, b: &ParamBundle) -> V {
    let (a, k, q) = (b.a, b.k, b.q);
    let pt = b.point();
    let (ra, rq) = (a.sqrt()?, q.sqrt()?);
    Ok(mono_poch(-(k / ra), rq, 2 * n, pt)
        .div(&mono_poch(-((a * q).sqrt()?), rq, 2 * n, pt))?
        * poch_ratio(&[a / k, k], &[k * k * q / a, q], q, n, pt)?
        * (k * rq / a).value(pt).ipow(n as i32)?)
}

// ---------------------------------------------------------------------------
// classical Bailey fixtures (k = 0)
// ---------------------------------------------------------------------------

fn unit_bailey_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, q) = (b.a, b.q);
    let pt = b.point();
    let ni = n as i32;
    let w = one_minus(a * q.pow(2 * ni), pt).div(&one_minus(a, pt))?;
    Ok(w * mono_poch(a, q, n, pt).div(&mono_poch(q, q, n, pt))?
        * GaussianRational::from_int(-1).ipow(ni)?
        * q.pow(ni * (ni - 1) / 2).value(pt))
}

fn unit_bailey_beta(n: u32, _b: &ParamBundle) -> V {
    Ok(if n == 0 { GaussianRational::one() } else { GaussianRational::zero() })
}

fn singh_bailey_alpha(n: u32, b: &ParamBundle) -> V {
    let (a, q) = (b.a, b.q);
    let pt = b.point();
    let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
    let ra = a.sqrt()?;
    let ni = n as i32;
    Ok(poch_ratio(
        &[q * ra, -(q * ra), a, r1, r2],
        &[ra, -ra, q, a * q / r1, a * q / r2],
        q,
        n,
        pt,
    )? * (-(a / (r1 * r2))).value(pt).ipow(ni)?
        * q.pow(ni * (ni + 1) / 2).value(pt))
}

fn singh_bailey_beta(n: u32, b: &ParamBundle) -> V {
    let (a, q) = (b.a, b.q);
    let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
    poch_ratio(
        &[a * q / (r1 * r2)],
        &[a * q / r1, a * q / r2, q],
        q,
        n,
        b.point(),
    )
}
