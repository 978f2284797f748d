//! Chains: constructions that map WP-Bailey pairs to WP-Bailey pairs.
//!
//! Four general theorems cover everything here.  Writing (e, c) for the
//! parameters the base pair is evaluated at and g_n for a free weight
//! sequence, they produce a new pair at ambient (a, k, q) with
//!
//!   A: base at (e, c), same base q; alpha'_n = g_n alpha_n(e,c); the
//!      new beta' is a double sum whose inner series carries argument
//!      z = q a c/(k e).
//!   B: base at (e, c) in base q^2 inside ambient base q; z = q c a/(k e).
//!   C: ambient (a, k, Q) with base pair at (e, c) in base sqrt(Q);
//!      z = Q c a/(k e).
//!   D: base at (e, c) in base q^2 with alpha' supported on even
//!      indices and floor(n/2) summation; z = q^2 c a^2/(k^2 e).
//!
//! The named chains (Andrews' two, Warnaar's sigma- and base-changing
//! chains, the Liu-Ma chain, and the newer c = a^2/(kq), (a^2, ak/q)
//! and base-halving chains of McLaughlin-Zimmer) are implemented from
//! their displayed closed forms, *not* by delegating to the general
//! theorems; `general_instantiation` builds the corresponding general
//! instance so tests can confirm the two routes agree value for value.
//! The two k = 0 entries are classical Bailey chains.

use std::sync::Arc;

use crate::error::Error;
use crate::field::GaussianRational;
use crate::qseries::{mono_poch, one_minus, one_plus, poch_ratio};
use crate::roots::RootMonomial;
use crate::wp_core::{PairEval, PairKind, ParamBundle, WPPairGen};

/// Maps a bundle to the base-pair parameter it induces (e or c).
pub type ParamExpr = Arc<dyn Fn(&ParamBundle) -> Result<RootMonomial, Error> + Send + Sync>;

/// The free weight sequence g_n of the general theorems.
pub type WeightSeq = Arc<dyn Fn(u32, &ParamBundle) -> Result<GaussianRational, Error> + Send + Sync>;

fn union_extras(base: &WPPairGen, more: &[&'static str]) -> Vec<&'static str> {
    let mut v = base.required_extras.clone();
    for e in more {
        if !v.contains(e) {
            v.push(e);
        }
    }
    v
}

/// g_n = 1, the weight used by several named chains.
pub fn unit_weight() -> WeightSeq {
    Arc::new(|_, _| Ok(GaussianRational::one()))
}

// ---------------------------------------------------------------------------
// the four general chain theorems (brute-force double sums)
// ---------------------------------------------------------------------------

/// General chain with the base pair at (e, c), same base q.
pub fn general_chain_a(
    base: &WPPairGen,
    e_of: ParamExpr,
    c_of: ParamExpr,
    g: WeightSeq,
) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let na: PairEval = {
        let (e_of, c_of, g) = (e_of.clone(), c_of.clone(), g.clone());
        Arc::new(move |n, b| {
            let bb = b.with_ak(e_of(b)?, c_of(b)?);
            Ok(g(n, b)? * alpha(n, &bb)?)
        })
    };
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let e = e_of(b)?;
        let c = c_of(b)?;
        let bb = b.with_ak(e, c);
        let zz = (q * a * c / (k * e)).value(pt);
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let outer = one_minus(c * q.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * (mono_poch(k / a, q, n - j, pt)
                    * mono_poch(k, q, n + j, pt)
                    * mono_poch(e * q, q, 2 * j, pt))
                .div(
                    &(mono_poch(q, q, n - j, pt)
                        * mono_poch(a * q, q, n + j, pt)
                        * mono_poch(c * q, q, 2 * j, pt)),
                )?;
            let mut inner = GaussianRational::zero();
            for r in 0..=(n - j) {
                let t = one_minus(e * q.pow(2 * ji + 2 * r as i32), pt)
                    .div(&one_minus(e * q.pow(2 * ji), pt))?
                    * poch_ratio(
                        &[q.pow(ji - ni), k * q.pow(ni + ji), e / c, e * q.pow(2 * ji)],
                        &[
                            a * q.pow(ni + ji + 1),
                            (a / k) * q.pow(1 - (ni - ji)),
                            c * q.pow(2 * ji + 1),
                            q,
                        ],
                        q,
                        r,
                        pt,
                    )?;
                inner = inner + t * zz.ipow(r as i32)? * g(r + j, b)?;
            }
            total = total + beta(j, &bb)? * outer * inner;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("general_a({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

/// General chain with the base pair at (e, c) in base q^2.
pub fn general_chain_b(
    base: &WPPairGen,
    e_of: ParamExpr,
    c_of: ParamExpr,
    g: WeightSeq,
) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let na: PairEval = {
        let (e_of, c_of, g) = (e_of.clone(), c_of.clone(), g.clone());
        Arc::new(move |n, b| {
            let bb = b.with_akq(e_of(b)?, c_of(b)?, b.q * b.q);
            Ok(g(n, b)? * alpha(n, &bb)?)
        })
    };
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let e = e_of(b)?;
        let c = c_of(b)?;
        let q2 = q * q;
        let bb = b.with_akq(e, c, q2);
        let zz = (q * c * a / (k * e)).value(pt);
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let outer = one_minus(c * q.pow(4 * ji), pt).div(&one_minus(c, pt))?
                * (mono_poch(k / a, q, n - j, pt)
                    * mono_poch(k, q, n + j, pt)
                    * mono_poch(e * q2, q2, 2 * j, pt))
                .div(
                    &(mono_poch(q, q, n - j, pt)
                        * mono_poch(a * q, q, n + j, pt)
                        * mono_poch(c * q2, q2, 2 * j, pt)),
                )?;
            let mut inner = GaussianRational::zero();
            for r in 0..=(n - j) {
                let t = one_minus(e * q.pow(4 * ji + 4 * r as i32), pt)
                    .div(&one_minus(e * q.pow(4 * ji), pt))?
                    * poch_ratio(
                        &[q.pow(ji - ni), k * q.pow(ni + ji)],
                        &[a * q.pow(ni + ji + 1), (a / k) * q.pow(1 - (ni - ji))],
                        q,
                        r,
                        pt,
                    )?
                    * poch_ratio(
                        &[e / c, e * q.pow(4 * ji)],
                        &[c * q.pow(4 * ji + 2), q2],
                        q2,
                        r,
                        pt,
                    )?;
                inner = inner + t * zz.ipow(r as i32)? * g(r + j, b)?;
            }
            total = total + beta(j, &bb)? * outer * inner;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("general_b({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

/// General chain with ambient base Q and the base pair in base sqrt(Q).
pub fn general_chain_c(
    base: &WPPairGen,
    e_of: ParamExpr,
    c_of: ParamExpr,
    g: WeightSeq,
) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let na: PairEval = {
        let (e_of, c_of, g) = (e_of.clone(), c_of.clone(), g.clone());
        Arc::new(move |n, b| {
            let p = b.q.sqrt()?;
            let bb = b.with_akq(e_of(b)?, c_of(b)?, p);
            Ok(g(n, b)? * alpha(n, &bb)?)
        })
    };
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, qq) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let p = qq.sqrt()?;
        let e = e_of(b)?;
        let c = c_of(b)?;
        let bb = b.with_akq(e, c, p);
        let zz = (qq * c * a / (k * e)).value(pt);
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let outer = one_minus(c * p.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * (mono_poch(k / a, qq, n - j, pt)
                    * mono_poch(k, qq, n + j, pt)
                    * mono_poch(e * p, p, 2 * j, pt))
                .div(
                    &(mono_poch(qq, qq, n - j, pt)
                        * mono_poch(a * qq, qq, n + j, pt)
                        * mono_poch(c * p, p, 2 * j, pt)),
                )?;
            let mut inner = GaussianRational::zero();
            for r in 0..=(n - j) {
                let t = one_minus(e * p.pow(2 * ji + 2 * r as i32), pt)
                    .div(&one_minus(e * p.pow(2 * ji), pt))?
                    * poch_ratio(
                        &[p.pow(2 * (ji - ni)), k * p.pow(2 * ni + 2 * ji)],
                        &[
                            a * p.pow(2 * ni + 2 * ji + 2),
                            (a / k) * p.pow(2 - 2 * (ni - ji)),
                        ],
                        qq,
                        r,
                        pt,
                    )?
                    * poch_ratio(
                        &[e / c, e * p.pow(2 * ji)],
                        &[c * p.pow(2 * ji + 1), p],
                        p,
                        r,
                        pt,
                    )?;
                inner = inner + t * zz.ipow(r as i32)? * g(r + j, b)?;
            }
            total = total + beta(j, &bb)? * outer * inner;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("general_c({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

/// General chain with the base pair in base q^2 and alpha' supported on
/// even indices; beta' sums to floor(n/2).
pub fn general_chain_d(
    base: &WPPairGen,
    e_of: ParamExpr,
    c_of: ParamExpr,
    g: WeightSeq,
) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let na: PairEval = {
        let (e_of, c_of, g) = (e_of.clone(), c_of.clone(), g.clone());
        Arc::new(move |n, b| {
            if n % 2 == 1 {
                return Ok(GaussianRational::zero());
            }
            let bb = b.with_akq(e_of(b)?, c_of(b)?, b.q * b.q);
            Ok(g(n / 2, b)? * alpha(n / 2, &bb)?)
        })
    };
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let e = e_of(b)?;
        let c = c_of(b)?;
        let q2 = q * q;
        let bb = b.with_akq(e, c, q2);
        let zz = (q * q * c * a * a / (k * k * e)).value(pt);
        let mut total = GaussianRational::zero();
        for j in 0..=n / 2 {
            let ji = j as i32;
            let outer = one_minus(c * q.pow(4 * ji), pt).div(&one_minus(c, pt))?
                * (mono_poch(k / a, q, n - 2 * j, pt)
                    * mono_poch(k, q, n + 2 * j, pt)
                    * mono_poch(e * q2, q2, 2 * j, pt))
                .div(
                    &(mono_poch(q, q, n - 2 * j, pt)
                        * mono_poch(a * q, q, n + 2 * j, pt)
                        * mono_poch(c * q2, q2, 2 * j, pt)),
                )?;
            let mut inner = GaussianRational::zero();
            for r in 0..=(n / 2 - j) {
                let t = one_minus(e * q.pow(4 * ji + 4 * r as i32), pt)
                    .div(&one_minus(e * q.pow(4 * ji), pt))?
                    * poch_ratio(
                        &[q.pow(2 * ji - ni), k * q.pow(ni + 2 * ji)],
                        &[a * q.pow(ni + 2 * ji + 1), (a / k) * q.pow(1 - (ni - 2 * ji))],
                        q,
                        2 * r,
                        pt,
                    )?
                    * poch_ratio(
                        &[e / c, e * q.pow(4 * ji)],
                        &[c * q.pow(4 * ji + 2), q2],
                        q2,
                        r,
                        pt,
                    )?;
                inner = inner + t * zz.ipow(r as i32)? * g(r + j, b)?;
            }
            total = total + beta(j, &bb)? * outer * inner;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("general_d({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// ---------------------------------------------------------------------------
// named chains (displayed closed forms)
// ---------------------------------------------------------------------------

// Andrews' first chain: base at (a, k rho1 rho2/(aq)) with two free
// parameters.
fn chain_andrews_1(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let cx = |b: &ParamBundle| -> Result<RootMonomial, Error> {
        Ok(b.k * b.extra("rho1")? * b.extra("rho2")? / (b.a * b.q))
    };
    let na: PairEval = Arc::new(move |n, b| {
        let (a, q) = (b.a, b.q);
        let pt = b.point();
        let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
        let bb = b.with_ak(a, cx(b)?);
        let w = poch_ratio(&[r1, r2], &[a * q / r1, a * q / r2], q, n, pt)?
            * (a * q / (r1 * r2)).value(pt).ipow(n as i32)?;
        Ok(w * alpha(n, &bb)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
        let c = cx(b)?;
        let bb = b.with_ak(a, c);
        let pre = poch_ratio(&[k * r1 / a, k * r2 / a], &[a * q / r1, a * q / r2], q, n, pt)?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(c * q.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * (mono_poch(r1, q, j, pt)
                    * mono_poch(r2, q, j, pt)
                    * mono_poch(k / c, q, n - j, pt)
                    * mono_poch(k, q, n + j, pt))
                .div(
                    &(mono_poch(k * r1 / a, q, j, pt)
                        * mono_poch(k * r2 / a, q, j, pt)
                        * mono_poch(q, q, n - j, pt)
                        * mono_poch(q * c, q, n + j, pt)),
                )?;
            total = total + t * (a * q / (r1 * r2)).value(pt).ipow(ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("andrews_1({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: union_extras(base, &["rho1", "rho2"]),
    }
}

// Andrews' second chain: base at (a, qa^2/k); applying it twice gives
// back the original pair.
fn chain_andrews_2(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let cx = |b: &ParamBundle| b.q * b.a * b.a / b.k;
    let na: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let bb = b.with_ak(a, cx(b));
        let w = mono_poch(q * a * a / k, q, 2 * n, pt).div(&mono_poch(k, q, 2 * n, pt))?
            * (k * k / (q * a * a)).value(pt).ipow(n as i32)?;
        Ok(w * alpha(n, &bb)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let bb = b.with_ak(a, cx(b));
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let t = mono_poch(k * k / (q * a * a), q, n - j, pt)
                .div(&mono_poch(q, q, n - j, pt))?;
            total =
                total + t * (k * k / (q * a * a)).value(pt).ipow(j as i32)? * beta(j, &bb)?;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("andrews_2({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Warnaar's sigma = 1 chain: base at (a, a^2/k) with sqrt(k) weights.
fn chain_warnaar_sigma1(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let cx = |b: &ParamBundle| b.a * b.a / b.k;
    let na: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let rk = k.sqrt()?;
        let bb = b.with_ak(a, cx(b));
        let w = one_minus(rk, pt).div(&one_minus(rk * q.pow(ni), pt))?
            * one_plus(a * q.pow(ni) / rk, pt).div(&one_plus(a / rk, pt))?
            * mono_poch(a * a / k, q, 2 * n, pt).div(&mono_poch(k, q, 2 * n, pt))?;
        Ok(w * (k * k / (a * a)).value(pt).ipow(ni)? * alpha(n, &bb)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let rk = k.sqrt()?;
        let c = cx(b);
        let bb = b.with_ak(a, c);
        let pre = one_minus(rk, pt).div(&one_minus(rk * q.pow(n as i32), pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_plus(a * q.pow(ji) / rk, pt).div(&one_plus(a / rk, pt))?
                * mono_poch(k / c, q, n - j, pt).div(&mono_poch(q, q, n - j, pt))?;
            total = total + t * (k * k / (a * a)).value(pt).ipow(ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("warnaar_sigma1({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// The Liu-Ma chain: base at (a, a^2/k), beta' sampled at strided
// indices n - 2j.
fn chain_liu_ma(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let cx = |b: &ParamBundle| b.a * b.a / b.k;
    let na: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let q2 = q * q;
        let bb = b.with_ak(a, cx(b));
        let w = mono_poch(q * a * a / k, q2, n, pt).div(&mono_poch(k * q, q2, n, pt))?;
        Ok(w * (-(k / a)).value(pt).ipow(n as i32)? * alpha(n, &bb)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let q2 = q * q;
        let bb = b.with_ak(a, cx(b));
        let mut total = GaussianRational::zero();
        for j in 0..=n / 2 {
            let ji = j as i32;
            let t = one_minus(a * a * q.pow(2 * ni - 4 * ji) / k, pt)
                .div(&one_minus(a * a / k, pt))?
                * (mono_poch(k, q2, n - j, pt) * mono_poch(k * k / (a * a), q2, j, pt)).div(
                    &(mono_poch(a * a * q2 / k, q2, n - j, pt) * mono_poch(q2, q2, j, pt)),
                )?;
            total = total
                + t * (-(k / a)).value(pt).ipow(ni - 2 * ji)? * beta(n - 2 * j, &bb)?;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("liu_ma({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Base at (a, a^2/(kq)); applying it twice gives back the original
// pair, and it sends the unit pair to l1pr2.
fn chain_new_cn11(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let cx = |b: &ParamBundle| b.a * b.a / (b.k * b.q);
    let na: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let bb = b.with_ak(a, cx(b));
        let w = mono_poch(a * a / k, q, 2 * n, pt).div(&mono_poch(k * q, q, 2 * n, pt))?;
        Ok(w * (k * k * q / (a * a)).value(pt).ipow(n as i32)? * alpha(n, &bb)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let c = cx(b);
        let bb = b.with_ak(a, c);
        let pre = one_minus(k, pt).div(&one_minus(k * q.pow(2 * n as i32), pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(c * q.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * mono_poch(k * k * q / (a * a), q, n - j, pt)
                    .div(&mono_poch(q, q, n - j, pt))?;
            total =
                total + t * (k * k * q / (a * a)).value(pt).ipow(ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("new_cn11({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Base at (a^2, ak/q) in base q^2; sends the unit pair to Singh's pair
// at rho1 = -rho2 = sqrt(aq/k).
fn chain_new_cn2(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base =
        |b: &ParamBundle| b.with_akq(b.a * b.a, b.a * b.k / b.q, b.q * b.q);
    let na: PairEval = Arc::new(move |n, b| {
        let (a, q) = (b.a, b.q);
        let pt = b.point();
        let ni = n as i32;
        let w = one_plus(a, pt).div(&one_plus(a * q.pow(2 * ni), pt))?;
        Ok(w * q.pow(ni).value(pt) * alpha(n, &to_base(b))?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let q2 = q * q;
        let c = a * k / q;
        let bb = to_base(b);
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(c * q.pow(4 * ji), pt).div(&one_minus(c, pt))?
                * mono_poch(-(a * q), q, 2 * j, pt).div(&mono_poch(-k, q, 2 * j, pt))?
                * mono_poch(q * k / a, q2, n - j, pt).div(&mono_poch(q2, q2, n - j, pt))?
                * mono_poch(k * k, q2, n + j, pt)
                    .div(&mono_poch(a * k * q, q2, n + j, pt))?
                * one_plus(a, pt).div(&one_plus(a * q.pow(2 * ji), pt))?;
            total = total + t * q.pow(ji).value(pt) * beta(j, &bb)?;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("new_cn2({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Warnaar's base-halving chain: ambient (a, k, Q), base pair at
// (sqrt a, k/(p sqrt a)) in base p = sqrt(Q).
fn chain_warnaar_cn3(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base = |b: &ParamBundle| -> Result<ParamBundle, Error> {
        let p = b.q.sqrt()?;
        let ra = b.a.sqrt()?;
        Ok(b.with_akq(ra, b.k / (p * ra), p))
    };
    let na: PairEval = Arc::new(move |n, b| alpha(n, &to_base(b)?));
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, qq) = (b.a, b.k, b.q);
        let pt = b.point();
        let p = qq.sqrt()?;
        let ra = a.sqrt()?;
        let c = k / (p * ra);
        let bb = to_base(b)?;
        let pre = mono_poch(-(k / ra), p, 2 * n, pt)
            .div(&mono_poch(-(p * ra), p, 2 * n, pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(c * p.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * mono_poch(a * qq / k, qq, n - j, pt).div(&mono_poch(qq, qq, n - j, pt))?
                * mono_poch(k, qq, n + j, pt)
                    .div(&mono_poch(k * k / a, qq, n + j, pt))?;
            total = total
                + t * (k / (a * p)).value(pt).ipow((n - j) as i32)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("warnaar_cn3({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Warnaar's second base-halving chain: base pair at (sqrt a, k/sqrt a)
// in base p = sqrt(Q), with the q^(-n)(1 + sqrt(a) p^(2n)) weight.
fn chain_warnaar_cn33(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base = |b: &ParamBundle| -> Result<ParamBundle, Error> {
        let ra = b.a.sqrt()?;
        Ok(b.with_akq(ra, b.k / ra, b.q.sqrt()?))
    };
    let na: PairEval = Arc::new(move |n, b| {
        let pt = b.point();
        let ni = n as i32;
        let p = b.q.sqrt()?;
        let ra = b.a.sqrt()?;
        let w = one_plus(ra * p.pow(2 * ni), pt).div(&one_plus(ra, pt))?;
        Ok(w * p.pow(-ni).value(pt) * alpha(n, &to_base(b)?)?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, qq) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let p = qq.sqrt()?;
        let ra = a.sqrt()?;
        let c = k / ra;
        let bb = to_base(b)?;
        let pre = p.pow(-ni).value(pt)
            * mono_poch(-(k * p / ra), p, 2 * n, pt)
                .div(&mono_poch(-ra, p, 2 * n, pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(c * p.pow(2 * ji), pt).div(&one_minus(c, pt))?
                * mono_poch(a / k, qq, n - j, pt).div(&mono_poch(qq, qq, n - j, pt))?
                * mono_poch(k, qq, n + j, pt)
                    .div(&mono_poch(k * k * p * p / a, qq, n + j, pt))?;
            total = total + t * (k / a).value(pt).ipow(ni - ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("warnaar_cn33({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Unweighted base-halving chain to (sqrt a, k/sqrt a); sends the unit
// pair to cn333pr.
fn chain_new_cn333(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base = |b: &ParamBundle| -> Result<ParamBundle, Error> {
        let ra = b.a.sqrt()?;
        Ok(b.with_akq(ra, b.k / ra, b.q.sqrt()?))
    };
    let na: PairEval = Arc::new(move |n, b| alpha(n, &to_base(b)?));
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, qq) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let p = qq.sqrt()?;
        let ra = a.sqrt()?;
        let bb = to_base(b)?;
        let pre = mono_poch(-(k / ra), p, 2 * n, pt)
            .div(&mono_poch(-(p * ra), p, 2 * n, pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let ji = j as i32;
            let t = one_minus(k * k * p.pow(4 * ji) / a, pt)
                .div(&one_minus(k * k / a, pt))?
                * mono_poch(a / k, qq, n - j, pt).div(&mono_poch(qq, qq, n - j, pt))?
                * mono_poch(k, qq, n + j, pt)
                    .div(&mono_poch(k * k * p * p / a, qq, n + j, pt))?;
            total = total + t * (k * p / a).value(pt).ipow(ni - ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("new_cn333({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Warnaar's even-support chain: base at (a, k^2/a) in base q^2.
fn chain_warnaar_cn5(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base = |b: &ParamBundle| b.with_akq(b.a, b.k * b.k / b.a, b.q * b.q);
    let na: PairEval = Arc::new(move |n, b| {
        if n % 2 == 1 {
            return Ok(GaussianRational::zero());
        }
        alpha(n / 2, &to_base(b))
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, k, q) = (b.a, b.k, b.q);
        let pt = b.point();
        let ni = n as i32;
        let q2 = q * q;
        let bb = to_base(b);
        let pre = mono_poch(k * k * q / a, q2, n, pt).div(&mono_poch(a * q, q2, n, pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n / 2 {
            let ji = j as i32;
            let t = one_minus(k * k * q.pow(4 * ji) / a, pt)
                .div(&one_minus(k * k / a, pt))?
                * mono_poch(a / k, q, n - 2 * j, pt)
                    .div(&mono_poch(q, q, n - 2 * j, pt))?
                * mono_poch(k, q, n + 2 * j, pt)
                    .div(&mono_poch(k * k * q / a, q, n + 2 * j, pt))?;
            total = total
                + t * (-(k / a)).value(pt).ipow(ni - 2 * ji)? * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("warnaar_cn5({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Classical Bailey chain (k = 0): base at (a^2, 0) in base q^2.
fn chain_bailey_d4(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base =
        |b: &ParamBundle| b.with_akq(b.a * b.a, RootMonomial::zero(), b.q * b.q);
    let na: PairEval = Arc::new(move |n, b| {
        let (a, q) = (b.a, b.q);
        let pt = b.point();
        let ni = n as i32;
        let w = one_plus(a, pt) * q.pow(ni).value(pt);
        let w = w.div(&one_plus(a * q.pow(2 * ni), pt))?;
        Ok(w * alpha(n, &to_base(b))?)
    });
    let nb: PairEval = Arc::new(move |n, b| {
        let (a, q) = (b.a, b.q);
        let pt = b.point();
        let q2 = q * q;
        let bb = to_base(b);
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let t = mono_poch(-a, q, 2 * j, pt).div(&mono_poch(q2, q2, n - j, pt))?;
            total = total + t * q.pow(j as i32).value(pt) * beta(j, &bb)?;
        }
        Ok(total)
    });
    WPPairGen {
        id: format!("bailey_d4({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// Classical Bailey chain (k = 0): ambient (A, 0, Q), base at
// (sqrt A, 0) in base sqrt(Q).
fn chain_bailey_d1(base: &WPPairGen) -> WPPairGen {
    let alpha = base.alpha.clone();
    let beta = base.beta.clone();
    let to_base = |b: &ParamBundle| -> Result<ParamBundle, Error> {
        Ok(b.with_akq(b.a.sqrt()?, RootMonomial::zero(), b.q.sqrt()?))
    };
    let na: PairEval = Arc::new(move |n, b| alpha(n, &to_base(b)?));
    let nb: PairEval = Arc::new(move |n, b| {
        let (aa, qq) = (b.a, b.q);
        let pt = b.point();
        let p = qq.sqrt()?;
        let bb = to_base(b)?;
        let pre = GaussianRational::one()
            .div(&mono_poch(-(aa.sqrt()? * p), p, 2 * n, pt))?;
        let mut total = GaussianRational::zero();
        for j in 0..=n {
            let d = (n - j) as i32;
            let t = GaussianRational::from_int(-1).ipow(d)?
                * p.pow(d * d).value(pt);
            let t = t.div(&mono_poch(qq, qq, n - j, pt))?;
            total = total + t * beta(j, &bb)?;
        }
        Ok(pre * total)
    });
    WPPairGen {
        id: format!("bailey_d1({})", base.id),
        alpha: na,
        beta: nb,
        required_extras: base.required_extras.clone(),
    }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

pub struct ChainEntry {
    pub id: &'static str,
    /// Kind of pair the chain consumes and produces.
    pub kind: PairKind,
    pub required_extras: &'static [&'static str],
    pub source: &'static str,
    build: fn(&WPPairGen) -> WPPairGen,
}

impl ChainEntry {
    pub fn apply(&self, base: &WPPairGen) -> WPPairGen {
        (self.build)(base)
    }
}

static CHAINS: [ChainEntry; 12] = [
    ChainEntry {
        id: "andrews_1",
        kind: PairKind::Wp,
        required_extras: &["rho1", "rho2"],
        source: "Andrews",
        build: chain_andrews_1,
    },
    ChainEntry {
        id: "andrews_2",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Andrews",
        build: chain_andrews_2,
    },
    ChainEntry {
        id: "warnaar_sigma1",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Warnaar",
        build: chain_warnaar_sigma1,
    },
    ChainEntry {
        id: "liu_ma",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Liu-Ma",
        build: chain_liu_ma,
    },
    ChainEntry {
        id: "new_cn11",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "McLaughlin-Zimmer",
        build: chain_new_cn11,
    },
    ChainEntry {
        id: "new_cn2",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "McLaughlin-Zimmer",
        build: chain_new_cn2,
    },
    ChainEntry {
        id: "warnaar_cn3",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Warnaar",
        build: chain_warnaar_cn3,
    },
    ChainEntry {
        id: "warnaar_cn33",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Warnaar",
        build: chain_warnaar_cn33,
    },
    ChainEntry {
        id: "new_cn333",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "McLaughlin-Zimmer",
        build: chain_new_cn333,
    },
    ChainEntry {
        id: "warnaar_cn5",
        kind: PairKind::Wp,
        required_extras: &[],
        source: "Warnaar",
        build: chain_warnaar_cn5,
    },
    ChainEntry {
        id: "bailey_d4",
        kind: PairKind::Bailey,
        required_extras: &[],
        source: "classical Bailey chain",
        build: chain_bailey_d4,
    },
    ChainEntry {
        id: "bailey_d1",
        kind: PairKind::Bailey,
        required_extras: &[],
        source: "classical Bailey chain",
        build: chain_bailey_d1,
    },
];

/// All chains, WP chains first, then the k = 0 Bailey chains.
pub fn list_chains() -> &'static [ChainEntry] {
    &CHAINS
}

pub fn find(id: &str) -> Option<&'static ChainEntry> {
    CHAINS.iter().find(|c| c.id == id)
}

pub fn apply_chain(id: &str, base: &WPPairGen) -> Result<WPPairGen, Error> {
    find(id)
        .map(|c| c.apply(base))
        .ok_or_else(|| Error::UnknownChain(id.to_string()))
}

/// The general-theorem instance a named chain is a specialization of:
/// same (e, c, g) data, but evaluated through the brute-force general
/// construction instead of the displayed closed form.  Supported for
/// the ten WP chains; the Bailey chains are k -> 0 limits outside the
/// general theorems' hypotheses.
pub fn general_instantiation(id: &str, base: &WPPairGen) -> Result<WPPairGen, Error> {
    let e_a: ParamExpr = Arc::new(|b| Ok(b.a));
    match id {
        "andrews_1" => {
            let c: ParamExpr =
                Arc::new(|b| Ok(b.k * b.extra("rho1")? * b.extra("rho2")? / (b.a * b.q)));
            let g: WeightSeq = Arc::new(|n, b| {
                let (r1, r2) = (b.extra("rho1")?, b.extra("rho2")?);
                let pt = b.point();
                Ok(poch_ratio(
                    &[r1, r2],
                    &[b.a * b.q / r1, b.a * b.q / r2],
                    b.q,
                    n,
                    pt,
                )? * (b.a * b.q / (r1 * r2)).value(pt).ipow(n as i32)?)
            });
            Ok(general_chain_a(base, e_a, c, g))
        }
        "andrews_2" => {
            let c: ParamExpr = Arc::new(|b| Ok(b.q * b.a * b.a / b.k));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                Ok(mono_poch(b.q * b.a * b.a / b.k, b.q, 2 * n, pt)
                    .div(&mono_poch(b.k, b.q, 2 * n, pt))?
                    * (b.k * b.k / (b.q * b.a * b.a)).value(pt).ipow(n as i32)?)
            });
            Ok(general_chain_a(base, e_a, c, g))
        }
        "warnaar_sigma1" => {
            let c: ParamExpr = Arc::new(|b| Ok(b.a * b.a / b.k));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                let ni = n as i32;
                let rk = b.k.sqrt()?;
                Ok(one_minus(rk, pt).div(&one_minus(rk * b.q.pow(ni), pt))?
                    * one_plus(b.a * b.q.pow(ni) / rk, pt).div(&one_plus(b.a / rk, pt))?
                    * mono_poch(b.a * b.a / b.k, b.q, 2 * n, pt)
                        .div(&mono_poch(b.k, b.q, 2 * n, pt))?
                    * (b.k * b.k / (b.a * b.a)).value(pt).ipow(ni)?)
            });
            Ok(general_chain_a(base, e_a, c, g))
        }
        "liu_ma" => {
            let c: ParamExpr = Arc::new(|b| Ok(b.a * b.a / b.k));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                let q2 = b.q * b.q;
                Ok(mono_poch(b.q * b.a * b.a / b.k, q2, n, pt)
                    .div(&mono_poch(b.k * b.q, q2, n, pt))?
                    * (-(b.k / b.a)).value(pt).ipow(n as i32)?)
            });
            Ok(general_chain_a(base, e_a, c, g))
        }
        "new_cn11" => {
            let c: ParamExpr = Arc::new(|b| Ok(b.a * b.a / (b.k * b.q)));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                Ok(mono_poch(b.a * b.a / b.k, b.q, 2 * n, pt)
                    .div(&mono_poch(b.k * b.q, b.q, 2 * n, pt))?
                    * (b.k * b.k * b.q / (b.a * b.a)).value(pt).ipow(n as i32)?)
            });
            Ok(general_chain_a(base, e_a, c, g))
        }
        "new_cn2" => {
            let e: ParamExpr = Arc::new(|b| Ok(b.a * b.a));
            let c: ParamExpr = Arc::new(|b| Ok(b.a * b.k / b.q));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                let ni = n as i32;
                Ok(one_plus(b.a, pt)
                    .div(&one_plus(b.a * b.q.pow(2 * ni), pt))?
                    * b.q.pow(ni).value(pt))
            });
            Ok(general_chain_b(base, e, c, g))
        }
        "warnaar_cn3" => {
            let e: ParamExpr = Arc::new(|b| b.a.sqrt());
            let c: ParamExpr = Arc::new(|b| Ok(b.k / (b.q.sqrt()? * b.a.sqrt()?)));
            Ok(general_chain_c(base, e, c, unit_weight()))
        }
        "warnaar_cn33" => {
            let e: ParamExpr = Arc::new(|b| b.a.sqrt());
            let c: ParamExpr = Arc::new(|b| Ok(b.k / b.a.sqrt()?));
            let g: WeightSeq = Arc::new(|n, b| {
                let pt = b.point();
                let ni = n as i32;
                let p = b.q.sqrt()?;
                let ra = b.a.sqrt()?;
                Ok(one_plus(ra * p.pow(2 * ni), pt).div(&one_plus(ra, pt))?
                    * p.pow(-ni).value(pt))
            });
            Ok(general_chain_c(base, e, c, g))
        }
        "new_cn333" => {
            let e: ParamExpr = Arc::new(|b| b.a.sqrt());
            let c: ParamExpr = Arc::new(|b| Ok(b.k / b.a.sqrt()?));
            Ok(general_chain_c(base, e, c, unit_weight()))
        }
        "warnaar_cn5" => {
            let c: ParamExpr = Arc::new(|b| Ok(b.k * b.k / b.a));
            Ok(general_chain_d(base, e_a, c, unit_weight()))
        }
        _ => Err(Error::UnknownChain(id.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get_pair;
    use crate::roots::{sample_point, Gen};
    use crate::wp_core::{check_bailey_pair, check_wp_pair};

    const STD: [Gen; 5] = [Gen::Q, Gen::A, Gen::K, Gen::Rho1, Gen::Rho2];

    fn wp_bundle(seed: u64) -> ParamBundle {
        ParamBundle::standard(Arc::new(sample_point(seed, &STD)))
    }

    #[test]
    fn identity_instance_of_the_general_chain_telescopes() {
        // e = a, c = k, g = 1 collapses the double sum: the output pair
        // must equal the input pair value for value.
        let base = get_pair("pr2").unwrap();
        let out = general_chain_a(
            &base,
            Arc::new(|b| Ok(b.a)),
            Arc::new(|b| Ok(b.k)),
            unit_weight(),
        );
        let b = wp_bundle(0);
        for n in 0..=4 {
            assert_eq!((out.alpha)(n, &b).unwrap(), (base.alpha)(n, &b).unwrap());
            assert_eq!((out.beta)(n, &b).unwrap(), (base.beta)(n, &b).unwrap());
        }
    }

    #[test]
    fn named_chains_produce_wp_pairs() {
        let b = wp_bundle(0);
        for (chain, pair) in [("new_cn11", "singh"), ("warnaar_cn5", "pr4")] {
            let out = apply_chain(chain, &get_pair(pair).unwrap()).unwrap();
            let report = check_wp_pair(&out, &b, 3).unwrap();
            assert!(report.pass, "{} failed: {:?}", out.id, report.rows);
        }
    }

    #[test]
    fn bailey_chains_produce_bailey_pairs() {
        let b = ParamBundle::bailey(Arc::new(sample_point(0, &STD)));
        for (chain, pair) in [("bailey_d4", "unit_bailey"), ("bailey_d1", "singh_bailey")] {
            let out = apply_chain(chain, &get_pair(pair).unwrap()).unwrap();
            let report = check_bailey_pair(&out, &b, 3).unwrap();
            assert!(report.pass, "{} failed: {:?}", out.id, report.rows);
        }
    }

    #[test]
    fn named_chain_matches_its_general_instantiation() {
        let base = get_pair("pr2").unwrap();
        let named = apply_chain("warnaar_cn5", &base).unwrap();
        let general = general_instantiation("warnaar_cn5", &base).unwrap();
        let b = wp_bundle(0);
        for n in 0..=3 {
            assert_eq!((named.alpha)(n, &b).unwrap(), (general.alpha)(n, &b).unwrap());
            assert_eq!((named.beta)(n, &b).unwrap(), (general.beta)(n, &b).unwrap());
        }
    }

    #[test]
    fn involutive_chain_composes_to_identity() {
        let base = get_pair("pr2").unwrap();
        let twice = apply_chain("andrews_2", &apply_chain("andrews_2", &base).unwrap()).unwrap();
        let b = wp_bundle(0);
        for n in 0..=3 {
            assert_eq!((twice.alpha)(n, &b).unwrap(), (base.alpha)(n, &b).unwrap());
            assert_eq!((twice.beta)(n, &b).unwrap(), (base.beta)(n, &b).unwrap());
        }
    }

    #[test]
    fn registry_shape() {
        let ids: Vec<&str> = list_chains().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), 12);
        assert_eq!(ids[0], "andrews_1");
        assert_eq!(&ids[10..], &["bailey_d4", "bailey_d1"]);
        assert!(matches!(
            apply_chain("nope", &get_pair("unit").unwrap()),
            Err(Error::UnknownChain(_))
        ));
        assert!(matches!(
            general_instantiation("bailey_d4", &get_pair("unit").unwrap()),
            Err(Error::UnknownChain(_))
        ));
    }
}
