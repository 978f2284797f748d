//! Transformation identities between terminating q-series, verified by
//! exact evaluation.
//!
//! Each identity is a pair of closed expressions lhs(n, point) and
//! rhs(n, point) that agree for every n >= 0 at every non-degenerate
//! point.  The registry holds three groups:
//!
//!   * classical summations and transformations (Jackson's 8phi7 sum,
//!     a Gasper-Rahman 10phi9, an Andrews-Berkovich 10phi9, the
//!     q-analogue of Watson's 3F2 sum, Bailey's 10phi9 transformation,
//!     an Andrews-Berkovich 10W9 sum, a Warnaar 8W7 sum);
//!
//!   * families obtained by pushing each catalog pair through one of
//!     the chains (the _cn11, _cn2 and _cn333 suffixes name the chain
//!     used) and writing both sides in closed form.
//!
//! Verification samples the declared free generators, evaluates both
//! sides for n = 0..=n_max, and compares exactly; a degenerate point
//! (some denominator vanished) triggers resampling with seed+1, ...
//! Since both sides are rational functions of the point, exact equality
//! at a random point is overwhelming evidence, and equality at every
//! point of a family of seeds is what the test suite demands.

use serde::Serialize;

use crate::error::Error;
use crate::field::GaussianRational;
use crate::qseries::{eval_w, mono_poch, one_minus, one_plus, phi, poch_ratio};
use crate::roots::{sample_non_degenerate, Gen, ParamPoint, RootMonomial};
use crate::wp_core::CheckRow;

const A: RootMonomial = RootMonomial::generator(Gen::A);
const K: RootMonomial = RootMonomial::generator(Gen::K);
const Q: RootMonomial = RootMonomial::generator(Gen::Q);
const R1: RootMonomial = RootMonomial::generator(Gen::Rho1);
const R2: RootMonomial = RootMonomial::generator(Gen::Rho2);
const BF: RootMonomial = RootMonomial::generator(Gen::B);
const CF: RootMonomial = RootMonomial::generator(Gen::C);
const DF: RootMonomial = RootMonomial::generator(Gen::D);
const EF: RootMonomial = RootMonomial::generator(Gen::E);
const FF: RootMonomial = RootMonomial::generator(Gen::F);

// Halved exponents: the square roots of the semantic parameters.
const RA: RootMonomial = RootMonomial::generator_pow(Gen::A, 8);
const RK: RootMonomial = RootMonomial::generator_pow(Gen::K, 8);
const RQ: RootMonomial = RootMonomial::generator_pow(Gen::Q, 8);

type V = Result<GaussianRational, Error>;

/// One side of an identity: exact value at (n, point).
pub type SideEval = fn(u32, &ParamPoint) -> V;

/// A registered identity: both sides plus the generators its sampler
/// must provision.
pub struct Identity {
    pub id: &'static str,
    pub free_generators: &'static [Gen],
    pub source: &'static str,
    /// Human-readable side conditions baked into the displays.
    pub constraints: &'static str,
    pub lhs: SideEval,
    pub rhs: SideEval,
}

const G_AK: &[Gen] = &[Gen::Q, Gen::A, Gen::K];
const G_AK_RHO: &[Gen] = &[Gen::Q, Gen::A, Gen::K, Gen::Rho1, Gen::Rho2];
const G_AB: &[Gen] = &[Gen::Q, Gen::A, Gen::B];
const G_ABCD: &[Gen] = &[Gen::Q, Gen::A, Gen::C, Gen::B, Gen::D];
const G_SIXFREE: &[Gen] = &[Gen::Q, Gen::A, Gen::E, Gen::C, Gen::B, Gen::D, Gen::F];

// ---------------------------------------------------------------------------
// classical summations and transformations
// ---------------------------------------------------------------------------

// Jackson's sum of a terminating very-well-poised 8phi7 with argument q
// and a^2 q^(n+1) = bcde; e is eliminated through that relation.
fn jackson_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let e = A * A * Q.pow(ni + 1) / (BF * CF * DF);
    eval_w(A, &[BF, CF, DF, e, Q.pow(-ni)], Q, Q, n, pt)
}

fn jackson_rhs(n: u32, pt: &ParamPoint) -> V {
    poch_ratio(
        &[A * Q, A * Q / (BF * CF), A * Q / (BF * DF), A * Q / (CF * DF)],
        &[A * Q / BF, A * Q / CF, A * Q / DF, A * Q / (BF * CF * DF)],
        Q,
        n,
        pt,
    )
}

// A Gasper-Rahman 10phi9 summation with argument q.
fn gr_10phi9_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            A * Q / RK,
            -(A * Q / RK),
            K / (A * Q),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            RK,
            -RK,
            A * A * Q * Q / K,
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn gr_10phi9_rhs(n: u32, pt: &ParamPoint) -> V {
    poch_ratio(&[A * Q, K * K / (Q * A * A)], &[K, K / A], Q, n, pt)
}

// An Andrews-Berkovich 10phi9 summation with argument q.
fn ab_10phi9_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            A / RK,
            -(A * Q / RK),
            K / A,
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            Q * RK,
            -RK,
            A * A * Q / K,
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn ab_10phi9_rhs(n: u32, pt: &ParamPoint) -> V {
    poch_ratio(&[A * Q, RK, K * K / (A * A)], &[K, K / A, Q * RK], Q, n, pt)
}

// The q-analogue of Watson's 3F2 sum; the free parameters are lambda
// (sampled through the a generator) and b.
fn q_watson_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let lam = A;
    let rl = lam.sqrt()?;
    let rqb = (Q / BF).sqrt()?;
    let rqb2 = (Q * BF).sqrt()?;
    phi(
        &[
            lam,
            Q * rl,
            -(Q * rl),
            Q.pow(-ni),
            BF * Q.pow(ni),
            lam * rqb,
            -(lam * rqb),
            BF / lam,
        ],
        &[
            rl,
            -rl,
            lam * Q.pow(ni + 1),
            (lam / BF) * Q.pow(1 - ni),
            lam * lam * Q / BF,
            rqb2,
            -rqb2,
        ],
        Q,
        -(Q * lam / BF),
        n,
        pt,
    )
}

fn q_watson_rhs(n: u32, pt: &ParamPoint) -> V {
    if n % 2 == 1 {
        return Ok(GaussianRational::zero());
    }
    let lam = A;
    let q2 = Q * Q;
    Ok(mono_poch(lam * Q, Q, n, pt).div(&mono_poch(BF / lam, Q, n, pt))?
        * poch_ratio(
            &[Q, BF * BF / (lam * lam)],
            &[BF * Q, q2 * lam * lam / BF],
            q2,
            n / 2,
            pt,
        )?)
}

// Shared right prefactor of the whole _cn11 family:
//   (1-k)/(1-kq^(2n)) (aq, k^2 q/a^2; q)_n / ((k, k/a; q)_n).
fn pref_cn11(n: u32, pt: &ParamPoint, a: RootMonomial, k: RootMonomial, q: RootMonomial) -> V {
    let w = one_minus(k, pt).div(&one_minus(k * q.pow(2 * n as i32), pt))?;
    Ok(w * poch_ratio(&[a * q, k * k * q / (a * a)], &[k, k / a], q, n, pt)?)
}

// The 10phi9 summation produced by running the unit pair through the
// c = a^2/(kq) chain.
fn unit_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            A / RK,
            -(A / RK),
            K * Q / A,
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            Q * RK,
            -(Q * RK),
            A * A / K,
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn unit_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    pref_cn11(n, pt, A, K, Q)
}

// Bailey's 10phi9 transformation with lambda = qa^2/(bcd).
fn bailey_10phi9_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let lam = Q * A * A / (BF * CF * DF);
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            BF,
            CF,
            DF,
            EF,
            FF,
            lam * A * Q.pow(ni + 1) / (EF * FF),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            A * Q / BF,
            A * Q / CF,
            A * Q / DF,
            A * Q / EF,
            A * Q / FF,
            (EF * FF / lam) * Q.pow(-ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn bailey_10phi9_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let lam = Q * A * A / (BF * CF * DF);
    let rl = lam.sqrt()?;
    Ok(poch_ratio(
        &[A * Q, A * Q / (EF * FF), lam * Q / EF, lam * Q / FF],
        &[A * Q / EF, A * Q / FF, lam * Q / (EF * FF), lam * Q],
        Q,
        n,
        pt,
    )? * phi(
        &[
            lam,
            Q * rl,
            -(Q * rl),
            lam * BF / A,
            lam * CF / A,
            lam * DF / A,
            EF,
            FF,
            lam * A * Q.pow(ni + 1) / (EF * FF),
            Q.pow(-ni),
        ],
        &[
            rl,
            -rl,
            A * Q / BF,
            A * Q / CF,
            A * Q / DF,
            lam * Q / EF,
            lam * Q / FF,
            (EF * FF / A) * Q.pow(-ni),
            lam * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )?)
}

// An Andrews-Berkovich very-well-poised 10W9 summation on base sqrt(a),
// with fourth-root and purely imaginary parameters.
fn ab_10w9_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let qa = A.sqrt()?.sqrt()?;
    let iqa = RootMonomial::i() * Q * qa;
    eval_w(
        RA,
        &[
            iqa,
            -iqa,
            RK * Q.pow(ni),
            -(RK * Q.pow(ni)),
            Q.pow(-ni),
            -(Q.pow(-ni)),
            A / K,
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn ab_10w9_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    Ok(
        poch_ratio(&[A * q2, A / K], &[K / A, K * K * q2 / A], q2, n, pt)?
            * mono_poch(-(K * Q / RA), Q, 2 * n, pt)
                .div(&mono_poch(-RA, Q, 2 * n, pt))?
            * (K / (A * Q)).value(pt).ipow(ni)?,
    )
}

// A Warnaar 8W7 summation with argument q^2; a and b free.
fn warnaar_8w7_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rb = BF.sqrt()?;
    eval_w(
        A,
        &[
            BF,
            (A / rb) * Q.pow(ni),
            -((A / rb) * Q.pow(ni)),
            Q.pow(-ni),
            -(Q.pow(-ni)),
        ],
        Q,
        Q * Q,
        n,
        pt,
    )
}

fn warnaar_8w7_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    Ok(mono_poch(-(A / BF), Q, 2 * n, pt)
        .div(&mono_poch(-(A * Q), Q, 2 * n, pt))?
        * poch_ratio(
            &[A * A * q2, BF],
            &[BF.inv(), A * A * q2 / (BF * BF)],
            q2,
            n,
            pt,
        )?
        * (Q / BF).value(pt).ipow(ni)?)
}

// ---------------------------------------------------------------------------
// the _cn11 family: catalog pairs through the c = a^2/(kq) chain
// ---------------------------------------------------------------------------

fn singh_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            A / RK,
            -(A / RK),
            R1,
            R2,
            K * Q * Q / (R1 * R2),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            Q * RK,
            -(Q * RK),
            A * Q / R1,
            A * Q / R2,
            A * R1 * R2 / (K * Q),
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn singh_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let s = (A * A / (K * Q)).sqrt()?;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                A * A / (K * Q),
                Q * s,
                -(Q * s),
                A * R1 / (K * Q),
                A * R2 / (K * Q),
                A * Q / (R1 * R2),
                Q.pow(-ni),
            ],
            &[
                s,
                -s,
                A * Q / R1,
                A * Q / R2,
                A * R1 * R2 / (K * Q),
                (A * A / (K * K)) * Q.pow(-ni),
            ],
            Q,
            Q,
            n,
            pt,
        )?)
}

fn pr2_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            Q * rkq,
            -(Q * rkq),
            A / (K * Q * Q),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            A / rkq,
            -(A / rkq),
            K * Q.pow(3),
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn pr2_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let s = (A * A / (K * Q)).sqrt()?;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                Q * s,
                -(Q * s),
                (A * A / (K * K)) * Q.pow(-3),
                Q.pow(-ni),
            ],
            &[s, -s, (A * A / (K * K)) * Q.pow(-ni)],
            Q,
            Q,
            n,
            pt,
        )?)
}

fn pr3_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            -(A * rqk),
            -(Q * rkq),
            A / (K * Q),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            -rkq,
            -(A / rkq),
            K * Q * Q,
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn pr3_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    let s = (A * A / (K * Q)).sqrt()?;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                Q * s,
                -(Q * s),
                A / rkq,
                (A * A / (K * K)) * Q.pow(-2),
                Q.pow(-ni),
            ],
            &[s, -s, A * rqk, (A * A / (K * K)) * Q.pow(-ni)],
            Q,
            Q,
            n,
            pt,
        )?)
}

// The lhs is a very-well-poised 16W15 on base q^2; the rhs series
// carries argument -a/k.
fn pr4_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let q2 = Q * Q;
    eval_w(
        A,
        &[
            A / RK,
            -(A / RK),
            A * rqk,
            -(A * rqk),
            A * Q / RK,
            -(A * Q / RK),
            A * Q * rqk,
            -(A * Q * rqk),
            K * K * q2 / (A * A),
            K * Q.pow(ni),
            K * Q.pow(ni + 1),
            Q.pow(-ni),
            Q.pow(1 - ni),
        ],
        q2,
        q2,
        n,
        pt,
    )
}

fn pr4_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rkq = (K * Q).sqrt()?;
    let raq = (A / Q).sqrt()?;
    let raq2 = (A * Q).sqrt()?;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                A * Q / rkq,
                -(A * Q / rkq),
                A * A / (K * Q),
                A * raq / K,
                -(A * raq / K),
                K * Q / A,
                Q.pow(-ni),
            ],
            &[
                A / rkq,
                -(A / rkq),
                raq2,
                -raq2,
                A.pow(3) / (K * K * Q),
                (A * A / (K * K)) * Q.pow(-ni),
            ],
            Q,
            -(A / K),
            n,
            pt,
        )?)
}

fn bressoud1_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let last = A * A * Q.pow(2 * ni + 2);
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let t = poch_ratio(
            &[Q * RA, -(Q * RA), A, K * K * Q.pow(3) / (A * A)],
            &[RA, -RA, A.pow(3) / (Q * Q * K * K), Q],
            Q,
            j,
            pt,
        )? * poch_ratio(
            &[
                A * A / K,
                -(A * A / K),
                A * A * Q / K,
                -(A * A * Q / K),
                K * K * Q.pow(2 * ni),
                Q.pow(-2 * ni),
            ],
            &[
                K * Q,
                -(K * Q),
                K * q2,
                -(K * q2),
                (A * A / (K * K)) * Q.pow(2 - 2 * ni),
                last,
            ],
            q2,
            j,
            pt,
        )?;
        tot = tot + t * Q.pow(j as i32).value(pt);
    }
    Ok(tot)
}

fn bressoud1_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    Ok(pref_cn11(n, pt, A * A, K * K, q2)?
        * phi(
            &[
                A * A * Q / K,
                -(A * A * Q / K),
                A.pow(4) / (K * K * q2),
                -(A.pow(3) / (K * K * q2)),
                -(A.pow(3) / (K * K * Q)),
                K * K * Q.pow(4) / (A * A),
                Q.pow(-2 * ni),
            ],
            &[
                A * A / (K * Q),
                -(A * A / (K * Q)),
                -(A * Q),
                -(A * q2),
                A.pow(6) / (K.pow(4) * Q.pow(4)),
                (A.pow(4) / K.pow(4)) * Q.pow(-2 * ni),
            ],
            q2,
            A * A / (K * K * Q),
            n,
            pt,
        )?)
}

fn bressoud2_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let last = A * A * Q.pow(2 * ni + 2);
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let t = poch_ratio(
            &[A, K * K * q2 / (A * A)],
            &[A.pow(3) / (Q * K * K), Q],
            Q,
            j,
            pt,
        )? * poch_ratio(
            &[
                A * q2,
                -(A * q2),
                A * A / K,
                -(A * A / K),
                A * A * Q / K,
                -(A * A * Q / K),
                K * K * Q.pow(2 * ni),
                Q.pow(-2 * ni),
            ],
            &[
                A,
                -A,
                K * Q,
                -(K * Q),
                K * q2,
                -(K * q2),
                (A * A / (K * K)) * Q.pow(2 - 2 * ni),
                last,
            ],
            q2,
            j,
            pt,
        )?;
        tot = tot + t * Q.pow(j as i32).value(pt);
    }
    Ok(tot)
}

fn bressoud2_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    Ok(pref_cn11(n, pt, A * A, K * K, q2)?
        * phi(
            &[
                A * A * Q / K,
                -(A * A * Q / K),
                A.pow(4) / (K * K * q2),
                -(A.pow(3) / (K * K * Q)),
                -(A.pow(3) / (K * K)),
                K * K * q2 / (A * A),
                Q.pow(-2 * ni),
            ],
            &[
                A * A / (K * Q),
                -(A * A / (K * Q)),
                -A,
                -(A * Q),
                A.pow(6) / (K.pow(4) * q2),
                (A.pow(4) / K.pow(4)) * Q.pow(-2 * ni),
            ],
            q2,
            A * A / (K * K * Q),
            n,
            pt,
        )?)
}

fn mz1_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    phi(
        &[
            A / RK,
            -(A / RK),
            A * rqk,
            -(A * rqk),
            K * K * Q.pow(3) / (A * A),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            rkq,
            -rkq,
            Q * RK,
            -(Q * RK),
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        Q,
        n,
        pt,
    )
}

fn mz1_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rkq = (K * Q).sqrt()?;
    let raq2 = (A * Q).sqrt()?;
    let a32 = A * RA;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                A * Q / rkq,
                -(A * Q / rkq),
                A * A / (K * Q),
                a32 / (K * Q),
                -(a32 / (K * Q)),
                a32 / (K * RQ),
                -(a32 / (K * RQ)),
                K * Q * Q / A,
                Q.pow(-ni),
            ],
            &[
                A / rkq,
                -(A / rkq),
                raq2,
                -raq2,
                Q * RA,
                -(Q * RA),
                A.pow(3) / (K * K * Q * Q),
                (A * A / (K * K)) * Q.pow(-ni),
            ],
            Q,
            Q,
            n,
            pt,
        )?)
}

fn mz2_cn11_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rqk = (Q / K).sqrt()?;
    let rkq = (K * Q).sqrt()?;
    let q2 = Q * Q;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * rqk,
            -(A * rqk),
            A / (K * Q),
            K * Q.pow(ni),
            Q.pow(-ni),
        ],
        &[
            RA,
            -RA,
            rkq,
            -rkq,
            q2 * K,
            (A / K) * Q.pow(1 - ni),
            A * Q.pow(ni + 1),
        ],
        Q,
        -(K * q2 / A),
        n,
        pt,
    )
}

fn mz2_cn11_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let rkq = (K * Q).sqrt()?;
    let q2 = Q * Q;
    Ok(pref_cn11(n, pt, A, K, Q)?
        * phi(
            &[
                A * q2 / rkq,
                -(A * q2 / rkq),
                A * A / (K * Q),
                A * A / (K * K * q2),
                Q.pow(-ni),
                Q.pow(1 - ni),
            ],
            &[
                A / rkq,
                -(A / rkq),
                Q.pow(3) * K,
                (A * A / (K * K)) * Q.pow(-ni),
                (A * A / (K * K)) * Q.pow(1 - ni),
            ],
            q2,
            q2,
            n,
            pt,
        )?)
}

// ---------------------------------------------------------------------------
// the _cn2 family: catalog pairs through the (a^2, ak/q) chain
// ---------------------------------------------------------------------------

// Shared right prefactor of the _cn2 family.
fn pref_cn2(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    Ok(poch_ratio(&[K / A, -Q], &[-K, A * Q], Q, n, pt)?
        * mono_poch(A * K * Q, q2, n, pt).div(&mono_poch(K * Q / A, q2, n, pt))?)
}

// Shared outer sum of the _cn2 family: weights
// (kq^n, q^(-n); q)_j / ((a/k q^(1-n), a q^(1+n); q)_j) around a
// per-identity inner factor.
fn cn2_core(n: u32, pt: &ParamPoint, jf: impl Fn(u32) -> V) -> V {
    let ni = n as i32;
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let w = poch_ratio(
            &[K * Q.pow(ni), Q.pow(-ni)],
            &[(A / K) * Q.pow(1 - ni), A * Q.pow(1 + ni)],
            Q,
            j,
            pt,
        )?;
        tot = tot + w * jf(j)?;
    }
    Ok(tot)
}

fn singh_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    eval_w(
        A * K / Q,
        &[
            -A,
            -(A * Q),
            K * R1 / (A * Q),
            K * R2 / (A * Q),
            A * A * q2 / (R1 * R2),
            K * K * Q.pow(2 * ni),
            Q.pow(-2 * ni),
        ],
        q2,
        q2 * A / K,
        n,
        pt,
    )
}

fn singh_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let jf = |j: u32| -> V {
        Ok(poch_ratio(
            &[A * A, A * q2, R1, R2, A.pow(3) * Q.pow(3) / (K * R1 * R2)],
            &[
                A,
                A * A * q2 / R1,
                A * A * q2 / R2,
                K * R1 * R2 / (A * Q),
                q2,
            ],
            q2,
            j,
            pt,
        )? * Q.pow(j as i32).value(pt))
    };
    Ok(pref_cn2(n, pt)? * cn2_core(n, pt, jf)?)
}

fn pr2_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let s = (A * K / Q).sqrt()?;
    phi(
        &[
            q2 * s,
            -(q2 * s),
            -A,
            -(A * Q),
            K * K / (A * A * Q.pow(4)),
            K * K * Q.pow(2 * ni),
            Q.pow(-2 * ni),
        ],
        &[
            s,
            -s,
            -K,
            -(K * Q),
            A * K * Q.pow(2 * ni + 1),
            (A / K) * Q.pow(1 - 2 * ni),
        ],
        q2,
        q2 * A / K,
        n,
        pt,
    )
}

fn pr2_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let q4 = q2 * q2;
    let jf = |j: u32| -> V {
        Ok(poch_ratio(
            &[A * A, A * q2, K / (A * Q.pow(3))],
            &[A, A.pow(3) * Q.pow(5) / K, q2],
            q2,
            j,
            pt,
        )? * poch_ratio(
            &[Q.pow(3) * A.pow(3) / K, Q.pow(5) * A.pow(3) / K],
            &[A * K / Q, A * K * Q],
            q4,
            j,
            pt,
        )? * Q.pow(j as i32).value(pt))
    };
    Ok(pref_cn2(n, pt)? * cn2_core(n, pt, jf)?)
}

fn pr3_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let s = (A * K / Q).sqrt()?;
    phi(
        &[
            -(q2 * s),
            -A,
            -(A * Q),
            K * K / (A * A * q2),
            K * K * Q.pow(2 * ni),
            Q.pow(-2 * ni),
        ],
        &[
            -s,
            -K,
            -(K * Q),
            A * K * Q.pow(2 * ni + 1),
            (A / K) * Q.pow(1 - 2 * ni),
        ],
        q2,
        q2 * A / K,
        n,
        pt,
    )
}

fn pr3_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let q4 = q2 * q2;
    let w1 = (A.pow(3) * Q / K).sqrt()?;
    let w2 = (A.pow(3) * Q.pow(5) / K).sqrt()?;
    let w3 = (A * K * Q.pow(3)).sqrt()?;
    let w4 = (A * K / Q).sqrt()?;
    let jf = move |j: u32| -> V {
        Ok(poch_ratio(
            &[A * A, A * q2, K / (A * Q), w1, -w2],
            &[A, A.pow(3) * Q.pow(3) / K, w3, -w4, q2],
            q2,
            j,
            pt,
        )? * poch_ratio(&[Q.pow(3) * A.pow(3) / K], &[A * K * Q], q4, j, pt)?
            * Q.pow(j as i32).value(pt))
    };
    Ok(pref_cn2(n, pt)? * cn2_core(n, pt, jf)?)
}

fn pr4_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    eval_w(
        A * K / Q,
        &[-A, K, A * Q / K, K * K * Q.pow(2 * ni), Q.pow(-2 * ni)],
        q2,
        -Q,
        n,
        pt,
    )
}

fn pr4_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    Ok(pref_cn2(n, pt)?
        * eval_w(
            A,
            &[
                -A,
                A * Q / K,
                -(A * Q / K),
                K * Q.pow(ni),
                K * Q.pow(1 + ni),
                Q.pow(1 - ni),
                Q.pow(-ni),
            ],
            q2,
            q2,
            n,
            pt,
        )?)
}

fn bressoud1_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    eval_w(
        A * K / Q,
        &[
            -A,
            -(K / Q),
            A * Q.pow(3) / K,
            K * K * Q.pow(2 * ni),
            Q.pow(-2 * ni),
        ],
        q2,
        RootMonomial::one(),
        n,
        pt,
    )
}

fn bressoud1_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let ia = RootMonomial::i() * RA;
    Ok(pref_cn2(n, pt)?
        * eval_w(
            A,
            &[ia, -ia, A * q2 / K, K * Q.pow(ni), Q.pow(-ni)],
            Q,
            RootMonomial::one(),
            n,
            pt,
        )?)
}

fn bressoud2_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    eval_w(
        A * K / Q,
        &[A * Q / K, K * K * Q.pow(2 * ni), Q.pow(-2 * ni)],
        q2,
        RootMonomial::one(),
        n,
        pt,
    )
}

fn bressoud2_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    Ok(pref_cn2(n, pt)?
        * eval_w(
            A,
            &[A * Q / K, K * Q.pow(ni), Q.pow(-ni)],
            Q,
            RootMonomial::one(),
            n,
            pt,
        )?)
}

fn mz1_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    eval_w(
        A * K / Q,
        &[
            -A,
            K,
            K / Q,
            -(K / Q),
            A * Q.pow(3) / K,
            K * K * Q.pow(2 * ni),
            Q.pow(-2 * ni),
        ],
        q2,
        q2 * A / K,
        n,
        pt,
    )
}

fn mz1_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let ji = j as i32;
        let t = one_plus(A, pt).div(&one_plus(A * Q.pow(2 * ji), pt))?
            * poch_ratio(
                &[A * Q * Q / K, -(A * Q * Q / K), K * Q.pow(ni), Q.pow(-ni)],
                &[(A / K) * Q.pow(1 - ni), A * Q.pow(1 + ni), -Q, Q],
                Q,
                j,
                pt,
            )?;
        tot = tot + t * Q.pow(ji).value(pt);
    }
    Ok(pref_cn2(n, pt)? * tot)
}

fn mz2_cn2_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let q4 = q2 * q2;
    eval_w(
        A * K / Q,
        &[
            -A,
            -(A * Q),
            -(A * q2),
            -(A * Q.pow(3)),
            K * K / (A * A * q2),
            K * K * Q.pow(2 * ni),
            K * K * Q.pow(2 + 2 * ni),
            Q.pow(2 - 2 * ni),
            Q.pow(-2 * ni),
        ],
        q4,
        q4 * A * A / (K * K),
        n,
        pt,
    )
}

fn mz2_cn2_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let q4 = q2 * q2;
    let jf = |j: u32| -> V {
        Ok(poch_ratio(
            &[A * A, A * q2, K / (A * Q)],
            &[A, A.pow(3) * Q.pow(3) / K, q2],
            q2,
            j,
            pt,
        )? * poch_ratio(&[A.pow(3) * Q.pow(3) / K], &[A * K * Q], q4, j, pt)?
            * (-(q2 * A / K)).value(pt).ipow(j as i32)?)
    };
    Ok(pref_cn2(n, pt)? * cn2_core(n, pt, jf)?)
}

// ---------------------------------------------------------------------------
// the _cn333 family: catalog pairs through the base-halving chain
// ---------------------------------------------------------------------------

// Shared right prefactor of the _cn333 family; `qm` is the base the
// display is written in (q for most rows, q^2 for the Bressoud rows).
fn pref_cn333(n: u32, pt: &ParamPoint, qm: RootMonomial) -> V {
    let a2 = A * A;
    let q2 = qm * qm;
    Ok(
        poch_ratio(&[a2 * q2, a2 / K], &[K / a2, K * K * q2 / a2], q2, n, pt)?
            * mono_poch(-(K / A), qm, 2 * n, pt)
                .div(&mono_poch(-(qm * A), qm, 2 * n, pt))?
            * (K * qm / a2).value(pt).ipow(n as i32)?,
    )
}

// Shared outer sum of the _cn333 family:
//   sum_j (1 - (k^2/a^2) qm^(4j)) / (1 - k^2/a^2)
//     * (k qm^(2nn), qm^(-2nn); qm^2)_j
//       / ((k^2/a^2 qm^(2nn+2), k/a^2 qm^(2-2nn); qm^2)_j)
//     * extra(j) * arg^j.
fn cn333_core(
    nn: u32,
    pt: &ParamPoint,
    extra: impl Fn(u32) -> V,
    arg: RootMonomial,
    qm: RootMonomial,
) -> V {
    let a2 = A * A;
    let q2 = qm * qm;
    let nni = nn as i32;
    let mut tot = GaussianRational::zero();
    for j in 0..=nn {
        let ji = j as i32;
        let t = one_minus(K * K * qm.pow(4 * ji) / a2, pt)
            .div(&one_minus(K * K / a2, pt))?
            * poch_ratio(
                &[K * qm.pow(2 * nni), qm.pow(-2 * nni)],
                &[
                    (K * K / a2) * qm.pow(2 * nni + 2),
                    (K / a2) * qm.pow(2 - 2 * nni),
                ],
                q2,
                j,
                pt,
            )?
            * extra(j)?;
        tot = tot + t * arg.value(pt).ipow(ji)?;
    }
    Ok(tot)
}

fn singh_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            R1,
            R2,
            A.pow(3) * Q / (K * R1 * R2),
            RK * Q.pow(ni),
            -(RK * Q.pow(ni)),
            Q.pow(-ni),
            -(Q.pow(-ni)),
        ],
        &[
            RA,
            -RA,
            A * Q / R1,
            A * Q / R2,
            K * R1 * R2 / (A * A),
            (A / RK) * Q.pow(1 - ni),
            -((A / RK) * Q.pow(1 - ni)),
            A * Q.pow(ni + 1),
            -(A * Q.pow(ni + 1)),
        ],
        Q,
        q2,
        n,
        pt,
    )
}

fn singh_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let extra = |j: u32| -> V {
        poch_ratio(
            &[
                K * R1 / (A * A),
                K * R2 / (A * A),
                K / A,
                A * Q / (R1 * R2),
            ],
            &[A * Q / R1, A * Q / R2, K * R1 * R2 / (A * A), Q],
            Q,
            j,
            pt,
        )
    };
    Ok(pref_cn333(n, pt, Q)? * cn333_core(n, pt, extra, Q, Q)?)
}

fn pr2_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let t = poch_ratio(
            &[A, Q * RA, -(Q * RA), K / (A * A * Q)],
            &[RA, -RA, Q, A.pow(3) * q2 / K],
            Q,
            j,
            pt,
        )? * poch_ratio(
            &[Q.pow(-2 * ni), K * Q.pow(2 * ni)],
            &[(A * A / K) * Q.pow(2 - 2 * ni), A * A * Q.pow(2 * ni + 2)],
            q2,
            j,
            pt,
        )? * mono_poch(Q * A.pow(3) / K, Q, 2 * j, pt)
            .div(&mono_poch(K / A, Q, 2 * j, pt))?;
        tot = tot + t * Q.pow(2 * j as i32).value(pt);
    }
    Ok(tot)
}

fn pr2_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let extra =
        |j: u32| -> V { poch_ratio(&[K * K / (Q * A.pow(4))], &[Q], Q, j, pt) };
    Ok(pref_cn333(n, pt, Q)? * cn333_core(n, pt, extra, Q, Q)?)
}

fn pr3_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let w1 = (Q * A / K).sqrt()?;
    let w2 = (A / K).sqrt()?;
    let w3 = (K * Q / A).sqrt()?;
    let w4 = (K / A).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            A * w1,
            -(A * w1),
            A * w2,
            -(A * Q * w2),
            K / (A * A),
            Q.pow(-ni),
            -(Q.pow(-ni)),
            RK * Q.pow(ni),
            -(RK * Q.pow(ni)),
        ],
        &[
            RA,
            -RA,
            w3,
            -w3,
            Q * w4,
            -w4,
            Q * A.pow(3) / K,
            (A / RK) * Q.pow(1 - ni),
            -((A / RK) * Q.pow(1 - ni)),
            A * Q.pow(ni + 1),
            -(A * Q.pow(ni + 1)),
        ],
        Q,
        q2,
        n,
        pt,
    )
}

fn pr3_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let w4 = (K / A).sqrt()?;
    let extra = move |j: u32| -> V {
        poch_ratio(&[w4, K * K / A.pow(4)], &[Q * w4, Q], Q, j, pt)
    };
    Ok(pref_cn333(n, pt, Q)? * cn333_core(n, pt, extra, Q, Q)?)
}

// Both sides compare at doubled index: the outer sum runs to 2n.
fn pr4_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let t = poch_ratio(
            &[Q.pow(-4 * ni), K * Q.pow(4 * ni)],
            &[(A * A / K) * Q.pow(2 - 4 * ni), A * A * Q.pow(4 * ni + 2)],
            q2,
            2 * j,
            pt,
        )? * poch_ratio(
            &[A, q2 * RA, -(q2 * RA), A.pow(4) / (K * K)],
            &[q2, RA, -RA, q2 * K * K / A.pow(3)],
            q2,
            j,
            pt,
        )?;
        tot = tot + t * Q.pow(4 * j as i32).value(pt);
    }
    Ok(tot)
}

fn pr4_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let raq = (A * Q).sqrt()?;
    let extra = move |j: u32| -> V {
        poch_ratio(
            &[
                K / A,
                K * raq / (A * A),
                -(K * raq / (A * A)),
                A * A / K,
            ],
            &[raq, -raq, Q * K * K / A.pow(3), Q],
            Q,
            j,
            pt,
        )
    };
    Ok(pref_cn333(2 * n, pt, Q)?
        * cn333_core(2 * n, pt, extra, -(K * Q / (A * A)), Q)?)
}

fn bressoud1_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q4 = Q.pow(4);
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let ji = j as i32;
        // The (1 - sqrt(a) q^(2j)) factor tracks the summation index.
        let t = one_minus(RA * Q.pow(2 * ji), pt).div(&one_minus(RA, pt))?
            * poch_ratio(
                &[Q.pow(-4 * ni), K * Q.pow(4 * ni)],
                &[(A * A / K) * Q.pow(4 - 4 * ni), A * A * Q.pow(4 * ni + 4)],
                q4,
                j,
                pt,
            )?
            * poch_ratio(
                &[RA, A * A * Q / K],
                &[Q, K * RA / (A * A)],
                Q,
                j,
                pt,
            )?;
        tot = tot + t * Q.pow(3 * ji).value(pt);
    }
    Ok(tot)
}

fn bressoud1_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let extra = |j: u32| -> V {
        Ok(poch_ratio(
            &[K / A, A * A * q2 / K],
            &[q2, K * K / A.pow(3)],
            q2,
            j,
            pt,
        )? * mono_poch(-(K * RA / (A * A)), Q, 2 * j, pt)
            .div(&mono_poch(-(Q * RA), Q, 2 * j, pt))?)
    };
    Ok(pref_cn333(n, pt, q2)?
        * cn333_core(n, pt, extra, K * Q / (A * A), q2)?)
}

fn bressoud2_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q4 = Q.pow(4);
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let ji = j as i32;
        let t = one_minus(A * Q.pow(4 * ji), pt).div(&one_minus(A, pt))?
            * poch_ratio(
                &[Q.pow(-4 * ni), K * Q.pow(4 * ni)],
                &[(A * A / K) * Q.pow(4 - 4 * ni), A * A * Q.pow(4 * ni + 4)],
                q4,
                j,
                pt,
            )?
            * poch_ratio(
                &[RA, A * A / K],
                &[Q, K * Q * RA / (A * A)],
                Q,
                j,
                pt,
            )?;
        tot = tot + t * Q.pow(3 * ji).value(pt);
    }
    Ok(tot)
}

fn bressoud2_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let q2 = Q * Q;
    let extra = |j: u32| -> V {
        poch_ratio(
            &[
                K / A,
                A * A / K,
                -(K * Q * RA / (A * A)),
                -(K * q2 * RA / (A * A)),
            ],
            &[q2, q2 * K * K / A.pow(3), -RA, -(Q * RA)],
            q2,
            j,
            pt,
        )
    };
    Ok(pref_cn333(n, pt, q2)?
        * cn333_core(n, pt, extra, K * Q / (A * A), q2)?)
}

fn mz1_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    phi(
        &[
            Q * A.pow(4) / (K * K),
            Q.pow(-ni),
            -(Q.pow(-ni)),
            RK * Q.pow(ni),
            -(RK * Q.pow(ni)),
        ],
        &[
            (A / RK) * Q.pow(1 - ni),
            -((A / RK) * Q.pow(1 - ni)),
            A * Q.pow(ni + 1),
            -(A * Q.pow(ni + 1)),
        ],
        Q,
        q2,
        n,
        pt,
    )
}

fn mz1_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let extra = |j: u32| -> V {
        Ok(poch_ratio(
            &[Q * A * A / K, K / A],
            &[K * K / A.pow(3), Q],
            Q,
            j,
            pt,
        )? * mono_poch(K * K / A.pow(3), Q, 2 * j, pt)
            .div(&mono_poch(A * Q, Q, 2 * j, pt))?)
    };
    Ok(pref_cn333(n, pt, Q)? * cn333_core(n, pt, extra, Q, Q)?)
}

// Both sides compare at doubled index: the lhs series runs to 2n.
fn mz2_cn333_lhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let w = (Q * K / A).sqrt()?;
    let raqk = (A * Q / K).sqrt()?;
    phi(
        &[
            A,
            Q * RA,
            -(Q * RA),
            K / (A * A),
            A * raqk,
            -(A * raqk),
            Q.pow(-2 * ni),
            -(Q.pow(-2 * ni)),
            RK * Q.pow(2 * ni),
            -(RK * Q.pow(2 * ni)),
        ],
        &[
            RA,
            -RA,
            Q * A.pow(3) / K,
            w,
            -w,
            (A / RK) * Q.pow(1 - 2 * ni),
            -((A / RK) * Q.pow(1 - 2 * ni)),
            A * Q.pow(2 * ni + 1),
            -(A * Q.pow(2 * ni + 1)),
        ],
        Q,
        -(q2 * A * A / K),
        2 * n,
        pt,
    )
}

fn mz2_cn333_rhs(n: u32, pt: &ParamPoint) -> V {
    let ni = n as i32;
    let q2 = Q * Q;
    let a2 = A * A;
    let mut tot = GaussianRational::zero();
    for j in 0..=n {
        let ji = j as i32;
        let t = one_minus((K * K / a2) * Q.pow(8 * ji), pt)
            .div(&one_minus(K * K / a2, pt))?
            * poch_ratio(
                &[K * Q.pow(4 * ni), Q.pow(-4 * ni)],
                &[
                    (K * K / a2) * Q.pow(4 * ni + 2),
                    (K / a2) * Q.pow(2 - 4 * ni),
                ],
                q2,
                2 * j,
                pt,
            )?
            * poch_ratio(
                &[K / A, K * K / A.pow(4)],
                &[q2, q2 * A.pow(3) / K],
                q2,
                j,
                pt,
            )?;
        tot = tot + t * Q.pow(2 * ji).value(pt);
    }
    Ok(pref_cn333(2 * n, pt, Q)? * tot)
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

static REGISTRY: [Identity; 32] = [
    Identity {
        id: "jackson",
        free_generators: G_ABCD,
        source: "Jackson",
        constraints: "8W7 argument q with a^2 q^(n+1) = bcde; e eliminated",
        lhs: jackson_lhs,
        rhs: jackson_rhs,
    },
    Identity {
        id: "gr_10phi9",
        free_generators: G_AK,
        source: "Gasper-Rahman",
        constraints: "",
        lhs: gr_10phi9_lhs,
        rhs: gr_10phi9_rhs,
    },
    Identity {
        id: "ab_10phi9",
        free_generators: G_AK,
        source: "Andrews-Berkovich",
        constraints: "",
        lhs: ab_10phi9_lhs,
        rhs: ab_10phi9_rhs,
    },
    Identity {
        id: "q_watson",
        free_generators: G_AB,
        source: "Andrews",
        constraints: "rhs vanishes for odd n; lambda sampled through a",
        lhs: q_watson_lhs,
        rhs: q_watson_rhs,
    },
    Identity {
        id: "unit_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: unit_cn11_lhs,
        rhs: unit_cn11_rhs,
    },
    Identity {
        id: "bailey_10phi9",
        free_generators: G_SIXFREE,
        source: "Bailey",
        constraints: "lambda = qa^2/(bcd)",
        lhs: bailey_10phi9_lhs,
        rhs: bailey_10phi9_rhs,
    },
    Identity {
        id: "ab_10w9",
        free_generators: G_AK,
        source: "Andrews-Berkovich",
        constraints: "needs a^(1/4) and the imaginary unit",
        lhs: ab_10w9_lhs,
        rhs: ab_10w9_rhs,
    },
    Identity {
        id: "warnaar_8w7",
        free_generators: G_AB,
        source: "Warnaar",
        constraints: "",
        lhs: warnaar_8w7_lhs,
        rhs: warnaar_8w7_rhs,
    },
    Identity {
        id: "singh_cn11",
        free_generators: G_AK_RHO,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: singh_cn11_lhs,
        rhs: singh_cn11_rhs,
    },
    Identity {
        id: "pr2_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr2_cn11_lhs,
        rhs: pr2_cn11_rhs,
    },
    Identity {
        id: "pr3_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr3_cn11_lhs,
        rhs: pr3_cn11_rhs,
    },
    Identity {
        id: "pr4_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "lhs on base q^2; rhs argument -a/k",
        lhs: pr4_cn11_lhs,
        rhs: pr4_cn11_rhs,
    },
    Identity {
        id: "bressoud1_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "mixed-base lhs, assembled term by term",
        lhs: bressoud1_cn11_lhs,
        rhs: bressoud1_cn11_rhs,
    },
    Identity {
        id: "bressoud2_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "mixed-base lhs, assembled term by term",
        lhs: bressoud2_cn11_lhs,
        rhs: bressoud2_cn11_rhs,
    },
    Identity {
        id: "mz1_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: mz1_cn11_lhs,
        rhs: mz1_cn11_rhs,
    },
    Identity {
        id: "mz2_cn11",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: mz2_cn11_lhs,
        rhs: mz2_cn11_rhs,
    },
    Identity {
        id: "singh_cn2",
        free_generators: G_AK_RHO,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: singh_cn2_lhs,
        rhs: singh_cn2_rhs,
    },
    Identity {
        id: "pr2_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr2_cn2_lhs,
        rhs: pr2_cn2_rhs,
    },
    Identity {
        id: "pr3_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr3_cn2_lhs,
        rhs: pr3_cn2_rhs,
    },
    Identity {
        id: "pr4_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr4_cn2_lhs,
        rhs: pr4_cn2_rhs,
    },
    Identity {
        id: "bressoud1_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "argument 1 on both sides",
        lhs: bressoud1_cn2_lhs,
        rhs: bressoud1_cn2_rhs,
    },
    Identity {
        id: "bressoud2_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "argument 1 on both sides",
        lhs: bressoud2_cn2_lhs,
        rhs: bressoud2_cn2_rhs,
    },
    Identity {
        id: "mz1_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: mz1_cn2_lhs,
        rhs: mz1_cn2_rhs,
    },
    Identity {
        id: "mz2_cn2",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: mz2_cn2_lhs,
        rhs: mz2_cn2_rhs,
    },
    Identity {
        id: "singh_cn333",
        free_generators: G_AK_RHO,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: singh_cn333_lhs,
        rhs: singh_cn333_rhs,
    },
    Identity {
        id: "pr2_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: pr2_cn333_lhs,
        rhs: pr2_cn333_rhs,
    },
    Identity {
        id: "pr3_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "needs sqrt(k/a) and friends",
        lhs: pr3_cn333_lhs,
        rhs: pr3_cn333_rhs,
    },
    Identity {
        id: "pr4_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "both sides at doubled index",
        lhs: pr4_cn333_lhs,
        rhs: pr4_cn333_rhs,
    },
    Identity {
        id: "bressoud1_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "display in base q^2",
        lhs: bressoud1_cn333_lhs,
        rhs: bressoud1_cn333_rhs,
    },
    Identity {
        id: "bressoud2_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "display in base q^2",
        lhs: bressoud2_cn333_lhs,
        rhs: bressoud2_cn333_rhs,
    },
    Identity {
        id: "mz1_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "",
        lhs: mz1_cn333_lhs,
        rhs: mz1_cn333_rhs,
    },
    Identity {
        id: "mz2_cn333",
        free_generators: G_AK,
        source: "McLaughlin-Zimmer",
        constraints: "both sides at doubled index",
        lhs: mz2_cn333_lhs,
        rhs: mz2_cn333_rhs,
    },
];

/// All identities, in registry order.
pub fn list_identities() -> &'static [Identity] {
    &REGISTRY
}

pub fn find(id: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|i| i.id == id)
}

pub fn get(id: &str) -> Result<&'static Identity, Error> {
    find(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

/// One identity checked at one point.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub id: String,
    pub point: ParamPoint,
    pub rows: Vec<CheckRow>,
    pub pass: bool,
}

/// Full registry, several points each; pass iff every row passes.
#[derive(Clone, Debug, Serialize)]
pub struct AggregateReport {
    pub results: Vec<IdentityResult>,
    pub pass: bool,
}

/// Evaluate both sides for n = 0..=n_max at a fixed point.
pub fn verify_identity_rows(
    ident: &Identity,
    pt: &ParamPoint,
    n_max: u32,
) -> Result<Vec<CheckRow>, Error> {
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let lhs = (ident.lhs)(n, pt)?;
        let rhs = (ident.rhs)(n, pt)?;
        let equal = lhs == rhs;
        rows.push(CheckRow {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
        });
    }
    Ok(rows)
}

/// Verify at an explicitly supplied point (no resampling: a degenerate
/// point surfaces as `Error::DivisionByZero`).
pub fn verify_identity(ident: &Identity, pt: &ParamPoint, n_max: u32) -> Result<IdentityResult, Error> {
    let rows = verify_identity_rows(ident, pt, n_max)?;
    let pass = rows.iter().all(|r| r.equal);
    Ok(IdentityResult {
        id: ident.id.to_string(),
        point: pt.clone(),
        rows,
        pass,
    })
}

/// Sample the identity's generators from `seed` (resampling on
/// degeneracy) and verify for n = 0..=n_max.
pub fn verify_at_seed(ident: &Identity, seed: u64, n_max: u32) -> Result<IdentityResult, Error> {
    let (pt, rows) = sample_non_degenerate(seed, ident.free_generators, |pt| {
        verify_identity_rows(ident, pt, n_max)
    })?;
    let pass = rows.iter().all(|r| r.equal);
    Ok(IdentityResult {
        id: ident.id.to_string(),
        point: pt,
        rows,
        pass,
    })
}

/// Seed offset between the points of one multi-point run.  Odd and
/// coprime to the leading permutation radices, so successive points
/// differ already in their first generators.
pub const SEED_STRIDE: u64 = 67;

/// Every registered identity at `points` seeded points each; the point
/// for index i is sampled from seed + SEED_STRIDE i (then resampled
/// upward on degeneracy).  Results are ordered by registry position,
/// then point index, regardless of how the work is scheduled.
pub fn verify_all(seed: u64, points: u32, n_max: u32) -> Result<AggregateReport, Error> {
    let mut results = Vec::with_capacity(REGISTRY.len() * points as usize);
    for ident in &REGISTRY {
        for i in 0..points {
            results.push(verify_at_seed(ident, seed + SEED_STRIDE * u64::from(i), n_max)?);
        }
    }
    let pass = results.iter().all(|r| r.pass);
    Ok(AggregateReport { results, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_ordered() {
        let ids: Vec<&str> = REGISTRY.iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), 32);
        assert_eq!(ids[0], "jackson");
        assert_eq!(ids[8], "singh_cn11");
        assert_eq!(ids[16], "singh_cn2");
        assert_eq!(ids[24], "singh_cn333");
        assert_eq!(ids[31], "mz2_cn333");
        assert!(matches!(get("nope"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn spot_identities_verify() {
        for id in ["jackson", "q_watson", "ab_10w9", "pr4_cn11", "mz2_cn333"] {
            let r = verify_at_seed(get(id).unwrap(), 0, 3).unwrap();
            assert!(r.pass, "{id} failed: {:?}", r.rows);
        }
    }

    #[test]
    fn q_watson_vanishes_at_odd_n() {
        let ident = get("q_watson").unwrap();
        let r = verify_at_seed(ident, 0, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows[1].lhs, "0");
        assert_eq!(r.rows[3].lhs, "0");
    }

    #[test]
    fn both_sides_are_one_at_n_zero() {
        for ident in list_identities() {
            let r = verify_at_seed(ident, 0, 0).unwrap();
            assert!(r.pass, "{} failed at n=0", ident.id);
        }
    }

    #[test]
    fn result_json_shape_is_stable() {
        let ident = get("unit_cn11").unwrap();
        let r = verify_at_seed(ident, 0, 0).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            r#"{"id":"unit_cn11","point":{"gq":"2/3","ga":"3/5","gk":"5/7"},"rows":[{"n":0,"lhs":"1","rhs":"1","equal":true}],"pass":true}"#
        );
    }
}
