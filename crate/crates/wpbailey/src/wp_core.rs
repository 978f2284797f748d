//! The WP-Bailey pair relation: evaluation, inversion, duality, checks.
//!
//! A WP-Bailey pair (alpha_n, beta_n) with parameters (a, k) and base q
//! satisfies
//!
//!   beta_n = sum_{j=0}^{n} (k/a;q)_{n-j} (k;q)_{n+j}
//!            / ((q;q)_{n-j} (aq;q)_{n+j}) * alpha_j.            (*)
//!
//! At k = 0 the k-Pochhammers collapse to 1 and (*) becomes the
//! classical Bailey pair relation.  The relation inverts (Warnaar):
//!
//!   alpha_n = (1-aq^(2n))/(1-a)
//!             * sum_{j=0}^{n} (1-kq^(2j))/(1-k)
//!               * (a/k;q)_{n-j} (a;q)_{n+j}
//!               / ((q;q)_{n-j} (kq;q)_{n+j}) * (k/a)^(n-j) beta_j,
//!
//! and carries an (a,k) <-> (k,a) duality that is an exact involution.
//!
//! Pairs are represented as closures from (n, bundle) to exact values,
//! so that chain constructions compose without any symbolic layer, and
//! checks are row-by-row exact comparisons at a sampled point.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Error;
use crate::field::GaussianRational;
use crate::qseries::{mono_poch, one_minus, poch_ratio};
use crate::roots::{Gen, ParamPoint, RootMonomial};

// ---------------------------------------------------------------------------
// parameter bundles
// ---------------------------------------------------------------------------

/// A sequence evaluator: exact value of alpha_n or beta_n at a bundle.
pub type PairEval = Arc<dyn Fn(u32, &ParamBundle) -> Result<GaussianRational, Error> + Send + Sync>;

/// The (a, k, q) slots a pair or chain sees, bound to an evaluation
/// point, plus named extra parameters (rho1, rho2, ...) some pairs
/// need.  Chains rebind a, k and sometimes q while keeping the point
/// and extras; bundles are therefore cheap to re-derive.
#[derive(Clone)]
pub struct ParamBundle {
    pub a: RootMonomial,
    pub k: RootMonomial,
    pub q: RootMonomial,
    point: Arc<ParamPoint>,
    extras: BTreeMap<String, RootMonomial>,
}

impl ParamBundle {
    pub fn new(a: RootMonomial, k: RootMonomial, q: RootMonomial, point: Arc<ParamPoint>) -> Self {
        ParamBundle { a, k, q, point, extras: BTreeMap::new() }
    }

    /// The standard WP bundle: a, k, q are the semantic parameters of
    /// their generators, and any sampled rho generators are attached as
    /// extras (negated when the point carries a sign flag for them).
    pub fn standard(point: Arc<ParamPoint>) -> Self {
        let mut b = ParamBundle::new(
            RootMonomial::generator(Gen::A),
            RootMonomial::generator(Gen::K),
            RootMonomial::generator(Gen::Q),
            point,
        );
        for (g, name) in [(Gen::Rho1, "rho1"), (Gen::Rho2, "rho2")] {
            if b.point.has(g) {
                let mut m = RootMonomial::generator(g);
                if b.point.is_negative(g) {
                    m = -m;
                }
                b.extras.insert(name.to_string(), m);
            }
        }
        b
    }

    /// The classical Bailey bundle: same as `standard` but with k = 0.
    pub fn bailey(point: Arc<ParamPoint>) -> Self {
        let mut b = ParamBundle::standard(point);
        b.k = RootMonomial::zero();
        b
    }

    pub fn with_extra(mut self, name: &str, m: RootMonomial) -> Self {
        self.extras.insert(name.to_string(), m);
        self
    }

    /// Same point and extras, new (a, k).
    pub fn with_ak(&self, a: RootMonomial, k: RootMonomial) -> Self {
        let mut b = self.clone();
        b.a = a;
        b.k = k;
        b
    }

    /// Same point and extras, new (a, k, q).
    pub fn with_akq(&self, a: RootMonomial, k: RootMonomial, q: RootMonomial) -> Self {
        let mut b = self.with_ak(a, k);
        b.q = q;
        b
    }

    pub fn point(&self) -> &ParamPoint {
        &self.point
    }

    pub fn extra(&self, name: &str) -> Result<RootMonomial, Error> {
        self.extras
            .get(name)
            .copied()
            .ok_or_else(|| Error::MissingExtra(name.to_string()))
    }
}

/// A WP-Bailey pair generator: two sequence evaluators plus the extra
/// parameters they need.  Chain outputs are values of this same type,
/// which is what makes chains composable.
#[derive(Clone)]
pub struct WPPairGen {
    pub id: String,
    pub alpha: PairEval,
    pub beta: PairEval,
    pub required_extras: Vec<&'static str>,
}

/// Which relation a pair (or chain) lives under: the WP relation with
/// k free, or its classical k = 0 Bailey limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Wp,
    Bailey,
}

// ---------------------------------------------------------------------------
// the defining relation and its inverse
// ---------------------------------------------------------------------------

/// Right-hand side of (*): the beta_n the relation forces from alpha.
pub fn beta_from_alpha(
    alpha: &PairEval,
    bundle: &ParamBundle,
    n: u32,
) -> Result<GaussianRational, Error> {
    let (a, k, q) = (bundle.a, bundle.k, bundle.q);
    let pt = bundle.point();
    let mut total = GaussianRational::zero();
    for j in 0..=n {
        let num = mono_poch(k / a, q, n - j, pt) * mono_poch(k, q, n + j, pt);
        let den = mono_poch(q, q, n - j, pt) * mono_poch(a * q, q, n + j, pt);
        total = total + num.div(&den)? * alpha(j, bundle)?;
    }
    Ok(total)
}

/// The same beta_n in the equivalent factored display (k != 0):
///
///   beta_n = (k/a,k;q)_n / ((aq,q;q)_n)
///            * sum_j (q^(-n),kq^n;q)_j / ((aq^(1-n)/k,aq^(n+1);q)_j)
///              * (qa/k)^j alpha_j.
///
/// Kept as an independent crosscheck of `beta_from_alpha`.
pub fn beta_from_alpha_factored(
    alpha: &PairEval,
    bundle: &ParamBundle,
    n: u32,
) -> Result<GaussianRational, Error> {
    let (a, k, q) = (bundle.a, bundle.k, bundle.q);
    let pt = bundle.point();
    let ni = n as i32;
    let pre = poch_ratio(&[k / a, k], &[a * q, q], q, n, pt)?;
    let mut total = GaussianRational::zero();
    for j in 0..=n {
        let t = poch_ratio(
            &[q.pow(-ni), k * q.pow(ni)],
            &[(a / k) * q.pow(1 - ni), a * q.pow(ni + 1)],
            q,
            j,
            pt,
        )?;
        total = total + t * (q * a / k).value(pt).ipow(j as i32)? * alpha(j, bundle)?;
    }
    Ok(pre * total)
}

/// Warnaar's inversion: the alpha_n forced by beta under (*).
pub fn alpha_from_beta(
    beta: &PairEval,
    bundle: &ParamBundle,
    n: u32,
) -> Result<GaussianRational, Error> {
    let (a, k, q) = (bundle.a, bundle.k, bundle.q);
    let pt = bundle.point();
    let ni = n as i32;
    let outer = one_minus(a * q.pow(2 * ni), pt).div(&one_minus(a, pt))?;
    let mut total = GaussianRational::zero();
    for j in 0..=n {
        let ji = j as i32;
        let w = one_minus(k * q.pow(2 * ji), pt).div(&one_minus(k, pt))?;
        let num = mono_poch(a / k, q, n - j, pt) * mono_poch(a, q, n + j, pt);
        let den = mono_poch(q, q, n - j, pt) * mono_poch(k * q, q, n + j, pt);
        let r = (k / a).value(pt).ipow(ni - ji)?;
        total = total + w * num.div(&den)? * r * beta(j, bundle)?;
    }
    Ok(outer * total)
}

/// The (a,k) <-> (k,a) duality:
///
///   alpha'_n(a,k) = (1-aq^(2n))/(1-a) (k/a)^n beta_n(k,a),
///   beta'_n(a,k)  = (1-k)/(1-kq^(2n)) (k/a)^n alpha_n(k,a).
///
/// Applying it twice gives back the original pair exactly.
pub fn dual_pair(pair: &WPPairGen) -> WPPairGen {
    let base_alpha = pair.alpha.clone();
    let base_beta = pair.beta.clone();
    let alpha: PairEval = Arc::new(move |n, b| {
        let ni = n as i32;
        let pt = b.point();
        let swapped = b.with_ak(b.k, b.a);
        let w = one_minus(b.a * b.q.pow(2 * ni), pt).div(&one_minus(b.a, pt))?;
        Ok(w * (b.k / b.a).value(pt).ipow(ni)? * base_beta(n, &swapped)?)
    });
    let beta: PairEval = Arc::new(move |n, b| {
        let ni = n as i32;
        let pt = b.point();
        let swapped = b.with_ak(b.k, b.a);
        let w = one_minus(b.k, pt).div(&one_minus(b.k * b.q.pow(2 * ni), pt))?;
        Ok(w * (b.k / b.a).value(pt).ipow(ni)? * base_alpha(n, &swapped)?)
    });
    WPPairGen {
        id: format!("dual({})", pair.id),
        alpha,
        beta,
        required_extras: pair.required_extras.clone(),
    }
}

// ---------------------------------------------------------------------------
// checks and reports
// ---------------------------------------------------------------------------

/// One exact comparison; lhs/rhs are rendered values, kept as strings
/// so reports serialize without loss.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// The result of checking one subject at one point up to a depth.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub subject: String,
    pub point: ParamPoint,
    pub depth: u32,
    pub rows: Vec<CheckRow>,
    pub pass: bool,
}

impl CheckReport {
    pub(crate) fn build(
        subject: String,
        point: ParamPoint,
        depth: u32,
        rows: Vec<CheckRow>,
    ) -> Self {
        let pass = rows.iter().all(|r| r.equal);
        CheckReport { subject, point, depth, rows, pass }
    }
}

/// Verify that the pair's own beta matches the beta forced from its
/// alpha by the defining relation, for n = 0..=depth.  A degenerate
/// point surfaces as `Error::DivisionByZero`; callers resample.
pub fn check_wp_pair(
    pair: &WPPairGen,
    bundle: &ParamBundle,
    depth: u32,
) -> Result<CheckReport, Error> {
    let mut rows = Vec::with_capacity(depth as usize + 1);
    for n in 0..=depth {
        let lhs = (pair.beta)(n, bundle)?;
        let rhs = beta_from_alpha(&pair.alpha, bundle, n)?;
        let equal = lhs == rhs;
        rows.push(CheckRow { n, lhs: lhs.to_string(), rhs: rhs.to_string(), equal });
    }
    Ok(CheckReport::build(
        pair.id.clone(),
        bundle.point().clone(),
        depth,
        rows,
    ))
}

/// Verify the classical (k = 0) Bailey relation
///
///   beta_n = sum_{j=0}^{n} alpha_j / ((q;q)_{n-j} (aq;q)_{n+j})
///
/// directly, without going through the WP weights at all.
pub fn check_bailey_pair(
    pair: &WPPairGen,
    bundle: &ParamBundle,
    depth: u32,
) -> Result<CheckReport, Error> {
    assert!(bundle.k.is_zero(), "check_bailey_pair requires a k = 0 bundle");
    let (a, q) = (bundle.a, bundle.q);
    let pt = bundle.point();
    let mut rows = Vec::with_capacity(depth as usize + 1);
    for n in 0..=depth {
        let lhs = (pair.beta)(n, bundle)?;
        let mut rhs = GaussianRational::zero();
        for j in 0..=n {
            let den = mono_poch(q, q, n - j, pt) * mono_poch(a * q, q, n + j, pt);
            rhs = rhs + (pair.alpha)(j, bundle)?.div(&den)?;
        }
        let equal = lhs == rhs;
        rows.push(CheckRow { n, lhs: lhs.to_string(), rhs: rhs.to_string(), equal });
    }
    Ok(CheckReport::build(
        pair.id.clone(),
        bundle.point().clone(),
        depth,
        rows,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::sample_point;

    const STD: [Gen; 3] = [Gen::Q, Gen::A, Gen::K];

    fn std_bundle(seed: u64) -> ParamBundle {
        ParamBundle::standard(Arc::new(sample_point(seed, &STD)))
    }

    /// An arbitrary (not WP) test sequence: deterministic, nonzero,
    /// with an imaginary part so Gaussian paths get exercised.
    fn seq(n: u32, _b: &ParamBundle) -> Result<GaussianRational, Error> {
        let g = GaussianRational::from_int(n as i64 + 1)
            + GaussianRational::i() * GaussianRational::from_int((n * n) as i64);
        Ok(g)
    }

    #[test]
    fn delta_alpha_gives_the_weight_closed_form() {
        // alpha_j = delta_{j,0}  =>  beta_n = (k/a,k;q)_n / ((q,aq;q)_n).
        let b = std_bundle(0);
        let alpha: PairEval =
            Arc::new(|j, _| Ok(if j == 0 { GaussianRational::one() } else { GaussianRational::zero() }));
        for n in 0..=6 {
            let got = beta_from_alpha(&alpha, &b, n).unwrap();
            let want = poch_ratio(&[b.k / b.a, b.k], &[b.q, b.a * b.q], b.q, n, b.point()).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn delta_beta_inverts_to_the_dual_closed_form() {
        // beta_n = delta_{n,0}  =>
        // alpha_n = (1-aq^(2n))/(1-a) (a/k,a;q)_n/((q,kq;q)_n) (k/a)^n.
        let b = std_bundle(0);
        let beta: PairEval =
            Arc::new(|j, _| Ok(if j == 0 { GaussianRational::one() } else { GaussianRational::zero() }));
        for n in 0..=6u32 {
            let ni = n as i32;
            let got = alpha_from_beta(&beta, &b, n).unwrap();
            let want = one_minus(b.a * b.q.pow(2 * ni), b.point())
                .div(&one_minus(b.a, b.point()))
                .unwrap()
                * poch_ratio(&[b.a / b.k, b.a], &[b.q, b.k * b.q], b.q, n, b.point()).unwrap()
                * (b.k / b.a).value(b.point()).ipow(ni).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn both_displays_of_the_relation_agree() {
        let alpha: PairEval = Arc::new(seq);
        for seed in [0u64, 1, 2] {
            let b = std_bundle(seed);
            for n in 0..=6 {
                assert_eq!(
                    beta_from_alpha(&alpha, &b, n).unwrap(),
                    beta_from_alpha_factored(&alpha, &b, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn inversion_round_trips_an_arbitrary_sequence() {
        let b = std_bundle(3);
        let alpha: PairEval = Arc::new(seq);
        let derived_beta: PairEval = {
            let alpha = alpha.clone();
            Arc::new(move |n, bb| beta_from_alpha(&alpha, bb, n))
        };
        for n in 0..=6 {
            assert_eq!(
                alpha_from_beta(&derived_beta, &b, n).unwrap(),
                alpha(n, &b).unwrap()
            );
        }
    }

    #[test]
    fn duality_is_an_involution() {
        let pair = WPPairGen {
            id: "probe".into(),
            alpha: Arc::new(seq),
            beta: Arc::new(|n, b| Ok(seq(n, b)? * GaussianRational::from_int(3) + GaussianRational::one())),
            required_extras: vec![],
        };
        let dd = dual_pair(&dual_pair(&pair));
        assert_eq!(dd.id, "dual(dual(probe))");
        let b = std_bundle(1);
        for n in 0..=6 {
            assert_eq!((dd.alpha)(n, &b).unwrap(), (pair.alpha)(n, &b).unwrap());
            assert_eq!((dd.beta)(n, &b).unwrap(), (pair.beta)(n, &b).unwrap());
        }
    }

    #[test]
    fn degenerate_points_report_division_by_zero() {
        // Force aq = 1 so (aq;q)_{n+j} vanishes.
        let pt = Arc::new(sample_point(0, &STD));
        let q = RootMonomial::generator(Gen::Q);
        let b = ParamBundle::new(q.inv(), RootMonomial::generator(Gen::K), q, pt);
        let alpha: PairEval = Arc::new(seq);
        assert_eq!(beta_from_alpha(&alpha, &b, 1), Err(Error::DivisionByZero));
    }

    #[test]
    fn bailey_bundle_is_the_k_zero_limit() {
        let pt = Arc::new(sample_point(0, &STD));
        let wp = ParamBundle::standard(pt.clone());
        let bailey = ParamBundle::bailey(pt);
        assert!(bailey.k.is_zero());
        // At k = 0 the WP weights collapse to the classical ones, so
        // beta_from_alpha with k = 0 must equal the direct Bailey sum.
        let alpha: PairEval = Arc::new(seq);
        let beta: PairEval = {
            let alpha = alpha.clone();
            Arc::new(move |n, bb| beta_from_alpha(&alpha, bb, n))
        };
        let pair = WPPairGen { id: "probe".into(), alpha, beta, required_extras: vec![] };
        let report = check_bailey_pair(&pair, &bailey, 6).unwrap();
        assert!(report.pass, "rows: {:?}", report.rows);
        // And the WP bundle genuinely differs from the Bailey one.
        assert_ne!(
            (pair.beta)(2, &wp).unwrap(),
            (pair.beta)(2, &bailey).unwrap()
        );
    }

    #[test]
    fn missing_extras_are_reported_by_name() {
        let b = std_bundle(0);
        assert_eq!(b.extra("rho1"), Err(Error::MissingExtra("rho1".into())));
        let with = b.with_extra("rho1", RootMonomial::generator(Gen::A));
        assert_eq!(with.extra("rho1").unwrap(), RootMonomial::generator(Gen::A));
    }

    #[test]
    fn report_json_shape_is_stable() {
        let pair = WPPairGen {
            id: "probe".into(),
            alpha: Arc::new(|_, _| Ok(GaussianRational::zero())),
            beta: Arc::new(|_, _| Ok(GaussianRational::zero())),
            required_extras: vec![],
        };
        let b = std_bundle(0);
        let report = check_wp_pair(&pair, &b, 0).unwrap();
        let js = serde_json::to_string(&report).unwrap();
        assert_eq!(
            js,
            r#"{"subject":"probe","point":{"gq":"2/3","ga":"3/5","gk":"5/7"},"depth":0,"rows":[{"n":0,"lhs":"0","rhs":"0","equal":true}],"pass":true}"#
        );
    }
}
