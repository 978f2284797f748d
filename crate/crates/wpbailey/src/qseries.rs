//! q-Pochhammer symbols and terminating basic hypergeometric series.
//!
//! Conventions are the classical ones (Gasper-Rahman):
//!
//!   (x;q)_0 = 1,   (x;q)_n = (1-x)(1-xq)...(1-xq^(n-1)),
//!
//!   r+1_phi_r[a1,...,a_{r+1}; b1,...,b_r](q; z)
//!     = sum_j (a1,...,a_{r+1};q)_j / ((q,b1,...,b_r;q)_j) z^j,
//!
//! and the very-well-poised compression
//!
//!   r+1_W_r(a; b1,...,b_{r-2}; q, z)
//!     = r+1_phi_r with numerators a, q*sqrt(a), -q*sqrt(a), b1,...
//!       over sqrt(a), -sqrt(a), aq/b1,...
//!
//! Everything here terminates: series are evaluated through an explicit
//! last term index, and a numerator parameter q^(-n) makes later terms
//! vanish exactly, which the incremental evaluator detects and uses to
//! stop early.  Mixed-base sums (different Pochhammer bases inside one
//! term) do not fit the phi shape and are assembled term by term from
//! `mono_poch` / `poch_ratio` by their callers.

use crate::error::Error;
use crate::field::GaussianRational;
use crate::roots::{ParamPoint, RootMonomial};

// ---------------------------------------------------------------------------
// Pochhammer symbols
// ---------------------------------------------------------------------------

/// (x;q)_n over field values.
pub fn qpoch(x: &GaussianRational, q: &GaussianRational, n: u32) -> GaussianRational {
    let one = GaussianRational::one();
    let mut cur = x.clone();
    let mut out = GaussianRational::one();
    for _ in 0..n {
        out = out * (&one - &cur);
        cur = &cur * q;
    }
    out
}

/// (x1,...,xm;q)_n = prod_i (xi;q)_n.
pub fn qpoch_multi(xs: &[GaussianRational], q: &GaussianRational, n: u32) -> GaussianRational {
    let mut out = GaussianRational::one();
    for x in xs {
        out = out * qpoch(x, q, n);
    }
    out
}

/// (x;base)_n for a root monomial at a point.
pub fn mono_poch(x: RootMonomial, base: RootMonomial, n: u32, pt: &ParamPoint) -> GaussianRational {
    qpoch(&x.value(pt), &base.value(pt), n)
}

/// prod (nums;base)_n / prod (dens;base)_n; errors when a denominator
/// Pochhammer vanishes at the point.
pub fn poch_ratio(
    nums: &[RootMonomial],
    dens: &[RootMonomial],
    base: RootMonomial,
    n: u32,
    pt: &ParamPoint,
) -> Result<GaussianRational, Error> {
    let q = base.value(pt);
    let mut num = GaussianRational::one();
    for x in nums {
        num = num * qpoch(&x.value(pt), &q, n);
    }
    let mut den = GaussianRational::one();
    for x in dens {
        den = den * qpoch(&x.value(pt), &q, n);
    }
    num.div(&den)
}

/// 1 - value(m); the single most common factor in the chain formulas.
pub(crate) fn one_minus(m: RootMonomial, pt: &ParamPoint) -> GaussianRational {
    GaussianRational::one() - m.value(pt)
}

/// 1 + value(m).
pub(crate) fn one_plus(m: RootMonomial, pt: &ParamPoint) -> GaussianRational {
    GaussianRational::one() + m.value(pt)
}

// ---------------------------------------------------------------------------
// terminating phi series
// ---------------------------------------------------------------------------

/// A terminating r+1_phi_r series.  `terms` is the index of the last
/// included term, so a sum over j = 0..n has `terms = n`.  The required
/// shape is exactly one more numerator parameter than denominator
/// parameters (the implicit (q;q)_j is supplied by the evaluator);
/// `eval_phi` rejects anything else.
#[derive(Clone, Debug)]
pub struct SeriesSpec {
    pub numerator_params: Vec<RootMonomial>,
    pub denominator_params: Vec<RootMonomial>,
    pub base: RootMonomial,
    pub argument: RootMonomial,
    pub terms: u32,
}

/// Evaluate a terminating phi series exactly at a point.
pub fn eval_phi(spec: &SeriesSpec, pt: &ParamPoint) -> Result<GaussianRational, Error> {
    if spec.numerator_params.len() != spec.denominator_params.len() + 1 {
        return Err(Error::SeriesShape {
            nums: spec.numerator_params.len(),
            dens: spec.denominator_params.len(),
        });
    }
    phi(
        &spec.numerator_params,
        &spec.denominator_params,
        spec.base,
        spec.argument,
        spec.terms,
        pt,
    )
}

/// Monomial-parameter phi sum; crate-internal workhorse behind
/// `eval_phi` and the identity evaluators.
pub(crate) fn phi(
    nums: &[RootMonomial],
    dens: &[RootMonomial],
    base: RootMonomial,
    z: RootMonomial,
    terms: u32,
    pt: &ParamPoint,
) -> Result<GaussianRational, Error> {
    let nv: Vec<GaussianRational> = nums.iter().map(|x| x.value(pt)).collect();
    let dv: Vec<GaussianRational> = dens.iter().map(|x| x.value(pt)).collect();
    eval_phi_values(&nv, &dv, &base.value(pt), &z.value(pt), terms)
}

/// The incremental series kernel over raw field values.  `dens`
/// excludes the (q;q)_j factor, which is appended here.  Terms are
/// built by multiplying term ratios, so each term costs O(r) field
/// operations, and a vanishing term (from a q^(-n) numerator) stops the
/// sum early.
pub fn eval_phi_values(
    nums: &[GaussianRational],
    dens: &[GaussianRational],
    base: &GaussianRational,
    z: &GaussianRational,
    terms: u32,
) -> Result<GaussianRational, Error> {
    let one = GaussianRational::one();
    let mut dv: Vec<GaussianRational> = dens.to_vec();
    dv.push(base.clone());
    let mut total = GaussianRational::zero();
    let mut term = GaussianRational::one();
    let mut qj = GaussianRational::one();
    for j in 0..=terms {
        total = total + term.clone();
        if j == terms || term.is_zero() {
            break;
        }
        let mut fac = z.clone();
        for x in nums {
            fac = fac * (&one - &(x * &qj));
        }
        for x in &dv {
            fac = fac.div(&(&one - &(x * &qj)))?;
        }
        term = term * fac;
        qj = qj * base.clone();
    }
    Ok(total)
}

/// Very-well-poised r+1_W_r(a; b1,...,b_{r-2}; base, z), expanded into
/// its phi form.  `terms` is the last included index, as in `eval_phi`.
/// The b parameters must be nonzero monomials (they appear as aq/b
/// denominators).
pub fn eval_w(
    a: RootMonomial,
    bs: &[RootMonomial],
    base: RootMonomial,
    z: RootMonomial,
    terms: u32,
    pt: &ParamPoint,
) -> Result<GaussianRational, Error> {
    let ra = a.sqrt()?;
    let mut nums = vec![a, base * ra, -(base * ra)];
    nums.extend_from_slice(bs);
    let mut dens = vec![ra, -ra];
    for &b in bs {
        dens.push(a * base / b);
    }
    phi(&nums, &dens, base, z, terms, pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{sample_point, Gen};
    use num::BigRational;
    use std::str::FromStr;

    const A: RootMonomial = RootMonomial::generator(Gen::A);
    const K: RootMonomial = RootMonomial::generator(Gen::K);
    const Q: RootMonomial = RootMonomial::generator(Gen::Q);
    const BF: RootMonomial = RootMonomial::generator(Gen::B);
    const CF: RootMonomial = RootMonomial::generator(Gen::C);

    fn gr(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ratio(a, b)
    }

    fn big(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    #[test]
    fn pochhammer_known_values() {
        assert_eq!(qpoch(&gr(1, 2), &gr(1, 3), 2), gr(5, 12));
        assert_eq!(qpoch(&gr(3, 5), &gr(2, 3), 4), gr(814, 5625));
        assert_eq!(qpoch(&gr(3, 5), &gr(2, 3), 0), GaussianRational::one());
        // Gaussian parameter: (i/2; 2/3)_3 = 35/54 - 55/54 i.
        let x = GaussianRational::imaginary(BigRational::new(1.into(), 2.into()));
        assert_eq!(
            qpoch(&x, &gr(2, 3), 3),
            GaussianRational::new(big("35/54"), big("-55/54"))
        );
        // q^(-2) kills the product at length 3.
        assert_eq!(qpoch(&gr(9, 4), &gr(2, 3), 3), GaussianRational::zero());
    }

    #[test]
    fn multi_pochhammer_is_a_product() {
        let (x, y, q) = (gr(3, 5), gr(5, 7), gr(2, 3));
        assert_eq!(
            qpoch_multi(&[x.clone(), y.clone()], &q, 5),
            qpoch(&x, &q, 5) * qpoch(&y, &q, 5)
        );
        assert_eq!(qpoch_multi(&[], &q, 5), GaussianRational::one());
    }

    #[test]
    fn monomial_pochhammer_matches_value_pochhammer() {
        let pt = sample_point(0, &[Gen::Q, Gen::A, Gen::K]);
        let a = A.value(&pt);
        let q = Q.value(&pt);
        assert_eq!(mono_poch(A, Q, 4, &pt), qpoch(&a, &q, 4));
        let r = poch_ratio(&[A, A / K], &[Q * K], Q, 3, &pt).unwrap();
        let num = qpoch(&a, &q, 3) * qpoch(&(A / K).value(&pt), &q, 3);
        let den = qpoch(&(Q * K).value(&pt), &q, 3);
        assert_eq!(r, num.div(&den).unwrap());
    }

    #[test]
    fn phi_kernel_frozen_value() {
        // 2phi1[1/2, -2/7+1/3 i; 3/4](2/3; 1/5+1/7 i), terms = 4.
        let nums = [
            gr(1, 2),
            GaussianRational::new(big("-2/7"), big("1/3")),
        ];
        let dens = [gr(3, 4)];
        let z = GaussianRational::new(big("1/5"), big("1/7"));
        let got = eval_phi_values(&nums, &dens, &gr(2, 3), &z, 4).unwrap();
        assert_eq!(
            got,
            GaussianRational::new(
                big("471064711422017/120142055840625"),
                big("3854814616084/1505539546875"),
            )
        );
    }

    #[test]
    fn phi_shape_is_enforced() {
        let spec = SeriesSpec {
            numerator_params: vec![A, K],
            denominator_params: vec![Q * A, Q * K],
            base: Q,
            argument: Q,
            terms: 3,
        };
        assert_eq!(
            eval_phi(&spec, &sample_point(0, &[Gen::Q, Gen::A, Gen::K])),
            Err(Error::SeriesShape { nums: 2, dens: 2 })
        );
    }

    #[test]
    fn zero_terms_is_the_empty_sum_plus_leading_one() {
        let pt = sample_point(0, &[Gen::Q, Gen::A, Gen::K]);
        let spec = SeriesSpec {
            numerator_params: vec![A, K],
            denominator_params: vec![Q * A],
            base: Q,
            argument: Q,
            terms: 0,
        };
        assert_eq!(eval_phi(&spec, &pt).unwrap(), GaussianRational::one());
    }

    #[test]
    fn terminating_numerator_makes_extra_terms_free() {
        let pt = sample_point(2, &[Gen::Q, Gen::A, Gen::K]);
        let n = 3;
        let mk = |terms| SeriesSpec {
            numerator_params: vec![Q.pow(-(n as i32)), A],
            denominator_params: vec![K],
            base: Q,
            argument: Q,
            terms,
        };
        let exact = eval_phi(&mk(n), &pt).unwrap();
        assert_eq!(eval_phi(&mk(n + 5), &pt).unwrap(), exact);
    }

    #[test]
    fn rogers_summation_for_6w5() {
        // 6W5(a; b, c, q^(-n); q, aq^(n+1)/(bc))
        //   = (aq, aq/bc; q)_n / (aq/b, aq/c; q)_n   (Rogers).
        let pt = sample_point(1, &[Gen::Q, Gen::A, Gen::B, Gen::C]);
        for n in 0..=4u32 {
            let ni = n as i32;
            let z = A * Q.pow(ni + 1) / (BF * CF);
            let lhs = eval_w(A, &[BF, CF, Q.pow(-ni)], Q, z, n, &pt).unwrap();
            let rhs = poch_ratio(
                &[A * Q, A * Q / (BF * CF)],
                &[A * Q / BF, A * Q / CF],
                Q,
                n,
                &pt,
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_gr() -> impl Strategy<Value = GaussianRational> {
            (-9i64..=9, 1i64..=7, -9i64..=9, 1i64..=7).prop_map(|(a, b, c, d)| {
                GaussianRational::new(
                    BigRational::new(a.into(), b.into()),
                    BigRational::new(c.into(), d.into()),
                )
            })
        }

        proptest! {
            #[test]
            fn pochhammer_splits(x in arb_gr(), m in 0u32..5, n in 0u32..5) {
                let q = gr(2, 3);
                let shifted = &x * &q.ipow(m as i32).unwrap();
                prop_assert_eq!(
                    qpoch(&x, &q, m + n),
                    qpoch(&x, &q, m) * qpoch(&shifted, &q, n)
                );
            }
        }
    }
}
