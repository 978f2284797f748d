//! Root-tracked parameter monomials and seeded evaluation points.
//!
//! Parameters like sqrt(a) or a^(1/4) q^(1/2) appear all over the
//! chain and identity formulas.  Extracting numeric square roots of
//! rationals is out of the question (they usually are not rational), so
//! a parameter value is never a bare number.  It is a `RootMonomial`
//!
//!   unit * prod_g  g^(e_g / 16),       unit in {1, -1, i, -i},
//!
//! over a fixed set of positive rational generators g.  The semantic
//! parameter q is the 16th power of its generator gq, so a square root
//! is just a halving of integer exponents: 16 -> 8 -> 4 -> 2 -> 1 stays
//! integral through four nested halvings, which covers every formula in
//! the catalog (the deepest need is a^(1/4) inside very-well-poised
//! series built on sqrt(a)).  sqrt(-x) for positive x resolves to
//! +i sqrt(x); square roots of monomials with unit +-i or an odd
//! exponent report `Error::RootUnavailable` instead of guessing.
//!
//! Evaluation points assign each generator a value from a small pool of
//! rationals in (0, 1), permuted by a seed, so that checks run at
//! "generic" points: no generator equals 1, gq < 1, and distinct seeds
//! below 8! give distinct assignments.  Degenerate points (some
//! denominator in a formula vanishes) are handled by resampling with
//! seed+1, seed+2, ... rather than by special-casing formulas.

use std::fmt;
use std::ops::{Div, Mul, Neg};

use num::{BigRational, One};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::Error;
use crate::field::GaussianRational;

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

/// The fixed generator set.  Q, A, K are always sampled; the rest are
/// sampled only when a pair, chain or identity declares them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Q,
    A,
    K,
    Rho1,
    Rho2,
    E,
    C,
    B,
    D,
    F,
}

impl Gen {
    pub const COUNT: usize = 10;

    /// Canonical order; pool values are assigned to required generators
    /// in this order, and point JSON lists keys in this order.
    pub const ALL: [Gen; Gen::COUNT] = [
        Gen::Q,
        Gen::A,
        Gen::K,
        Gen::Rho1,
        Gen::Rho2,
        Gen::E,
        Gen::C,
        Gen::B,
        Gen::D,
        Gen::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gen::Q => "gq",
            Gen::A => "ga",
            Gen::K => "gk",
            Gen::Rho1 => "grho1",
            Gen::Rho2 => "grho2",
            Gen::E => "ge",
            Gen::C => "gc",
            Gen::B => "gb",
            Gen::D => "gd",
            Gen::F => "gf",
        }
    }

    pub fn from_name(name: &str) -> Option<Gen> {
        Gen::ALL.iter().copied().find(|g| g.name() == name)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// RootMonomial
// ---------------------------------------------------------------------------

/// unit * prod generators^(exps/16), or the absorbing zero.
///
/// Cheap to copy (a flag, a unit, ten small integers), exact to
/// multiply, divide, power and halve.  Division by the zero monomial
/// panics: formulas never divide by a syntactic zero, so hitting one is
/// a caller bug, unlike a vanishing *value* which is a degenerate point
/// and reported as `Error::DivisionByZero` at evaluation time.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootMonomial {
    zero: bool,
    /// Power of i, mod 4: 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i.
    unit: u8,
    /// 16th-exponents per generator, in `Gen::ALL` order.
    exps: [i32; Gen::COUNT],
}

impl RootMonomial {
    pub const fn zero() -> Self {
        RootMonomial { zero: true, unit: 0, exps: [0; Gen::COUNT] }
    }

    pub const fn one() -> Self {
        RootMonomial { zero: false, unit: 0, exps: [0; Gen::COUNT] }
    }

    /// The imaginary unit i.
    pub const fn i() -> Self {
        RootMonomial { zero: false, unit: 1, exps: [0; Gen::COUNT] }
    }

    /// The semantic parameter for generator `g` (its 16th power).
    pub const fn generator(g: Gen) -> Self {
        RootMonomial::generator_pow(g, 16)
    }

    /// g^(sixteenths/16); `generator_pow(g, 8)` is sqrt of the
    /// semantic parameter.
    pub const fn generator_pow(g: Gen, sixteenths: i32) -> Self {
        let mut exps = [0; Gen::COUNT];
        exps[g as usize] = sixteenths;
        RootMonomial { zero: false, unit: 0, exps }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Multiplicative inverse.  Panics on zero (caller bug).
    pub fn inv(self) -> Self {
        assert!(!self.zero, "inverse of the zero monomial");
        let mut exps = [0; Gen::COUNT];
        for (e, &x) in exps.iter_mut().zip(self.exps.iter()) {
            *e = -x;
        }
        RootMonomial { zero: false, unit: (4 - self.unit) & 3, exps }
    }

    /// Integer power with 0^0 = 1.  Panics on a negative power of zero.
    pub fn pow(self, n: i32) -> Self {
        if n == 0 {
            return RootMonomial::one();
        }
        if self.zero {
            assert!(n > 0, "negative power of the zero monomial");
            return RootMonomial::zero();
        }
        let mut exps = [0; Gen::COUNT];
        for (e, &x) in exps.iter_mut().zip(self.exps.iter()) {
            *e = x * n;
        }
        let unit = ((self.unit as i32 * n).rem_euclid(4)) as u8;
        RootMonomial { zero: false, unit, exps }
    }

    /// Exact square root: halve every exponent.  sqrt(0) = 0;
    /// sqrt(-x) = i sqrt(x) for positive x; monomials with unit +-i or
    /// an odd 16th-exponent have no representable root.
    pub fn sqrt(self) -> Result<Self, Error> {
        if self.zero {
            return Ok(RootMonomial::zero());
        }
        if self.unit == 1 || self.unit == 3 {
            return Err(Error::RootUnavailable(self.to_string()));
        }
        if self.exps.iter().any(|&x| x % 2 != 0) {
            return Err(Error::RootUnavailable(self.to_string()));
        }
        let mut exps = [0; Gen::COUNT];
        for (e, &x) in exps.iter_mut().zip(self.exps.iter()) {
            *e = x / 2;
        }
        let unit = if self.unit == 2 { 1 } else { 0 };
        Ok(RootMonomial { zero: false, unit, exps })
    }

    /// Exact value at a point.  The point must have every generator the
    /// monomial mentions.
    pub fn value(&self, pt: &ParamPoint) -> GaussianRational {
        if self.zero {
            return GaussianRational::zero();
        }
        let mut v = BigRational::one();
        for (i, &x) in self.exps.iter().enumerate() {
            if x != 0 {
                v *= pt.generator_value(Gen::ALL[i]).pow(x);
            }
        }
        match self.unit {
            0 => GaussianRational::real(v),
            1 => GaussianRational::imaginary(v),
            2 => GaussianRational::real(-v),
            _ => GaussianRational::imaginary(-v),
        }
    }
}

impl Mul for RootMonomial {
    type Output = RootMonomial;
    fn mul(self, rhs: RootMonomial) -> RootMonomial {
        if self.zero || rhs.zero {
            return RootMonomial::zero();
        }
        let mut exps = [0; Gen::COUNT];
        for i in 0..Gen::COUNT {
            exps[i] = self.exps[i] + rhs.exps[i];
        }
        RootMonomial { zero: false, unit: (self.unit + rhs.unit) & 3, exps }
    }
}

impl Div for RootMonomial {
    type Output = RootMonomial;
    /// Panics when dividing by the zero monomial (caller bug).
    fn div(self, rhs: RootMonomial) -> RootMonomial {
        self * rhs.inv()
    }
}

impl Neg for RootMonomial {
    type Output = RootMonomial;
    fn neg(self) -> RootMonomial {
        if self.zero {
            return self;
        }
        RootMonomial { zero: false, unit: (self.unit + 2) & 3, exps: self.exps }
    }
}

impl fmt::Display for RootMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return f.write_str("0");
        }
        let mut out = String::new();
        match self.unit {
            0 => {}
            1 => out.push_str("i"),
            2 => out.push_str("-1"),
            _ => out.push_str("-i"),
        }
        for (i, &x) in self.exps.iter().enumerate() {
            if x != 0 {
                if !out.is_empty() {
                    out.push('*');
                }
                out.push_str(&format!("{}^({}/16)", Gen::ALL[i].name(), x));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for RootMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootMonomial({})", self)
    }
}

// ---------------------------------------------------------------------------
// evaluation points
// ---------------------------------------------------------------------------

/// The pool of generator values.  All in (0, 1), none equal, chosen so
/// 16th powers stay comfortably sized.  Note the pool is not closed
/// under products being distinct: 3/5 * 5/7 = 3/7 is itself in the
/// pool, so semantic coincidences like e = a q can occur at particular
/// seeds.  That is exactly what resampling is for.
pub const POOL: [(i64, i64); 8] = [
    (2, 3),
    (3, 5),
    (5, 7),
    (4, 7),
    (5, 8),
    (7, 9),
    (3, 7),
    (7, 8),
];

const FACTORIAL: [u64; 9] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320];

/// How many consecutive seeds `sample_non_degenerate` tries before
/// giving up with `Error::PointExhaustion`.
pub const RESAMPLE_ATTEMPTS: u32 = 32;

/// A seeded assignment of pool values to generators, plus optional sign
/// flags for generators that callers want negated (e.g. rho2 = -5/8).
/// The sign flag affects bundle construction and JSON display; the
/// generator value itself stays positive so that root tracking stays in
/// the unit-times-positive-monomial normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    seed: u64,
    values: [Option<BigRational>; Gen::COUNT],
    negative: [bool; Gen::COUNT],
}

impl ParamPoint {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn has(&self, g: Gen) -> bool {
        self.values[g.index()].is_some()
    }

    pub fn is_negative(&self, g: Gen) -> bool {
        self.negative[g.index()]
    }

    /// Panics when the generator was never sampled: that means some
    /// required-generator declaration is wrong, which is a bug, not a
    /// runtime condition.
    pub fn generator_value(&self, g: Gen) -> &BigRational {
        self.values[g.index()]
            .as_ref()
            .unwrap_or_else(|| panic!("generator {} not sampled at this point", g.name()))
    }

    /// A copy with `g` pinned to `value` (and an optional sign flag),
    /// inserting the generator when absent.  Used for CLI overrides.
    pub fn with_value(mut self, g: Gen, value: BigRational, negative: bool) -> Self {
        self.values[g.index()] = Some(value);
        self.negative[g.index()] = negative;
        self
    }
}

/// Keys in canonical generator order, values as "p/q" (with a leading
/// "-" when the sign flag is set), e.g. {"gq":"2/3","ga":"3/5",...}.
/// Hand-rolled so the byte order never depends on map internals.
impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.values.iter().filter(|v| v.is_some()).count();
        let mut map = serializer.serialize_map(Some(n))?;
        for g in Gen::ALL {
            if let Some(v) = &self.values[g.index()] {
                let s = if self.negative[g.index()] {
                    format!("-{}", v)
                } else {
                    v.to_string()
                };
                map.serialize_entry(g.name(), &s)?;
            }
        }
        map.end()
    }
}

/// The pool permutation a seed induces (Lehmer decode of seed mod 8!).
/// The least-significant factorial digit picks the first slot, so
/// consecutive seeds always move the leading generators; that is what
/// makes seed+1 resampling effective when q, a or k themselves sit in
/// a degenerate configuration.  Exposed so determinism and
/// distinctness are directly testable.
pub fn pool_permutation(seed: u64) -> [usize; 8] {
    let mut code = seed % FACTORIAL[8];
    let mut avail: Vec<usize> = (0..8).collect();
    let mut perm = [0usize; 8];
    for (k, slot) in perm.iter_mut().enumerate() {
        let radix = (8 - k) as u64;
        let idx = (code % radix) as usize;
        code /= radix;
        *slot = avail.remove(idx);
    }
    perm
}

/// Deterministically assign pool values to `required` generators.
///
/// The seed picks a permutation of the pool; required generators take
/// the first values of the permuted pool in canonical generator order.
/// Distinct seeds below 8! = 40320 give distinct permutations; beyond
/// that, seeds wrap.
pub fn sample_point(seed: u64, required: &[Gen]) -> ParamPoint {
    let perm = pool_permutation(seed);
    let mut values: [Option<BigRational>; Gen::COUNT] = Default::default();
    let mut slot = 0usize;
    for g in Gen::ALL {
        if required.contains(&g) {
            let (num, den) = POOL[perm[slot % 8]];
            values[g.index()] = Some(BigRational::new(num.into(), den.into()));
            slot += 1;
        }
    }
    ParamPoint { seed, values, negative: [false; Gen::COUNT] }
}

/// Run `eval` at `sample_point(seed, ..)`, retrying with seed+1,
/// seed+2, ... whenever the point turns out degenerate (some
/// denominator vanished).  Gives up after `RESAMPLE_ATTEMPTS` tries.
pub fn sample_non_degenerate<T>(
    seed: u64,
    required: &[Gen],
    mut eval: impl FnMut(&ParamPoint) -> Result<T, Error>,
) -> Result<(ParamPoint, T), Error> {
    for i in 0..RESAMPLE_ATTEMPTS {
        let pt = sample_point(seed + u64::from(i), required);
        match eval(&pt) {
            Ok(v) => return Ok((pt, v)),
            Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::PointExhaustion { seed, attempts: RESAMPLE_ATTEMPTS })
}
