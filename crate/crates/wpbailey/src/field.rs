//! Exact arithmetic over the Gaussian rationals Q(i).
//!
//! Every value the engine ever compares is a `GaussianRational`: a pair
//! of arbitrary-precision rationals (re, im).  There is no floating
//! point anywhere; equality of two values is exact equality in Q(i),
//! which is what makes a verified identity a proof at the sampled point
//! rather than a numerical coincidence.
//!
//! Division and integer powers are checked: dividing by zero or raising
//! zero to a negative power yields `Error::DivisionByZero`, which
//! callers treat as "the sampled point is degenerate, resample".  The
//! empty-product convention 0^0 = 1 is used throughout, consistent with
//! q-Pochhammer boundary cases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::error::Error;

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

/// An element re + im*i of Q(i), stored as two exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::real(BigRational::from_integer(n.into()))
    }

    /// num/den as a real value.  Panics on a zero denominator; intended
    /// for literals in tests and tables, not for computed input.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::real(BigRational::new(num.into(), den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn imaginary(im: BigRational) -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im,
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Exact division; `Error::DivisionByZero` on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a+bi)/(c+di) = ((ac+bd) + (bc-ad)i) / (c^2+d^2)
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &norm;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &norm;
        Ok(GaussianRational { re, im })
    }

    /// Integer power with 0^0 = 1; zero to a negative power is
    /// `Error::DivisionByZero`.
    pub fn ipow(&self, n: i32) -> Result<Self, Error> {
        if n == 0 {
            return Ok(GaussianRational::one());
        }
        if self.is_zero() {
            if n < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(GaussianRational::zero());
        }
        let mut base = if n < 0 {
            GaussianRational::one().div(self)?
        } else {
            self.clone()
        };
        let mut exp = n.unsigned_abs();
        let mut acc = GaussianRational::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

// ---------------------------------------------------------------------------
// display: "p/q", "p/q+r/s*i", "p/q-r/s*i"; no spaces, lowercase i
// ---------------------------------------------------------------------------

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(a.into(), b.into()),
            BigRational::new(c.into(), d.into()),
        )
    }

    #[test]
    fn complex_division_exact() {
        // (3/5 + 1/2 i) / (7/8 - 2/3 i) = 552/3485 + 2412/3485 i
        let x = gr(3, 5, 1, 2);
        let y = gr(7, 8, -2, 3);
        assert_eq!(x.div(&y).unwrap(), gr(552, 3485, 2412, 3485));
    }

    #[test]
    fn division_round_trip() {
        let x = gr(3, 5, 1, 2);
        let y = gr(7, 8, -2, 3);
        assert_eq!(x.div(&y).unwrap() * y.clone(), x);
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        let one = GaussianRational::one();
        assert_eq!(one.div(&GaussianRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_powers() {
        let x = GaussianRational::from_ratio(2, 3);
        assert_eq!(x.ipow(-2).unwrap(), GaussianRational::from_ratio(9, 4));
        assert_eq!(x.ipow(0).unwrap(), GaussianRational::one());
        assert_eq!(x.ipow(3).unwrap(), GaussianRational::from_ratio(8, 27));
        // 0^0 = 1; 0^n = 0 for n > 0; negative powers of zero fail.
        let z = GaussianRational::zero();
        assert_eq!(z.ipow(0).unwrap(), GaussianRational::one());
        assert_eq!(z.ipow(4).unwrap(), GaussianRational::zero());
        assert_eq!(z.ipow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn gaussian_units() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, -GaussianRational::one());
        // (1+i)(1-i) = 2
        let p = GaussianRational::one() + GaussianRational::i();
        let m = GaussianRational::one() - GaussianRational::i();
        assert_eq!(p * m, GaussianRational::from_int(2));
    }

    #[test]
    fn display_formats() {
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(GaussianRational::from_ratio(-3, 5).to_string(), "-3/5");
        assert_eq!(gr(552, 3485, 2412, 3485).to_string(), "552/3485+2412/3485*i");
        assert_eq!(gr(35, 54, -55, 54).to_string(), "35/54-55/54*i");
        assert_eq!(GaussianRational::i().to_string(), "0+1*i");
        assert_eq!(GaussianRational::from_int(7).to_string(), "7");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_gr() -> impl Strategy<Value = GaussianRational> {
            (-20i64..=20, 1i64..=12, -20i64..=20, 1i64..=12)
                .prop_map(|(a, b, c, d)| gr(a, b, c, d))
        }

        proptest! {
            #[test]
            fn ring_axioms(x in arb_gr(), y in arb_gr(), z in arb_gr()) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            }

            #[test]
            fn multiplicative_inverses(x in arb_gr(), y in arb_gr()) {
                prop_assume!(!y.is_zero());
                prop_assert_eq!(x.div(&y).unwrap() * y.clone(), x);
            }

            #[test]
            fn power_laws(x in arb_gr(), m in 0i32..6, n in 0i32..6) {
                prop_assert_eq!(
                    x.ipow(m).unwrap() * x.ipow(n).unwrap(),
                    x.ipow(m + n).unwrap()
                );
            }
        }
    }
}
