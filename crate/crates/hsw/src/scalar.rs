//! Scalar arithmetic with two backends: exact rationals (the default) and
//! floats with a global comparison tolerance.
//!
//! Every identity verified by this crate is polynomial, so the rational
//! backend makes each check exact.  The float backend exists only so that
//! callers can feed in non-rational group points; mixing the two backends in
//! one expression silently promotes to floats.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

/// Comparison tolerance used by the float backend, stored as f64 bits so it
/// can live in an atomic.  Exact scalars never consult it.
static FLOAT_TOL: AtomicU64 = AtomicU64::new(0);

const DEFAULT_TOL: f64 = 1e-9;

/// Set the global float-backend tolerance.  Panics on non-positive values.
pub fn set_float_tolerance(tol: f64) {
    assert!(tol > 0.0, "float tolerance must be positive");
    FLOAT_TOL.store(tol.to_bits(), Ordering::Relaxed);
}

/// Current float-backend tolerance.
pub fn float_tolerance() -> f64 {
    let bits = FLOAT_TOL.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_TOL
    } else {
        f64::from_bits(bits)
    }
}

/// A scalar: exact rational or tolerance-compared float.
#[derive(Clone, Debug)]
pub enum Scalar {
    Q(BigRational),
    F(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Q(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Q(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact fraction p/q.  Panics when q = 0.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Q(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn float(x: f64) -> Self {
        Scalar::F(x)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::F(x) => x.abs() <= float_tolerance(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Q(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Q(r) => {
                let n = r.numer();
                let d = r.denom();
                // Good enough for display / float promotion of test data.
                let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
                let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
                nf / df
            }
            Scalar::F(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::F(_) => None,
        }
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn recip(&self) -> Self {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Q(r.recip())
            }
            Scalar::F(x) => Scalar::F(1.0 / x),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Scalar::Q(r) => Scalar::Q(r.abs()),
            Scalar::F(x) => Scalar::F(x.abs()),
        }
    }

    /// Sign as -1, 0, 1 (float backend: compared against the tolerance).
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            match self {
                Scalar::Q(r) => {
                    if r.is_positive() {
                        1
                    } else {
                        -1
                    }
                }
                Scalar::F(x) => {
                    if *x > 0.0 {
                        1
                    } else {
                        -1
                    }
                }
            }
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= float_tolerance(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::F(x) => write!(f, "{x}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $op b),
                    (a, b) => Scalar::F(a.to_f64() $op b.to_f64()),
                }
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.clone() $op rhs.clone()
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.recip()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::F(x) => Scalar::F(-x),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = std::mem::replace(self, Scalar::zero()) + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = std::mem::replace(self, Scalar::zero()) - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = std::mem::replace(self, Scalar::zero()) * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

/// Parse "p/q" or "p" into an exact scalar.
pub fn parse_rational(s: &str) -> Option<Scalar> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Scalar::Q(BigRational::new(p, q)))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Scalar::Q(BigRational::from_integer(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(1, 6);
        assert_eq!(a.clone() + b.clone(), Scalar::ratio(1, 2));
        assert_eq!(a.clone() * b, Scalar::ratio(1, 18));
        assert_eq!(a.clone() - a, Scalar::zero());
    }

    #[test]
    fn float_tolerance_comparison() {
        let a = Scalar::float(1.0);
        let b = Scalar::float(1.0 + 1e-12);
        assert_eq!(a, b);
        assert!(Scalar::float(1e-12).is_zero());
        assert!(!Scalar::float(1e-3).is_zero());
    }

    #[test]
    fn parse_roundtrip() {
        let s = parse_rational("-7/4").unwrap();
        assert_eq!(s, Scalar::ratio(-7, 4));
        assert_eq!(s.to_string(), "-7/4");
        assert_eq!(parse_rational("5").unwrap().to_string(), "5");
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn recip_and_div() {
        let a = Scalar::ratio(3, 5);
        assert_eq!(a.clone() * a.recip(), Scalar::one());
        assert_eq!(Scalar::from_int(6) / Scalar::from_int(4), Scalar::ratio(3, 2));
    }
}
