//! Scalars on two tracks: exact rationals and multi-precision floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::complex::CReal;
use super::real::{parse_decimal_rational, rational_to_f64, Precision, Real};

/// A real value: an exact rational (always canonical) or a float carrying its precision.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(Real),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn int(i: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Parses an integer, `a/b`, or a decimal literal. Decimal literals land on the float track.
    pub fn parse(token: &str, p: Precision) -> Option<Self> {
        let t = token.trim();
        if t.is_empty() {
            return None;
        }
        if let Some((a, b)) = t.split_once('/') {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            return Some(Scalar::Exact(BigRational::new(a, b)));
        }
        if let Ok(i) = t.parse::<BigInt>() {
            return Some(Scalar::Exact(BigRational::from_integer(i)));
        }
        parse_decimal_rational(t).map(|q| Scalar::Float(Real::from_rational(&q, p)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float(_) => None,
        }
    }

    /// Float precision, `None` on the exact track.
    pub fn precision(&self) -> Option<Precision> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Float(r) => Some(r.precision()),
        }
    }

    pub fn to_real(&self, p: Precision) -> Real {
        match self {
            Scalar::Exact(q) => Real::from_rational(q, p),
            Scalar::Float(r) => {
                if r.precision() == p {
                    r.clone()
                } else {
                    r.clone().with_precision(p)
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => rational_to_f64(q),
            Scalar::Float(r) => r.to_f64(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(r) => r.is_zero(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(q) => {
                if q.is_zero() {
                    0
                } else if q.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Scalar::Float(r) => r.signum(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.abs()),
            Scalar::Float(r) => Scalar::Float(r.abs()),
        }
    }

    /// The same value on the float track at precision `p`.
    pub fn to_float(&self, p: Precision) -> Scalar {
        Scalar::Float(self.to_real(p))
    }

    /// Full-precision decimal text.
    pub fn repr(&self) -> String {
        match self {
            Scalar::Exact(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    super::real::rational_to_decimal(q, 40)
                }
            }
            Scalar::Float(r) => r.to_string(),
        }
    }

    /// `a/b` text for exact values.
    pub fn rational_string(&self) -> Option<String> {
        self.as_rational().map(|q| q.to_string())
    }

    fn lift(a: &Scalar, b: &Scalar) -> Precision {
        match (a.precision(), b.precision()) {
            (Some(x), Some(y)) => x.max(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => Precision::default(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float(r) => write!(f, "{r}"),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Exact(q)
    }
}

impl From<Real> for Scalar {
    fn from(r: Real) -> Self {
        Scalar::Float(r)
    }
}

impl From<i64> for Scalar {
    fn from(i: i64) -> Self {
        Scalar::int(i)
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                match (self, o) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$m(b)),
                    _ => {
                        let p = Scalar::lift(self, o);
                        Scalar::Float(self.to_real(p).$m(o.to_real(p)))
                    }
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q),
            Scalar::Float(r) => Scalar::Float(-r),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Some(a.cmp(b)),
            _ => {
                let p = Scalar::lift(self, other);
                self.to_real(p).partial_cmp(&other.to_real(p))
            }
        }
    }
}

/// A complex coefficient stored as a `(real, imaginary)` pair of scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        ComplexScalar { re, im: Scalar::zero() }
    }

    pub fn zero() -> Self {
        ComplexScalar::real(Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.re.is_exact() && self.im.is_exact()
    }

    pub fn conj(&self) -> Self {
        ComplexScalar::new(self.re.clone(), -&self.im)
    }

    pub fn precision(&self) -> Option<Precision> {
        match (self.re.precision(), self.im.precision()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn to_creal(&self, p: Precision) -> CReal {
        CReal::new(self.re.to_real(p), self.im.to_real(p))
    }

    /// `|re| + |im|`, a cheap magnitude used for tolerances.
    pub fn l1(&self) -> f64 {
        self.re.to_f64().abs() + self.im.to_f64().abs()
    }
}

impl Add<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, o: &ComplexScalar) -> ComplexScalar {
        ComplexScalar::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, o: &ComplexScalar) -> ComplexScalar {
        ComplexScalar::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, o: &ComplexScalar) -> ComplexScalar {
        if self.im.is_zero() && o.im.is_zero() {
            return ComplexScalar::real(&self.re * &o.re);
        }
        ComplexScalar::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar::new(-&self.re, -&self.im)
    }
}

impl From<Scalar> for ComplexScalar {
    fn from(s: Scalar) -> Self {
        ComplexScalar::real(s)
    }
}
