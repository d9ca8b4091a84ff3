//! Multi-precision binary floating point values that carry their precision.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num::bigint::Sign as BigSign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(usize);

impl Precision {
    pub const DEFAULT_BITS: usize = 128;
    pub const MIN_BITS: usize = 64;
    pub const MAX_BITS: usize = 1 << 16;

    /// Rounds up to a whole number of machine words, clamped to the supported range.
    pub fn new(bits: usize) -> Self {
        let b = bits.clamp(Self::MIN_BITS, Self::MAX_BITS);
        Precision(b.div_ceil(WORD_BITS) * WORD_BITS)
    }

    pub fn bits(self) -> usize {
        self.0
    }

    pub fn doubled(self) -> Self {
        Precision::new(self.0 * 2)
    }

    /// Adds `extra` guard bits.
    pub fn plus(self, extra: usize) -> Self {
        Precision::new(self.0 + extra)
    }

    /// `2^(48 - bits)`: the relative error budget used for numerical zero tests.
    pub fn tie_threshold(self) -> f64 {
        (2.0f64).powi(48 - self.0.min(1070) as i32)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_BITS)
    }
}

/// A real number stored as a binary float at an explicit precision.
///
/// Binary operations work at the larger of the two operand precisions.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    prec: usize,
}

impl Real {
    fn wrap(v: BigFloat, prec: usize) -> Self {
        Real { v, prec }
    }

    pub fn zero(p: Precision) -> Self {
        Real::wrap(BigFloat::from_u64(0, p.bits()), p.bits())
    }

    pub fn one(p: Precision) -> Self {
        Real::from_i64(1, p)
    }

    pub fn from_i64(i: i64, p: Precision) -> Self {
        let mag = BigFloat::from_u64(i.unsigned_abs(), p.bits());
        let v = if i < 0 { mag.neg() } else { mag };
        Real::wrap(v, p.bits())
    }

    pub fn from_f64(f: f64, p: Precision) -> Self {
        Real::wrap(BigFloat::from_f64(f, p.bits()), p.bits())
    }

    pub fn from_bigint(n: &BigInt, p: Precision) -> Self {
        let work = p.bits() + WORD_BITS;
        let base = BigFloat::from_u64(1u64 << 63, work).mul(&BigFloat::from_u64(2, work), work, RM);
        let mut acc = BigFloat::from_u64(0, work);
        for d in n.magnitude().to_u64_digits().iter().rev() {
            acc = acc.mul(&base, work, RM).add(&BigFloat::from_u64(*d, work), work, RM);
        }
        if n.sign() == BigSign::Minus {
            acc = acc.neg();
        }
        let mut r = Real::wrap(acc, work);
        r.set_precision(p);
        r
    }

    pub fn from_rational(q: &BigRational, p: Precision) -> Self {
        if q.denom().is_one() {
            return Real::from_bigint(q.numer(), p);
        }
        let work = p.plus(WORD_BITS);
        let num = Real::from_bigint(q.numer(), work);
        let den = Real::from_bigint(q.denom(), work);
        let mut r = num / den;
        r.set_precision(p);
        r
    }

    /// Parses a decimal literal such as `-1.25`, `3e-4` or `17`.
    pub fn parse_decimal(s: &str, p: Precision) -> Option<Self> {
        let q = parse_decimal_rational(s)?;
        Some(Real::from_rational(&q, p))
    }

    pub fn pi(p: Precision) -> Self {
        let v = with_consts(|cc| cc.pi(p.bits(), RM));
        Real::wrap(v, p.bits())
    }

    /// `cos(2πt/n)` and `sin(2πt/n)` evaluated from the reduced angle.
    pub fn cos_sin_turn(t: i64, n: u64, p: Precision) -> (Real, Real) {
        let n_i = n as i64;
        let t = t.rem_euclid(n_i);
        let work = p.plus(WORD_BITS);
        let angle = Real::pi(work) * Real::from_i64(2 * t, work) / Real::from_i64(n_i, work);
        let (mut c, mut s) = (angle.cos(), angle.sin());
        c.set_precision(p);
        s.set_precision(p);
        (c, s)
    }

    pub fn precision(&self) -> Precision {
        Precision(self.prec)
    }

    pub fn set_precision(&mut self, p: Precision) {
        self.prec = p.bits();
        let _ = self.v.set_precision(p.bits(), RM);
    }

    pub fn with_precision(mut self, p: Precision) -> Self {
        self.set_precision(p);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn signum(&self) -> i32 {
        if self.v.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.v.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Real {
        Real::wrap(self.v.sqrt(self.prec, RM), self.prec)
    }

    pub fn cos(&self) -> Real {
        let v = with_consts(|cc| self.v.cos(self.prec, RM, cc));
        Real::wrap(v, self.prec)
    }

    pub fn sin(&self) -> Real {
        let v = with_consts(|cc| self.v.sin(self.prec, RM, cc));
        Real::wrap(v, self.prec)
    }

    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = y.prec.max(x.prec);
        let prec = Precision(p);
        if x.is_zero() {
            let half_pi = Real::pi(prec) / Real::from_i64(2, prec);
            return match y.signum() {
                1 => half_pi,
                -1 => -half_pi,
                _ => Real::zero(prec),
            };
        }
        let ratio = y / x;
        let base = Real::wrap(with_consts(|cc| ratio.v.atan(p, RM, cc)), p);
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base - Real::pi(prec)
        } else {
            base + Real::pi(prec)
        }
    }

    pub fn powi(&self, e: usize) -> Real {
        Real::wrap(self.v.powi(e, self.prec, RM), self.prec)
    }

    pub fn mul_i64(&self, k: i64) -> Real {
        self * &Real::from_i64(k, self.precision())
    }

    pub fn div_i64(&self, k: i64) -> Real {
        self / &Real::from_i64(k, self.precision())
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_inf_neg() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        match self.v.as_raw_parts() {
            Some((words, _, sign, exp, _)) if !self.v.is_zero() => {
                let top = *words.last().unwrap_or(&0) as f64;
                let next = if words.len() > 1 { words[words.len() - 2] as f64 } else { 0.0 };
                let mag = (top + next / 18446744073709551616.0) * (2.0f64).powi(exp - 64);
                if sign == Sign::Neg {
                    -mag
                } else {
                    mag
                }
            }
            _ => 0.0,
        }
    }

    /// The exact binary value as a rational number.
    pub fn to_rational(&self) -> BigRational {
        if self.v.is_zero() || !self.is_finite() {
            return BigRational::zero();
        }
        let (words, _, sign, exp, _) = self.v.as_raw_parts().expect("finite value");
        let mut m = BigInt::zero();
        for w in words.iter().rev() {
            m = (m << WORD_BITS) + BigInt::from(*w);
        }
        let shift = exp as i64 - (WORD_BITS * words.len()) as i64;
        let mut q = BigRational::from_integer(m);
        if shift >= 0 {
            q *= BigRational::from_integer(BigInt::one() << shift as usize);
        } else {
            q /= BigRational::from_integer(BigInt::one() << (-shift) as usize);
        }
        if sign == Sign::Neg {
            -q
        } else {
            q
        }
    }

    /// Base-2 exponent `e` with `2^(e-1) <= |x| < 2^e`, or `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent()
        }
    }

    /// Decimal text with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if !self.is_finite() {
            return if self.v.is_nan() { "NaN".into() } else if self.v.is_inf_neg() { "-inf".into() } else { "inf".into() };
        }
        rational_to_decimal(&self.to_rational(), digits)
    }
}

/// Parses `[-]digits[.digits][e[-]digits]` exactly.
pub fn parse_decimal_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let m: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let scale = exp - frac_part.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(m);
    if scale >= 0 {
        q *= BigRational::from_integer(num::pow(ten, scale as usize));
    } else {
        q /= BigRational::from_integer(num::pow(ten, (-scale) as usize));
    }
    Some(if neg { -q } else { q })
}

/// Scientific decimal rendering of an exact rational, rounded to `digits` significant digits.
pub fn rational_to_decimal(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let neg = q.is_negative();
    let a = q.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    // estimate decimal exponent from bit lengths, then correct
    let bits = a.numer().bits() as f64 - a.denom().bits() as f64;
    let mut e10 = (bits * std::f64::consts::LOG10_2).floor() as i64;
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            num::pow(ten.clone(), e as usize)
        } else {
            num::pow(ten.clone(), (-e) as usize).recip()
        }
    };
    loop {
        let lo = pow10(e10);
        if a < lo {
            e10 -= 1;
            continue;
        }
        if a >= &lo * &ten {
            e10 += 1;
            continue;
        }
        break;
    }
    let scaled = &a / pow10(e10 - digits as i64 + 1);
    let mut m = scaled.round().to_integer();
    let limit = num::pow(BigInt::from(10), digits);
    if m >= limit {
        m /= 10;
        e10 += 1;
    }
    let s = m.to_string();
    let (head, tail) = s.split_at(1);
    let tail = tail.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if e10 != 0 {
        out.push_str(&format!("e{e10}"));
    }
    out
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({}, {} bits)", self.to_decimal(20), self.prec)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec as f64 * std::f64::consts::LOG10_2).floor() as usize;
        f.write_str(&self.to_decimal(digits.max(1)))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.prec.max(rhs.prec);
                Real::wrap(self.v.$method(&rhs.v, p, RM), p)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.prec)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.prec)
    }
}

/// Convenience conversion used by tests and reports.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() && b != 0.0 => a / b,
        _ => Real::from_rational(q, Precision::default()).to_f64(),
    }
}
