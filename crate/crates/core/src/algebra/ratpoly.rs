//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Ascending coefficients, trailing zeros stripped; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    c: Vec<BigRational>,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        RatPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(a: BigRational) -> Self {
        RatPoly::new(vec![a])
    }

    /// `a·x^k`.
    pub fn monomial(a: BigRational, k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = a;
        RatPoly::new(c)
    }

    /// `x^n + 1`.
    pub fn xn_plus_one(n: usize) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        c[0] = BigRational::one();
        c[n] += BigRational::one();
        RatPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, a: &BigRational) -> RatPoly {
        RatPoly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * q(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `p(a·x)`.
    pub fn scale_arg(&self, a: &BigRational) -> RatPoly {
        let mut f = BigRational::one();
        let mut out = Vec::with_capacity(self.c.len());
        for x in &self.c {
            out.push(x * &f);
            f *= a;
        }
        RatPoly::new(out)
    }

    /// `p(x^r)`.
    pub fn inflate(&self, r: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); (self.c.len() - 1) * r + 1];
        for (i, x) in self.c.iter().enumerate() {
            out[i * r] = x.clone();
        }
        RatPoly::new(out)
    }

    /// Coefficients reversed relative to the formal degree `n`.
    pub fn reversed(&self, n: usize) -> RatPoly {
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, x) in self.c.iter().enumerate() {
            out[n - i] = x.clone();
        }
        RatPoly::new(out)
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (RatPoly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let lead_inv = d.lead().recip();
        let mut quo = vec![BigRational::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] * &lead_inv;
            if !t.is_zero() {
                for (i, di) in d.c.iter().enumerate() {
                    r[k + i] -= &t * di;
                }
            }
            quo[k] = t;
        }
        r.truncate(dd);
        (RatPoly::new(quo), RatPoly::new(r))
    }

    /// Quotient when `d` divides `self`; `None` otherwise.
    pub fn exact_div(&self, d: &RatPoly) -> Option<RatPoly> {
        let (quo, r) = self.div_rem(d);
        r.is_zero().then_some(quo)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Rescales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_rational(&self) -> RatPoly {
        let ints = self.to_primitive_ints();
        RatPoly::new(ints.into_iter().map(BigRational::from_integer).collect())
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn to_primitive_ints(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut ints: Vec<BigInt> = self.c.iter().map(|x| (x * &den).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        let content = content * sign;
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
        ints
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").primitive_rational()
    }

    /// Yun's square-free decomposition: `p = c·Π f_i^i` returned as `(i, f_i)` with nonconstant `f_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, RatPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0).expect("gcd divides");
        let mut c = d.exact_div(&a0).expect("gcd divides");
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.primitive_rational()));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = dd.exact_div(&a).expect("gcd divides");
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn pow(&self, e: usize) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1(&self) -> BigRational {
        self.c.iter().fold(BigRational::zero(), |acc, x| acc + x.abs())
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, o: RatPoly) -> RatPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            } else if a.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let m = a.abs();
            match i {
                0 => write!(f, "{m}")?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{m}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
