//! Complex numbers over [`Real`].

use std::ops::{Add, Div, Mul, Neg, Sub};

use num::complex::Complex64;

use super::real::{Precision, Real};

#[derive(Clone, Debug, PartialEq)]
pub struct CReal {
    pub re: Real,
    pub im: Real,
}

impl CReal {
    pub fn new(re: Real, im: Real) -> Self {
        CReal { re, im }
    }

    pub fn real(re: Real) -> Self {
        let p = re.precision();
        CReal { re, im: Real::zero(p) }
    }

    pub fn zero(p: Precision) -> Self {
        CReal::new(Real::zero(p), Real::zero(p))
    }

    pub fn one(p: Precision) -> Self {
        CReal::new(Real::one(p), Real::zero(p))
    }

    /// `exp(2πi t/n)`.
    pub fn unity(t: i64, n: u64, p: Precision) -> Self {
        let (c, s) = Real::cos_sin_turn(t, n, p);
        CReal::new(c, s)
    }

    pub fn from_c64(z: Complex64, p: Precision) -> Self {
        CReal::new(Real::from_f64(z.re, p), Real::from_f64(z.im, p))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn precision(&self) -> Precision {
        self.re.precision().max(self.im.precision())
    }

    pub fn set_precision(&mut self, p: Precision) {
        self.re.set_precision(p);
        self.im.set_precision(p);
    }

    pub fn conj(&self) -> CReal {
        CReal::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    /// Argument in `(-π, π]`.
    pub fn arg(&self) -> Real {
        Real::atan2(&self.im, &self.re)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &Real) -> CReal {
        CReal::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> CReal {
        let d = self.norm_sqr();
        CReal::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn powi(&self, mut e: usize) -> CReal {
        let mut base = self.clone();
        let mut acc = CReal::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add<&CReal> for &CReal {
    type Output = CReal;
    fn add(self, o: &CReal) -> CReal {
        CReal::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&CReal> for &CReal {
    type Output = CReal;
    fn sub(self, o: &CReal) -> CReal {
        CReal::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&CReal> for &CReal {
    type Output = CReal;
    fn mul(self, o: &CReal) -> CReal {
        CReal::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div<&CReal> for &CReal {
    type Output = CReal;
    fn div(self, o: &CReal) -> CReal {
        let d = o.norm_sqr();
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        CReal::new(re / &d, im / d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CReal> for CReal {
            type Output = CReal;
            fn $m(self, o: CReal) -> CReal {
                (&self).$m(&o)
            }
        }
        impl $tr<&CReal> for CReal {
            type Output = CReal;
            fn $m(self, o: &CReal) -> CReal {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CReal {
    type Output = CReal;
    fn neg(self) -> CReal {
        CReal::new(-self.re, -self.im)
    }
}

/// Horner evaluation of an ascending coefficient slice.
pub fn horner(coeffs: &[CReal], z: &CReal) -> CReal {
    let mut acc = CReal::zero(z.precision());
    for c in coeffs.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}
