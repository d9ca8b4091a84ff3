//! Polynomials with a declared darga, their palindromic structure, σ-coordinates and the
//! parametric family `p_α = α(xⁿ+1) + p`.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::algebra::RatPoly;
use crate::error::{Error, Result};
use crate::numeric::{CReal, ComplexScalar, Precision, Real, Scalar};

/// Relative tolerance for structural predicates on the float track.
pub const EQ_TOLERANCE: f64 = 9.094947017729282e-13; // 2^-40

/// Absolute evaluation budget at roots of unity, relative to the coefficient 1-norm.
pub const EVAL_TOLERANCE: f64 = 8.271806125530277e-25; // 2^-80

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<ComplexScalar>,
    darga: usize,
}

/// Coordinates in the bases `σ_{n,j} = x^j + x^{n−j}` and `σ̂_{n,j} = x^j − x^{n−j}` (imaginary part).
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaRep {
    pub darga: usize,
    pub sigma: Vec<Scalar>,
    pub sigma_hat: Vec<Scalar>,
}

/// Polynomial in `x` whose coefficients are `constant + α·slope`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaPolynomial {
    pub darga: usize,
    pub coeffs: Vec<(ComplexScalar, Scalar)>,
}

fn lowest_nonzero(c: &[ComplexScalar]) -> Option<usize> {
    c.iter().position(|z| !z.is_zero())
}

/// Exact `cos(2πt/n)` when it is rational.
pub fn rational_cos(t: i64, n: u64) -> Option<BigRational> {
    let n = n as i64;
    let t = t.rem_euclid(n);
    let d = n / t.gcd(&n);
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    match d {
        1 => Some(r(1, 1)),
        2 => Some(r(-1, 1)),
        3 => Some(r(-1, 2)),
        4 => Some(r(0, 1)),
        6 => Some(r(1, 2)),
        _ => None,
    }
}

/// Exact `sin(2πt/n)` when it is rational.
pub fn rational_sin(t: i64, n: u64) -> Option<BigRational> {
    let n = n as i64;
    let t = t.rem_euclid(n);
    let g = t.gcd(&n);
    let (t, d) = (t / g, n / g);
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    match d {
        1 | 2 => Some(r(0, 1)),
        4 => Some(if t == 1 { r(1, 1) } else { r(-1, 1) }),
        12 => Some(match t {
            1 | 5 => r(1, 2),
            _ => r(-1, 2),
        }),
        _ => None,
    }
}

/// `cos(2πt/n)` as a scalar: exact when rational, otherwise a float at `p`.
pub fn unity_cos(t: i64, n: u64, p: Precision) -> Scalar {
    match rational_cos(t, n) {
        Some(q) => Scalar::Exact(q),
        None => Scalar::Float(Real::cos_sin_turn(t, n, p).0),
    }
}

/// `sin(2πt/n)` as a scalar: exact when rational, otherwise a float at `p`.
pub fn unity_sin(t: i64, n: u64, p: Precision) -> Scalar {
    match rational_sin(t, n) {
        Some(q) => Scalar::Exact(q),
        None => Scalar::Float(Real::cos_sin_turn(t, n, p).1),
    }
}

/// `θ_n^t` as a complex scalar, exact when both parts are rational.
pub fn unity(t: i64, n: u64, p: Precision) -> ComplexScalar {
    match (rational_cos(t, n), rational_sin(t, n)) {
        (Some(c), Some(s)) => ComplexScalar::new(Scalar::Exact(c), Scalar::Exact(s)),
        _ => {
            let (c, s) = Real::cos_sin_turn(t, n, p);
            ComplexScalar::new(Scalar::Float(c), Scalar::Float(s))
        }
    }
}

fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => x == y,
        _ => (a - b).to_f64().abs() <= tol,
    }
}

impl Polynomial {
    /// Normalizes `coeffs` (ascending powers starting at `x^offset`).
    pub fn make(coeffs: Vec<ComplexScalar>, offset: usize) -> Result<Self> {
        let mut c = vec![ComplexScalar::zero(); offset];
        c.extend(coeffs);
        while c.last().is_some_and(|z| z.is_zero()) {
            c.pop();
        }
        let lo = lowest_nonzero(&c).ok_or(Error::EmptyPolynomial)?;
        let darga = lo + c.len() - 1;
        Ok(Polynomial { coeffs: c, darga })
    }

    /// Real coefficients starting at `x^offset`.
    pub fn from_real(coeffs: Vec<Scalar>, offset: usize) -> Result<Self> {
        Polynomial::make(coeffs.into_iter().map(ComplexScalar::real).collect(), offset)
    }

    pub fn from_ints(coeffs: &[i64], offset: usize) -> Result<Self> {
        Polynomial::from_real(coeffs.iter().map(|&x| Scalar::int(x)).collect(), offset)
    }

    pub fn from_rationals(coeffs: &[BigRational], offset: usize) -> Result<Self> {
        Polynomial::from_real(coeffs.iter().cloned().map(Scalar::Exact).collect(), offset)
    }

    /// Trim input given as the coefficients of `x¹…x^{n−1}`.
    pub fn trim_from(inner: Vec<Scalar>) -> Result<Self> {
        Polynomial::from_real(inner, 1)
    }

    /// The zero polynomial, with its darga fixed by context.
    pub fn zero(darga: usize) -> Self {
        Polynomial { coeffs: Vec::new(), darga }
    }

    /// Same coefficients; declared darga replaced. Only meaningful for the zero polynomial.
    pub fn with_darga(mut self, darga: usize) -> Self {
        if self.is_zero() {
            self.darga = darga;
        }
        self
    }

    pub fn from_ratpoly(r: &RatPoly) -> Self {
        Polynomial::from_rationals(r.coeffs(), 0).unwrap_or_else(|_| Polynomial::zero(0))
    }

    pub fn darga(&self) -> usize {
        self.darga
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ComplexScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(ComplexScalar::zero)
    }

    /// Real part of the coefficient of `x^i`.
    pub fn re(&self, i: usize) -> Scalar {
        self.coeffs.get(i).map(|z| z.re.clone()).unwrap_or_else(Scalar::zero)
    }

    /// Real parts of the coefficients of `x¹…x^{n−1}`.
    pub fn inner_real(&self) -> Vec<Scalar> {
        (1..self.darga).map(|i| self.re(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|z| z.is_real())
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(|z| z.is_exact())
    }

    /// Largest float precision among the coefficients.
    pub fn precision(&self) -> Option<Precision> {
        self.coeffs.iter().filter_map(|z| z.precision()).max()
    }

    /// Working precision for an operation: at least `p` and at least the input's own.
    pub fn working(&self, p: Precision) -> Precision {
        self.precision().map_or(p, |q| q.max(p))
    }

    /// `Σ |Re p_j| + |Im p_j|`.
    pub fn l1(&self) -> f64 {
        self.coeffs.iter().map(|z| z.l1()).sum()
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.l1()).fold(0.0, f64::max)
    }

    fn lowest(&self) -> usize {
        lowest_nonzero(&self.coeffs).unwrap_or(0)
    }

    /// `p_j = conj(p_{n−j})` for all `j`.
    pub fn is_self_inversive(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let n = self.darga;
        let tol = EQ_TOLERANCE * self.max_abs();
        (0..=n).all(|j| {
            let a = self.coeff(j);
            let b = self.coeff(n - j).conj();
            close(&a.re, &b.re, tol) && close(&a.im, &b.im, tol)
        })
    }

    pub fn is_palindromic(&self) -> bool {
        let tol = EQ_TOLERANCE * self.max_abs();
        self.coeffs.iter().all(|z| close(&z.im, &Scalar::zero(), tol)) && self.is_self_inversive()
    }

    /// No constant term (and hence no `x^darga` term when self-inversive).
    pub fn is_trim(&self) -> bool {
        self.is_zero() || self.lowest() > 0
    }

    pub fn is_full(&self) -> bool {
        !self.is_zero() && self.lowest() == 0
    }

    pub fn require_trim_self_inversive(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        if !self.is_trim() {
            return Err(Error::NotTrim);
        }
        if !self.is_self_inversive() {
            return Err(Error::NotSelfInversive);
        }
        Ok(())
    }

    pub fn require_trim_palindromic(&self) -> Result<()> {
        self.require_trim_self_inversive()?;
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        Ok(())
    }

    /// `p − conj(p(0))·xⁿ − p(0)`.
    pub fn trim_part(&self) -> Result<Polynomial> {
        if !self.is_self_inversive() {
            return Err(Error::NotSelfInversive);
        }
        let n = self.darga;
        let mut c = self.coeffs.clone();
        if c.is_empty() {
            return Ok(self.clone());
        }
        c[0] = ComplexScalar::zero();
        if n < c.len() {
            c[n] = ComplexScalar::zero();
        }
        Ok(Polynomial::make(c, 0).unwrap_or_else(|_| Polynomial::zero(n)))
    }

    pub fn sigma(&self) -> Result<SigmaRep> {
        if !self.is_self_inversive() {
            return Err(Error::NotSelfInversive);
        }
        let n = self.darga;
        let sigma = (0..=n / 2)
            .map(|j| {
                let r = self.re(j);
                if 2 * j == n {
                    &r / &Scalar::int(2)
                } else {
                    r
                }
            })
            .collect();
        let sigma_hat = if n == 0 {
            vec![Scalar::zero()]
        } else {
            (0..=(n - 1) / 2).map(|j| self.coeff(j).im).collect()
        };
        Ok(SigmaRep { darga: n, sigma, sigma_hat })
    }

    pub fn from_sigma(s: &SigmaRep) -> Polynomial {
        let n = s.darga;
        let mut c = vec![ComplexScalar::zero(); n + 1];
        for (j, v) in s.sigma.iter().enumerate().take(n / 2 + 1) {
            if 2 * j == n {
                c[j] = ComplexScalar::real(v * &Scalar::int(2));
            } else {
                let h = s.sigma_hat.get(j).cloned().unwrap_or_else(Scalar::zero);
                c[j] = ComplexScalar::new(v.clone(), h.clone());
                c[n - j] = ComplexScalar::new(v.clone(), -&h);
            }
        }
        Polynomial::make(c, 0).unwrap_or_else(|_| Polynomial::zero(n))
    }

    pub fn p_alpha(&self) -> Result<AlphaPolynomial> {
        if !self.is_trim() {
            return Err(Error::NotTrim);
        }
        let n = self.darga;
        let coeffs = (0..=n)
            .map(|k| {
                let slope = if k == 0 || k == n { Scalar::one() } else { Scalar::zero() };
                (self.coeff(k), slope)
            })
            .collect();
        Ok(AlphaPolynomial { darga: n, coeffs })
    }

    /// `p(θ_n^j)`, which is real for self-inversive `p` of darga `n`.
    pub fn eval_unity(&self, n: usize, j: usize) -> Result<Scalar> {
        self.eval_unity_with(n, j, Precision::default())
    }

    pub fn eval_unity_with(&self, n: usize, j: usize, prec: Precision) -> Result<Scalar> {
        if !self.is_zero() && self.darga != n {
            return Err(Error::DargaMismatch { expected: n, found: self.darga });
        }
        if n == 0 {
            return Ok(self.re(0));
        }
        let p = self.working(prec);
        let nn = n as u64;
        let exact = self.is_exact()
            && self.coeffs.iter().enumerate().all(|(k, z)| {
                let t = (j * k) as i64;
                rational_cos(t, nn).is_some() && (z.im.is_zero() || rational_sin(t, nn).is_some())
            });
        if exact {
            let mut acc = Scalar::zero();
            for (k, z) in self.coeffs.iter().enumerate() {
                if z.is_zero() {
                    continue;
                }
                let t = (j * k) as i64;
                acc = acc + &z.re * &Scalar::Exact(rational_cos(t, nn).unwrap());
                if !z.im.is_zero() {
                    acc = acc - &z.im * &Scalar::Exact(rational_sin(t, nn).unwrap());
                }
            }
            return Ok(acc);
        }
        let work = p.plus(32);
        let mut re = Real::zero(work);
        let mut im = Real::zero(work);
        for (k, z) in self.coeffs.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            let (c, s) = Real::cos_sin_turn((j * k) as i64, nn, work);
            let a = z.re.to_real(work);
            let b = z.im.to_real(work);
            re = re + (&a * &c - &b * &s);
            im = im + (&a * &s + &b * &c);
        }
        let scale = 1.0 + self.l1();
        let budget = (EVAL_TOLERANCE.max(p.tie_threshold() * 1e-6)).max(if self.is_exact() {
            0.0
        } else {
            EQ_TOLERANCE * 4.0
        });
        if im.to_f64().abs() > budget * scale {
            return Err(Error::NotSelfInversive);
        }
        Ok(Scalar::Float(re.with_precision(p)))
    }

    /// Value at an arbitrary complex point.
    pub fn eval_at(&self, z: &CReal, p: Precision) -> CReal {
        let mut acc = CReal::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &c.to_creal(p);
        }
        acc
    }

    pub fn to_creal(&self, p: Precision) -> Vec<CReal> {
        self.coeffs.iter().map(|z| z.to_creal(p)).collect()
    }

    /// Exact real coefficients as a rational polynomial.
    pub fn to_ratpoly(&self) -> Option<RatPoly> {
        if !self.is_real() {
            return None;
        }
        let c: Option<Vec<BigRational>> = self.coeffs.iter().map(|z| z.re.as_rational().cloned()).collect();
        c.map(RatPoly::new)
    }

    fn rebuilt(c: Vec<ComplexScalar>, fallback_darga: usize) -> Polynomial {
        Polynomial::make(c, 0).unwrap_or_else(|_| Polynomial::zero(fallback_darga))
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(o.coeffs.len());
        let c = (0..len).map(|i| &self.coeff(i) + &o.coeff(i)).collect();
        Polynomial::rebuilt(c, self.darga.max(o.darga))
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|z| -z).collect(), darga: self.darga }
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        let k = ComplexScalar::real(s.clone());
        let c = self.coeffs.iter().map(|z| z * &k).collect();
        Polynomial::rebuilt(c, self.darga)
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero(self.darga + o.darga);
        }
        let mut c = vec![ComplexScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = &c[i + j] + &(a * b);
                }
            }
        }
        Polynomial::rebuilt(c, self.darga + o.darga)
    }

    pub fn derivative(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, z)| z * &ComplexScalar::real(Scalar::int(k as i64)))
            .collect();
        Polynomial::rebuilt(c, 0)
    }

    /// Monic gcd over the rationals.
    pub fn exact_gcd(&self, o: &Polynomial) -> Result<Polynomial> {
        match (self.to_ratpoly(), o.to_ratpoly()) {
            (Some(a), Some(b)) => Ok(Polynomial::from_ratpoly(&a.gcd(&b))),
            _ => Err(Error::NotSupported("gcd needs exact real coefficients".into())),
        }
    }

    /// `p(x^r)`.
    pub fn inflate(&self, r: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(self.darga * r);
        }
        let mut c = vec![ComplexScalar::zero(); (self.coeffs.len() - 1) * r + 1];
        for (i, z) in self.coeffs.iter().enumerate() {
            c[i * r] = z.clone();
        }
        Polynomial::rebuilt(c, self.darga * r)
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, z)| if k % 2 == 1 { -z } else { z.clone() })
            .collect();
        Polynomial::rebuilt(c, self.darga)
    }

    /// All coefficients moved to the float track at precision `p`.
    pub fn to_float(&self, p: Precision) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .map(|z| ComplexScalar::new(z.re.to_float(p), z.im.to_float(p)))
            .collect();
        Polynomial { coeffs: c, darga: self.darga }
    }

    /// Comma-separated coefficients of `x¹…x^{n−1}` (the shared text format for trim input).
    pub fn to_text(&self) -> String {
        (1..self.darga)
            .map(|i| {
                let z = self.coeff(i);
                if z.im.is_zero() {
                    scalar_text(&z.re)
                } else {
                    format!("{}{:+}i", scalar_text(&z.re), z.im.to_f64())
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn scalar_text(s: &Scalar) -> String {
    match s {
        Scalar::Exact(q) => q.to_string(),
        Scalar::Float(r) => r.to_string(),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, z) in self.coeffs.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if z.im.is_zero() {
                write!(f, "{}", z.re)?;
            } else {
                write!(f, "({} + {}i)", z.re, z.im)?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl SigmaRep {
    pub fn zero(darga: usize) -> Self {
        SigmaRep {
            darga,
            sigma: vec![Scalar::zero(); darga / 2 + 1],
            sigma_hat: vec![Scalar::zero(); if darga == 0 { 1 } else { (darga - 1) / 2 + 1 }],
        }
    }

    /// Real σ-coordinates given for indices `1..=⌊n/2⌋`.
    pub fn trim_real(darga: usize, sigma: Vec<Scalar>) -> Result<Self> {
        if sigma.len() != darga / 2 {
            return Err(Error::DargaMismatch { expected: darga / 2, found: sigma.len() });
        }
        let mut s = SigmaRep::zero(darga);
        for (k, v) in sigma.into_iter().enumerate() {
            s.sigma[k + 1] = v;
        }
        Ok(s)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_sigma(self)
    }
}

impl AlphaPolynomial {
    /// `α·a(x) + b(x)`.
    pub fn from_parts(b: &Polynomial, a: &Polynomial, darga: usize) -> Self {
        let len = b.coeffs.len().max(a.coeffs.len());
        let coeffs = (0..len).map(|k| (b.coeff(k), a.coeff(k).re)).collect();
        AlphaPolynomial { darga, coeffs }
    }

    pub fn instantiate(&self, alpha: &Scalar) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .map(|(b, a)| &ComplexScalar::real(alpha * a) + b)
            .collect();
        Polynomial::rebuilt(c, self.darga)
    }

    /// Each coefficient as a rational polynomial in α, when everything is exact and real.
    pub fn to_ratpolys(&self) -> Option<Vec<RatPoly>> {
        let mut out: Vec<RatPoly> = self
            .coeffs
            .iter()
            .map(|(b, a)| {
                if !b.is_real() {
                    return None;
                }
                Some(RatPoly::new(vec![b.re.as_rational()?.clone(), a.as_rational()?.clone()]))
            })
            .collect::<Option<_>>()?;
        while out.last().is_some_and(|r| r.is_zero()) {
            out.pop();
        }
        Some(out)
    }

    /// The `α`-free part and the `α` slope as separate polynomials.
    pub fn parts(&self) -> (Polynomial, Polynomial) {
        let b = Polynomial::rebuilt(self.coeffs.iter().map(|(b, _)| b.clone()).collect(), self.darga);
        let a = Polynomial::rebuilt(
            self.coeffs.iter().map(|(_, a)| ComplexScalar::real(a.clone())).collect(),
            self.darga,
        );
        (b, a)
    }
}

/// `C(n, k)` as a big integer.
pub fn binomial_coefficient(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sign of a scalar compared with zero within an absolute tolerance on the float track.
pub fn sign_within(s: &Scalar, tol: f64) -> i32 {
    match s {
        Scalar::Exact(q) => {
            if q.is_zero() {
                0
            } else if q.is_negative() {
                -1
            } else {
                1
            }
        }
        Scalar::Float(r) => {
            let v = r.to_f64();
            if v.abs() <= tol {
                0
            } else if v < 0.0 {
                -1
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c, 0).unwrap()
    }

    #[test]
    fn darga_from_offsets() {
        assert_eq!(ints(&[1, 2, 3, 2, 1]).darga(), 4);
        assert_eq!(Polynomial::from_ints(&[1, 1], 1).unwrap().darga(), 3);
        let p = ints(&[0, 5, 0]);
        assert_eq!((p.darga(), p.degree()), (2, Some(1)));
    }

    #[test]
    fn all_zero_is_rejected() {
        assert_eq!(Polynomial::from_ints(&[0, 0, 0], 0), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn palindromic_predicates() {
        assert!(Polynomial::from_ints(&[1, 1], 1).unwrap().is_palindromic());
        assert!(Polynomial::from_ints(&[1, -1, -1, 1], 1).unwrap().is_palindromic());
        assert!(!Polynomial::from_ints(&[1, 2], 1).unwrap().is_palindromic());
        let z = ComplexScalar::new(Scalar::int(1), Scalar::int(2));
        let si = Polynomial::make(vec![z.clone(), ComplexScalar::real(Scalar::int(3)), z.conj()], 1).unwrap();
        assert!(si.is_self_inversive() && !si.is_palindromic());
    }

    #[test]
    fn trimmed_parts() {
        assert_eq!(ints(&[1, 4, 6, 4, 1]).trim_part().unwrap(), Polynomial::from_ints(&[4, 6, 4], 1).unwrap());
        let t = ints(&[1, 0, 0, 0, 1]).trim_part().unwrap();
        assert!(t.is_zero() && t.darga() == 4);
        assert_eq!(ints(&[2, 3, 2]).trim_part().unwrap(), ints(&[0, 3]));
        assert_eq!(ints(&[1, 2]).trim_part(), Err(Error::NotSelfInversive));
    }

    #[test]
    fn sigma_coordinates() {
        let p = Polynomial::from_ints(&[50, 86, 99, 86, 50], 1).unwrap();
        let s = p.sigma().unwrap();
        assert_eq!(s.sigma, vec![Scalar::zero(), Scalar::int(50), Scalar::int(86), Scalar::ratio(99, 2)]);
        assert_eq!(Polynomial::from_sigma(&s), p);
        let q = SigmaRep::trim_real(6, vec![Scalar::int(172), Scalar::int(100), Scalar::int(198)]).unwrap();
        assert_eq!(q.to_polynomial(), Polynomial::from_ints(&[172, 100, 396, 100, 172], 1).unwrap());
        let z = Polynomial::zero(5).sigma().unwrap();
        assert!(z.sigma.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn alpha_family() {
        let p = Polynomial::from_ints(&[-2], 1).unwrap();
        let ap = p.p_alpha().unwrap();
        assert_eq!(ap.instantiate(&Scalar::one()), ints(&[1, -2, 1]));
        let q = Polynomial::from_ints(&[2, 2], 1).unwrap();
        let inst = q.p_alpha().unwrap().instantiate(&Scalar::ratio(2, 3));
        assert_eq!(
            inst,
            Polynomial::from_real(vec![Scalar::ratio(2, 3), Scalar::int(2), Scalar::int(2), Scalar::ratio(2, 3)], 0)
                .unwrap()
        );
        assert_eq!(q.p_alpha().unwrap().instantiate(&Scalar::zero()), q);
        assert_eq!(ints(&[1, 1]).p_alpha(), Err(Error::NotTrim));
    }

    #[test]
    fn values_at_roots_of_unity() {
        let ge6 = Polynomial::from_ints(&[1, 1, 1, 1, 1], 1).unwrap();
        assert_eq!(ge6.eval_unity(6, 0).unwrap(), Scalar::int(5));
        assert_eq!(ge6.eval_unity(6, 1).unwrap(), Scalar::int(-1));
        assert!(ge6.eval_unity(6, 1).unwrap().is_exact());
        let tgcd6 = Polynomial::from_ints(&[1, 2, 3, 2, 1], 1).unwrap();
        assert_eq!(tgcd6.eval_unity(6, 1).unwrap(), Scalar::int(-4));
        let ge7 = Polynomial::from_ints(&[1; 6], 1).unwrap();
        assert!((ge7.eval_unity(7, 3).unwrap().to_f64() + 1.0).abs() < 1e-30);
        assert!(matches!(ge7.eval_unity(6, 1), Err(Error::DargaMismatch { .. })));
    }

    #[test]
    fn ring_operations() {
        assert_eq!(ints(&[1, 0, 0, 1]).derivative(), ints(&[0, 0, 3]));
        assert_eq!(ints(&[-1, 0, 1]).exact_gcd(&ints(&[-1, 0, 0, 1])).unwrap(), ints(&[-1, 1]));
        assert_eq!(ints(&[1, 1]).mul(&ints(&[1, 1])), ints(&[1, 2, 1]));
        assert_eq!(ints(&[0, 1, 2]).reflect(), ints(&[0, -1, 2]));
        assert_eq!(ints(&[0, 1, 2]).inflate(2), ints(&[0, 0, 1, 0, 2]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_coefficient(6, 3), BigInt::from(20));
        assert_eq!(binomial_coefficient(3, 5), BigInt::zero());
    }
}
