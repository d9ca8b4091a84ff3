//! Circle number `cn(p)`: discriminants in `α`, the Cayley map and the Hecke shortcut, together with
//! circle certs, exactness and the bounding error.

use std::f64::consts::{PI, TAU};

use num::{BigInt, BigRational, Zero};

use crate::algebra::det::{discriminant_in_alpha, float_discriminant_in_alpha};
use crate::algebra::roots::{all_roots, cluster};
use crate::algebra::sturm::{largest_real_root, RealRoot};
use crate::algebra::RatPoly;
use crate::error::{Error, Result};
use crate::interlace::{certified_max, interlace_number_with, ll_bound, InterlaceResult};
use crate::numeric::{CReal, ComplexScalar, Precision, Real, Scalar};
use crate::polycore::{binomial_coefficient, sign_within, unity, unity_sin, Polynomial};

/// Roots closer than this (relative) are one multiple root.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;
const UNIT_TOLERANCE: f64 = 1e-6;
const REAL_ROOT_TOLERANCE: f64 = 1e-9;
const GCD_TOLERANCE: f64 = 1e-20;
const EXACT_TOLERANCE: f64 = 1e-8;
const ANGLE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleMethod {
    Hecke,
    Discriminant,
}

impl CircleMethod {
    pub fn name(self) -> &'static str {
        match self {
            CircleMethod::Hecke => "hecke",
            CircleMethod::Discriminant => "discriminant",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CircleResult {
    pub value: Scalar,
    /// Double roots of `p_cn` on the unit circle (upper half plane for real input), by argument.
    pub certs: Vec<CReal>,
    pub method: CircleMethod,
    /// Ascending coefficients of the `α`-polynomial whose largest real root was taken.
    pub disc_poly: Vec<Scalar>,
    /// True when the root was isolated by Sturm sequences on the rational track.
    pub isolated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactnessRoute {
    PofoneFastPath,
    DoubleRootTest,
}

impl ExactnessRoute {
    pub fn name(self) -> &'static str {
        match self {
            ExactnessRoute::PofoneFastPath => "pofone_fast_path",
            ExactnessRoute::DoubleRootTest => "double_root_test",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactnessVerdict {
    pub exact: bool,
    pub route: ExactnessRoute,
    /// An interlace cert that is also a double root of `p_il`.
    pub witness: Option<usize>,
    /// Whether the verdict agrees with a direct comparison of `il` and `cn`.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CnLowerBounds {
    pub binomial: Scalar,
    pub at_one: Scalar,
    pub at_minus_one: Option<Scalar>,
    pub derivative_at_minus_one: Option<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UpperBound {
    pub bound: Scalar,
    pub equality: bool,
}

/// `q = α·a + b` after removing `gcd(p, xⁿ+1)`.
enum Reduced {
    Exact { a: RatPoly, b: RatPoly },
    Float { a: Vec<CReal>, b: Vec<CReal> },
}

fn cpoly_zero_tail(mut c: Vec<CReal>) -> Vec<CReal> {
    while c.len() > 1 && c.last().is_some_and(|z| z.is_zero()) {
        c.pop();
    }
    c
}

/// Quotient of `c` by `x − z`; the remainder is dropped.
fn deflate(c: &[CReal], z: &CReal) -> Vec<CReal> {
    let c = cpoly_zero_tail(c.to_vec());
    let m = c.len() - 1;
    if m == 0 {
        return c;
    }
    let mut q = vec![CReal::zero(z.precision()); m];
    q[m - 1] = c[m].clone();
    for k in (1..m).rev() {
        q[k - 1] = &c[k] + &(z * &q[k]);
    }
    q
}

fn xn_plus_one_creal(n: usize, p: Precision) -> Vec<CReal> {
    let mut c = vec![CReal::zero(p); n + 1];
    c[0] = CReal::one(p);
    c[n] = CReal::one(p);
    c
}

/// Roots `ζ` of `xⁿ+1` with `|p(ζ)|` negligible against `‖p‖`.
fn vanishing_roots(p: &Polynomial, prec: Precision) -> Vec<CReal> {
    let n = p.darga();
    let tol = GCD_TOLERANCE.max(prec.tie_threshold()) * (1.0 + p.l1());
    (0..n)
        .map(|k| CReal::unity(2 * k as i64 + 1, 2 * n as u64, prec))
        .filter(|z| p.eval_at(z, prec).abs().to_f64() < tol)
        .collect()
}

fn drop_imaginary(c: Vec<CReal>) -> Vec<CReal> {
    c.into_iter()
        .map(|z| {
            let p = z.precision();
            CReal::new(z.re, Real::zero(p))
        })
        .collect()
}

/// `(xⁿ+1)/g` and `p/g` for rational `p`, with `g = gcd(p, xⁿ+1)`.
pub(crate) fn reduce_exact(p: &Polynomial) -> Option<(RatPoly, RatPoly, RatPoly)> {
    let r = p.to_ratpoly()?;
    let x = RatPoly::xn_plus_one(p.darga());
    let g = r.gcd(&x);
    Some((x.exact_div(&g)?, r.exact_div(&g)?, g))
}

fn reduce(p: &Polynomial, prec: Precision) -> Result<Reduced> {
    let n = p.darga();
    if p.to_ratpoly().is_some() {
        let (a, b, _) = reduce_exact(p).ok_or_else(|| Error::InternalInconsistency("gcd does not divide".into()))?;
        return Ok(Reduced::Exact { a, b });
    }
    let mut a = xn_plus_one_creal(n, prec);
    let mut b = p.to_creal(prec);
    for z in vanishing_roots(p, prec) {
        a = deflate(&a, &z);
        b = deflate(&b, &z);
    }
    if p.is_real() || p.is_palindromic() {
        a = drop_imaginary(a);
        b = drop_imaginary(b);
    }
    b.resize(a.len(), CReal::zero(prec));
    Ok(Reduced::Float { a, b })
}

/// `gcd(p, xⁿ+1)`, monic.
pub fn gcd_xn1(p: &Polynomial) -> Result<Polynomial> {
    p.require_trim_self_inversive()?;
    let n = p.darga();
    if let Some(r) = p.to_ratpoly() {
        return Ok(Polynomial::from_ratpoly(&r.gcd(&RatPoly::xn_plus_one(n))));
    }
    let prec = p.working(Precision::default());
    let mut g = vec![CReal::one(prec)];
    for z in vanishing_roots(p, prec) {
        let mut next = vec![CReal::zero(prec); g.len() + 1];
        for (k, c) in g.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * &z);
        }
        g = next;
    }
    let real = p.is_real();
    let coeffs = g
        .into_iter()
        .map(|z| {
            let im = if real { Scalar::zero() } else { Scalar::Float(z.im) };
            ComplexScalar::new(Scalar::Float(z.re), im)
        })
        .collect();
    Polynomial::make(coeffs, 0)
}

fn ratpoly_scalars(r: &RatPoly) -> Vec<Scalar> {
    r.coeffs().iter().cloned().map(Scalar::Exact).collect()
}

fn alpha_coeffs(a: &RatPoly, b: &RatPoly) -> Vec<RatPoly> {
    let d = a.degree().unwrap_or(0);
    (0..=d).map(|k| RatPoly::new(vec![b.coeff(k), a.coeff(k)])).collect()
}

fn root_scalar(r: &mut RealRoot, prec: Precision) -> Scalar {
    match r.detect_rational() {
        Some(q) => Scalar::Exact(q),
        None => Scalar::Float(r.to_real(prec)),
    }
}

fn no_root() -> Error {
    Error::InternalInconsistency("the α-discriminant has no real root".into())
}

/// Largest real root of a float polynomial, accepting roots with `|Im| < 10⁻⁹·max(1, |z|)`.
fn largest_real_float_root(c: &[CReal], prec: Precision) -> Result<Option<Real>> {
    let c = cpoly_zero_tail(c.to_vec());
    if c.len() <= 1 {
        return Ok(None);
    }
    let roots = all_roots(&c, prec)?;
    Ok(roots
        .into_iter()
        .filter(|z| {
            let w = z.to_c64();
            w.im.abs() < REAL_ROOT_TOLERANCE * w.norm().max(1.0)
        })
        .map(|z| z.re)
        .reduce(|a, b| a.max(b)))
}

/// Divides by the leading coefficient so a polynomial real up to a phase becomes real.
fn monic_real_parts(c: &[CReal]) -> Vec<Scalar> {
    let c = cpoly_zero_tail(c.to_vec());
    let lead = c.last().cloned().expect("nonempty");
    if lead.is_zero() {
        return vec![Scalar::zero()];
    }
    c.iter().map(|z| Scalar::Float((z / &lead).re)).collect()
}

/// The discriminant path: largest real root of `Disc_x(p_α / g)`.
fn disc_path(p: &Polynomial, wp: Precision) -> Result<(Scalar, Vec<Scalar>, bool)> {
    match reduce(p, wp)? {
        Reduced::Exact { a, b } => {
            let d = discriminant_in_alpha(&alpha_coeffs(&a, &b));
            let mut root = largest_real_root(&d).ok_or_else(no_root)?;
            Ok((root_scalar(&mut root, wp), ratpoly_scalars(&d), true))
        }
        Reduced::Float { a, b } => {
            let hp = wp.doubled();
            let pairs: Vec<(CReal, CReal)> = b
                .iter()
                .zip(a.iter())
                .map(|(u, v)| (with_prec(u, hp), with_prec(v, hp)))
                .collect();
            let radius = Real::from_f64(ll_bound(p).to_f64().max(1.0), hp);
            let dc = float_discriminant_in_alpha(&pairs, &radius, hp);
            let monic: Vec<CReal> = monic_real_parts(&dc).iter().map(|s| CReal::real(s.to_real(hp))).collect();
            let v = largest_real_float_root(&monic, hp)?.ok_or_else(no_root)?;
            Ok((Scalar::Float(v.with_precision(wp)), monic_real_parts(&dc), false))
        }
    }
}

fn with_prec(z: &CReal, p: Precision) -> CReal {
    let mut w = z.clone();
    w.set_precision(p);
    w
}

/// Circle number via the largest real root of the discriminant in `α`.
pub fn circle_number(p: &Polynomial) -> Result<CircleResult> {
    circle_number_with(p, Precision::default())
}

pub fn circle_number_with(p: &Polynomial, prec: Precision) -> Result<CircleResult> {
    p.require_trim_self_inversive()?;
    let wp = p.working(prec);
    let (value, disc_poly, isolated) = disc_path(p, wp)?;
    let certs = circle_certs(p, &value, wp)?;
    Ok(CircleResult { value, certs, method: CircleMethod::Discriminant, disc_poly, isolated })
}

/// The `α`-discriminant `Disc_x(p_α / gcd(p, xⁿ+1))`, ascending.
pub fn alpha_discriminant(p: &Polynomial) -> Result<Vec<Scalar>> {
    p.require_trim_self_inversive()?;
    let wp = p.working(Precision::default());
    match reduce(p, wp)? {
        Reduced::Exact { a, b } => Ok(ratpoly_scalars(&discriminant_in_alpha(&alpha_coeffs(&a, &b)))),
        Reduced::Float { .. } => disc_path(p, wp).map(|r| r.1),
    }
}

/// Double roots of `p_α` on the unit circle.
pub fn circle_certs(p: &Polynomial, alpha: &Scalar, prec: Precision) -> Result<Vec<CReal>> {
    let full = p.p_alpha()?.instantiate(alpha);
    let c = full.to_creal(prec);
    let roots = all_roots(&c, prec)?;
    let real = p.is_palindromic();
    let mut out: Vec<CReal> = cluster(&roots, CLUSTER_TOLERANCE)
        .into_iter()
        .filter(|(z, m)| {
            let w = z.to_c64();
            *m >= 2 && (w.norm() - 1.0).abs() < UNIT_TOLERANCE && (!real || w.im > -UNIT_TOLERANCE)
        })
        .map(|(z, _)| z)
        .collect();
    out.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
    Ok(out)
}

fn angle(z: &CReal) -> f64 {
    let t = z.to_c64().arg();
    if t < -1e-12 {
        t + TAU
    } else {
        t.max(0.0)
    }
}

fn cmul(a: &[ComplexScalar], b: &[ComplexScalar]) -> Vec<ComplexScalar> {
    let mut c = vec![ComplexScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = &c[i + j] + &(x * y);
        }
    }
    c
}

fn gaussian(re: i64, im: i64) -> ComplexScalar {
    ComplexScalar::new(Scalar::int(re), Scalar::int(im))
}

/// `Σ c_k ω^k (x−i)^k (x+i)^{deg−k}`.
pub(crate) fn cayley_coeffs(c: &[ComplexScalar], deg: usize, omega: impl Fn(usize) -> ComplexScalar) -> Vec<ComplexScalar> {
    let minus = [gaussian(0, -1), gaussian(1, 0)];
    let plus = [gaussian(0, 1), gaussian(1, 0)];
    let mut pm = vec![vec![gaussian(1, 0)]];
    let mut pp = vec![vec![gaussian(1, 0)]];
    for k in 0..deg {
        pm.push(cmul(&pm[k], &minus));
        pp.push(cmul(&pp[k], &plus));
    }
    let mut out = vec![ComplexScalar::zero(); deg + 1];
    for (k, ck) in c.iter().enumerate().take(deg + 1) {
        if ck.is_zero() {
            continue;
        }
        let w = ck * &omega(k);
        for (i, t) in cmul(&pm[k], &pp[deg - k]).iter().enumerate() {
            out[i] = &out[i] + &(&w * t);
        }
    }
    out
}

/// `S_ω(p) = (x+i)ⁿ p(ω(x−i)/(x+i))` with `ω = θ_n^j`; a real polynomial for self-inversive `p`.
pub fn cayley(p: &Polynomial, n: usize, j: usize) -> Result<Polynomial> {
    if !p.is_self_inversive() {
        return Err(Error::NotSelfInversive);
    }
    if !p.is_zero() && p.darga() != n {
        return Err(Error::DargaMismatch { expected: n, found: p.darga() });
    }
    let prec = p.working(Precision::default());
    let c: Vec<ComplexScalar> = (0..=n).map(|k| p.coeff(k)).collect();
    let out = cayley_coeffs(&c, n, |k| unity((j * k) as i64, n as u64, prec));
    let tol = 1e-20_f64.max(prec.tie_threshold()) * (1.0 + p.l1()) * 2f64.powi(n as i32);
    if out.iter().any(|z| z.im.to_f64().abs() > tol) {
        return Err(Error::InternalInconsistency("Cayley image is not real".into()));
    }
    let re = out.into_iter().map(|z| z.re).collect();
    Ok(Polynomial::from_real(re, 0).unwrap_or_else(|_| Polynomial::zero(0)))
}

fn cayley_real(c: &[ComplexScalar], deg: usize) -> Vec<Scalar> {
    cayley_coeffs(c, deg, |_| gaussian(1, 0)).into_iter().map(|z| z.re).collect()
}

/// `H(q)`: the coefficient of `x^j` is the coefficient of `x^{2j}` in `q`.
pub fn hecke(q: &Polynomial) -> Polynomial {
    let c: Vec<ComplexScalar> = q.coeffs().iter().step_by(2).cloned().collect();
    Polynomial::make(c, 0).unwrap_or_else(|_| Polynomial::zero(0))
}

/// The `U_n` index where `p` is largest (smallest index on ties).
pub fn choose_omega(p: &Polynomial) -> Result<usize> {
    p.require_trim_self_inversive()?;
    let n = p.darga();
    let (_, pos, _, _) = certified_max(
        |q| (0..n).map(|j| p.eval_unity_with(n, j, q)).collect(),
        Precision::default(),
        p.precision(),
        p.l1(),
    )?;
    pos.first().copied().ok_or_else(|| Error::InternalInconsistency("empty sweep".into()))
}

fn derivative_at_minus_one(p: &Polynomial) -> Scalar {
    (1..=p.darga()).fold(Scalar::zero(), |acc, k| {
        let t = &p.re(k) * &Scalar::int(k as i64);
        if k % 2 == 1 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// `−p(−1)/2` for even darga, `−p′(−1)/n` for odd darga.
fn minus_one_bound(p: &Polynomial, prec: Precision) -> Result<Scalar> {
    let n = p.darga();
    if n % 2 == 0 {
        Ok(&p.eval_unity_with(n, n / 2, prec)? * &Scalar::ratio(-1, 2))
    } else {
        Ok(&derivative_at_minus_one(p) * &Scalar::ratio(-1, n as i64))
    }
}

/// Circle number of a palindromic polynomial as `max{r₁, r₂, r₃}` with `r₃` from `Disc(H(S₁(q)))`.
pub fn circle_number_palindromic(p: &Polynomial) -> Result<CircleResult> {
    circle_number_palindromic_with(p, Precision::default())
}

pub fn circle_number_palindromic_with(p: &Polynomial, prec: Precision) -> Result<CircleResult> {
    p.require_trim_palindromic()?;
    let n = p.darga();
    let wp = p.working(prec);
    let r1 = &p.eval_unity_with(n, 0, wp)? * &Scalar::ratio(-1, 2);
    let r2 = minus_one_bound(p, wp)?;
    let best = if r2 > r1 { r2 } else { r1 };
    let odd_degree = || Error::InternalInconsistency("reduced palindromic part has odd degree".into());
    let (value, disc_poly, isolated) = match reduce(p, wp)? {
        Reduced::Exact { a, b } => {
            let d = a.degree().unwrap_or(0);
            if d % 2 == 1 {
                return Err(odd_degree());
            }
            let lift = |r: &RatPoly| -> Vec<ComplexScalar> {
                (0..=d).map(|k| ComplexScalar::real(Scalar::Exact(r.coeff(k)))).collect()
            };
            let sa = cayley_real(&lift(&a), d);
            let sb = cayley_real(&lift(&b), d);
            let h: Vec<RatPoly> = (0..=d / 2)
                .map(|k| {
                    let pick = |s: &[Scalar]| s[2 * k].as_rational().cloned().unwrap_or_default();
                    RatPoly::new(vec![pick(&sb), pick(&sa)])
                })
                .collect();
            let disc = discriminant_in_alpha(&h);
            let m = best.as_rational().cloned().ok_or_else(|| Error::InternalInconsistency("inexact bound".into()))?;
            let value = match largest_real_root(&disc) {
                Some(mut r3) => {
                    if r3.cmp_rational(&m) == std::cmp::Ordering::Greater {
                        root_scalar(&mut r3, wp)
                    } else {
                        best
                    }
                }
                None => best,
            };
            (value, ratpoly_scalars(&disc), true)
        }
        Reduced::Float { a, b } => {
            let d = cpoly_zero_tail(a.clone()).len() - 1;
            if d % 2 == 1 {
                return Err(odd_degree());
            }
            let hp = wp.doubled();
            let lift = |c: &[CReal]| -> Vec<ComplexScalar> {
                (0..=d)
                    .map(|k| {
                        let z = c.get(k).cloned().unwrap_or_else(|| CReal::zero(hp));
                        ComplexScalar::real(Scalar::Float(z.re.with_precision(hp)))
                    })
                    .collect()
            };
            let sa = cayley_real(&lift(&a), d);
            let sb = cayley_real(&lift(&b), d);
            let pairs: Vec<(CReal, CReal)> = (0..=d / 2)
                .map(|k| (CReal::real(sb[2 * k].to_real(hp)), CReal::real(sa[2 * k].to_real(hp))))
                .collect();
            let radius = Real::from_f64(ll_bound(p).to_f64().max(1.0), hp);
            let dc = float_discriminant_in_alpha(&pairs, &radius, hp);
            let disc = monic_real_parts(&dc);
            let monic: Vec<CReal> = disc.iter().map(|s| CReal::real(s.to_real(hp))).collect();
            let value = match largest_real_float_root(&monic, hp)? {
                Some(r3) if Scalar::Float(r3.clone()) > best => Scalar::Float(r3.with_precision(wp)),
                _ => best,
            };
            (value, disc, false)
        }
    };
    let certs = circle_certs(p, &value, wp)?;
    Ok(CircleResult { value, certs, method: CircleMethod::Hecke, disc_poly, isolated })
}

/// Palindromic input takes the Hecke path, other self-inversive input the discriminant path.
pub fn circle_number_auto(p: &Polynomial) -> Result<CircleResult> {
    if p.is_palindromic() {
        circle_number_palindromic(p)
    } else {
        circle_number(p)
    }
}

/// `R(p) = n x^{n−1} p(x) − (xⁿ+1) p′(x)`.
#[allow(non_snake_case)]
pub fn R_polynomial(p: &Polynomial) -> Result<Polynomial> {
    p.require_trim_self_inversive()?;
    let n = p.darga();
    let mono = Polynomial::from_real(vec![Scalar::int(n as i64)], n - 1)?;
    let xn1 = Polynomial::from_ints(&[1], 0)?.add(&Polynomial::from_ints(&[1], n)?);
    Ok(p.mul(&mono).sub(&xn1.mul(&p.derivative())))
}

/// `|R(p)(z)| / (1 + ‖R(p)‖₁)`.
pub fn r_residual(p: &Polynomial, z: &CReal, prec: Precision) -> Result<f64> {
    let r = R_polynomial(p)?;
    Ok(r.eval_at(z, prec).abs().to_f64() / (1.0 + r.l1()))
}

fn modulus(z: &ComplexScalar) -> Scalar {
    if z.im.is_zero() {
        return z.re.abs();
    }
    let p = z.precision().unwrap_or_default();
    let (a, b) = (z.re.to_real(p), z.im.to_real(p));
    Scalar::Float((&a * &a + &b * &b).sqrt())
}

pub fn cn_lower_bounds(p: &Polynomial) -> Result<CnLowerBounds> {
    p.require_trim_self_inversive()?;
    let n = p.darga();
    let prec = p.working(Precision::default());
    let binomial = (1..n)
        .map(|k| &modulus(&p.coeff(k)) / &Scalar::Exact(BigRational::from_integer(binomial_coefficient(n, k))))
        .reduce(|a, b| if b > a { b } else { a })
        .unwrap_or_else(Scalar::zero);
    let at_one = &p.eval_unity_with(n, 0, prec)? * &Scalar::ratio(-1, 2);
    let (mut at_minus_one, mut derivative) = (None, None);
    if p.is_palindromic() {
        if n % 2 == 0 {
            at_minus_one = Some(minus_one_bound(p, prec)?);
        } else {
            derivative = Some(minus_one_bound(p, prec)?);
        }
    }
    Ok(CnLowerBounds { binomial, at_one, at_minus_one, derivative_at_minus_one: derivative })
}

/// `p₁` when the first half of the coefficients is nonnegative and nonincreasing.
pub fn chen_bound(p: &Polynomial) -> Option<Scalar> {
    p.require_trim_palindromic().ok()?;
    let half: Vec<Scalar> = (1..=p.darga() / 2).map(|k| p.re(k)).collect();
    let ok = half.iter().all(|c| c.signum() >= 0) && half.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        half.first().cloned()
    } else {
        None
    }
}

fn alternates(first: &[f64], second: &[f64]) -> bool {
    let n = first.len();
    (0..n).all(|k| {
        let next = first.get(k + 1).copied().unwrap_or(f64::INFINITY);
        first[k] <= second[k] + ANGLE_TOLERANCE && second[k] <= next + ANGLE_TOLERANCE
    })
}

/// Weak angle-interlacing of `roots` with the roots of `xⁿ+1`.
fn angle_interlaces_xn1(roots: &[CReal], n: usize) -> bool {
    if roots.len() != n {
        return false;
    }
    let b: Vec<f64> = (0..n).map(|k| PI * (2 * k + 1) as f64 / n as f64).collect();
    let raw: Vec<f64> = roots.iter().map(angle).collect();
    // an argument next to 0 may be read at either end of [0, 2π)
    [false, true].into_iter().any(|wrap_low| {
        let mut a: Vec<f64> = raw
            .iter()
            .map(|&t| {
                if wrap_low && t < ANGLE_TOLERANCE {
                    t + TAU
                } else if !wrap_low && TAU - t < ANGLE_TOLERANCE {
                    t - TAU
                } else {
                    t
                }
            })
            .collect();
        a.sort_by(f64::total_cmp);
        alternates(&a, &b) || alternates(&b, &a)
    })
}

/// `q(0)` as an upper bound for `cn(trim q)` when `q` angle-interlaces `xⁿ+1`.
pub fn self_interlace_upper(q: &Polynomial) -> Result<UpperBound> {
    if !q.is_full() {
        return Err(Error::NotFull);
    }
    if !q.is_self_inversive() {
        return Err(Error::NotSelfInversive);
    }
    let c0 = q.coeff(0);
    if sign_within(&c0.im, 1e-12 * (1.0 + q.l1())) != 0 {
        return Err(Error::NotApplicable("constant term is not real".into()));
    }
    if q.trim_part()?.is_zero() {
        return Err(Error::NotApplicable("trim part vanishes".into()));
    }
    let prec = q.working(Precision::default());
    let roots = all_roots(&q.to_creal(prec), prec)?;
    if !angle_interlaces_xn1(&roots, q.darga()) {
        return Err(Error::NotApplicable("roots do not angle-interlace xⁿ+1".into()));
    }
    let equality = cluster(&roots, CLUSTER_TOLERANCE).iter().any(|(_, m)| *m >= 2);
    Ok(UpperBound { bound: c0.re, equality })
}

fn close_values(a: &Scalar, b: &Scalar) -> bool {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => x == y,
        _ => (a - b).to_f64().abs() <= EXACT_TOLERANCE * (1.0 + a.to_f64().abs()),
    }
}

/// Whether `Σ D_k x^k` vanishes at `x`, relative to `Σ |D_k||x|^k`.
fn vanishes_at(disc: &[Scalar], x: &Scalar, prec: Precision) -> bool {
    if let (Some(q), true) = (x.as_rational(), disc.iter().all(Scalar::is_exact)) {
        let v = disc.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c.as_rational().unwrap());
        return v.is_zero();
    }
    let wp = prec.doubled();
    let xv = x.to_real(wp);
    let xa = xv.abs();
    let mut v = Real::zero(wp);
    let mut s = Real::zero(wp);
    for c in disc.iter().rev() {
        let cv = c.to_real(wp);
        v = &(&v * &xv) + &cv;
        s = &(&s * &xa) + &cv.abs();
    }
    v.abs().to_f64() <= EXACT_TOLERANCE * s.to_f64()
}

/// `Σ p_k (n − 2k) sin(2πjk/n) = 0`: the interlace cert `θ_n^j` is a double root of `p_il`.
pub fn sine_sum_vanishes(p: &Polynomial, j: usize, prec: Precision) -> bool {
    let n = p.darga();
    let mut acc = Scalar::zero();
    let mut scale = 0.0;
    for k in 1..n {
        let c = p.re(k);
        if c.is_zero() {
            continue;
        }
        let w = (n as i64) - 2 * k as i64;
        scale += c.to_f64().abs() * w.unsigned_abs() as f64;
        acc = acc + &(&c * &Scalar::int(w)) * &unity_sin((j * k) as i64, n as u64, prec);
    }
    sign_within(&acc, 1e-9 * (1.0 + scale)) == 0
}

pub fn is_exact(p: &Polynomial) -> Result<ExactnessVerdict> {
    let prec = Precision::default();
    let il = interlace_number_with(p, prec)?;
    let cn = circle_number_palindromic_with(p, prec)?;
    exactness(p, &il, &cn)
}

/// Exactness from already computed interlace and circle numbers.
pub fn exactness(p: &Polynomial, il: &InterlaceResult, cn: &CircleResult) -> Result<ExactnessVerdict> {
    p.require_trim_palindromic()?;
    let n = p.darga();
    let prec = p.working(Precision::default());
    let agree = close_values(&il.value, &cn.value);
    if let Some(&j) = il.certs.iter().find(|&&j| j == 0 || (n % 2 == 0 && j == n / 2)) {
        return Ok(ExactnessVerdict {
            exact: true,
            route: ExactnessRoute::PofoneFastPath,
            witness: Some(j),
            consistent: agree,
        });
    }
    let disc = match cn.method {
        CircleMethod::Discriminant => cn.disc_poly.clone(),
        CircleMethod::Hecke => alpha_discriminant(p)?,
    };
    let exact = vanishes_at(&disc, &il.value, prec);
    let witness = il.certs.iter().copied().find(|&j| sine_sum_vanishes(p, j, prec));
    Ok(ExactnessVerdict { exact, route: ExactnessRoute::DoubleRootTest, witness, consistent: exact == agree })
}

/// `il/cn − 1`.
pub fn bounding_error_from(il: &Scalar, cn: &Scalar) -> Scalar {
    &(il / cn) - &Scalar::one()
}

pub fn bounding_error(p: &Polynomial) -> Result<Scalar> {
    p.require_trim_palindromic()?;
    let il = interlace_number_with(p, Precision::default())?;
    let cn = circle_number_palindromic(p)?;
    Ok(bounding_error_from(&il.value, &cn.value))
}

/// `(n−1)/2 · C(n, ⌊n/2⌋) − 1`.
pub fn be_upper_bound(n: usize) -> Scalar {
    let c = BigRational::from_integer(binomial_coefficient(n, n / 2));
    let half = BigRational::new(BigInt::from(n as i64 - 1), BigInt::from(2));
    Scalar::Exact(c * half - BigRational::from_integer(BigInt::from(1)))
}

/// Every root of `p_full` within `tol` of the unit circle, by an independent root solve.
pub fn numeric_oracle_circle_rooted(p_full: &Polynomial, tol: f64) -> Result<bool> {
    let prec = p_full.working(Precision::default()).plus(64);
    let roots = all_roots(&p_full.to_creal(prec), prec)?;
    Ok(roots.iter().all(|z| (z.abs().to_f64() - 1.0).abs() < tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c, 1).unwrap()
    }

    fn geom(n: usize) -> Polynomial {
        ints(&vec![1; n - 1])
    }

    fn exact(v: &Scalar) -> BigRational {
        v.as_rational().cloned().expect("exact value")
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn cayley_examples() {
        let p = Polynomial::from_ints(&[1, 0, 1], 0).unwrap();
        let s = cayley(&p, 2, 0).unwrap();
        assert_eq!(s.to_ratpoly().unwrap(), RatPoly::from_ints(&[-2, 0, 2]));
        let p = Polynomial::from_ints(&[1, 1], 0).unwrap();
        assert_eq!(cayley(&p, 1, 0).unwrap().to_ratpoly().unwrap(), RatPoly::from_ints(&[0, 2]));
        let s = cayley(&geom(6), 6, 0).unwrap().to_ratpoly().unwrap();
        assert!(s.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero()));
    }

    #[test]
    fn omega_and_hecke() {
        assert_eq!(choose_omega(&geom(6)).unwrap(), 0);
        assert_eq!(choose_omega(&geom(6).neg()).unwrap(), 1);
        assert_eq!(choose_omega(&ints(&[-2])).unwrap(), 1);
        let h = hecke(&Polynomial::from_ints(&[5, 0, 3, 0, 1], 0).unwrap());
        assert_eq!(h.to_ratpoly().unwrap(), RatPoly::from_ints(&[5, 3, 1]));
        let h = hecke(&Polynomial::from_ints(&[-2, 0, 2], 0).unwrap());
        assert_eq!(h.to_ratpoly().unwrap(), RatPoly::from_ints(&[-2, 2]));
        assert!(hecke(&Polynomial::from_ints(&[0, 1, 0, 1], 0).unwrap()).is_zero());
    }

    #[test]
    fn gcd_examples() {
        let g = gcd_xn1(&ints(&[2, 2])).unwrap();
        assert_eq!(g.to_ratpoly().unwrap(), RatPoly::from_ints(&[1, 1]));
        let g = gcd_xn1(&geom(4)).unwrap();
        assert_eq!(g.to_ratpoly().unwrap(), RatPoly::one());
        // x(x²+1)(x²+3x+1) has darga 6, and x²+1 divides x⁶+1
        let t = RatPoly::from_ints(&[0, 1]) * RatPoly::from_ints(&[1, 0, 1]) * RatPoly::from_ints(&[1, 3, 1]);
        let p = Polynomial::from_ratpoly(&t);
        assert_eq!(p.darga(), 6);
        let g = gcd_xn1(&p).unwrap().to_ratpoly().unwrap();
        assert!(g.exact_div(&RatPoly::from_ints(&[1, 0, 1])).is_some());
        let gf = gcd_xn1(&p.to_float(Precision::default())).unwrap();
        assert_eq!(gf.degree(), Some(2));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(exact(&circle_number(&geom(5)).unwrap().value), rat(2, 5));
        assert_eq!(exact(&circle_number(&geom(6).neg()).unwrap().value), rat(5, 2));
        let r = circle_number(&ints(&[2, 2])).unwrap();
        assert_eq!(exact(&r.value), rat(2, 3));
        assert_eq!(r.certs.len(), 1);
        assert!((r.certs[0].to_c64().re + 1.0).abs() < 1e-9);
        let r = circle_number(&ints(&[-2])).unwrap();
        assert_eq!(exact(&r.value), rat(1, 1));
        assert!((r.certs[0].to_c64().re - 1.0).abs() < 1e-9);
        let p = ints(&[15, 14, 12, 2, 2, 12, 14, 15]);
        assert_eq!(exact(&circle_number(&p).unwrap().value), rat(23, 3));
        assert_eq!(exact(&circle_number_palindromic(&p).unwrap().value), rat(23, 3));
    }

    #[test]
    fn hecke_agrees() {
        assert_eq!(exact(&circle_number_palindromic(&geom(7)).unwrap().value), rat(3, 7));
        for n in 2..=12 {
            let a = circle_number_palindromic(&geom(n)).unwrap();
            let b = circle_number(&geom(n)).unwrap();
            assert_eq!(exact(&a.value), rat((n / 2) as i64, n as i64));
            assert_eq!(a.value, b.value);
        }
        for c in [&[172, 100, 198, 100, 172][..], &[100, 172, 198, 172, 100], &[50, 86, 99, 86, 50], &[3, -1, 4, -1, 3]] {
            let p = ints(c);
            let a = circle_number_palindromic(&p).unwrap().value;
            let b = circle_number(&p).unwrap().value;
            assert!((&a - &b).to_f64().abs() < 1e-12, "{c:?}: {a} vs {b}");
        }
    }

    #[test]
    fn float_track_matches() {
        let prec = Precision::default();
        for c in [&[2, 2][..], &[15, 14, 12, 2, 2, 12, 14, 15], &[1, 1, 1, 1, 1]] {
            let p = ints(c);
            let e = circle_number_palindromic(&p).unwrap().value.to_f64();
            let f = circle_number(&p.to_float(prec)).unwrap().value.to_f64();
            let h = circle_number_palindromic(&p.to_float(prec)).unwrap().value.to_f64();
            assert!((e - f).abs() < 1e-12 && (e - h).abs() < 1e-12, "{c:?}: {e} {f} {h}");
        }
    }

    #[test]
    fn complex_self_inversive() {
        // i·x − i·x³ + 2x²: self-inversive with complex coefficients
        let i = |a: i64, b: i64| ComplexScalar::new(Scalar::int(a), Scalar::int(b));
        let p = Polynomial::make(vec![i(0, 1), i(2, 0), i(0, -1)], 1).unwrap();
        let r = circle_number(&p).unwrap();
        let v = r.value.to_f64();
        assert!(v > 0.0);
        let full = p.p_alpha().unwrap();
        let above = full.instantiate(&Scalar::Float(Real::from_f64(v + 1e-3, Precision::default())));
        assert!(numeric_oracle_circle_rooted(&above, 1e-9).unwrap());
    }

    #[test]
    fn r_polynomial_examples() {
        let r = R_polynomial(&ints(&[-2])).unwrap();
        assert_eq!(r.to_ratpoly().unwrap(), RatPoly::from_ints(&[2, 0, -2]));
        let prec = Precision::default();
        let r = R_polynomial(&geom(5)).unwrap();
        let roots = all_roots(&r.to_creal(prec), prec).unwrap();
        for z in roots {
            let w = z.to_c64();
            if (w.norm() - 1.0).abs() < 1e-9 {
                assert!(w.im.abs() < 1e-9, "unit root {w}");
            }
        }
    }

    #[test]
    fn lower_bounds() {
        let b = cn_lower_bounds(&geom(7)).unwrap();
        assert_eq!(b.derivative_at_minus_one, Some(Scalar::ratio(3, 7)));
        assert_eq!(b.at_one, Scalar::int(-3));
        let b = cn_lower_bounds(&geom(6).neg()).unwrap();
        assert_eq!(b.at_one, Scalar::ratio(5, 2));
        // pal_{7,3} = x³ + x⁴ gives 1 − 6/7; pal_{7,2} = pal_{7,5} gives 1 − 10/7
        let b = cn_lower_bounds(&ints(&[0, 0, 1, 1, 0, 0])).unwrap();
        assert_eq!(b.derivative_at_minus_one, Some(Scalar::ratio(1, 7)));
        let b = cn_lower_bounds(&ints(&[0, 1, 0, 0, 1, 0])).unwrap();
        assert_eq!(b.derivative_at_minus_one, Some(Scalar::ratio(-3, 7)));
    }

    #[test]
    fn chen_examples() {
        assert_eq!(chen_bound(&geom(6)), Some(Scalar::one()));
        let p = ints(&[3, 2, 1, 2, 3]);
        assert_eq!(chen_bound(&p), Some(Scalar::int(3)));
        assert!(circle_number(&p).unwrap().value <= Scalar::int(3));
        assert_eq!(chen_bound(&ints(&[1, 2, 3, 2, 1])), None);
    }

    #[test]
    fn self_interlace() {
        let q = Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1], 0).unwrap();
        assert!(matches!(self_interlace_upper(&q), Err(Error::NotApplicable(_))));
        // the angle sum of any admissible q is pinned to that of xⁿ+1, so a nonzero trim part
        // always breaks the interlacing
        for (p, alpha) in [(ints(&[1, 1, 1]), 2), (ints(&[-2]), 1), (ints(&[2, 2]), 1), (ints(&[1, 3, 3, 1]), 50)] {
            let q = p.p_alpha().unwrap().instantiate(&Scalar::int(alpha));
            assert!(matches!(self_interlace_upper(&q), Err(Error::NotApplicable(_))));
        }
        assert!(matches!(self_interlace_upper(&ints(&[1, 1])), Err(Error::NotFull)));
        let prec = Precision::default();
        let b = vec![CReal::unity(1, 8, prec), CReal::unity(3, 8, prec), CReal::unity(5, 8, prec), CReal::unity(7, 8, prec)];
        assert!(angle_interlaces_xn1(&b, 4));
        let shifted: Vec<CReal> = b.iter().map(|z| z * &CReal::unity(1, 64, prec)).collect();
        assert!(angle_interlaces_xn1(&shifted, 4));
        let doubled = vec![b[0].clone(), b[0].clone(), b[3].clone(), b[3].clone()];
        assert!(!angle_interlaces_xn1(&doubled, 4));
    }

    #[test]
    fn exactness_examples() {
        assert!(is_exact(&geom(4)).unwrap().exact);
        let v = is_exact(&geom(5)).unwrap();
        assert!(!v.exact && v.consistent);
        let v = is_exact(&ints(&[15, 14, 12, 2, 2, 12, 14, 15])).unwrap();
        assert!(!v.exact && v.consistent);
    }

    #[test]
    fn bounding_errors() {
        assert!((bounding_error(&geom(7)).unwrap().to_f64() - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(bounding_error(&ints(&[50, 86, 99, 86, 50])).unwrap(), Scalar::int(4));
        assert_eq!(bounding_error(&ints(&[2, 2])).unwrap(), Scalar::ratio(1, 2));
        assert_eq!(be_upper_bound(3), Scalar::int(2));
    }

    #[test]
    fn oracle_examples() {
        let q = Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1], 0).unwrap();
        assert!(numeric_oracle_circle_rooted(&q, 1e-9).unwrap());
        let q = Polynomial::from_real(vec![Scalar::one(), Scalar::ratio(-5, 2), Scalar::one()], 0).unwrap();
        assert!(!numeric_oracle_circle_rooted(&q, 1e-9).unwrap());
        let q = geom(5).p_alpha().unwrap().instantiate(&Scalar::ratio(41, 100));
        assert!(numeric_oracle_circle_rooted(&q, 1e-9).unwrap());
    }
}
