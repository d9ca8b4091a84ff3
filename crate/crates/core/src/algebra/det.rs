//! Fraction-free determinants, Sylvester matrices, resultants, discriminants and subresultants.

use num::{BigInt, BigRational, One, Zero};

use super::ratpoly::{q, RatPoly};
use crate::numeric::{CReal, Precision, Real};

/// Commutative ring with exact division by nonzero divisors of the dividend.
pub trait Domain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(i: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o`, assuming `o` divides `self`.
    fn exact_div(&self, o: &Self) -> Self;
}

impl Domain for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(i: i64) -> Self {
        q(i)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(i: i64) -> Self {
        BigInt::from(i)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Domain for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn one() -> Self {
        RatPoly::one()
    }
    fn from_i64(i: i64) -> Self {
        RatPoly::constant(q(i))
    }
    fn is_zero(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.exact_div(o).expect("Bareiss division is exact")
    }
}

/// Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_det<T: Domain>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// Gaussian elimination with partial pivoting on complex floats.
pub fn float_det(mut m: Vec<Vec<CReal>>, p: Precision) -> CReal {
    let n = m.len();
    let mut det = CReal::one(p);
    for k in 0..n {
        let piv = (k..n)
            .max_by(|&a, &b| {
                m[a][k]
                    .norm_sqr()
                    .partial_cmp(&m[b][k].norm_sqr())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if m[piv][k].is_zero() {
            return CReal::zero(p);
        }
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = &det * &pivot;
        let inv = pivot.recip();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k + 1..n {
                let t = &f * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    det
}

/// Sylvester matrix of `f` and `g` given by ascending coefficients at their formal degrees.
pub fn sylvester<T: Domain>(f: &[T], g: &[T]) -> Vec<Vec<T>> {
    let d = f.len() - 1;
    let e = g.len() - 1;
    let n = d + e;
    let mut m = vec![vec![T::zero(); n]; n];
    for r in 0..e {
        for (i, c) in f.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..d {
        for (i, c) in g.iter().rev().enumerate() {
            m[e + r][r + i] = c.clone();
        }
    }
    m
}

pub fn resultant<T: Domain>(f: &[T], g: &[T]) -> T {
    bareiss_det(sylvester(f, g))
}

fn formal_derivative<T: Domain>(f: &[T]) -> Vec<T> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&T::from_i64(i as i64)))
        .collect()
}

fn disc_sign(d: usize) -> bool {
    (d * (d.saturating_sub(1)) / 2) % 2 == 1
}

/// `Disc(f) = (-1)^(d(d-1)/2) Res(f, f') / f_d` at the formal degree `d = f.len() - 1`.
pub fn discriminant<T: Domain>(f: &[T]) -> T {
    let d = f.len() - 1;
    if d == 0 {
        return T::zero();
    }
    if d == 1 {
        return T::one();
    }
    let r = resultant(f, &formal_derivative(f));
    let v = r.exact_div(&f[d]);
    if disc_sign(d) {
        v.neg()
    } else {
        v
    }
}

/// Principal subresultant coefficient `sRes_j(f, g)` at formal degrees.
pub fn principal_subresultant<T: Domain>(f: &[T], g: &[T], j: usize) -> T {
    let d = f.len() - 1;
    let e = g.len() - 1;
    assert!(j <= e.min(d));
    let size = d + e - 2 * j;
    if size == 0 {
        return T::one();
    }
    let top = d + e - j - 1;
    let mut m = Vec::with_capacity(size);
    let push_rows = |m: &mut Vec<Vec<T>>, p: &[T], count: usize| {
        for k in (0..count).rev() {
            // row for x^k · p
            let mut row = vec![T::zero(); size];
            for (i, c) in p.iter().enumerate() {
                let power = i + k;
                if power > top || power < j {
                    continue;
                }
                row[top - power] = c.clone();
            }
            m.push(row);
        }
    };
    push_rows(&mut m, f, e - j);
    push_rows(&mut m, g, d - j);
    bareiss_det(m)
}

/// Subdiscriminants `sDisc_j(f) = sRes_j(f, f') / f_d` for `j = 0..d-1`, formal degree `d`.
pub fn subdiscriminants<T: Domain>(f: &[T]) -> Vec<T> {
    let d = f.len() - 1;
    let fp = formal_derivative(f);
    (0..d)
        .map(|j| {
            let s = principal_subresultant(f, &fp, j);
            let v = s.exact_div(&f[d]);
            if j == 0 && disc_sign(d) {
                v.neg()
            } else {
                v
            }
        })
        .collect()
}

/// Newton interpolation over the rationals.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = RatPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &RatPoly::new(vec![-xs[i].clone(), <BigRational as One>::one()])) + &RatPoly::constant(coef[i].clone());
    }
    p
}

/// `Disc_x` of a polynomial whose coefficients are polynomials in `α`, by exact evaluation at
/// integer points followed by interpolation.
pub fn discriminant_in_alpha(f: &[RatPoly]) -> RatPoly {
    let d = f.len() - 1;
    if d <= 1 {
        return if d == 1 { RatPoly::one() } else { RatPoly::zero() };
    }
    let m = f.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0);
    let deg = m * (2 * d - 2);
    let mut xs = Vec::with_capacity(deg + 1);
    let mut ys = Vec::with_capacity(deg + 1);
    let mut t: i64 = 0;
    while xs.len() < deg + 1 {
        t += 1;
        let x = q(t);
        let lead = f[d].eval(&x);
        if Zero::is_zero(&lead) {
            continue;
        }
        let vals: Vec<BigRational> = f.iter().map(|c| c.eval(&x)).collect();
        ys.push(discriminant(&vals));
        xs.push(x);
    }
    interpolate(&xs, &ys)
}

/// Float-track discriminant in `α`: evaluation on a circle of radius `radius` followed by an
/// inverse discrete Fourier transform. `f` gives each `x`-coefficient as `(constant, slope)`.
pub fn float_discriminant_in_alpha(f: &[(CReal, CReal)], radius: &Real, p: Precision) -> Vec<CReal> {
    let d = f.len() - 1;
    if d <= 1 {
        return vec![CReal::one(p)];
    }
    let deg = 2 * d - 2;
    let n = deg + 1;
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        // offset by a third of a step so no sample is real
        let a = CReal::unity(3 * k as i64 + 1, 3 * n as u64, p).scale(radius);
        let coeffs: Vec<CReal> = f.iter().map(|(c, s)| c + &(s * &a)).collect();
        vals.push(float_discriminant(&coeffs, p));
    }
    let mut out = Vec::with_capacity(n);
    let mut rpow = Real::one(p);
    for j in 0..n {
        let mut acc = CReal::zero(p);
        for (k, v) in vals.iter().enumerate() {
            let w = CReal::unity(-((j * k) as i64), n as u64, p);
            acc = &acc + &(v * &w);
        }
        let scale = Real::one(p) / (&rpow * &Real::from_i64(n as i64, p));
        let phase = CReal::unity(-(j as i64), 3 * n as u64, p);
        out.push(&acc.scale(&scale) * &phase);
        rpow = &rpow * radius;
    }
    out
}

/// Float discriminant of a complex polynomial at its formal degree.
pub fn float_discriminant(f: &[CReal], p: Precision) -> CReal {
    let d = f.len() - 1;
    if d == 0 {
        return CReal::zero(p);
    }
    if d == 1 {
        return CReal::one(p);
    }
    let fp: Vec<CReal> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&Real::from_i64(i as i64, p)))
        .collect();
    let m = float_sylvester(f, &fp, p);
    let r = float_det(m, p);
    let v = &r / &f[d];
    if disc_sign(d) {
        -v
    } else {
        v
    }
}

fn float_sylvester(f: &[CReal], g: &[CReal], p: Precision) -> Vec<Vec<CReal>> {
    let d = f.len() - 1;
    let e = g.len() - 1;
    let n = d + e;
    let mut m = vec![vec![CReal::zero(p); n]; n];
    for r in 0..e {
        for (i, c) in f.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..d {
        for (i, c) in g.iter().rev().enumerate() {
            m[e + r][r + i] = c.clone();
        }
    }
    m
}
