//! Complex root finding: Aberth–Ehrlich in double precision, then polishing at a working precision.

use num::complex::Complex64;
use thiserror::Error;

use crate::numeric::complex::horner;
use crate::numeric::{CReal, Precision, Real};

#[derive(Debug, Error, Clone, PartialEq)]
#[error("root finder did not converge after {iterations} iterations (degree {degree})")]
pub struct NoConvergence {
    pub degree: usize,
    pub iterations: usize,
}

fn strip(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    c
}

fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Initial guesses on a circle whose radius comes from the coefficient moduli.
fn initial_guesses(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n].norm();
    let mut r: f64 = 0.0;
    for (k, a) in c.iter().enumerate().take(n) {
        if a.norm() > 0.0 {
            r = r.max((a.norm() / lead).powf(1.0 / (n - k) as f64));
        }
    }
    let r = if r > 0.0 { r } else { 1.0 };
    (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(r, t)
        })
        .collect()
}

/// Roots of `Σ c_k x^k` in double precision. Zero roots from a vanishing low part are returned exactly.
pub fn aberth_f64(coeffs: &[Complex64]) -> Result<Vec<Complex64>, NoConvergence> {
    let c = strip(coeffs);
    let mut zeros = 0;
    while zeros < c.len() - 1 && c[zeros].norm() == 0.0 {
        zeros += 1;
    }
    let c = c[zeros..].to_vec();
    let n = c.len() - 1;
    let mut out = vec![Complex64::new(0.0, 0.0); zeros];
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.push(-c[0] / c[1]);
        return Ok(out);
    }
    let mut z = initial_guesses(&c);
    let max_iter = 2000;
    let mut converged = vec![false; n];
    for it in 0..max_iter {
        let mut all = true;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(&c, z[i]);
            if p.norm() == 0.0 {
                converged[i] = true;
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - ratio * s;
            let step = if denom.norm() > 0.0 { ratio / denom } else { ratio };
            let step = if step.is_finite() { step } else { Complex64::new(1e-3, 1e-3) };
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(1e-300) {
                converged[i] = true;
            } else {
                all = false;
            }
        }
        if all && it > 2 {
            out.extend(z);
            return Ok(out);
        }
    }
    // Multiple roots converge linearly; accept if residuals are tiny relative to the coefficient scale.
    let scale: f64 = c.iter().map(|a| a.norm()).sum();
    let ok = z.iter().all(|zi| {
        let m = zi.norm().max(1.0).powi(n as i32);
        eval_with_derivative(&c, *zi).0.norm() <= 1e-6 * scale * m
    });
    if ok {
        out.extend(z);
        Ok(out)
    } else {
        Err(NoConvergence { degree: n, iterations: max_iter })
    }
}

/// All roots at precision `p`: a double-precision start followed by Aberth sweeps at `p`.
pub fn all_roots(coeffs: &[CReal], p: Precision) -> Result<Vec<CReal>, NoConvergence> {
    let mut c: Vec<CReal> = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(|z| z.is_zero()) {
        c.pop();
    }
    let mut zeros = 0;
    while zeros < c.len() - 1 && c[zeros].is_zero() {
        zeros += 1;
    }
    let c: Vec<CReal> = c[zeros..].to_vec();
    let n = c.len() - 1;
    let mut out: Vec<CReal> = (0..zeros).map(|_| CReal::zero(p)).collect();
    if n == 0 {
        return Ok(out);
    }
    let start = aberth_f64(&c.iter().map(|z| z.to_c64()).collect::<Vec<_>>())?;
    let mut z: Vec<CReal> = start.iter().map(|s| CReal::from_c64(*s, p)).collect();
    polish(&c, &mut z, p);
    out.extend(z);
    Ok(out)
}

/// Aberth sweeps at precision `p` starting from close approximations.
fn polish(c: &[CReal], z: &mut [CReal], p: Precision) {
    let n = z.len();
    if n == 0 {
        return;
    }
    let dc: Vec<CReal> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| a.scale(&Real::from_i64(k as i64, p)))
        .collect();
    let tol = Real::from_f64(p.tie_threshold() * 1e-6, p);
    let mut done = vec![false; n];
    for _ in 0..120 {
        let mut moved = false;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let v = horner(c, &z[i]);
            if v.is_zero() {
                done[i] = true;
                continue;
            }
            let dv = horner(&dc, &z[i]);
            if dv.is_zero() {
                done[i] = true;
                continue;
            }
            let ratio = &v / &dv;
            let mut s = CReal::zero(p);
            for j in 0..n {
                if j != i {
                    let d = &z[i] - &z[j];
                    if !d.is_zero() {
                        s = &s + &d.recip();
                    }
                }
            }
            let denom = &CReal::one(p) - &(&ratio * &s);
            let step = if denom.is_zero() { ratio } else { &ratio / &denom };
            z[i] = &z[i] - &step;
            let size = z[i].abs().max(Real::one(p));
            if step.abs() <= &tol * &size {
                done[i] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
}

/// Roots of a real polynomial given by `f64` coefficients.
pub fn real_coeff_roots_f64(coeffs: &[f64]) -> Result<Vec<Complex64>, NoConvergence> {
    aberth_f64(&coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>())
}

/// Groups roots whose distance is below `tol·(1 + |z|)`, returning cluster centroids and sizes.
pub fn cluster(roots: &[CReal], tol: f64) -> Vec<(CReal, usize)> {
    let n = roots.len();
    let approx: Vec<Complex64> = roots.iter().map(|z| z.to_c64()).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (approx[i] - approx[j]).norm();
            if d < tol * (1.0 + approx[i].norm()) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(g, _)| *g == r) {
            Some((_, v)) => v.push(i),
            None => groups.push((r, vec![i])),
        }
    }
    groups
        .into_iter()
        .map(|(_, idx)| {
            let p = roots[idx[0]].precision();
            let mut s = CReal::zero(p);
            for &i in &idx {
                s = &s + &roots[i];
            }
            let k = idx.len();
            (s.scale(&(Real::one(p) / Real::from_i64(k as i64, p))), k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let mut c = vec![Complex64::new(0.0, 0.0); 7];
        c[0] = Complex64::new(1.0, 0.0);
        c[6] = Complex64::new(1.0, 0.0);
        let r = aberth_f64(&c).unwrap();
        assert_eq!(r.len(), 6);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powi(6) + 1.0).norm() < 1e-10);
        }
    }

    #[test]
    fn polished_roots_are_accurate() {
        let p = Precision::new(192);
        // x^2 - 2
        let c: Vec<CReal> = [-2i64, 0, 1].iter().map(|&x| CReal::real(Real::from_i64(x, p))).collect();
        let r = all_roots(&c, p).unwrap();
        let s2 = Real::from_i64(2, p).sqrt();
        assert!(r.iter().any(|z| (&z.re - &s2).abs().to_f64() < 1e-50));
    }

    #[test]
    fn double_roots_cluster() {
        let p = Precision::default();
        // (x - 1)^2 (x + 2)
        let c: Vec<CReal> = [2i64, -3, 0, 1].iter().map(|&x| CReal::real(Real::from_i64(x, p))).collect();
        let r = all_roots(&c, p).unwrap();
        let cl = cluster(&r, 1e-6);
        assert_eq!(cl.len(), 2);
        let dbl = cl.iter().find(|(_, k)| *k == 2).unwrap();
        assert!((dbl.0.re.to_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_roots_are_exact() {
        let r = real_coeff_roots_f64(&[0.0, 0.0, -1.0, 1.0]).unwrap();
        assert_eq!(r.iter().filter(|z| z.norm() == 0.0).count(), 2);
    }
}
