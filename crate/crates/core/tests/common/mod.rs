#![allow(dead_code)]

use num::{BigInt, BigRational};
use palinlace::circle::{
    circle_number, circle_number_palindromic, cn_lower_bounds, numeric_oracle_circle_rooted, r_residual,
};
use palinlace::dynamics::alpha_profile;
use palinlace::interlace::{interlace_number, ll_bound, ramanujan_lower};
use palinlace::{Polynomial, Precision, Scalar};
use rand::Rng;

pub const EPS: f64 = 1e-9;

/// Trim palindromic polynomial of darga `n` from the first half of its inner coefficients.
pub fn palindromic(n: usize, half: &[(i64, i64)]) -> Polynomial {
    let inner: Vec<BigRational> = (1..n)
        .map(|k| {
            let (a, b) = half[k.min(n - k) - 1];
            BigRational::new(BigInt::from(a), BigInt::from(b))
        })
        .collect();
    Polynomial::from_rationals(&inner, 1).unwrap().with_darga(n)
}

/// Nonzero random coefficients `a/b`, `|a| ≤ 30`, `1 ≤ b ≤ 4`.
pub fn random_palindromic<R: Rng>(rng: &mut R, n: usize) -> Polynomial {
    loop {
        let half: Vec<(i64, i64)> = (0..n / 2).map(|_| (rng.gen_range(-30..=30), rng.gen_range(1..=4))).collect();
        if half.iter().any(|&(a, _)| a != 0) {
            return palindromic(n, &half);
        }
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

fn il(p: &Polynomial) -> Result<f64, String> {
    interlace_number(p).map(|r| r.value.to_f64()).map_err(|e| e.to_string())
}

fn cn(p: &Polynomial) -> Result<f64, String> {
    circle_number_palindromic(p).map(|r| r.value.to_f64()).map_err(|e| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Scaling laws for il and cn: `λp`, `p(x²)` and, in even darga, `p(−x)`.
pub fn check_scaling(p: &Polynomial, lambda: &Scalar) -> Result<(), String> {
    let (i0, c0) = (il(p)?, cn(p)?);
    let l = lambda.to_f64();
    let scaled = p.scale(lambda);
    ensure!(close(il(&scaled)?, l * i0, EPS), "il(λp) ≠ λ·il(p) for {}", p.to_text());
    ensure!(close(cn(&scaled)?, l * c0, EPS), "cn(λp) ≠ λ·cn(p) for {}", p.to_text());
    let inflated = p.inflate(2);
    ensure!(close(il(&inflated)?, i0, EPS), "il(p(x²)) ≠ il(p) for {}", p.to_text());
    ensure!(close(cn(&inflated)?, c0, EPS), "cn(p(x²)) ≠ cn(p) for {}", p.to_text());
    if p.darga() % 2 == 0 {
        let r = p.reflect();
        ensure!(close(il(&r)?, i0, EPS), "il(p(−x)) ≠ il(p) for {}", p.to_text());
        ensure!(close(cn(&r)?, c0, EPS), "cn(p(−x)) ≠ cn(p) for {}", p.to_text());
    }
    Ok(())
}

/// Everything that must hold for a single random rational trim palindromic polynomial,
/// scaling laws excepted.
pub fn check_invariants(p: &Polynomial) -> Result<(), String> {
    let text = p.to_text();
    let ilr = interlace_number(p).map_err(|e| format!("{text}: {e}"))?;
    let hecke = circle_number_palindromic(p).map_err(|e| format!("{text}: {e}"))?;
    let disc = circle_number(p).map_err(|e| format!("{text}: {e}"))?;
    let (i, c) = (ilr.value.to_f64(), hecke.value.to_f64());

    ensure!(c <= i + EPS, "cn {c} > il {i} for {text}");
    ensure!(close(c, disc.value.to_f64(), EPS), "Hecke {c} ≠ discriminant {} for {text}", disc.value.to_f64());

    ensure!(c > 0.0, "cn {c} not positive for {text}");
    let lb = cn_lower_bounds(p).map_err(|e| e.to_string())?;
    let lows = [Some(lb.binomial), Some(lb.at_one), lb.at_minus_one, lb.derivative_at_minus_one];
    for b in lows.iter().flatten() {
        ensure!(b.to_f64() <= c + EPS * (1.0 + c.abs()), "cn {c} below lower bound {} for {text}", b.to_f64());
    }
    let ll = ll_bound(p).to_f64();
    let ram = ramanujan_lower(p).map_err(|e| e.to_string())?.to_f64();
    ensure!(ram <= i + EPS * (1.0 + i), "il {i} below class average {ram} for {text}");
    ensure!(i <= ll + EPS * (1.0 + ll), "il {i} above LL {ll} for {text}");

    let prec = Precision::default();
    for z in hecke.certs.iter().chain(&disc.certs) {
        let r = r_residual(p, z, prec).map_err(|e| e.to_string())?;
        ensure!(r < 1e-7, "circle cert residual {r} for {text}");
    }

    check_oracle(p, c)
}

/// The independent root solve sees `p_α` circle-rooted just above cn, and just below only
/// inside an earlier circle-rooted interval.
pub fn check_oracle(p: &Polynomial, c: f64) -> Result<(), String> {
    let text = p.to_text();
    let pa = p.p_alpha().map_err(|e| e.to_string())?;
    let delta = 1e-3 * (1.0 + c.abs());
    let at = |a: f64| -> Result<bool, String> {
        let alpha = Scalar::Exact(BigRational::from_float(a).unwrap());
        numeric_oracle_circle_rooted(&pa.instantiate(&alpha), 1e-6).map_err(|e| e.to_string())
    };
    ensure!(at(c + delta)?, "p_α not circle-rooted at cn + δ for {text}");
    if at(c - delta)? {
        let prof = alpha_profile(p).map_err(|e| e.to_string())?;
        let a = c - delta;
        let inside = prof.circle_rooted_runs().iter().any(|(lo, hi)| {
            lo.as_ref().map_or(true, |l| l.to_f64() <= a) && hi.as_ref().is_some_and(|h| h.to_f64() >= a)
        });
        ensure!(inside, "p_α circle-rooted at cn − δ outside any lower interval for {text}");
    }
    Ok(())
}
