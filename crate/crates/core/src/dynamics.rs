//! How the roots of `p_α` move with `α`: subdiscriminant breakpoints, real-root counts of the
//! Cayley image between them, and the resulting intervals of circle-rootedness.

use num::{BigInt, BigRational, One, Zero};

use crate::algebra::det::subdiscriminants;
use crate::algebra::roots::all_roots;
use crate::algebra::sturm::{isolate_real_roots, RealRoot};
use crate::algebra::RatPoly;
use crate::circle::{cayley_coeffs, reduce_exact};
use crate::error::{Error, Result};
use crate::numeric::{CReal, ComplexScalar, Precision, Real, Scalar};
use crate::polycore::{AlphaPolynomial, Polynomial};

const POINT_TOLERANCE: f64 = 1e-6;

/// One piece of the α-line: an open interval between breakpoints, or a breakpoint itself.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaInterval {
    /// `None` is −∞.
    pub lo: Option<Scalar>,
    /// `None` is +∞.
    pub hi: Option<Scalar>,
    /// Real roots of the Cayley image, with multiplicity.
    pub real_root_count: usize,
    /// Roots of `p_α` on the unit circle, with multiplicity.
    pub circle_root_count: usize,
    pub circle_rooted: bool,
    pub point: bool,
    /// False for irrational breakpoints, whose counts come from a numeric root solve.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaProfile {
    pub darga: usize,
    /// `+1` or `−1`: the Cayley map used.
    pub omega: i32,
    pub breakpoints: Vec<Scalar>,
    pub intervals: Vec<AlphaInterval>,
}

/// Maximal runs of circle-rooted pieces, as `(lo, hi)` with `None` for infinite ends.
pub type Run = (Option<Scalar>, Option<Scalar>);

impl AlphaProfile {
    pub fn circle_rooted_runs(&self) -> Vec<Run> {
        let mut runs: Vec<Run> = Vec::new();
        let mut open = false;
        for iv in &self.intervals {
            if iv.circle_rooted {
                if open {
                    runs.last_mut().expect("open run").1 = iv.hi.clone();
                } else {
                    runs.push((iv.lo.clone(), iv.hi.clone()));
                    open = true;
                }
            } else {
                open = false;
            }
        }
        runs
    }

    /// Runs meeting `(threshold, ∞)`, clipped on the left.
    pub fn runs_above(&self, threshold: &Scalar) -> Vec<Run> {
        self.circle_rooted_runs()
            .into_iter()
            .filter(|(_, hi)| hi.as_ref().is_none_or(|h| h > threshold))
            .map(|(lo, hi)| match lo {
                Some(l) if &l > threshold => (Some(l), hi),
                _ => (Some(threshold.clone()), hi),
            })
            .collect()
    }

    /// Lower end of the unbounded circle-rooted run.
    pub fn final_lower_endpoint(&self) -> Option<Scalar> {
        match self.circle_rooted_runs().last() {
            Some((lo, None)) => lo.clone(),
            _ => None,
        }
    }
}

/// Subdiscriminants `sDisc₀..sDisc_{d−1}` of an `α`-polynomial in `x`, as polynomials in `α`.
pub fn subdiscriminant_sequence(q: &AlphaPolynomial) -> Result<Vec<RatPoly>> {
    let f = q
        .to_ratpolys()
        .ok_or_else(|| Error::NotSupported("subdiscriminants need exact real coefficients".into()))?;
    if f.len() <= 1 {
        return Ok(Vec::new());
    }
    Ok(subdiscriminants(&f))
}

/// The Cayley image `S_ω(p_α / g)` with `ω = ±1`, together with `d = deg(p_α / g)` and `deg g`.
#[derive(Clone, Debug)]
pub struct CayleyFamily {
    coeffs: Vec<RatPoly>,
    degree: usize,
    gcd_degree: usize,
    pub omega: i32,
}

impl CayleyFamily {
    pub fn new(p: &Polynomial) -> Result<Self> {
        p.require_trim_palindromic()?;
        let (a, b, g) = reduce_exact(p)
            .ok_or_else(|| Error::NotSupported("α-profiles need rational coefficients".into()))?;
        let n = p.darga();
        let omega = if n % 2 == 0 && p.eval_unity(n, n / 2)? > p.eval_unity(n, 0)? { -1 } else { 1 };
        let d = a.degree().unwrap_or(0);
        let lift = |r: &RatPoly| -> Vec<ComplexScalar> {
            (0..=d).map(|k| ComplexScalar::real(Scalar::Exact(r.coeff(k)))).collect()
        };
        let sign = |k: usize| ComplexScalar::real(Scalar::int(if omega < 0 && k % 2 == 1 { -1 } else { 1 }));
        let rational = |v: Vec<ComplexScalar>| -> Result<Vec<BigRational>> {
            v.into_iter()
                .map(|z| {
                    if !z.im.is_zero() {
                        return Err(Error::InternalInconsistency("Cayley image is not real".into()));
                    }
                    z.re.as_rational().cloned().ok_or_else(|| Error::InternalInconsistency("inexact".into()))
                })
                .collect()
        };
        let sa = rational(cayley_coeffs(&lift(&a), d, sign))?;
        let sb = rational(cayley_coeffs(&lift(&b), d, sign))?;
        let coeffs = (0..=d).map(|k| RatPoly::new(vec![sb[k].clone(), sa[k].clone()])).collect();
        Ok(CayleyFamily { coeffs, degree: d, gcd_degree: g.degree().unwrap_or(0), omega })
    }

    pub fn as_alpha_polynomial(&self) -> AlphaPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| (ComplexScalar::real(Scalar::Exact(c.coeff(0))), Scalar::Exact(c.coeff(1))))
            .collect();
        AlphaPolynomial { darga: self.degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(real roots of S_ω(q_α), roots of p_α on the circle)`, both with multiplicity.
    pub fn counts_at(&self, alpha: &BigRational) -> (usize, usize) {
        let s = RatPoly::new(self.coeffs.iter().map(|c| c.eval(alpha)).collect());
        let deg = s.degree().unwrap_or(0);
        let real = if s.is_zero() { 0 } else { crate::algebra::sturm::count_real_roots_with_multiplicity(&s) };
        // roots lost at infinity are ω itself, which lies on the circle
        (real, real + (self.degree - deg) + self.gcd_degree)
    }

    /// The breakpoint polynomial: odd-multiplicity factors of every subdiscriminant, together with
    /// all real roots of the discriminant itself.
    fn breakpoint_polynomial(&self) -> Result<RatPoly> {
        let seq = subdiscriminant_sequence(&self.as_alpha_polynomial())?;
        let mut acc = RatPoly::one();
        for (j, s) in seq.iter().enumerate() {
            if s.is_zero() || s.degree() == Some(0) {
                continue;
            }
            for (m, f) in s.squarefree_decomposition() {
                if j == 0 || m % 2 == 1 {
                    acc = acc * f;
                }
            }
        }
        Ok(acc.squarefree_part())
    }
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// A rational strictly between two isolated, distinct, increasing roots.
fn separate(left: &mut RealRoot, right: &mut RealRoot) -> BigRational {
    loop {
        let a = left.interval().1.clone();
        let b = right.interval().0.clone();
        if a < b {
            return half(&a, &b);
        }
        let wl = {
            let (l, h) = left.interval();
            (h - l) / BigRational::from_integer(BigInt::from(4))
        };
        let wr = {
            let (l, h) = right.interval();
            (h - l) / BigRational::from_integer(BigInt::from(4))
        };
        left.refine(&wl);
        right.refine(&wr);
    }
}

fn root_scalar(r: &mut RealRoot) -> Scalar {
    match r.as_rational() {
        Some(q) => Scalar::Exact(q.clone()),
        None => match r.detect_rational() {
            Some(q) => Scalar::Exact(q),
            None => Scalar::Float(r.to_real(Precision::default())),
        },
    }
}

/// Counts at an irrational breakpoint from a high-precision root solve.
fn numeric_point(p: &Polynomial, fam: &CayleyFamily, r: &mut RealRoot) -> Result<(usize, usize)> {
    let prec = Precision::new(256);
    let alpha = Scalar::Float(r.to_real(prec));
    let full = p.p_alpha()?.instantiate(&alpha);
    let roots = all_roots(&full.to_creal(prec), prec)?;
    let on = roots.iter().filter(|z| (z.abs().to_f64() - 1.0).abs() < POINT_TOLERANCE).count();
    Ok((on.saturating_sub(fam.gcd_degree), on))
}

/// The full α-line, partitioned at the breakpoints, with exact Sturm counts between them.
pub fn alpha_profile(p: &Polynomial) -> Result<AlphaProfile> {
    let fam = CayleyFamily::new(p)?;
    let n = p.darga();
    let mut roots = isolate_real_roots(&fam.breakpoint_polynomial()?);
    let one = BigRational::one();
    let mut samples = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        samples.push(BigRational::zero());
    } else {
        samples.push(roots[0].interval().0 - &one);
        for k in 0..roots.len() - 1 {
            let (l, r) = roots.split_at_mut(k + 1);
            samples.push(separate(&mut l[k], &mut r[0]));
        }
        samples.push(roots[roots.len() - 1].interval().1 + &one);
    }
    let breakpoints: Vec<Scalar> = roots.iter_mut().map(root_scalar).collect();
    let mut intervals = Vec::with_capacity(2 * roots.len() + 1);
    let open = |lo: Option<Scalar>, hi: Option<Scalar>, x: &BigRational| {
        let (real, circle) = fam.counts_at(x);
        AlphaInterval {
            lo,
            hi,
            real_root_count: real,
            circle_root_count: circle,
            circle_rooted: circle == n,
            point: false,
            exact: true,
        }
    };
    for (k, x) in samples.iter().enumerate() {
        let lo = if k == 0 { None } else { Some(breakpoints[k - 1].clone()) };
        let hi = breakpoints.get(k).cloned();
        intervals.push(open(lo, hi, x));
        if k < roots.len() {
            let b = breakpoints[k].clone();
            let (real, circle, exact) = match b.as_rational() {
                Some(q) => {
                    let (r, c) = fam.counts_at(q);
                    (r, c, true)
                }
                None => {
                    let (r, c) = numeric_point(p, &fam, &mut roots[k])?;
                    (r, c, false)
                }
            };
            intervals.push(AlphaInterval {
                lo: Some(b.clone()),
                hi: Some(b),
                real_root_count: real,
                circle_root_count: circle,
                circle_rooted: circle == n,
                point: true,
                exact,
            });
        }
    }
    Ok(AlphaProfile { darga: n, omega: fam.omega, breakpoints, intervals })
}

/// Roots of `p_α` at each grid value, greedily matched to the previous step.
#[derive(Clone, Debug)]
pub struct TrajectoryPoint {
    pub alpha: Scalar,
    /// `None` when the root solver failed at this value.
    pub roots: Option<Vec<CReal>>,
}

pub fn root_trajectories(p: &Polynomial, grid: &[Scalar]) -> Result<Vec<TrajectoryPoint>> {
    let pa = p.p_alpha()?;
    let prec = p.working(Precision::default());
    let mut out: Vec<TrajectoryPoint> = Vec::with_capacity(grid.len());
    let mut previous: Option<Vec<CReal>> = None;
    for alpha in grid {
        let full = pa.instantiate(alpha);
        let roots = match all_roots(&full.to_creal(prec), prec) {
            Ok(r) => r,
            Err(_) => {
                out.push(TrajectoryPoint { alpha: alpha.clone(), roots: None });
                continue;
            }
        };
        let ordered = match &previous {
            Some(prev) if prev.len() == roots.len() => match_greedy(prev, roots),
            _ => roots,
        };
        previous = Some(ordered.clone());
        out.push(TrajectoryPoint { alpha: alpha.clone(), roots: Some(ordered) });
    }
    Ok(out)
}

fn match_greedy(prev: &[CReal], mut next: Vec<CReal>) -> Vec<CReal> {
    let mut out = Vec::with_capacity(prev.len());
    for z in prev {
        let w = z.to_c64();
        let (k, _) = next
            .iter()
            .enumerate()
            .map(|(k, c)| (k, (c.to_c64() - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("same length");
        out.push(next.swap_remove(k));
    }
    out
}

/// Evenly spaced grid `lo, …, hi` with `steps` intervals.
pub fn alpha_grid(lo: f64, hi: f64, steps: usize) -> Vec<Scalar> {
    let prec = Precision::default();
    (0..=steps)
        .map(|k| {
            let t = if steps == 0 { lo } else { lo + (hi - lo) * k as f64 / steps as f64 };
            Scalar::Float(Real::from_f64(t, prec))
        })
        .collect()
}
