//! Sturm sequences, real root isolation and exact real algebraic roots.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::ratpoly::RatPoly;
use crate::numeric::{Precision, Real};

/// A Sturm chain of a square-free polynomial, stored as primitive integer polynomials.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<Vec<BigInt>>,
}

fn sign_at(p: &[BigInt], x: &BigRational) -> i32 {
    // p(x)·den^deg as an integer
    let d = p.len().saturating_sub(1);
    let (a, b) = (x.numer(), x.denom());
    let mut total = BigInt::zero();
    let mut apow = BigInt::one();
    let mut bpows = vec![BigInt::one(); d + 1];
    for i in 1..=d {
        bpows[i] = &bpows[i - 1] * b;
    }
    for (i, c) in p.iter().enumerate() {
        total += c * &apow * &bpows[d - i];
        apow *= a;
    }
    sgn(&total)
}

fn sgn(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_at_pos_inf(p: &[BigInt]) -> i32 {
    p.last().map(sgn).unwrap_or(0)
}

fn sign_at_neg_inf(p: &[BigInt]) -> i32 {
    let s = sign_at_pos_inf(p);
    if p.len() % 2 == 0 {
        -s
    } else {
        s
    }
}

fn count_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

impl SturmChain {
    /// Builds the chain of the square-free part of `p`.
    pub fn new(p: &RatPoly) -> Self {
        let p0 = p.squarefree_part();
        let mut seq = Vec::new();
        if p0.is_zero() {
            return SturmChain { seq };
        }
        let mut a = p0.primitive_rational();
        let mut b = a.derivative().primitive_rational();
        seq.push(integer_coeffs(&a));
        while !b.is_zero() {
            seq.push(integer_coeffs(&b));
            let r = a.div_rem(&b).1;
            a = b;
            b = (-&r).primitive_rational_signed();
        }
        SturmChain { seq }
    }

    pub fn base(&self) -> &[BigInt] {
        self.seq.first().map(|v| v.as_slice()).unwrap_or(&[])
    }

    fn changes_at(&self, x: &BigRational) -> usize {
        count_changes(self.seq.iter().map(|p| sign_at(p, x)))
    }

    fn changes_pos_inf(&self) -> usize {
        count_changes(self.seq.iter().map(|p| sign_at_pos_inf(p)))
    }

    fn changes_neg_inf(&self) -> usize {
        count_changes(self.seq.iter().map(|p| sign_at_neg_inf(p)))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.changes_at(a).saturating_sub(self.changes_at(b))
    }

    /// Number of distinct real roots in `(a, ∞)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.changes_at(a).saturating_sub(self.changes_pos_inf())
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.changes_neg_inf().saturating_sub(self.changes_pos_inf())
    }
}

fn integer_coeffs(p: &RatPoly) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

impl RatPoly {
    /// Primitive integer rescaling that keeps the sign of the polynomial.
    fn primitive_rational_signed(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let p = self.primitive_rational();
        if (p.lead().is_positive()) == (self.lead().is_positive()) {
            p
        } else {
            -&p
        }
    }
}

/// A power of two bounding every root's absolute value (Cauchy bound).
pub fn root_bound(p: &RatPoly) -> BigRational {
    let lead = p.lead().abs();
    let mut m = BigRational::zero();
    for c in p.coeffs().iter().take(p.coeffs().len().saturating_sub(1)) {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    let b = m + BigRational::one();
    let mut pow = BigRational::one();
    while pow < b {
        pow *= BigRational::from_integer(BigInt::from(2));
    }
    pow
}

/// One real root of a square-free integer polynomial, isolated in `(lo, hi]`, or exactly known.
#[derive(Clone, Debug)]
pub struct RealRoot {
    poly: Vec<BigInt>,
    lo: BigRational,
    hi: BigRational,
    exact: Option<BigRational>,
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

impl RealRoot {
    pub fn exact(r: BigRational) -> Self {
        RealRoot {
            poly: vec![-r.numer().clone(), r.denom().clone()],
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
        }
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn minimal_data(&self) -> &[BigInt] {
        &self.poly
    }

    fn sign(&self, x: &BigRational) -> i32 {
        sign_at(&self.poly, x)
    }

    /// Bisects until the interval is narrower than `width`.
    pub fn refine(&mut self, width: &BigRational) {
        if self.exact.is_some() {
            return;
        }
        let s_hi = self.sign(&self.hi);
        if s_hi == 0 {
            self.set_exact(self.hi.clone());
            return;
        }
        while &(&self.hi - &self.lo) > width {
            let m = half(&self.lo, &self.hi);
            let s = self.sign(&m);
            if s == 0 {
                self.set_exact(m);
                return;
            }
            if s == s_hi {
                self.hi = m;
            } else {
                self.lo = m;
            }
        }
    }

    fn set_exact(&mut self, r: BigRational) {
        self.lo = r.clone();
        self.hi = r.clone();
        self.exact = Some(r);
    }

    /// Detects a rational value: refines past the spacing of rationals whose denominator divides
    /// the leading coefficient, then tests the simplest rational in the interval.
    pub fn detect_rational(&mut self) -> Option<BigRational> {
        if let Some(r) = &self.exact {
            return Some(r.clone());
        }
        let lead = self.poly.last().cloned().unwrap_or_else(BigInt::one).abs();
        // Cheap attempts at moderate widths catch small-height roots early.
        for bits in [64usize, 128] {
            let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
            self.refine(&w);
            if self.exact.is_some() {
                return self.exact.clone();
            }
            if let Some(r) = self.try_simplest() {
                return Some(r);
            }
        }
        // Complete detection needs width 1/(4·lead²); skipped when that is prohibitively fine.
        if lead.bits() > 1024 {
            return None;
        }
        let full = BigRational::new(BigInt::one(), (&lead * &lead) << 2);
        self.refine(&full);
        if self.exact.is_some() {
            return self.exact.clone();
        }
        self.try_simplest()
    }

    fn try_simplest(&mut self) -> Option<BigRational> {
        let r = simplest_between(&self.lo, &self.hi);
        // the open left end may be a neighbouring root
        if r != self.lo && self.sign(&r) == 0 {
            self.set_exact(r.clone());
            Some(r)
        } else {
            None
        }
    }

    /// Value at precision `p`.
    pub fn to_real(&mut self, p: Precision) -> Real {
        if let Some(r) = &self.exact {
            return Real::from_rational(r, p);
        }
        let scale = self.hi.abs().max(self.lo.abs()).max(BigRational::one());
        let w = scale / BigRational::from_integer(BigInt::one() << (p.bits() + 8));
        self.refine(&w);
        if let Some(r) = &self.exact {
            return Real::from_rational(r, p);
        }
        Real::from_rational(&half(&self.lo, &self.hi), p)
    }

    pub fn to_f64(&mut self) -> f64 {
        self.to_real(Precision::new(64)).to_f64()
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&mut self, x: &BigRational) -> Ordering {
        if let Some(r) = &self.exact {
            return r.cmp(x);
        }
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x > &self.hi {
            return Ordering::Less;
        }
        let sx = self.sign(x);
        if sx == 0 {
            self.set_exact(x.clone());
            return Ordering::Equal;
        }
        let s_hi = self.sign(&self.hi);
        if s_hi == 0 {
            self.set_exact(self.hi.clone());
            return self.hi.cmp(x);
        }
        // root lies where the sign flips relative to the right endpoint
        if sx == s_hi {
            self.hi = x.clone();
            Ordering::Less
        } else {
            self.lo = x.clone();
            Ordering::Greater
        }
    }
}

/// Simplest rational (smallest denominator, then numerator) in the closed interval `[a, b]`.
pub fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
    let (a, b) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if a <= BigRational::zero() && b >= BigRational::zero() {
        return BigRational::zero();
    }
    if b < BigRational::zero() {
        return -simplest_between(&-b, &-a);
    }
    simplest_pos(&a, &b)
}

fn simplest_pos(a: &BigRational, b: &BigRational) -> BigRational {
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    if fl.clone() + BigRational::one() <= *b {
        return fl + BigRational::one();
    }
    // same integer part: recurse on reciprocals of fractional parts
    let fa = a - &fl;
    let fb = b - &fl;
    let inner = simplest_pos(&fb.recip(), &fa.recip());
    fl + inner.recip()
}

/// All distinct real roots of `p` in increasing order, each isolated.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<RealRoot> {
    let chain = SturmChain::new(p);
    let base = chain.base().to_vec();
    if base.len() <= 1 {
        return Vec::new();
    }
    let bound = root_bound(&RatPoly::new(base.iter().cloned().map(BigRational::from_integer).collect()));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let k = chain.count_in(&lo, &hi);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(RealRoot { poly: base.clone(), lo, hi, exact: None });
            continue;
        }
        let m = half(&lo, &hi);
        stack.push((lo, m.clone()));
        stack.push((m, hi));
    }
    for r in out.iter_mut() {
        if r.sign(&r.hi) == 0 {
            let h = r.hi.clone();
            r.set_exact(h);
        }
    }
    out.sort_by(|x, y| x.hi.cmp(&y.hi));
    out
}

/// The largest real root of `p`, if any.
pub fn largest_real_root(p: &RatPoly) -> Option<RealRoot> {
    let chain = SturmChain::new(p);
    let base = chain.base().to_vec();
    if base.len() <= 1 || chain.count_all() == 0 {
        return None;
    }
    let bound = root_bound(&RatPoly::new(base.iter().cloned().map(BigRational::from_integer).collect()));
    let (mut lo, mut hi) = (-bound.clone(), bound);
    loop {
        let k = chain.count_in(&lo, &hi);
        if k == 1 {
            break;
        }
        let m = half(&lo, &hi);
        if chain.count_in(&m, &hi) > 0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    let mut r = RealRoot { poly: base, lo, hi, exact: None };
    if r.sign(&r.hi) == 0 {
        let h = r.hi.clone();
        r.set_exact(h);
    }
    Some(r)
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn count_roots_in(p: &RatPoly, a: &BigRational, b: &BigRational) -> usize {
    SturmChain::new(p).count_in(a, b)
}

/// Number of real roots of `p` counted with multiplicity.
pub fn count_real_roots_with_multiplicity(p: &RatPoly) -> usize {
    p.squarefree_decomposition()
        .iter()
        .map(|(m, f)| m * SturmChain::new(f).count_all())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratpoly::q;

    #[test]
    fn counts_roots_of_cubic() {
        // (x-1)(x-2)(x+3)
        let p = RatPoly::from_ints(&[6, -7, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        let vals: Vec<f64> = roots.into_iter().map(|mut r| r.to_f64()).collect();
        assert!((vals[0] + 3.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12 && (vals[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn largest_root_detects_rationals() {
        // (3x - 23)(x^2 - 2)
        let p = &RatPoly::from_ints(&[-23, 3]) * &RatPoly::from_ints(&[-2, 0, 1]);
        let mut r = largest_real_root(&p).unwrap();
        assert_eq!(r.detect_rational(), Some(BigRational::new(23.into(), 3.into())));
        let mut s = largest_real_root(&RatPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(s.detect_rational(), None);
        assert!((s.to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn multiplicities_are_ignored_for_isolation() {
        let p = RatPoly::from_ints(&[-1, 1]).pow(3);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 1);
        assert_eq!(count_real_roots_with_multiplicity(&p), 3);
    }

    #[test]
    fn rational_comparison() {
        let mut r = largest_real_root(&RatPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(r.cmp_rational(&BigRational::new(141.into(), 100.into())), Ordering::Greater);
        assert_eq!(r.cmp_rational(&BigRational::new(142.into(), 100.into())), Ordering::Less);
        assert_eq!(r.cmp_rational(&q(1)), Ordering::Greater);
    }

    #[test]
    fn simplest_rational_search() {
        let a = BigRational::new(33.into(), 100.into());
        let b = BigRational::new(34.into(), 100.into());
        assert_eq!(simplest_between(&a, &b), BigRational::new(1.into(), 3.into()));
        assert_eq!(simplest_between(&q(-5), &q(-2)), q(-2));
    }

    #[test]
    fn no_real_roots() {
        assert!(largest_real_root(&RatPoly::from_ints(&[1, 0, 1])).is_none());
    }
}
