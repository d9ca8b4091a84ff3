//! The interlace number `il(p) = ½·max(−p(ω))` over roots of unity, its certs, and bounds.

use num::BigRational;

use crate::error::{Error, Result};
use crate::families::arith::{divisors, euler_phi, ramanujan_sum};
use crate::numeric::{Precision, Scalar};
use crate::polycore::{sign_within, Polynomial};

const MAX_ESCALATIONS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct InterlaceResult {
    pub value: Scalar,
    pub certs: Vec<usize>,
    /// False when a near-tie survived every precision escalation.
    pub certified: bool,
    pub precision: Precision,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundLadder {
    pub ll: Scalar,
    pub kwon: Option<Scalar>,
    pub kwon_simple: Option<Scalar>,
    pub increasing_upper: Option<Scalar>,
    pub ramanujan_lower: Scalar,
    pub monotonic_lower: Option<Scalar>,
}

/// Indices of the roots of unity that must be inspected: `V_n` for real input, `U_n` otherwise.
pub fn sweep_indices(p: &Polynomial) -> Vec<usize> {
    let n = p.darga();
    if p.is_palindromic() {
        (0..=n / 2).collect()
    } else {
        (0..n).collect()
    }
}

/// Tolerance used to call two interlace values tied.
pub fn cert_tolerance(value: f64) -> f64 {
    1e-9 * (1.0 + value.abs())
}

/// Maximum of `values(prec)` with its arg-max set; doubles precision on ambiguous gaps.
pub(crate) fn certified_max<F>(
    mut values: F,
    prec: Precision,
    input: Option<Precision>,
    scale: f64,
) -> Result<(Scalar, Vec<usize>, bool, Precision)>
where
    F: FnMut(Precision) -> Result<Vec<Scalar>>,
{
    let mut p = prec;
    for round in 0..=MAX_ESCALATIONS {
        let v = values(p)?;
        let best = v
            .iter()
            .cloned()
            .reduce(|a, b| if b > a { b } else { a })
            .ok_or_else(|| Error::InternalInconsistency("empty sweep".into()))?;
        if v.iter().all(|s| s.is_exact()) {
            let certs = (0..v.len()).filter(|&j| v[j] == best).collect();
            return Ok((best, certs, true, p));
        }
        let eps = cert_tolerance(best.to_f64());
        let limit = input.map_or(p, |q| q.min(p));
        let tau = limit.tie_threshold() * (1.0 + scale);
        let gaps: Vec<f64> = v.iter().map(|s| (&best - s).to_f64()).collect();
        let certs: Vec<usize> = (0..v.len()).filter(|&j| gaps[j] <= eps).collect();
        let ambiguous = gaps.iter().any(|&g| g > tau && g <= eps);
        if !ambiguous || round == MAX_ESCALATIONS || limit < p {
            return Ok((best, certs, !ambiguous, p));
        }
        p = p.doubled();
    }
    unreachable!()
}

/// `−½·p(θ_n^j)` for every inspected index.
fn half_negated_values(p: &Polynomial, idx: &[usize], prec: Precision) -> Result<Vec<Scalar>> {
    let n = p.darga();
    let half = Scalar::ratio(-1, 2);
    idx.iter().map(|&j| Ok(&p.eval_unity_with(n, j, prec)? * &half)).collect()
}

pub fn interlace_number(p: &Polynomial) -> Result<InterlaceResult> {
    interlace_number_with(p, Precision::default())
}

pub fn interlace_number_with(p: &Polynomial, prec: Precision) -> Result<InterlaceResult> {
    p.require_trim_self_inversive()?;
    let idx = sweep_indices(p);
    let (value, pos, certified, precision) =
        certified_max(|q| half_negated_values(p, &idx, q), prec, p.precision(), p.l1())?;
    let certs = pos.into_iter().map(|k| idx[k]).collect();
    Ok(InterlaceResult { value, certs, certified, precision })
}

/// True when all values `p(ω)`, `ω ∈ U_n`, share one strict sign.
pub fn angle_interlaces(p: &Polynomial) -> Result<bool> {
    angle_interlaces_with(p, Precision::default())
}

pub fn angle_interlaces_with(p: &Polynomial, prec: Precision) -> Result<bool> {
    if !p.is_full() {
        return Err(Error::NotFull);
    }
    if !p.is_self_inversive() {
        return Err(Error::NotSelfInversive);
    }
    let n = p.darga();
    let tol = prec.tie_threshold() * (1.0 + p.l1());
    let mut sign = 0;
    for j in sweep_indices(p) {
        let s = sign_within(&p.eval_unity_with(n, j, prec)?, tol);
        if s == 0 || (sign != 0 && s != sign) {
            return Ok(false);
        }
        sign = s;
    }
    Ok(true)
}

fn abs_sum(v: &[Scalar]) -> Scalar {
    v.iter().fold(Scalar::zero(), |acc, x| acc + x.abs())
}

fn sorted(v: &[Scalar]) -> Vec<Scalar> {
    let mut s = v.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    s
}

/// `½Σ|p_j|`.
pub fn ll_bound(p: &Polynomial) -> Scalar {
    &abs_sum(&p.inner_real()) * &Scalar::ratio(1, 2)
}

/// Element in position `⌊n/2⌋` (counting from 1) of the sorted sequence `p_1…p_{n−1}`.
pub fn median(p: &Polynomial) -> Scalar {
    let s = sorted(&p.inner_real());
    let k = (p.darga() / 2).max(1) - 1;
    s[k.min(s.len() - 1)].clone()
}

fn value_at_one(p: &Polynomial) -> Scalar {
    p.inner_real().into_iter().fold(Scalar::zero(), |a, b| a + b)
}

/// `½(m + Σ|p_j − m|)`, valid when `p(1) ≥ 0`.
pub fn kwon_bound(p: &Polynomial) -> Option<Scalar> {
    if value_at_one(p).signum() < 0 {
        return None;
    }
    let m = median(p);
    let dev: Vec<Scalar> = p.inner_real().iter().map(|x| x - &m).collect();
    Some(&(&m + &abs_sum(&dev)) * &Scalar::ratio(1, 2))
}

/// `½p(1) − 2Σ_{j∈M} p_j − (⌊(n−1)/2⌋ − 2|M|)·m`, `M = {j < n/2 : p_j < m}`.
pub fn kwon_simple_bound(p: &Polynomial) -> Option<Scalar> {
    let n = p.darga();
    let m = median(p);
    if value_at_one(p).signum() < 0 || (n % 2 == 0 && p.re(n / 2) < m) {
        return None;
    }
    let small: Vec<Scalar> = (1..n.div_ceil(2)).map(|j| p.re(j)).filter(|v| v < &m).collect();
    let count = ((n - 1) / 2) as i64 - 2 * small.len() as i64;
    let s = small.iter().fold(Scalar::zero(), |a, b| a + b);
    Some(&value_at_one(p) * &Scalar::ratio(1, 2) - &s * &Scalar::int(2) - &m * &Scalar::int(count))
}

fn half_increasing(p: &Polynomial, strict: bool) -> bool {
    let h: Vec<Scalar> = (1..=p.darga() / 2).map(|k| p.re(k)).collect();
    h.windows(2).all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] })
}

/// `½p(1) − 2Σ_{j<⌊n/4⌋} p_j − c(n)·p_{⌊n/4⌋}` for strictly half-increasing `p`.
pub fn increasing_upper_bound(p: &Polynomial) -> Option<Scalar> {
    let n = p.darga();
    if n < 4 || !half_increasing(p, true) {
        return None;
    }
    let q = n / 4;
    let c = [1, 2, 2, 3][n % 4];
    let head = (1..q).fold(Scalar::zero(), |a, j| a + p.re(j));
    Some(&value_at_one(p) * &Scalar::ratio(1, 2) - &head * &Scalar::int(2) - &p.re(q) * &Scalar::int(c))
}

/// Lower bound for half-increasing `p`; depends on the parity of `n`.
pub fn monotonic_lower(p: &Polynomial) -> Result<Scalar> {
    p.require_trim_palindromic()?;
    let n = p.darga();
    let m = n / 2;
    if m < 2 || !half_increasing(p, false) {
        return Err(Error::NotApplicable("needs ⌊n/2⌋ ≥ 2 and half-increasing coefficients".into()));
    }
    let s = p.sigma()?.sigma;
    let nn = n as i64;
    if n % 2 == 0 {
        let mm = m as i64;
        let f = Scalar::ratio(mm * mm - 5, mm * mm);
        Ok(&s[m] + &(&(&s[m - 1] - &s[1]) * &f))
    } else {
        let f = Scalar::ratio(nn * nn - 5, nn * nn);
        Ok(&(&s[m] - &s[1]) * &f)
    }
}

/// Class averages `−(1/φ(d))·Σ_j σ_j c_d(j)` indexed by the divisors `d` of `n`.
pub fn class_averages(p: &Polynomial) -> Result<Vec<(u64, Scalar)>> {
    p.require_trim_palindromic()?;
    let n = p.darga() as u64;
    let s = p.sigma()?.sigma;
    Ok(divisors(n)
        .into_iter()
        .map(|d| {
            let sum = (1..s.len()).fold(Scalar::zero(), |acc, j| {
                acc + &s[j] * &Scalar::int(ramanujan_sum(d, j as u64))
            });
            (d, &sum * &Scalar::ratio(-1, euler_phi(d) as i64))
        })
        .collect())
}

/// Maximum class average: a lower bound for `il`.
pub fn ramanujan_lower(p: &Polynomial) -> Result<Scalar> {
    class_averages(p)?
        .into_iter()
        .map(|(_, v)| v)
        .reduce(|a, b| if b > a { b } else { a })
        .ok_or(Error::EmptyPolynomial)
}

/// Whether `il(p)` is the maximum class average, and that rational when so.
pub fn is_interlace_rational(p: &Polynomial) -> Result<(bool, Option<BigRational>)> {
    let il = interlace_number(p)?;
    let lower = ramanujan_lower(p)?;
    let hit = match (&il.value, &lower) {
        (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
        _ => (&il.value - &lower).to_f64().abs() <= cert_tolerance(il.value.to_f64()),
    };
    Ok(match (hit, lower) {
        (true, Scalar::Exact(q)) => (true, Some(q)),
        _ => (false, None),
    })
}

/// `p + a·ge_n`.
pub fn shift_geometric(p: &Polynomial, a: &Scalar) -> Polynomial {
    let n = p.darga();
    if n < 2 {
        return p.clone();
    }
    let ge = Polynomial::from_real(vec![a.clone(); n - 1], 1).unwrap_or_else(|_| Polynomial::zero(n));
    p.add(&ge).with_darga(n)
}

pub fn bound_ladder(p: &Polynomial) -> Result<BoundLadder> {
    p.require_trim_palindromic()?;
    Ok(BoundLadder {
        ll: ll_bound(p),
        kwon: kwon_bound(p),
        kwon_simple: kwon_simple_bound(p),
        increasing_upper: increasing_upper_bound(p),
        ramanujan_lower: ramanujan_lower(p)?,
        monotonic_lower: monotonic_lower(p).ok(),
    })
}
