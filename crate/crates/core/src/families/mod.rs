//! Named polynomial families.

pub mod arith;

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{ComplexScalar, Precision, Real, Scalar};
use crate::polycore::{binomial_coefficient, unity_cos, Polynomial};

fn need(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn trim_ints(inner: impl IntoIterator<Item = BigInt>) -> Result<Polynomial> {
    Polynomial::trim_from(inner.into_iter().map(|c| Scalar::Exact(BigRational::from_integer(c))).collect())
}

/// `x + x² + … + x^{n−1}`.
pub fn geometric(n: usize) -> Result<Polynomial> {
    need(n >= 2, "geometric polynomial needs n ≥ 2")?;
    Polynomial::from_ints(&vec![1; n - 1], 1)
}

/// `x^k + x^{n−k}`, which is `2x^{n/2}` in the middle.
pub fn sigma_basis(n: usize, k: usize) -> Result<Polynomial> {
    need(k >= 1 && 2 * k <= n, format!("σ index {k} outside 1..={}", n / 2))?;
    let mut c = vec![0i64; n + 1];
    c[k] += 1;
    c[n - k] += 1;
    Polynomial::from_ints(&c, 0)
}

/// Trimmed `Σ gcd(n, j)^k x^j`.
pub fn gcd_poly(n: usize, k: u32) -> Result<Polynomial> {
    need(n >= 2, "gcd polynomial needs n ≥ 2")?;
    trim_ints((1..n).map(|j| num::pow(BigInt::from(j.gcd(&n)), k as usize)))
}

/// `R_n`: the indicator of residues coprime to `n`.
pub fn coprime_support(n: usize) -> Result<Polynomial> {
    need(n >= 2, "coprime-support polynomial needs n ≥ 2")?;
    trim_ints((1..n).map(|j| BigInt::from(u8::from(j.gcd(&n) == 1))))
}

/// Legendre-symbol coefficients `(j | n)` for a prime `n ≡ 1 (mod 4)`.
pub fn fekete(n: usize) -> Result<Polynomial> {
    need(arith::is_prime(n as u64) && n % 4 == 1, format!("Fekete polynomial needs a prime ≡ 1 mod 4, got {n}"))?;
    trim_ints((1..n).map(|j| BigInt::from(arith::legendre(j as i64, n as u64))))
}

/// `(1+x)ⁿ − 1 − xⁿ`.
pub fn binomial(n: usize) -> Result<Polynomial> {
    need(n >= 2, "binomial polynomial needs n ≥ 2")?;
    trim_ints((1..n).map(|k| binomial_coefficient(n, k)))
}

/// `Σ C(n,k)⁻¹ x^k` over `0 < k < n`.
pub fn hadamard_binomial(n: usize) -> Result<Polynomial> {
    need(n >= 2, "binomial polynomial needs n ≥ 2")?;
    let inner = (1..n)
        .map(|k| Scalar::Exact(BigRational::new(BigInt::one(), binomial_coefficient(n, k))))
        .collect();
    Polynomial::trim_from(inner)
}

/// `Q_n = Π_{j<n/4} (x² − 2cos((4j+1)π/n)x + 1)`.
pub fn be_witness_factor(n: usize, prec: Precision) -> Result<Polynomial> {
    need(n >= 4 && n % 4 == 0, format!("BE witness needs 4 | n, got {n}"))?;
    let mut q = Polynomial::from_ints(&[1], 0)?;
    for j in 0..n / 4 {
        let c = unity_cos((4 * j + 1) as i64, 2 * n as u64, prec);
        let f = Polynomial::from_real(vec![Scalar::one(), Scalar::int(-2) * c, Scalar::one()], 0)?;
        q = q.mul(&f);
    }
    Ok(q)
}

/// `P_n = trim(Q_n²)`.
pub fn be_witness(n: usize, prec: Precision) -> Result<Polynomial> {
    let q = be_witness_factor(n, prec)?;
    q.mul(&q).trim_part()
}

/// Trim of `((1−x)² + ax)·(1 + x + … + x^{n−1})²`, exact for odd `n ≥ 5` and `0 < a < 9/n²`.
pub fn exact_family(n: usize, a: &Scalar) -> Result<Polynomial> {
    need(n >= 5 && n % 2 == 1, format!("exact family needs odd n ≥ 5, got {n}"))?;
    let bound = Scalar::ratio(9, (n * n) as i64);
    need(a.signum() > 0 && a < &bound, format!("exact family needs 0 < a < 9/{}", n * n))?;
    let quad = Polynomial::from_real(vec![Scalar::one(), a - &Scalar::int(2), Scalar::one()], 0)?;
    let g = Polynomial::from_ints(&vec![1; n], 0)?;
    quad.mul(&g).mul(&g).trim_part()
}

/// Trim of `Π (a_i x² + 2b_i x + a_i)` over at least three pairs with `0 < b_i < a_i`.
pub fn two_interval(params: &[(Scalar, Scalar)]) -> Result<Polynomial> {
    need(params.len() >= 3, "two-interval fixture needs at least three quadratics")?;
    let mut f = Polynomial::from_ints(&[1], 0)?;
    for (a, b) in params {
        need(b.signum() > 0 && b < a, "two-interval fixture needs 0 < b < a")?;
        f = f.mul(&Polynomial::from_real(vec![a.clone(), Scalar::int(2) * b, a.clone()], 0)?);
    }
    f.trim_part()
}

/// `R_{qn}(x) + σ_{n,1}(x^q) − σ_{n,2}(x^q)` for an odd prime `q` that is the least prime factor of `qn`.
pub fn not_fourat(q: usize, n: usize) -> Result<Polynomial> {
    need(q % 2 == 1 && arith::is_prime(q as u64), format!("{q} is not an odd prime"))?;
    need(n >= 4, "not-fourat fixture needs n ≥ 4")?;
    need(
        arith::smallest_prime_factor((q * n) as u64) == Some(q as u64),
        format!("{q} is not the least prime factor of {}", q * n),
    )?;
    let r = coprime_support(q * n)?;
    let s = sigma_basis(n, 1)?.sub(&sigma_basis(n, 2)?).inflate(q);
    Ok(r.add(&s))
}

fn conj_eq(a: &ComplexScalar, b: &ComplexScalar) -> bool {
    let c = b.conj();
    match (a.is_exact() && c.is_exact(), a == &c) {
        (true, eq) => eq,
        (false, _) => (&a.re - &c.re).to_f64().abs() + (&a.im - &c.im).to_f64().abs() < 1e-12,
    }
}

/// Largest matrix accepted by [`cut_polynomial`].
pub const CUT_MAX: usize = 20;

/// `Σ_S x^{|S|} Π_{i∈S, j∉S} a_ij` over all subsets of the index set.
pub fn cut_polynomial(a: &[Vec<ComplexScalar>]) -> Result<Polynomial> {
    let n = a.len();
    if n > CUT_MAX {
        return Err(Error::TooLarge(format!("cut polynomial of a {n}×{n} matrix")));
    }
    need(n >= 1 && a.iter().all(|r| r.len() == n), "cut polynomial needs a square matrix")?;
    for i in 0..n {
        for j in 0..=i {
            need(conj_eq(&a[i][j], &a[j][i]), format!("matrix is not Hermitian at ({i}, {j})"))?;
        }
    }
    let mut coeffs = vec![ComplexScalar::zero(); n + 1];
    let one = ComplexScalar::real(Scalar::one());
    for mask in 0u32..(1 << n) {
        let mut w = one.clone();
        'outer: for i in (0..n).filter(|i| mask >> i & 1 == 1) {
            for j in (0..n).filter(|j| mask >> j & 1 == 0) {
                w = &w * &a[i][j];
                if w.is_zero() {
                    break 'outer;
                }
            }
        }
        let k = mask.count_ones() as usize;
        coeffs[k] = &coeffs[k] + &w;
    }
    Polynomial::make(coeffs, 0)
}

/// `LY(x) = Σ_{k=1}^{⌊n/2⌋} C(n,k) x^{k(n−k)}`.
pub fn lee_yang(n: usize, x: f64) -> f64 {
    (1..=n / 2)
        .map(|k| binomial_coefficient(n, k).to_string().parse::<f64>().unwrap_or(f64::INFINITY) * x.powi((k * (n - k)) as i32))
        .sum()
}

/// The positive root of `LY(x) = 1`.
pub fn ly_threshold(n: usize) -> Result<Scalar> {
    need(n >= 2, "Lee–Yang threshold needs n ≥ 2")?;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if lee_yang(n, mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Scalar::Float(Real::from_f64(0.5 * (lo + hi), Precision::default())))
}

/// Family name plus its parameters, as parsed from the command line.
#[derive(Clone, Debug, Default)]
pub struct FamilySpec {
    pub name: String,
    pub params: BTreeMap<String, Scalar>,
    /// `(a, b)` pairs for the two-interval fixture.
    pub pairs: Vec<(Scalar, Scalar)>,
}

pub const FAMILY_NAMES: &[&str] = &[
    "geometric",
    "sigma",
    "gcd",
    "coprime",
    "fekete",
    "binomial",
    "hadamard-binomial",
    "be-witness",
    "exact",
    "two-interval",
    "not-fourat",
];

impl FamilySpec {
    pub fn new(name: &str) -> Self {
        FamilySpec { name: name.to_string(), ..Default::default() }
    }

    pub fn with(mut self, key: &str, v: Scalar) -> Self {
        self.params.insert(key.to_string(), v);
        self
    }

    fn uint(&self, key: &str) -> Result<usize> {
        let v = self
            .params
            .get(key)
            .ok_or_else(|| Error::InvalidParameter(format!("family {} needs --{key}", self.name)))?;
        match v.as_rational() {
            Some(q) if q.is_integer() && q.numer() >= &BigInt::zero() => {
                q.numer().try_into().map_err(|_| Error::TooLarge(format!("--{key}")))
            }
            _ => Err(Error::InvalidParameter(format!("--{key} must be a nonnegative integer"))),
        }
    }

    fn uint_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.params.contains_key(key) {
            self.uint(key)
        } else {
            Ok(default)
        }
    }

    pub fn build(&self, prec: Precision) -> Result<Polynomial> {
        match self.name.as_str() {
            "geometric" => geometric(self.uint("n")?),
            "sigma" => sigma_basis(self.uint("n")?, self.uint("k")?),
            "gcd" => gcd_poly(self.uint("n")?, self.uint_or("k", 1)? as u32),
            "coprime" => coprime_support(self.uint("n")?),
            "fekete" => fekete(self.uint("n")?),
            "binomial" => binomial(self.uint("n")?),
            "hadamard-binomial" => hadamard_binomial(self.uint("n")?),
            "be-witness" => be_witness(self.uint("n")?, prec),
            "exact" => {
                let a = self.params.get("a").cloned().unwrap_or_else(|| Scalar::ratio(1, 4));
                exact_family(self.uint("n")?, &a)
            }
            "two-interval" => two_interval(&self.pairs),
            "not-fourat" => not_fourat(self.uint("q")?, self.uint("n")?),
            other => Err(Error::InvalidParameter(format!("unknown family {other}"))),
        }
    }
}
