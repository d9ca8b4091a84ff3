//! Parsing of polynomial input and numeric flags.

use anyhow::{anyhow, bail, Context, Result};
use palinlace::{ComplexScalar, Polynomial, Precision, Scalar, SigmaRep};

/// A real token (`3`, `-2/7`, `0.125`) or a complex one written `re:im`.
pub fn parse_complex(token: &str, prec: Precision) -> Result<ComplexScalar> {
    let t = token.trim();
    match t.split_once(':') {
        Some((re, im)) => Ok(ComplexScalar::new(parse_scalar(re, prec)?, parse_scalar(im, prec)?)),
        None => Ok(ComplexScalar::real(parse_scalar(t, prec)?)),
    }
}

pub fn parse_scalar(token: &str, prec: Precision) -> Result<Scalar> {
    Scalar::parse(token, prec).ok_or_else(|| anyhow!("cannot parse number {token:?}"))
}

pub fn parse_list(text: &str, prec: Precision) -> Result<Vec<ComplexScalar>> {
    text.split(',').map(|t| parse_complex(t, prec)).collect()
}

/// Trim input: the coefficients of `x¹ … x^{n−1}`.
pub fn trim_from_coeffs(text: &str, prec: Precision) -> Result<Polynomial> {
    let c = parse_list(text, prec)?;
    Ok(Polynomial::make(c, 1)?)
}

/// Real σ-coordinates `σ₁ … σ_{⌊n/2⌋}` of a darga `n` polynomial.
pub fn trim_from_sigma(text: &str, darga: usize, prec: Precision) -> Result<Polynomial> {
    let s = text
        .split(',')
        .map(|t| parse_scalar(t, prec))
        .collect::<Result<Vec<_>>>()?;
    let rep = SigmaRep::trim_real(darga, s)?;
    let p = rep.to_polynomial();
    if p.is_zero() {
        return Err(palinlace::Error::EmptyPolynomial.into());
    }
    Ok(p)
}

pub fn polynomial(coeffs: Option<&str>, sigma: Option<&str>, darga: Option<usize>, prec: Precision) -> Result<Polynomial> {
    match (coeffs, sigma) {
        (Some(c), None) => {
            let p = trim_from_coeffs(c, prec)?;
            match darga {
                Some(n) if n != p.darga() => Err(palinlace::Error::DargaMismatch { expected: n, found: p.darga() }.into()),
                _ => Ok(p),
            }
        }
        (None, Some(s)) => {
            let n = darga.context("--sigma needs --darga")?;
            trim_from_sigma(s, n, prec)
        }
        (Some(_), Some(_)) => bail!("give either --coeffs or --sigma, not both"),
        (None, None) => bail!("no polynomial given (use --coeffs or --sigma with --darga)"),
    }
}

/// `lo:hi:steps`.
pub fn parse_grid(text: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        bail!("grid must be lo:hi:steps, got {text:?}");
    }
    let lo: f64 = parts[0].trim().parse().with_context(|| format!("grid lower end {:?}", parts[0]))?;
    let hi: f64 = parts[1].trim().parse().with_context(|| format!("grid upper end {:?}", parts[1]))?;
    let steps: usize = parts[2].trim().parse().with_context(|| format!("grid steps {:?}", parts[2]))?;
    if !(lo.is_finite() && hi.is_finite()) || hi < lo {
        bail!("grid needs finite lo ≤ hi");
    }
    Ok((lo, hi, steps))
}

/// `a:b,a:b,…` pairs.
pub fn parse_pairs(text: &str, prec: Precision) -> Result<Vec<(Scalar, Scalar)>> {
    text.split(',')
        .map(|pair| {
            let (a, b) = pair.split_once(':').ok_or_else(|| anyhow!("pair {pair:?} is not a:b"))?;
            Ok((parse_scalar(a, prec)?, parse_scalar(b, prec)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_lists() {
        let p = trim_from_coeffs("2, 2", Precision::default()).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[2, 2], 1).unwrap());
        let q = trim_from_coeffs("1/2,0.25,1/2", Precision::default()).unwrap();
        assert_eq!(q.darga(), 4);
        assert!(q.re(1).is_exact() && !q.re(2).is_exact());
        let z = trim_from_coeffs("1:1,1:-1", Precision::default()).unwrap();
        assert!(z.is_self_inversive() && !z.is_real());
        assert!(trim_from_coeffs("0", Precision::default()).is_err());
        assert!(trim_from_coeffs("1,x", Precision::default()).is_err());
    }

    #[test]
    fn sigma_lists() {
        let p = trim_from_sigma("172,100,198", 6, Precision::default()).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[172, 100, 396, 100, 172], 1).unwrap());
        assert!(trim_from_sigma("1,2", 6, Precision::default()).is_err());
    }

    #[test]
    fn grids_and_pairs() {
        assert_eq!(parse_grid("0:2:4").unwrap(), (0.0, 2.0, 4));
        assert!(parse_grid("2:0:4").is_err());
        assert_eq!(parse_pairs("5:1,5:1", Precision::default()).unwrap().len(), 2);
    }
}
