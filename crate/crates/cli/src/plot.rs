//! Figure data for dargas 4 and 5: il, cn and be along rays of σ-space.

use std::io::Write;

use anyhow::{bail, Result};
use palinlace::circle::{bounding_error_from, circle_number_palindromic_with};
use palinlace::foic::cone_membership;
use palinlace::interlace::interlace_number_with;
use palinlace::{Polynomial, Precision, Real, Scalar, SigmaRep};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct RayPoint {
    pub t: f64,
    pub b: Scalar,
    pub c: Scalar,
    pub il: Scalar,
    pub cn: Scalar,
    pub be: Scalar,
    pub cones: Vec<usize>,
}

/// `b·σ₁ + c·σ₂` in darga `n`.
pub fn ray_polynomial(n: usize, b: &Scalar, c: &Scalar) -> Result<Polynomial> {
    if n != 4 && n != 5 {
        bail!("plot data is available for darga 4 and 5, not {n}");
    }
    Ok(SigmaRep::trim_real(n, vec![b.clone(), c.clone()])?.to_polynomial())
}

pub fn evaluate(n: usize, t: f64, b: Scalar, c: Scalar, prec: Precision) -> Result<RayPoint> {
    let p = ray_polynomial(n, &b, &c)?;
    let il = interlace_number_with(&p, prec)?.value;
    let cn = circle_number_palindromic_with(&p, prec)?.value;
    let be = bounding_error_from(&il, &cn);
    let cones = cone_membership(&p)?.cones;
    Ok(RayPoint { t, b, c, il, cn, be, cones })
}

/// `steps` rays `(cos t, sin t)` with `t = 2πk/steps`.
pub fn circle_sweep(n: usize, steps: usize, prec: Precision) -> Result<Vec<RayPoint>> {
    if steps == 0 {
        bail!("need at least one step");
    }
    (0..steps)
        .into_par_iter()
        .map(|k| {
            let (cos, sin) = Real::cos_sin_turn(k as i64, steps as u64, prec);
            let t = std::f64::consts::TAU * k as f64 / steps as f64;
            evaluate(n, t, snap(Scalar::Float(cos)), snap(Scalar::Float(sin)), prec)
        })
        .collect()
}

/// Exact zero for values that are zero to working precision.
fn snap(s: Scalar) -> Scalar {
    if s.to_f64().abs() < 1e-30 {
        Scalar::zero()
    } else {
        s
    }
}

pub fn write_tsv<W: Write>(mut out: W, points: &[RayPoint]) -> Result<()> {
    writeln!(out, "t\tb\tc\til\tcn\tbe\tcones")?;
    for r in points {
        let cones = r.cones.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        writeln!(
            out,
            "{:.12}\t{:.15}\t{:.15}\t{:.15}\t{:.15}\t{:.15}\t{}",
            r.t,
            r.b.to_f64(),
            r.c.to_f64(),
            r.il.to_f64(),
            r.cn.to_f64(),
            r.be.to_f64(),
            cones
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn darga_four_near_discontinuity() {
        let prec = Precision::default();
        let b = Scalar::Float(Real::from_f64(2f64.sqrt() + 1e-7, prec));
        let r = evaluate(4, 0.0, b, Scalar::one(), prec).unwrap();
        assert!((r.cn.to_f64() - (2f64.sqrt() - 1.0)).abs() < 1e-6);
        assert!((r.be.to_f64() - 2f64.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn darga_five_exceptional_ray() {
        let prec = Precision::default();
        let s5 = Real::from_i64(5, prec).sqrt();
        let b = Scalar::Float((Real::one(prec) - s5).div_i64(6));
        let r = evaluate(5, 0.0, b, Scalar::one(), prec).unwrap();
        assert!(r.be.to_f64().abs() < 1e-9, "{}", r.be);
    }

    #[test]
    fn sweep_shape() {
        let pts = circle_sweep(4, 8, Precision::default()).unwrap();
        assert_eq!(pts.len(), 8);
        assert!(pts.iter().all(|r| r.cn <= r.il || (r.il.to_f64() - r.cn.to_f64()).abs() < 1e-9));
    }
}
