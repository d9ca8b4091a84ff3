//! The fan of interlace certs: the functionals `I_j(σ) = −Σ_k cos(2πjk/n)·σ_k`, the cones `C_j`
//! where `I_j` is maximal, and the symmetry of the simplex they span.

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::algebra::sturm::simplest_between;
use crate::error::{Error, Result};
use crate::interlace::{cert_tolerance, interlace_number_with};
use crate::numeric::{Precision, Scalar};
use crate::polycore::{unity_cos, Polynomial, SigmaRep};

#[derive(Clone, Debug, PartialEq)]
pub struct FoicFunctional {
    pub n: usize,
    pub j: usize,
    /// Coefficients on `σ_1 … σ_{⌊n/2⌋}`.
    pub coefficients: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConeMembership {
    pub cones: Vec<usize>,
    pub face_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortcuts {
    pub inc0_applies: bool,
    pub inc_half_applies: bool,
    pub sumj2_applies: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsometryGraph {
    pub n: usize,
    pub vertex_colors: Vec<BigRational>,
    pub edge_colors: Vec<Vec<BigRational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryGroup {
    pub order: u128,
    pub structure: String,
}

pub fn functional(n: usize, j: usize) -> Result<FoicFunctional> {
    functional_with(n, j, Precision::default())
}

pub fn functional_with(n: usize, j: usize, prec: Precision) -> Result<FoicFunctional> {
    if j > n / 2 {
        return Err(Error::IndexOutOfRange { index: j, max: n / 2 });
    }
    let coefficients = (1..=n / 2).map(|k| -unity_cos((j * k) as i64, n as u64, prec)).collect();
    Ok(FoicFunctional { n, j, coefficients })
}

impl FoicFunctional {
    pub fn apply(&self, s: &SigmaRep) -> Result<Scalar> {
        if s.darga != self.n {
            return Err(Error::DargaMismatch { expected: self.n, found: s.darga });
        }
        Ok(self
            .coefficients
            .iter()
            .zip(&s.sigma[1..])
            .fold(Scalar::zero(), |acc, (c, v)| acc + c * v))
    }

    pub fn is_exact(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_exact())
    }
}

/// Rescales an exact row by a positive rational to primitive integers.
fn clear_denominators(row: &[Scalar]) -> Vec<Scalar> {
    let q: Vec<BigRational> = row.iter().map(|s| s.as_rational().cloned().unwrap()).collect();
    let den = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = q.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.into_iter().map(|x| Scalar::Exact(BigRational::from_integer(x / &g))).collect()
}

/// Rows `I_j − I_r` (`r ≠ j`); `C_j` is `{σ : row·σ ≥ 0 for every row}`.
pub fn cone_halfspaces(n: usize, j: usize) -> Result<Vec<Vec<Scalar>>> {
    let fj = functional(n, j)?;
    let mut rows = Vec::new();
    for r in 0..=n / 2 {
        if r == j {
            continue;
        }
        let fr = functional(n, r)?;
        let row: Vec<Scalar> = fj.coefficients.iter().zip(&fr.coefficients).map(|(a, b)| a - b).collect();
        rows.push(if row.iter().all(|s| s.is_exact()) { clear_denominators(&row) } else { row });
    }
    Ok(rows)
}

/// Cone indices of `p` (its interlace certs), double-checked against the half-spaces.
pub fn cone_membership(p: &Polynomial) -> Result<ConeMembership> {
    p.require_trim_palindromic()?;
    let n = p.darga();
    let il = interlace_number_with(p, Precision::default())?;
    let s = p.sigma()?;
    let scale = 1.0 + p.l1();
    for &j in &il.certs {
        for row in cone_halfspaces(n, j)? {
            let v = row.iter().zip(&s.sigma[1..]).fold(Scalar::zero(), |acc, (c, x)| acc + c * x);
            let norm: f64 = row.iter().map(|c| c.to_f64().abs()).sum::<f64>().max(1.0);
            if v.to_f64() < -cert_tolerance(scale) * norm * 4.0 {
                return Err(Error::InternalInconsistency(format!(
                    "cert {j} violates a half-space of its cone"
                )));
            }
        }
    }
    let face_dimension = (n / 2 + 1).saturating_sub(il.certs.len());
    Ok(ConeMembership { cones: il.certs, face_dimension })
}

/// Literal hypothesis tests of the sufficient membership criteria.
pub fn membership_shortcuts(p: &Polynomial) -> Result<Shortcuts> {
    p.require_trim_palindromic()?;
    let n = p.darga();
    let inner = p.inner_real();
    let inc0_applies = inner.iter().all(|c| c.signum() <= 0);
    let inc_half_applies = n % 2 == 0 && p.reflect().inner_real().iter().all(|c| c.signum() <= 0);
    let s = p.sigma()?.sigma;
    let rhs = (2..s.len()).fold(Scalar::zero(), |acc, k| acc + &Scalar::int((k * k) as i64) * &s[k].abs());
    let sumj2_applies = n >= 2 && p.re(1) >= rhs;
    Ok(Shortcuts { inc0_applies, inc_half_applies, sumj2_applies })
}

/// `p⁽ʲ⁾(x) = Σ_{k=1}^{n−1} 2cos(2πjk/n)·x^k`; each satisfies `I_r(σ(p⁽ʲ⁾)) = 1` for `r ≠ j`.
pub fn polar_vertices(n: usize) -> Result<Vec<Polynomial>> {
    if n < 2 {
        return Err(Error::InvalidParameter("polar vertices need n ≥ 2".into()));
    }
    let prec = Precision::default();
    let mut out = Vec::new();
    for j in 0..=n / 2 {
        let c: Vec<Scalar> =
            (1..n).map(|k| &unity_cos((j * k) as i64, n as u64, prec) * &Scalar::int(2)).collect();
        let v = Polynomial::trim_from(c)?;
        let s = v.sigma()?;
        for r in (0..=n / 2).filter(|&r| r != j) {
            let val = functional(n, r)?.apply(&s)?;
            if (val.to_f64() - 1.0).abs() > 1e-12 * n as f64 {
                return Err(Error::InternalInconsistency(format!("I_{r}(p^({j})) = {val}")));
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Rational recognition of a float inner product; the values here have tiny denominators.
fn recognise(v: &Scalar) -> BigRational {
    match v {
        Scalar::Exact(q) => q.clone(),
        Scalar::Float(r) => {
            let x = r.to_rational();
            let eps = BigRational::new(BigInt::one(), BigInt::one() << 100);
            simplest_between(&(&x - &eps), &(&x + &eps))
        }
    }
}

/// Gram matrix of the functionals `I_0 … I_{⌊n/2⌋}` as colored complete graph.
pub fn isometry_graph(n: usize) -> Result<IsometryGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("isometry graph needs n ≥ 3".into()));
    }
    let prec = Precision::new(192);
    let rows: Vec<Vec<Scalar>> = (0..=n / 2).map(|j| functional_with(n, j, prec).map(|f| f.coefficients)).collect::<Result<_>>()?;
    let dot = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y);
    let m = rows.len();
    let mut edge_colors = vec![vec![BigRational::zero(); m]; m];
    let mut vertex_colors = Vec::with_capacity(m);
    for i in 0..m {
        vertex_colors.push(recognise(&dot(&rows[i], &rows[i])));
        for j in 0..m {
            edge_colors[i][j] = recognise(&dot(&rows[i], &rows[j]));
        }
    }
    Ok(IsometryGraph { n, vertex_colors, edge_colors })
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Order and shape of the isometry group of the interlace simplex.
pub fn isometry_group(n: usize) -> Result<IsometryGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter("isometry group needs n ≥ 3".into()));
    }
    let m = (n - 1) / 2;
    Ok(if n % 2 == 1 {
        IsometryGroup { order: factorial(m), structure: format!("S_{m} x S_1") }
    } else if n % 4 == 0 {
        let (a, b) = (m / 2, m.div_ceil(2));
        IsometryGroup {
            order: factorial(a) * factorial(b) * 2,
            structure: format!("S_1 x S_{a} x S_{b} x S_2"),
        }
    } else {
        let h = m / 2;
        IsometryGroup { order: factorial(h) * factorial(h) * 2, structure: format!("(S_{h} x S_{h}) wr S_2") }
    })
}

/// Small integer labels for the vertex and edge colors.
fn color_ids(g: &IsometryGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut palette: Vec<BigRational> = Vec::new();
    let mut id = |c: &BigRational| match palette.iter().position(|x| x == c) {
        Some(i) => i,
        None => {
            palette.push(c.clone());
            palette.len() - 1
        }
    };
    let v = g.vertex_colors.iter().map(&mut id).collect();
    let e = g.edge_colors.iter().map(|row| row.iter().map(&mut id).collect()).collect();
    (v, e)
}

struct Search<'a> {
    vc: &'a [usize],
    ec: &'a [Vec<usize>],
}

impl Search<'_> {
    fn fits(&self, image: &[usize], v: usize, w: usize) -> bool {
        self.vc[w] == self.vc[v] && (0..v).all(|u| self.ec[image[u]][w] == self.ec[u][v])
    }

    /// Number of extensions of `image[..v]` (all of them when `first` is false, else 0 or 1).
    fn extend(&self, v: usize, image: &mut [usize], used: &mut [bool], first: bool) -> u64 {
        let m = image.len();
        if v == m {
            return 1;
        }
        let mut total = 0;
        for w in 0..m {
            if used[w] || !self.fits(image, v, w) {
                continue;
            }
            used[w] = true;
            image[v] = w;
            total += self.extend(v + 1, image, used, first);
            used[w] = false;
            if first && total > 0 {
                break;
            }
        }
        total
    }
}

/// Color-preserving vertex permutations, counted exactly as a product of orbit sizes along
/// the chain of pointwise stabilizers of `0, 1, …`.
pub fn count_colored_automorphisms(g: &IsometryGraph) -> Result<u64> {
    let m = g.vertex_colors.len();
    if m > 13 {
        return Err(Error::TooLarge(format!("{m} vertices exceed the exhaustive search budget")));
    }
    let (vc, ec) = color_ids(g);
    let s = Search { vc: &vc, ec: &ec };
    let mut order = 1u64;
    for v in 0..m {
        let mut orbit = 0;
        for w in v..m {
            let mut image: Vec<usize> = (0..m).collect();
            let mut used = vec![false; m];
            for u in 0..v {
                used[u] = true;
            }
            if !s.fits(&image, v, w) {
                continue;
            }
            used[w] = true;
            image[v] = w;
            if s.extend(v + 1, &mut image, &mut used, true) > 0 {
                orbit += 1;
            }
        }
        order *= orbit;
    }
    Ok(order)
}

/// Plain enumeration of all color-preserving permutations.
pub fn enumerate_colored_automorphisms(g: &IsometryGraph) -> u64 {
    let m = g.vertex_colors.len();
    let (vc, ec) = color_ids(g);
    let s = Search { vc: &vc, ec: &ec };
    s.extend(0, &mut vec![usize::MAX; m], &mut vec![false; m], false)
}
