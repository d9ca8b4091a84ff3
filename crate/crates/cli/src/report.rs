//! The analysis report: every invariant of one polynomial, as JSON or as a CSV row.

use palinlace::circle::{
    circle_number_palindromic_with, circle_number_with, cn_lower_bounds, chen_bound, exactness, bounding_error_from,
    CircleResult, ExactnessVerdict,
};
use palinlace::foic::{cone_membership, ConeMembership};
use palinlace::interlace::{bound_ladder, interlace_number_with, BoundLadder, InterlaceResult};
use palinlace::numeric::CReal;
use palinlace::{Error, Polynomial, Precision, Result, Scalar};
use serde_json::{json, Value};

pub const FORMAT_VERSION: &str = "1";

pub fn scalar(s: &Scalar) -> Value {
    let mut v = json!({ "repr": s.repr(), "f64": s.to_f64() });
    if let Some(q) = s.rational_string() {
        v["rational"] = Value::String(q);
    }
    v
}

fn opt_scalar(s: &Option<Scalar>) -> Value {
    s.as_ref().map(scalar).unwrap_or(Value::Null)
}

pub fn complex_point(z: &CReal) -> Value {
    let turns = z.arg().to_f64() / std::f64::consts::TAU;
    json!({ "re": z.re.to_decimal(20), "im": z.im.to_decimal(20), "turns": turns })
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub polynomial: Polynomial,
    pub precision: Precision,
    pub il: InterlaceResult,
    pub cn: CircleResult,
    pub be: Scalar,
    pub exactness: Option<ExactnessVerdict>,
    pub cones: Option<ConeMembership>,
    pub bounds: Option<BoundLadder>,
}

/// Failures that mean the input is outside a procedure's domain, as opposed to a bug.
fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotPalindromic | Error::NotApplicable(_) | Error::NotSupported(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn analyze(p: &Polynomial, prec: Precision) -> Result<AnalysisReport> {
    p.require_trim_self_inversive()?;
    let il = interlace_number_with(p, prec)?;
    let cn = if p.is_palindromic() { circle_number_palindromic_with(p, prec)? } else { circle_number_with(p, prec)? };
    let be = bounding_error_from(&il.value, &cn.value);
    let palindromic = p.is_palindromic();
    let (ex, cones, bounds) = if palindromic {
        (optional(exactness(p, &il, &cn))?, optional(cone_membership(p))?, optional(bound_ladder(p))?)
    } else {
        (None, None, None)
    };
    Ok(AnalysisReport { polynomial: p.clone(), precision: prec, il, cn, be, exactness: ex, cones, bounds })
}

impl AnalysisReport {
    pub fn to_json(&self) -> Result<Value> {
        let p = &self.polynomial;
        let coefficients: Vec<Value> = (1..p.darga())
            .map(|k| {
                let z = p.coeff(k);
                if z.im.is_zero() {
                    scalar(&z.re)
                } else {
                    json!({ "re": scalar(&z.re), "im": scalar(&z.im) })
                }
            })
            .collect();
        let sigma = if p.is_palindromic() {
            Value::Array(p.sigma()?.sigma.iter().skip(1).map(scalar).collect())
        } else {
            Value::Null
        };
        let exactness = self.exactness.as_ref().map_or(Value::Null, |e| {
            json!({
                "exact": e.exact,
                "route": e.route.name(),
                "witness": e.witness,
                "consistent": e.consistent,
            })
        });
        let cones = self.cones.as_ref().map_or(Value::Null, |c| {
            json!({ "cones": c.cones, "face_dimension": c.face_dimension })
        });
        let bounds = match &self.bounds {
            Some(b) => {
                let lower = cn_lower_bounds(p)?;
                json!({
                    "il_upper_ll": scalar(&b.ll),
                    "il_upper_kwon": opt_scalar(&b.kwon),
                    "il_upper_kwon_simple": opt_scalar(&b.kwon_simple),
                    "il_upper_increasing": opt_scalar(&b.increasing_upper),
                    "il_lower_ramanujan": scalar(&b.ramanujan_lower),
                    "il_lower_monotonic": opt_scalar(&b.monotonic_lower),
                    "cn_lower_binomial": scalar(&lower.binomial),
                    "cn_lower_at_one": scalar(&lower.at_one),
                    "cn_lower_at_minus_one": opt_scalar(&lower.at_minus_one),
                    "cn_lower_derivative": opt_scalar(&lower.derivative_at_minus_one),
                    "cn_upper_chen": opt_scalar(&chen_bound(p)),
                })
            }
            None => Value::Null,
        };
        let exact_track = p.is_exact();
        Ok(json!({
            "version": FORMAT_VERSION,
            "input": {
                "darga": p.darga(),
                "text": p.to_text(),
                "coefficients": coefficients,
                "sigma": sigma,
                "palindromic": p.is_palindromic(),
            },
            "precision_bits": self.precision.bits(),
            "il": {
                "value": scalar(&self.il.value),
                "certs": self.il.certs,
            },
            "cn": {
                "value": scalar(&self.cn.value),
                "method": self.cn.method.name(),
                "certs": self.cn.certs.iter().map(complex_point).collect::<Vec<_>>(),
                "isolated": self.cn.isolated,
            },
            "be": scalar(&self.be),
            "exactness": exactness,
            "cones": cones,
            "bounds": bounds,
            "uncertainty": {
                "exact_track": exact_track && self.il.value.is_exact() && self.cn.value.is_exact(),
                "il_certified": self.il.certified,
                "exactness_consistent": self.exactness.as_ref().is_none_or(|e| e.consistent),
                "cn_certs_found": !self.cn.certs.is_empty(),
            },
        }))
    }

    /// Columns of [`CSV_HEADER`].
    pub fn csv_row(&self, index: usize) -> Vec<String> {
        let ex = self.exactness.as_ref();
        vec![
            index.to_string(),
            self.polynomial.darga().to_string(),
            self.polynomial.to_text().replace(',', " "),
            self.il.value.repr(),
            self.il.value.rational_string().unwrap_or_default(),
            self.cn.value.repr(),
            self.cn.value.rational_string().unwrap_or_default(),
            self.cn.method.name().to_string(),
            self.be.repr(),
            self.be.to_f64().to_string(),
            ex.map_or(String::new(), |e| e.exact.to_string()),
            ex.map_or(String::new(), |e| e.route.name().to_string()),
            join(&self.il.certs),
            self.cones.as_ref().map_or(String::new(), |c| join(&c.cones)),
            self.il.certified.to_string(),
        ]
    }
}

pub const CSV_HEADER: &[&str] = &[
    "index",
    "darga",
    "coefficients",
    "il",
    "il_rational",
    "cn",
    "cn_rational",
    "cn_method",
    "be",
    "be_f64",
    "exact",
    "exact_route",
    "il_certs",
    "cones",
    "il_certified",
];

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
