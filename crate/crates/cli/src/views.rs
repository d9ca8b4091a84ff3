//! JSON views of the fan and of α-profiles.

use palinlace::dynamics::{AlphaProfile, TrajectoryPoint};
use palinlace::foic::{
    cone_halfspaces, cone_membership, count_colored_automorphisms, functional, isometry_graph, isometry_group,
    membership_shortcuts, polar_vertices,
};
use palinlace::{Polynomial, Result, Scalar};
use serde_json::{json, Value};

use crate::report::{scalar, FORMAT_VERSION};

fn row(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

fn end(s: &Option<Scalar>) -> Value {
    s.as_ref().map(scalar).unwrap_or(Value::Null)
}

pub fn foic_json(n: usize, p: Option<&Polynomial>) -> Result<Value> {
    let m = n / 2;
    let mut cones = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let f = functional(n, j)?;
        let h = cone_halfspaces(n, j)?;
        cones.push(json!({
            "j": j,
            "functional": row(&f.coefficients),
            "halfspaces": h.iter().map(|r| row(r)).collect::<Vec<_>>(),
        }));
    }
    let vertices: Vec<Value> = polar_vertices(n)?
        .iter()
        .map(|v| Ok(row(&v.sigma()?.sigma[1..])))
        .collect::<Result<_>>()?;
    let mut out = json!({
        "version": FORMAT_VERSION,
        "darga": n,
        "cones": cones,
        "polar_vertices": vertices,
    });
    if n >= 3 {
        let g = isometry_group(n)?;
        let graph = isometry_graph(n)?;
        out["isometry_group"] = json!({
            "order": g.order.to_string(),
            "structure": g.structure,
            "colored_automorphisms": count_colored_automorphisms(&graph)?.to_string(),
        });
    }
    if let Some(p) = p {
        let c = cone_membership(p)?;
        let s = membership_shortcuts(p)?;
        out["membership"] = json!({
            "cones": c.cones,
            "face_dimension": c.face_dimension,
            "shortcuts": {
                "inc0": s.inc0_applies,
                "inc_half": s.inc_half_applies,
                "sumj2": s.sumj2_applies,
            },
        });
    }
    Ok(out)
}

pub fn profile_json(p: &Polynomial, prof: &AlphaProfile) -> Value {
    let intervals: Vec<Value> = prof
        .intervals
        .iter()
        .map(|iv| {
            json!({
                "lo": end(&iv.lo),
                "hi": end(&iv.hi),
                "point": iv.point,
                "real_root_count": iv.real_root_count,
                "circle_root_count": iv.circle_root_count,
                "circle_rooted": iv.circle_rooted,
                "exact": iv.exact,
            })
        })
        .collect();
    let runs: Vec<Value> = prof
        .circle_rooted_runs()
        .iter()
        .map(|(lo, hi)| json!({ "lo": end(lo), "hi": end(hi) }))
        .collect();
    json!({
        "version": FORMAT_VERSION,
        "darga": prof.darga,
        "text": p.to_text(),
        "omega": prof.omega,
        "breakpoints": row(&prof.breakpoints),
        "intervals": intervals,
        "circle_rooted_runs": runs,
        "final_lower_endpoint": end(&prof.final_lower_endpoint()),
    })
}

pub fn trajectories_json(t: &[TrajectoryPoint]) -> Value {
    Value::Array(
        t.iter()
            .map(|pt| {
                json!({
                    "alpha": pt.alpha.to_f64(),
                    "roots": pt.roots.as_ref().map(|r| r.iter().map(|z| {
                        let c = z.to_c64();
                        json!([c.re, c.im])
                    }).collect::<Vec<_>>()),
                })
            })
            .collect(),
    )
}

/// `α  root  re  im`, one line per root; failed grid points get a single `NaN` line.
pub fn trajectories_tsv(t: &[TrajectoryPoint]) -> String {
    let mut s = String::from("alpha\troot\tre\tim\n");
    for pt in t {
        let a = pt.alpha.to_f64();
        match &pt.roots {
            Some(r) => {
                for (k, z) in r.iter().enumerate() {
                    let c = z.to_c64();
                    s.push_str(&format!("{a:.12}\t{k}\t{:.15}\t{:.15}\n", c.re, c.im));
                }
            }
            None => s.push_str(&format!("{a:.12}\t-\tNaN\tNaN\n")),
        }
    }
    s
}
