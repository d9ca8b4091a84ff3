//! Seeded batches of random trim palindromic polynomials.

use std::io::Write;

use anyhow::Result;
use palinlace::{Polynomial, Precision, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{analyze, AnalysisReport, CSV_HEADER, FORMAT_VERSION};

/// Integer palindromic polynomial with `σ_k` uniform in `[−range, range]`, never zero.
pub fn random_palindromic(rng: &mut ChaCha8Rng, darga: usize, range: i64) -> Polynomial {
    loop {
        let half: Vec<i64> = (1..=darga / 2).map(|_| rng.gen_range(-range..=range)).collect();
        let inner: Vec<i64> = (1..darga).map(|k| half[k.min(darga - k) - 1]).collect();
        if let Ok(p) = Polynomial::from_ints(&inner, 1) {
            if p.darga() == darga {
                return p;
            }
        }
    }
}

pub fn batch(darga: usize, count: usize, seed: u64, range: i64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_palindromic(&mut rng, darga, range)).collect()
}

/// Analyses in input order; failures are reported per row.
pub fn run(polys: &[Polynomial], prec: Precision) -> Vec<palinlace::Result<AnalysisReport>> {
    polys.par_iter().map(|p| analyze(p, prec)).collect()
}

pub fn write_csv<W: Write>(out: W, polys: &[Polynomial], results: &[palinlace::Result<AnalysisReport>]) -> Result<()> {
    let mut out = out;
    writeln!(out, "# palinlace scan csv v{FORMAT_VERSION}")?;
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    header.push("error");
    w.write_record(&header)?;
    for (i, (p, r)) in polys.iter().zip(results).enumerate() {
        match r {
            Ok(rep) => {
                let mut row = rep.csv_row(i);
                row.push(String::new());
                w.write_record(&row)?;
            }
            Err(e) => {
                let mut row = vec![String::new(); header.len()];
                row[0] = i.to_string();
                row[1] = p.darga().to_string();
                row[2] = p.to_text().replace(',', " ");
                row[header.len() - 1] = e.to_string();
                w.write_record(&row)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Largest bounding error among successful rows.
pub fn max_be(results: &[palinlace::Result<AnalysisReport>]) -> Option<Scalar> {
    results
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|r| r.be.clone())
        .reduce(|a, b| if b > a { b } else { a })
}
