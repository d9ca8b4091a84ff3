//! Building blocks of the `palinlace` command: input parsing, reports, scans and figure data.

pub mod input;
pub mod plot;
pub mod report;
pub mod scan;
pub mod views;

use palinlace::{Error, Precision};

/// Exit status for input errors.
pub const EXIT_INPUT: i32 = 2;
/// Exit status when a theorem-guaranteed object was not found numerically.
pub const EXIT_INTERNAL: i32 = 3;

pub const PRECISION_ENV: &str = "PALINLACE_PRECISION";

/// Error kind name and exit code.
pub fn classify(e: &anyhow::Error) -> (String, i32) {
    match e.downcast_ref::<Error>() {
        Some(err) => {
            let code = match err {
                Error::OracleFailure(_) | Error::InternalInconsistency(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
            let debug = format!("{err:?}");
            let kind = debug.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
            (kind, code)
        }
        None => ("InvalidInput".to_string(), EXIT_INPUT),
    }
}

/// `--precision`, then the environment, then the library default.
pub fn resolve_precision(flag: Option<usize>) -> anyhow::Result<Precision> {
    let bits = match flag {
        Some(b) => Some(b),
        None => match std::env::var(PRECISION_ENV) {
            Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| anyhow::anyhow!("{PRECISION_ENV}={v:?} is not a bit count"))?),
            Err(_) => None,
        },
    };
    match bits {
        Some(b) if b < 53 => anyhow::bail!("precision must be at least 53 bits"),
        Some(b) => Ok(Precision::new(b)),
        None => Ok(Precision::default()),
    }
}
