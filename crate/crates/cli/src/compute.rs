use std::path::Path;

use clap::Subcommand;
use macvertex::exactnum::CyclotomicNumber as Cyclo;
use macvertex::partitions::Partition;
use macvertex::polyring::{MultiPoly, RationalFunction};
use macvertex::symfun::{macdonald, macdonald_at_combinatorial_point, schur, SymFunExpansion};
use macvertex::vertex::{enumerate_hsasm, fused_determinant};
use serde::Serialize;

use crate::verify::{MAX_ELL_N, MAX_N};
use crate::Failure;

const MAX_DEGREE: usize = 8;

#[derive(Subcommand)]
pub enum Object {
    /// Normalised fused partition function as a polynomial in x_1..x_n, y_1..y_n.
    PartitionFn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        /// Order of the root of unity used for q; defaults to 2 ell + 1.
        #[arg(long)]
        q_order: Option<u32>,
    },
    /// Macdonald polynomial in the monomial basis. With --ell, its
    /// renormalised value at the combinatorial point.
    Macdonald {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Schur polynomial.
    Schur {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long)]
        nvars: usize,
    },
    /// Number of higher-spin alternating sign matrices.
    HsasmCount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("value serializes")
}

fn check_budget(n: usize, ell: usize, max_n: usize) -> Result<(), Failure> {
    if n == 0 || ell == 0 {
        return Err(Failure::Usage("n and ell must be at least 1".into()));
    }
    if n > max_n || n * ell > MAX_ELL_N {
        return Err(Failure::Resource(format!("(n, ell) = ({n}, {ell}) is over budget")));
    }
    Ok(())
}

pub fn run(object: Object) -> Result<String, Failure> {
    match object {
        Object::PartitionFn { n, ell, q_order } => {
            check_budget(n, ell, MAX_N)?;
            let q = Cyclo::zeta(q_order.unwrap_or(2 * ell as u32 + 1), 1).map_err(usage)?;
            let z = fused_determinant(n, ell, &q).map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(to_json(&z))
        }
        Object::Macdonald { partition, nvars, ell } => {
            if partition.size() > MAX_DEGREE || nvars > MAX_DEGREE {
                return Err(Failure::Resource(format!("degree and nvars are capped at {MAX_DEGREE}")));
            }
            match ell {
                None => Ok(to_json(&macdonald(&partition, nvars).map_err(usage)?)),
                Some(l) => {
                    let cp = macdonald_at_combinatorial_point(&partition, l, nvars).map_err(usage)?;
                    Ok(to_json(&cp.expansion))
                }
            }
        }
        Object::Schur { partition, nvars } => {
            if partition.size() > MAX_DEGREE || nvars > MAX_DEGREE {
                return Err(Failure::Resource(format!("degree and nvars are capped at {MAX_DEGREE}")));
            }
            Ok(to_json(&schur(&partition, nvars, 1).map_err(usage)?))
        }
        Object::HsasmCount { n, ell } => {
            check_budget(n, ell, 5)?;
            Ok(enumerate_hsasm(n, ell).len().to_string())
        }
    }
}

fn canonical(text: &str) -> Option<String> {
    if let Ok(p) = serde_json::from_str::<MultiPoly>(text) {
        return Some(to_json(&p));
    }
    if let Ok(e) = serde_json::from_str::<SymFunExpansion<Cyclo>>(text) {
        return Some(to_json(&e));
    }
    if let Ok(e) = serde_json::from_str::<SymFunExpansion<RationalFunction>>(text) {
        return Some(to_json(&e));
    }
    None
}

/// Prints the canonical form; returns a note when it differs from the input.
pub fn roundtrip(path: &Path) -> Result<Option<String>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let out = canonical(&text).ok_or_else(|| {
        Failure::Usage(format!(
            "{} is not a serialized polynomial or symmetric function expansion",
            path.display()
        ))
    })?;
    println!("{out}");
    if text.trim_end() == out {
        Ok(None)
    } else {
        Ok(Some("input was not in canonical form; normalised output written".into()))
    }
}
