//! Grid jobs over `(g, h, i)`, run on a worker pool and returned in grid order.

use std::str::FromStr;

use lefschetz_core::factorization::{build_pencil_word, cap_boundary};
use lefschetz_core::invariants::{
    classify, closed_form_invariants, euler_from_word, rokhlin_audit, EulerSignature,
};
use lefschetz_core::{PencilSpec, SpecCase};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Read only when `--jobs auto` is given.
pub const JOBS_ENV: &str = "LEFSCHETZ_JOBS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Jobs {
    Auto,
    Fixed(usize),
}

impl FromStr for Jobs {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Jobs::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Jobs::Fixed(n)),
            _ => Err(format!(
                "expected a positive worker count or 'auto', got '{s}'"
            )),
        }
    }
}

impl Jobs {
    pub fn resolve(self) -> usize {
        match self {
            Jobs::Fixed(n) => n,
            Jobs::Auto => std::env::var(JOBS_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
                .filter(|&n| n > 0)
                .unwrap_or_else(|| {
                    std::thread::available_parallelism()
                        .map(|n| n.get())
                        .unwrap_or(1)
                }),
        }
    }
}

/// Parses `h<g<=N` (or a bare `N`) into the upper genus bound.
pub fn parse_grid(s: &str) -> Result<u32> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bound = compact.strip_prefix("h<g<=").unwrap_or(&compact);
    match bound.parse::<u32>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err(Error::Usage(format!(
            "invalid grid '{s}': expected 'h<g<=N' with N ≥ 2"
        ))),
    }
}

/// Every valid `(g, h, i)` with `h < g ≤ g_max`, sorted.
pub fn grid_specs(g_max: u32) -> Vec<PencilSpec> {
    let mut v: Vec<PencilSpec> = PencilSpec::grid(g_max).collect();
    v.sort_by_key(|s| (s.g, s.h, s.i));
    v
}

/// Applies `f` to each spec on `jobs` workers; results keep the input order.
pub fn run_grid<T, F>(specs: &[PencilSpec], jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&PencilSpec) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| specs.par_iter().map(&f).collect()))
}

/// The cross-checks run by `invariants --audit` for one pencil.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowAudit {
    pub g: u32,
    pub h: u32,
    pub i: u32,
    /// Twist count of the capped word against the closed-form `e`.
    pub euler_from_word: bool,
    /// Invariants of the classification target against the closed forms.
    pub classification: bool,
    /// `spin ⇒ σ ≡ 0 (mod 16)`; vacuous for `Σ_h × S²`.
    pub rokhlin: bool,
}

impl RowAudit {
    pub fn ok(&self) -> bool {
        self.euler_from_word && self.classification && self.rokhlin
    }
}

pub fn audit_row(spec: &PencilSpec) -> Result<RowAudit> {
    let closed = closed_form_invariants(spec);
    let f = cap_boundary(&build_pencil_word(spec.g, spec.h, spec.i)?)?;
    let e = euler_from_word(&f, spec.base_points() as i64)?;
    let target: EulerSignature = classify(spec).raw.invariants();
    let rokhlin = match spec.case() {
        SpecCase::LastExact => true,
        _ => rokhlin_audit(spec)?.ok,
    };
    Ok(RowAudit {
        g: spec.g,
        h: spec.h,
        i: spec.i,
        euler_from_word: e == closed.e,
        classification: target == closed,
        rokhlin,
    })
}
