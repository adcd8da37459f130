//! Exact braid, mapping-class and invariant computations for the genus-`g`
//! hyperelliptic Lefschetz pencils `X'_{g,h}[i]` and the fibrations `Z_h`, `H_h`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod braid;
pub mod cover;
pub mod factorization;
pub mod invariants;
pub mod params;

pub use params::{pencil_params, ParamError, PencilSpec, SpecCase};
