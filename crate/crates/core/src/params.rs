//! Pencil parameters `(g, h, i)` and the decomposition `2g+2 = p(2h+2) + 2r`.

use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("invalid parameters g={g}, h={h}: requires 1 ≤ h < g")]
    GenusOrder { g: u32, h: u32 },
    #[error("invalid parameter i={i} for g={g}, h={h}: requires 0 ≤ i ≤ 2p−1 = {max} (p = {p})")]
    IndexOutOfRange {
        g: u32,
        h: u32,
        i: u32,
        p: u32,
        max: u32,
    },
    #[error("invalid family parameters: requires 0 ≤ r < h+1 (r={r}, h={h})")]
    RemainderOutOfRange { h: u32, r: u32 },
    #[error("degree doubling needs at least one base point")]
    NoBasePoints,
}

/// `(p, r)` with `g + 1 = p(h + 1) + r` and `0 <= r < h + 1`.
pub fn pencil_params(g: u32, h: u32) -> Result<(u32, u32), ParamError> {
    if h < 1 || h >= g {
        return Err(ParamError::GenusOrder { g, h });
    }
    Ok(((g + 1) / (h + 1), (g + 1) % (h + 1)))
}

/// A validated parameter triple for the pencil `X'_{g,h}[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PencilSpec {
    pub g: u32,
    pub h: u32,
    pub i: u32,
    pub p: u32,
    pub r: u32,
}

/// Which branch of the classification a spec falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecCase {
    /// `i < 2p − 1`
    Generic,
    /// `i = 2p − 1`, `r ≠ 0`
    LastWithRemainder,
    /// `i = 2p − 1`, `r = 0`
    LastExact,
}

impl PencilSpec {
    pub fn new(g: u32, h: u32, i: u32) -> Result<Self, ParamError> {
        let (p, r) = pencil_params(g, h)?;
        let max = 2 * p - 1;
        if i > max {
            return Err(ParamError::IndexOutOfRange { g, h, i, p, max });
        }
        Ok(PencilSpec { g, h, i, p, r })
    }

    /// Every valid triple with `1 <= h < g <= g_max`, ordered by `(g, h, i)`.
    pub fn grid(g_max: u32) -> impl Iterator<Item = PencilSpec> {
        (2..=g_max).flat_map(|g| {
            (1..g).flat_map(move |h| {
                let (p, _) = pencil_params(g, h).expect("h < g");
                (0..2 * p).map(move |i| PencilSpec::new(g, h, i).expect("in range"))
            })
        })
    }

    /// Strand count of the downstairs braid group, `2g + 2`.
    pub fn strands(&self) -> usize {
        2 * self.g as usize + 2
    }

    /// Size of the chain block, `2h + 2`.
    pub fn block(&self) -> usize {
        2 * self.h as usize + 2
    }

    /// Size of the complementary block, `2g − 2h`.
    pub fn complement(&self) -> usize {
        2 * (self.g - self.h) as usize
    }

    /// Number of `Z_h` summands, `2p − 1 − i`.
    pub fn z_copies(&self) -> u32 {
        2 * self.p - 1 - self.i
    }

    pub fn base_points(&self) -> u32 {
        2 * (self.i + 1)
    }

    /// `N = 2(2g−2h) + 2(i+1) + (2h+1)[(2h+2)(2p−1−i) + 4r]`
    pub fn nodal_fibers(&self) -> u64 {
        let (g, h) = (self.g as u64, self.h as u64);
        2 * (2 * g - 2 * h)
            + 2 * (self.i as u64 + 1)
            + (2 * h + 1) * ((2 * h + 2) * self.z_copies() as u64 + 4 * self.r as u64)
    }

    pub fn case(&self) -> SpecCase {
        if self.i + 1 < 2 * self.p {
            SpecCase::Generic
        } else if self.r != 0 {
            SpecCase::LastWithRemainder
        } else {
            SpecCase::LastExact
        }
    }
}

impl fmt::Display for PencilSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X'_{{{},{}}}[{}]", self.g, self.h, self.i)
    }
}
