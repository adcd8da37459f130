use alloc::vec::Vec;
use core::fmt;

use super::CoverError;
use crate::params::PencilSpec;

/// A blown-up Hirzebruch surface `F_n # k(−CP²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BaseSurface {
    pub hirzebruch: u32,
    pub blowups: u32,
}

impl BaseSurface {
    pub fn euler(&self) -> i64 {
        4 + self.blowups as i64
    }

    pub fn signature(&self) -> i64 {
        -(self.blowups as i64)
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.hirzebruch)?;
        if self.blowups > 0 {
            write!(f, "#{}", self.blowups)?;
        }
        Ok(())
    }
}

/// Ribbon branch surface `Σ(R, S, T)` by counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BranchSurface {
    /// `R`: disks in the 4-handle still attached to the ribbon part.
    pub disks: u32,
    /// `S`: how often the framed handle links the surface.
    pub linking: u32,
    /// `T`: trivial bands.
    pub trivial: u32,
    /// Bands of the two long braids (`D`, `E` blocks).
    pub long_bands: u32,
    /// Length of the chain blocks, `2h + 2`.
    pub block_len: u32,
    /// Copies of the boxed chain block `C_{2h+2}`.
    pub c_blocks: u32,
    /// Parameter `r` of the boxed block `E_{2r}`, zero when absent.
    pub e_block: u32,
    /// Cap disks closing the surface.
    pub caps: u32,
}

impl BranchSurface {
    pub fn bands_per_c_block(&self) -> u32 {
        (self.block_len - 1) * self.block_len
    }

    pub fn bands_in_e_block(&self) -> u32 {
        4 * self.e_block * (self.block_len - 1)
    }

    pub fn bands(&self) -> u32 {
        self.long_bands
            + self.trivial
            + self.c_blocks * self.bands_per_c_block()
            + self.bands_in_e_block()
    }

    /// `e(B) = disks + caps − bands`.
    pub fn euler(&self) -> i64 {
        self.disks as i64 + self.caps as i64 - self.bands() as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum HandleRole {
    Fiber,
    Section,
    /// Exceptional sphere `j` (1-based).
    Exceptional(u32),
}

impl fmt::Display for HandleRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HandleRole::Fiber => f.write_str("fiber"),
            HandleRole::Section => f.write_str("section"),
            HandleRole::Exceptional(j) => write!(f, "exceptional-{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Handle {
    pub role: HandleRole,
    pub framing: i64,
    pub links_branch: bool,
}

/// `(e, σ)` of the double cover as carried through the replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Audit {
    pub e_cover: i64,
    pub sigma_cover: i64,
}

/// A branched double cover presented by its base, branch surface and handles.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoverState {
    pub spec: PencilSpec,
    pub base: BaseSurface,
    pub branch: BranchSurface,
    pub handles: Vec<Handle>,
    /// Self-intersection of the branch surface.
    pub b_square: i64,
    /// Carried values, moved only by declared deltas.
    pub audited: Audit,
}

impl CoverState {
    /// The blown-up pencil `X_{g,h}[i]` as a cover of `F_1 # (i+1)(−CP²)`,
    /// with audited values seeded from the closed forms.
    pub fn init(spec: PencilSpec) -> Self {
        let closed = crate::invariants::closed_form_invariants(&spec);
        let k = spec.block() as u32;
        let m = spec.complement() as u32;
        let n = spec.strands() as u32;
        let blowups = spec.i + 1;
        let mut handles = alloc::vec![
            Handle {
                role: HandleRole::Fiber,
                framing: 0,
                links_branch: true,
            },
            Handle {
                role: HandleRole::Section,
                framing: 0,
                links_branch: false,
            },
        ];
        for j in 1..=blowups {
            handles.push(Handle {
                role: HandleRole::Exceptional(j),
                framing: -1,
                links_branch: true,
            });
        }
        CoverState {
            spec,
            base: BaseSurface {
                hirzebruch: 1,
                blowups,
            },
            branch: BranchSurface {
                disks: n,
                linking: 0,
                trivial: 0,
                long_bands: 2 * m,
                block_len: k,
                c_blocks: spec.z_copies(),
                e_block: spec.r,
                caps: n,
            },
            handles,
            b_square: -2 * closed.sigma,
            audited: Audit {
                e_cover: closed.e + 2 * blowups as i64,
                sigma_cover: closed.sigma - 2 * blowups as i64,
            },
        }
    }

    /// `e = 2e(base) − e(B)`, `σ = 2σ(base) − B²/2`.
    pub fn computed(&self) -> Result<Audit, CoverError> {
        if self.b_square % 2 != 0 {
            return Err(CoverError::NonIntegral {
                b_square: self.b_square,
            });
        }
        Ok(Audit {
            e_cover: 2 * self.base.euler() - self.branch.euler(),
            sigma_cover: 2 * self.base.signature() - self.b_square / 2,
        })
    }

    pub fn handle(&self, role: HandleRole) -> Option<&Handle> {
        self.handles.iter().find(|h| h.role == role)
    }

    pub(crate) fn handle_mut(&mut self, role: HandleRole) -> Option<&mut Handle> {
        self.handles.iter_mut().find(|h| h.role == role)
    }
}
