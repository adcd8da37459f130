//! Dehn-twist words over named curves, the relations and pencil monodromies
//! built from them, and their projection to the braid group through the
//! hyperelliptic double cover.

mod ops;
mod pencil;
mod project;
mod relations;

pub use ops::{cap_boundary, fiber_sum, repeat, unchain_substitute};
pub use pencil::{build_block_pass_relation, build_pencil_word};
pub use project::project_to_braid;
pub use relations::{build_relation, chain_class, split_identity_sides, RelationKind};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::params::ParamError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("relation {kind} needs h ≥ 1 (got h={h})")]
    InvalidRelation { kind: &'static str, h: u32 },
    #[error("ambient surfaces differ: {left} vs {right}")]
    AmbientMismatch {
        left: SurfaceSignature,
        right: SurfaceSignature,
    },
    #[error("fiber sums need closed relator words")]
    NotClosed,
    #[error("curve '{name}' is declared twice with different data")]
    CurveConflict { name: String },
    #[error("no full odd chain power of length {len} starts at letter {at}")]
    SubwordMismatch { at: usize, len: usize },
    #[error("curve '{name}' has no downstairs image")]
    MissingProjection { name: String },
    #[error("block-loop twists on strands {first}..{last} are unpaired ({primary} primary vs {secondary} secondary)")]
    UnpairedBlockLoop {
        first: usize,
        last: usize,
        primary: i64,
        secondary: i64,
    },
    #[error("substituted subword projects to a different braid")]
    ProjectionChanged,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SurfaceSignature {
    pub genus: u32,
    pub boundary: u32,
    pub marked: u32,
}

impl SurfaceSignature {
    pub fn closed(genus: u32) -> Self {
        SurfaceSignature {
            genus,
            boundary: 0,
            marked: 0,
        }
    }

    pub fn bordered(genus: u32, boundary: u32) -> Self {
        SurfaceSignature {
            genus,
            boundary,
            marked: 0,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == 0 && self.marked == 0
    }
}

impl fmt::Display for SurfaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{}", self.genus)?;
        if self.boundary > 0 {
            write!(f, "^{}", self.boundary)?;
        }
        if self.marked > 0 {
            write!(f, ",{}", self.marked)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SeparatingType {
    Nonseparating,
    /// Separates off a subsurface of genus `h'`.
    Separating(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "kind", content = "data", rename_all = "kebab-case")
)]
pub enum CurveKind {
    /// The chain curve `c_index`, lifting `σ_index`.
    Chain(usize),
    /// A curve whose twist lifts the given braid.
    DerivedBand(BraidWord),
    /// One of a pair of curves over a loop around consecutive strands
    /// `first..first+count`. The pair of twists lifts the full twist on those
    /// strands; the primary member carries that image, the secondary the identity.
    BlockLoop {
        first: usize,
        count: usize,
        primary: bool,
    },
    /// Parallel to the given boundary component (1-based).
    BoundaryParallel(u32),
    /// Named but without any downstairs data.
    Abstract,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveSymbol {
    pub name: String,
    pub kind: CurveKind,
    /// Class in `H_1(Σ_g)` in the basis `a_1, b_1, …, a_g, b_g`.
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub homology: Option<Vec<i64>>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub separating: Option<SeparatingType>,
    /// The closed-surface curve this one becomes when all boundary is capped.
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub cap_alias: Option<String>,
}

impl CurveSymbol {
    pub fn new(name: impl Into<String>, kind: CurveKind) -> Self {
        CurveSymbol {
            name: name.into(),
            kind,
            homology: None,
            separating: None,
            cap_alias: None,
        }
    }

    /// `c_index` on a genus-`genus` surface, with its standard class.
    pub fn chain(index: usize, genus: u32) -> Self {
        let mut c = CurveSymbol::new(alloc::format!("c{index}"), CurveKind::Chain(index));
        c.homology = chain_class(index, genus);
        c.separating = Some(SeparatingType::Nonseparating);
        c
    }
}

/// What the ordered product of the letters is claimed to equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Target {
    Identity,
    /// The product of right-handed twists about all boundary components.
    BoundaryMultitwist,
    /// No claim (one side of an equation, a partial word).
    Unconstrained,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Letter {
    /// Index into [`TwistFactorization::curves`].
    pub curve: usize,
    pub power: i32,
}

/// An ordered product of Dehn twists about named curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFactorization {
    pub ambient: SurfaceSignature,
    pub curves: Vec<CurveSymbol>,
    pub letters: Vec<Letter>,
    pub target: Target,
}

impl TwistFactorization {
    pub fn new(ambient: SurfaceSignature, target: Target) -> Self {
        TwistFactorization {
            ambient,
            curves: Vec::new(),
            letters: Vec::new(),
            target,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn curve_index(&self, name: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.name == name)
    }

    pub fn curve(&self, name: &str) -> Option<&CurveSymbol> {
        self.curves.iter().find(|c| c.name == name)
    }

    /// Registers `curve`, or returns the index of an identical curve of the same name.
    pub fn add_curve(&mut self, curve: CurveSymbol) -> Result<usize, FactorizationError> {
        match self.curve_index(&curve.name) {
            Some(idx) if self.curves[idx] == curve => Ok(idx),
            Some(_) => Err(FactorizationError::CurveConflict { name: curve.name }),
            None => {
                self.curves.push(curve);
                Ok(self.curves.len() - 1)
            }
        }
    }

    pub fn push(&mut self, curve: usize, power: i32) {
        debug_assert!(curve < self.curves.len());
        self.letters.push(Letter { curve, power });
    }

    pub(crate) fn push_curve(&mut self, curve: CurveSymbol) -> usize {
        let idx = self
            .add_curve(curve)
            .expect("builders use consistent curve data");
        self.push(idx, 1);
        idx
    }

    /// Letter names in order, with `^-1` on inverse letters.
    pub fn letter_names(&self) -> Vec<String> {
        self.letters
            .iter()
            .map(|l| {
                let name = &self.curves[l.curve].name;
                if l.power == 1 {
                    name.clone()
                } else {
                    alloc::format!("{name}^{}", l.power)
                }
            })
            .collect()
    }

    pub fn letter_curve(&self, k: usize) -> &CurveSymbol {
        &self.curves[self.letters[k].curve]
    }

    /// Fills in a separating type on every curve that lacks one.
    pub fn annotate_unset(&self, ty: SeparatingType) -> TwistFactorization {
        let mut out = self.clone();
        for c in &mut out.curves {
            c.separating.get_or_insert(ty);
        }
        out
    }

    /// Drops curves no letter refers to and renumbers the rest.
    pub(crate) fn compact(mut self) -> TwistFactorization {
        let mut used = alloc::vec![false; self.curves.len()];
        for l in &self.letters {
            used[l.curve] = true;
        }
        // boundary-parallel curves describe the target and are kept
        for (k, c) in self.curves.iter().enumerate() {
            if matches!(c.kind, CurveKind::BoundaryParallel(_)) && !self.ambient.is_closed() {
                used[k] = true;
            }
        }
        let mut remap = alloc::vec![usize::MAX; self.curves.len()];
        let mut curves = Vec::new();
        for (k, c) in self.curves.into_iter().enumerate() {
            if used[k] {
                remap[k] = curves.len();
                curves.push(c);
            }
        }
        for l in &mut self.letters {
            l.curve = remap[l.curve];
        }
        self.curves = curves;
        self
    }
}

impl fmt::Display for TwistFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.letter_names();
        if names.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&names.join(" "))
        }
    }
}
