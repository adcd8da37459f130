use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{CurveKind, FactorizationError, TwistFactorization};
use crate::braid::{BraidError, BraidWord, StandardWord};

/// The image in `B_{2g+2}` of the word under the hyperelliptic double cover.
///
/// Chain curves map to Artin generators and derived bands to their stored
/// braids. A primary block-loop twist maps to the full twist on its strands and
/// its secondary partner to the identity, so the two members must occur with
/// equal net power on every block.
pub fn project_to_braid(f: &TwistFactorization) -> Result<BraidWord, FactorizationError> {
    let n = 2 * f.ambient.genus as usize + 2;
    let mut pieces: Vec<BraidWord> = Vec::with_capacity(f.len());
    let mut pairing: BTreeMap<(usize, usize), (i64, i64)> = BTreeMap::new();
    for letter in &f.letters {
        let curve = &f.curves[letter.curve];
        let power = letter.power as i64;
        let image = match &curve.kind {
            CurveKind::Chain(j) => BraidWord::new(n, alloc::vec![*j as i32])?,
            CurveKind::DerivedBand(w) => {
                if w.strands() != n {
                    return Err(BraidError::StrandMismatch {
                        left: n,
                        right: w.strands(),
                    }
                    .into());
                }
                w.clone()
            }
            CurveKind::BlockLoop {
                first,
                count,
                primary,
            } => {
                let entry = pairing.entry((*first, *count)).or_default();
                if *primary {
                    entry.0 += power;
                    StandardWord::BlockFullTwist {
                        first: *first,
                        k: *count,
                    }
                    .word(n)?
                } else {
                    entry.1 += power;
                    BraidWord::identity(n)
                }
            }
            CurveKind::BoundaryParallel(_) | CurveKind::Abstract => {
                return Err(FactorizationError::MissingProjection {
                    name: curve.name.clone(),
                })
            }
        };
        pieces.push(image.pow(power));
    }
    for ((first, count), (primary, secondary)) in pairing {
        if primary != secondary {
            return Err(FactorizationError::UnpairedBlockLoop {
                first,
                last: first + count - 1,
                primary,
                secondary,
            });
        }
    }
    Ok(BraidWord::product(n, &pieces)?)
}
