use num_rational::Ratio;

use super::InvariantError;
use crate::factorization::{SeparatingType, TwistFactorization};

/// The hyperelliptic local-signature sum
/// `σ = −((g+1)/(2g+1))·n + Σ_{h'} (4h'(g−h')/(2g+1) − 1)·s_{h'}`,
/// where `n` counts nonseparating letters and `s_{h'}` separating letters of type `h'`.
pub fn sigma_endo_rational(f: &TwistFactorization) -> Result<Ratio<i64>, InvariantError> {
    let g = f.ambient.genus as i64;
    let denom = 2 * g + 1;
    let mut total = Ratio::from_integer(0i64);
    for l in &f.letters {
        let c = &f.curves[l.curve];
        if l.power != 1 {
            return Err(InvariantError::NegativeLetter {
                curve: c.name.clone(),
            });
        }
        let term = match c.separating {
            Some(SeparatingType::Nonseparating) => Ratio::new(-(g + 1), denom),
            Some(SeparatingType::Separating(hp)) => {
                let hp = hp as i64;
                Ratio::new(4 * hp * (g - hp), denom) - 1
            }
            None => {
                return Err(InvariantError::MissingSeparatingType {
                    curve: c.name.clone(),
                })
            }
        };
        total += term;
    }
    Ok(total)
}

/// [`sigma_endo_rational`], refusing non-integral results.
pub fn sigma_endo_hyperelliptic(f: &TwistFactorization) -> Result<i64, InvariantError> {
    let s = sigma_endo_rational(f)?;
    if s.is_integer() {
        Ok(s.to_integer())
    } else {
        Err(InvariantError::NonIntegral {
            numer: *s.numer(),
            denom: *s.denom(),
        })
    }
}
