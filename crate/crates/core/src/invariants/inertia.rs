use alloc::vec::Vec;

use num_integer::Integer;

use super::InvariantError;

/// `(positive, negative, zero)` counts of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of the integer symmetric matrix `a` (row-major, `n × n`).
///
/// Works by congruence only: a nonzero diagonal pivot `p` is eliminated by
/// replacing the rest of the matrix with `|p|·A' − sgn(p)·a aᵀ`, which is a
/// positive multiple of the Schur complement; when the diagonal vanishes a row
/// and column are added to another to create a pivot. Each step divides out the
/// content of the remaining block, so entries stay small.
pub fn inertia(n: usize, a: &[i128]) -> Result<Inertia, InvariantError> {
    debug_assert_eq!(a.len(), n * n);
    let mut m: Vec<Vec<i128>> = (0..n).map(|r| a[r * n..(r + 1) * n].to_vec()).collect();
    for r in 0..n {
        for c in 0..r {
            if m[r][c] != m[c][r] {
                return Err(InvariantError::NotSymmetric);
            }
        }
    }
    let mut out = Inertia::default();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| m[i][i] != 0) {
            Some(p) => p,
            None => {
                let found = active.iter().enumerate().find_map(|(pi, &i)| {
                    active
                        .iter()
                        .find(|&&j| j != i && m[i][j] != 0)
                        .map(|&j| (pi, i, j))
                });
                let Some((pi, i, j)) = found else {
                    out.zero += active.len();
                    break;
                };
                // congruence: row_i += row_j, then col_i += col_j
                for &k in &active {
                    m[i][k] = checked(m[i][k].checked_add(m[j][k]))?;
                }
                for &k in &active {
                    m[k][i] = checked(m[k][i].checked_add(m[k][j]))?;
                }
                pi
            }
        };
        let p = active.remove(pivot);
        let piv = m[p][p];
        if piv > 0 {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let (scale, sign) = (piv.abs(), piv.signum());
        let mut content = 0i128;
        for &r in &active {
            for &c in &active {
                let v = scale
                    .checked_mul(m[r][c])
                    .zip(m[r][p].checked_mul(m[p][c]))
                    .and_then(|(x, y)| x.checked_sub(sign * y));
                let v = checked(v)?;
                m[r][c] = v;
                content = content.gcd(&v);
            }
        }
        if content > 1 {
            for &r in &active {
                for &c in &active {
                    m[r][c] /= content;
                }
            }
        }
    }
    Ok(out)
}

fn checked(v: Option<i128>) -> Result<i128, InvariantError> {
    v.ok_or(InvariantError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_forms() {
        let a = [1, 0, 0, 0, -3, 0, 0, 0, 0];
        assert_eq!(
            inertia(3, &a).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 1
            }
        );
    }

    #[test]
    fn hyperbolic_plane() {
        let a = [0, 1, 1, 0];
        let i = inertia(2, &a).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
    }

    #[test]
    fn e8_is_definite() {
        // negative E8 Cartan-type form
        let mut a = [0i128; 64];
        for i in 0..8 {
            a[i * 8 + i] = -2;
        }
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
        for (i, j) in edges {
            a[i * 8 + j] = 1;
            a[j * 8 + i] = 1;
        }
        let i = inertia(8, &a).unwrap();
        assert_eq!(i.signature(), -8);
        assert_eq!(i.zero, 0);
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(inertia(2, &[0, 1, 2, 0]).is_err());
    }
}
