//! Exact dense linear algebra over cyclotomic scalars: just enough
//! Gaussian elimination for matrix inversion and for expressing transformed
//! forms in a given basis.

use crate::cyclo::{CycloError, CycloNum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    Singular,
    Inconsistent,
    Shape(String),
    Cyclo(CycloError),
}

impl std::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinalgError::Singular => write!(f, "matrix is singular"),
            LinalgError::Inconsistent => write!(f, "linear system is inconsistent"),
            LinalgError::Shape(s) => write!(f, "shape error: {s}"),
            LinalgError::Cyclo(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LinalgError {}

impl From<CycloError> for LinalgError {
    fn from(e: CycloError) -> Self {
        LinalgError::Cyclo(e)
    }
}

/// Invert a dense `n×n` matrix given row-major. Errors on singular input.
pub fn invert(n: usize, entries: &[CycloNum]) -> Result<Vec<CycloNum>, LinalgError> {
    if entries.len() != n * n {
        return Err(LinalgError::Shape(format!(
            "expected {} entries, got {}",
            n * n,
            entries.len()
        )));
    }
    let conductor = entries[0].conductor();
    let mut a: Vec<Vec<CycloNum>> = (0..n)
        .map(|i| entries[i * n..(i + 1) * n].to_vec())
        .collect();
    let mut inv: Vec<Vec<CycloNum>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        CycloNum::one(conductor)
                    } else {
                        CycloNum::zero(conductor)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(LinalgError::Singular)?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pinv = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let ta = &f * &a[col][j];
                    let ti = &f * &inv[col][j];
                    a[r][j] = &a[r][j] - &ta;
                    inv[r][j] = &inv[r][j] - &ti;
                }
            }
        }
    }
    Ok(inv.into_iter().flatten().collect())
}

/// Solve `B·x = v` in the least-structured sense used here: `B` is a tall
/// `rows×cols` matrix (rows ≥ cols) of full column rank; returns the unique
/// `x` when the system is consistent, `Inconsistent` when `v` is outside the
/// column span, `Singular` when the columns are dependent.
pub fn solve_tall(
    rows: usize,
    cols: usize,
    b: &[CycloNum],
    v: &[CycloNum],
) -> Result<Vec<CycloNum>, LinalgError> {
    if b.len() != rows * cols || v.len() != rows {
        return Err(LinalgError::Shape("solve_tall dimensions".into()));
    }
    let conductor = if cols > 0 && rows > 0 {
        b[0].conductor()
    } else {
        13
    };
    // Augmented row-reduction.
    let mut m: Vec<Vec<CycloNum>> = (0..rows)
        .map(|i| {
            let mut row = b[i * cols..(i + 1) * cols].to_vec();
            row.push(v[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let pinv = m[pivot_row][col].inv()?;
        for j in col..=cols {
            m[pivot_row][j] = &m[pivot_row][j] * &pinv;
        }
        for rr in 0..rows {
            if rr != pivot_row && !m[rr][col].is_zero() {
                let f = m[rr][col].clone();
                for j in col..=cols {
                    let t = &f * &m[pivot_row][j];
                    m[rr][j] = &m[rr][j] - &t;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivots.len() < cols {
        return Err(LinalgError::Singular);
    }
    // Any leftover nonzero RHS row means v is not in the column span.
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return Err(LinalgError::Inconsistent);
        }
    }
    let mut x = vec![CycloNum::zero(conductor); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][cols].clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::constants::sqrt13;

    #[test]
    fn invert_small_matrix() {
        let z = CycloNum::zeta(13);
        let one = CycloNum::one(13);
        // [[1, ζ], [√13, 2]]
        let m = vec![one.clone(), z.clone(), sqrt13(), CycloNum::integer(2)];
        let inv = invert(2, &m).unwrap();
        // m · inv = I
        let mul = |a: &[CycloNum], b: &[CycloNum]| -> Vec<CycloNum> {
            let mut out = vec![CycloNum::zero(13); 4];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let t = &a[i * 2 + k] * &b[k * 2 + j];
                        out[i * 2 + j] = &out[i * 2 + j] + &t;
                    }
                }
            }
            out
        };
        let prod = mul(&m, &inv);
        assert!(prod[0].is_one() && prod[3].is_one());
        assert!(prod[1].is_zero() && prod[2].is_zero());
    }

    #[test]
    fn singular_matrix_reports() {
        let one = CycloNum::one(13);
        let m = vec![one.clone(), one.clone(), one.clone(), one];
        assert_eq!(invert(2, &m), Err(LinalgError::Singular));
    }

    #[test]
    fn tall_solve_detects_inconsistency() {
        let one = CycloNum::one(13);
        let zero = CycloNum::zero(13);
        // columns span {(1,0,1)}, target (1,0,0) is outside
        let b = vec![one.clone(), zero.clone(), one.clone()];
        let v_ok = vec![CycloNum::integer(2), zero.clone(), CycloNum::integer(2)];
        assert_eq!(
            solve_tall(3, 1, &b, &v_ok).unwrap(),
            vec![CycloNum::integer(2)]
        );
        let v_bad = vec![one.clone(), zero.clone(), zero];
        assert_eq!(solve_tall(3, 1, &b, &v_bad), Err(LinalgError::Inconsistent));
    }
}
