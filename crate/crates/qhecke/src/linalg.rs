//! Exact dense linear algebra over a cyclotomic field: reduced row
//! echelon form and nullspace bases, used to solve the linear systems
//! that constrain deformation parameters.

use std::sync::Arc;

use crate::scalar::{CycloField, Scalar};

/// Bring `rows` (each of equal length) into reduced row echelon form in
/// place. Pivots are chosen as the first row with a nonzero entry in
/// the leftmost unresolved column. Returns the pivot column indices in
/// order.
pub fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r][c..].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in c..ncols {
                let sub = factor.mul(&rows[r][j]);
                rows[i][j] = rows[i][j].sub(&sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the right nullspace of the matrix, one vector per free
/// column, in increasing free-column order. Each vector has a 1 in its
/// free column, making the basis itself echelon-shaped over the column
/// ordering.
pub fn nullspace(
    rows: &[Vec<Scalar>],
    ncols: usize,
    field: &Arc<CycloField>,
) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let pivots = rref(&mut m);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut vec = vec![Scalar::zero(field); ncols];
        vec[f] = Scalar::one(field);
        for (r, &p) in pivots.iter().enumerate() {
            vec[p] = m[r][f].neg();
        }
        basis.push(vec);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qfield() -> Arc<CycloField> {
        CycloField::rational()
    }

    fn mat(field: &Arc<CycloField>, vals: &[&[i64]]) -> Vec<Vec<Scalar>> {
        vals.iter()
            .map(|row| row.iter().map(|&v| Scalar::from_integer(field, v)).collect())
            .collect()
    }

    #[test]
    fn rref_identity_block() {
        let f = qfield();
        let mut m = mat(&f, &[&[2, 0, 4], &[0, 3, 6]]);
        let pivots = rref(&mut m);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m, mat(&f, &[&[1, 0, 2], &[0, 1, 2]]));
    }

    #[test]
    fn rref_with_dependent_rows() {
        let f = qfield();
        let mut m = mat(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = rref(&mut m);
        assert_eq!(pivots, vec![0, 1]);
        // Last row is zero.
        assert!(m[2].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn nullspace_solves_system() {
        let f = qfield();
        let rows = mat(&f, &[&[1, 2, 3], &[1, 0, 1]]);
        let ns = nullspace(&rows, 3, &f);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(&f), |acc, (a, b)| acc.add(&a.mul(b)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn nullspace_of_zero_matrix_is_full() {
        let f = qfield();
        let rows = mat(&f, &[&[0, 0], &[0, 0]]);
        let ns = nullspace(&rows, 2, &f);
        assert_eq!(ns.len(), 2);
        assert!(ns[0][0].is_one() && ns[0][1].is_zero());
        assert!(ns[1][1].is_one() && ns[1][0].is_zero());
    }

    #[test]
    fn cyclotomic_entries() {
        let f = CycloField::new(4).unwrap();
        let i = Scalar::zeta(&f);
        // Row (i, 1): nullspace spanned by (1, -i) up to scaling; our
        // normalization puts 1 in the free (second) column.
        let rows = vec![vec![i.clone(), Scalar::one(&f)]];
        let ns = nullspace(&rows, 2, &f);
        assert_eq!(ns.len(), 1);
        let dot = i.mul(&ns[0][0]).add(&ns[0][1]);
        assert!(dot.is_zero());
        assert!(ns[0][1].is_one());
    }
}
