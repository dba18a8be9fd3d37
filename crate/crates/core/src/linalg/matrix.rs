//! Dense matrices over GF(p) stored as row vectors.

use super::{LinalgError, PrimeField};

pub type Vector = Vec<u32>;
pub type Matrix = Vec<Vector>;

/// Reduced row echelon form with zero rows dropped, together with the rank.
pub fn rref(m: &[Vector], field: PrimeField) -> (Matrix, usize) {
    let mut a: Matrix = m.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = field.inv(a[rank][col]).expect("pivot is nonzero");
        for x in a[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..a.len() {
            if r != rank && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..cols {
                    let v = field.mul(factor, a[rank][c]);
                    a[r][c] = field.sub(a[r][c], v);
                }
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    (a, rank)
}

pub fn rank(m: &[Vector], field: PrimeField) -> usize {
    rref(m, field).1
}

/// Pivot column of each row of a matrix already in reduced row echelon form.
pub fn pivot_columns(r: &[Vector]) -> Vec<usize> {
    r.iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect()
}

/// Basis of `{x : A x = 0}` where `A` has `cols` columns.
pub fn null_space(a: &[Vector], cols: usize, field: PrimeField) -> Matrix {
    let (r, _) = rref(a, field);
    let pivots = pivot_columns(&r);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; cols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix.
pub fn det(m: &[Vector], field: PrimeField) -> u32 {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut d = 1u32;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            d = field.neg(d);
        }
        d = field.mul(d, a[col][col]);
        let inv = field.inv(a[col][col]).expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col] != 0 {
                let factor = field.mul(a[r][col], inv);
                for c in col..n {
                    let v = field.mul(factor, a[col][c]);
                    a[r][c] = field.sub(a[r][c], v);
                }
            }
        }
    }
    d
}

/// Row vector times matrix: `sum_i x_i * rows_i`.
pub fn combine(coeffs: &[u32], rows: &[Vector], field: PrimeField) -> Vector {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut out = vec![0; cols];
    for (&c, row) in coeffs.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

pub fn dot(x: &[u32], y: &[u32], field: PrimeField) -> u32 {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// `x^T M y`.
pub fn bilinear(x: &[u32], m: &[Vector], y: &[u32], field: PrimeField) -> u32 {
    let mut acc = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi != 0 {
            acc = field.add(acc, field.mul(xi, dot(&m[i], y, field)));
        }
    }
    acc
}

pub fn transpose(m: &[Vector], cols: usize) -> Matrix {
    (0..cols).map(|c| m.iter().map(|row| row[c]).collect()).collect()
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
pub fn normalize(v: &[u32], field: PrimeField) -> Vector {
    match v.iter().find(|&&x| x != 0) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|&x| field.mul(x, inv)).collect()
        }
    }
}

/// All vectors of GF(p)^n with first nonzero coordinate 1, in lexicographic order.
pub fn projective_points(n: usize, field: PrimeField) -> Vec<Vector> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = (field.p() as usize).pow(free as u32);
        for code in 0..count {
            let mut v = vec![0; n];
            v[lead] = 1;
            let mut c = code;
            for pos in (lead + 1..n).rev() {
                v[pos] = (c % field.p() as usize) as u32;
                c /= field.p() as usize;
            }
            out.push(v);
        }
    }
    out
}

pub(crate) fn check_rectangular(m: &[Vector], cols: usize) -> Result<(), LinalgError> {
    if m.iter().all(|r| r.len() == cols) {
        Ok(())
    } else {
        Err(LinalgError::ShapeMismatch("rows of unequal length".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&[vec![1, 0], vec![0, 1]], f(2));
        assert_eq!(k, 2);
        assert_eq!(r, vec![vec![1, 0], vec![0, 1]]);
        let (_, k) = rref(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], f(2));
        assert_eq!(k, 2);
        let (r, k) = rref(&[vec![0, 0], vec![0, 0]], f(3));
        assert!(r.is_empty());
        assert_eq!(k, 0);
    }

    #[test]
    fn null_space_is_annihilated() {
        let field = f(3);
        let a = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]];
        let ns = null_space(&a, 4, field);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                assert_eq!(dot(row, v, field), 0);
            }
        }
    }

    #[test]
    fn det_small() {
        let field = f(5);
        assert_eq!(det(&[vec![1, 2], vec![3, 4]], field), field.reduce(-2));
        assert_eq!(det(&[vec![0, 1], vec![1, 0]], field), 4);
        assert_eq!(det(&[vec![1, 1], vec![1, 1]], field), 0);
    }

    #[test]
    fn projective_point_count() {
        assert_eq!(projective_points(3, f(2)).len(), 7);
        assert_eq!(projective_points(4, f(3)).len(), 40);
    }
}
