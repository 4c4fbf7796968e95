//! Small exact dense linear algebra over [`Rational`].

use crate::rational::{RatVector, Rational};

/// Reduced row echelon form of the span of `rows`; zero rows dropped.
///
/// The result depends only on the span, so it doubles as a canonical basis.
pub(crate) fn rref(rows: &[RatVector], width: usize) -> Vec<RatVector> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut lead = 0;
    let mut pivot_row = 0;
    while pivot_row < m.len() && lead < width {
        let Some(p) = (pivot_row..m.len()).find(|&i| !m[i][lead].is_zero()) else {
            lead += 1;
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][lead].recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        let pr = m[pivot_row].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == pivot_row || row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (v, pv) in row.iter_mut().zip(&pr) {
                *v -= &(&f * pv);
            }
        }
        pivot_row += 1;
        lead += 1;
    }
    m.truncate(pivot_row);
    m.into_iter().map(RatVector::new).collect()
}

pub(crate) fn rank<'a, I>(rows: I, width: usize) -> usize
where
    I: IntoIterator<Item = &'a RatVector>,
{
    let owned: Vec<RatVector> = rows.into_iter().cloned().collect();
    rref(&owned, width).len()
}

/// Solves the square system `a x = b`; `None` when singular.
pub(crate) fn solve(a: &[RatVector], b: &RatVector) -> Option<RatVector> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| {
            let mut r = row.entries().to_vec();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pr = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pr) {
                *v -= &(&f * pv);
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
///
/// `basis` must be linearly independent.
pub(crate) fn project_out(v: &RatVector, basis: &[RatVector]) -> RatVector {
    if basis.is_empty() {
        return v.clone();
    }
    let gram: Vec<RatVector> = basis
        .iter()
        .map(|a| basis.iter().map(|b| a.dot(b)).collect())
        .collect();
    let rhs: RatVector = basis.iter().map(|a| a.dot(v)).collect();
    let coeffs = solve(&gram, &rhs).expect("independent basis has invertible Gram matrix");
    basis
        .iter()
        .zip(coeffs.iter())
        .fold(v.clone(), |acc, (b, c)| acc.add_scaled(&-c, b))
}
