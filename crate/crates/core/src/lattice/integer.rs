//! Unimodular row reduction over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-echelon form over ℤ by unimodular row operations, restricted to
/// columns `0..cols`. Returns the number of pivot rows; rows below are zero
/// on those columns.
fn echelon(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            // smallest nonzero entry in column c at or below r
            let pick = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(p) = pick else { break };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            let mut done = true;
            for row in rows.iter_mut().skip(r + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[r][c].is_negative() {
                    for x in rows[r].iter_mut() {
                        *x = -&*x;
                    }
                }
                r += 1;
                break;
            }
        }
    }
    r
}

/// A basis of the ℤ-span of `rows` (Hermite-style echelon, zero rows
/// dropped).
pub fn integer_row_basis(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let r = echelon(&mut rows, cols);
    rows.truncate(r);
    rows
}

/// A ℤ-basis of { x ∈ ℤ^m : x·A = 0 } for an m×n integer matrix A.
pub fn integer_left_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|j| BigInt::from((i == j) as i32)));
            r
        })
        .collect();
    let r = echelon(&mut aug, n);
    aug.into_iter().skip(r).map(|row| row[n..].to_vec()).collect()
}
