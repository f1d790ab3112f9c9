use num_integer::Integer;

use super::matrix::IntMatrix;

fn reduce(a: &IntMatrix) -> Vec<Vec<bool>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(|x| x.is_odd()).collect()).collect()
}

/// Reduced row echelon form over Z/2; returns the pivot column of each nonzero row.
fn rref(m: &mut [Vec<bool>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c]) else { continue };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] {
                for (x, &bit) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x ^= bit;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank_mod2(a: &IntMatrix) -> usize {
    rref(&mut reduce(a), a.cols()).len()
}

/// Basis of `{x in (Z/2)^cols : A x = 0 mod 2}`, one vector per free column.
pub fn kernel_mod2(a: &IntMatrix) -> Vec<Vec<bool>> {
    let cols = a.cols();
    let mut m = reduce(a);
    let pivots = rref(&mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![false; cols];
            x[f] = true;
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = m[row][f];
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn is_kernel_vector(a: &IntMatrix, x: &[bool]) -> bool {
        let v: Vec<BigInt> = x.iter().map(|&b| BigInt::from(b as u8)).collect();
        a.mul_vec(&v).unwrap().iter().all(|y| y.is_even())
    }

    #[test]
    fn single_vertex() {
        let a = IntMatrix::from_rows(&[[-2]]);
        assert_eq!(kernel_mod2(&a), vec![vec![true]]);
        assert_eq!(rank_mod2(&a), 0);
    }

    #[test]
    fn a2_is_invertible_mod2() {
        let a = IntMatrix::from_rows(&[[-2, 1], [1, -2]]);
        assert!(kernel_mod2(&a).is_empty());
        assert_eq!(rank_mod2(&a), 2);
    }

    #[test]
    fn e7_has_one_dimensional_kernel() {
        let e7 = IntMatrix::from_rows(&[
            [-2, 1, 0, 0, 0, 0, 0],
            [1, -2, 1, 0, 0, 0, 0],
            [0, 1, -2, 1, 0, 0, 1],
            [0, 0, 1, -2, 1, 0, 0],
            [0, 0, 0, 1, -2, 1, 0],
            [0, 0, 0, 0, 1, -2, 0],
            [0, 0, 1, 0, 0, 0, -2],
        ]);
        let k = kernel_mod2(&e7);
        assert_eq!(k.len(), 1);
        assert!(is_kernel_vector(&e7, &k[0]));
        assert_eq!(rank_mod2(&e7) + k.len(), 7);
    }

    #[test]
    fn rectangular() {
        let a = IntMatrix::from_rows(&[[1, 1, 0, 1]]);
        let k = kernel_mod2(&a);
        assert_eq!(k.len(), 3);
        assert!(k.iter().all(|x| is_kernel_vector(&a, x)));
    }
}
