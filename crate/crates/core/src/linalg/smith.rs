//! Smith normal form over the integers with unimodular transforms.
//!
//! Pivoting always picks the entry of smallest absolute value, which keeps
//! coefficient growth modest for the sparse Cartan-like matrices this crate
//! works with.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `u * a * v == s` with `u`, `v` unimodular and `s` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `s`, including zeros, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn min_abs_in_block(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), &BigUint)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.magnitude();
            if best.is_none_or(|(_, b)| a < b) {
                best = Some(((i, j), a));
                if a.is_one() {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Smallest nonzero entry on the pivot cross (row `t` and column `t`).
fn min_abs_on_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = ((t, t), s[(t, t)].abs());
    let cross = (t + 1..s.rows()).map(|i| (i, t)).chain((t + 1..s.cols()).map(|j| (t, j)));
    for (i, j) in cross {
        let x = &s[(i, j)];
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        if best.1.is_zero() || a < best.1 {
            best = ((i, j), a);
        }
    }
    best.0
}

struct Reducer {
    u: IntMatrix,
    s: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.s.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.s.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
    }

    fn bring_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    /// Clears row and column `t`; returns false if a nonzero remainder is left.
    fn eliminate_cross(&mut self, t: usize) -> bool {
        let pivot = self.s[(t, t)].clone();
        let mut clean = true;
        for i in t + 1..self.s.rows() {
            if self.s[(i, t)].is_zero() {
                continue;
            }
            let q = self.s[(i, t)].div_rem(&pivot).0;
            self.add_row(i, t, &-q);
            clean &= self.s[(i, t)].is_zero();
        }
        for j in t + 1..self.s.cols() {
            if self.s[(t, j)].is_zero() {
                continue;
            }
            let q = self.s[(t, j)].div_rem(&pivot).0;
            self.add_col(j, t, &-q);
            clean &= self.s[(t, j)].is_zero();
        }
        clean
    }

    fn first_non_multiple(&self, t: usize) -> Option<usize> {
        let pivot = &self.s[(t, t)];
        if pivot.magnitude().is_one() {
            return None;
        }
        (t + 1..self.s.rows()).find(|&i| {
            (t + 1..self.s.cols()).any(|j| {
                let x = &self.s[(i, j)];
                !x.is_zero() && !x.is_multiple_of(pivot)
            })
        })
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer { u: IntMatrix::identity(m), s: a.clone(), v: IntMatrix::identity(n) };

    for t in 0..m.min(n) {
        let Some(p) = min_abs_in_block(&r.s, t) else { break };
        r.bring_to(t, p);
        loop {
            if !r.eliminate_cross(t) {
                let p = min_abs_on_cross(&r.s, t);
                r.bring_to(t, p);
                continue;
            }
            // Cross is clear; enforce divisibility of the remaining block.
            match r.first_non_multiple(t) {
                Some(i) => r.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.s[(t, t)].is_negative() {
            r.s.negate_row(t);
            r.u.negate_row(t);
        }
    }

    SmithDecomposition { u: r.u, s: r.s, v: r.v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let d = smith_normal_form(a);
        assert_eq!(&(&d.u * a) * &d.v, d.s);
        assert!(d.s.is_diagonal());
        assert!(d.u.determinant().unwrap().abs().is_one());
        assert!(d.v.determinant().unwrap().abs().is_one());
        let diag = d.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        d
    }

    fn diag_i64(d: &SmithDecomposition) -> Vec<i64> {
        d.diagonal().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn one_by_one() {
        assert_eq!(diag_i64(&check(&IntMatrix::from_rows(&[[-2]]))), vec![2]);
    }

    #[test]
    fn cartan_a2() {
        let a = IntMatrix::from_rows(&[[-2, 1], [1, -2]]);
        assert_eq!(diag_i64(&check(&a)), vec![1, 3]);
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) is not in normal form; expect diag(1, 6).
        assert_eq!(diag_i64(&check(&IntMatrix::diagonal(&[2, 3]))), vec![1, 6]);
        assert_eq!(diag_i64(&check(&IntMatrix::diagonal(&[4, 6, 0]))), vec![2, 12, 0]);
    }

    #[test]
    fn empty_and_rectangular() {
        let d = check(&IntMatrix::zeros(0, 0));
        assert!(d.diagonal().is_empty());
        let d = check(&IntMatrix::zeros(0, 3));
        assert_eq!(d.v, IntMatrix::identity(3));
        let d = check(&IntMatrix::from_rows(&[[2, 4, 6], [8, 10, 12]]));
        assert_eq!(diag_i64(&d), vec![2, 6]);
        let d = check(&IntMatrix::from_rows(&[[3], [5], [7]]));
        assert_eq!(diag_i64(&d), vec![1]);
    }

    #[test]
    fn zero_matrix() {
        let d = check(&IntMatrix::zeros(2, 2));
        assert_eq!(diag_i64(&d), vec![0, 0]);
        assert_eq!(d.rank(), 0);
    }
}
