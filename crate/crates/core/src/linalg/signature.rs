//! Inertia of integer symmetric forms by exact congruence diagonalization.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }
}

struct Form {
    m: Vec<Vec<BigRational>>,
}

impl Form {
    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        for row in &mut self.m {
            row.swap(a, b);
        }
    }

    /// row_dst -= f * row_src and col_dst -= f * col_src.
    fn sub_multiple(&mut self, dst: usize, src: usize, f: &BigRational) {
        if f.is_zero() {
            return;
        }
        let n = self.m.len();
        for j in 0..n {
            if !self.m[src][j].is_zero() {
                let t = &self.m[src][j] * f;
                self.m[dst][j] -= t;
            }
        }
        for i in 0..n {
            if !self.m[i][src].is_zero() {
                let t = &self.m[i][src] * f;
                self.m[i][dst] -= t;
            }
        }
    }
}

pub fn inertia(a: &IntMatrix) -> Result<Inertia> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    let mut form =
        Form { m: a.to_rows().into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect() };
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !form.m[i][i].is_zero()) {
            form.swap(k, p);
            let pivot = form.m[k][k].clone();
            for i in k + 1..n {
                let f = &form.m[i][k] / &pivot;
                form.sub_multiple(i, k, &f);
            }
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            k += 1;
            continue;
        }
        // All remaining diagonal entries vanish: split off a hyperbolic plane.
        let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !form.m[i][j].is_zero())
        else {
            out.zero += n - k;
            break;
        };
        form.swap(k, i);
        form.swap(k + 1, j);
        // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]].
        let b = form.m[k][k + 1].clone();
        for r in k + 2..n {
            let f0 = &form.m[r][k + 1] / &b;
            let f1 = &form.m[r][k] / &b;
            form.sub_multiple(r, k, &f0);
            form.sub_multiple(r, k + 1, &f1);
        }
        out.positive += 1;
        out.negative += 1;
        k += 2;
    }
    Ok(out)
}

pub fn signature(a: &IntMatrix) -> Result<i64> {
    inertia(a).map(|i| i.signature())
}
