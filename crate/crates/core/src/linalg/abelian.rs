use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;
use super::smith::{smith_normal_form, SmithDecomposition};
use crate::error::{Error, Result};

/// Finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`
/// with `2 <= d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinAbGroup {
    free_rank: usize,
    #[serde(with = "crate::json::bigint_vec")]
    invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self> {
        if let Some(d) = invariant_factors.iter().find(|d| **d < BigInt::from(2)) {
            return Err(Error::InvalidParameter(format!("invariant factor {d} is below 2")));
        }
        if let Some(w) = invariant_factors.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidParameter(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(Self { free_rank, invariant_factors })
    }

    pub fn trivial() -> Self {
        Self { free_rank: 0, invariant_factors: Vec::new() }
    }

    /// Finite cyclic group of order `n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self { free_rank: 0, invariant_factors: vec![BigInt::from(n)] }
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Number of generators in invariant-factor coordinates (torsion first, then free).
    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    /// Dimension of `T ⊗ Z/2` for the torsion subgroup `T`: the number of even factors.
    pub fn two_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_even()).count()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z_{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Reads `Z^rows / im(A)` off a Smith decomposition of `A`.
pub fn cokernel_from_smith(d: &SmithDecomposition) -> FinAbGroup {
    let diag = d.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let invariant_factors = diag.into_iter().filter(|x| !x.is_zero() && !x.abs().is_one()).collect();
    FinAbGroup { free_rank: d.s.rows() - rank, invariant_factors }
}

pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    cokernel_from_smith(&smith_normal_form(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(g: &FinAbGroup) -> Vec<i64> {
        g.invariant_factors().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn cartan_path(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(-2);
            if i + 1 < n {
                m[(i, i + 1)] = BigInt::one();
                m[(i + 1, i)] = BigInt::one();
            }
        }
        m
    }

    #[test]
    fn cyclic_from_path() {
        // A_4, i.e. n = 5
        let g = cokernel(&cartan_path(4));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(factors(&g), vec![5]);
        assert_eq!(g.to_string(), "Z_5");
    }

    #[test]
    fn klein_four_from_d4() {
        let a = IntMatrix::from_rows(&[[-2, 1, 1, 1], [1, -2, 0, 0], [1, 0, -2, 0], [1, 0, 0, -2]]);
        let g = cokernel(&a);
        assert_eq!(factors(&g), vec![2, 2]);
        assert_eq!(g.two_rank(), 2);
        assert_eq!(g.order(), Some(BigInt::from(4)));
        assert_eq!(g.to_string(), "Z_2 ⊕ Z_2");
    }

    #[test]
    fn zero_matrix_is_free() {
        let g = cokernel(&IntMatrix::zeros(2, 2));
        assert_eq!(g.free_rank(), 2);
        assert!(g.invariant_factors().is_empty());
        assert_eq!(g.order(), None);
        assert_eq!(g.to_string(), "Z^2");
    }

    #[test]
    fn constructor_validates_chain() {
        assert!(FinAbGroup::new(0, vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(FinAbGroup::new(0, vec![BigInt::from(1)]).is_err());
        assert!(FinAbGroup::new(1, vec![BigInt::from(2), BigInt::from(6)]).is_ok());
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
    }
}
