//! Exact rational quaternions and the two maps `S³ → SO(4)` generating
//! `π₃(SO(4)) ≅ Z ⊕ Z`.
//!
//! `R⁴` is identified with the quaternions via `e1, e2, e3, e4 ↦ 1, i, j, k`.

use std::fmt;
use std::ops::{Mul, Neg};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Quaternion {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_integers(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(ratio(w, 1), ratio(x, 1), ratio(y, 1), ratio(z, 1))
    }

    /// Components `num_k / den` sharing one denominator.
    pub fn from_ratios(num: [i64; 4], den: i64) -> Self {
        Self::new(ratio(num[0], den), ratio(num[1], den), ratio(num[2], den), ratio(num[3], den))
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0, 0, 0)
    }

    /// The basis `1, i, j, k` in that order.
    pub fn basis() -> [Self; 4] {
        [
            Self::from_integers(1, 0, 0, 0),
            Self::from_integers(0, 1, 0, 0),
            Self::from_integers(0, 0, 1, 0),
            Self::from_integers(0, 0, 0, 1),
        ]
    }

    pub fn components(&self) -> [BigRational; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(&c.w / &n, &c.x / &n, &c.y / &n, &c.z / &n))
    }

    fn ensure_unit(&self) -> Result<()> {
        let n = self.norm_sq();
        if n.is_one() {
            Ok(())
        } else {
            Err(Error::NotUnit(n))
        }
    }

    /// Rational point of `S³` by inverse stereographic projection from `-1`.
    pub fn from_stereographic(u: [BigRational; 3]) -> Self {
        let s: BigRational = u.iter().map(|c| c * c).sum();
        let d = &s + BigRational::one();
        let two = BigRational::from_integer(2.into());
        Self::new((BigRational::one() - &s) / &d, &two * &u[0] / &d, &two * &u[1] / &d, &two * &u[2] / &d)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, r: &Quaternion) -> Quaternion {
        let (a, b) = (self, r);
        Quaternion::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// 4×4 matrix with exact rational entries, `m[row][col]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMatrix4 {
    m: [[BigRational; 4]; 4],
}

impl RotationMatrix4 {
    pub fn from_columns(cols: [[BigRational; 4]; 4]) -> Self {
        let m = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
        Self { m }
    }

    pub fn from_integer_rows(rows: [[i64; 4]; 4]) -> Self {
        Self { m: rows.map(|r| r.map(|x| ratio(x, 1))) }
    }

    pub fn identity() -> Self {
        Self::from_integer_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.m[i][j]
    }

    pub fn column(&self, j: usize) -> [BigRational; 4] {
        std::array::from_fn(|i| self.m[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self { m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].clone())) }
    }

    pub fn determinant(&self) -> BigRational {
        // Laplace expansion along the first row over 3x3 minors.
        let minor3 = |rows: [usize; 3], cols: [usize; 3]| -> BigRational {
            let e = |a: usize, b: usize| &self.m[rows[a]][cols[b]];
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        };
        let mut det = BigRational::zero();
        for j in 0..4 {
            let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
            let term = &self.m[0][j] * minor3([1, 2, 3], [cols[0], cols[1], cols[2]]);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    pub fn is_orthogonal(&self) -> bool {
        &self.transpose() * self == Self::identity()
    }

    pub fn is_special_orthogonal(&self) -> bool {
        self.is_orthogonal() && self.determinant().is_one()
    }
}

impl Mul for &RotationMatrix4 {
    type Output = RotationMatrix4;

    fn mul(self, r: &RotationMatrix4) -> RotationMatrix4 {
        RotationMatrix4 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &self.m[i][k] * &r.m[k][j]).sum())),
        }
    }
}

fn matrix_of(f: impl Fn(&Quaternion) -> Quaternion) -> RotationMatrix4 {
    RotationMatrix4::from_columns(Quaternion::basis().map(|e| f(&e).components()))
}

/// `σ(x)(y) = x·y`, left multiplication by a unit quaternion.
pub fn sigma_map(x: &Quaternion) -> Result<RotationMatrix4> {
    x.ensure_unit()?;
    Ok(matrix_of(|y| x * y))
}

/// `ρ(x)(y) = x·y·x⁻¹`, conjugation by a unit quaternion.
pub fn rho_map(x: &Quaternion) -> Result<RotationMatrix4> {
    x.ensure_unit()?;
    let inv = x.conj();
    Ok(matrix_of(|y| &(x * y) * &inv))
}
