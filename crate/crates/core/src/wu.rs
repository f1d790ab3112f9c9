//! Values of the Wu invariant.
//!
//! For a nondegenerate symmetric intersection matrix `A` the boundary
//! 3-manifold is modelled by the two-term cochain complex `Z^n --A--> Z^n`:
//! `H²(M; Z) = coker A` and `H¹(M; Z/2) = ker(A mod 2)`. The Bockstein of a
//! mod-2 cocycle `x` is `[A x̃ / 2]` for any integral lift `x̃`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, FinAbGroup, IntMatrix, SmithDecomposition};

/// Element of a finitely generated abelian group in invariant-factor
/// coordinates: torsion coordinates first (reduced), then free coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CohClass {
    #[serde(skip)]
    parent: FinAbGroup,
    #[serde(with = "crate::json::bigint_vec")]
    coords: Vec<BigInt>,
}

impl CohClass {
    pub fn new(parent: &FinAbGroup, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != parent.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a group with {} generators",
                coords.len(),
                parent.num_generators()
            )));
        }
        let mut c = Self { parent: parent.clone(), coords };
        c.reduce();
        Ok(c)
    }

    pub fn zero(parent: &FinAbGroup) -> Self {
        Self { parent: parent.clone(), coords: vec![BigInt::zero(); parent.num_generators()] }
    }

    fn reduce(&mut self) {
        for (c, d) in self.coords.iter_mut().zip(self.parent.invariant_factors()) {
            *c = c.mod_floor(d);
        }
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, other: &CohClass) -> Result<CohClass> {
        if self.parent != other.parent {
            return Err(Error::IncompatibleGroups);
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        let mut c = Self { parent: self.parent.clone(), coords };
        c.reduce();
        Ok(c)
    }

    pub fn scale(&self, k: i64) -> CohClass {
        let mut c = Self { parent: self.parent.clone(), coords: self.coords.iter().map(|x| x * k).collect() };
        c.reduce();
        c
    }

    pub fn neg(&self) -> CohClass {
        self.scale(-1)
    }

    /// Every element of a finite group, in lexicographic coordinate order.
    pub fn elements(parent: &FinAbGroup) -> Result<Vec<CohClass>> {
        if !parent.is_finite() {
            return Err(Error::FreeRankUnsupported(parent.free_rank()));
        }
        let mut out = vec![Vec::new()];
        for d in parent.invariant_factors() {
            let mut next = Vec::new();
            for prefix in &out {
                let mut r = BigInt::zero();
                while &r < d {
                    let mut v: Vec<BigInt> = prefix.clone();
                    v.push(r.clone());
                    next.push(v);
                    r += 1;
                }
            }
            out = next;
        }
        Ok(out.into_iter().map(|coords| Self { parent: parent.clone(), coords }).collect())
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Γ₂(χ) = { C : 2C = χ }`, solved one cyclic factor at a time.
pub fn gamma2(h: &FinAbGroup, chi: &CohClass) -> Result<Vec<CohClass>> {
    if !h.is_finite() {
        return Err(Error::FreeRankUnsupported(h.free_rank()));
    }
    if chi.parent() != h {
        return Err(Error::IncompatibleGroups);
    }
    let two = BigInt::from(2);
    let mut per_factor: Vec<Vec<BigInt>> = Vec::new();
    for (x, d) in chi.coords().iter().zip(h.invariant_factors()) {
        if d.is_odd() {
            // 2 is invertible mod d
            let inv2 = (d + 1u32) / &two;
            per_factor.push(vec![(x * inv2).mod_floor(d)]);
        } else if x.is_even() {
            let half = x / &two;
            per_factor.push(vec![half.clone(), half + d / &two]);
        } else {
            return Ok(Vec::new());
        }
    }
    let mut sols = vec![Vec::new()];
    for choices in per_factor {
        sols = sols
            .into_iter()
            .flat_map(|p: Vec<BigInt>| {
                choices.iter().map(move |c| {
                    let mut v = p.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    sols.into_iter().map(|c| CohClass::new(h, c)).collect()
}

/// Mod-2 cochain `x ∈ (Z/2)^n`; a cocycle when `A x ≡ 0 (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Z2Class(Vec<bool>);

impl Z2Class {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![false; n])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    pub fn xor(&self, other: &Z2Class) -> Z2Class {
        Z2Class(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    /// The 0/1 integral lift.
    pub fn lift(&self) -> Vec<BigInt> {
        self.0.iter().map(|&b| BigInt::from(u8::from(b))).collect()
    }
}

impl fmt::Display for Z2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "({s})")
    }
}

/// The cochain model of a rational homology sphere given by its intersection matrix.
#[derive(Debug, Clone)]
pub struct CohomologyModel {
    form: IntMatrix,
    smith: SmithDecomposition,
    h2: FinAbGroup,
    h1_basis: Vec<Z2Class>,
}

impl CohomologyModel {
    pub fn new(form: &IntMatrix) -> Result<Self> {
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let smith = linalg::smith_normal_form(form);
        let h2 = linalg::cokernel_from_smith(&smith);
        if !h2.is_finite() {
            return Err(Error::NotRationalHomologySphere { free_rank: h2.free_rank() });
        }
        let h1_basis = linalg::kernel_mod2(form).into_iter().map(Z2Class).collect();
        Ok(Self { form: form.clone(), smith, h2, h1_basis })
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    /// `H²(M; Z) = coker A`.
    pub fn h2(&self) -> &FinAbGroup {
        &self.h2
    }

    /// Basis of `H¹(M; Z/2) = ker(A mod 2)`.
    pub fn h1_mod2_basis(&self) -> &[Z2Class] {
        &self.h1_basis
    }

    /// All `2^dim` cocycles, indexed by the bits of a counter over the basis.
    pub fn h1_mod2_elements(&self) -> Vec<Z2Class> {
        let n = self.form.rows();
        let k = self.h1_basis.len();
        assert!(k < 32, "mod-2 cohomology of dimension {k} is too large to enumerate");
        (0u32..1 << k)
            .map(|mask| {
                (0..k).filter(|i| mask >> i & 1 == 1).fold(Z2Class::zero(n), |acc, i| acc.xor(&self.h1_basis[i]))
            })
            .collect()
    }

    /// Class of an integral 2-cochain `y` in `coker A`.
    pub fn class_of(&self, y: &[BigInt]) -> Result<CohClass> {
        let z = self.smith.u.mul_vec(y)?;
        let diag = self.smith.diagonal();
        let coords = z.into_iter().zip(diag).filter(|(_, d)| !d.abs().is_one()).map(|(c, _)| c).collect();
        CohClass::new(&self.h2, coords)
    }

    pub fn is_cocycle(&self, x: &Z2Class) -> bool {
        x.len() == self.form.rows()
            && self.form.mul_vec(&x.lift()).expect("length checked").iter().all(Integer::is_even)
    }

    /// Bockstein of the mod-2 class represented by an arbitrary integral lift.
    pub fn bockstein_of_lift(&self, lift: &[BigInt]) -> Result<CohClass> {
        let ax = self.form.mul_vec(lift)?;
        if ax.iter().any(Integer::is_odd) {
            return Err(Error::NotACocycle);
        }
        let half: Vec<BigInt> = ax.into_iter().map(|v| v / 2).collect();
        self.class_of(&half)
    }

    /// `β : H¹(M; Z/2) → H²(M; Z)` using the 0/1 lift.
    pub fn bockstein(&self, x: &Z2Class) -> Result<CohClass> {
        if x.len() != self.form.rows() {
            return Err(Error::DimensionMismatch(format!(
                "cochain of length {} for a {}-vertex form",
                x.len(),
                self.form.rows()
            )));
        }
        self.bockstein_of_lift(&x.lift())
    }

    /// Wu invariant after changing the parallelization by the difference class `d`:
    /// `c_{τ₁} = c_{τ₀} + β(d)`.
    pub fn wu_switch(&self, c0: &CohClass, d: &Z2Class) -> Result<CohClass> {
        if c0.parent() != &self.h2 {
            return Err(Error::IncompatibleGroups);
        }
        c0.checked_add(&self.bockstein(d)?)
    }

    /// A difference class `d` with `β(d) = target`, found by exhaustive search.
    pub fn realize_parallelization(&self, target: &CohClass) -> Result<Z2Class> {
        if target.parent() != &self.h2 {
            return Err(Error::IncompatibleGroups);
        }
        if !target.scale(2).is_zero() {
            return Err(Error::NotTwoTorsion);
        }
        for d in self.h1_mod2_elements() {
            if &self.bockstein(&d)? == target {
                return Ok(d);
            }
        }
        Err(Error::NoPreimageFound)
    }

    /// `Γ₂(0)`, the 2-torsion of `H²`.
    pub fn two_torsion(&self) -> Vec<CohClass> {
        gamma2(&self.h2, &CohClass::zero(&self.h2)).expect("H² is finite")
    }
}

pub fn bockstein(a: &IntMatrix, x: &Z2Class) -> Result<CohClass> {
    CohomologyModel::new(a)?.bockstein(x)
}

pub fn wu_switch(c0: &CohClass, a: &IntMatrix, d: &Z2Class) -> Result<CohClass> {
    CohomologyModel::new(a)?.wu_switch(c0, d)
}

pub fn realize_parallelization(a: &IntMatrix, target: &CohClass) -> Result<Z2Class> {
    CohomologyModel::new(a)?.realize_parallelization(target)
}
