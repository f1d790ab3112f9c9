//! Smale invariants of immersions `S³ ↬ R⁴` and `S³ ↬ R⁵`, the singular
//! Seifert surface formulas that compute them, and the Smale-type invariant
//! of immersions `M³ ↬ R⁵` with trivial normal bundle.
//!
//! Generator conventions are fixed: `π₃(SO(4)) = Z[σ] ⊕ Z[ρ]` with `σ`
//! left multiplication and `ρ` conjugation by unit quaternions, and
//! `π₃(SO(5))` generated by `σ` followed by the standard inclusion.
//!
//! Singularity counts of Seifert surfaces (`t`, `l`, `L`, `L_ν`, `#Σ²`) are
//! inputs; they all vanish when the Seifert surface is embedded.

mod quaternion;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use quaternion::{rho_map, sigma_map, Quaternion, RotationMatrix4};

use crate::catalog;
use crate::error::{Error, Result};
use crate::plumbing::{dynkin_graph, DynkinLabel};

/// Element `a[σ] + b[ρ]` of `π₃(SO(4)) ≅ Z ⊕ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SmaleClassR4 {
    #[serde(with = "crate::json::bigint")]
    pub a: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub b: BigInt,
}

impl SmaleClassR4 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }
}

impl fmt::Display for SmaleClassR4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add for &SmaleClassR4 {
    type Output = SmaleClassR4;

    fn add(self, r: &SmaleClassR4) -> SmaleClassR4 {
        SmaleClassR4 { a: &self.a + &r.a, b: &self.b + &r.b }
    }
}

impl Sub for &SmaleClassR4 {
    type Output = SmaleClassR4;

    fn sub(self, r: &SmaleClassR4) -> SmaleClassR4 {
        SmaleClassR4 { a: &self.a - &r.a, b: &self.b - &r.b }
    }
}

impl Neg for &SmaleClassR4 {
    type Output = SmaleClassR4;

    fn neg(self) -> SmaleClassR4 {
        SmaleClassR4 { a: -&self.a, b: -&self.b }
    }
}

/// Element of `π₃(SO(5)) ≅ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SmaleClassR5(#[serde(with = "crate::json::bigint")] BigInt);

impl SmaleClassR5 {
    pub fn new(value: impl Into<BigInt>) -> Self {
        Self(value.into())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for SmaleClassR5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for &SmaleClassR5 {
    type Output = SmaleClassR5;

    fn add(self, r: &SmaleClassR5) -> SmaleClassR5 {
        SmaleClassR5(&self.0 + &r.0)
    }
}

impl Neg for &SmaleClassR5 {
    type Output = SmaleClassR5;

    fn neg(self) -> SmaleClassR5 {
        SmaleClassR5(-&self.0)
    }
}

/// Precomposition with an orientation-reversing diffeomorphism of `S³`:
/// `Ω(g∘r) = -Ω(g) + (-2, 1)`.
pub fn reverse_orientation(s: &SmaleClassR4) -> SmaleClassR4 {
    SmaleClassR4 { a: -&s.a - 2, b: 1 - &s.b }
}

/// `j_*(a, b) = a + 2b` for the inclusion `j : R⁴ → R⁵`.
pub fn pushforward_j(s: &SmaleClassR4) -> SmaleClassR5 {
    SmaleClassR5(&s.a + 2 * &s.b)
}

/// Smale invariant of `g : S³ ↬ R⁴` from a singular Seifert surface:
/// `(D - 1, (3σ + #Σ² - 2(D - 1)) / 4)` with `D` the normal degree.
pub fn smale_et(normal_degree: i64, sigma: i64, sigma2_count: i64) -> Result<SmaleClassR4> {
    let a = BigInt::from(normal_degree) - 1;
    let num: BigInt = 3 * BigInt::from(sigma) + sigma2_count - 2 * &a;
    let (b, r) = num.div_rem(&BigInt::from(4));
    if !r.is_zero() {
        return Err(Error::NotDivisibleBy4(num));
    }
    Ok(SmaleClassR4 { a, b })
}

fn halve(num: BigInt) -> Result<BigInt> {
    if num.is_even() {
        Ok(num / 2)
    } else {
        Err(Error::HalfIntegerResult(BigRational::new(num, BigInt::from(2))))
    }
}

/// Smale invariant of `f : S³ ↬ R⁵`: `(3/2)σ + (1/2)(3t - 3l + L)`.
pub fn smale_es(sigma: i64, t: i64, l: i64, linking: i64) -> Result<SmaleClassR5> {
    let num = 3 * BigInt::from(sigma) + 3 * BigInt::from(t) - 3 * BigInt::from(l) + linking;
    halve(num).map(SmaleClassR5)
}

/// `(3/2)(σ - α) + (1/2)(3t - 3l + L_ν)` as an exact rational.
pub fn smale_type_exact(sigma: i64, alpha: i64, t: i64, l: i64, l_nu: i64) -> BigRational {
    let num = 3 * (BigInt::from(sigma) - alpha) + 3 * BigInt::from(t) - 3 * BigInt::from(l) + l_nu;
    BigRational::new(num, BigInt::from(2))
}

/// Smale-type invariant `i(f)` of `f : M³ ↬ R⁵` with trivial normal bundle.
pub fn smale_type_sst(sigma: i64, alpha: i64, t: i64, l: i64, l_nu: i64) -> Result<BigInt> {
    let q = smale_type_exact(sigma, alpha, t, l, l_nu);
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::HalfIntegerResult(q))
    }
}

/// `Ω(ḡ_G ∘ p)` for Kinjo's immersion precomposed with the universal cover.
///
/// The first component is `#Γ · χ(X(G)) - 1`; the second is recovered from the
/// published `R⁵` value through `-Ω(Φ|_S) = a + 2b` and must come out as 0.
pub fn kinjo_smale(label: DynkinLabel) -> Result<SmaleClassR4> {
    let chi = dynkin_graph(label).filling_euler_characteristic();
    let a = BigInt::from(catalog::group_order(label)) * chi - 1;
    let rest: BigInt = -catalog::np_smale_invariant(label).value() - &a;
    if rest.is_odd() {
        return Err(Error::ConsistencyViolation(format!("{label}: -Ω(Φ|_S) - a = {rest} is odd")));
    }
    let b: BigInt = rest / 2;
    if !b.is_zero() {
        return Err(Error::ConsistencyViolation(format!("{label}: second component {b} is nonzero")));
    }
    Ok(SmaleClassR4 { a, b })
}

/// `Ω(g_G ∘ p)`, the same immersion with the link orientation on the source.
pub fn kinjo_smale_reversed(label: DynkinLabel) -> Result<SmaleClassR4> {
    kinjo_smale(label).map(|s| reverse_orientation(&s))
}
