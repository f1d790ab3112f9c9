//! Reference data for the simple singularities: defining germs, the finite
//! subgroup of `SU(2)` they are quotients by, and the published Smale
//! invariants of their parametrizations `Φ|_S : S³ ↬ S⁵`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::plumbing::{DynkinLabel, Family};
use crate::smale::SmaleClassR5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityRecord {
    pub label: DynkinLabel,
    pub germ: String,
    pub group_name: String,
    pub group_order: u64,
    pub np_smale: SmaleClassR5,
}

/// Display-only string of the defining germ.
pub fn germ(label: DynkinLabel) -> String {
    let n = label.param();
    match label.family() {
        Family::A => format!("x^2 + y^2 + z^{n}"),
        Family::D => format!("x^2 + y^2 z + z^{}", u64::from(n) + 1),
        Family::E => match n {
            6 => "x^2 + y^3 + z^4".into(),
            7 => "x^2 + y^3 + y z^3".into(),
            _ => "x^2 + y^3 + z^5".into(),
        },
    }
}

pub fn group_name(label: DynkinLabel) -> String {
    let n = label.param();
    match label.family() {
        Family::A => format!("C_{n}"),
        Family::D => format!("Dic_{n}"),
        Family::E => match n {
            6 => "2T".into(),
            7 => "2O".into(),
            _ => "2I".into(),
        },
    }
}

/// Order of the group `Γ ⊂ SU(2)` with `K = Γ \ S³`.
pub fn group_order(label: DynkinLabel) -> u64 {
    let n = u64::from(label.param());
    match label.family() {
        Family::A => n,
        Family::D => 4 * n,
        Family::E => match n {
            6 => 24,
            7 => 48,
            _ => 120,
        },
    }
}

/// Published Smale invariant of `Φ|_S : S³ ↬ S⁵`.
pub fn np_smale_invariant(label: DynkinLabel) -> SmaleClassR5 {
    let n = BigInt::from(label.param());
    let value = match label.family() {
        Family::A => -(&n * &n - BigInt::from(1)),
        Family::D => -(BigInt::from(4) * &n * &n + BigInt::from(12) * &n - BigInt::from(1)),
        Family::E => BigInt::from(match label.param() {
            6 => -167,
            7 => -383,
            _ => -1079,
        }),
    };
    SmaleClassR5::new(value)
}

pub fn record(label: DynkinLabel) -> SingularityRecord {
    SingularityRecord {
        label,
        germ: germ(label),
        group_name: group_name(label),
        group_order: group_order(label),
        np_smale: np_smale_invariant(label),
    }
}
