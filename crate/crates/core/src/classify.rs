//! Complete regular-homotopy invariants of immersions `M³ ↬ R⁵` with trivial
//! normal bundle, for the two families attached to a simple singularity:
//!
//! * the inclusion `f : K → S⁵` of the link, with the Milnor fiber as an
//!   embedded Seifert surface;
//! * `j ∘ g_G : M(G) ↬ R⁵`, Kinjo's plumbed immersion pushed into `R⁵`.
//!
//! Both are measured against an almost contact parallelization, where the Wu
//! invariant is 0, so the Smale-type invariant `(3/2)(σ - α)` decides.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::FinAbGroup;
use crate::plumbing::{dynkin_graph, recognize_dynkin, DynkinLabel, PlumbingGraph};
use crate::smale::{smale_type_exact, smale_type_sst};
use crate::wu::CohClass;

/// Parallelization against which the Wu invariant is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParallelizationTag {
    AlmostContact,
}

impl ParallelizationTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParallelizationTag::AlmostContact => "almost-contact",
        }
    }
}

impl Serialize for ParallelizationTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// `(c_τ(f), i(f)) ∈ Γ₂(0) × Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularHomotopyClass {
    pub wu: CohClass,
    #[serde(with = "crate::json::bigint")]
    pub smale_type: BigInt,
    pub parallelization: ParallelizationTag,
}

impl RegularHomotopyClass {
    pub fn new(wu: CohClass, smale_type: BigInt) -> Result<Self> {
        if !wu.scale(2).is_zero() {
            return Err(Error::NotTwoTorsion);
        }
        Ok(Self { wu, smale_type, parallelization: ParallelizationTag::AlmostContact })
    }

    pub fn h2(&self) -> &FinAbGroup {
        self.wu.parent()
    }
}

fn to_i64(x: usize) -> i64 {
    i64::try_from(x).expect("count fits in i64")
}

/// Inclusion of the link, Seifert surface = Milnor fiber `F ≅ X(G)`.
pub fn classify_link_inclusion(label: DynkinLabel) -> Result<RegularHomotopyClass> {
    let g = dynkin_graph(label);
    let h2 = g.link_first_homology()?;
    let alpha = to_i64(h2.two_rank());
    let i = smale_type_sst(g.filling_signature(), alpha, 0, 0, 0)?;
    RegularHomotopyClass::new(CohClass::zero(&h2), i)
}

/// `j ∘ g_G`, Seifert surface = `X(G)` pushed into `R⁶₊` with `σ = -#V(G)`.
pub fn classify_kinjo_pushforward(label: DynkinLabel) -> Result<RegularHomotopyClass> {
    let g = dynkin_graph(label);
    let h2 = g.link_first_homology()?;
    let alpha = to_i64(h2.two_rank());
    let sigma = -to_i64(g.vertex_count());
    let i = smale_type_sst(sigma, alpha, 0, 0, 0)?;
    RegularHomotopyClass::new(CohClass::zero(&h2), i)
}

pub fn are_regularly_homotopic(c1: &RegularHomotopyClass, c2: &RegularHomotopyClass) -> Result<bool> {
    if c1.h2() != c2.h2() {
        return Err(Error::IncomparableManifolds);
    }
    Ok(c1.wu == c2.wu && c1.smale_type == c2.smale_type)
}

/// Homological data of a simple singularity and the Smale-type invariant of its link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: DynkinLabel,
    /// `H²(K; Z)`
    pub h2: FinAbGroup,
    /// `σ(F)`
    pub signature: i64,
    /// `α(K)`
    pub alpha: usize,
    /// `i(f)`
    #[serde(with = "crate::json::bigint")]
    pub smale_type: BigInt,
}

pub fn table_row(label: DynkinLabel) -> Result<TableRow> {
    let g = dynkin_graph(label);
    let h2 = g.link_first_homology()?;
    let signature = g.filling_signature();
    let alpha = h2.two_rank();
    let smale_type = smale_type_sst(signature, to_i64(alpha), 0, 0, 0)?;
    Ok(TableRow { label, h2, signature, alpha, smale_type })
}

/// The Smale-type value of an arbitrary graph, which need not be integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmaleTypeValue {
    Integer(BigInt),
    /// `σ - α` is odd: no embedded Seifert surface with this filling exists.
    NonIntegral(BigRational),
}

impl SmaleTypeValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            SmaleTypeValue::Integer(i) => Some(i),
            SmaleTypeValue::NonIntegral(_) => None,
        }
    }
}

impl std::fmt::Display for SmaleTypeValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SmaleTypeValue::Integer(i) => write!(f, "{i}"),
            SmaleTypeValue::NonIntegral(q) => write!(f, "{q}"),
        }
    }
}

/// Invariants of the boundary of an arbitrary plumbing, evaluated with the
/// same formulas as for A-D-E links.
///
/// `formal` is set unless the graph is an A-D-E Dynkin diagram: the formulas
/// are only known to describe an immersion for links of singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassification {
    pub recognized: Option<DynkinLabel>,
    pub formal: bool,
    pub h2: FinAbGroup,
    pub signature: i64,
    pub alpha: usize,
    pub euler_characteristic: i64,
    pub wu: CohClass,
    pub smale_type: SmaleTypeValue,
}

pub fn classify_graph(g: &PlumbingGraph) -> Result<GraphClassification> {
    let h2 = g.link_first_homology()?;
    let signature = g.filling_signature();
    let alpha = h2.two_rank();
    let q = smale_type_exact(signature, to_i64(alpha), 0, 0, 0);
    let smale_type =
        if q.is_integer() { SmaleTypeValue::Integer(q.to_integer()) } else { SmaleTypeValue::NonIntegral(q) };
    let recognized = recognize_dynkin(g);
    Ok(GraphClassification {
        recognized,
        formal: recognized.is_none(),
        wu: CohClass::zero(&h2),
        h2,
        signature,
        alpha,
        euler_characteristic: g.filling_euler_characteristic(),
        smale_type,
    })
}
