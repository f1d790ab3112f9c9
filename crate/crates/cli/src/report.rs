//! Structured reports. Each one serializes to JSON directly and is rendered to
//! markdown in `markdown.rs`.

use adelink::catalog;
use adelink::classify::{
    are_regularly_homotopic, classify_graph, classify_kinjo_pushforward, classify_link_inclusion, table_row,
    SmaleTypeValue,
};
use adelink::plumbing::{dynkin_graph, DynkinLabel, PlumbingGraph};
use adelink::smale::{kinjo_smale, kinjo_smale_reversed, pushforward_j, SmaleClassR4, SmaleClassR5};
use adelink::wu::CohomologyModel;
use adelink::Result;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct LabelInfo {
    /// Dynkin label, subscript = number of vertices.
    pub label: String,
    pub family: String,
    /// Family parameter `n` of `A_{n-1}`, `D_{n+2}`, `E_n`.
    pub n: u32,
}

impl From<DynkinLabel> for LabelInfo {
    fn from(l: DynkinLabel) -> Self {
        Self { label: l.to_string(), family: l.family().to_string(), n: l.param() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRowReport {
    #[serde(flatten)]
    pub label: LabelInfo,
    pub h2: String,
    #[serde(with = "adelink::json::bigint_vec")]
    pub h2_invariant_factors: Vec<BigInt>,
    pub signature: i64,
    pub alpha: usize,
    #[serde(with = "adelink::json::bigint")]
    pub smale_type: BigInt,
}

pub fn table_report(label: DynkinLabel) -> Result<TableRowReport> {
    let row = table_row(label)?;
    Ok(TableRowReport {
        label: label.into(),
        h2: row.h2.to_string(),
        h2_invariant_factors: row.h2.invariant_factors().to_vec(),
        signature: row.signature,
        alpha: row.alpha,
        smale_type: row.smale_type,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BocksteinRow {
    /// Basis vector of `ker(A mod 2)`, one bit per vertex.
    pub x: String,
    #[serde(with = "adelink::json::bigint_vec")]
    pub beta: Vec<BigInt>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormalClass {
    #[serde(with = "adelink::json::bigint_vec")]
    pub wu: Vec<BigInt>,
    /// Integer, or an exact `p/q` string when `σ - α` is odd.
    pub smale_type: Value,
    pub integral: bool,
    pub parallelization: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlumbingSection {
    pub recognized: Option<String>,
    pub formal: bool,
    pub vertex_ids: Vec<i64>,
    #[serde(with = "adelink::json::bigint_matrix")]
    pub intersection_matrix: Vec<Vec<BigInt>>,
    #[serde(with = "adelink::json::bigint_vec")]
    pub smith_diagonal: Vec<BigInt>,
    pub h2: String,
    #[serde(with = "adelink::json::bigint_vec")]
    pub h2_invariant_factors: Vec<BigInt>,
    pub h1_mod2_basis: Vec<String>,
    pub alpha: usize,
    pub signature: i64,
    pub euler_characteristic: i64,
    #[serde(with = "adelink::json::bigint_matrix")]
    pub gamma2_zero: Vec<Vec<BigInt>>,
    pub bockstein: Vec<BocksteinRow>,
    pub class: FormalClass,
}

pub fn bockstein_rows(model: &CohomologyModel) -> Result<Vec<BocksteinRow>> {
    model
        .h1_mod2_basis()
        .iter()
        .map(|x| Ok(BocksteinRow { x: x.to_string(), beta: model.bockstein(x)?.coords().to_vec() }))
        .collect()
}

pub fn plumbing_section(g: &PlumbingGraph) -> Result<PlumbingSection> {
    let c = classify_graph(g)?;
    let form = g.intersection_matrix();
    let model = CohomologyModel::new(&form)?;
    let smale_type = match &c.smale_type {
        SmaleTypeValue::Integer(i) => adelink::json::to_value(i),
        SmaleTypeValue::NonIntegral(q) => Value::String(q.to_string()),
    };
    Ok(PlumbingSection {
        recognized: c.recognized.map(|l| l.to_string()),
        formal: c.formal,
        vertex_ids: g.vertices().iter().map(|v| v.id).collect(),
        intersection_matrix: form.to_rows(),
        smith_diagonal: model.smith().diagonal(),
        h2: c.h2.to_string(),
        h2_invariant_factors: c.h2.invariant_factors().to_vec(),
        h1_mod2_basis: model.h1_mod2_basis().iter().map(|x| x.to_string()).collect(),
        alpha: c.alpha,
        signature: c.signature,
        euler_characteristic: c.euler_characteristic,
        gamma2_zero: model.two_torsion().iter().map(|t| t.coords().to_vec()).collect(),
        bockstein: bockstein_rows(&model)?,
        class: FormalClass {
            wu: c.wu.coords().to_vec(),
            integral: c.smale_type.as_integer().is_some(),
            smale_type,
            parallelization: "almost-contact",
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ImmersionClass {
    #[serde(with = "adelink::json::bigint_vec")]
    pub wu: Vec<BigInt>,
    #[serde(with = "adelink::json::bigint")]
    pub smale_type: BigInt,
    pub parallelization: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkReport {
    #[serde(flatten)]
    pub label: LabelInfo,
    pub germ: String,
    pub group: String,
    pub group_order: u64,
    pub vertex_count: u64,
    pub h2: String,
    #[serde(with = "adelink::json::bigint_vec")]
    pub h2_invariant_factors: Vec<BigInt>,
    pub signature: i64,
    pub alpha: usize,
    pub link_inclusion: ImmersionClass,
    pub kinjo_pushforward: ImmersionClass,
    pub regularly_homotopic: bool,
    pub kinjo: SmaleClassR4,
    pub kinjo_reversed: SmaleClassR4,
    pub np_smale: SmaleClassR5,
    pub plumbing: PlumbingSection,
}

fn immersion_class(c: &adelink::classify::RegularHomotopyClass) -> ImmersionClass {
    ImmersionClass {
        wu: c.wu.coords().to_vec(),
        smale_type: c.smale_type.clone(),
        parallelization: c.parallelization.as_str(),
    }
}

pub fn link_report(label: DynkinLabel) -> Result<LinkReport> {
    let g = dynkin_graph(label);
    let row = table_row(label)?;
    let f = classify_link_inclusion(label)?;
    let k = classify_kinjo_pushforward(label)?;
    Ok(LinkReport {
        label: label.into(),
        germ: catalog::germ(label),
        group: catalog::group_name(label),
        group_order: catalog::group_order(label),
        vertex_count: label.vertex_count(),
        h2: row.h2.to_string(),
        h2_invariant_factors: row.h2.invariant_factors().to_vec(),
        signature: row.signature,
        alpha: row.alpha,
        link_inclusion: immersion_class(&f),
        kinjo_pushforward: immersion_class(&k),
        regularly_homotopic: are_regularly_homotopic(&f, &k)?,
        kinjo: kinjo_smale(label)?,
        kinjo_reversed: kinjo_smale_reversed(label)?,
        np_smale: catalog::np_smale_invariant(label),
        plumbing: plumbing_section(&g)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Immersion {
    /// Ω(ḡ_G ∘ p) in π₃(SO(4))
    Kinjo,
    /// Ω(g_G ∘ p) in π₃(SO(4))
    KinjoReversed,
    /// published Ω(Φ|_S) in π₃(SO(5))
    Np,
    /// j₊ of the reversed Kinjo class, checked against the published value
    Pushforward,
}

impl Immersion {
    pub fn name(self) -> &'static str {
        match self {
            Immersion::Kinjo => "kinjo",
            Immersion::KinjoReversed => "kinjo-reversed",
            Immersion::Np => "np",
            Immersion::Pushforward => "pushforward",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SmaleValue {
    R4(SmaleClassR4),
    R5(SmaleClassR5),
    Pushforward { value: SmaleClassR5, np: SmaleClassR5, verdict: &'static str },
}

#[derive(Debug, Clone, Serialize)]
pub struct SmaleReport {
    #[serde(flatten)]
    pub label: LabelInfo,
    pub immersion: &'static str,
    pub class: SmaleValue,
}

pub fn smale_report(label: DynkinLabel, immersion: Immersion) -> Result<SmaleReport> {
    let class = match immersion {
        Immersion::Kinjo => SmaleValue::R4(kinjo_smale(label)?),
        Immersion::KinjoReversed => SmaleValue::R4(kinjo_smale_reversed(label)?),
        Immersion::Np => SmaleValue::R5(catalog::np_smale_invariant(label)),
        Immersion::Pushforward => {
            let value = pushforward_j(&kinjo_smale_reversed(label)?);
            let np = catalog::np_smale_invariant(label);
            let verdict = if value == np { "consistent" } else { "inconsistent" };
            SmaleValue::Pushforward { value, np, verdict }
        }
    };
    Ok(SmaleReport { label: label.into(), immersion: immersion.name(), class })
}
