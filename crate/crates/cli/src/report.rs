//! Serializable component reports.

use gggraph::{ComponentReport, Verdict};
use serde::{Deserialize, Serialize};

use crate::load::LoadedGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    pub order: u64,
    pub size: u128,
    pub centralizer_order: u128,
    pub fingerprint: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Whether the component of the base class meets this class.
    pub met: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaOut {
    pub order: u128,
    pub abelian: bool,
    pub elementary_abelian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<u128>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOut {
    pub lambda_size: u128,
    pub stabilizer_order: u128,
    pub connected: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub group_order: u128,
    pub p: u64,
    pub class: ClassOut,
    /// The remaining classes of a union, in seed order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub union: Vec<ClassOut>,
    pub rational: bool,
    pub lambda_size: u128,
    pub delta: DeltaOut,
    pub stabilizer_order: u128,
    /// `yes`, `no` or `unknown`.
    pub connected: String,
    pub method: String,
    pub citations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Connected => "yes",
        Verdict::Disconnected => "no",
        Verdict::Unknown => "unknown",
    }
}

fn citations(r: &ComponentReport) -> Vec<String> {
    let mut out = vec!["the graph is connected exactly when the component stabilizer is the whole group".to_string()];
    out.push(
        match r.method {
            gggraph::Method::StabilizerAlgorithm => {
                "component stabilizer generated by centralizers and conjugators between neighbouring classes"
            }
            gggraph::Method::CyclicSylowShortcut => "component read off a cyclic or quaternion Sylow subgroup",
            gggraph::Method::BruteForce => "explicit enumeration of the graph",
        }
        .to_string(),
    );
    if r.rational {
        out.push("rational closure of a class of elements of prime order".to_string());
    }
    out
}

impl Report {
    pub fn new(g: &LoadedGroup, r: &ComponentReport) -> Self {
        let mut classes = r.seeds.iter().map(|s| ClassOut {
            order: r.p,
            size: s.class_size,
            centralizer_order: s.centralizer_order,
            fingerprint: s.fingerprint.clone(),
            label: g.label_of(&s.fingerprint),
            met: s.met,
        });
        let class = classes.next().expect("a union has a base class");
        Report {
            group: g.name.clone(),
            group_order: r.group_order,
            p: r.p,
            class,
            union: classes.collect(),
            rational: r.rational,
            lambda_size: r.lambda_size,
            delta: DeltaOut {
                order: r.delta.order,
                abelian: r.delta.is_abelian,
                elementary_abelian: r.delta.is_elementary_abelian,
                invariants: r.delta.abelian_invariants.clone(),
            },
            stabilizer_order: r.stabilizer_order,
            connected: verdict_str(r.connected).to_string(),
            method: r.method.as_str().to_string(),
            citations: citations(r),
            oracle: None,
        }
    }

    pub fn class_name(&self) -> &str {
        self.class.label.as_deref().unwrap_or(&self.class.fingerprint)
    }
}

pub const TSV_HEADER: &str = "group\tp\tclass\tfingerprint\trational\tlambda_size\tdelta_order\tstabilizer_order\tconnected\tmethod\toracle";

pub fn tsv_row(r: &Report) -> String {
    let oracle = match &r.oracle {
        Some(o) if o.agrees => "agrees",
        Some(_) => "mismatch",
        None => "-",
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.group,
        r.p,
        r.class_name(),
        r.class.fingerprint,
        r.rational,
        r.lambda_size,
        r.delta.order,
        r.stabilizer_order,
        r.connected,
        r.method,
        oracle
    )
}
