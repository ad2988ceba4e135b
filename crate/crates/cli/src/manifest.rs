//! The reproduction manifest: expected values with descriptive citations,
//! split into a quick mandatory tier and an extended tier.

use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use crate::commands::{analyze_reports, coeff_query, AnalyzeArgs, CoeffQuery};
use crate::error::CliError;
use crate::load::{load_group, load_table, resolve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Mandatory,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Analyze,
    Spe,
    Coeff,
    Edge,
    Lift,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub lambda_size: Option<u128>,
    pub stabilizer_order: Option<u128>,
    pub delta_order: Option<u128>,
    pub delta_elementary_abelian: Option<bool>,
    /// `yes` or `no`.
    pub connected: Option<String>,
    /// Printed result of `spe`, `coeff`, `edge` and `lift` entries.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    pub tier: Tier,
    pub kind: Kind,
    pub citation: String,
    pub group: Option<String>,
    pub table: Option<String>,
    pub p: Option<u64>,
    pub class: Option<String>,
    #[serde(default)]
    pub rational: bool,
    #[serde(default)]
    pub classes: Vec<String>,
    #[serde(default)]
    pub expect: Expect,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(rename = "entry", default)]
    pub entries: Vec<Entry>,
}

pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    let m: Manifest = toml::from_str(text).map_err(|e| CliError::Manifest(e.to_string()))?;
    for e in &m.entries {
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(CliError::Manifest(format!("entry {}: {what}", e.id)))
            }
        };
        match e.kind {
            Kind::Analyze => {
                need(e.group.is_some() && e.p.is_some() && e.class.is_some(), "needs group, p and class")?;
                need(e.expect.value.is_none(), "analyze entries compare fields, not a value")?;
            }
            Kind::Spe => need(e.group.is_some() && e.p.is_some(), "needs group and p")?,
            Kind::Coeff => need(e.table.is_some() && e.classes.len() == 3, "needs a table and three classes")?,
            Kind::Edge => need(e.table.is_some() && e.class.is_some(), "needs a table and a class")?,
            Kind::Lift => need(e.table.is_some() && !e.classes.is_empty(), "needs a table and classes")?,
        }
        if e.kind != Kind::Analyze {
            need(e.expect.value.is_some(), "needs expect.value")?;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Computed and expected differ in the listed fields.
    Fail(Vec<String>),
    Skipped(String),
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryResult {
    pub id: String,
    pub tier: Tier,
    pub citation: String,
    pub computed: String,
    pub status: Status,
}

fn compare<T: PartialEq + std::fmt::Display>(name: &str, want: &Option<T>, got: &T, diffs: &mut Vec<String>) {
    if let Some(w) = want {
        if w != got {
            diffs.push(format!("{name}: expected {w}, computed {got}"));
        }
    }
}

fn evaluate(e: &Entry, dir: &Path, seed: Option<u64>) -> Result<(String, Vec<String>), CliError> {
    let mut diffs = Vec::new();
    let computed = match e.kind {
        Kind::Analyze => {
            let args = AnalyzeArgs {
                group: e.group.clone().unwrap_or_default(),
                p: e.p.unwrap_or_default(),
                class: e.class.clone(),
                rational: e.rational,
                all_classes: false,
                seed,
                oracle: false,
            };
            let r = analyze_reports(&args, dir)?.remove(0);
            compare("lambda_size", &e.expect.lambda_size, &r.lambda_size, &mut diffs);
            compare("stabilizer_order", &e.expect.stabilizer_order, &r.stabilizer_order, &mut diffs);
            compare("delta_order", &e.expect.delta_order, &r.delta.order, &mut diffs);
            compare(
                "delta_elementary_abelian",
                &e.expect.delta_elementary_abelian,
                &r.delta.elementary_abelian,
                &mut diffs,
            );
            compare("connected", &e.expect.connected, &r.connected, &mut diffs);
            format!(
                "lambda={} stabilizer={} delta={} connected={}",
                r.lambda_size, r.stabilizer_order, r.delta.order, r.connected
            )
        }
        Kind::Spe => {
            let g = load_group(e.group.as_deref().unwrap_or_default(), dir, seed)?;
            let p = e.p.unwrap_or_default();
            let v = gggraph::strongly_p_embedded(classops::classes_of_order_p(&g.group, p)?)?;
            v.as_str().to_string()
        }
        Kind::Coeff | Kind::Edge | Kind::Lift => {
            let t = load_table(e.table.as_deref().unwrap_or_default(), dir)?;
            let q = match e.kind {
                Kind::Coeff => CoeffQuery::Classes(e.classes[0].clone(), e.classes[1].clone(), e.classes[2].clone()),
                Kind::Edge => CoeffQuery::Edge(e.class.clone().unwrap_or_default()),
                _ => CoeffQuery::Lift {
                    classes: e.classes.clone(),
                    quotient_connected: true,
                },
            };
            coeff_query(&t, &q)?
        }
    };
    if e.kind != Kind::Analyze {
        compare("value", &e.expect.value, &computed, &mut diffs);
    }
    Ok((computed, diffs))
}

fn data_missing(e: &Entry, dir: &Path) -> Option<String> {
    if let Some(t) = &e.table {
        if resolve(t, dir, "ctbl").is_none() {
            return Some(t.clone());
        }
    }
    if let Some(g) = &e.group {
        if resolve(g, dir, "grp").is_none() && permcore::builtin::by_name(g).is_none() {
            return Some(g.clone());
        }
    }
    None
}

pub fn run_entry(e: &Entry, dir: &Path, seed: Option<u64>) -> EntryResult {
    let (computed, status) = match data_missing(e, dir) {
        Some(f) => (String::new(), Status::Skipped(format!("data unavailable: {f}"))),
        None => match evaluate(e, dir, seed) {
            Ok((c, diffs)) if diffs.is_empty() => (c, Status::Pass),
            Ok((c, diffs)) => (c, Status::Fail(diffs)),
            Err(err) => (String::new(), Status::Error(err.to_string())),
        },
    };
    EntryResult {
        id: e.id.clone(),
        tier: e.tier,
        citation: e.citation.clone(),
        computed,
        status,
    }
}

/// Runs the entries up to `tier` on `jobs` threads; results keep manifest
/// order.
pub fn run_manifest(m: &Manifest, tier: Tier, dir: &Path, seed: Option<u64>, jobs: usize) -> Vec<EntryResult> {
    let selected: Vec<&Entry> = m.entries.iter().filter(|e| e.tier <= tier).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| selected.par_iter().map(|e| run_entry(e, dir, seed)).collect())
}

pub fn summary(results: &[EntryResult]) -> (String, bool) {
    let mut out = String::from("id\tstatus\tcomputed\tcitation\n");
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for r in results {
        let status = match &r.status {
            Status::Pass => {
                pass += 1;
                "pass".to_string()
            }
            Status::Fail(d) => {
                fail += 1;
                format!("FAIL [{}]", d.join("; "))
            }
            Status::Skipped(why) => {
                skip += 1;
                format!("skipped ({why})")
            }
            Status::Error(e) => {
                fail += 1;
                format!("ERROR [{e}]")
            }
        };
        out.push_str(&format!("{}\t{}\t{}\t{}\n", r.id, status, r.computed, r.citation));
    }
    out.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
    (out, fail == 0)
}
