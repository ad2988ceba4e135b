//! Command implementations. Each returns its stdout text and whether the
//! run counts as a success, so the binary only handles exit codes.

use std::path::Path;

use chartab::{class_mult_coeff, clique_test, edge_exists, multiclass_lift_test, CharacterTable, LiftOutcome};
use classops::{classes_of_order_p, ClassList};
use gggraph::{analyze, brute_force_component, strongly_p_embedded, ClassUnion, Verdict, ORACLE_BOUND};
use permcore::Perm;

use crate::error::CliError;
use crate::load::{load_group, load_table, LoadedGroup};
use crate::report::{tsv_row, OracleOut, Report, TSV_HEADER};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeArgs {
    pub group: String,
    pub p: u64,
    pub class: Option<String>,
    pub rational: bool,
    pub all_classes: bool,
    pub seed: Option<u64>,
    pub oracle: bool,
}

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn unions(g: &LoadedGroup, list: &ClassList, args: &AnalyzeArgs) -> Result<Vec<ClassUnion>, CliError> {
    let make = |i: usize| {
        if args.rational {
            ClassUnion::rational(list.clone(), i)
        } else {
            ClassUnion::single(list.clone(), i)
        }
    };
    match (&args.class, args.all_classes) {
        (Some(_), true) => Err(CliError::Usage("--class and --all-classes exclude each other".into())),
        (Some(sel), false) => Ok(vec![make(g.select(list, sel)?)?]),
        (None, _) => {
            let mut out: Vec<ClassUnion> = Vec::new();
            for i in 0..list.len() {
                // a rational closure is reported once, from its first class
                if out.iter().any(|cu| cu.seed_indices().contains(&i)) {
                    continue;
                }
                out.push(make(i)?);
            }
            Ok(out)
        }
    }
}

pub fn analyze_reports(args: &AnalyzeArgs, dir: &Path) -> Result<Vec<Report>, CliError> {
    let g = load_group(&args.group, dir, args.seed)?;
    let list = classes_of_order_p(&g.group, args.p)?;
    if list.is_empty() {
        return Err(CliError::Usage(format!("{} has no elements of order {}", g.name, args.p)));
    }
    let mut out = Vec::new();
    for cu in unions(&g, &list, args)? {
        let r = analyze(&cu)?;
        let mut rep = Report::new(&g, &r);
        if args.oracle {
            let o = brute_force_component(&cu, ORACLE_BOUND)?;
            rep.oracle = Some(OracleOut {
                lambda_size: o.lambda_size,
                stabilizer_order: o.stabilizer_order,
                connected: o.connected,
                agrees: o.lambda_size == r.lambda_size
                    && o.stabilizer_order == r.stabilizer_order
                    && o.connected == (r.connected == Verdict::Connected)
                    && r.connected != Verdict::Unknown,
            });
        }
        out.push(rep);
    }
    Ok(out)
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = format!("{TSV_HEADER}\n");
            for r in reports {
                s.push_str(&tsv_row(r));
                s.push('\n');
            }
            s
        }
    }
}

pub fn analyze_cmd(args: &AnalyzeArgs, format: Format, dir: &Path) -> Result<Outcome, CliError> {
    let reports = analyze_reports(args, dir)?;
    let ok = reports
        .iter()
        .all(|r| r.connected != "unknown" && r.oracle.as_ref().is_none_or(|o| o.agrees));
    Ok(Outcome {
        text: render(&reports, format),
        ok,
    })
}

pub fn spe_cmd(group: &str, p: u64, seed: Option<u64>, dir: &Path) -> Result<Outcome, CliError> {
    let g = load_group(group, dir, seed)?;
    if g.group.order() % p as u128 != 0 {
        return Err(CliError::Usage(format!("{p} does not divide the order of {}", g.name)));
    }
    let v = strongly_p_embedded(classes_of_order_p(&g.group, p)?)?;
    Ok(Outcome {
        text: format!("{}\n", v.as_str()),
        ok: v != gggraph::SpeVerdict::Unknown,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffQuery {
    Classes(String, String, String),
    Edge(String),
    Clique { class: String, p: u64, rational: bool },
    Lift { classes: Vec<String>, quotient_connected: bool },
}

pub fn coeff_query(t: &CharacterTable, q: &CoeffQuery) -> Result<String, CliError> {
    Ok(match q {
        CoeffQuery::Classes(a, b, c) => class_mult_coeff(t, a, b, c)?.to_string(),
        CoeffQuery::Edge(c) => edge_exists(t, c)?.to_string(),
        CoeffQuery::Clique { class, p, rational } => clique_test(t, class, *p, *rational)?.as_str().to_string(),
        CoeffQuery::Lift {
            classes,
            quotient_connected,
        } => {
            let refs: Vec<&str> = classes.iter().map(String::as_str).collect();
            match multiclass_lift_test(t, &refs, *quotient_connected)? {
                LiftOutcome::Degenerate => "degenerate: a single lifted class".to_string(),
                LiftOutcome::Separated { connected, edgeless } => {
                    format!("{connected} connected; {} edgeless", edgeless.join(","))
                }
                LiftOutcome::Inconclusive { blocking } => {
                    let parts: Vec<String> = blocking.iter().map(|(c, n)| format!("{c}:{n}")).collect();
                    format!("inconclusive ({})", parts.join(","))
                }
            }
        }
    })
}

pub fn coeff_cmd(table: &str, q: &CoeffQuery, dir: &Path) -> Result<Outcome, CliError> {
    let t = load_table(table, dir)?;
    Ok(Outcome {
        text: format!("{}\n", coeff_query(&t, q)?),
        ok: true,
    })
}

pub fn classes_cmd(group: &str, p: u64, seed: Option<u64>, dir: &Path) -> Result<Outcome, CliError> {
    let g = load_group(group, dir, seed)?;
    let list = classes_of_order_p(&g.group, p)?;
    let mut text = String::from("fingerprint\tlabel\tsize\tcentralizer_order\tcycle_type\n");
    for c in &list.classes {
        let ct: Vec<String> = c.cycle_type.iter().map(usize::to_string).collect();
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            c.fingerprint,
            g.label_of(&c.fingerprint).unwrap_or_else(|| "-".into()),
            c.class_size,
            c.centralizer_order(),
            ct.join(",")
        ));
    }
    Ok(Outcome {
        text,
        ok: list.is_complete(),
    })
}

/// Class of an element given in 1-based cycle notation.
pub fn identify_cmd(group: &str, element: &str, seed: Option<u64>, dir: &Path) -> Result<Outcome, CliError> {
    let g = load_group(group, dir, seed)?;
    let x = Perm::parse_cycles(g.group.degree(), element)?;
    if !g.group.contains(&x) {
        return Err(permcore::PermError::NotInGroup.into());
    }
    let o = x.order() as u64;
    if !permcore::is_prime(o) {
        return Err(CliError::Usage(format!("element has order {o}, which is not prime")));
    }
    let list = classes_of_order_p(&g.group, o)?;
    let i = list.identify(&x).ok_or_else(|| CliError::UnknownClass {
        selector: element.to_string(),
        p: o,
    })?;
    let fp = &list.classes[i].fingerprint;
    Ok(Outcome {
        text: format!("{fp}\t{}\n", g.label_of(fp).unwrap_or_else(|| "-".into())),
        ok: true,
    })
}
