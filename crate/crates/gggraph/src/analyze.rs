//! Component reports and the strongly `p`-embedded test.

use classops::{structure_probe, sylow_p, ClassList, StructureInfo};
use permcore::{p_part, Perm, PermGroup};

use crate::component::component_stabilizer;
use crate::error::GraphError;
use crate::union::ClassUnion;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Connected,
    Disconnected,
    /// Some completeness certificate failed.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    StabilizerAlgorithm,
    CyclicSylowShortcut,
    BruteForce,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::StabilizerAlgorithm => "stabilizer-algorithm",
            Method::CyclicSylowShortcut => "cyclic-sylow-shortcut",
            Method::BruteForce => "brute-force",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Shortcut when the Sylow subgroup allows it, stabilizer search otherwise.
    #[default]
    Auto,
    Stabilizer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedReport {
    pub fingerprint: String,
    pub class_size: u128,
    pub centralizer_order: u128,
    pub met: bool,
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub p: u64,
    pub group_order: u128,
    pub rational: bool,
    pub seeds: Vec<SeedReport>,
    pub lambda_size: u128,
    pub stabilizer_order: u128,
    pub stabilizer_gens: Vec<Perm>,
    pub delta: StructureInfo,
    pub connected: Verdict,
    pub method: Method,
}

pub fn analyze(cu: &ClassUnion) -> Result<ComponentReport, GraphError> {
    analyze_with(cu, Strategy::Auto)
}

pub fn analyze_with(cu: &ClassUnion, strategy: Strategy) -> Result<ComponentReport, GraphError> {
    if strategy == Strategy::Auto && sylow_allows_shortcut(cu.group(), cu.p())? {
        return Ok(shortcut(cu));
    }
    let comp = component_stabilizer(cu)?;
    let lambda_size = comp.lambda_size(cu);
    let delta = comp.delta(cu);
    let met: Vec<bool> = comp.met.iter().map(Option::is_some).collect();
    Ok(report(
        cu,
        &comp.stabilizer,
        &delta,
        lambda_size,
        &met,
        comp.complete,
        Method::StabilizerAlgorithm,
    ))
}

/// Sylow `p`-subgroups cyclic, or generalized quaternion with `p = 2`.
fn sylow_allows_shortcut(g: &PermGroup, p: u64) -> Result<bool, GraphError> {
    let pp = p_part(g.order(), p as u128);
    if pp == p as u128 {
        return Ok(true);
    }
    if pp > classops::structure::ENUMERATION_BOUND {
        return Ok(false);
    }
    let s = sylow_p(g, p)?;
    let info = structure_probe(&s, p);
    Ok(info.is_cyclic || (p == 2 && info.is_generalized_quaternion))
}

/// With cyclic or quaternion Sylow subgroups every neighbour of `t` lies
/// in `<t>`, so the component is `{t^a : a in A}` for the component `A` of
/// `1` in the graph on exponents, and its stabilizer is the set of `g` with
/// `t^g = t^r` and `rA = A`.
fn shortcut(cu: &ClassUnion) -> ComponentReport {
    let p = cu.p();
    let list = cu.class_list();
    let seed = cu.seed(0);
    let t = &seed.rep;
    let in_c: Vec<bool> = (0..p)
        .map(|a| a != 0 && cu.seed_of(&t.pow(a as i64)).is_some())
        .collect();
    let mut comp = vec![false; p as usize];
    comp[1] = true;
    let mut stack = vec![1u64];
    while let Some(a) = stack.pop() {
        for b in 1..p {
            if comp[b as usize] || !in_c[b as usize] {
                continue;
            }
            let adj = if p == 2 {
                in_c[((a + b) % p) as usize]
            } else {
                in_c[((a + p - b) % p) as usize] || in_c[((b + p - a) % p) as usize]
            };
            if adj {
                comp[b as usize] = true;
                stack.push(b);
            }
        }
    }
    let members: Vec<u64> = (1..p).filter(|&a| comp[a as usize]).collect();
    let mut gens: Vec<Perm> = seed.centralizer.gens().to_vec();
    let mut count = 0u128;
    for r in 1..p {
        let tr = t.pow(r as i64);
        let Some((i, h)) = list.identify_with_conjugator(&tr) else {
            continue;
        };
        if i != cu.seed_indices()[0] {
            continue;
        }
        if members.iter().all(|&a| comp[((a * r) % p) as usize]) {
            count += 1;
            if r != 1 {
                gens.push(h);
            }
        }
    }
    let order = seed.centralizer_order() * count;
    let stabilizer = cu.group().subgroup(gens).with_known_order(order);
    let mut met = vec![false; cu.num_seeds()];
    for &a in &members {
        if let Some(k) = cu.seed_of(&t.pow(a as i64)) {
            met[k] = true;
        }
    }
    let delta = cu.group().subgroup(vec![t.clone()]).with_known_order(p as u128);
    report(
        cu,
        &stabilizer,
        &delta,
        members.len() as u128,
        &met,
        list.is_complete(),
        Method::CyclicSylowShortcut,
    )
}

fn report(
    cu: &ClassUnion,
    stabilizer: &PermGroup,
    delta: &PermGroup,
    lambda_size: u128,
    met: &[bool],
    complete: bool,
    method: Method,
) -> ComponentReport {
    let connected = if !complete {
        Verdict::Unknown
    } else if stabilizer.order() == cu.group().order() && met.iter().all(|&m| m) {
        Verdict::Connected
    } else {
        Verdict::Disconnected
    };
    let seeds = (0..cu.num_seeds())
        .map(|k| {
            let s = cu.seed(k);
            SeedReport {
                fingerprint: s.fingerprint.clone(),
                class_size: s.class_size,
                centralizer_order: s.centralizer_order(),
                met: met[k],
            }
        })
        .collect();
    ComponentReport {
        p: cu.p(),
        group_order: cu.group().order(),
        rational: cu.is_rational(),
        seeds,
        lambda_size,
        stabilizer_order: stabilizer.order(),
        stabilizer_gens: stabilizer.gens().to_vec(),
        delta: structure_probe(delta, cu.p()),
        connected,
        method,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpeVerdict {
    True,
    False,
    Unknown,
}

impl SpeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            SpeVerdict::True => "true",
            SpeVerdict::False => "false",
            SpeVerdict::Unknown => "unknown",
        }
    }
}

/// `G` has a strongly `p`-embedded subgroup exactly when the graph on all
/// elements of order `p` is disconnected.
pub fn strongly_p_embedded(classes: ClassList) -> Result<SpeVerdict, GraphError> {
    if classes.is_empty() {
        return Err(GraphError::NoClasses(classes.p));
    }
    let cu = ClassUnion::all(classes)?;
    Ok(match analyze(&cu)?.connected {
        Verdict::Connected => SpeVerdict::False,
        Verdict::Disconnected => SpeVerdict::True,
        Verdict::Unknown => SpeVerdict::Unknown,
    })
}
