//! Explicit enumeration of the graph, for checking the stabilizer method
//! on small cases.

use std::collections::HashMap;

use permcore::{Perm, PermGroup};

use crate::analyze::{analyze, analyze_with, ComponentReport, Strategy, Verdict};
use crate::conj_orbit;
use crate::error::GraphError;
use crate::union::ClassUnion;

/// Default vertex bound for [`brute_force_component`].
pub const ORACLE_BOUND: u128 = 20_000;

#[derive(Clone, Debug)]
pub struct OracleResult {
    /// The component of `t`, sorted.
    pub component: Vec<Perm>,
    pub lambda_size: u128,
    pub stabilizer_order: u128,
    pub num_components: usize,
    pub connected: bool,
    pub seeds_met: Vec<bool>,
}

/// All vertices of `𝒞` with the seed index of each.
pub fn enumerate_union(cu: &ClassUnion, bound: u128) -> Result<Vec<(Perm, usize)>, GraphError> {
    let size = cu.size();
    if size > bound {
        return Err(GraphError::TooLarge {
            what: "class union",
            size,
            bound,
        });
    }
    let gens = cu.group().gens();
    let mut out: Vec<(Perm, usize)> = Vec::with_capacity(size as usize);
    for k in 0..cu.num_seeds() {
        out.extend(conj_orbit(&cu.seed(k).rep, gens).into_iter().map(|v| (v, k)));
    }
    Ok(out)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Components by pairwise adjacency tests. The stabilizer order is
/// `|G|` over the number of components meeting `t^G`, since `G` permutes
/// those transitively.
pub fn brute_force_component(cu: &ClassUnion, bound: u128) -> Result<OracleResult, GraphError> {
    let verts = enumerate_union(cu, bound)?;
    let index: HashMap<&Perm, usize> = verts.iter().enumerate().map(|(i, (v, _))| (v, i)).collect();
    let n = verts.len();
    let p = cu.p();
    let mut parent: Vec<usize> = (0..n).collect();
    let inverses: Vec<Perm> = verts.iter().map(|(v, _)| v.inverse()).collect();
    for i in 0..n {
        let u = &verts[i].0;
        for j in (i + 1)..n {
            let v = &verts[j].0;
            if !u.commutes_with(v) {
                continue;
            }
            let adj = if p == 2 {
                index.contains_key(&(u * v))
            } else {
                index.contains_key(&(u * &inverses[j])) || index.contains_key(&(&inverses[i] * v))
            };
            if adj {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let root_t = roots[0];
    let mut component: Vec<Perm> = Vec::new();
    let mut seeds_met = vec![false; cu.num_seeds()];
    for (i, (v, k)) in verts.iter().enumerate() {
        if roots[i] == root_t {
            component.push(v.clone());
            seeds_met[*k] = true;
        }
    }
    component.sort();
    let mut all_roots = roots.clone();
    all_roots.sort_unstable();
    all_roots.dedup();
    let mut t_roots: Vec<usize> = verts
        .iter()
        .enumerate()
        .filter(|(_, (_, k))| *k == 0)
        .map(|(i, _)| roots[i])
        .collect();
    t_roots.sort_unstable();
    t_roots.dedup();
    let order = cu.group().order();
    Ok(OracleResult {
        lambda_size: component.len() as u128,
        component,
        stabilizer_order: order / t_roots.len() as u128,
        num_components: all_roots.len(),
        connected: all_roots.len() == 1,
        seeds_met,
    })
}

/// Every non-identity element of `h` lies in `𝒞`.
pub fn is_pure(cu: &ClassUnion, h: &PermGroup) -> Result<bool, GraphError> {
    let bound = classops::structure::ENUMERATION_BOUND;
    if h.order() > bound {
        return Err(GraphError::TooLarge {
            what: "subgroup",
            size: h.order(),
            bound,
        });
    }
    for g in h.gens() {
        cu.group().check_member(g)?;
    }
    let mut pure = true;
    h.for_each_element(|x| {
        if pure && !x.is_identity() && cu.seed_of(x).is_none() {
            pure = false;
        }
    });
    Ok(pure)
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub report: ComponentReport,
    /// The stabilizer search run without the cyclic Sylow shortcut.
    pub general: ComponentReport,
    pub oracle: OracleResult,
}

impl Comparison {
    fn matches(&self, r: &ComponentReport) -> bool {
        let met: Vec<bool> = r.seeds.iter().map(|s| s.met).collect();
        r.lambda_size == self.oracle.lambda_size
            && r.stabilizer_order == self.oracle.stabilizer_order
            && (r.connected == Verdict::Connected) == self.oracle.connected
            && r.connected != Verdict::Unknown
            && met == self.oracle.seeds_met
    }

    pub fn agrees(&self) -> bool {
        self.matches(&self.report) && self.matches(&self.general)
    }
}

/// Runs [`analyze`] both ways and the brute-force oracle on the same union.
pub fn compare_with_oracle(cu: &ClassUnion, bound: u128) -> Result<Comparison, GraphError> {
    let oracle = brute_force_component(cu, bound)?;
    Ok(Comparison {
        report: analyze(cu)?,
        general: analyze_with(cu, Strategy::Stabilizer)?,
        oracle,
    })
}
