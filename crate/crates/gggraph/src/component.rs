//! The set-stabilizer `N_G(Λ)` of the connected component `Λ` of the
//! graph on `𝒞` containing `t`.
//!
//! Breadth-first search over the classes met by `Λ`. Each met class `k`
//! carries `x_k` with `s_k = t_k^{x_k}` in `Λ`, so
//! `C_G(s_k) = C_G(t_k)^{x_k}` lies in `N_G(Λ)`. The neighbours of `t_k`
//! up to `C_G(t_k)`-conjugacy are listed as `(u, k', y)` with
//! `t_{k'}^y = u`; then `u^{x_k}` is a neighbour of `s_k`. A class met for
//! the first time gets `x_{k'} = y x_k`, a class met again gives the
//! stabilizer element `x_{k'}^{-1} y x_k`.

use std::collections::{HashSet, VecDeque};

use classops::{classes_of_order_p, sylow_p};
use permcore::{Perm, PermGroup};

use crate::error::GraphError;
use crate::union::ClassUnion;

/// Centralizers up to this order have their order-`p` classes found by
/// enumeration.
const LOCAL_ENUMERATION_BOUND: u128 = 50_000;

#[derive(Clone, Debug)]
pub struct Neighbor {
    pub rep: Perm,
    /// Seed index of the class of `rep`.
    pub seed: usize,
    /// `t_seed^conj = rep`.
    pub conj: Perm,
}

#[derive(Clone, Debug)]
pub struct NeighborReps {
    pub reps: Vec<Neighbor>,
    /// False when the local class list was not certified.
    pub complete: bool,
}

/// Classes of elements of order `p` in `c`, by orbit enumeration.
fn local_class_reps(c: &PermGroup, p: u64) -> Result<(Vec<Perm>, bool), GraphError> {
    if c.order() <= LOCAL_ENUMERATION_BOUND {
        let mut elts: Vec<Perm> = Vec::new();
        c.for_each_element(|x| {
            if x.order() == p as u128 {
                elts.push(x.clone());
            }
        });
        return Ok((orbit_reps(&elts, c.gens()), true));
    }
    let list = classes_of_order_p(c, p)?;
    let complete = list.is_complete();
    Ok((list.classes.into_iter().map(|k| k.rep).collect(), complete))
}

/// One representative per orbit of the conjugation action of `gens` on
/// `elts`, which must be closed under it.
pub(crate) fn orbit_reps(elts: &[Perm], gens: &[Perm]) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::with_capacity(elts.len());
    let mut reps = Vec::new();
    for e in elts {
        if seen.contains(e) {
            continue;
        }
        reps.push(e.clone());
        seen.insert(e.clone());
        let mut stack = vec![e.clone()];
        while let Some(a) = stack.pop() {
            for g in gens {
                let b = a.conj(g);
                if seen.insert(b.clone()) {
                    stack.push(b);
                }
            }
        }
    }
    reps
}

/// Neighbours of `t_k` in `𝒞`, one per `C_G(t_k)`-orbit.
pub fn neighbor_orbit_reps(cu: &ClassUnion, k: usize) -> Result<NeighborReps, GraphError> {
    let seed = cu.seed(k);
    let t = &seed.rep;
    let (reps, complete) = local_class_reps(&seed.centralizer, cu.p())?;
    let mut out = Vec::new();
    for u in reps {
        if &u == t {
            continue;
        }
        let Some((j, h)) = cu.seed_with_conjugator(&u) else {
            continue;
        };
        if cu.adjacent_unchecked(t, &u) {
            out.push(Neighbor {
                rep: u,
                seed: j,
                conj: h,
            });
        }
    }
    Ok(NeighborReps {
        reps: out,
        complete,
    })
}

/// Neighbours of `t` (a single class) found inside a Sylow subgroup `S`
/// of `C_G(t)`, one per `S`-orbit. Every component element adjacent to `t`
/// is `C_G(t)`-conjugate into `S`, so these suffice for the stabilizer.
pub fn sylow_neighbor_reps(cu: &ClassUnion, k: usize) -> Result<Vec<Perm>, GraphError> {
    let seed = cu.seed(k);
    let t = &seed.rep;
    let s = sylow_p(&seed.centralizer, cu.p())?;
    if s.order() > LOCAL_ENUMERATION_BOUND {
        return Err(GraphError::TooLarge {
            what: "Sylow subgroup of the centralizer",
            size: s.order(),
            bound: LOCAL_ENUMERATION_BOUND,
        });
    }
    let mut elts: Vec<Perm> = Vec::new();
    s.for_each_element(|x| {
        if x.order() == cu.p() as u128 {
            elts.push(x.clone());
        }
    });
    let reps = orbit_reps(&elts, s.gens());
    Ok(reps
        .into_iter()
        .filter(|u| u != t && cu.seed_of(u).is_some() && cu.adjacent_unchecked(t, u))
        .collect())
}

#[derive(Clone, Debug)]
pub struct Component {
    pub stabilizer: PermGroup,
    /// `x_k` for every class met by the component, `None` otherwise.
    pub met: Vec<Option<Perm>>,
    /// False when some class list along the way was not certified.
    pub complete: bool,
}

impl Component {
    /// The component elements `s_k = t_k^{x_k}` chosen for the met classes.
    pub fn met_elements(&self, cu: &ClassUnion) -> Vec<Perm> {
        self.met
            .iter()
            .enumerate()
            .filter_map(|(k, x)| x.as_ref().map(|x| cu.seed(k).rep.conj(x)))
            .collect()
    }

    /// `|Λ| = sum over met classes of |N| / |C_G(t_k)|`.
    pub fn lambda_size(&self, cu: &ClassUnion) -> u128 {
        let n = self.stabilizer.order();
        self.met
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_some())
            .map(|(k, _)| n / cu.seed(k).centralizer_order())
            .sum()
    }

    /// `Δ`: the normal closure in `N` of the met elements.
    pub fn delta(&self, cu: &ClassUnion) -> PermGroup {
        self.stabilizer.normal_closure(&self.met_elements(cu))
    }
}

pub fn component_stabilizer(cu: &ClassUnion) -> Result<Component, GraphError> {
    let g = cu.group();
    let m = cu.num_seeds();
    let mut met: Vec<Option<Perm>> = vec![None; m];
    met[0] = Some(g.identity());
    let mut queue = VecDeque::from([0usize]);
    let mut gens: Vec<Perm> = Vec::new();
    let mut seen_gens: HashSet<Perm> = HashSet::new();
    let mut complete = cu.class_list().is_complete();
    let mut push = |x: Perm, gens: &mut Vec<Perm>| {
        if !x.is_identity() && seen_gens.insert(x.clone()) {
            gens.push(x);
        }
    };
    while let Some(k) = queue.pop_front() {
        let xk = met[k].clone().expect("queued classes are met");
        for c in cu.seed(k).centralizer.gens() {
            push(c.conj(&xk), &mut gens);
        }
        let nb = neighbor_orbit_reps(cu, k)?;
        complete &= nb.complete;
        for n in nb.reps {
            let yx = &n.conj * &xk;
            match &met[n.seed] {
                None => {
                    met[n.seed] = Some(yx);
                    queue.push_back(n.seed);
                }
                Some(xj) => push(&xj.inverse() * &yx, &mut gens),
            }
        }
    }
    let stabilizer = g.subgroup(gens);
    let comp = Component {
        stabilizer,
        met,
        complete,
    };
    if m == 1 {
        assert_eq!(
            comp.lambda_size(cu) * cu.seed(0).centralizer_order(),
            comp.stabilizer.order(),
            "component size times centralizer order"
        );
    }
    Ok(comp)
}

/// The stabilizer for a single class from neighbours inside a Sylow
/// subgroup of `C_G(t)`: `N = <C_G(t), h_w>` with `t^{h_w} = w` for one
/// neighbour `w` per Sylow orbit.
pub fn component_stabilizer_sylow(cu: &ClassUnion) -> Result<PermGroup, GraphError> {
    if cu.num_seeds() != 1 {
        return Err(GraphError::BadSubgroup(
            "the Sylow variant needs a single class".into(),
        ));
    }
    let g = cu.group();
    let seed = cu.seed(0);
    let mut gens: Vec<Perm> = seed.centralizer.gens().to_vec();
    for w in sylow_neighbor_reps(cu, 0)? {
        let (_, h) = cu
            .seed_with_conjugator(&w)
            .expect("neighbours lie in the class");
        gens.push(h);
    }
    Ok(g.subgroup(gens))
}
