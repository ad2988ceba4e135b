//! Definitional coefficient counts in small permutation groups, and the
//! matching of table columns to group classes that the comparison needs.

use std::collections::HashSet;

use permcore::{Perm, PermGroup};

use crate::error::TableError;
use crate::table::CharacterTable;

/// Default cap on the classes enumerated by [`brute_force_coeff`].
pub const BRUTE_BOUND: usize = 100_000;

/// Groups up to this order may be split into classes by enumeration.
pub const GROUP_BOUND: u128 = 100_000;

fn class_of(g: &PermGroup, x: &Perm, bound: usize) -> Result<HashSet<Perm>, TableError> {
    let mut seen = HashSet::new();
    seen.insert(x.clone());
    let mut stack = vec![x.clone()];
    while let Some(a) = stack.pop() {
        for s in g.gens() {
            let b = a.conj(s);
            if seen.insert(b.clone()) {
                if seen.len() > bound {
                    return Err(TableError::TooLarge {
                        size: seen.len(),
                        bound,
                    });
                }
                stack.push(b);
            }
        }
    }
    Ok(seen)
}

/// Counts `x` in the class of `x1` with `x^-1 t` in the class of `x2`.
pub fn brute_force_coeff(g: &PermGroup, x1: &Perm, x2: &Perm, t: &Perm, bound: usize) -> Result<u64, TableError> {
    let c1 = class_of(g, x1, bound)?;
    let c2 = class_of(g, x2, bound)?;
    Ok(c1.iter().filter(|x| c2.contains(&(&x.inverse() * t))).count() as u64)
}

#[derive(Clone, Debug)]
pub struct GroupClass {
    pub rep: Perm,
    pub elt_order: u128,
    pub elements: HashSet<Perm>,
}

impl GroupClass {
    pub fn size(&self) -> u128 {
        self.elements.len() as u128
    }
}

/// All conjugacy classes of a small group, identity first, by enumeration.
pub fn all_classes(g: &PermGroup) -> Result<Vec<GroupClass>, TableError> {
    let order = g.order();
    if order > GROUP_BOUND {
        return Err(TableError::TooLarge {
            size: usize::try_from(order).unwrap_or(usize::MAX),
            bound: GROUP_BOUND as usize,
        });
    }
    let mut elements = g.elements();
    elements.sort_by_key(|e| (e.order(), e.cycle_type()));
    let mut out: Vec<GroupClass> = Vec::new();
    for e in elements {
        if out.iter().any(|c| c.elements.contains(&e)) {
            continue;
        }
        let members = class_of(g, &e, usize::MAX)?;
        out.push(GroupClass {
            elt_order: e.order(),
            rep: e,
            elements: members,
        });
    }
    Ok(out)
}

/// Assigns a group class to every table column so that element orders,
/// class sizes and the table's power maps agree. Columns these invariants
/// cannot tell apart get the first consistent assignment; for Galois
/// conjugate columns any choice gives the same coefficients.
pub fn match_table_to_group(t: &CharacterTable, classes: &[GroupClass]) -> Result<Vec<usize>, TableError> {
    let n = t.num_classes();
    if classes.len() != n {
        return Err(TableError::Precondition(format!(
            "table has {n} classes, group has {}",
            classes.len()
        )));
    }
    let mut primes: Vec<u64> = t
        .classes
        .iter()
        .flat_map(|c| c.power_maps.iter().map(|&(p, _)| p))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    // power_of[j] lists (p, k): the p-th power of group class j is class k
    let power_of: Vec<Vec<(u64, usize)>> = classes
        .iter()
        .map(|c| {
            primes
                .iter()
                .map(|&p| {
                    let q = c.rep.pow(p as i64);
                    let k = classes
                        .iter()
                        .position(|d| d.elements.contains(&q))
                        .expect("classes cover the group");
                    (p, k)
                })
                .collect()
        })
        .collect();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(t, classes, &power_of, 0, &mut assign, &mut used) {
        Ok(assign)
    } else {
        Err(TableError::Precondition(format!("table {} does not fit the group", t.name)))
    }
}

fn consistent(t: &CharacterTable, power_of: &[Vec<(u64, usize)>], assign: &[usize]) -> bool {
    (0..assign.len()).filter(|&c| assign[c] != usize::MAX).all(|c| {
        t.classes[c].power_maps.iter().all(|&(p, tc)| {
            assign[tc] == usize::MAX || power_of[assign[c]].iter().any(|&(q, k)| q == p && k == assign[tc])
        })
    })
}

fn search(
    t: &CharacterTable,
    classes: &[GroupClass],
    power_of: &[Vec<(u64, usize)>],
    col: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if col == assign.len() {
        return true;
    }
    let info = &t.classes[col];
    for j in 0..classes.len() {
        if used[j] || classes[j].elt_order != info.elt_order as u128 || info.size != classes[j].size().into() {
            continue;
        }
        assign[col] = j;
        used[j] = true;
        if consistent(t, power_of, assign) && search(t, classes, power_of, col + 1, assign, used) {
            return true;
        }
        assign[col] = usize::MAX;
        used[j] = false;
    }
    false
}
