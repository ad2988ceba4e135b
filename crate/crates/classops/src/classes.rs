//! Conjugacy classes of elements of prime order.
//!
//! Every element of order `p` is conjugate into a fixed Sylow `p`-subgroup
//! `S`, so the classes are found by enumerating `S`, reducing its order-`p`
//! elements to `S`-classes, and fusing those in `G` by conjugacy tests. The
//! list is complete once `S` is known to have full order. For groups up to
//! [`ClassOptions::count_bound`] the class sizes are also checked against a
//! direct count of order-`p` elements.
//!
//! Fingerprints have the form `o{order}s{size}{letter}`. The letter separates
//! classes with equal order and size: they are sorted by cycle type and then
//! by which class is hit first by a fixed pseudo-random walk on the group
//! generators, so labels depend only on the generators, never on the
//! representatives the enumeration happened to pick.

use std::collections::HashSet;

use permcore::random::ProductReplacement;
use permcore::{is_prime, p_part, Perm, PermGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backtrack::{centralizer_unchecked, conjugator_unchecked};
use crate::error::ClassError;
use crate::structure::ENUMERATION_BOUND;
use crate::sylow::sylow_p;

const FINGERPRINT_SEED: u64 = 0x00c1_a55e_5eed;

#[derive(Clone, Debug)]
pub struct ConjClassRep {
    pub rep: Perm,
    pub centralizer: PermGroup,
    pub class_size: u128,
    pub elt_order: u128,
    pub cycle_type: Vec<usize>,
    pub fingerprint: String,
}

impl ConjClassRep {
    pub fn centralizer_order(&self) -> u128 {
        self.centralizer.order()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Class sizes add up to a direct count of the elements of order `p`.
    BruteForceCount,
    /// Every order-`p` element of a full Sylow subgroup was matched to a class.
    SylowCover,
    /// Classes possibly incomplete.
    Incomplete,
}

#[derive(Clone, Debug)]
pub struct ClassOptions {
    /// Groups up to this order also get the direct element count.
    pub count_bound: u128,
    /// Walk length cap when ordering tied fingerprints.
    pub fingerprint_samples: usize,
}

impl Default for ClassOptions {
    fn default() -> Self {
        ClassOptions {
            count_bound: 2_000_000,
            fingerprint_samples: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassList {
    pub group: PermGroup,
    pub p: u64,
    pub classes: Vec<ConjClassRep>,
    pub certificate: Certificate,
}

impl ClassList {
    pub fn is_complete(&self) -> bool {
        self.certificate != Certificate::Incomplete
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn by_fingerprint(&self, fp: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.fingerprint == fp)
    }

    /// Total number of elements of order `p`.
    pub fn element_count(&self) -> u128 {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// Candidate classes for `u` after the cheap invariants.
    fn candidates(&self, u: &Perm, with_centralizer: bool) -> Vec<usize> {
        let ct = u.cycle_type();
        let mut cand: Vec<usize> = (0..self.classes.len())
            .filter(|&i| self.classes[i].cycle_type == ct)
            .collect();
        if with_centralizer && cand.len() > 1 {
            let c = centralizer_unchecked(&self.group, u).order();
            cand.retain(|&i| self.classes[i].centralizer.order() == c);
        }
        cand
    }

    /// Index of the class containing `u`, or `None` when `u` does not have
    /// order `p` or lies in no listed class. `u` must belong to the group.
    pub fn identify(&self, u: &Perm) -> Option<usize> {
        if u.order() != self.p as u128 {
            return None;
        }
        let cand = self.candidates(u, true);
        for (k, &i) in cand.iter().enumerate() {
            if k + 1 == cand.len() && self.is_complete() {
                return Some(i);
            }
            let c = &self.classes[i];
            if conjugator_unchecked(&self.group, u, &c.rep, c.centralizer.gens()).is_some() {
                return Some(i);
            }
        }
        None
    }

    /// Class index `i` and `g` with `rep_i^g = u`.
    pub fn identify_with_conjugator(&self, u: &Perm) -> Option<(usize, Perm)> {
        if u.order() != self.p as u128 {
            return None;
        }
        for i in self.candidates(u, true) {
            let c = &self.classes[i];
            if let Some(d) = conjugator_unchecked(&self.group, u, &c.rep, c.centralizer.gens()) {
                return Some((i, d.inverse()));
            }
        }
        None
    }
}

pub fn classes_of_order_p(g: &PermGroup, p: u64) -> Result<ClassList, ClassError> {
    classes_of_order_p_with(g, p, &ClassOptions::default())
}

pub fn classes_of_order_p_with(
    g: &PermGroup,
    p: u64,
    opts: &ClassOptions,
) -> Result<ClassList, ClassError> {
    if !is_prime(p) {
        return Err(ClassError::NotPrime(p));
    }
    let order = g.order();
    let mut list = ClassList {
        group: g.clone(),
        p,
        classes: Vec::new(),
        certificate: Certificate::SylowCover,
    };
    if p_part(order, p as u128) == 1 {
        return Ok(list);
    }
    let s = sylow_p(g, p)?;
    if s.order() > ENUMERATION_BOUND {
        return Err(ClassError::TooLarge {
            order: s.order(),
            bound: ENUMERATION_BOUND,
        });
    }
    for srep in sylow_class_reps(&s, p) {
        if list.identify_reps_only(&srep).is_some() {
            continue;
        }
        let cent = centralizer_unchecked(g, &srep);
        let size = order / cent.order();
        list.classes.push(ConjClassRep {
            cycle_type: srep.cycle_type(),
            elt_order: p as u128,
            rep: srep,
            centralizer: cent,
            class_size: size,
            fingerprint: String::new(),
        });
    }
    if order <= opts.count_bound {
        let mut count = 0u128;
        g.for_each_element(|x| {
            if !x.is_identity() && x.pow(p as i64).is_identity() {
                count += 1;
            }
        });
        list.certificate = if count == list.element_count() {
            Certificate::BruteForceCount
        } else {
            Certificate::Incomplete
        };
    }
    assign_fingerprints(&mut list, opts.fingerprint_samples);
    Ok(list)
}

impl ClassList {
    /// Membership among the classes found so far, during enumeration.
    fn identify_reps_only(&self, u: &Perm) -> Option<usize> {
        let cand = self.candidates(u, true);
        cand.into_iter().find(|&i| {
            let c = &self.classes[i];
            conjugator_unchecked(&self.group, u, &c.rep, c.centralizer.gens()).is_some()
        })
    }
}

/// Representatives of the `S`-classes of elements of order `p` in `s`.
fn sylow_class_reps(s: &PermGroup, p: u64) -> Vec<Perm> {
    let mut elts: Vec<Perm> = Vec::new();
    s.for_each_element(|x| {
        if !x.is_identity() && x.pow(p as i64).is_identity() {
            elts.push(x.clone());
        }
    });
    elts.sort();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    for x in elts {
        if seen.contains(&x) {
            continue;
        }
        seen.insert(x.clone());
        let mut stack = vec![x.clone()];
        while let Some(a) = stack.pop() {
            for h in s.gens() {
                let b = a.conj(h);
                if seen.insert(b.clone()) {
                    stack.push(b);
                }
            }
        }
        reps.push(x);
    }
    reps
}

fn letters(i: usize) -> String {
    // a..z, then aa, ab, ...
    let mut i = i;
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

fn assign_fingerprints(list: &mut ClassList, max_samples: usize) {
    let n = list.classes.len();
    let key = |c: &ConjClassRep| (c.elt_order, c.class_size);
    let tied: Vec<bool> = (0..n)
        .map(|i| (0..n).any(|j| j != i && key(&list.classes[j]) == key(&list.classes[i])))
        .collect();
    let mut hit: Vec<Option<usize>> = vec![None; n];
    let unresolved = |hit: &[Option<usize>]| {
        (0..n).any(|i| {
            tied[i]
                && hit[i].is_none()
                && (0..n).any(|j| {
                    j != i && tied[j] && hit[j].is_none() && key(&list.classes[j]) == key(&list.classes[i])
                })
        })
    };
    if tied.iter().any(|&t| t) {
        let g = &list.group;
        let mut rng = ChaCha8Rng::seed_from_u64(FINGERPRINT_SEED);
        let mut walk = ProductReplacement::new(g.gens(), g.degree(), &mut rng);
        let p = list.p as u128;
        for sample in 0..max_samples {
            if !unresolved(&hit) {
                break;
            }
            let w = walk.next(&mut rng);
            let o = w.order();
            if !o.is_multiple_of(p) {
                continue;
            }
            let e = w.pow((o / p) as i64);
            let ct = e.cycle_type();
            let wanted = (0..n).any(|i| tied[i] && hit[i].is_none() && list.classes[i].cycle_type == ct);
            if !wanted {
                continue;
            }
            if let Some(i) = list.identify(&e) {
                if hit[i].is_none() {
                    hit[i] = Some(sample);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (ca, cb) = (&list.classes[a], &list.classes[b]);
        (ca.class_size, ca.elt_order, std::cmp::Reverse(&ca.cycle_type))
            .cmp(&(cb.class_size, cb.elt_order, std::cmp::Reverse(&cb.cycle_type)))
            .then(hit[a].unwrap_or(usize::MAX).cmp(&hit[b].unwrap_or(usize::MAX)))
            .then(ca.rep.cmp(&cb.rep))
    });
    let mut classes: Vec<ConjClassRep> = order.iter().map(|&i| list.classes[i].clone()).collect();
    let mut idx = 0;
    while idx < classes.len() {
        let k = key(&classes[idx]);
        let mut j = idx;
        while j < classes.len() && key(&classes[j]) == k {
            classes[j].fingerprint = format!("o{}s{}{}", k.0, k.1, letters(j - idx));
            j += 1;
        }
        idx = j;
    }
    list.classes = classes;
}

/// Primes dividing `n`, increasing.
pub fn prime_divisors(n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut q = 2u128;
    while q * q <= m {
        if m.is_multiple_of(q) {
            out.push(q as u64);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m as u64);
    }
    out
}
