//! Backtrack search for elements `g` with `x^g = y`.
//!
//! The chain is rebuilt with a base running along the cycles of `x`. Once the
//! image of one point of a cycle is chosen the rest of the cycle is forced by
//! `(d^x)^g = (d^g)^y`, and every choice must also send a point to a point on
//! a `y`-cycle of the same length. There is no partition refinement; at the
//! sizes handled here the forcing does most of the work.

use permcore::{Perm, PermGroup, StabChain};

use crate::error::ClassError;

/// Base prefix: the cycles of `x` (fixed points included), the cycle
/// lengths that occur least often first, longer cycles before shorter ones
/// on ties.
fn base_prefix(x: &Perm) -> Vec<usize> {
    let n = x.degree();
    let lens = x.cycle_lengths();
    let mut count = vec![0usize; n + 1];
    for &l in &lens {
        count[l as usize] += 1;
    }
    let mut seen = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = vec![s];
        seen[s] = true;
        let mut d = x.image(s);
        while d != s {
            seen[d] = true;
            c.push(d);
            d = x.image(d);
        }
        cycles.push(c);
    }
    cycles.sort_by_key(|c| (count[c.len()], std::cmp::Reverse(c.len()), c[0]));
    cycles.concat()
}

fn orbit_mask(gens: &[Perm], n: usize, start: usize, mask: &mut [bool]) -> usize {
    if mask[start] {
        return 0;
    }
    mask[start] = true;
    let mut stack = vec![start];
    let mut added = 1;
    while let Some(a) = stack.pop() {
        for g in gens {
            let b = g.image(a);
            if !mask[b] {
                mask[b] = true;
                added += 1;
                stack.push(b);
            }
        }
    }
    debug_assert!(mask.len() == n);
    added
}

struct Search<'a> {
    chain: &'a StabChain,
    x: Vec<u32>,
    xinv: Vec<u32>,
    y: Vec<u32>,
    yinv: Vec<u32>,
    cyc_x: Vec<u32>,
    cyc_y: Vec<u32>,
    /// `fixed[k][d]`: `d` is fixed by the stabilizer of the first `k` base points.
    fixed: Vec<Vec<bool>>,
    /// Points fixed at depth `k + 1` but not at depth `k`.
    newly: Vec<Vec<u32>>,
    h: Vec<Vec<u32>>,
    hinv: Vec<Vec<u32>>,
}

impl<'a> Search<'a> {
    fn new(chain: &'a StabChain, x: &Perm, y: &Perm) -> Self {
        let n = chain.degree();
        let depth = chain.levels().len();
        let mut fixed = Vec::with_capacity(depth + 1);
        for k in 0..=depth {
            let gens = chain.stabilizer_gens(k);
            fixed.push((0..n).map(|d| gens.iter().all(|g| g.image(d) == d)).collect::<Vec<_>>());
        }
        let newly = (0..depth)
            .map(|k| {
                (0..n as u32)
                    .filter(|&d| fixed[k + 1][d as usize] && !fixed[k][d as usize])
                    .collect()
            })
            .collect();
        let id: Vec<u32> = (0..n as u32).collect();
        Search {
            chain,
            x: x.images().to_vec(),
            xinv: x.inverse().images().to_vec(),
            y: y.images().to_vec(),
            yinv: y.inverse().images().to_vec(),
            cyc_x: x.cycle_lengths(),
            cyc_y: y.cycle_lengths(),
            fixed,
            newly,
            h: vec![id.clone(); depth + 1],
            hinv: vec![id; depth + 1],
        }
    }

    fn reset(&mut self, k: usize) {
        for (i, v) in self.h[k].iter_mut().enumerate() {
            *v = i as u32;
        }
        for (i, v) in self.hinv[k].iter_mut().enumerate() {
            *v = i as u32;
        }
    }

    /// Consistency of the points already determined at depth `k`.
    fn consistent_at(&self, k: usize) -> bool {
        let (x, y, h, fix) = (&self.x, &self.y, &self.h[k], &self.fixed[k]);
        (0..x.len()).all(|d| {
            let a = x[d] as usize;
            !fix[d] || !fix[a] || h[a] == y[h[d] as usize]
        })
    }

    /// Takes `u_k` with `b_k^{u_k} = gamma` and searches below it.
    fn try_gamma(&mut self, k: usize, gamma: usize) -> Option<Perm> {
        let chain = self.chain;
        let level = &chain.levels()[k];
        let b = level.base();
        let eps = self.h[k][gamma] as usize;
        if self.cyc_x[b] != self.cyc_y[eps] {
            return None;
        }
        let u = level.transversal(gamma)?;
        let uinv = level.transversal_inv(gamma)?;
        {
            let (lo, hi) = self.h.split_at_mut(k + 1);
            let (hk, hn) = (&lo[k], &mut hi[0]);
            for (i, v) in hn.iter_mut().enumerate() {
                *v = hk[u.image(i)];
            }
            let (lo, hi) = self.hinv.split_at_mut(k + 1);
            let (hk, hn) = (&lo[k], &mut hi[0]);
            for (v, &w) in hn.iter_mut().zip(hk.iter()) {
                *v = uinv.image(w as usize) as u32;
            }
        }
        let h = &self.h[k + 1];
        let fix = &self.fixed[k + 1];
        for &d in &self.newly[k] {
            let d = d as usize;
            let a = self.x[d] as usize;
            if fix[a] && h[a] != self.y[h[d] as usize] {
                return None;
            }
            let a = self.xinv[d] as usize;
            if fix[a] && h[d] != self.y[h[a] as usize] {
                return None;
            }
        }
        self.descend(k + 1)
    }

    fn descend(&mut self, k: usize) -> Option<Perm> {
        let chain = self.chain;
        let levels = chain.levels();
        if k == levels.len() {
            return Some(Perm::from_images(self.h[k].clone()).expect("product of permutations"));
        }
        let level = &levels[k];
        let b = level.base();
        let pre = self.xinv[b] as usize;
        let post = self.x[b] as usize;
        let forced = if self.fixed[k][pre] {
            Some(self.y[self.h[k][pre] as usize] as usize)
        } else if self.fixed[k][post] {
            Some(self.yinv[self.h[k][post] as usize] as usize)
        } else {
            None
        };
        match forced {
            Some(eps) => {
                let gamma = self.hinv[k][eps] as usize;
                if level.in_orbit(gamma) {
                    self.try_gamma(k, gamma)
                } else {
                    None
                }
            }
            None => {
                for i in 0..level.orbit_len() {
                    let gamma = level.orbit()[i] as usize;
                    if let Some(g) = self.try_gamma(k, gamma) {
                        return Some(g);
                    }
                }
                None
            }
        }
    }
}

/// `C_G(x)`. Fails when `x` is not in `g`.
pub fn centralizer(g: &PermGroup, x: &Perm) -> Result<PermGroup, ClassError> {
    g.check_member(x)?;
    Ok(centralizer_unchecked(g, x))
}

/// Subgroup search level by level from the bottom of the chain. At level
/// `k` every point of the fundamental orbit is either reached by the part of
/// the centralizer found so far, excluded together with its orbit under that
/// part, or reached by a new element found by backtracking. The order is
/// therefore the product of the final orbit lengths.
pub(crate) fn centralizer_unchecked(g: &PermGroup, x: &Perm) -> PermGroup {
    if x.is_identity() {
        return g.clone();
    }
    let n = g.degree();
    let chain = g.chain_with_base(&base_prefix(x));
    let depth = chain.levels().len();
    let mut search = Search::new(&chain, x, x);
    let mut gens_at: Vec<Vec<Perm>> = vec![Vec::new(); depth];
    let j = chain
        .levels()
        .iter()
        .position(|l| x.image(l.base()) != l.base())
        .expect("x is a nontrivial element of the group");
    gens_at[j].push(x.clone());
    let cyc = x.cycle_lengths();
    let mut order: u128 = 1;
    for k in (0..depth).rev() {
        let level = &chain.levels()[k];
        let b = level.base();
        let mut kgens: Vec<Perm> = gens_at[k..].iter().flatten().cloned().collect();
        let mut reached = vec![false; n];
        orbit_mask(&kgens, n, b, &mut reached);
        let mut failed = vec![false; n];
        for i in 0..level.orbit_len() {
            let gamma = level.orbit()[i] as usize;
            if reached[gamma] || failed[gamma] {
                continue;
            }
            let found = if cyc[gamma] == cyc[b] {
                search.reset(k);
                search.try_gamma(k, gamma)
            } else {
                None
            };
            match found {
                Some(el) => {
                    debug_assert!(el.commutes_with(x));
                    kgens.push(el.clone());
                    gens_at[k].push(el);
                    reached.iter_mut().for_each(|r| *r = false);
                    orbit_mask(&kgens, n, b, &mut reached);
                    let old: Vec<usize> = (0..n).filter(|&d| failed[d]).collect();
                    for d in old {
                        failed[d] = false;
                        orbit_mask(&kgens, n, d, &mut failed);
                    }
                }
                None => {
                    orbit_mask(&kgens, n, gamma, &mut failed);
                }
            }
        }
        order *= reached.iter().filter(|&&r| r).count() as u128;
    }
    let gens: Vec<Perm> = gens_at.into_iter().flatten().collect();
    PermGroup::new(n, gens)
        .expect("same degree")
        .with_seed(g.seed())
        .with_known_order(order)
}

/// Some `c` in `g` with `x^c = y`, or `None` when `x` and `y` are not
/// conjugate in `g`. The result is checked before it is returned.
pub fn conjugator(g: &PermGroup, x: &Perm, y: &Perm) -> Result<Option<Perm>, ClassError> {
    conjugator_with(g, x, y, &[])
}

/// As [`conjugator`], with generators of some subgroup of `C_G(y)` to prune
/// the first level of the search. Any elements commuting with `y` will do.
pub fn conjugator_with(
    g: &PermGroup,
    x: &Perm,
    y: &Perm,
    cent_y: &[Perm],
) -> Result<Option<Perm>, ClassError> {
    g.check_member(x)?;
    g.check_member(y)?;
    Ok(conjugator_unchecked(g, x, y, cent_y))
}

pub(crate) fn conjugator_unchecked(
    g: &PermGroup,
    x: &Perm,
    y: &Perm,
    cent_y: &[Perm],
) -> Option<Perm> {
    if x == y {
        return Some(g.identity());
    }
    if x.cycle_type() != y.cycle_type() || x.order() != y.order() {
        return None;
    }
    let n = g.degree();
    let chain = g.chain_with_base(&base_prefix(x));
    if chain.levels().is_empty() {
        return None;
    }
    let mut search = Search::new(&chain, x, y);
    if !search.consistent_at(0) {
        return None;
    }
    let mut hint: Vec<Perm> = cent_y.iter().filter(|c| c.commutes_with(y)).cloned().collect();
    hint.push(y.clone());
    let level = &chain.levels()[0];
    let mut tried = vec![false; n];
    for i in 0..level.orbit_len() {
        let gamma = level.orbit()[i] as usize;
        if tried[gamma] {
            continue;
        }
        orbit_mask(&hint, n, gamma, &mut tried);
        search.reset(0);
        if let Some(c) = search.try_gamma(0, gamma) {
            assert_eq!(&x.conj(&c), y, "conjugator check");
            return Some(c);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::builtin::{alternating, symmetric};

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    fn brute_centralizer_order(g: &PermGroup, x: &Perm) -> u128 {
        g.elements().iter().filter(|e| e.commutes_with(x)).count() as u128
    }

    #[test]
    fn small_centralizers() {
        let s4 = symmetric(4);
        assert_eq!(centralizer(&s4, &p(4, "(1 2)")).unwrap().order(), 4);
        let a5 = alternating(5);
        assert_eq!(centralizer(&a5, &p(5, "(1 2)(3 4)")).unwrap().order(), 4);
        assert_eq!(centralizer(&a5, &Perm::identity(5)).unwrap().order(), 60);
        assert!(centralizer(&a5, &p(5, "(1 2)")).is_err());
    }

    #[test]
    fn centralizers_match_brute_force() {
        for g in [symmetric(6), alternating(7)] {
            for x in g.elements().iter().step_by(37) {
                let c = centralizer(&g, x).unwrap();
                assert_eq!(c.order(), brute_centralizer_order(&g, x), "{x}");
                assert!(c.gens().iter().all(|h| h.commutes_with(x) && g.contains(h)));
            }
        }
    }

    #[test]
    fn conjugators() {
        let a4 = alternating(4);
        let (x, y) = (p(4, "(1 2 3)"), p(4, "(1 3 2)"));
        assert_eq!(conjugator(&a4, &x, &y).unwrap(), None);
        let s4 = symmetric(4);
        let c = conjugator(&s4, &x, &y).unwrap().unwrap();
        assert_eq!(x.conj(&c), y);
        assert_eq!(conjugator(&s4, &x, &x).unwrap(), Some(Perm::identity(4)));
        assert_eq!(conjugator(&s4, &x, &p(4, "(1 2)")).unwrap(), None);
    }

    #[test]
    fn conjugators_match_brute_force() {
        let g = alternating(6);
        let elts = g.elements();
        let x = p(6, "(1 2 3 4 5)");
        for y in elts.iter().step_by(11) {
            let brute = elts.iter().any(|c| &x.conj(c) == y);
            let found = conjugator(&g, &x, y).unwrap();
            assert_eq!(found.is_some(), brute, "{y}");
        }
    }
}
