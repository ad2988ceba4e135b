//! Stabilizer chains (base and strong generating set).
//!
//! Construction is randomized Schreier-Sims followed by a deterministic pass
//! that sifts every Schreier generator. When the group order is known in
//! advance the random phase alone is exact: every partial fundamental orbit is
//! contained in the true one, so a matching orbit product proves completeness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Perm;
use crate::random::ProductReplacement;

const NONE: u32 = u32::MAX;
/// Consecutive trivial sifts that end the random phase when the order is unknown.
const RANDOM_QUIET: usize = 24;
/// Upper bound on random sifts when a known order is never reached.
const RANDOM_CAP: usize = 20_000;

#[derive(Clone, Debug)]
pub struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    trans: Vec<Perm>,
    trans_inv: Vec<Perm>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            pos,
            trans: vec![Perm::identity(degree)],
            trans_inv: vec![Perm::identity(degree)],
        }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Strong generators fixing all earlier base points.
    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    #[inline]
    pub fn in_orbit(&self, x: usize) -> bool {
        self.pos[x] != NONE
    }

    /// `u` with `base^u = x`.
    pub fn transversal(&self, x: usize) -> Option<&Perm> {
        match self.pos[x] {
            NONE => None,
            i => Some(&self.trans[i as usize]),
        }
    }

    pub fn transversal_inv(&self, x: usize) -> Option<&Perm> {
        match self.pos[x] {
            NONE => None,
            i => Some(&self.trans_inv[i as usize]),
        }
    }

    fn push_point(&mut self, y: usize, u: Perm) {
        self.pos[y] = self.orbit.len() as u32;
        self.orbit.push(y as u32);
        self.trans_inv.push(u.inverse());
        self.trans.push(u);
    }

    /// Adds a generator and extends the orbit and transversal in place.
    fn add_gen(&mut self, g: Perm) {
        self.gens.push(g);
        let gi = self.gens.len() - 1;
        let mut frontier = Vec::new();
        for k in 0..self.orbit.len() {
            let x = self.orbit[k] as usize;
            let y = self.gens[gi].image(x);
            if self.pos[y] == NONE {
                let u = &self.trans[k] * &self.gens[gi];
                self.push_point(y, u);
                frontier.push(self.orbit.len() - 1);
            }
        }
        let mut head = 0;
        while head < frontier.len() {
            let k = frontier[head];
            head += 1;
            let x = self.orbit[k] as usize;
            for s in 0..self.gens.len() {
                let y = self.gens[s].image(x);
                if self.pos[y] == NONE {
                    let u = &self.trans[k] * &self.gens[s];
                    self.push_point(y, u);
                    frontier.push(self.orbit.len() - 1);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Chain for `<gens>`. Base points are taken from `prefix` first (in that
    /// order, redundant ones dropped), then smallest moved points.
    pub fn build(
        degree: usize,
        gens: &[Perm],
        prefix: &[usize],
        known_order: Option<u128>,
        seed: u64,
    ) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let mut seen = vec![false; degree];
        for &b in prefix {
            if !seen[b] {
                seen[b] = true;
                chain.levels.push(Level::new(b, degree));
            }
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if !chain.contains(g) {
                chain.add_strong(g.clone());
            }
        }
        if !gens.is_empty() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            chain.random_phase(&gens, known_order, &mut rng);
            let exact = known_order.is_some_and(|o| chain.order() == o);
            if !exact {
                chain.verify();
            }
        }
        if let Some(o) = known_order {
            assert_eq!(
                chain.order(),
                o,
                "stabilizer chain order disagrees with the supplied group order"
            );
        }
        chain.levels.retain(|l| l.orbit.len() > 1);
        chain
    }

    pub fn trivial(degree: usize) -> StabChain {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_gens(&self) -> &[Perm] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Generators of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> &[Perm] {
        self.levels.get(k).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Order of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_order(&self, k: usize) -> u128 {
        self.levels[k.min(self.levels.len())..]
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    /// Strips `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` when it went all the way).
    pub fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(start) {
            let x = h.image(l.base);
            match l.pos[x] {
                NONE => return (h, i),
                k => {
                    if x != l.base {
                        h = &h * &l.trans_inv[k as usize];
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift_from(g, 0);
        h.is_identity()
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for l in self.levels.iter().rev() {
            let k = rng.gen_range(0..l.orbit.len());
            g = &g * &l.trans[k];
        }
        g
    }

    /// Calls `f` on every element of the group, each exactly once.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, mut f: F) {
        // Elements are the products u_k ... u_1 with u_i in the level-i transversal.
        fn rec<F: FnMut(&Perm)>(levels: &[Level], prefix: &Perm, f: &mut F) {
            match levels.split_last() {
                None => f(prefix),
                Some((l, rest)) => {
                    for u in &l.trans {
                        rec(rest, &(prefix * u), f);
                    }
                }
            }
        }
        rec(&self.levels, &Perm::identity(self.degree), &mut f);
    }

    /// Adds generators and re-establishes a complete chain.
    pub fn extend(&mut self, gens: &[Perm], seed: u64) -> bool {
        let mut grew = false;
        for g in gens {
            if g.degree() != self.degree || g.is_identity() {
                continue;
            }
            let (h, j) = self.sift_from(g, 0);
            if !h.is_identity() {
                self.add_strong_at(h, j);
                grew = true;
            }
        }
        if grew {
            let all: Vec<Perm> = self.strong_gens().to_vec();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            self.random_phase(&all, None, &mut rng);
            self.verify();
            self.levels.retain(|l| l.orbit.len() > 1);
        }
        grew
    }

    fn add_strong(&mut self, h: Perm) {
        let j = self
            .levels
            .iter()
            .position(|l| h.image(l.base) != l.base)
            .unwrap_or(self.levels.len());
        self.add_strong_at(h, j);
    }

    /// `h` fixes the first `j` base points; it becomes a strong generator of
    /// levels `0..=j`, opening a new level when `j` is past the end.
    fn add_strong_at(&mut self, h: Perm, j: usize) {
        debug_assert!(self.levels[..j.min(self.levels.len())]
            .iter()
            .all(|l| h.image(l.base) == l.base));
        if j == self.levels.len() {
            let b = h.first_moved().expect("identity passed as strong generator");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in &mut self.levels[..=j] {
            l.add_gen(h.clone());
        }
    }

    fn random_phase(&mut self, gens: &[Perm], known: Option<u128>, rng: &mut ChaCha8Rng) {
        let mut pr = ProductReplacement::new(gens, self.degree, rng);
        let mut quiet = 0;
        for _ in 0..RANDOM_CAP {
            if let Some(o) = known {
                if self.order() >= o {
                    break;
                }
            } else if quiet >= RANDOM_QUIET {
                break;
            }
            let g = pr.next(rng);
            let (h, j) = self.sift_from(&g, 0);
            if h.is_identity() {
                quiet += 1;
            } else {
                self.add_strong_at(h, j);
                quiet = 0;
            }
        }
    }

    /// Deterministic Schreier-Sims: sift every Schreier generator.
    fn verify(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.first_failing_schreier(lvl) {
                None => i -= 1,
                Some((h, j)) => {
                    self.add_strong_at(h, j);
                    i = j + 1;
                }
            }
        }
    }

    fn first_failing_schreier(&self, lvl: usize) -> Option<(Perm, usize)> {
        let l = &self.levels[lvl];
        for k in 0..l.orbit.len() {
            let x = l.orbit[k] as usize;
            for s in &l.gens {
                let y = s.image(x);
                let ky = l.pos[y] as usize;
                let sch = &(&l.trans[k] * s) * &l.trans_inv[ky];
                if sch.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(&sch, lvl + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }
}
