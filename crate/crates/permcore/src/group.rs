use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::chain::StabChain;
use crate::error::PermError;
use crate::perm::Perm;

/// Default seed for the randomized parts of chain construction.
pub const DEFAULT_SEED: u64 = 0x5eed_1234;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and never changes afterwards, so groups can be shared freely
/// between threads.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    known_order: Option<u128>,
    seed: u64,
    chain: OnceLock<Arc<StabChain>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermGroup {
            degree,
            gens,
            known_order: None,
            seed: DEFAULT_SEED,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Group whose chain is already known.
    pub fn from_chain(chain: StabChain) -> Self {
        let degree = chain.degree();
        let gens = chain.strong_gens().to_vec();
        let known_order = Some(chain.order());
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(chain));
        PermGroup {
            degree,
            gens,
            known_order,
            seed: DEFAULT_SEED,
            chain: cell,
        }
    }

    /// Records the order in advance; chain construction then stops as soon as
    /// it is reached. Only for orders proved by other means.
    pub fn with_known_order(mut self, order: u128) -> Self {
        self.known_order = Some(order);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            Arc::new(StabChain::build(
                self.degree,
                &self.gens,
                &[],
                self.known_order,
                self.seed,
            ))
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Perm::is_identity)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn check_member(&self, g: &Perm) -> Result<(), PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, g.degree()));
        }
        if !self.contains(g) {
            return Err(PermError::NotInGroup);
        }
        Ok(())
    }

    /// Uniformly random element, driven by the caller's RNG.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        self.chain().random_element(rng)
    }

    /// A fresh chain whose base starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::build(
            self.degree,
            self.chain().strong_gens(),
            prefix,
            Some(self.order()),
            self.seed,
        )
    }

    /// Subgroup generated by `gens` inside the same symmetric group.
    pub fn subgroup(&self, gens: Vec<Perm>) -> PermGroup {
        PermGroup::new(self.degree, gens)
            .expect("subgroup generators share the degree")
            .with_seed(self.seed)
    }

    pub fn for_each_element<F: FnMut(&Perm)>(&self, f: F) {
        self.chain().for_each_element(f)
    }

    pub fn elements(&self) -> Vec<Perm> {
        let mut out = Vec::with_capacity(self.order() as usize);
        self.for_each_element(|g| out.push(g.clone()));
        out
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(&self.gens, self.degree, point)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if !seen[s] {
                let o = self.orbit(s);
                for &x in &o {
                    seen[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Whether `self` is normalized by every generator of `other`.
    pub fn is_normalized_by(&self, other: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|n| other.gens.iter().all(|g| self.contains(&n.conj(g))))
    }

    /// Smallest normal subgroup of `self` containing `seeds`: generators are
    /// conjugated by the generators of `self` until nothing new appears.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermGroup {
        let mut gens: Vec<Perm> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        let mut chain = StabChain::build(self.degree, &gens, &[], None, self.seed);
        let mut queue = gens.clone();
        while !queue.is_empty() {
            let mut fresh = Vec::new();
            for x in &queue {
                for g in &self.gens {
                    let c = x.conj(g);
                    if !chain.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            chain.extend(&fresh, self.seed);
            gens.extend(fresh.iter().cloned());
            queue = fresh;
        }
        let order = chain.order();
        let g = PermGroup::new(self.degree, gens)
            .expect("same degree")
            .with_seed(self.seed)
            .with_known_order(order);
        let _ = g.chain.set(Arc::new(chain));
        g
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = &(&a.inverse() * &b.inverse()) * &(a * b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Subgroup generated by `self` together with `extra`.
    pub fn closure(&self, extra: &[Perm]) -> PermGroup {
        let mut chain = self.chain().clone();
        chain.extend(extra, self.seed);
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|g| !g.is_identity()).cloned());
        let order = chain.order();
        let g = PermGroup::new(self.degree, gens)
            .expect("same degree")
            .with_seed(self.seed)
            .with_known_order(order);
        let _ = g.chain.set(Arc::new(chain));
        g
    }
}

pub fn orbit_of(gens: &[Perm], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        head += 1;
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
    }
    orbit
}

/// Elements of `<gens>` by breadth-first closure; only for tiny groups and tests.
pub fn closure_elements(gens: &[Perm], degree: usize) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}
