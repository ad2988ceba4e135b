//! Unions of conjugacy classes of elements of prime order and the
//! adjacency relation of the graph on them.

use classops::{ClassList, ConjClassRep};
use permcore::{Perm, PermGroup};

use crate::error::GraphError;

/// A union `𝒞` of `G`-classes of elements of order `p`. The seeds index
/// into the full list of order-`p` classes of `G`.
#[derive(Clone, Debug)]
pub struct ClassUnion {
    classes: ClassList,
    seeds: Vec<usize>,
    rational: bool,
}

impl ClassUnion {
    /// The single class `t^G` for `t` the representative of class `idx`.
    pub fn single(classes: ClassList, idx: usize) -> Result<Self, GraphError> {
        Self::union(classes, &[idx])
    }

    /// Union of the listed classes; duplicates are ignored and the first
    /// listed class supplies the base vertex `t`.
    pub fn union(classes: ClassList, idxs: &[usize]) -> Result<Self, GraphError> {
        let mut seeds: Vec<usize> = Vec::new();
        for &i in idxs {
            if i >= classes.len() {
                return Err(GraphError::NoSuchClass(i));
            }
            if !seeds.contains(&i) {
                seeds.push(i);
            }
        }
        if seeds.is_empty() {
            return Err(GraphError::NoClasses(classes.p));
        }
        Ok(ClassUnion {
            classes,
            seeds,
            rational: false,
        })
    }

    /// The rational closure: classes of `t^a` for `1 <= a < p`.
    pub fn rational(classes: ClassList, idx: usize) -> Result<Self, GraphError> {
        if idx >= classes.len() {
            return Err(GraphError::NoSuchClass(idx));
        }
        let t = classes.classes[idx].rep.clone();
        let mut idxs = vec![idx];
        for a in 2..classes.p {
            let ta = t.pow(a as i64);
            match classes.identify(&ta) {
                Some(j) => idxs.push(j),
                None => return Err(GraphError::NotInUnion),
            }
        }
        let mut u = Self::union(classes, &idxs)?;
        u.rational = true;
        Ok(u)
    }

    /// Every class of elements of order `p`.
    pub fn all(classes: ClassList) -> Result<Self, GraphError> {
        let idxs: Vec<usize> = (0..classes.len()).collect();
        Self::union(classes, &idxs)
    }

    pub fn group(&self) -> &PermGroup {
        &self.classes.group
    }

    pub fn p(&self) -> u64 {
        self.classes.p
    }

    pub fn is_rational(&self) -> bool {
        self.rational
    }

    pub fn class_list(&self) -> &ClassList {
        &self.classes
    }

    /// Indices into the class list, base class first.
    pub fn seed_indices(&self) -> &[usize] {
        &self.seeds
    }

    pub fn seed(&self, k: usize) -> &ConjClassRep {
        &self.classes.classes[self.seeds[k]]
    }

    pub fn num_seeds(&self) -> usize {
        self.seeds.len()
    }

    /// `|𝒞|`.
    pub fn size(&self) -> u128 {
        self.seeds.iter().map(|&i| self.classes.classes[i].class_size).sum()
    }

    /// Seed index of the class of `u`, or `None` when `u` is not in `𝒞`.
    /// `u` must be an element of the group.
    pub fn seed_of(&self, u: &Perm) -> Option<usize> {
        if u.order() != self.p() as u128 || !self.plausible(u) {
            return None;
        }
        let i = self.classes.identify(u)?;
        self.seeds.iter().position(|&s| s == i)
    }

    /// Seed index `k` and `h` with `t_k^h = u`.
    pub fn seed_with_conjugator(&self, u: &Perm) -> Option<(usize, Perm)> {
        if u.order() != self.p() as u128 || !self.plausible(u) {
            return None;
        }
        let (i, h) = self.classes.identify_with_conjugator(u)?;
        let k = self.seeds.iter().position(|&s| s == i)?;
        Some((k, h))
    }

    fn plausible(&self, u: &Perm) -> bool {
        let ct = u.cycle_type();
        self.seeds.iter().any(|&i| self.classes.classes[i].cycle_type == ct)
    }

    /// Membership in `𝒞`, checking that `g` lies in the group first.
    pub fn in_class_union(&self, g: &Perm) -> Result<bool, GraphError> {
        self.group().check_member(g)?;
        Ok(self.seed_of(g).is_some())
    }

    /// Adjacency for two elements already known to be in `𝒞`.
    pub(crate) fn adjacent_unchecked(&self, u: &Perm, v: &Perm) -> bool {
        if u == v || !u.commutes_with(v) {
            return false;
        }
        if self.p() == 2 {
            return self.seed_of(&(u * v)).is_some();
        }
        let vi = v.inverse();
        if self.seed_of(&(u * &vi)).is_some() {
            return true;
        }
        self.seed_of(&(&u.inverse() * v)).is_some()
    }

    /// `u ~ v`: distinct, commuting, and `uv^-1` or `u^-1 v` in `𝒞`
    /// (`uv` in `𝒞` when `p = 2`).
    pub fn is_adjacent(&self, u: &Perm, v: &Perm) -> Result<bool, GraphError> {
        if !self.in_class_union(u)? || !self.in_class_union(v)? {
            return Err(GraphError::NotInUnion);
        }
        Ok(self.adjacent_unchecked(u, v))
    }
}
