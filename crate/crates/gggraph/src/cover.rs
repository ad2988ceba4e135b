//! Passing between `G` and `G/Z` for a central subgroup `Z`, checked by
//! enumeration at small scale.

use std::collections::{HashMap, HashSet};

use classops::classes_of_order_p;
use permcore::{Perm, PermGroup};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::component::neighbor_orbit_reps;
use crate::conj_orbit;
use crate::error::GraphError;
use crate::union::ClassUnion;

/// Groups up to this order are enumerated to build `G/Z`.
pub const QUOTIENT_BOUND: u128 = 200_000;

/// Adjacency pairs sampled per class in [`quotient_transfer`].
const SAMPLED_PAIRS: usize = 200;

/// `G/Z` as a permutation group on the cosets of `Z`.
#[derive(Clone, Debug)]
pub struct CentralQuotient {
    pub quotient: PermGroup,
    reps: Vec<Perm>,
    coset_of: HashMap<Perm, u32>,
}

impl CentralQuotient {
    pub fn new(g: &PermGroup, z: &PermGroup) -> Result<Self, GraphError> {
        if !z.is_subgroup_of(g) {
            return Err(GraphError::BadSubgroup("Z is not a subgroup of G".into()));
        }
        if !z.gens().iter().all(|a| g.gens().iter().all(|b| a.commutes_with(b))) {
            return Err(GraphError::NotCentral);
        }
        if g.order() > QUOTIENT_BOUND {
            return Err(GraphError::TooLarge {
                what: "group",
                size: g.order(),
                bound: QUOTIENT_BOUND,
            });
        }
        let zs = z.elements();
        let mut coset_of: HashMap<Perm, u32> = HashMap::with_capacity(g.order() as usize);
        let mut reps: Vec<Perm> = Vec::new();
        g.for_each_element(|x| {
            if coset_of.contains_key(x) {
                return;
            }
            let i = reps.len() as u32;
            reps.push(x.clone());
            for c in &zs {
                coset_of.insert(c * x, i);
            }
        });
        let mut q = CentralQuotient {
            quotient: PermGroup::trivial(reps.len()),
            reps,
            coset_of,
        };
        let gens: Vec<Perm> = g.gens().iter().map(|s| q.image_unchecked(s)).collect();
        let qg = PermGroup::new(q.reps.len(), gens)?
            .with_seed(g.seed())
            .with_known_order(g.order() / z.order());
        q.quotient = qg;
        Ok(q)
    }

    /// The permutation `Zx -> Zxg` of the cosets.
    fn image_unchecked(&self, g: &Perm) -> Perm {
        let img: Vec<u32> = self.reps.iter().map(|r| self.coset_of[&(r * g)]).collect();
        Perm::from_images(img).expect("right multiplication permutes cosets")
    }

    pub fn image(&self, g: &Perm) -> Result<Perm, GraphError> {
        if !self.coset_of.contains_key(g) {
            return Err(GraphError::Perm(permcore::PermError::NotInGroup));
        }
        Ok(self.image_unchecked(g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferCertificate {
    pub classes_checked: usize,
    pub pairs_checked: usize,
    pub agreements: usize,
}

impl TransferCertificate {
    pub fn holds(&self) -> bool {
        self.pairs_checked == self.agreements
    }
}

/// Checks that `g -> Zg` matches the order-`p` classes of `G` and `G/Z`
/// size for size and preserves adjacency on sampled pairs.
pub fn quotient_transfer(
    g: &PermGroup,
    z: &PermGroup,
    p: u64,
) -> Result<TransferCertificate, GraphError> {
    if z.order().is_multiple_of(p as u128) {
        return Err(GraphError::BadSubgroup(format!("{p} divides |Z|")));
    }
    let q = CentralQuotient::new(g, z)?;
    let up = classes_of_order_p(g, p)?;
    let down = classes_of_order_p(&q.quotient, p)?;
    let mut cert = TransferCertificate {
        classes_checked: 0,
        pairs_checked: 0,
        agreements: 0,
    };
    if up.len() != down.len() {
        return Ok(TransferCertificate {
            pairs_checked: 1,
            ..cert
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed());
    let elts = g.elements();
    let mut used = HashSet::new();
    for i in 0..up.len() {
        let t = &up.classes[i].rep;
        let Some(j) = down.identify(&q.image(t)?) else {
            cert.pairs_checked += 1;
            continue;
        };
        cert.classes_checked += 1;
        cert.pairs_checked += 1;
        if used.insert(j) && up.classes[i].class_size == down.classes[j].class_size {
            cert.agreements += 1;
        }
        let cu = ClassUnion::single(up.clone(), i)?;
        let cd = ClassUnion::single(down.clone(), j)?;
        let mut partners: Vec<Perm> = neighbor_orbit_reps(&cu, 0)?
            .reps
            .into_iter()
            .map(|n| n.rep)
            .collect();
        for _ in 0..SAMPLED_PAIRS {
            let x = elts.choose(&mut rng).expect("nonempty group");
            partners.push(t.conj(x));
        }
        for v in partners {
            let x = elts.choose(&mut rng).expect("nonempty group");
            let (u, v) = (t.conj(x), v.conj(x));
            let a = cu.adjacent_unchecked(&u, &v);
            let b = cd.adjacent_unchecked(&q.image(&u)?, &q.image(&v)?);
            cert.pairs_checked += 1;
            if a == b {
                cert.agreements += 1;
            }
        }
    }
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LexOutcome {
    Holds,
    Fails,
    /// The preimage of the class of `Zt` is not the single class `t^G`.
    HypothesisFailed,
}

/// Vertex bound for the pairwise comparison in [`lex_product_check`].
pub const LEX_BOUND: usize = 5_000;

/// For a central 2-subgroup `Z` and `t` whose image `Zt` is an involution,
/// checks that the graph on `𝒞`, the preimage of the class of `Zt`, is the
/// lexicographic product of the graph on `(Zt)^{G/Z}` with the edgeless
/// graph on `|Z|` vertices: `x ~ y` exactly when `Zx ~ Zy`. Requires `𝒞`
/// to be the single class `t^G` of involutions.
pub fn lex_product_check(g: &PermGroup, z: &PermGroup, t: &Perm) -> Result<LexOutcome, GraphError> {
    g.check_member(t)?;
    if z.order().count_ones() != 1 {
        return Err(GraphError::BadSubgroup("Z is not a 2-group".into()));
    }
    let q = CentralQuotient::new(g, z)?;
    let tq = q.image(t)?;
    if tq.order() != 2 {
        return Err(GraphError::BadSubgroup("Zt is not an involution".into()));
    }
    if t.order() != 2 {
        return Ok(LexOutcome::HypothesisFailed);
    }
    let class = conj_orbit(t, g.gens());
    if class.len() > LEX_BOUND {
        return Err(GraphError::TooLarge {
            what: "class",
            size: class.len() as u128,
            bound: LEX_BOUND as u128,
        });
    }
    let members: HashSet<&Perm> = class.iter().collect();
    // the preimage is t^G Z
    for c in z.elements() {
        if !members.contains(&(t * &c)) {
            return Ok(LexOutcome::HypothesisFailed);
        }
    }
    let class_q: HashSet<Perm> = conj_orbit(&tq, q.quotient.gens()).into_iter().collect();
    let images: Vec<Perm> = class.iter().map(|x| q.image_unchecked(x)).collect();
    for i in 0..class.len() {
        for j in (i + 1)..class.len() {
            let up = members.contains(&(&class[i] * &class[j]));
            let down = images[i] != images[j] && class_q.contains(&(&images[i] * &images[j]));
            if up != down {
                return Ok(LexOutcome::Fails);
            }
        }
    }
    Ok(LexOutcome::Holds)
}
