//! Sylow subgroups.
//!
//! Works with a pair `Q <= K` where `Q` is a normal `p`-subgroup of `K` and
//! `|K|_p = |G|_p`. A random `p`-element `y` of `K` outside `Q`, of order `p`
//! modulo `Q`, gives `N = {g in K : y^g in yQ}`, the preimage of the
//! centralizer of `yQ` in `K/Q`. If `N = K` then `<Q, y>` is again normal in
//! `K`; if `N` is proper but keeps the full `p`-part it replaces `K`.
//! Otherwise another `y` is drawn.

use std::collections::HashSet;

use permcore::{is_prime, p_part, Perm, PermGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backtrack::{centralizer_unchecked, conjugator_unchecked};
use crate::error::ClassError;

/// Draws without progress before giving up.
const MAX_MISSES: usize = 400;

pub fn sylow_p(g: &PermGroup, p: u64) -> Result<PermGroup, ClassError> {
    if !is_prime(p) {
        return Err(ClassError::NotPrime(p));
    }
    let want = p_part(g.order(), p as u128);
    let mut q = g.subgroup(Vec::new());
    if want == 1 {
        return Ok(q);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed() ^ (p << 32));
    let mut k = g.clone();
    let mut misses = 0;
    while q.order() < want {
        let Some(y) = random_p_element(&k, &q, p, &mut rng) else {
            misses += 1;
            if misses > MAX_MISSES {
                return Err(ClassError::SylowNotFound {
                    p,
                    reached: q.order(),
                    wanted: want,
                });
            }
            continue;
        };
        if q.order() * p as u128 == want {
            // last step: <Q, y> is a Sylow subgroup exactly when its order is right
            let cand = q.closure(std::slice::from_ref(&y));
            if cand.order() == want {
                q = cand;
                break;
            }
        }
        let n = coset_centralizer(&k, &q, &y);
        if n.order() == k.order() {
            q = q.closure(std::slice::from_ref(&y));
            misses = 0;
        } else if p_part(n.order(), p as u128) == want {
            k = n;
            misses = 0;
        } else {
            misses += 1;
            if misses > MAX_MISSES {
                return Err(ClassError::SylowNotFound {
                    p,
                    reached: q.order(),
                    wanted: want,
                });
            }
        }
    }
    assert_eq!(q.order(), want, "Sylow order");
    let gens: Vec<Perm> = q.gens().to_vec();
    Ok(g.subgroup(gens).with_known_order(want))
}

/// A `p`-element of `k` outside `q` whose `p`-th power lies in `q`.
fn random_p_element(k: &PermGroup, q: &PermGroup, p: u64, rng: &mut ChaCha8Rng) -> Option<Perm> {
    let r = k.random_element(rng);
    let o = r.order();
    let pp = p_part(o, p as u128);
    let mut y = r.pow((o / pp) as i64);
    if q.contains(&y) {
        return None;
    }
    loop {
        let z = y.pow(p as i64);
        if q.contains(&z) {
            return Some(y);
        }
        y = z;
    }
}

fn conj_orbit(start: &[Perm], gens: &[Perm], into: &mut HashSet<Perm>) {
    let mut stack: Vec<Perm> = start.iter().filter(|s| into.insert((*s).clone())).cloned().collect();
    while let Some(a) = stack.pop() {
        for g in gens {
            let b = a.conj(g);
            if into.insert(b.clone()) {
                stack.push(b);
            }
        }
    }
}

/// `{g in k : y^g in yQ}` for a normal subgroup `q` of `k`. It acts on
/// `y^k ∩ yQ` transitively, so its order is `|C_k(y)|` times that orbit.
pub(crate) fn coset_centralizer(k: &PermGroup, q: &PermGroup, y: &Perm) -> PermGroup {
    let c = centralizer_unchecked(k, y);
    let mut gens: Vec<Perm> = c.gens().to_vec();
    let mut orbit = HashSet::new();
    conj_orbit(std::slice::from_ref(y), &gens, &mut orbit);
    let mut failed: HashSet<Perm> = HashSet::new();
    let ctype = y.cycle_type();
    let mut coset = Vec::new();
    q.for_each_element(|z| coset.push(y * z));
    for w in coset {
        if orbit.contains(&w) || failed.contains(&w) {
            continue;
        }
        let found = if w.cycle_type() == ctype {
            conjugator_unchecked(k, &w, y, c.gens())
        } else {
            None
        };
        match found {
            Some(h) => {
                // y^(h^-1) = w
                gens.push(h.inverse());
                orbit.clear();
                conj_orbit(std::slice::from_ref(y), &gens, &mut orbit);
                let old: Vec<Perm> = failed.drain().collect();
                conj_orbit(&old, &gens, &mut failed);
            }
            None => conj_orbit(std::slice::from_ref(&w), &gens, &mut failed),
        }
    }
    let order = c.order() * orbit.len() as u128;
    k.subgroup(gens).with_known_order(order)
}
