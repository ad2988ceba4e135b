//! Structural probes for small groups: `Omega_1`, abelian invariants,
//! cyclic / generalized quaternion / elementary abelian tests, derived length.

use permcore::{is_prime, p_part, Perm, PermGroup};

use crate::error::ClassError;

/// Groups up to this order are enumerated for probes that need elements.
pub const ENUMERATION_BOUND: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureInfo {
    pub order: u128,
    pub is_abelian: bool,
    /// Invariant factors `d1 | d2 | ...`; `None` when nonabelian or too large.
    pub abelian_invariants: Option<Vec<u128>>,
    pub is_cyclic: bool,
    pub is_generalized_quaternion: bool,
    /// Elementary abelian for the prime passed to [`structure_probe`].
    pub is_elementary_abelian: bool,
    /// Length of the derived series; `None` when it stops at a nontrivial
    /// perfect group.
    pub derived_length: Option<usize>,
    pub is_perfect: bool,
    /// Set when the group was too large for the enumeration-based parts.
    pub order_only: bool,
}

fn is_p_power(mut n: u128, p: u128) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// `Omega_1(P)`: the subgroup generated by the elements of order `p`.
pub fn omega1(pgroup: &PermGroup, p: u64) -> Result<PermGroup, ClassError> {
    if !is_prime(p) {
        return Err(ClassError::NotPrime(p));
    }
    let order = pgroup.order();
    if !is_p_power(order, p as u128) {
        return Err(ClassError::NotPGroup { order, p });
    }
    if order > ENUMERATION_BOUND {
        return Err(ClassError::TooLarge {
            order,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut sub = pgroup.subgroup(Vec::new());
    pgroup.for_each_element(|x| {
        if !x.is_identity() && x.pow(p as i64).is_identity() && !sub.contains(x) {
            sub = sub.closure(std::slice::from_ref(x));
        }
    });
    Ok(sub)
}

/// Invariant factors of an abelian group from element counts: for each
/// prime `q` the number of solutions of `x^(q^i) = 1` determines the
/// `q`-primary partition.
fn abelian_invariants(elements: &[Perm], order: u128) -> Vec<u128> {
    let mut primes = Vec::new();
    let mut m = order;
    let mut q = 2u128;
    while q * q <= m {
        if m.is_multiple_of(q) {
            primes.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    let orders: Vec<u128> = elements.iter().map(Perm::order).collect();
    let mut factors: Vec<Vec<u128>> = Vec::new();
    for &q in &primes {
        let full = p_part(order, q);
        let mut parts_ge: Vec<u32> = Vec::new();
        let mut prev = 1u128;
        let mut qi = q;
        loop {
            // elements with x^(q^i) = 1 are those whose order divides q^i
            let count = orders.iter().filter(|&&o| qi % o == 0).count() as u128;
            let mut ratio = count / prev;
            let mut e = 0;
            while ratio > 1 {
                ratio /= q;
                e += 1;
            }
            if e == 0 {
                break;
            }
            parts_ge.push(e);
            prev = count;
            if count == full {
                break;
            }
            qi *= q;
        }
        // parts_ge[i] = number of cyclic factors of order >= q^(i+1)
        let mut sizes = Vec::new();
        let n_factors = parts_ge.first().copied().unwrap_or(0);
        for j in 0..n_factors {
            let exp = parts_ge.iter().filter(|&&c| c > j).count() as u32;
            sizes.push(q.pow(exp));
        }
        factors.push(sizes);
    }
    let width = factors.iter().map(Vec::len).max().unwrap_or(0);
    // d_width is the product of the largest q-parts, and so on downwards
    let mut inv = vec![1u128; width];
    for sizes in &factors {
        for (j, s) in sizes.iter().enumerate() {
            inv[width - 1 - j] *= s;
        }
    }
    inv
}

pub fn structure_probe(h: &PermGroup, p: u64) -> StructureInfo {
    let order = h.order();
    let is_abelian = h.is_abelian();
    let gens_order_p = h.gens().iter().all(|g| g.pow(p as i64).is_identity());
    let is_elementary_abelian = order > 1 && is_abelian && gens_order_p && is_p_power(order, p as u128);
    let (derived_length, is_perfect) = derived_series(h);
    let mut info = StructureInfo {
        order,
        is_abelian,
        abelian_invariants: None,
        is_cyclic: order == 1,
        is_generalized_quaternion: false,
        is_elementary_abelian,
        derived_length,
        is_perfect,
        order_only: false,
    };
    if order > ENUMERATION_BOUND {
        info.order_only = true;
        return info;
    }
    let elements = h.elements();
    let max_order = elements.iter().map(Perm::order).max().unwrap_or(1);
    info.is_cyclic = max_order == order;
    if is_abelian {
        info.abelian_invariants = Some(abelian_invariants(&elements, order));
    } else if order >= 8 && is_p_power(order, 2) {
        let involutions = elements.iter().filter(|e| e.order() == 2).count();
        info.is_generalized_quaternion = involutions == 1 && max_order == order / 2;
    }
    info
}

/// Derived length, or `None` with `is_perfect` when the series stalls.
fn derived_series(h: &PermGroup) -> (Option<usize>, bool) {
    let mut cur = h.clone();
    let mut len = 0;
    loop {
        if cur.order() == 1 {
            return (Some(len), h.order() == 1);
        }
        let next = cur.derived_subgroup();
        if next.order() == cur.order() {
            return (None, len == 0);
        }
        cur = next;
        len += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::builtin::{cyclic, direct_product, quaternion8, alternating};

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn klein_and_cyclic() {
        let v4 = PermGroup::new(4, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        let s = structure_probe(&v4, 2);
        assert!(s.is_elementary_abelian && !s.is_cyclic);
        assert_eq!(s.abelian_invariants, Some(vec![2, 2]));
        let c6 = cyclic(6);
        let s = structure_probe(&c6, 2);
        assert!(s.is_cyclic && !s.is_elementary_abelian);
        assert_eq!(s.abelian_invariants, Some(vec![6]));
        assert_eq!(s.derived_length, Some(1));
    }

    #[test]
    fn mixed_invariants() {
        let g = direct_product(&direct_product(&cyclic(4), &cyclic(2)), &cyclic(6));
        let s = structure_probe(&g, 2);
        assert_eq!(s.abelian_invariants, Some(vec![2, 2, 12]));
        let g = direct_product(&cyclic(9), &cyclic(3));
        assert_eq!(structure_probe(&g, 3).abelian_invariants, Some(vec![3, 9]));
    }

    #[test]
    fn quaternion_and_perfect() {
        let q = structure_probe(&quaternion8(), 2);
        assert!(q.is_generalized_quaternion && !q.is_abelian);
        assert_eq!(q.derived_length, Some(2));
        let a5 = structure_probe(&alternating(5), 5);
        assert!(a5.is_perfect && a5.derived_length.is_none());
        let d8 = PermGroup::new(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert!(!structure_probe(&d8, 2).is_generalized_quaternion);
    }

    #[test]
    fn omega_one() {
        assert_eq!(omega1(&cyclic(9), 3).unwrap().order(), 3);
        assert_eq!(omega1(&quaternion8(), 2).unwrap().order(), 2);
        let e9 = direct_product(&cyclic(3), &cyclic(3));
        assert_eq!(omega1(&e9, 3).unwrap().order(), 9);
        assert!(omega1(&cyclic(6), 3).is_err());
    }
}
