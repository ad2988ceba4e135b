//! Permutations of `{0, .., n-1}`.
//!
//! Points act on the right: `compose(p, q)` first applies `p`, then `q`, so
//! `i^(pq) = (i^p)^q`. Conjugation follows the same convention:
//! `t^g = g^-1 * t * g`. Cycle notation in text is 1-based.

use std::fmt;
use std::ops::Mul;

use crate::error::PermError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(img: Vec<u32>) -> Result<Self, PermError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cyc in cycles {
            for &pt in cyc {
                if pt >= degree {
                    return Err(PermError::PointOutOfRange { point: pt + 1, degree });
                }
                if used[pt] {
                    return Err(PermError::RepeatedPoint(pt + 1));
                }
                used[pt] = true;
            }
            for (k, &pt) in cyc.iter().enumerate() {
                img[pt] = cyc[(k + 1) % cyc.len()] as u32;
            }
        }
        Ok(Perm { img })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `(1,2,3)(4,5)`.
    /// `()` and the empty string denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(PermError::Syntax(format!("expected '(' at {rest:?}")));
            };
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Syntax("unclosed cycle".into()))?;
            let inner = &body[..close];
            let mut cyc = Vec::new();
            for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| PermError::Syntax(format!("bad point {tok:?}")))?;
                if v == 0 || v > degree {
                    return Err(PermError::PointOutOfRange { point: v, degree });
                }
                cyc.push(v - 1);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `i -> q(p(i))`, with a degree check.
    pub fn compose(&self, q: &Perm) -> Result<Perm, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self * q)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { img: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut out = vec![0u32; self.img.len()];
        for (i, &t) in self.img.iter().enumerate() {
            out[g.img[i] as usize] = g.img[t as usize];
        }
        Perm { img: out }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.img
            .iter()
            .enumerate()
            .all(|(i, &x)| other.img[x as usize] == self.img[other.img[i] as usize])
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.image(s) == s {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.image(s);
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.image(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Length of the cycle through every point.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.degree();
        let mut len = vec![0u32; n];
        for s in 0..n {
            if len[s] != 0 {
                continue;
            }
            let mut l = 1;
            let mut x = self.image(s);
            while x != s {
                l += 1;
                x = self.image(x);
            }
            len[s] = l;
            let mut x = self.image(s);
            while x != s {
                len[x] = l;
                x = self.image(x);
            }
        }
        len
    }

    /// Cycle lengths (fixed points included as 1s), sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - t.iter().sum::<usize>()));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Least `n >= 1` with `self^n = 1`.
    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    pub fn support_len(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .count()
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.img
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;

    /// Left-to-right product; panics on degree mismatch.
    fn mul(self, q: &Perm) -> Perm {
        assert_eq!(self.degree(), q.degree(), "degree mismatch in product");
        Perm {
            img: self.img.iter().map(|&x| q.img[x as usize]).collect(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn left_to_right_convention() {
        let a = p(3, "(1 2)");
        let b = p(3, "(2 3)");
        let ab = a.compose(&b).unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(ab, p(3, "(1 3 2)"));
        for i in 0..3 {
            assert_eq!(ab.image(i), b.image(a.image(i)));
        }
    }

    #[test]
    fn conjugation_is_inverse_then_element_then_g() {
        let t = p(4, "(1 2 3)");
        let g = p(4, "(1 4)(2 3)");
        let direct = &(&g.inverse() * &t) * &g;
        assert_eq!(t.conj(&g), direct);
        // the cycles of t^g are the images of the cycles of t under g
        assert_eq!(t.conj(&g), p(4, "(4 3 2)"));
    }

    #[test]
    fn trivial_products() {
        let a = p(5, "(1 2)");
        assert!(a.compose(&a).unwrap().is_identity());
        assert_eq!(a.compose(&Perm::identity(5)).unwrap(), a);
        assert!(a.compose(&Perm::identity(4)).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(p(5, "(1 2)(3 4 5)").order(), 6);
        assert_eq!(p(5, "(1 2 3 4 5)").order(), 5);
    }

    #[test]
    fn parsing_variants() {
        assert_eq!(p(5, "(1,2,3)(4,5)"), p(5, " (1 2 3) (4 5) "));
        assert!(p(3, "()").is_identity());
        assert!(p(3, "").is_identity());
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
        assert!(Perm::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Perm::parse_cycles(3, "(1 2").is_err());
        assert!(Perm::parse_cycles(3, "1 2").is_err());
        assert!(Perm::parse_cycles(3, "(0 1)").is_err());
    }

    #[test]
    fn display_roundtrip() {
        let a = p(7, "(3 5 7)(1 2)");
        assert_eq!(a.to_string(), "(1 2)(3 5 7)");
        assert_eq!(p(7, &a.to_string()), a);
    }

    #[test]
    fn pow_and_cycle_type() {
        let a = p(6, "(1 2 3 4)(5 6)");
        assert_eq!(a.pow(4), Perm::identity(6));
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(2), p(6, "(1 3)(2 4)"));
        assert_eq!(a.cycle_type(), vec![4, 2]);
        assert_eq!(p(6, "(1 2)").cycle_type(), vec![2, 1, 1, 1, 1]);
    }
}
