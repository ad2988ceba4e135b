//! Exact arithmetic in cyclotomic fields.
//!
//! A value is `sum c_k z^k` with `z = exp(2 pi i / n)`, stored in the
//! Zumbroich basis of `Q(z_n)` for the smallest possible `n`, so equal values
//! have equal representations.
//!
//! With `n = prod p^e` an exponent `k` has, for each `p`, the digit
//! `b = (k mod p^e) div p^(e-1)`. The basis exponents are those with `b = 0`
//! at `p = 2` and `b != 0` at odd `p`. Other terms are rewritten with
//! `sum_j z^(k + j n/p) = 0`, which only moves the digit `b` at `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::TableError;

/// Largest conductor accepted from text.
pub const MAX_CONDUCTOR: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

/// Prime factorization as `(p, e)` pairs.
type Factors = std::rc::Rc<[(u64, u32)]>;

thread_local! {
    static FACTORS: std::cell::RefCell<std::collections::HashMap<u64, Factors>> = Default::default();
}

fn factor(n: u64) -> Factors {
    FACTORS.with(|f| {
        f.borrow_mut()
            .entry(n)
            .or_insert_with(|| factor_uncached(n).into())
            .clone()
    })
}

fn factor_uncached(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inv(a: u64, m: u64) -> u64 {
    let g = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i128) as u64
}

fn primitive_root(p: u64) -> u64 {
    let fs: Vec<u64> = factor(p - 1).iter().map(|(q, _)| *q).collect();
    (2..p)
        .find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let m128 = m as u128;
    let mut b128 = b as u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b128 % m128;
        }
        b128 = b128 * b128 % m128;
        e >>= 1;
    }
    b = r as u64;
    b
}

fn add_term(map: &mut BTreeMap<u64, BigRational>, k: u64, c: BigRational) {
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Rewrites `terms` in the Zumbroich basis of `Q(z_n)`.
fn reduce(n: u64, mut terms: BTreeMap<u64, BigRational>) -> BTreeMap<u64, BigRational> {
    for &(p, e) in factor(n).iter() {
        let pe1 = p.pow(e - 1);
        let pe = pe1 * p;
        let step = n / p;
        if !terms.keys().any(|&k| {
            let b = (k % pe) / pe1;
            if p == 2 { b == 1 } else { b == 0 }
        }) {
            continue;
        }
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            let b = (k % pe) / pe1;
            if p == 2 {
                if b == 1 {
                    add_term(&mut out, (k + step) % n, -c);
                } else {
                    add_term(&mut out, k, c);
                }
            } else if b == 0 {
                for j in 1..p {
                    add_term(&mut out, (k + j * step) % n, -c.clone());
                }
            } else {
                add_term(&mut out, k, c);
            }
        }
        terms = out;
    }
    terms
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            n: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { n: 1, coeffs }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    /// `z_n^k`.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        Self::from_terms(n, [(k, BigRational::one())])
    }

    /// `sum c z_n^k` over the given terms, exponents taken mod `n`.
    pub fn from_terms<I: IntoIterator<Item = (u64, BigRational)>>(n: u64, terms: I) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            add_term(&mut map, k % n, c);
        }
        Self::normalized(n, map)
    }

    fn normalized(n: u64, terms: BTreeMap<u64, BigRational>) -> Self {
        let mut n = n;
        let mut terms = reduce(n, terms);
        while n > 1 {
            match descend(n, &terms) {
                Some((m, t)) => {
                    n = m;
                    terms = t;
                }
                None => break,
            }
        }
        if terms.is_empty() {
            n = 1;
        }
        Cyclotomic { n, coeffs: terms }
    }

    /// The conductor: the least `n` with the value in `Q(z_n)`.
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `(k, c)` pairs of the basis representation.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.n != 1 {
            return None;
        }
        Some(self.coeffs.get(&0).cloned().unwrap_or_else(BigRational::zero))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Terms lifted to `Q(z_l)` for a multiple `l` of the conductor.
    fn lifted(&self, l: u64) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        let f = l / self.n;
        self.coeffs.iter().map(move |(k, c)| (k * f, c))
    }

    /// The Galois automorphism `z -> z^a` for `a` coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.n as i64;
        assert_eq!(a.gcd(&n), 1, "exponent must be coprime to the conductor");
        let a = a.rem_euclid(n) as u128;
        let terms = self
            .coeffs
            .iter()
            .map(|(k, c)| (((*k as u128 * a) % n as u128) as u64, c.clone()));
        Self::from_terms(self.n, terms)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Parses a literal such as `3`, `-1/2`, `z^1+z^4` or `-2*z^3+1`, where
    /// `z` is a primitive `n`-th root of unity.
    pub fn parse(text: &str, n: u64) -> Result<Self, TableError> {
        let bad = |m: &str| TableError::Literal(format!("{m} in {text:?}"));
        if n == 0 || n > u64::MAX / 2 {
            return Err(bad("invalid conductor"));
        }
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty literal"));
        }
        let mut raw: Vec<(u64, BigRational)> = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &s[start..i];
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ if start == 0 => (1, term),
                _ => return Err(bad("missing operator")),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef, exp) = if let Some(pos) = body.find('z') {
                let coef = match &body[..pos] {
                    "" => BigRational::one(),
                    c => parse_rational(c.strip_suffix('*').ok_or_else(|| bad("expected '*'"))?)
                        .ok_or_else(|| bad("bad coefficient"))?,
                };
                let exp = match &body[pos + 1..] {
                    "" => 1,
                    e => e
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<u64>().ok())
                        .ok_or_else(|| bad("bad exponent"))?,
                };
                (coef, exp % n)
            } else {
                (parse_rational(body).ok_or_else(|| bad("bad number"))?, 0)
            };
            let coef = if sign < 0 { -coef } else { coef };
            raw.push((exp, coef));
        }
        // the value lies in Q(z_m) for m = n / gcd(n, exponents)
        let g = raw.iter().fold(n, |g, (k, _)| g.gcd(k));
        let m = n / g;
        if m > MAX_CONDUCTOR {
            return Err(bad("conductor too large"));
        }
        Ok(Self::from_terms(m, raw.into_iter().map(|(k, c)| (k / g, c))))
    }

    /// The literal form over `z = z_l` for a multiple `l` of the conductor.
    pub fn to_literal(&self, l: u64) -> String {
        assert_eq!(l % self.n, 0, "not a multiple of the conductor");
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.lifted(l) {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&format!("{a}*"));
                }
                out.push_str(&format!("z^{k}"));
            }
        }
        out
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) || !den.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// If the value lies in `Q(z_{n/p})` for some prime `p`, its basis form there.
fn descend(n: u64, terms: &BTreeMap<u64, BigRational>) -> Option<(u64, BTreeMap<u64, BigRational>)> {
    for &(p, e) in factor(n).iter() {
        let m = n / p;
        let pe = p.pow(e);
        let r = n / pe;
        if p == 2 && e == 1 {
            // z_{2m} = -z_m^{(m+1)/2}
            let mut out = BTreeMap::new();
            for (k, c) in terms {
                if k % 2 == 0 {
                    add_term(&mut out, k / 2, c.clone());
                } else {
                    add_term(&mut out, ((k + m) / 2) % m, -c.clone());
                }
            }
            return Some((m, reduce(m, out)));
        }
        // a generator of Gal(Q(z_n)/Q(z_m))
        let g = if e == 1 { primitive_root(p) } else { 1 + pe / p };
        let a = if r == 1 {
            g % pe
        } else {
            let t = ((g + pe - 1) % pe) as u128 * mod_inv(r % pe, pe) as u128 % pe as u128;
            1 + r * t as u64
        };
        let moved: BTreeMap<u64, BigRational> = {
            let mut map = BTreeMap::new();
            for (k, c) in terms {
                add_term(&mut map, ((*k as u128 * a as u128) % n as u128) as u64, c.clone());
            }
            reduce(n, map)
        };
        if &moved != terms {
            continue;
        }
        let mut out = BTreeMap::new();
        if e == 1 {
            // z_n^k = z_p^{k1} z_m^{k2}; the trace of z_p^{k1} is p-1 or -1
            let minv = mod_inv(m % p, p);
            let pinv = mod_inv(p % m, m);
            let pm1 = BigRational::from_integer(BigInt::from(p - 1));
            for (k, c) in terms {
                let k1 = (k % p) * minv % p;
                let k2 = ((*k as u128 % m as u128) * pinv as u128 % m as u128) as u64;
                let tr = if k1 == 0 { c.clone() } else { -c.clone() / &pm1 };
                add_term(&mut out, k2, tr);
            }
        } else {
            // the trace kills z^k unless p | k, and multiplies those by p
            for (k, c) in terms {
                if k % p == 0 {
                    add_term(&mut out, k / p, c.clone());
                }
            }
        }
        return Some((m, reduce(m, out)));
    }
    None
}

fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let l = lcm(self.n, rhs.n);
        let mut map = BTreeMap::new();
        for (k, c) in self.lifted(l).chain(rhs.lifted(l)) {
            add_term(&mut map, k, c.clone());
        }
        Cyclotomic::normalized(l, map)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.to_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.to_rational() {
            return self.scale(&r);
        }
        let l = lcm(self.n, rhs.n);
        let mut map = BTreeMap::new();
        for (a, x) in self.lifted(l) {
            for (b, y) in rhs.lifted(l) {
                add_term(&mut map, (a + b) % l, x * y);
            }
        }
        Cyclotomic::normalized(l, map)
    }
}

/// Sums many values in one field before normalizing.
#[derive(Clone, Debug)]
pub struct Accumulator {
    l: u64,
    map: BTreeMap<u64, BigRational>,
}

impl Accumulator {
    /// For values whose conductors divide `l`.
    pub fn new(l: u64) -> Self {
        Accumulator {
            l,
            map: BTreeMap::new(),
        }
    }

    /// Adds `r * x * y`.
    pub fn add_product(&mut self, x: &Cyclotomic, y: &Cyclotomic, r: &BigRational) {
        assert!(self.l.is_multiple_of(x.n) && self.l.is_multiple_of(y.n), "conductor outside the field");
        for (a, u) in x.lifted(self.l) {
            for (b, v) in y.lifted(self.l) {
                add_term(&mut self.map, (a + b) % self.l, u * v * r);
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::normalized(self.l, self.map)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return f.write_str(&self.to_literal(1));
        }
        write!(f, "{} (z = E({}))", self.to_literal(self.n), self.n)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
