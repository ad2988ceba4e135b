//! Small finite fields GF(p^k) through log/antilog tables, enough to write
//! down PSL(2,q) and SL(2,q) acting on points.

#[derive(Clone, Debug)]
pub struct SmallField {
    p: usize,
    q: usize,
    /// exp[i] = w^i for a primitive element w, as a base-p digit vector index.
    exp: Vec<usize>,
    log: Vec<usize>,
}

/// Splits `q` as `p^k`, or `None` when `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl SmallField {
    pub fn new(q: usize) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        let k = k as usize;
        if k == 1 {
            let g = (1..p).find(|&g| mult_order_mod(g, p) == p - 1)?;
            return Some(Self::from_generator(p, q, |a| a * g % p));
        }
        // Elements are polynomials of degree < k over GF(p), encoded base p.
        // Try monic x^k + c(x) until x has multiplicative order q-1, which
        // makes the quotient ring a field with x primitive.
        for c in 0..q {
            let low = digits(c, p, k);
            if low[0] == 0 {
                continue;
            }
            let mul_x = |a: usize| -> usize {
                let mut d = digits(a, p, k);
                let top = d[k - 1];
                for i in (1..k).rev() {
                    d[i] = d[i - 1];
                }
                d[0] = 0;
                for i in 0..k {
                    d[i] = (d[i] + (p - low[i]) * top) % p;
                }
                undigits(&d, p)
            };
            let f = Self::from_generator(p, q, mul_x);
            if f.exp.len() == q - 1 {
                return Some(f);
            }
        }
        None
    }

    /// Tables from repeated multiplication by a candidate primitive element;
    /// `exp` comes out short when the candidate is not primitive.
    fn from_generator(p: usize, q: usize, times: impl Fn(usize) -> usize) -> Self {
        let mut exp = vec![1usize];
        let mut cur = times(1);
        while cur != 1 && cur != 0 && exp.len() < q {
            exp.push(cur);
            cur = times(cur);
        }
        if cur != 1 {
            exp.clear();
        }
        let mut log = vec![usize::MAX; q];
        for (i, &e) in exp.iter().enumerate() {
            log[e] = i;
        }
        SmallField { p, q, exp, log }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        let mut k = 0;
        let mut r = self.q;
        while r > 1 {
            r /= self.p;
            k += 1;
        }
        k
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let k = self.degree();
        let da = digits(a, self.p, k);
        let db = digits(b, self.p, k);
        let d: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&d, self.p)
    }

    pub fn neg(&self, a: usize) -> usize {
        let k = self.degree();
        let d: Vec<usize> = digits(a, self.p, k)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        undigits(&d, self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero");
        self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
    }

    /// The primitive element used for the tables.
    pub fn primitive(&self) -> usize {
        self.exp[1 % self.exp.len()]
    }

    /// `w^i`.
    pub fn power_of_primitive(&self, i: usize) -> usize {
        self.exp[i % (self.q - 1)]
    }
}

fn digits(mut a: usize, p: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for x in d.iter_mut() {
        *x = a % p;
        a /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn mult_order_mod(g: usize, p: usize) -> usize {
    let mut x = g % p;
    let mut k = 1;
    while x != 1 {
        x = x * g % p;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}
