//! Product replacement for pseudo-random group elements before a stabilizer
//! chain exists.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::perm::Perm;

pub struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    pub fn new(gens: &[Perm], degree: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut slots: Vec<Perm> = gens.to_vec();
        if slots.is_empty() {
            slots.push(Perm::identity(degree));
        }
        let base = slots.len();
        while slots.len() < 10.max(base) {
            let g = slots[slots.len() % base].clone();
            slots.push(g);
        }
        let mut pr = ProductReplacement {
            slots,
            acc: Perm::identity(degree),
        };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next(&mut self, rng: &mut ChaCha8Rng) -> Perm {
        let r = self.slots.len();
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r - 1);
        if j >= i {
            j += 1;
        }
        let left = rng.gen_bool(0.5);
        let inv = rng.gen_bool(0.5);
        let sj = if inv {
            self.slots[j].inverse()
        } else {
            self.slots[j].clone()
        };
        self.slots[i] = if left {
            &sj * &self.slots[i]
        } else {
            &self.slots[i] * &sj
        };
        self.acc = &self.acc * &self.slots[i];
        self.acc.clone()
    }
}
