//! Dense polynomials over a small prime field and their factorization
//! (distinct-degree splitting followed by Cantor–Zassenhaus).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::IntPolynomial;

/// Coefficients mod `p`, low-to-high, trimmed.
pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!((3..(1 << 31)).contains(&p));
        PrimeField { p }
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits")
    }

    pub fn reduce(&self, f: &IntPolynomial) -> Fp {
        trim(f.coeffs().iter().map(|c| self.reduce_int(c)).collect())
    }

    #[cfg(test)]
    pub fn poly_add(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.p)
                .collect(),
        )
    }

    pub fn poly_sub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn poly_mul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &Fp, c: u64) -> Fp {
        trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    pub fn div_rem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let db = b.len() - 1;
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let t = self.mul(r[k + db], inv);
            q[k] = t;
            if t == 0 {
                continue;
            }
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = self.sub(r[k + i], self.mul(t, bc));
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.div_rem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod modulus`.
    pub fn pow_mod(&self, base: &Fp, e: &BigUint, modulus: &Fp) -> Fp {
        let mut acc: Fp = vec![1];
        let base = self.rem(base, modulus);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.poly_mul(&acc, &acc), modulus);
            if e.bit(i) {
                acc = self.rem(&self.poly_mul(&acc, &base), modulus);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, a: &Fp) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Complete factorization of a squarefree polynomial into monic
    /// irreducibles, sorted by (degree, coefficients). The RNG used for
    /// equal-degree splitting is seeded, so output is reproducible.
    pub fn factor_squarefree(&self, f: &Fp) -> Vec<Fp> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&self.monic(f)) {
            self.equal_degree(&g, d, &mut rng, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn distinct_degree(&self, f: &Fp) -> Vec<(Fp, usize)> {
        let x: Fp = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut out = Vec::new();
        let mut rest = f.clone();
        let mut h = x.clone();
        let mut i = 0;
        while rest.len() > 1 {
            i += 1;
            if rest.len() - 1 < 2 * i {
                out.push((rest.clone(), rest.len() - 1));
                break;
            }
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&self.poly_sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, i));
            }
        }
        out
    }

    fn equal_degree(&self, g: &Fp, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.clone());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: Fp = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.pow_mod(&a, &e, g), &vec![1]);
            let h = self.gcd(&b, g);
            if h.len() > 1 && h.len() < g.len() {
                let other = self.div_rem(g, &h).0;
                self.equal_degree(&h, d, rng, out);
                self.equal_degree(&self.monic(&other), d, rng, out);
                return;
            }
        }
    }
}

pub(crate) fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}
