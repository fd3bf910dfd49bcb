//! Table-driven arithmetic in small fields, built from scratch from the
//! modulus so the oracle shares no arithmetic with the main field code.
//!
//! Elements are integers `sum c_i p^i` over the coordinates `c_i`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;

/// Upper bound on the field size the oracle accepts.
pub const MAX_ORACLE_FIELD: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 1024;

pub struct SmallField {
    pub p: u32,
    pub m: usize,
    pub q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    neg: Vec<u32>,
}

type Cache = Mutex<HashMap<(u64, Vec<u64>), Arc<SmallField>>>;

pub fn small_field(p: u64, modulus: &[u64]) -> Arc<SmallField> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (p, modulus.to_vec());
    if let Some(f) = cache.lock().expect("oracle cache poisoned").get(&key) {
        return f.clone();
    }
    let built = Arc::new(SmallField::build(p as u32, modulus));
    cache
        .lock()
        .expect("oracle cache poisoned")
        .entry(key)
        .or_insert(built)
        .clone()
}

impl SmallField {
    fn build(p: u32, modulus: &[u64]) -> SmallField {
        let m = modulus.len() - 1;
        let q = p.pow(m as u32);
        let modulus: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        let digits = |mut x: u32| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        // schoolbook product of digit vectors, then reduction by the modulus
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u64; 2 * m];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
                }
            }
            for top in (m..2 * m).rev() {
                let c = prod[top];
                if c == 0 {
                    continue;
                }
                for j in 0..m {
                    let sub = c * modulus[j] as u64 % p as u64;
                    prod[top - m + j] = (prod[top - m + j] + p as u64 - sub) % p as u64;
                }
                prod[top] = 0;
            }
            let low: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
            undigits(&low)
        };
        let one = 1u32;
        let mut exp = Vec::new();
        for g in 1..q {
            exp.clear();
            let mut x = one;
            loop {
                exp.push(x);
                x = slow_mul(x, g);
                if x == one {
                    break;
                }
            }
            if exp.len() as u32 == q - 1 {
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let digit_add = |a: u32, b: u32| -> u32 {
            let d: Vec<u32> = digits(a)
                .iter()
                .zip(digits(b))
                .map(|(x, y)| (x + y) % p)
                .collect();
            undigits(&d)
        };
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a).iter().map(|&x| (p - x) % p).collect();
                undigits(&d)
            })
            .collect();
        let add_table = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b);
                }
            }
            t
        });
        SmallField {
            p,
            m,
            q,
            exp,
            log,
            add_table,
            neg,
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.add_table {
            return t[(a * self.q + b) as usize];
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n as u64;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    /// `a^(1/p)`, the inverse of the Frobenius.
    pub fn pth_root(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        // (g^l)^(1/p) = g^(l * p^(m-1))
        let mut e = self.log[a as usize] as u64;
        for _ in 1..self.m {
            e = e * self.p as u64 % n;
        }
        self.exp[e as usize]
    }
}

/// Polynomials over a [`SmallField`] as little-endian element vectors.
pub struct Ring<'a> {
    pub f: &'a SmallField,
}

pub type UPoly = Vec<u32>;

impl<'a> Ring<'a> {
    pub fn trim(&self, mut a: UPoly) -> UPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(&self, a: &UPoly) -> isize {
        a.len() as isize - 1
    }

    pub fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.f.add(out[i + j], self.f.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn divrem(&self, a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let inv = self.f.inv(b[db]);
        let mut q = vec![0u32; r.len() - db];
        for top in (db..r.len()).rev() {
            let c = self.f.mul(r[top], inv);
            if c == 0 {
                continue;
            }
            q[top - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = self.f.sub(r[k], self.f.mul(c, bj));
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &UPoly) -> UPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => {
                let inv = self.f.inv(lead);
                a.iter().map(|&c| self.f.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn mulmod(&self, a: &UPoly, b: &UPoly, m: &UPoly) -> UPoly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &UPoly, e: &BigUint, m: &UPoly) -> UPoly {
        let base = self.rem(a, m);
        let mut acc = self.rem(&vec![1], m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn derivative(&self, a: &UPoly) -> UPoly {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                // i * c as repeated addition of c in the prime field
                let k = (i as u32) % self.f.p;
                (0..k).fold(0, |acc, _| self.f.add(acc, c))
            })
            .collect();
        self.trim(v)
    }

    pub fn x(&self) -> UPoly {
        vec![0, 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for (p, modulus) in [
            (2u64, vec![1u64, 1, 1]),
            (3, vec![1, 0, 1]),
            (5, vec![0, 1]),
            (2, vec![1, 1, 0, 1]),
        ] {
            let f = small_field(p, &modulus);
            for a in 1..f.q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
                let r = f.pth_root(a);
                let mut pw = 1;
                for _ in 0..p {
                    pw = f.mul(pw, r);
                }
                assert_eq!(pw, a);
            }
        }
    }

    #[test]
    fn digit_addition_without_table() {
        let f = small_field(2, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(f.q, 2048);
        assert_eq!(f.add(0b101, 0b110), 0b011);
    }
}
