//! Dense polynomials over a prime field with coefficients as `u64` residues,
//! little-endian. Used for modulus search and the field's own reduction.

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += (x * y) as u128;
        }
    }
    let p128 = p as u128;
    let mut out: Vec<u64> = acc.into_iter().map(|c| (c % p128) as u64).collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a monic `f` (in place).
pub(crate) fn rem_monic(a: &mut Vec<u64>, f: &[u64], p: u64) {
    let df = f.len() - 1;
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top];
        if c != 0 {
            let shift = top - df;
            for (j, &fj) in f.iter().enumerate().take(df) {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(c, fj, p), p);
            }
        }
        a.pop();
    }
    trim(a);
}

pub(crate) fn mul_mod_poly(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = mul(a, b, p);
    rem_monic(&mut prod, f, p);
    prod
}

/// Remainder by an arbitrary nonzero divisor.
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul_mod(a[top], lead_inv, p);
        if c != 0 {
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate().take(db) {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(c, bj, p), p);
            }
        }
        a.pop();
    }
    trim(&mut a);
    a
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

/// Extended Euclid: inverse of `a` modulo the monic irreducible `f`.
pub(crate) fn inverse_mod_poly(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (f.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let qs = mul(&q, &s1, p);
        let s2 = sub(&s0, &qs, p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = inv_mod(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&c| mul_mod(c, inv, p)).collect();
    rem_monic(&mut out, f, p);
    Some(out)
}

pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut a = a.to_vec();
    trim(&mut a);
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a);
    }
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; a.len() - db];
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul_mod(a[top], lead_inv, p);
        let shift = top - db;
        q[shift] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate().take(db) {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(c, bj, p), p);
            }
        }
        a.pop();
    }
    trim(&mut a);
    trim(&mut q);
    (q, a)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            sub_mod(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect();
    trim(&mut out);
    out
}

/// `base^(p^k)` modulo monic `f` by repeated p-th powering.
fn frobenius_iter(base: &[u64], f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut x = base.to_vec();
    for _ in 0..k {
        x = pow_poly(&x, p, f, p);
    }
    x
}

fn pow_poly(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    rem_monic(&mut acc, f, p);
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_poly(&acc, &b, f, p);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod_poly(&b, &b, f, p);
        }
    }
    acc
}

/// Irreducibility of a monic polynomial over F_p. Walks `X^(p^i) mod f` and
/// rejects as soon as a factor of degree `i <= deg/2` shows up.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=m / 2 {
        xp = frobenius_iter(&xp, f, p, 1);
        let diff = sub(&xp, &x, p);
        if gcd(f, &diff, p).len() > 1 {
            return false;
        }
    }
    true
}
